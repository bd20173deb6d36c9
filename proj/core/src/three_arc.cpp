#include "sgk/three_arc.hpp"

#include <algorithm>

#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/transitivity.hpp"

namespace sgk {

std::vector<ThreeArcOrbit> three_arc_orbits(const Graph& graph, const GroupTable& group) {
  if (!verify_action(graph, group, 1).symmetric()) {
    fail(ErrorCode::NotSymmetric, "the group does not act symmetrically on the graph");
  }
  auto walks = enumerate_s_arcs(graph, 3);
  auto index_of = [&](const std::vector<Vertex>& w) {
    return static_cast<std::size_t>(std::lower_bound(walks.begin(), walks.end(), w) - walks.begin());
  };
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> orbit_of(walks.size(), kUnset);
  std::vector<ThreeArcOrbit> result;
  for (std::size_t start = 0; start < walks.size(); ++start) {
    if (orbit_of[start] != kUnset) continue;
    auto index = static_cast<std::uint32_t>(result.size());
    std::vector<std::size_t> queue{start};
    orbit_of[start] = index;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& g : group.generators()) {
        std::vector<Vertex> w(4);
        for (int j = 0; j < 4; ++j) w[j] = g(walks[queue[i]][j]);
        std::size_t k = index_of(w);
        if (orbit_of[k] == kUnset) {
          orbit_of[k] = index;
          queue.push_back(k);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    ThreeArcOrbit orbit;
    for (std::size_t k : queue) orbit.arcs.push_back(walks[k]);
    result.push_back(std::move(orbit));
  }
  for (auto& orbit : result) {
    std::vector<Vertex> rev(orbit.arcs.front().rbegin(), orbit.arcs.front().rend());
    orbit.paired_with = orbit_of[index_of(rev)];
  }
  for (std::uint32_t i = 0; i < result.size(); ++i) result[i].self_paired = result[i].paired_with == i;
  return result;
}

GroupTable arc_group(const Graph& graph, const GroupTable& group) {
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<Point> images;
    for (const auto& [u, v] : graph.arcs()) {
      auto j = graph.arc_index(g(u), g(v));
      if (!j) fail(ErrorCode::NotAutomorphism, g.to_cycles() + " is not an automorphism of the graph");
      images.push_back(static_cast<Point>(*j));
    }
    gens.emplace_back(std::move(images));
  }
  return generate_group(graph.arc_count(), std::move(gens));
}

ThreeArcGraph three_arc_graph(const Graph& graph, const GroupTable& group, const ThreeArcOrbit& orbit) {
  if (!orbit.self_paired) fail(ErrorCode::NotSelfPaired, "the 3-arc orbit is not self-paired");
  ThreeArcGraph result;
  std::vector<std::string> labels;
  for (const auto& [u, v] : graph.arcs()) labels.push_back("(" + graph.label(u) + "," + graph.label(v) + ")");
  std::vector<Arc> arcs;
  for (const auto& w : orbit.arcs) {
    // (τ,σ,σ',τ') joins (σ,τ) to (σ',τ').
    auto from = graph.arc_index(w[1], w[0]);
    auto to = graph.arc_index(w[2], w[3]);
    if (!from || !to || w.size() != 4) fail(ErrorCode::InvalidArgument, "orbit contains a non-3-arc");
    arcs.emplace_back(static_cast<Vertex>(*from), static_cast<Vertex>(*to));
  }
  result.graph = Graph::from_arcs(std::move(labels), arcs);
  for (const auto& [x, y] : result.graph.arcs()) {
    const auto& a = graph.arcs()[x];
    const auto& b = graph.arcs()[y];
    if (a.first == b.second && a.second == b.first) result.reverse_adjacent = true;
  }
  result.group = arc_group(graph, group);
  std::vector<std::uint32_t> tail(graph.arc_count());
  for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = graph.arcs()[i].first;
  result.partition = BlockSystem::from_labels(tail);
  result.certificate = certify_quotient(result.graph, result.group, result.partition, true);
  result.quotient_isomorphism = are_isomorphic(result.certificate.quotient, graph);
  return result;
}

}  // namespace sgk
