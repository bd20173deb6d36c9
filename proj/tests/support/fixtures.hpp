#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/permutation.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(SGK_FIXTURES_DIR) + "/" + name; }

inline sgk::GroupTable group(const std::string& name) {
  return sgk::enumerate_group(sgk::read_group_spec_file(path(name)));
}

inline sgk::Graph graph(const std::string& name) { return sgk::read_graph_file(path(name)); }

inline sgk::GroupTable make_group(std::size_t degree, const std::string& gens) {
  return sgk::generate_group(degree, sgk::parse_permutation_list(gens, degree));
}

inline oracle::Perm raw(const sgk::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline std::vector<oracle::Perm> raw_generators(const sgk::GroupTable& g) {
  std::vector<oracle::Perm> out;
  for (const auto& p : g.generators()) out.push_back(raw(p));
  return out;
}

inline oracle::Edges edges(const sgk::Graph& g) {
  oracle::Edges e;
  for (const auto& [u, v] : g.arcs()) e.insert({static_cast<int>(u), static_cast<int>(v)});
  return e;
}

inline sgk::Graph from_oracle(int n, const oracle::Edges& e) {
  std::vector<sgk::Arc> arcs;
  for (auto [u, v] : e) arcs.emplace_back(u, v);
  return sgk::Graph::from_arcs(sgk::Graph(n).labels(), arcs);
}

inline sgk::Graph cube() {
  std::vector<sgk::Arc> edges;
  for (sgk::Vertex v = 0; v < 8; ++v) {
    for (int bit = 0; bit < 3; ++bit) {
      sgk::Vertex w = v ^ (1u << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return sgk::Graph::from_edges(8, edges);
}

inline bool isomorphic(const sgk::Graph& a, const sgk::Graph& b) {
  return oracle::isomorphic(static_cast<int>(a.vertex_count()), edges(a), static_cast<int>(b.vertex_count()),
                            edges(b));
}

}  // namespace fixtures
