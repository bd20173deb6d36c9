#include "sgk/transitivity.hpp"

#include <algorithm>

#include "sgk/error.hpp"

namespace sgk {

namespace {

// Orbit of item 0 under generators acting via `image(gen, item)`.
template <typename Image>
std::size_t orbit_size_of_first(std::size_t count, const std::vector<ElementId>& gens, Image image) {
  if (count == 0) return 0;
  std::vector<bool> seen(count, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementId g : gens) {
      std::size_t j = image(g, queue[i]);
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return queue.size();
}

bool locally_transitive_at(const Graph& graph, const GroupTable& group, const PointAction& action, Vertex v) {
  auto nb = graph.neighbors(v);
  if (nb.empty()) return true;
  std::vector<bool> hit(graph.vertex_count(), false);
  std::size_t count = 0;
  for (ElementId g = 0; g < group.order() && count < nb.size(); ++g) {
    if (action.apply(g, v) != v) continue;
    Vertex w = action.apply(g, nb[0]);
    if (!hit[w]) {
      hit[w] = true;
      ++count;
    }
  }
  return count == nb.size();
}

int s_arc_level(const Graph& graph, const GroupTable& group, const PointAction& action, int s_limit) {
  const std::size_t n = graph.vertex_count();
  auto k = graph.regular_valency();
  if (!k || *k == 0) return 0;
  int level = 0;
  for (int s = 1; s <= s_limit; ++s) {
    // A transitive action on N s-arcs needs N <= |G|.
    double expected = static_cast<double>(n) * static_cast<double>(*k);
    for (int i = 1; i < s; ++i) expected *= static_cast<double>(*k - 1);
    if (expected == 0 || expected > static_cast<double>(group.order())) break;
    auto walks = enumerate_s_arcs(graph, s);
    auto image = [&](ElementId g, std::size_t index) {
      std::vector<Vertex> w(walks[index].size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = action.apply(g, walks[index][i]);
      return static_cast<std::size_t>(std::lower_bound(walks.begin(), walks.end(), w) - walks.begin());
    };
    if (orbit_size_of_first(walks.size(), group.generator_ids(), image) != walks.size()) break;
    level = s;
  }
  return level;
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_s_arcs(const Graph& graph, int s) {
  if (s < 0) fail(ErrorCode::InvalidArgument, "s must be non-negative");
  std::vector<std::vector<Vertex>> result;
  std::vector<Vertex> walk;
  auto extend = [&](auto&& self) -> void {
    if (walk.size() == static_cast<std::size_t>(s) + 1) {
      result.push_back(walk);
      return;
    }
    Vertex last = walk.back();
    for (Vertex w : graph.neighbors(last)) {
      if (walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    walk.assign(1, v);
    extend(extend);
  }
  return result;
}

std::vector<std::vector<std::size_t>> arc_orbits(const Graph& graph, const GroupTable& group,
                                                 const PointAction& action) {
  const auto& arcs = graph.arcs();
  constexpr std::size_t kUnset = ~std::size_t{0};
  std::vector<std::size_t> orbit_of(arcs.size(), kUnset);
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (orbit_of[a] != kUnset) continue;
    std::vector<std::size_t> orbit{a};
    orbit_of[a] = result.size();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      const auto& [u, v] = arcs[orbit[i]];
      for (ElementId g : group.generator_ids()) {
        auto b = graph.arc_index(action.apply(g, u), action.apply(g, v));
        if (!b) fail(ErrorCode::NotAutomorphism, "group element does not preserve the arc set");
        if (orbit_of[*b] == kUnset) {
          orbit_of[*b] = result.size();
          orbit.push_back(*b);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

TransitivityReport verify_action(const Graph& graph, const GroupTable& group, const PointAction& action,
                                 int s_limit) {
  const std::size_t n = graph.vertex_count();
  if (action.domain_size != n) {
    fail(ErrorCode::DegreeMismatch, "action on " + std::to_string(action.domain_size) + " points, graph has " +
                                        std::to_string(n) + " vertices");
  }
  TransitivityReport report;
  report.acts_as_automorphisms = true;
  for (ElementId g : group.generator_ids()) {
    for (const auto& [u, v] : graph.arcs()) {
      if (!graph.has_arc(action.apply(g, u), action.apply(g, v))) {
        report.acts_as_automorphisms = false;
        break;
      }
    }
  }
  for (ElementId g = 0; g < group.order(); ++g) {
    bool fixes = true;
    for (Vertex v = 0; fixes && v < n; ++v) fixes = action.apply(g, v) == v;
    if (fixes) ++report.action_kernel_size;
  }
  if (!report.acts_as_automorphisms) return report;

  report.vertex_transitive = n > 0 && action_orbit(group, action, 0).size() == n;
  report.arc_orbit_count = arc_orbits(graph, group, action).size();
  report.arc_transitive = report.arc_orbit_count == 1;
  if (report.vertex_transitive) {
    report.locally_transitive = locally_transitive_at(graph, group, action, 0);
  } else {
    report.locally_transitive = true;
    for (Vertex v = 0; report.locally_transitive && v < n; ++v) {
      report.locally_transitive = locally_transitive_at(graph, group, action, v);
    }
  }
  if (report.vertex_transitive && report.locally_transitive) {
    report.s_arc_transitive_up_to = s_arc_level(graph, group, action, s_limit);
  }
  return report;
}

TransitivityReport verify_action(const Graph& graph, const GroupTable& group, int s_limit) {
  if (group.degree() != graph.vertex_count()) {
    fail(ErrorCode::DegreeMismatch, "group degree " + std::to_string(group.degree()) + " differs from " +
                                        std::to_string(graph.vertex_count()) + " vertices");
  }
  return verify_action(graph, group, natural_action(group), s_limit);
}

}  // namespace sgk
