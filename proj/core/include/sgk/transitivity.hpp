#pragma once

#include <cstddef>
#include <vector>

#include "sgk/graph.hpp"
#include "sgk/group.hpp"

namespace sgk {

inline constexpr int kDefaultSArcLimit = 5;

struct TransitivityReport {
  bool acts_as_automorphisms = false;
  bool vertex_transitive = false;
  bool arc_transitive = false;     // false for a graph without arcs
  bool locally_transitive = false; // vacuous at isolated vertices
  int s_arc_transitive_up_to = 0;
  std::size_t action_kernel_size = 0;
  std::size_t arc_orbit_count = 0;

  // Vertex-transitive and locally transitive by automorphisms.
  bool symmetric() const noexcept { return acts_as_automorphisms && vertex_transitive && locally_transitive; }
};

// Checks an action of `group` on the vertices given by `action`, which may be
// unfaithful. Throws DegreeMismatch when the action domain differs from the
// vertex count.
TransitivityReport verify_action(const Graph& graph, const GroupTable& group, const PointAction& action,
                                 int s_limit = kDefaultSArcLimit);
// The natural action of `group` on the vertices.
TransitivityReport verify_action(const Graph& graph, const GroupTable& group, int s_limit = kDefaultSArcLimit);

// All s-arcs (v0..vs) with v(i-1) != v(i+1), lexicographically ordered.
std::vector<std::vector<Vertex>> enumerate_s_arcs(const Graph& graph, int s);

// Orbits of the action on arcs, as arc-id lists (ids index graph.arcs()).
std::vector<std::vector<std::size_t>> arc_orbits(const Graph& graph, const GroupTable& group,
                                                 const PointAction& action);

}  // namespace sgk
