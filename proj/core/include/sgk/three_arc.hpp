#pragma once

#include <cstdint>
#include <vector>

#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/quotients.hpp"
#include "sgk/subgroups.hpp"

namespace sgk {

struct ThreeArcOrbit {
  std::vector<std::vector<Vertex>> arcs;  // sorted 3-arcs
  bool self_paired = false;
  std::uint32_t paired_with = 0;
};

// Orbits on 3-arcs, ordered by least 3-arc. Throws NotSymmetric.
std::vector<ThreeArcOrbit> three_arc_orbits(const Graph& graph, const GroupTable& group);

struct ThreeArcGraph {
  Graph graph;                // vertex i is arc i of the base graph
  GroupTable group;           // induced action on the arcs
  BlockSystem partition;      // B(σ): arcs with tail σ, block σ
  bool reverse_adjacent = false;  // some arc adjacent to its own reverse
  QuotientCertificate certificate;
  std::optional<std::vector<Vertex>> quotient_isomorphism;  // block -> base vertex
};

// (σ,τ) ~ (σ',τ') iff (τ,σ,σ',τ') lies in the orbit. Throws NotSelfPaired.
ThreeArcGraph three_arc_graph(const Graph& graph, const GroupTable& group, const ThreeArcOrbit& orbit);

// The group induced on the arcs by the natural action on the vertices.
GroupTable arc_group(const Graph& graph, const GroupTable& group);

}  // namespace sgk
