#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/subgroups.hpp"
#include "sgk/transitivity.hpp"

namespace sgk {

// Vertices are group elements (labelled in cycle notation), x ~ y iff
// x y^-1 lies in `connectors`. Throws LoopConnector, NotInverseClosed.
Graph cayley_graph(const GroupTable& group, std::span<const ElementId> connectors);

// Right regular action of `group` on its own element ids.
PointAction right_regular_action(const GroupTable& group);

// Sab(G,H,D): vertices are right cosets (labelled by least representative),
// Hx ~ Hy iff x y^-1 in D. Throws SpecInvariantViolated unless D misses H, is
// inverse-closed and is a union of double cosets of H.
Graph sabidussi_graph(const GroupTable& group, const Subgroup& sub, std::span<const ElementId> connectors);

struct SymmetricCosetGraph {
  Graph graph;
  CosetSpace cosets;
  ElementId involution = 0;
  std::vector<ElementId> connector;      // HaH
  std::size_t valency_formula = 0;       // |H| / |a^-1 H a ∩ H|
  std::size_t arc_stabilizer_order = 0;  // measured on the arc (H, Ha)
  bool arc_stabilizer_matches = false;   // equals a^-1 H a ∩ H as a set
  std::size_t kernel_order = 0;          // core of H
  bool connected = false;
  bool generates = false;                // <H, a> = G
  TransitivityReport report;
};

// Sab(G,H,HaH) with its verification data. Throws NotInvolution,
// InsideSubgroup.
SymmetricCosetGraph symmetric_coset_graph(const GroupTable& group, const Subgroup& sub, ElementId a);

struct Orbital {
  std::vector<Arc> pairs;  // sorted
  bool diagonal = false;
  bool self_paired = false;
  std::uint32_t paired_with = 0;  // index of the reversed orbital
};

// Orbits on ordered pairs, ordered by least pair (so the diagonal is first).
// Throws NotTransitive.
std::vector<Orbital> orbitals(const GroupTable& group, const PointAction& action);
std::vector<Orbital> orbitals(const GroupTable& group, std::size_t domain_size);

// Throws DiagonalOrbital, NotSelfPaired, InvalidArgument (not an orbital).
Graph orbital_graph(const GroupTable& group, const PointAction& action, std::span<const Arc> orbital);
Graph orbital_graph(const GroupTable& group, std::size_t domain_size, std::span<const Arc> orbital);

struct LorimerDictionary {
  DoubleCosetDecomposition classes;
  std::vector<Orbital> orbitals;          // of the coset action
  std::vector<std::uint32_t> orbital_of;  // class index -> orbital index
  bool bijective = false;
  bool flags_agree = false;               // involution flag == self-paired flag
};

// Pairs each double coset HxH with the orbital containing (H, Hx).
LorimerDictionary orbital_double_coset_map(const GroupTable& group, const Subgroup& sub);

struct CosetRecognition {
  Subgroup stabilizer;  // of vertex 0
  ElementId involution = 0;
  SymmetricCosetGraph rebuilt;
  std::optional<std::vector<Vertex>> isomorphism;  // graph vertex -> coset index
};

// Throws NotSymmetric, NoFlippingInvolution.
CosetRecognition recognize_as_coset_graph(const Graph& graph, const GroupTable& group);

}  // namespace sgk
