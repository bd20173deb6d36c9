#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgk/coset_graphs.hpp"
#include "sgk/designs.hpp"
#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/subgroups.hpp"
#include "sgk/transitivity.hpp"

namespace sgk {

// Blocks as vertices, labelled "B{i}:{least member label}", adjacency from
// any edge between blocks. No group checks.
Graph quotient_graph(const Graph& graph, const BlockSystem& partition);
// As above, after checking the partition is G-invariant (NotInvariant) and
// the action on the graph is symmetric (NotSymmetric).
Graph quotient_graph(const Graph& graph, const GroupTable& group, const BlockSystem& partition);

// Action of `group` on the blocks; may be unfaithful.
PointAction block_action(const GroupTable& group, const BlockSystem& partition);

// Subgraph induced on (Γ(C) ∩ B) ∪ (Γ(B) ∩ C). Throws NotQuotientArc.
Graph induced_bipartite(const Graph& graph, const BlockSystem& partition, std::uint32_t b, std::uint32_t c);

enum class CoverClass { Cover, MulticoverProper, Neither };
std::string to_string(CoverClass cls);

// Throws TrivialQuotient when no two blocks are adjacent.
CoverClass cover_class(const Graph& graph, const BlockSystem& partition);

struct CrossSectionDesign {
  IncidenceStructure design;  // points = B, blocks = quotient neighbours of B
  DesignParams params;
  bool flag_transitive = false;  // under the setwise stabilizer of B
};

// Throws TrivialQuotient, plus validate_design errors.
CrossSectionDesign cross_section_design(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                                        std::uint32_t b);

struct QuotientCertificate {
  Graph quotient;
  BlockSystem partition;
  bool nontrivial = false;
  bool blocks_independent = false;
  std::optional<CoverClass> cover;
  Graph bipartite_pattern;            // Γ[B,C] for the least quotient arc
  bool bipartite_all_isomorphic = false;
  std::optional<CrossSectionDesign> design;  // at block 0
  TransitivityReport quotient_report;
  bool homomorphism_law = false;      // π(α^g) = π(α)^g on generators
};

// Runs every quotient check. Throws TrivialQuotient unless allow_trivial.
QuotientCertificate certify_quotient(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                                     bool allow_trivial = false);

struct CosetQuotient {
  SymmetricCosetGraph fine;    // Sab(G,H,HaH)
  SymmetricCosetGraph coarse;  // Sab(G,K,KaK)
  BlockSystem partition;       // cosets of H grouped by cosets of K
  bool block_in_lattice = false;  // the block of H-cosets inside K is a lattice block
  Graph quotient;
  std::optional<std::vector<Vertex>> isomorphism;  // quotient vertex -> coarse vertex
};

// Throws NotNested unless H < K < G strictly, DegenerateQuotient when a ∈ K,
// plus symmetric_coset_graph errors.
CosetQuotient quotient_as_coset_graph(const GroupTable& group, const Subgroup& h, ElementId a, const Subgroup& k);

}  // namespace sgk
