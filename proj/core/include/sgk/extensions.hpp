#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sgk/coset_graphs.hpp"
#include "sgk/designs.hpp"
#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/subgroups.hpp"
#include "sgk/transitivity.hpp"

namespace sgk {

// For B = block 0, a bijection ρ: B -> Γ_B(B) (as positions: rho[i] is the
// quotient vertex for the i-th point of B) commuting with the setwise
// stabilizer of B, if any. Throws TrivialQuotient.
std::optional<std::vector<Vertex>> check_condition_pe(const Graph& graph, const GroupTable& group,
                                                      const BlockSystem& partition);

// Extends ρ to every vertex: α^g ↦ (π(α)^g, ρ(α)^g) as quotient arcs.
// Throws InvalidArgument when the extension is not well defined.
std::vector<Arc> pe_labelling(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                              const std::vector<Vertex>& rho);

// True iff every arc (v_BC, v_DE) has (C,B,D,E) a 3-arc of the quotient.
// Throws ValencyTooSmall when the quotient valency is below 2.
bool check_three_arc_necessity(const Graph& graph, const Graph& quotient, const std::vector<Arc>& labelling);
bool check_three_arc_necessity(const Graph& graph, const GroupTable& group, const BlockSystem& partition,
                               const std::vector<Vertex>& rho);

struct SubgraphGraph {
  Graph graph;
  std::vector<DirectedSubgraph> members;  // vertex i is members[i]; members[0] is Υ
  GroupTable group;                       // induced action on members
  Subgroup stabilizer;                    // G_Υ
  TransitivityReport report;
};

// Vertices are the images Υ^g; Υ^g ~ (Υ^a)^g. Throws NotInvolution,
// NotInGroup, InvalidArgument when a fixes Υ.
SubgraphGraph subgraph_graph(const Graph& graph, const GroupTable& group, const DirectedSubgraph& sub,
                             const Permutation& a);

struct ArcPartitionExtension {
  SymmetricCosetGraph base;      // Γ = Sab(G,H,HaH)
  SymmetricCosetGraph expected;  // Sab(G,K,KaK)
  std::vector<std::vector<std::size_t>> parts;  // arc ids of Γ in each part
  Graph extension;               // graph on the parts
  std::size_t r = 0;             // [H:K]
  BlockSystem tail_partition;    // parts grouped by common tail vertex
  Graph quotient;                // extension / tail_partition
  std::optional<std::vector<Vertex>> isomorphism;           // extension -> expected
  std::optional<std::vector<Vertex>> quotient_isomorphism;  // quotient -> base
  bool counts_hold = false;      // |V|·r, valency / r, equal edge counts
  TransitivityReport report;     // G on the parts
};

// Throws DegenerateInvolution (a ∈ K), NoStrictChain unless
// a^-1 H a ∩ H < K < H strictly, plus symmetric_coset_graph errors.
ArcPartitionExtension arc_partition_extension(const GroupTable& group, const Subgroup& h, const Subgroup& k,
                                              ElementId a);

// A group with a normal subgroup N acting regularly on the fibers and
// complement H, the setwise stabilizer of the fiber of point 0.
struct SplitExtension {
  GroupTable group;
  Subgroup normal;
  Subgroup complement;
  BlockSystem fibers;
};

// Throws NotSemidirect unless N is normal, regular on the fibers,
// N ∩ H = 1 and |N||H| = |G|.
SplitExtension split_extension(GroupTable group, const Subgroup& normal, const BlockSystem& fibers);

// Some complement of N (order |G|/|N|, trivial intersection), by growing
// subgroups that meet N trivially one element at a time. Throws
// SubgroupEnumerationCapExceeded past `closure_cap` closures.
std::optional<Subgroup> find_complement(const GroupTable& group, const Subgroup& normal,
                                        std::size_t closure_cap = kDefaultClosureCap);

using Flag = std::pair<Point, BlockId>;

// Quotient vertices are identified with N: vertex m is the fiber of B^m,
// ordered by N's element ids. η maps the elements s with B ~ B^s to blocks.
struct FlagOrbitalData {
  Graph quotient;
  IncidenceStructure design;  // points: the base fiber; blocks: its quotient neighbours
  std::vector<std::optional<BlockId>> eta;  // indexed by N-element position
  std::vector<std::pair<Flag, Flag>> orbital;
};

// Reads the quotient, fiber design, η and flag orbital off a graph on which
// the split extension acts.
FlagOrbitalData extract_flag_orbital(const Graph& graph, const SplitExtension& ext);

struct Reconstruction {
  Graph graph;                 // vertex m·|P| + x is (x, m)
  std::vector<Point> to_omega; // (x, m) ↦ x^m
};

// Arcs ((x,v),(y,w)) for quotient arcs (v,w) with (x, η(wv^-1)), (y, η(vw^-1))
// flags whose pair lies in the orbital. Throws NotSelfPairedOrbital.
Reconstruction flag_orbital_reconstruction(const SplitExtension& ext, const FlagOrbitalData& data);

}  // namespace sgk
