#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "sgk/graph.hpp"
#include "sgk/group.hpp"
#include "sgk/quotients.hpp"
#include "sgk/subgroups.hpp"

namespace sgk {

// N ⋊_ρ G with (n1,g1)(n2,g2) = (n1^ρ(g2) n2, g1 g2), where ρ is a right
// action of G on N by automorphisms: n^ρ(gh) = (n^ρ(g))^ρ(h).
class SemidirectGroup {
 public:
  using Element = std::pair<ElementId, ElementId>;  // (n, g)

  // generator_images[i][j] is the image of N's j-th generator under ρ of G's
  // i-th generator. Throws TwistNotHomomorphism when these do not define
  // automorphisms of N, or do not extend to a homomorphism on G.
  static SemidirectGroup build(GroupTable n, GroupTable g,
                               const std::vector<std::vector<Permutation>>& generator_images);
  // Trivial twist: the direct product.
  static SemidirectGroup direct(GroupTable n, GroupTable g);

  const GroupTable& n_part() const noexcept { return n_; }
  const GroupTable& g_part() const noexcept { return g_; }
  std::size_t order() const noexcept { return n_.order() * g_.order(); }
  // n^ρ(g).
  ElementId twist(ElementId g, ElementId n) const { return twist_[g][n]; }
  bool twist_is_trivial() const;

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  static constexpr Element identity() noexcept { return {0, 0}; }

  // Permutation of N × Ω (index ω·|N| + m, Ω the domain of G) for
  // (m, ω) ↦ (η^-1 m^ρ(g), ω^g). Faithful; a right action.
  Permutation act_on_pairs(Element e) const;
  Element decode(const Permutation& p) const;
  // The permutation group generated by the images of (n_i, 1) and (1, g_j).
  GroupTable as_permutation_group() const;
  // Ids in as_permutation_group() of the elements (n, 1).
  std::vector<ElementId> normal_part_ids(const GroupTable& perm_group) const;

 private:
  GroupTable n_;
  GroupTable g_;
  std::vector<std::vector<ElementId>> twist_;  // twist_[g][n]
};

// Twist file: "twist <g-generator index> <n-generator index> <cycles>", both
// indices 1-based. Unlisted pairs map the N generator to itself.
std::vector<std::vector<Permutation>> read_twist(std::istream& in, const GroupTable& n, const GroupTable& g);
std::vector<std::vector<Permutation>> read_twist_file(const std::string& path, const GroupTable& n,
                                                      const GroupTable& g);

// φ on the arcs of a host graph; values[i] is the N element id on arc i.
struct NChain {
  std::vector<ElementId> values;
};

struct NChainReport {
  std::vector<std::size_t> orbit_representatives;  // least arc id per arc orbit
  std::vector<std::uint32_t> orbit_of_arc;
};

// Checks φ(reverse) = φ^-1 and φ(arc^g) = φ(arc)^ρ(g) for every arc and
// generator of G (acting on the vertices). Throws InverseSymmetryViolated,
// NotCompatible.
NChainReport validate_nchain(const Graph& graph, const SemidirectGroup& sd, const NChain& chain);

// Fills a chain from values on some arcs by the compatibility rule.
// Throws NotCompatible on conflicts, IncompleteChain when an arc orbit
// received no value.
NChain propagate_nchain(const Graph& graph, const SemidirectGroup& sd,
                        const std::vector<std::pair<Arc, ElementId>>& seeds);

// Constant chain.
NChain constant_chain(const Graph& graph, ElementId value);

// Chain file: "arc <u> <v> <cycles>" with 1-based vertices; cycles in N.
std::vector<std::pair<Arc, ElementId>> read_chain(std::istream& in, const Graph& graph, const GroupTable& n);
std::vector<std::pair<Arc, ElementId>> read_chain_file(const std::string& path, const Graph& graph,
                                                       const GroupTable& n);

struct BiggsCover {
  Graph cover;            // vertex v·|N| + n is (n, v)
  GroupTable group;       // N ⋊ G acting on the cover's vertices
  BlockSystem fibers;     // B(v) = N × {v}
  QuotientCertificate certificate;
  std::optional<std::vector<Vertex>> quotient_isomorphism;  // quotient vertex -> base vertex
  bool fibers_are_matchings = false;
  bool normal_part_fiber_transitive = false;
};

// Throws InvalidChain when validate_nchain fails.
BiggsCover biggs_cover(const Graph& graph, const SemidirectGroup& sd, const NChain& chain);

}  // namespace sgk
