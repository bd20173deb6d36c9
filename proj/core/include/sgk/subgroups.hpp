#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgk/group.hpp"

namespace sgk {

// A subgroup of an enumerated parent group, stored as sorted parent element
// ids. The parent is passed explicitly to every operation; a subgroup built
// for one parent is rejected (NotASubgroup) by operations on another order.
class Subgroup {
 public:
  Subgroup() = default;

  // Validates closure; throws NotASubgroup.
  static Subgroup from_ids(const GroupTable& parent, std::vector<ElementId> ids);
  static Subgroup generated_by(const GroupTable& parent, std::span<const Permutation> generators);
  static Subgroup generated_by_ids(const GroupTable& parent, std::span<const ElementId> generators);
  // Every element of `table` must belong to `parent`.
  static Subgroup from_table(const GroupTable& parent, const GroupTable& table);
  static Subgroup trivial(const GroupTable& parent);
  static Subgroup whole(const GroupTable& parent);

  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t parent_order() const noexcept { return member_.size(); }
  const std::vector<ElementId>& ids() const noexcept { return ids_; }
  bool contains(ElementId id) const { return id < member_.size() && member_[id]; }
  bool is_subset_of(const Subgroup& other) const;

  GroupTable as_table(const GroupTable& parent) const;
  std::vector<Permutation> elements(const GroupTable& parent) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<ElementId> ids_;
  std::vector<bool> member_;
};

// Throws NotASubgroup unless `sub` was built over a parent of this order.
void require_subgroup_of(const GroupTable& group, const Subgroup& sub);

// Subgroup generated inside `parent` by the given element ids.
std::vector<ElementId> close_subgroup(const GroupTable& parent, std::span<const ElementId> generators);

// x^{-1} H x as a subgroup.
Subgroup conjugate(const GroupTable& group, const Subgroup& sub, ElementId x);
Subgroup intersect(const GroupTable& group, const Subgroup& a, const Subgroup& b);
bool is_normal(const GroupTable& group, const Subgroup& sub);

// Right cosets Hx with the action (Hx)^g = Hxg.
struct CosetSpace {
  std::vector<std::vector<ElementId>> cosets;  // each sorted; coset 0 is H
  std::vector<ElementId> representatives;      // least element of each coset
  std::vector<std::uint32_t> coset_of;         // element id -> coset index

  std::size_t size() const noexcept { return cosets.size(); }
  std::uint32_t act(const GroupTable& group, std::uint32_t coset, ElementId g) const;
  Permutation permutation_of(const GroupTable& group, ElementId g) const;
  PointAction action(const GroupTable& group) const;
  // Permutation group induced on the cosets (order |G| / |core|).
  GroupTable induced_group(const GroupTable& group) const;
  // Elements acting trivially on every coset.
  std::vector<ElementId> kernel(const GroupTable& group) const;
};

CosetSpace right_cosets(const GroupTable& group, const Subgroup& sub);

// Intersection of all conjugates of `sub`.
Subgroup core(const GroupTable& group, const Subgroup& sub);

struct DoubleCosetDecomposition {
  std::vector<std::vector<ElementId>> classes;  // each sorted; class 0 is H
  std::vector<ElementId> representatives;       // least element of each class
  std::vector<bool> contains_involution;        // some a in the class has a^2 = 1
  std::vector<std::uint32_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

DoubleCosetDecomposition double_cosets(const GroupTable& group, const Subgroup& sub);
// The single double coset H x H, sorted.
std::vector<ElementId> double_coset(const GroupTable& group, const Subgroup& sub, ElementId x);

// A partition of {0..n-1} into disjoint blocks. Blocks are sorted and ordered
// by their least point.
class BlockSystem {
 public:
  BlockSystem() = default;
  // Throws InvalidPartition unless the blocks are nonempty, disjoint and cover.
  BlockSystem(std::size_t domain_size, std::vector<std::vector<Point>> blocks);
  static BlockSystem from_labels(std::span<const std::uint32_t> labels);
  static BlockSystem singletons(std::size_t domain_size);
  static BlockSystem whole(std::size_t domain_size);

  std::size_t domain_size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<Point>>& blocks() const noexcept { return blocks_; }
  const std::vector<Point>& block(std::size_t i) const { return blocks_[i]; }
  std::uint32_t block_of(Point p) const { return block_of_[p]; }
  bool is_trivial() const noexcept { return blocks_.size() <= 1 || blocks_.size() == block_of_.size(); }

  // Whether every generator maps blocks onto blocks.
  bool is_invariant_under(const GroupTable& group) const;
  // Induced permutation on block indices; throws NotInvariant.
  Permutation block_permutation(const Permutation& g) const;

  friend bool operator==(const BlockSystem& a, const BlockSystem& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::uint32_t> block_of_;
};

// Finest G-invariant partition in which all `seeds` share a block
// (union-find closure over generator images).
BlockSystem minimal_block_system(const GroupTable& group, std::span<const Point> seeds);
// The block of that system containing the seeds. Throws NotTransitive and
// InvalidArgument for a degenerate seed pair.
std::vector<Point> minimal_block(const GroupTable& group, Point first, Point second);

inline constexpr std::size_t kDefaultBlockDomainLimit = 1024;

// Every G-invariant partition, including both trivial ones, ordered by block
// size then contents.
std::vector<BlockSystem> all_block_systems(const GroupTable& group,
                                           std::size_t domain_limit = kDefaultBlockDomainLimit);

Subgroup setwise_stabilizer(const GroupTable& group, std::span<const Point> subset);

struct LatticeEntry {
  Subgroup subgroup;
  std::vector<Point> block;  // base_point^subgroup
};

inline constexpr std::size_t kDefaultClosureCap = 10'000;

// All subgroups between the stabilizer of `base_point` and the group, each
// paired with its block. Ordered by subgroup order, then ids.
// Throws SubgroupEnumerationCapExceeded when more than `closure_cap`
// candidate closures would be needed.
std::vector<LatticeEntry> subgroup_block_lattice(const GroupTable& group, Point base_point,
                                                 std::size_t closure_cap = kDefaultClosureCap);

// All subgroups K with lower <= K <= upper, by iterated one-element extension.
std::vector<Subgroup> intermediate_subgroups(const GroupTable& group, const Subgroup& lower,
                                             const Subgroup& upper,
                                             std::size_t closure_cap = kDefaultClosureCap);

// True when H1 <= H2 iff block1 is a subset of block2 for every pair.
bool lattice_is_order_isomorphic(const std::vector<LatticeEntry>& lattice);

// Block file: one block per line, 1-based points.
BlockSystem read_block_system(std::istream& in, std::size_t domain_size);
BlockSystem read_block_system_file(const std::string& path, std::size_t domain_size);
void write_block_system(std::ostream& out, const BlockSystem& system);

}  // namespace sgk
