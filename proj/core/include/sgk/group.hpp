#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sgk/permutation.hpp"

namespace sgk {

using ElementId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 200'000;

// Enumeration cap: SGK_ELEMENT_CAP if set to a positive integer, else
// kDefaultElementCap.
std::size_t element_cap();

// Input form of a permutation group: a degree and a list of generators.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// A fully enumerated finite permutation group.
//
// Elements are deduplicated and ordered lexicographically by image
// sequence, so the identity always has id 0. Element ids index into
// elements() and are the currency of every subgroup-level operation.
class GroupTable {
 public:
  GroupTable() = default;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(ElementId id) const { return elements_[id]; }
  static constexpr ElementId identity_id() noexcept { return 0; }

  std::optional<ElementId> find(const Permutation& p) const;
  // Throws NotInGroup when p is not an element.
  ElementId id_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  // Id of element(a) * element(b).
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  // Ids of the generators, in generator order.
  const std::vector<ElementId>& generator_ids() const noexcept { return generator_ids_; }

  // Builds a table from an already closed, sorted element list.
  static GroupTable from_closed_elements(std::size_t degree, std::vector<Permutation> generators,
                                         std::vector<Permutation> sorted_elements);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::vector<ElementId> inverses_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
};

// Breadth-first closure of spec.generators under right multiplication.
// Throws CapExceeded when more than `cap` elements appear.
GroupTable enumerate_group(const GroupSpec& spec, std::size_t cap = element_cap());

// Convenience: enumerate the group generated by `generators` on `degree` points.
GroupTable generate_group(std::size_t degree, std::vector<Permutation> generators,
                          std::size_t cap = element_cap());

// The group consisting of exactly `elements` (must be closed); generators are
// chosen greedily from the sorted element list.
GroupTable group_from_elements(std::size_t degree, std::vector<Permutation> elements);

// Greedy generating set of the subgroup formed by `elements`.
std::vector<Permutation> greedy_generators(std::size_t degree, std::vector<Permutation> elements);

std::vector<Point> orbit(const GroupTable& group, Point point);
// Orbits of the natural action, each sorted, ordered by least point.
std::vector<std::vector<Point>> orbits(const GroupTable& group);
GroupTable stabilizer(const GroupTable& group, Point point);
std::vector<ElementId> stabilizer_ids(const GroupTable& group, Point point);
bool is_transitive(const GroupTable& group, std::size_t domain_size);

// A permutation action of an enumerated group on some finite set:
// images[element][point].
struct PointAction {
  std::size_t domain_size = 0;
  std::vector<std::vector<Point>> images;

  Point apply(ElementId g, Point p) const { return images[g][p]; }
};

PointAction natural_action(const GroupTable& group);

// Orbit of `point` under `action`, using only the group's generators.
std::vector<Point> action_orbit(const GroupTable& group, const PointAction& action, Point point);
bool action_is_transitive(const GroupTable& group, const PointAction& action);

// Finds eta with eta(w^g) = eta(w)^g for all g (identity automorphism of the
// group). Throws NotTransitive unless both actions are transitive.
std::optional<std::vector<Point>> permutation_equivalent(const GroupTable& group,
                                                         const PointAction& first,
                                                         const PointAction& second);

// Group file: "degree: <n>" then one permutation per line in cycle notation.
GroupSpec read_group_spec(std::istream& in);
GroupSpec read_group_spec_file(const std::string& path);
void write_group_spec(std::ostream& out, const GroupSpec& spec);

}  // namespace sgk
