#include "sgk/subgroups.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "sgk/error.hpp"

namespace sgk {

// ---------------------------------------------------------------- Subgroup

std::vector<ElementId> close_subgroup(const GroupTable& parent, std::span<const ElementId> generators) {
  std::vector<bool> member(parent.order(), false);
  std::vector<ElementId> elements{GroupTable::identity_id()};
  member[GroupTable::identity_id()] = true;
  std::vector<ElementId> gens;
  for (ElementId s : generators) {
    if (s >= parent.order()) fail(ErrorCode::NotInGroup, "element id out of range");
    if (member[s]) continue;
    gens.push_back(s);
    // Re-close: every element times every generator.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (ElementId g : gens) {
        ElementId y = parent.multiply(elements[i], g);
        if (!member[y]) {
          member[y] = true;
          elements.push_back(y);
        }
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

Subgroup Subgroup::from_ids(const GroupTable& parent, std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty() || ids.front() != GroupTable::identity_id()) {
    fail(ErrorCode::NotASubgroup, "subset does not contain the identity");
  }
  if (ids.back() >= parent.order()) fail(ErrorCode::NotASubgroup, "element id outside the parent group");
  auto closure = close_subgroup(parent, ids);
  if (closure != ids) fail(ErrorCode::NotASubgroup, "subset is not closed under multiplication");
  Subgroup sub;
  sub.member_.assign(parent.order(), false);
  for (ElementId id : ids) sub.member_[id] = true;
  sub.ids_ = std::move(ids);
  return sub;
}

Subgroup Subgroup::generated_by_ids(const GroupTable& parent, std::span<const ElementId> generators) {
  Subgroup sub;
  sub.ids_ = close_subgroup(parent, generators);
  sub.member_.assign(parent.order(), false);
  for (ElementId id : sub.ids_) sub.member_[id] = true;
  return sub;
}

Subgroup Subgroup::generated_by(const GroupTable& parent, std::span<const Permutation> generators) {
  std::vector<ElementId> ids;
  for (const auto& g : generators) {
    auto id = parent.find(g);
    if (!id) fail(ErrorCode::NotASubgroup, "generator " + g.to_cycles() + " is not in the parent group");
    ids.push_back(*id);
  }
  return generated_by_ids(parent, ids);
}

Subgroup Subgroup::from_table(const GroupTable& parent, const GroupTable& table) {
  std::vector<ElementId> ids;
  for (const auto& e : table.elements()) {
    auto id = parent.find(e);
    if (!id) fail(ErrorCode::NotASubgroup, e.to_cycles() + " is not in the parent group");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  Subgroup sub;
  sub.member_.assign(parent.order(), false);
  for (ElementId id : ids) sub.member_[id] = true;
  sub.ids_ = std::move(ids);
  return sub;
}

Subgroup Subgroup::trivial(const GroupTable& parent) {
  return generated_by_ids(parent, std::vector<ElementId>{});
}

Subgroup Subgroup::whole(const GroupTable& parent) {
  std::vector<ElementId> all(parent.order());
  std::iota(all.begin(), all.end(), ElementId{0});
  Subgroup sub;
  sub.member_.assign(parent.order(), true);
  sub.ids_ = std::move(all);
  return sub;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  for (ElementId id : ids_) {
    if (!other.contains(id)) return false;
  }
  return true;
}

std::vector<Permutation> Subgroup::elements(const GroupTable& parent) const {
  std::vector<Permutation> result;
  result.reserve(ids_.size());
  for (ElementId id : ids_) result.push_back(parent.element(id));
  return result;
}

GroupTable Subgroup::as_table(const GroupTable& parent) const {
  return group_from_elements(parent.degree(), elements(parent));
}

void require_subgroup_of(const GroupTable& group, const Subgroup& sub) {
  if (sub.parent_order() != group.order() || sub.order() == 0) {
    fail(ErrorCode::NotASubgroup, "subgroup was not built over this group");
  }
}

Subgroup conjugate(const GroupTable& group, const Subgroup& sub, ElementId x) {
  require_subgroup_of(group, sub);
  ElementId xi = group.inverse(x);
  std::vector<ElementId> ids;
  ids.reserve(sub.order());
  for (ElementId h : sub.ids()) ids.push_back(group.multiply(group.multiply(xi, h), x));
  return Subgroup::from_ids(group, std::move(ids));
}

Subgroup intersect(const GroupTable& group, const Subgroup& a, const Subgroup& b) {
  require_subgroup_of(group, a);
  require_subgroup_of(group, b);
  std::vector<ElementId> ids;
  std::set_intersection(a.ids().begin(), a.ids().end(), b.ids().begin(), b.ids().end(),
                        std::back_inserter(ids));
  return Subgroup::from_ids(group, std::move(ids));
}

bool is_normal(const GroupTable& group, const Subgroup& sub) {
  require_subgroup_of(group, sub);
  for (ElementId g : group.generator_ids()) {
    ElementId gi = group.inverse(g);
    for (ElementId h : sub.ids()) {
      if (!sub.contains(group.multiply(group.multiply(gi, h), g))) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- cosets

std::uint32_t CosetSpace::act(const GroupTable& group, std::uint32_t coset, ElementId g) const {
  return coset_of[group.multiply(representatives[coset], g)];
}

Permutation CosetSpace::permutation_of(const GroupTable& group, ElementId g) const {
  std::vector<Point> images(size());
  for (std::uint32_t c = 0; c < size(); ++c) images[c] = act(group, c, g);
  return Permutation(std::move(images));
}

PointAction CosetSpace::action(const GroupTable& group) const {
  PointAction result;
  result.domain_size = size();
  result.images.reserve(group.order());
  for (ElementId g = 0; g < group.order(); ++g) {
    auto p = permutation_of(group, g);
    result.images.emplace_back(p.images().begin(), p.images().end());
  }
  return result;
}

GroupTable CosetSpace::induced_group(const GroupTable& group) const {
  std::vector<Permutation> gens;
  for (ElementId g : group.generator_ids()) gens.push_back(permutation_of(group, g));
  return generate_group(size(), std::move(gens));
}

std::vector<ElementId> CosetSpace::kernel(const GroupTable& group) const {
  std::vector<ElementId> result;
  for (ElementId g = 0; g < group.order(); ++g) {
    bool trivial = true;
    for (std::uint32_t c = 0; trivial && c < size(); ++c) trivial = act(group, c, g) == c;
    if (trivial) result.push_back(g);
  }
  return result;
}

CosetSpace right_cosets(const GroupTable& group, const Subgroup& sub) {
  require_subgroup_of(group, sub);
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  CosetSpace space;
  space.coset_of.assign(group.order(), kUnset);
  for (ElementId x = 0; x < group.order(); ++x) {
    if (space.coset_of[x] != kUnset) continue;
    auto index = static_cast<std::uint32_t>(space.cosets.size());
    std::vector<ElementId> coset;
    coset.reserve(sub.order());
    for (ElementId h : sub.ids()) {
      ElementId y = group.multiply(h, x);
      space.coset_of[y] = index;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    space.representatives.push_back(x);
    space.cosets.push_back(std::move(coset));
  }
  return space;
}

Subgroup core(const GroupTable& group, const Subgroup& sub) {
  auto space = right_cosets(group, sub);
  std::vector<bool> keep(group.order(), false);
  for (ElementId h : sub.ids()) keep[h] = true;
  for (ElementId rep : space.representatives) {
    auto conj = conjugate(group, sub, rep);
    for (ElementId g = 0; g < group.order(); ++g) keep[g] = keep[g] && conj.contains(g);
  }
  std::vector<ElementId> ids;
  for (ElementId g = 0; g < group.order(); ++g) {
    if (keep[g]) ids.push_back(g);
  }
  return Subgroup::from_ids(group, std::move(ids));
}

DoubleCosetDecomposition double_cosets(const GroupTable& group, const Subgroup& sub) {
  auto space = right_cosets(group, sub);
  // A small generating set of H drives the orbit computation on cosets.
  std::vector<ElementId> gens;
  {
    std::vector<bool> member(group.order(), false);
    member[GroupTable::identity_id()] = true;
    for (ElementId h : sub.ids()) {
      if (member[h]) continue;
      gens.push_back(h);
      for (ElementId y : close_subgroup(group, gens)) member[y] = true;
    }
  }

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> class_of_coset(space.size(), kUnset);
  DoubleCosetDecomposition result;
  result.class_of.assign(group.order(), kUnset);
  for (std::uint32_t c = 0; c < space.size(); ++c) {
    if (class_of_coset[c] != kUnset) continue;
    auto index = static_cast<std::uint32_t>(result.classes.size());
    std::vector<std::uint32_t> orbit{c};
    class_of_coset[c] = index;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementId h : gens) {
        std::uint32_t d = space.act(group, orbit[i], h);
        if (class_of_coset[d] == kUnset) {
          class_of_coset[d] = index;
          orbit.push_back(d);
        }
      }
    }
    std::vector<ElementId> members;
    for (std::uint32_t d : orbit) members.insert(members.end(), space.cosets[d].begin(), space.cosets[d].end());
    std::sort(members.begin(), members.end());
    bool involution = false;
    for (ElementId x : members) {
      result.class_of[x] = index;
      involution = involution || group.multiply(x, x) == GroupTable::identity_id();
    }
    result.representatives.push_back(members.front());
    result.contains_involution.push_back(involution);
    result.classes.push_back(std::move(members));
  }
  return result;
}

std::vector<ElementId> double_coset(const GroupTable& group, const Subgroup& sub, ElementId x) {
  require_subgroup_of(group, sub);
  std::vector<bool> member(group.order(), false);
  std::vector<ElementId> result;
  for (ElementId h1 : sub.ids()) {
    ElementId left = group.multiply(h1, x);
    if (member[left]) continue;  // the whole coset left*H is already present
    for (ElementId h2 : sub.ids()) {
      ElementId y = group.multiply(left, h2);
      if (!member[y]) {
        member[y] = true;
        result.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------- blocks

BlockSystem::BlockSystem(std::size_t domain_size, std::vector<std::vector<Point>> blocks) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  for (auto& b : blocks) {
    if (b.empty()) fail(ErrorCode::InvalidPartition, "empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  block_of_.assign(domain_size, kUnset);
  for (std::uint32_t i = 0; i < blocks.size(); ++i) {
    for (Point p : blocks[i]) {
      if (p >= domain_size) fail(ErrorCode::InvalidPartition, "block point outside the domain");
      if (block_of_[p] != kUnset) fail(ErrorCode::InvalidPartition, "blocks are not disjoint");
      block_of_[p] = i;
    }
  }
  for (auto b : block_of_) {
    if (b == kUnset) fail(ErrorCode::InvalidPartition, "blocks do not cover the domain");
  }
  blocks_ = std::move(blocks);
}

BlockSystem BlockSystem::from_labels(std::span<const std::uint32_t> labels) {
  std::vector<std::vector<Point>> blocks;
  std::vector<std::uint32_t> slot;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  for (Point p = 0; p < labels.size(); ++p) {
    if (labels[p] >= slot.size()) slot.resize(labels[p] + 1, kUnset);
    if (slot[labels[p]] == kUnset) {
      slot[labels[p]] = static_cast<std::uint32_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[labels[p]]].push_back(p);
  }
  return BlockSystem(labels.size(), std::move(blocks));
}

BlockSystem BlockSystem::singletons(std::size_t domain_size) {
  std::vector<std::vector<Point>> blocks;
  for (Point p = 0; p < domain_size; ++p) blocks.push_back({p});
  return BlockSystem(domain_size, std::move(blocks));
}

BlockSystem BlockSystem::whole(std::size_t domain_size) {
  std::vector<Point> all(domain_size);
  std::iota(all.begin(), all.end(), Point{0});
  if (all.empty()) return BlockSystem(0, {});
  return BlockSystem(domain_size, {all});
}

Permutation BlockSystem::block_permutation(const Permutation& g) const {
  if (g.degree() != domain_size()) fail(ErrorCode::DegreeMismatch, "permutation degree differs from domain");
  std::vector<Point> images(blocks_.size());
  for (std::uint32_t i = 0; i < blocks_.size(); ++i) {
    std::uint32_t target = block_of_[g(blocks_[i].front())];
    for (Point p : blocks_[i]) {
      if (block_of_[g(p)] != target) {
        fail(ErrorCode::NotInvariant, g.to_cycles() + " splits block " + std::to_string(i));
      }
    }
    images[i] = target;
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    fail(ErrorCode::NotInvariant, g.to_cycles() + " merges blocks");
  }
}

bool BlockSystem::is_invariant_under(const GroupTable& group) const {
  if (group.degree() != domain_size()) return false;
  try {
    for (const auto& g : group.generators()) (void)block_permutation(g);
  } catch (const Error&) {
    return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // Returns false when already joined.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

void require_transitive(const GroupTable& group) {
  if (group.degree() > 0 && orbit(group, 0).size() != group.degree()) {
    fail(ErrorCode::NotTransitive, "group is not transitive on its domain");
  }
}

}  // namespace

BlockSystem minimal_block_system(const GroupTable& group, std::span<const Point> seeds) {
  const std::size_t n = group.degree();
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> pending;
  for (std::size_t i = 1; i < seeds.size(); ++i) {
    if (seeds[i] >= n || seeds[0] >= n) fail(ErrorCode::PointOutOfRange, "seed outside the domain");
    if (uf.unite(seeds[0], seeds[i])) pending.emplace_back(seeds[0], seeds[i]);
  }
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (const auto& g : group.generators()) {
      Point ga = g(a), gb = g(b);
      if (uf.unite(ga, gb)) pending.emplace_back(ga, gb);
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (Point p = 0; p < n; ++p) labels[p] = uf.find(p);
  return BlockSystem::from_labels(labels);
}

std::vector<Point> minimal_block(const GroupTable& group, Point first, Point second) {
  require_transitive(group);
  if (first == second) fail(ErrorCode::InvalidArgument, "seed points must be distinct");
  std::vector<Point> seeds{first, second};
  auto system = minimal_block_system(group, seeds);
  return system.block(system.block_of(first));
}

std::vector<BlockSystem> all_block_systems(const GroupTable& group, std::size_t domain_limit) {
  const std::size_t n = group.degree();
  if (n > domain_limit) {
    fail(ErrorCode::DomainTooLarge, "degree " + std::to_string(n) + " exceeds block search limit " +
                                        std::to_string(domain_limit));
  }
  require_transitive(group);
  if (n == 0) return {};

  std::set<std::vector<std::vector<Point>>> seen;
  std::vector<BlockSystem> found;
  auto admit = [&](BlockSystem s) {
    if (seen.insert(s.blocks()).second) found.push_back(std::move(s));
  };
  admit(BlockSystem::singletons(n));
  for (std::size_t i = 0; i < found.size(); ++i) {
    const BlockSystem current = found[i];
    const auto& base = current.block(current.block_of(0));
    for (std::uint32_t b = 0; b < current.block_count(); ++b) {
      if (b == current.block_of(0)) continue;
      std::vector<Point> seeds = base;
      seeds.push_back(current.block(b).front());
      admit(minimal_block_system(group, seeds));
    }
  }
  std::sort(found.begin(), found.end(), [](const BlockSystem& a, const BlockSystem& b) {
    if (a.block(0).size() != b.block(0).size()) return a.block(0).size() < b.block(0).size();
    return a.blocks() < b.blocks();
  });
  return found;
}

Subgroup setwise_stabilizer(const GroupTable& group, std::span<const Point> subset) {
  if (subset.empty()) fail(ErrorCode::InvalidArgument, "setwise stabilizer of an empty set");
  std::vector<bool> in(group.degree(), false);
  for (Point p : subset) {
    if (p >= group.degree()) fail(ErrorCode::PointOutOfRange, "subset point outside the domain");
    in[p] = true;
  }
  std::vector<ElementId> ids;
  for (ElementId g = 0; g < group.order(); ++g) {
    const auto& perm = group.element(g);
    bool keeps = true;
    for (Point p : subset) {
      if (!in[perm(p)]) {
        keeps = false;
        break;
      }
    }
    if (keeps) ids.push_back(g);
  }
  return Subgroup::from_ids(group, std::move(ids));
}

std::vector<Subgroup> intermediate_subgroups(const GroupTable& group, const Subgroup& lower,
                                             const Subgroup& upper, std::size_t closure_cap) {
  require_subgroup_of(group, lower);
  require_subgroup_of(group, upper);
  if (!lower.is_subset_of(upper)) fail(ErrorCode::NotASubgroup, "lower bound is not inside the upper bound");

  std::set<std::vector<ElementId>> seen{lower.ids()};
  std::vector<Subgroup> found{lower};
  std::vector<std::vector<ElementId>> gens{lower.ids()};
  std::size_t closures = 0;
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<bool> covered(group.order(), false);
    for (ElementId id : found[i].ids()) covered[id] = true;
    for (ElementId x : upper.ids()) {
      if (covered[x]) continue;
      if (++closures > closure_cap) {
        fail(ErrorCode::SubgroupEnumerationCapExceeded,
             "more than " + std::to_string(closure_cap) + " candidate closures; lattice is partial");
      }
      std::vector<ElementId> g = gens[i];
      g.push_back(x);
      auto ids = close_subgroup(group, g);
      // <K, x> = <K, k x k'>, so the rest of KxK adds nothing new.
      for (ElementId k1 : found[i].ids()) {
        for (ElementId k2 : found[i].ids()) covered[group.multiply(group.multiply(k1, x), k2)] = true;
      }
      if (seen.insert(ids).second) {
        found.push_back(Subgroup::generated_by_ids(group, g));
        gens.push_back(std::move(g));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.ids() < b.ids();
  });
  return found;
}

std::vector<LatticeEntry> subgroup_block_lattice(const GroupTable& group, Point base_point,
                                                 std::size_t closure_cap) {
  require_transitive(group);
  auto stab = Subgroup::from_ids(group, stabilizer_ids(group, base_point));
  auto subgroups = intermediate_subgroups(group, stab, Subgroup::whole(group), closure_cap);
  std::vector<LatticeEntry> result;
  for (auto& h : subgroups) {
    std::vector<bool> hit(group.degree(), false);
    std::vector<Point> block;
    for (ElementId id : h.ids()) {
      Point q = group.element(id)(base_point);
      if (!hit[q]) {
        hit[q] = true;
        block.push_back(q);
      }
    }
    std::sort(block.begin(), block.end());
    result.push_back(LatticeEntry{std::move(h), std::move(block)});
  }
  return result;
}

bool lattice_is_order_isomorphic(const std::vector<LatticeEntry>& lattice) {
  for (const auto& a : lattice) {
    for (const auto& b : lattice) {
      bool sub = a.subgroup.is_subset_of(b.subgroup);
      bool blk = std::includes(b.block.begin(), b.block.end(), a.block.begin(), a.block.end());
      if (sub != blk) return false;
    }
  }
  return true;
}

BlockSystem read_block_system(std::istream& in, std::size_t domain_size) {
  std::vector<std::vector<Point>> blocks;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Point> block;
    long long value = 0;
    while (fields >> value) {
      if (value < 1 || static_cast<std::size_t>(value) > domain_size) {
        fail(ErrorCode::PointOutOfRange, "block point " + std::to_string(value) + " outside 1.." +
                                             std::to_string(domain_size));
      }
      block.push_back(static_cast<Point>(value - 1));
    }
    if (!fields.eof()) fail(ErrorCode::SyntaxError, "non-numeric token in block file");
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return BlockSystem(domain_size, std::move(blocks));
}

BlockSystem read_block_system_file(const std::string& path, std::size_t domain_size) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_block_system(in, domain_size);
}

void write_block_system(std::ostream& out, const BlockSystem& system) {
  for (const auto& block : system.blocks()) {
    for (std::size_t i = 0; i < block.size(); ++i) out << (i ? " " : "") << block[i] + 1;
    out << '\n';
  }
}

}  // namespace sgk
