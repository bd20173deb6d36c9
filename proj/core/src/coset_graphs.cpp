#include "sgk/coset_graphs.hpp"

#include <algorithm>

#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"

namespace sgk {

namespace {

std::vector<bool> membership(const GroupTable& group, std::span<const ElementId> ids) {
  std::vector<bool> in(group.order(), false);
  for (ElementId id : ids) {
    if (id >= group.order()) fail(ErrorCode::NotInGroup, "connector id outside the group");
    in[id] = true;
  }
  return in;
}

std::vector<Orbital> pair_orbits(const GroupTable& group, const PointAction& action) {
  const std::size_t n = action.domain_size;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> orbit_of(n * n, kUnset);
  std::vector<Orbital> result;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (orbit_of[start] != kUnset) continue;
    auto index = static_cast<std::uint32_t>(result.size());
    std::vector<std::size_t> queue{start};
    orbit_of[start] = index;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Point p = static_cast<Point>(queue[i] / n), q = static_cast<Point>(queue[i] % n);
      for (ElementId g : group.generator_ids()) {
        std::size_t j = std::size_t{action.apply(g, p)} * n + action.apply(g, q);
        if (orbit_of[j] == kUnset) {
          orbit_of[j] = index;
          queue.push_back(j);
        }
      }
    }
    Orbital orbital;
    std::sort(queue.begin(), queue.end());
    for (std::size_t code : queue) orbital.pairs.emplace_back(static_cast<Point>(code / n), static_cast<Point>(code % n));
    orbital.diagonal = orbital.pairs.front().first == orbital.pairs.front().second;
    result.push_back(std::move(orbital));
  }
  for (auto& orbital : result) {
    const auto& [p, q] = orbital.pairs.front();
    orbital.paired_with = orbit_of[std::size_t{q} * n + p];
  }
  for (std::uint32_t i = 0; i < result.size(); ++i) result[i].self_paired = result[i].paired_with == i;
  return result;
}

}  // namespace

Graph cayley_graph(const GroupTable& group, std::span<const ElementId> connectors) {
  auto in = membership(group, connectors);
  if (in[GroupTable::identity_id()]) fail(ErrorCode::LoopConnector, "connector set contains the identity");
  for (ElementId d : connectors) {
    if (!in[group.inverse(d)]) {
      fail(ErrorCode::NotInverseClosed, "inverse of " + group.element(d).to_cycles() + " is not a connector");
    }
  }
  std::vector<std::string> labels;
  for (const auto& e : group.elements()) labels.push_back(e.to_cycles());
  std::vector<Arc> arcs;
  for (ElementId x = 0; x < group.order(); ++x) {
    for (ElementId d : connectors) arcs.emplace_back(x, group.multiply(group.inverse(d), x));
  }
  return Graph::from_arcs(std::move(labels), arcs);
}

PointAction right_regular_action(const GroupTable& group) {
  PointAction action;
  action.domain_size = group.order();
  action.images.assign(group.order(), std::vector<Point>(group.order()));
  for (ElementId g = 0; g < group.order(); ++g) {
    for (ElementId x = 0; x < group.order(); ++x) action.images[g][x] = group.multiply(x, g);
  }
  return action;
}

Graph sabidussi_graph(const GroupTable& group, const Subgroup& sub, std::span<const ElementId> connectors) {
  require_subgroup_of(group, sub);
  auto in = membership(group, connectors);
  for (ElementId d : connectors) {
    const std::string name = group.element(d).to_cycles();
    if (sub.contains(d)) fail(ErrorCode::SpecInvariantViolated, "connector " + name + " lies in H");
    if (!in[group.inverse(d)]) fail(ErrorCode::SpecInvariantViolated, "inverse of " + name + " is not a connector");
    for (ElementId h : sub.ids()) {
      if (!in[group.multiply(h, d)] || !in[group.multiply(d, h)]) {
        fail(ErrorCode::SpecInvariantViolated, "connector set is not a union of double cosets of H");
      }
    }
  }
  auto space = right_cosets(group, sub);
  std::vector<std::string> labels;
  for (ElementId rep : space.representatives) labels.push_back(group.element(rep).to_cycles());
  std::vector<Arc> arcs;
  for (std::uint32_t c = 0; c < space.size(); ++c) {
    for (ElementId d : connectors) {
      arcs.emplace_back(c, space.coset_of[group.multiply(group.inverse(d), space.representatives[c])]);
    }
  }
  return Graph::from_arcs(std::move(labels), arcs);
}

SymmetricCosetGraph symmetric_coset_graph(const GroupTable& group, const Subgroup& sub, ElementId a) {
  require_subgroup_of(group, sub);
  const std::string name = group.element(a).to_cycles();
  if (a == GroupTable::identity_id() || group.multiply(a, a) != GroupTable::identity_id()) {
    fail(ErrorCode::NotInvolution, name + " is not an involution");
  }
  if (sub.contains(a)) fail(ErrorCode::InsideSubgroup, name + " lies in the subgroup");

  SymmetricCosetGraph result;
  result.involution = a;
  result.connector = double_coset(group, sub, a);
  result.graph = sabidussi_graph(group, sub, result.connector);
  result.cosets = right_cosets(group, sub);

  auto arc_stab = intersect(group, conjugate(group, sub, a), sub);
  result.valency_formula = sub.order() / arc_stab.order();

  // Stabilizer of the arc (H, Ha) in the coset action.
  const std::uint32_t head = result.cosets.coset_of[a];
  std::vector<ElementId> measured;
  for (ElementId g : sub.ids()) {
    if (result.cosets.act(group, head, g) == head) measured.push_back(g);
  }
  result.arc_stabilizer_order = measured.size();
  result.arc_stabilizer_matches = measured == arc_stab.ids();
  result.kernel_order = core(group, sub).order();
  result.connected = result.graph.is_connected();
  std::vector<ElementId> gens = sub.ids();
  gens.push_back(a);
  result.generates = close_subgroup(group, gens).size() == group.order();
  result.report = verify_action(result.graph, group, result.cosets.action(group));
  return result;
}

std::vector<Orbital> orbitals(const GroupTable& group, const PointAction& action) {
  if (!action_is_transitive(group, action)) fail(ErrorCode::NotTransitive, "action is not transitive");
  return pair_orbits(group, action);
}

std::vector<Orbital> orbitals(const GroupTable& group, std::size_t domain_size) {
  if (group.degree() != domain_size) fail(ErrorCode::DegreeMismatch, "group degree differs from domain size");
  return orbitals(group, natural_action(group));
}

Graph orbital_graph(const GroupTable& group, const PointAction& action, std::span<const Arc> orbital) {
  if (orbital.empty()) fail(ErrorCode::InvalidArgument, "empty orbital");
  std::vector<Arc> pairs(orbital.begin(), orbital.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& [p, q] : pairs) {
    if (p >= action.domain_size || q >= action.domain_size) fail(ErrorCode::InvalidArgument, "pair outside the domain");
  }
  if (pairs.front().first == pairs.front().second) fail(ErrorCode::DiagonalOrbital, "the diagonal orbital gives loops");
  for (const auto& orb : orbitals(group, action)) {
    if (!std::binary_search(orb.pairs.begin(), orb.pairs.end(), pairs.front())) continue;
    if (orb.pairs != pairs) fail(ErrorCode::InvalidArgument, "pair set is not an orbital");
    if (!orb.self_paired) fail(ErrorCode::NotSelfPaired, "orbital is not self-paired");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < action.domain_size; ++i) labels.push_back(std::to_string(i + 1));
    return Graph::from_arcs(std::move(labels), pairs);
  }
  fail(ErrorCode::InvalidArgument, "pair set is not an orbital");
}

Graph orbital_graph(const GroupTable& group, std::size_t domain_size, std::span<const Arc> orbital) {
  if (group.degree() != domain_size) fail(ErrorCode::DegreeMismatch, "group degree differs from domain size");
  return orbital_graph(group, natural_action(group), orbital);
}

LorimerDictionary orbital_double_coset_map(const GroupTable& group, const Subgroup& sub) {
  LorimerDictionary dict;
  dict.classes = double_cosets(group, sub);
  auto space = right_cosets(group, sub);
  dict.orbitals = orbitals(group, space.action(group));
  const std::size_t n = space.size();
  std::vector<std::uint32_t> orbital_of_pair(n * n);
  for (std::uint32_t i = 0; i < dict.orbitals.size(); ++i) {
    for (const auto& [p, q] : dict.orbitals[i].pairs) orbital_of_pair[std::size_t{p} * n + q] = i;
  }
  std::vector<bool> used(dict.orbitals.size(), false);
  dict.bijective = dict.classes.size() == dict.orbitals.size();
  dict.flags_agree = true;
  for (std::uint32_t c = 0; c < dict.classes.size(); ++c) {
    std::uint32_t o = orbital_of_pair[space.coset_of[dict.classes.representatives[c]]];
    // Every element of the class must land in the same orbital.
    for (ElementId x : dict.classes.classes[c]) {
      if (orbital_of_pair[space.coset_of[x]] != o) dict.bijective = false;
    }
    if (used[o]) dict.bijective = false;
    used[o] = true;
    if (dict.classes.contains_involution[c] != dict.orbitals[o].self_paired) dict.flags_agree = false;
    dict.orbital_of.push_back(o);
  }
  return dict;
}

CosetRecognition recognize_as_coset_graph(const Graph& graph, const GroupTable& group) {
  auto report = verify_action(graph, group);
  if (!report.symmetric()) fail(ErrorCode::NotSymmetric, "the group does not act symmetrically on the graph");
  CosetRecognition result;
  result.stabilizer = Subgroup::from_ids(group, stabilizer_ids(group, 0));
  std::optional<ElementId> flip;
  for (ElementId g = 1; g < group.order() && !flip; ++g) {
    const auto& perm = group.element(g);
    if (group.multiply(g, g) == GroupTable::identity_id() && graph.has_arc(0, perm(0))) flip = g;
  }
  if (!flip) fail(ErrorCode::NoFlippingInvolution, "no involution reverses an arc at vertex 1");
  result.involution = *flip;
  result.rebuilt = symmetric_coset_graph(group, result.stabilizer, *flip);
  result.isomorphism = are_isomorphic(graph, result.rebuilt.graph);
  return result;
}

}  // namespace sgk
