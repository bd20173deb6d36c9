#include "sgk/semidirect.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "sgk/error.hpp"
#include "sgk/isomorphism.hpp"

namespace sgk {

namespace {

// Extends generator images to a map on all of N; empty result when the
// images do not define an automorphism.
std::vector<ElementId> extend_automorphism(const GroupTable& n, const std::vector<ElementId>& images) {
  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> map(n.order(), kUnset);
  map[GroupTable::identity_id()] = GroupTable::identity_id();
  std::vector<ElementId> queue{GroupTable::identity_id()};
  const auto& gens = n.generator_ids();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      ElementId y = n.multiply(x, gens[j]);
      ElementId image = n.multiply(map[x], images[j]);
      if (map[y] == kUnset) {
        map[y] = image;
        queue.push_back(y);
      } else if (map[y] != image) {
        return {};
      }
    }
  }
  std::vector<bool> hit(n.order(), false);
  for (ElementId y : map) {
    if (y == kUnset || hit[y]) return {};
    hit[y] = true;
  }
  // A well-defined map on a generating set that is a bijection is an
  // automorphism only if it respects all products; check exhaustively.
  for (ElementId a = 0; a < n.order(); ++a) {
    for (ElementId g : gens) {
      if (map[n.multiply(a, g)] != n.multiply(map[a], map[g])) return {};
    }
  }
  return map;
}

}  // namespace

SemidirectGroup SemidirectGroup::build(GroupTable n, GroupTable g,
                                       const std::vector<std::vector<Permutation>>& generator_images) {
  if (generator_images.size() != g.generator_ids().size()) {
    fail(ErrorCode::TwistNotHomomorphism, "need images for every generator of G");
  }
  std::vector<std::vector<ElementId>> gen_auts;
  for (std::size_t i = 0; i < generator_images.size(); ++i) {
    if (generator_images[i].size() != n.generator_ids().size()) {
      fail(ErrorCode::TwistNotHomomorphism, "need an image for every generator of N");
    }
    std::vector<ElementId> images;
    for (const auto& p : generator_images[i]) {
      auto id = n.find(p);
      if (!id) fail(ErrorCode::TwistNotHomomorphism, p.to_cycles() + " is not an element of N");
      images.push_back(*id);
    }
    auto aut = extend_automorphism(n, images);
    if (aut.empty()) {
      fail(ErrorCode::TwistNotHomomorphism, "images for generator " + std::to_string(i + 1) +
                                                " of G do not define an automorphism of N");
    }
    gen_auts.push_back(std::move(aut));
  }

  SemidirectGroup sd;
  // ρ(x s) = ρ(x) followed by ρ(s), over the whole of G.
  sd.twist_.assign(g.order(), {});
  std::vector<ElementId> identity(n.order());
  for (ElementId x = 0; x < n.order(); ++x) identity[x] = x;
  sd.twist_[GroupTable::identity_id()] = identity;
  std::vector<ElementId> queue{GroupTable::identity_id()};
  const auto& g_gens = g.generator_ids();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    ElementId x = queue[i];
    for (std::size_t j = 0; j < g_gens.size(); ++j) {
      ElementId y = g.multiply(x, g_gens[j]);
      std::vector<ElementId> composed(n.order());
      for (ElementId m = 0; m < n.order(); ++m) composed[m] = gen_auts[j][sd.twist_[x][m]];
      if (sd.twist_[y].empty()) {
        sd.twist_[y] = std::move(composed);
        queue.push_back(y);
      } else if (sd.twist_[y] != composed) {
        fail(ErrorCode::TwistNotHomomorphism, "twist does not extend to a homomorphism on G (conflict at " +
                                                  g.element(y).to_cycles() + ")");
      }
    }
  }
  sd.n_ = std::move(n);
  sd.g_ = std::move(g);
  return sd;
}

SemidirectGroup SemidirectGroup::direct(GroupTable n, GroupTable g) {
  std::vector<std::vector<Permutation>> images(g.generator_ids().size(), n.generators());
  if (n.generator_ids().empty()) images.assign(g.generator_ids().size(), {});
  return build(std::move(n), std::move(g), images);
}

bool SemidirectGroup::twist_is_trivial() const {
  for (const auto& row : twist_) {
    for (ElementId m = 0; m < row.size(); ++m) {
      if (row[m] != m) return false;
    }
  }
  return true;
}

SemidirectGroup::Element SemidirectGroup::multiply(Element a, Element b) const {
  return {n_.multiply(twist(b.second, a.first), b.first), g_.multiply(a.second, b.second)};
}

SemidirectGroup::Element SemidirectGroup::inverse(Element a) const {
  ElementId gi = g_.inverse(a.second);
  return {n_.inverse(twist(gi, a.first)), gi};
}

Permutation SemidirectGroup::act_on_pairs(Element e) const {
  const std::size_t nn = n_.order();
  const auto& g = g_.element(e.second);
  ElementId eta_inv = n_.inverse(e.first);
  std::vector<Point> images(nn * g_.degree());
  for (Point w = 0; w < g_.degree(); ++w) {
    for (ElementId m = 0; m < nn; ++m) {
      images[w * nn + m] = static_cast<Point>(g(w) * nn + n_.multiply(eta_inv, twist(e.second, m)));
    }
  }
  return Permutation(std::move(images));
}

SemidirectGroup::Element SemidirectGroup::decode(const Permutation& p) const {
  const std::size_t nn = n_.order();
  if (p.degree() != nn * g_.degree()) fail(ErrorCode::DegreeMismatch, "permutation is not on N x Ω");
  std::vector<Point> g_images(g_.degree());
  for (Point w = 0; w < g_.degree(); ++w) g_images[w] = static_cast<Point>(p(static_cast<Point>(w * nn)) / nn);
  ElementId g = g_.id_of(Permutation(std::move(g_images)));
  // (1, ω) ↦ (η^-1, ω^g) since ρ fixes the identity of N.
  ElementId eta = n_.inverse(p(0) % nn);
  Element e{eta, g};
  if (act_on_pairs(e) != p) fail(ErrorCode::NotInGroup, "permutation is not an element of the semidirect product");
  return e;
}

GroupTable SemidirectGroup::as_permutation_group() const {
  std::vector<Permutation> gens;
  for (ElementId m : n_.generator_ids()) gens.push_back(act_on_pairs({m, 0}));
  for (ElementId g : g_.generator_ids()) gens.push_back(act_on_pairs({0, g}));
  return generate_group(n_.order() * g_.degree(), std::move(gens));
}

std::vector<ElementId> SemidirectGroup::normal_part_ids(const GroupTable& perm_group) const {
  std::vector<ElementId> ids;
  for (ElementId m = 0; m < n_.order(); ++m) ids.push_back(perm_group.id_of(act_on_pairs({m, 0})));
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<std::vector<Permutation>> read_twist(std::istream& in, const GroupTable& n, const GroupTable& g) {
  std::vector<std::vector<Permutation>> images(g.generators().size(), n.generators());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    long long gi = 0, ni = 0;
    std::string where = "line " + std::to_string(line_no) + ": ";
    if (keyword != "twist" || !(fields >> gi >> ni)) fail(ErrorCode::SyntaxError, where + "expected 'twist <g> <n> <cycles>'");
    if (gi < 1 || static_cast<std::size_t>(gi) > images.size() || ni < 1 ||
        static_cast<std::size_t>(ni) > n.generators().size()) {
      fail(ErrorCode::SyntaxError, where + "generator index out of range");
    }
    std::string cycles;
    std::getline(fields, cycles);
    images[gi - 1][ni - 1] = parse_cycles(cycles, n.degree());
  }
  return images;
}

std::vector<std::vector<Permutation>> read_twist_file(const std::string& path, const GroupTable& n,
                                                      const GroupTable& g) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_twist(in, n, g);
}

NChainReport validate_nchain(const Graph& graph, const SemidirectGroup& sd, const NChain& chain) {
  const auto& arcs = graph.arcs();
  const auto& n = sd.n_part();
  const auto& g = sd.g_part();
  if (chain.values.size() != arcs.size()) fail(ErrorCode::IncompleteChain, "chain must assign every arc");
  if (g.degree() != graph.vertex_count()) fail(ErrorCode::DegreeMismatch, "G must act on the graph's vertices");
  auto arc_name = [&](const Arc& a) { return "(" + graph.label(a.first) + "," + graph.label(a.second) + ")"; };
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (chain.values[i] >= n.order()) fail(ErrorCode::InvalidChain, "chain value outside N");
    auto rev = *graph.arc_index(arcs[i].second, arcs[i].first);
    if (chain.values[rev] != n.inverse(chain.values[i])) {
      fail(ErrorCode::InverseSymmetryViolated, "value on the reverse of " + arc_name(arcs[i]) + " is not the inverse");
    }
  }
  NChainReport report;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  report.orbit_of_arc.assign(arcs.size(), kUnset);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (ElementId s : g.generator_ids()) {
      const auto& perm = g.element(s);
      auto j = graph.arc_index(perm(arcs[i].first), perm(arcs[i].second));
      if (!j) fail(ErrorCode::NotCompatible, perm.to_cycles() + " is not an automorphism of the graph");
      if (chain.values[*j] != sd.twist(s, chain.values[i])) {
        fail(ErrorCode::NotCompatible, "phi" + arc_name(arcs[*j]) + " differs from phi" + arc_name(arcs[i]) +
                                           " twisted by " + perm.to_cycles());
      }
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (report.orbit_of_arc[i] != kUnset) continue;
    auto index = static_cast<std::uint32_t>(report.orbit_representatives.size());
    report.orbit_representatives.push_back(i);
    std::vector<std::size_t> queue{i};
    report.orbit_of_arc[i] = index;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (ElementId s : g.generator_ids()) {
        const auto& perm = g.element(s);
        std::size_t j = *graph.arc_index(perm(arcs[queue[q]].first), perm(arcs[queue[q]].second));
        if (report.orbit_of_arc[j] == kUnset) {
          report.orbit_of_arc[j] = index;
          queue.push_back(j);
        }
      }
    }
  }
  return report;
}

NChain propagate_nchain(const Graph& graph, const SemidirectGroup& sd,
                        const std::vector<std::pair<Arc, ElementId>>& seeds) {
  const auto& arcs = graph.arcs();
  const auto& n = sd.n_part();
  const auto& g = sd.g_part();
  if (g.degree() != graph.vertex_count()) fail(ErrorCode::DegreeMismatch, "G must act on the graph's vertices");
  constexpr ElementId kUnset = ~ElementId{0};
  NChain chain{std::vector<ElementId>(arcs.size(), kUnset)};
  std::vector<std::size_t> queue;
  auto assign = [&](std::size_t arc, ElementId value) {
    if (chain.values[arc] == kUnset) {
      chain.values[arc] = value;
      queue.push_back(arc);
    } else if (chain.values[arc] != value) {
      fail(ErrorCode::NotCompatible, "conflicting values on arc (" + graph.label(arcs[arc].first) + "," +
                                         graph.label(arcs[arc].second) + ")");
    }
  };
  for (const auto& [arc, value] : seeds) {
    auto i = graph.arc_index(arc.first, arc.second);
    if (!i) fail(ErrorCode::InvalidChain, "chain names a non-arc");
    assign(*i, value);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    std::size_t i = queue[q];
    assign(*graph.arc_index(arcs[i].second, arcs[i].first), n.inverse(chain.values[i]));
    for (ElementId s : g.generator_ids()) {
      const auto& perm = g.element(s);
      auto j = graph.arc_index(perm(arcs[i].first), perm(arcs[i].second));
      if (!j) fail(ErrorCode::NotCompatible, perm.to_cycles() + " is not an automorphism of the graph");
      assign(*j, sd.twist(s, chain.values[i]));
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (chain.values[i] == kUnset) {
      fail(ErrorCode::IncompleteChain, "no value reaches arc (" + graph.label(arcs[i].first) + "," +
                                           graph.label(arcs[i].second) + ")");
    }
  }
  return chain;
}

NChain constant_chain(const Graph& graph, ElementId value) {
  return NChain{std::vector<ElementId>(graph.arc_count(), value)};
}

std::vector<std::pair<Arc, ElementId>> read_chain(std::istream& in, const Graph& graph, const GroupTable& n) {
  std::vector<std::pair<Arc, ElementId>> seeds;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::string where = "line " + std::to_string(line_no) + ": ";
    long long u = 0, v = 0;
    if (keyword != "arc" || !(fields >> u >> v)) fail(ErrorCode::SyntaxError, where + "expected 'arc <u> <v> <cycles>'");
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > graph.vertex_count() ||
        static_cast<std::size_t>(v) > graph.vertex_count()) {
      fail(ErrorCode::PointOutOfRange, where + "vertex out of range");
    }
    if (!graph.has_arc(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1))) {
      fail(ErrorCode::InvalidArgument, where + "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an arc");
    }
    std::string cycles;
    std::getline(fields, cycles);
    auto id = n.find(parse_cycles(cycles, n.degree()));
    if (!id) fail(ErrorCode::NotInGroup, where + "value is not an element of N");
    seeds.emplace_back(Arc{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)}, *id);
  }
  return seeds;
}

std::vector<std::pair<Arc, ElementId>> read_chain_file(const std::string& path, const Graph& graph,
                                                       const GroupTable& n) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  return read_chain(in, graph, n);
}

BiggsCover biggs_cover(const Graph& graph, const SemidirectGroup& sd, const NChain& chain) {
  try {
    (void)validate_nchain(graph, sd, chain);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidChain, e.what());
  }
  const auto& n = sd.n_part();
  const std::size_t nn = n.order();
  BiggsCover result;
  std::vector<std::string> labels;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    for (ElementId m = 0; m < nn; ++m) labels.push_back("(" + n.element(m).to_cycles() + "," + graph.label(v) + ")");
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < graph.arc_count(); ++i) {
    const auto& [v1, v2] = graph.arcs()[i];
    for (ElementId m = 0; m < nn; ++m) {
      arcs.emplace_back(static_cast<Vertex>(v1 * nn + m), static_cast<Vertex>(v2 * nn + n.multiply(m, chain.values[i])));
    }
  }
  result.cover = Graph::from_arcs(std::move(labels), arcs);
  result.group = sd.as_permutation_group();
  std::vector<std::uint32_t> fiber_of(result.cover.vertex_count());
  for (Vertex x = 0; x < fiber_of.size(); ++x) fiber_of[x] = static_cast<std::uint32_t>(x / nn);
  result.fibers = BlockSystem::from_labels(fiber_of);
  result.certificate = certify_quotient(result.cover, result.group, result.fibers, true);
  result.quotient_isomorphism = are_isomorphic(result.certificate.quotient, graph);

  result.fibers_are_matchings = true;
  for (const auto& [b, c] : result.certificate.quotient.arcs()) {
    auto bip = induced_bipartite(result.cover, result.fibers, b, c);
    if (bip.vertex_count() != 2 * nn || bip.regular_valency() != std::optional<std::size_t>{1}) {
      result.fibers_are_matchings = false;
    }
  }
  auto normal = Subgroup::from_ids(result.group, sd.normal_part_ids(result.group));
  result.normal_part_fiber_transitive = true;
  for (const auto& fiber : result.fibers.blocks()) {
    std::vector<bool> hit(result.cover.vertex_count(), false);
    std::size_t reached = 0;
    for (ElementId x : normal.ids()) {
      Vertex w = result.group.element(x)(fiber.front());
      if (!hit[w]) {
        hit[w] = true;
        ++reached;
      }
    }
    if (reached != fiber.size()) result.normal_part_fiber_transitive = false;
  }
  return result;
}

}  // namespace sgk
