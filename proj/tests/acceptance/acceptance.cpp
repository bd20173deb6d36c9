// End-to-end checks on the fixture set. One line per criterion; exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgk/coset_graphs.hpp"
#include "sgk/designs.hpp"
#include "sgk/error.hpp"
#include "sgk/extensions.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/quotients.hpp"
#include "sgk/semidirect.hpp"
#include "sgk/three_arc.hpp"

using namespace sgk;

namespace {

// Collects failed expectations for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::set<oracle::Perm> oracle_group(const GroupTable& g) {
  return oracle::closure(fixtures::raw_generators(g), static_cast<int>(g.degree()));
}

std::set<oracle::Perm> oracle_stabilizer(const std::set<oracle::Perm>& group, int point) {
  std::set<oracle::Perm> out;
  for (const auto& g : group)
    if (g[point] == point) out.insert(g);
  return out;
}

// |a^-1 H a ∩ H| straight from the element sets.
std::size_t oracle_conjugate_meet(const std::set<oracle::Perm>& h, const oracle::Perm& a) {
  auto ai = oracle::invert(a);
  std::size_t count = 0;
  for (const auto& x : h)
    if (h.count(oracle::compose(oracle::compose(ai, x), a))) ++count;
  return count;
}

void coset_graph_golden(Check& c) {
  struct Case {
    const char* group;
    std::size_t n;
  };
  for (auto [file, n] : {Case{"s4.grp", 4}, Case{"s5.grp", 5}}) {
    auto g = fixtures::group(file);
    auto h = Subgroup::from_ids(g, stabilizer_ids(g, 0));
    auto a = parse_cycles("(1 2)", n);
    auto r = symmetric_coset_graph(g, h, g.id_of(a));
    auto og = oracle_group(g);
    auto oh = oracle_stabilizer(og, 0);
    std::size_t formula = oh.size() / oracle_conjugate_meet(oh, fixtures::raw(a));
    std::string tag = std::string(file) + ": ";
    c.expect(fixtures::isomorphic(r.graph, complete_graph(n)), tag + "not isomorphic to K" + std::to_string(n));
    c.expect(formula == n - 1, tag + "oracle valency formula " + std::to_string(formula));
    c.expect(r.valency_formula == formula, tag + "valency formula " + std::to_string(r.valency_formula));
    c.expect(r.graph.regular_valency() == formula, tag + "measured valency differs");
    c.expect(r.report.symmetric(), tag + "action not symmetric");
  }
}

void lorimer_dictionary(Check& c) {
  auto g = fixtures::group("s4.grp");
  auto h = Subgroup::from_ids(g, stabilizer_ids(g, 0));
  auto dict = orbital_double_coset_map(g, h);
  std::multiset<std::size_t> sizes;
  for (const auto& cls : dict.classes.classes) sizes.insert(cls.size());
  c.expect(sizes == std::multiset<std::size_t>{6, 18}, "double coset sizes are not {6, 18}");
  c.expect(dict.bijective && dict.flags_agree, "dictionary not bijective or involution flags disagree");
  // Rank: orbits of the point stabilizer, from the raw element set.
  auto oh = oracle_stabilizer(oracle_group(g), 0);
  std::set<std::set<int>> suborbits;
  for (int p = 0; p < 4; ++p) suborbits.insert(oracle::orbit(oh, p));
  c.expect(dict.orbitals.size() == suborbits.size(), "orbital count differs from the rank");
  for (std::size_t i = 0; i < dict.classes.size(); ++i) {
    if (dict.classes.classes[i].size() != 18) continue;
    bool involution = false;
    for (ElementId x : dict.classes.classes[i]) involution |= g.multiply(x, x) == 0;
    c.expect(involution && dict.classes.contains_involution[i], "size-18 class carries no involution");
    const auto& orb = dict.orbitals[dict.orbital_of[i]];
    c.expect(!orb.diagonal && orb.pairs.size() == 12, "size-18 class is not sent to the non-diagonal orbital");
  }
  std::size_t non_diagonal = 0;
  for (const auto& o : dict.orbitals) non_diagonal += !o.diagonal;
  c.expect(non_diagonal == 1, "expected a unique non-diagonal orbital");
}

// Blocks through point 0 of invariant partitions, by trying every set partition.
std::set<std::vector<Point>> oracle_blocks_at_zero(const GroupTable& g) {
  std::set<std::vector<Point>> out;
  auto gens = fixtures::raw_generators(g);
  for (const auto& labels : oracle::set_partitions(static_cast<int>(g.degree()))) {
    if (!oracle::partition_invariant(labels, gens)) continue;
    std::vector<Point> block;
    for (std::size_t p = 0; p < labels.size(); ++p)
      if (labels[p] == labels[0]) block.push_back(static_cast<Point>(p));
    out.insert(block);
  }
  return out;
}

void lattice_correspondence(Check& c) {
  struct Case {
    const char* group;
    std::size_t expected;
  };
  for (auto [file, expected] : {Case{"d4.grp", 3}, Case{"s4.grp", 2}}) {
    auto g = fixtures::group(file);
    auto lattice = subgroup_block_lattice(g, 0);
    std::string tag = std::string(file) + ": ";
    c.expect(lattice.size() == expected, tag + std::to_string(lattice.size()) + " lattice entries");
    c.expect(lattice_is_order_isomorphic(lattice), tag + "not order-isomorphic");
    std::set<std::vector<Point>> blocks;
    for (const auto& e : lattice) blocks.insert(e.block);
    c.expect(blocks == oracle_blocks_at_zero(g), tag + "blocks differ from the partition oracle");
    for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
      c.expect(lattice[i].subgroup.is_subset_of(lattice[i + 1].subgroup), tag + "entries do not form a chain");
    }
  }
}

void biggs_golden(Check& c) {
  auto z2 = fixtures::group("z2.grp");
  auto s4 = fixtures::group("s4.grp");
  auto sd = SemidirectGroup::build(z2, s4, read_twist_file(fixtures::path("z2_trivial.twist"), z2, s4));
  auto k4 = complete_graph(4);
  auto chain = propagate_nchain(k4, sd, read_chain_file(fixtures::path("z2_chain.txt"), k4, z2));
  auto b = biggs_cover(k4, sd, chain);
  c.expect(fixtures::isomorphic(b.cover, fixtures::cube()), "cover is not the cube");
  c.expect(b.quotient_isomorphism.has_value() && fixtures::isomorphic(b.certificate.quotient, k4),
           "fiber quotient is not K4");
  c.expect(b.fibers_are_matchings, "some fiber pair is not a perfect matching");
  c.expect(b.certificate.cover == CoverClass::Cover, "quotient map is not a cover");
  c.expect(b.cover.regular_valency() == 3u, "valency not preserved");
  auto report = verify_action(b.cover, b.group);
  c.expect(report.symmetric() && report.arc_transitive, "N x S4 action not symmetric");
  c.expect(b.group.order() == 48, "semidirect group has order " + std::to_string(b.group.order()));

  auto flat = biggs_cover(k4, sd, constant_chain(k4, 0));
  auto e = fixtures::edges(flat.cover);
  c.expect(oracle::components(8, e) == 2, "identity chain does not give two components");
  for (Vertex start : {Vertex{0}, Vertex{1}}) {
    std::vector<Vertex> part;
    for (Vertex v = start; v < 8; v += 2) part.push_back(v);
    c.expect(fixtures::isomorphic(flat.cover.induced_subgraph(part), k4), "identity chain component is not K4");
  }
}

void three_arc_golden(Check& c) {
  auto s4 = fixtures::group("s4.grp");
  auto k4 = complete_graph(4);
  auto orbs = three_arc_orbits(k4, s4);
  c.expect(orbs.size() == 2, std::to_string(orbs.size()) + " orbits on 3-arcs");
  c.expect(enumerate_s_arcs(k4, 3).size() == 48, "K4 does not have 48 3-arcs");
  for (const auto& orbit : orbs) {
    c.expect(orbit.arcs.size() == 24 && orbit.self_paired, "orbit not of size 24 or not self-paired");
    auto t = three_arc_graph(k4, s4, orbit);
    c.expect(t.graph.vertex_count() == 12 && t.graph.regular_valency() == 2u, "three-arc graph not 12-vertex 2-regular");
    c.expect(verify_action(t.graph, t.group).symmetric(), "three-arc graph not S4-symmetric");
    c.expect(t.quotient_isomorphism.has_value() && fixtures::isomorphic(t.certificate.quotient, k4),
             "B(sigma) quotient is not K4");
    auto rho = check_condition_pe(t.graph, t.group, t.partition);
    c.expect(rho.has_value(), "condition PE found no labelling bijection");
    if (rho) c.expect(check_three_arc_necessity(t.graph, t.group, t.partition, *rho), "3-arc necessity fails");
  }
}

void design_round_trip(Check& c) {
  struct Case {
    Graph graph;
    const char* group;
  };
  auto k4 = complete_graph(4);
  auto d = design_from_graph(k4, fixtures::group("s4.grp"));
  auto p = validate_design(d.design);
  c.expect(p == DesignParams{4, 4, 3, 3, 1}, "K4 design parameters are not (4,4,3,3,1)");
  c.expect(p.v * p.lambda == p.b * p.k, "vλ != bk for K4");
  for (auto& [graph, file] : {Case{k4, "s4.grp"}, Case{fixtures::graph("c6.graph"), "d6.grp"},
                              Case{fixtures::graph("petersen.graph"), "s5_pairs.grp"}}) {
    auto g = fixtures::group(file);
    auto sd = design_from_graph(graph, g);
    auto params = validate_design(sd.design);
    c.expect(params.v * params.lambda == params.b * params.k, std::string(file) + ": vλ != bk");
    auto back = graph_from_design(sd.design, g, sd.polarity);
    c.expect(are_isomorphic(back, graph).has_value() && fixtures::isomorphic(back, graph),
             std::string(file) + ": round trip changed the graph");
  }
}

void subgraph_cube(Check& c) {
  auto s4 = fixtures::group("s4.grp");
  auto k4 = complete_graph(4);
  DirectedSubgraph tri(k4, {1, 2, 3}, {{1, 2}, {2, 3}, {3, 1}});
  auto sg = subgraph_graph(k4, s4, tri, parse_cycles("(1 2)", 4));
  c.expect(sg.graph.vertex_count() == 8, std::to_string(sg.graph.vertex_count()) + " vertices");
  c.expect(fixtures::isomorphic(sg.graph, fixtures::cube()), "not isomorphic to the cube");
  c.expect(sg.report.vertex_transitive && sg.report.arc_transitive, "action not vertex- and arc-transitive");
}

void quotient_dictionary(Check& c) {
  auto d6 = fixtures::group("d6.grp");
  auto h = Subgroup::generated_by(d6, parse_permutation_list("(2 6)(3 5)", 6));
  auto k = Subgroup::generated_by(d6, parse_permutation_list("(2 6)(3 5),(1 4)(2 5)(3 6)", 6));
  ElementId a = d6.id_of(parse_cycles("(1 2)(3 6)(4 5)", 6));
  auto r = quotient_as_coset_graph(d6, h, a, k);
  c.expect(fixtures::isomorphic(r.fine.graph, cycle_graph(6)), "fine graph is not C6");
  c.expect(fixtures::isomorphic(r.coarse.graph, cycle_graph(3)), "coarse graph is not C3");
  c.expect(fixtures::isomorphic(r.quotient, cycle_graph(3)), "quotient of C6 is not C3");
  c.expect(r.isomorphism.has_value() && r.block_in_lattice, "quotient not certified against the coarse graph");
  bool refused = false;
  try {
    quotient_as_coset_graph(d6, h, d6.id_of(parse_cycles("(1 4)(2 5)(3 6)", 6)), k);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::DegenerateQuotient;
  }
  c.expect(refused, "a in K was not refused with DegenerateQuotient");
}

void invariant_suite(Check& c) {
  std::mt19937 rng(2024);
  const std::vector<std::string> files{"s4.grp", "s5.grp", "d4.grp", "d6.grp", "z6.grp", "octahedron.grp", "q3.grp"};
  std::vector<GroupTable> groups;
  for (const auto& f : files) groups.push_back(fixtures::group(f));
  auto z2 = fixtures::group("z2.grp");
  auto biggs = SemidirectGroup::build(z2, groups[0], read_twist_file(fixtures::path("z2_trivial.twist"), z2, groups[0]));
  int instances = 0;
  for (int trial = 0; trial < 60; ++trial, ++instances) {
    std::size_t which = rng() % groups.size();
    const auto& g = groups[which];
    std::string tag = files[which] + ": ";
    Point alpha = static_cast<Point>(rng() % g.degree());
    // Orbit-stabilizer.
    c.expect(orbit(g, alpha).size() * stabilizer_ids(g, alpha).size() == g.order(), tag + "orbit-stabilizer");
    auto h = Subgroup::from_ids(g, stabilizer_ids(g, alpha));
    // Core = kernel of the coset action.
    auto cosets = right_cosets(g, h);
    c.expect(core(g, h).ids() == cosets.kernel(g), tag + "core differs from the kernel");
    // |HxH| = |H|^2 / |H ∩ x^-1 H x|.
    ElementId x = static_cast<ElementId>(rng() % g.order());
    auto meet = intersect(g, h, conjugate(g, h, x));
    c.expect(double_coset(g, h, x).size() * meet.order() == h.order() * h.order(), tag + "double coset size law");
    // Quotient homomorphism law on a random block system.
    auto systems = all_block_systems(g);
    const auto& part = systems[rng() % systems.size()];
    auto act = block_action(g, part);
    ElementId y = static_cast<ElementId>(rng() % g.order());
    for (Point p = 0; p < g.degree(); ++p)
      c.expect(part.block_of(g.element(y)(p)) == act.apply(y, part.block_of(p)), tag + "quotient homomorphism law");
    // vλ = bk on the neighbourhood design of a random symmetric coset graph.
    std::vector<ElementId> involutions;
    for (ElementId z = 1; z < g.order(); ++z)
      if (g.multiply(z, z) == 0 && !h.contains(z)) involutions.push_back(z);
    if (!involutions.empty()) {
      auto r = symmetric_coset_graph(g, h, involutions[rng() % involutions.size()]);
      auto design = design_from_graph(r.graph, cosets.induced_group(g));
      auto params = validate_design(design.design);
      c.expect(params.v * params.lambda == params.b * params.k, tag + "vλ != bk");
    }
    // Biggs action homomorphism law on sampled pairs.
    auto order_n = biggs.n_part().order(), order_g = biggs.g_part().order();
    SemidirectGroup::Element u{static_cast<ElementId>(rng() % order_n), static_cast<ElementId>(rng() % order_g)};
    SemidirectGroup::Element w{static_cast<ElementId>(rng() % order_n), static_cast<ElementId>(rng() % order_g)};
    c.expect(biggs.act_on_pairs(u) * biggs.act_on_pairs(w) == biggs.act_on_pairs(biggs.multiply(u, w)),
             "Biggs action homomorphism law");
  }
  c.expect(instances >= 50, "too few instances");
}

oracle::Edges relabel(const oracle::Edges& e, const oracle::Perm& p) {
  oracle::Edges out;
  for (auto [u, v] : e) out.insert({p[u], p[v]});
  return out;
}

void isomorphism_oracle(Check& c) {
  std::mt19937 rng(99);
  std::vector<Graph> small;
  for (const char* f : {"k4.graph", "c6.graph", "q3.graph", "petersen.graph"}) {
    auto g = fixtures::graph(f);
    if (g.vertex_count() <= 8) small.push_back(g);
  }
  small.push_back(complete_graph(4));
  small.push_back(cycle_graph(6));
  small.push_back(fixtures::cube());
  int disagreements = 0;
  auto compare = [&](int n, const oracle::Edges& a, int m, const oracle::Edges& b) {
    bool fast = are_isomorphic(fixtures::from_oracle(n, a), fixtures::from_oracle(m, b)).has_value();
    if (fast != oracle::isomorphic(n, a, m, b)) ++disagreements;
  };
  for (const auto& g : small) {
    int n = static_cast<int>(g.vertex_count());
    auto perm = oracle::identity(n);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (const auto& other : small) compare(n, fixtures::edges(g), static_cast<int>(other.vertex_count()), fixtures::edges(other));
    compare(n, fixtures::edges(g), n, relabel(fixtures::edges(g), perm));
  }
  for (int i = 0; i < 100; ++i) {
    auto a = oracle::random_graph(7, 0.45, rng);
    auto perm = oracle::identity(7);
    std::shuffle(perm.begin(), perm.end(), rng);
    compare(7, a, 7, relabel(a, perm));
    // Same edge count, different graph: the interesting negative case.
    auto b = oracle::random_graph(7, 0.45, rng);
    compare(7, a, 7, b);
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements with brute force");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"coset graphs of S4 and S5 are K4 and K5", coset_graph_golden},
      {"double cosets of S4 match its orbitals", lorimer_dictionary},
      {"subgroup/block lattice of D4 and S4", lattice_correspondence},
      {"Z2 cover of K4 is the cube", biggs_golden},
      {"three-arc graphs of K4", three_arc_golden},
      {"graph -> design -> graph round trip", design_round_trip},
      {"subgraph graph of a K4 triangle is the cube", subgraph_cube},
      {"C6 over C3 as coset graphs", quotient_dictionary},
      {"randomized invariant suite", invariant_suite},
      {"isomorphism agrees with brute force", isomorphism_oracle},
  };
  auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    bool pass = check.failures.empty();
    failed += !pass;
    std::printf("[%s] criterion %zu: %s", pass ? "PASS" : "FAIL", i + 1, criteria[i].name);
    if (!pass) std::printf(" (%s%s)", check.failures.front().c_str(),
                           check.failures.size() > 1 ? ", ..." : "");
    std::printf("\n");
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %lld ms\n", static_cast<int>(criteria.size()) - failed, criteria.size(),
              static_cast<long long>(ms));
  return failed == 0 ? 0 : 1;
}
