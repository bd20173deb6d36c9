#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgk/coset_graphs.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk_testing.hpp"

namespace sgk {
namespace {

using fixtures::make_group;

std::vector<ElementId> ids_of(const GroupTable& g, const std::string& perms) {
  std::vector<ElementId> ids;
  for (const auto& p : parse_permutation_list(perms, g.degree())) ids.push_back(g.id_of(p));
  return ids;
}

Subgroup point_stabilizer(const GroupTable& g, Point p = 0) {
  return Subgroup::from_ids(g, stabilizer_ids(g, p));
}

// Independent adjacency oracle: x ~ y iff x y^-1 in D, computed on raw permutations.
oracle::Edges cayley_oracle(const GroupTable& g, const std::vector<ElementId>& d) {
  std::set<oracle::Perm> conn;
  for (ElementId id : d) conn.insert(fixtures::raw(g.element(id)));
  oracle::Edges e;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      auto xy = oracle::compose(fixtures::raw(g.element(x)), oracle::invert(fixtures::raw(g.element(y))));
      if (conn.count(xy)) e.insert({static_cast<int>(x), static_cast<int>(y)});
    }
  }
  return e;
}

TEST(Cayley, Z6IsSixCycle) {
  auto z6 = make_group(6, "(1 2 3 4 5 6)");
  auto d = ids_of(z6, "(1 2 3 4 5 6),(1 6 5 4 3 2)");
  auto g = cayley_graph(z6, d);
  EXPECT_EQ(fixtures::edges(g), cayley_oracle(z6, d));
  EXPECT_TRUE(are_isomorphic(g, cycle_graph(6)));
  EXPECT_EQ(g.label(0), "()");
}

TEST(Cayley, Z2IsAnEdge) {
  auto z2 = make_group(2, "(1 2)");
  auto g = cayley_graph(z2, ids_of(z2, "(1 2)"));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Cayley, S3AllTranspositions) {
  auto s3 = make_group(3, "(1 2),(1 2 3)");
  auto d = ids_of(s3, "(1 2),(1 3),(2 3)");
  auto g = cayley_graph(s3, d);
  EXPECT_EQ(fixtures::edges(g), cayley_oracle(s3, d));
  EXPECT_EQ(g.regular_valency(), 3u);
  EXPECT_TRUE(verify_action(g, s3, right_regular_action(s3)).vertex_transitive);
  // Transpositions swap parity, so this is K3,3.
  std::vector<Arc> k33;
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) k33.emplace_back(u, v);
  EXPECT_TRUE(are_isomorphic(g, Graph::from_edges(6, k33)));
}

TEST(Cayley, Errors) {
  auto z6 = make_group(6, "(1 2 3 4 5 6)");
  EXPECT_SGK_ERROR(cayley_graph(z6, ids_of(z6, "()")), LoopConnector);
  EXPECT_SGK_ERROR(cayley_graph(z6, ids_of(z6, "(1 2 3 4 5 6)")), NotInverseClosed);
}

TEST(Sabidussi, TrivialSubgroupIsCayley) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto d = ids_of(s4, "(1 2),(1 2 3 4),(1 4 3 2)");
  auto sab = sabidussi_graph(s4, Subgroup::trivial(s4), d);
  auto cay = cayley_graph(s4, d);
  EXPECT_EQ(sab.vertex_count(), 24u);
  EXPECT_EQ(sab, cay);
}

TEST(Sabidussi, S4OverStabilizerIsK4) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = point_stabilizer(s4);
  auto d = double_coset(s4, h, s4.id_of(parse_cycles("(1 2)", 4)));
  auto g = sabidussi_graph(s4, h, d);
  EXPECT_TRUE(fixtures::isomorphic(g, complete_graph(4)));
  auto cs = right_cosets(s4, h);
  EXPECT_TRUE(verify_action(g, s4, cs.action(s4)).vertex_transitive);
  // Brute force: Hx ~ Hy iff some element of Hx (Hy)^-1 lies in D.
  std::set<ElementId> dset(d.begin(), d.end());
  for (std::uint32_t c1 = 0; c1 < cs.size(); ++c1) {
    for (std::uint32_t c2 = 0; c2 < cs.size(); ++c2) {
      bool adj = false;
      for (ElementId x : cs.cosets[c1])
        for (ElementId y : cs.cosets[c2]) adj = adj || dset.count(s4.multiply(x, s4.inverse(y)));
      EXPECT_EQ(g.has_arc(c1, c2), adj);
    }
  }
}

TEST(Sabidussi, InvariantViolations) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = point_stabilizer(s4);
  EXPECT_SGK_ERROR(sabidussi_graph(s4, h, ids_of(s4, "(2 3)")), SpecInvariantViolated);
  EXPECT_SGK_ERROR(sabidussi_graph(s4, Subgroup::trivial(s4), ids_of(s4, "(1 2 3 4)")), SpecInvariantViolated);
  // Not a union of H double cosets.
  EXPECT_SGK_ERROR(sabidussi_graph(s4, h, ids_of(s4, "(1 2)")), SpecInvariantViolated);
}

TEST(SymmetricCosetGraph, S4GivesK4) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto r = symmetric_coset_graph(s4, point_stabilizer(s4), s4.id_of(parse_cycles("(1 2)", 4)));
  EXPECT_TRUE(are_isomorphic(r.graph, complete_graph(4)));
  EXPECT_EQ(r.valency_formula, 3u);
  EXPECT_EQ(r.graph.regular_valency(), 3u);
  EXPECT_EQ(r.arc_stabilizer_order, 2u);
  EXPECT_TRUE(r.arc_stabilizer_matches);
  EXPECT_EQ(r.kernel_order, 1u);
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.generates);
  EXPECT_TRUE(r.report.symmetric());
}

TEST(SymmetricCosetGraph, S5GivesK5) {
  auto s5 = fixtures::group("s5.grp");
  auto r = symmetric_coset_graph(s5, point_stabilizer(s5), s5.id_of(parse_cycles("(1 2)", 5)));
  EXPECT_TRUE(are_isomorphic(r.graph, complete_graph(5)));
  EXPECT_EQ(r.valency_formula, 4u);
  EXPECT_TRUE(r.report.symmetric());
}

TEST(SymmetricCosetGraph, Errors) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = point_stabilizer(s4);
  EXPECT_SGK_ERROR(symmetric_coset_graph(s4, h, s4.id_of(parse_cycles("(1 2 3)", 4))), NotInvolution);
  EXPECT_SGK_ERROR(symmetric_coset_graph(s4, h, s4.id_of(parse_cycles("(2 3)", 4))), InsideSubgroup);
}

TEST(SymmetricCosetGraph, DisconnectedWhenNotGenerating) {
  // H = <(2 3)>, a = (1 4) in S4: <H, a> has order 4, so the 12 cosets split into 24/4 = 6 components.
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = Subgroup::generated_by(s4, parse_permutation_list("(2 3)", 4));
  auto r = symmetric_coset_graph(s4, h, s4.id_of(parse_cycles("(1 4)", 4)));
  EXPECT_FALSE(r.generates);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(oracle::components(12, fixtures::edges(r.graph)), 6);
  EXPECT_TRUE(r.report.symmetric());
}

TEST(SymmetricCosetGraph, ValencyAndArcStabilizerLawsOnFixtures) {
  for (const char* file : {"s4.grp", "d6.grp", "octahedron.grp", "s5_pairs.grp", "q3.grp"}) {
    auto g = fixtures::group(file);
    auto h = point_stabilizer(g);
    for (ElementId a = 1; a < g.order(); ++a) {
      if (g.multiply(a, a) != 0 || h.contains(a)) continue;
      auto r = symmetric_coset_graph(g, h, a);
      for (Vertex v = 0; v < r.graph.vertex_count(); ++v) EXPECT_EQ(r.graph.valency(v), r.valency_formula) << file;
      EXPECT_TRUE(r.arc_stabilizer_matches) << file;
      EXPECT_TRUE(r.report.symmetric()) << file;
    }
  }
}

std::set<std::set<Arc>> oracle_orbitals(const GroupTable& g) {
  auto all = oracle::closure(fixtures::raw_generators(g), static_cast<int>(g.degree()));
  std::set<std::set<Arc>> out;
  std::set<Arc> done;
  for (Point a = 0; a < g.degree(); ++a) {
    for (Point b = 0; b < g.degree(); ++b) {
      if (done.count({a, b})) continue;
      std::set<Arc> orb;
      for (const auto& p : all) orb.insert({static_cast<Vertex>(p[a]), static_cast<Vertex>(p[b])});
      done.insert(orb.begin(), orb.end());
      out.insert(orb);
    }
  }
  return out;
}

TEST(Orbitals, MatchPairOrbitOracle) {
  for (const char* file : {"s4.grp", "z6.grp", "d6.grp", "s5_pairs.grp", "octahedron.grp", "q3.grp"}) {
    auto g = fixtures::group(file);
    auto orbs = orbitals(g, g.degree());
    std::set<std::set<Arc>> got;
    for (const auto& o : orbs) got.insert(std::set<Arc>(o.pairs.begin(), o.pairs.end()));
    EXPECT_EQ(got, oracle_orbitals(g)) << file;
    EXPECT_TRUE(orbs[0].diagonal);
    // Rank equals the number of stabilizer orbits.
    auto stab = stabilizer(g, 0);
    EXPECT_EQ(orbs.size(), orbits(stab).size()) << file;
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      std::set<Arc> rev;
      for (auto [u, v] : orbs[i].pairs) rev.insert({v, u});
      const auto& partner = orbs[orbs[i].paired_with].pairs;
      EXPECT_EQ(rev, std::set<Arc>(partner.begin(), partner.end()));
      EXPECT_EQ(orbs[i].self_paired, orbs[i].paired_with == i);
    }
  }
}

TEST(Orbitals, Examples) {
  EXPECT_EQ(orbitals(fixtures::group("s4.grp"), 4).size(), 2u);
  auto z6 = orbitals(fixtures::group("z6.grp"), 6);
  ASSERT_EQ(z6.size(), 6u);
  std::size_t self_paired_nondiag = 0;
  for (const auto& o : z6) {
    if (!o.diagonal && o.self_paired) {
      ++self_paired_nondiag;
      EXPECT_TRUE(std::find(o.pairs.begin(), o.pairs.end(), Arc{0, 3}) != o.pairs.end());
    }
  }
  EXPECT_EQ(self_paired_nondiag, 1u);
  auto s5 = orbitals(fixtures::group("s5_pairs.grp"), 10);
  ASSERT_EQ(s5.size(), 3u);
  for (const auto& o : s5) EXPECT_TRUE(o.self_paired);
  EXPECT_SGK_ERROR(orbitals(make_group(3, "(1 2)"), 3), NotTransitive);
}

TEST(OrbitalGraph, PetersenAndK4) {
  auto s5 = fixtures::group("s5_pairs.grp");
  auto orbs = orbitals(s5, 10);
  // 2-subsets {1,2} (vertex 0) and {3,4} (vertex 7) are disjoint.
  const Orbital* disjoint = nullptr;
  for (const auto& o : orbs)
    if (std::find(o.pairs.begin(), o.pairs.end(), Arc{0, 7}) != o.pairs.end()) disjoint = &o;
  ASSERT_NE(disjoint, nullptr);
  auto pet = orbital_graph(s5, 10, disjoint->pairs);
  EXPECT_EQ(pet.regular_valency(), 3u);
  EXPECT_EQ(oracle::girth(10, fixtures::edges(pet)), 5);
  EXPECT_TRUE(are_isomorphic(pet, fixtures::graph("petersen.graph")));
  EXPECT_TRUE(verify_action(pet, s5).symmetric());

  auto s4 = fixtures::group("s4.grp");
  auto s4o = orbitals(s4, 4);
  EXPECT_EQ(orbital_graph(s4, 4, s4o[1].pairs), complete_graph(4));
  EXPECT_SGK_ERROR(orbital_graph(s4, 4, s4o[0].pairs), DiagonalOrbital);
}

TEST(OrbitalGraph, NonSelfPairedAndNotAnOrbital) {
  auto z3 = fixtures::group("z3.grp");
  auto o = orbitals(z3, 3);
  ASSERT_EQ(o.size(), 3u);
  EXPECT_SGK_ERROR(orbital_graph(z3, 3, o[1].pairs), NotSelfPaired);
  std::vector<Arc> junk{{0, 1}};
  EXPECT_SGK_ERROR(orbital_graph(fixtures::group("s4.grp"), 4, junk), InvalidArgument);
}

TEST(Lorimer, S4PointStabilizer) {
  auto s4 = fixtures::group("s4.grp");
  auto dict = orbital_double_coset_map(s4, point_stabilizer(s4));
  ASSERT_EQ(dict.classes.size(), 2u);
  EXPECT_TRUE(dict.bijective);
  EXPECT_TRUE(dict.flags_agree);
  EXPECT_EQ(dict.classes.classes[1].size(), 18u);
  EXPECT_TRUE(dict.classes.contains_involution[1]);
  EXPECT_EQ(dict.orbitals[dict.orbital_of[1]].pairs.size(), 12u);
}

TEST(Lorimer, TrivialSubgroupAndS5) {
  auto d6 = fixtures::group("d6.grp");
  auto dict = orbital_double_coset_map(d6, Subgroup::trivial(d6));
  EXPECT_EQ(dict.classes.size(), 12u);
  EXPECT_EQ(dict.orbitals.size(), 12u);
  EXPECT_TRUE(dict.bijective);
  EXPECT_TRUE(dict.flags_agree);
  auto s5 = fixtures::group("s5.grp");
  EXPECT_EQ(orbital_double_coset_map(s5, point_stabilizer(s5)).classes.size(), 2u);
}

TEST(Lorimer, FlagsAgreeOnFixtureSubgroups) {
  for (const char* file : {"s4.grp", "d4.grp", "z6.grp", "octahedron.grp", "q3.grp"}) {
    auto g = fixtures::group(file);
    for (const auto& entry : subgroup_block_lattice(g, 0)) {
      auto dict = orbital_double_coset_map(g, entry.subgroup);
      EXPECT_TRUE(dict.bijective) << file;
      EXPECT_TRUE(dict.flags_agree) << file;
    }
  }
}

TEST(Recognize, K4UnderS4) {
  auto s4 = fixtures::group("s4.grp");
  auto rec = recognize_as_coset_graph(complete_graph(4), s4);
  EXPECT_EQ(rec.stabilizer.order(), 6u);
  EXPECT_EQ(s4.element(rec.involution).order(), 2u);
  EXPECT_EQ(s4.element(rec.involution).to_cycles().size(), 5u);  // a transposition
  EXPECT_TRUE(rec.isomorphism.has_value());
}

TEST(Recognize, C6UnderD6) {
  auto d6 = fixtures::group("d6.grp");
  auto rec = recognize_as_coset_graph(cycle_graph(6), d6);
  EXPECT_EQ(rec.stabilizer.order(), 2u);
  const auto& a = d6.element(rec.involution);
  EXPECT_TRUE(cycle_graph(6).has_arc(0, a(0)));
  EXPECT_TRUE(rec.isomorphism.has_value());
}

TEST(Recognize, PetersenRoundTrip) {
  auto s5 = fixtures::group("s5_pairs.grp");
  auto pet = fixtures::graph("petersen.graph");
  auto rec = recognize_as_coset_graph(pet, s5);
  EXPECT_EQ(rec.stabilizer.order(), 12u);
  ASSERT_TRUE(rec.isomorphism.has_value());
  EXPECT_TRUE(fixtures::isomorphic(rec.rebuilt.graph, pet));
}

TEST(Recognize, Errors) {
  EXPECT_SGK_ERROR(recognize_as_coset_graph(cycle_graph(6), fixtures::group("z6.grp")), NotSymmetric);
}

TEST(Recognize, RoundTripOnFixtures) {
  for (const char* file : {"s4.grp", "d6.grp", "octahedron.grp", "q3.grp", "s5.grp"}) {
    auto g = fixtures::group(file);
    auto h = point_stabilizer(g);
    for (ElementId a = 1; a < g.order(); ++a) {
      if (g.multiply(a, a) != 0 || h.contains(a)) continue;
      auto built = symmetric_coset_graph(g, h, a);
      auto cs = right_cosets(g, h);
      auto action_group = cs.induced_group(g);
      auto rec = recognize_as_coset_graph(built.graph, action_group);
      EXPECT_TRUE(rec.isomorphism.has_value()) << file;
      EXPECT_TRUE(fixtures::isomorphic(rec.rebuilt.graph, built.graph)) << file;
      break;
    }
  }
}

}  // namespace
}  // namespace sgk
