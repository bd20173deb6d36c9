#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgk/isomorphism.hpp"
#include "sgk/quotients.hpp"
#include "sgk_testing.hpp"

namespace sgk {
namespace {

using fixtures::make_group;

BlockSystem antipodal6() { return BlockSystem(6, {{0, 3}, {1, 4}, {2, 5}}); }

BlockSystem k4_fibers() { return read_block_system_file(fixtures::path("k4_fibers.blocks"), 8); }

// Quotient adjacency straight from the definition.
oracle::Edges quotient_oracle(const Graph& g, const BlockSystem& p) {
  oracle::Edges e;
  for (auto [u, v] : g.arcs()) {
    if (p.block_of(u) != p.block_of(v)) e.insert({static_cast<int>(p.block_of(u)), static_cast<int>(p.block_of(v))});
  }
  return e;
}

TEST(QuotientGraph, CubeOverFibersIsK4) {
  auto q3 = fixtures::graph("q3.graph");
  auto g = fixtures::group("q3.grp");
  auto q = quotient_graph(q3, g, k4_fibers());
  EXPECT_EQ(fixtures::edges(q), quotient_oracle(q3, k4_fibers()));
  EXPECT_TRUE(are_isomorphic(q, complete_graph(4)));
  EXPECT_EQ(q.label(0), "B1:01");
  EXPECT_TRUE(verify_action(q, g, block_action(g, k4_fibers())).symmetric());
}

TEST(QuotientGraph, SingletonAndWholePartitions) {
  auto k4 = complete_graph(4);
  auto s4 = fixtures::group("s4.grp");
  auto same = quotient_graph(k4, s4, BlockSystem::singletons(4));
  EXPECT_EQ(fixtures::edges(same), fixtures::edges(k4));
  auto point = quotient_graph(k4, s4, BlockSystem::whole(4));
  EXPECT_EQ(point.vertex_count(), 1u);
  EXPECT_EQ(point.arc_count(), 0u);
}

TEST(QuotientGraph, Errors) {
  auto d6 = fixtures::group("d6.grp");
  EXPECT_SGK_ERROR(quotient_graph(cycle_graph(6), d6, BlockSystem(6, {{0, 1}, {2, 3}, {4, 5}})), NotInvariant);
  auto z6 = fixtures::group("z6.grp");
  EXPECT_SGK_ERROR(quotient_graph(cycle_graph(6), z6, antipodal6()), NotSymmetric);
}

TEST(QuotientGraph, MatchesOracleOnEveryBlockSystem) {
  struct Case {
    const char* graph;
    const char* group;
  };
  for (auto c : {Case{"q3.graph", "q3.grp"}, Case{"c6.graph", "d6.grp"}, Case{"petersen.graph", "s5_pairs.grp"}}) {
    auto g = fixtures::graph(c.graph);
    auto grp = fixtures::group(c.group);
    for (const auto& p : all_block_systems(grp)) {
      auto q = quotient_graph(g, grp, p);
      EXPECT_EQ(fixtures::edges(q), quotient_oracle(g, p)) << c.graph;
      if (q.arc_count() > 0) EXPECT_TRUE(verify_action(q, grp, block_action(grp, p)).symmetric()) << c.graph;
    }
  }
}

TEST(InducedBipartite, CubeFibersGiveMatchings) {
  auto q3 = fixtures::graph("q3.graph");
  auto p = k4_fibers();
  for (std::uint32_t b = 0; b < 4; ++b) {
    for (std::uint32_t c = 0; c < 4; ++c) {
      if (b == c) continue;
      auto bip = induced_bipartite(q3, p, b, c);
      EXPECT_EQ(bip.vertex_count(), 4u);
      EXPECT_EQ(bip.edge_count(), 2u);
      EXPECT_EQ(bip.regular_valency(), 1u);
    }
  }
}

TEST(InducedBipartite, C6Antipodal) {
  auto bip = induced_bipartite(cycle_graph(6), antipodal6(), 0, 1);
  EXPECT_EQ(bip.vertex_count(), 4u);
  EXPECT_EQ(bip.edge_count(), 2u);
  EXPECT_EQ(oracle::components(4, fixtures::edges(bip)), 2);
}

TEST(InducedBipartite, SingletonsAndErrors) {
  auto bip = induced_bipartite(complete_graph(4), BlockSystem::singletons(4), 0, 2);
  EXPECT_EQ(bip.vertex_count(), 2u);
  EXPECT_EQ(bip.edge_count(), 1u);
  EXPECT_SGK_ERROR(induced_bipartite(cycle_graph(4), BlockSystem::singletons(4), 0, 2), NotQuotientArc);
  EXPECT_SGK_ERROR(induced_bipartite(cycle_graph(4), BlockSystem::singletons(4), 1, 1), NotQuotientArc);
}

TEST(CoverClass, Examples) {
  EXPECT_EQ(cover_class(fixtures::graph("q3.graph"), k4_fibers()), CoverClass::Cover);
  EXPECT_EQ(cover_class(complete_graph(4), BlockSystem::singletons(4)), CoverClass::Cover);
  // K_{3,3} over the pairs {i, i+3}: every vertex sees both vertices of each other pair on the far side.
  std::vector<Arc> k33;
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) k33.emplace_back(u, v);
  auto g = Graph::from_edges(6, k33);
  EXPECT_EQ(cover_class(g, BlockSystem(6, {{0, 1}, {2, 3}, {4, 5}})), CoverClass::Neither);
  EXPECT_EQ(cover_class(complete_graph(6), BlockSystem(6, {{0, 1}, {2, 3}, {4, 5}})), CoverClass::MulticoverProper);
  EXPECT_EQ(to_string(CoverClass::MulticoverProper), "multicover_proper");
  EXPECT_SGK_ERROR(cover_class(complete_graph(3), BlockSystem::whole(3)), TrivialQuotient);
}

TEST(CoverClass, CoverArithmetic) {
  auto q3 = fixtures::graph("q3.graph");
  auto p = k4_fibers();
  ASSERT_EQ(cover_class(q3, p), CoverClass::Cover);
  auto q = quotient_graph(q3, p);
  EXPECT_EQ(q3.vertex_count(), p.block(0).size() * q.vertex_count());
  EXPECT_EQ(q3.regular_valency(), q.regular_valency());
}

TEST(CrossSection, CubeOverK4) {
  auto d = cross_section_design(fixtures::graph("q3.graph"), fixtures::group("q3.grp"), k4_fibers(), 0);
  // Each fibre vertex has one neighbour in every other fibre, so both points see all three blocks.
  EXPECT_EQ(d.params.v, 2u);
  EXPECT_EQ(d.params.b, 3u);
  EXPECT_EQ(d.params.k, 2u);
  EXPECT_EQ(d.params.lambda, 3u);
  EXPECT_EQ(d.params.v * d.params.lambda, d.params.b * d.params.k);
  EXPECT_TRUE(d.flag_transitive);
}

TEST(CrossSection, SingletonsAndC6) {
  auto d = cross_section_design(fixtures::graph("petersen.graph"), fixtures::group("s5_pairs.grp"),
                                BlockSystem::singletons(10), 4);
  EXPECT_EQ(d.params.v, 1u);
  EXPECT_EQ(d.params.k, 1u);
  EXPECT_EQ(d.params.lambda, 3u);
  auto c = cross_section_design(cycle_graph(6), fixtures::group("d6.grp"), antipodal6(), 0);
  EXPECT_EQ(c.params.v, 2u);
  EXPECT_EQ(c.params.b, 2u);
  EXPECT_EQ(c.params.k, 2u);
  EXPECT_EQ(c.params.lambda, 2u);
  EXPECT_TRUE(c.flag_transitive);
  EXPECT_SGK_ERROR(cross_section_design(cycle_graph(6), fixtures::group("d6.grp"), BlockSystem::whole(6), 0),
                   TrivialQuotient);
}

TEST(Certificate, CubeOverFibers) {
  auto g = fixtures::group("q3.grp");
  auto cert = certify_quotient(fixtures::graph("q3.graph"), g, k4_fibers());
  EXPECT_TRUE(cert.nontrivial);
  EXPECT_TRUE(cert.blocks_independent);
  ASSERT_TRUE(cert.cover);
  EXPECT_EQ(*cert.cover, CoverClass::Cover);
  EXPECT_TRUE(cert.bipartite_all_isomorphic);
  EXPECT_EQ(cert.bipartite_pattern.edge_count(), 2u);
  ASSERT_TRUE(cert.design);
  EXPECT_TRUE(cert.quotient_report.symmetric());
  EXPECT_TRUE(cert.homomorphism_law);
  // N = <(1 2)(3 4)(5 6)(7 8)> is the kernel on the quotient.
  EXPECT_EQ(cert.quotient_report.action_kernel_size, 2u);
}

TEST(Certificate, TrivialQuotient) {
  auto s4 = fixtures::group("s4.grp");
  EXPECT_SGK_ERROR(certify_quotient(complete_graph(4), s4, BlockSystem::whole(4)), TrivialQuotient);
  auto cert = certify_quotient(complete_graph(4), s4, BlockSystem::whole(4), true);
  EXPECT_FALSE(cert.nontrivial);
  EXPECT_FALSE(cert.blocks_independent);
  EXPECT_FALSE(cert.cover);
}

TEST(Certificate, NontrivialIffIndependentBlocks) {
  auto g = fixtures::group("q3.grp");
  auto q3 = fixtures::graph("q3.graph");
  for (const auto& p : all_block_systems(g)) {
    auto cert = certify_quotient(q3, g, p, true);
    EXPECT_EQ(cert.nontrivial, cert.blocks_independent);
    EXPECT_EQ(cert.nontrivial, quotient_graph(q3, p).arc_count() > 0);
    EXPECT_TRUE(cert.homomorphism_law);
    if (cert.design) {
      const auto& d = cert.design->params;
      EXPECT_EQ(d.v * d.lambda, d.b * d.k);
    }
  }
}

TEST(CosetQuotient, HexagonOverTriangle) {
  auto d6 = fixtures::group("d6.grp");
  auto h = Subgroup::generated_by(d6, parse_permutation_list("(2 6)(3 5)", 6));
  auto k = Subgroup::generated_by(d6, parse_permutation_list("(2 6)(3 5),(1 4)(2 5)(3 6)", 6));
  ElementId a = d6.id_of(parse_cycles("(1 2)(3 6)(4 5)", 6));
  auto r = quotient_as_coset_graph(d6, h, a, k);
  EXPECT_TRUE(are_isomorphic(r.fine.graph, cycle_graph(6)));
  EXPECT_TRUE(are_isomorphic(r.coarse.graph, cycle_graph(3)));
  EXPECT_TRUE(r.block_in_lattice);
  EXPECT_TRUE(r.isomorphism.has_value());
}

TEST(CosetQuotient, CubeOverK4) {
  auto g = fixtures::group("q3.grp");
  auto h = Subgroup::from_ids(g, stabilizer_ids(g, 0));
  std::vector<Point> fiber{0, 1};
  auto k = setwise_stabilizer(g, fiber);
  ASSERT_EQ(k.order(), 2 * h.order());
  // Least involution outside K that moves vertex 1 to a cube neighbour.
  auto q3 = fixtures::graph("q3.graph");
  ElementId a = 0;
  for (ElementId x = 1; x < g.order(); ++x) {
    if (g.multiply(x, x) == 0 && !k.contains(x) && q3.has_arc(0, g.element(x)(0))) {
      a = x;
      break;
    }
  }
  ASSERT_NE(a, 0u);
  auto r = quotient_as_coset_graph(g, h, a, k);
  EXPECT_TRUE(are_isomorphic(r.fine.graph, q3));
  EXPECT_TRUE(are_isomorphic(r.coarse.graph, complete_graph(4)));
  EXPECT_TRUE(r.isomorphism.has_value());
}

TEST(CosetQuotient, Errors) {
  auto d6 = fixtures::group("d6.grp");
  auto h = Subgroup::generated_by(d6, parse_permutation_list("(2 6)(3 5)", 6));
  ElementId a = d6.id_of(parse_cycles("(1 2)(3 6)(4 5)", 6));
  EXPECT_SGK_ERROR(quotient_as_coset_graph(d6, h, a, h), NotNested);
  EXPECT_SGK_ERROR(quotient_as_coset_graph(d6, h, a, Subgroup::whole(d6)), NotNested);
  auto k = Subgroup::generated_by(d6, parse_permutation_list("(2 6)(3 5),(1 4)(2 5)(3 6)", 6));
  ElementId inside = d6.id_of(parse_cycles("(1 4)(2 5)(3 6)", 6));
  EXPECT_SGK_ERROR(quotient_as_coset_graph(d6, h, inside, k), DegenerateQuotient);
}

}  // namespace
}  // namespace sgk
