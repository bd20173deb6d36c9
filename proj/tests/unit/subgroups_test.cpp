#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgk/subgroups.hpp"
#include "sgk_testing.hpp"

namespace sgk {
namespace {

using fixtures::make_group;

Subgroup generated(const GroupTable& g, const std::string& gens) {
  auto perms = parse_permutation_list(gens, g.degree());
  return Subgroup::generated_by(g, perms);
}

std::set<std::vector<Point>> block_set(const BlockSystem& b) {
  return {b.blocks().begin(), b.blocks().end()};
}

TEST(Subgroup, GeneratedAndValidation) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = generated(s4, "(2 3),(3 4)");
  EXPECT_EQ(h.order(), 6u);
  EXPECT_TRUE(h.contains(0));
  EXPECT_SGK_ERROR(Subgroup::from_ids(s4, {0, s4.id_of(parse_cycles("(1 2 3)", 4))}), NotASubgroup);
  EXPECT_EQ(Subgroup::from_ids(s4, h.ids()), h);
  EXPECT_TRUE(Subgroup::trivial(s4).is_subset_of(h));
  EXPECT_TRUE(h.is_subset_of(Subgroup::whole(s4)));
}

TEST(Subgroup, ForeignParentRejected) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto s3 = make_group(3, "(1 2),(1 2 3)");
  auto h = Subgroup::whole(s3);
  EXPECT_SGK_ERROR(right_cosets(s4, h), NotASubgroup);
}

TEST(Subgroup, ConjugateIntersectNormal) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = generated(s4, "(2 3),(3 4)");  // stabilizer of 1
  ElementId x = s4.id_of(parse_cycles("(1 2)", 4));
  auto c = conjugate(s4, h, x);  // stabilizer of 2
  for (ElementId id : c.ids()) EXPECT_EQ(s4.element(id)(1), 1u);
  EXPECT_EQ(intersect(s4, h, c).order(), 2u);
  EXPECT_FALSE(is_normal(s4, h));
  EXPECT_TRUE(is_normal(s4, generated(s4, "(1 2)(3 4),(1 3)(2 4)")));
  EXPECT_TRUE(is_normal(s4, Subgroup::trivial(s4)));
}

TEST(RightCosets, IndexAndAction) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = generated(s4, "(2 3),(3 4)");
  auto cs = right_cosets(s4, h);
  EXPECT_EQ(cs.size(), 4u);
  EXPECT_EQ(cs.cosets[0], h.ids());
  std::set<ElementId> seen;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    EXPECT_EQ(cs.representatives[i], cs.cosets[i].front());
    for (ElementId e : cs.cosets[i]) {
      EXPECT_TRUE(seen.insert(e).second);
      EXPECT_EQ(cs.coset_of[e], i);
    }
  }
  // (Hx)^g = Hxg
  for (ElementId g = 0; g < s4.order(); ++g) {
    for (std::uint32_t c = 0; c < cs.size(); ++c) {
      ElementId xg = s4.multiply(cs.representatives[c], g);
      EXPECT_EQ(cs.act(s4, c, g), cs.coset_of[xg]);
    }
  }
  EXPECT_EQ(cs.kernel(s4).size(), 1u);
  EXPECT_EQ(cs.induced_group(s4).order(), 24u);
}

TEST(RightCosets, CoreAndKernel) {
  auto d4 = make_group(4, "(1 2 3 4),(1 3)");
  auto h = generated(d4, "(1 3)(2 4)");  // centre
  EXPECT_EQ(core(d4, h), h);
  auto cs = right_cosets(d4, h);
  EXPECT_EQ(cs.kernel(d4), h.ids());
  EXPECT_EQ(cs.induced_group(d4).order(), 4u);
  auto refl = generated(d4, "(2 4)");
  EXPECT_EQ(core(d4, refl).order(), 1u);
}

TEST(DoubleCosets, S4OverPointStabilizer) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto h = generated(s4, "(2 3),(3 4)");
  auto dc = double_cosets(s4, h);
  ASSERT_EQ(dc.size(), 2u);
  EXPECT_EQ(dc.classes[0], h.ids());
  EXPECT_EQ(dc.classes[1].size(), 18u);
  EXPECT_TRUE(dc.contains_involution[0]);
  EXPECT_TRUE(dc.contains_involution[1]);
}

TEST(DoubleCosets, MatchBruteForce) {
  for (const char* file : {"s4.grp", "d6.grp", "octahedron.grp", "s5_pairs.grp"}) {
    auto g = fixtures::group(file);
    auto h = Subgroup::from_table(g, stabilizer(g, 0));
    auto dc = double_cosets(g, h);
    std::size_t total = 0;
    for (std::size_t i = 0; i < dc.size(); ++i) {
      std::set<ElementId> brute;
      ElementId x = dc.representatives[i];
      for (ElementId a : h.ids())
        for (ElementId b : h.ids()) brute.insert(g.multiply(g.multiply(a, x), b));
      EXPECT_EQ(std::vector<ElementId>(brute.begin(), brute.end()), dc.classes[i]);
      EXPECT_EQ(double_coset(g, h, x), dc.classes[i]);
      bool inv = false;
      for (ElementId a : dc.classes[i]) inv = inv || g.multiply(a, a) == 0;
      EXPECT_EQ(inv, dc.contains_involution[i]);
      total += dc.classes[i].size();
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(BlockSystem, ConstructionErrors) {
  EXPECT_SGK_ERROR(BlockSystem(3, {{0, 1}}), InvalidPartition);
  EXPECT_SGK_ERROR(BlockSystem(3, {{0, 1}, {1, 2}}), InvalidPartition);
  EXPECT_SGK_ERROR(BlockSystem(3, {{0, 1, 2}, {}}), InvalidPartition);
  BlockSystem b(4, {{3, 1}, {2, 0}});
  EXPECT_EQ(b.block(0), (std::vector<Point>{0, 2}));
  EXPECT_EQ(b.block_of(3), 1u);
  std::vector<std::uint32_t> labels{5, 7, 5, 7};
  EXPECT_EQ(BlockSystem::from_labels(labels), b);
}

TEST(BlockSystem, BlockPermutation) {
  auto d4 = make_group(4, "(1 2 3 4),(1 3)");
  BlockSystem b(4, {{0, 2}, {1, 3}});
  EXPECT_TRUE(b.is_invariant_under(d4));
  EXPECT_EQ(b.block_permutation(parse_cycles("(1 2 3 4)", 4)).to_cycles(), "(1 2)");
  BlockSystem bad(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(bad.is_invariant_under(d4));
  EXPECT_SGK_ERROR(bad.block_permutation(parse_cycles("(1 3)", 4)), NotInvariant);
}

TEST(MinimalBlock, Examples) {
  auto d4 = make_group(4, "(1 2 3 4),(1 3)");
  EXPECT_EQ(minimal_block(d4, 0, 2), (std::vector<Point>{0, 2}));
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  EXPECT_EQ(minimal_block(s4, 0, 1), (std::vector<Point>{0, 1, 2, 3}));
  EXPECT_SGK_ERROR(minimal_block(make_group(3, "(1 2)"), 0, 1), NotTransitive);
  EXPECT_SGK_ERROR(minimal_block(d4, 1, 1), InvalidArgument);
}

TEST(AllBlockSystems, MatchPartitionOracle) {
  for (const char* file : {"s4.grp", "d4.grp", "d6.grp", "z6.grp", "octahedron.grp", "q3.grp"}) {
    auto g = fixtures::group(file);
    std::set<std::set<std::vector<Point>>> expected;
    for (const auto& labels : oracle::set_partitions(static_cast<int>(g.degree()))) {
      if (!oracle::partition_invariant(labels, fixtures::raw_generators(g))) continue;
      std::vector<std::uint32_t> l(labels.begin(), labels.end());
      expected.insert(block_set(BlockSystem::from_labels(l)));
    }
    std::set<std::set<std::vector<Point>>> got;
    auto systems = all_block_systems(g);
    for (const auto& b : systems) got.insert(block_set(b));
    EXPECT_EQ(got.size(), systems.size()) << file;
    EXPECT_EQ(got, expected) << file;
  }
}

TEST(AllBlockSystems, OctahedronAntipodal) {
  auto g = fixtures::group("octahedron.grp");
  auto systems = all_block_systems(g);
  ASSERT_EQ(systems.size(), 3u);
  bool antipodal = false;
  for (const auto& b : systems) antipodal = antipodal || b == BlockSystem(6, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_TRUE(antipodal);
}

TEST(SetwiseStabilizer, Examples) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  std::vector<Point> pair{0, 1};
  EXPECT_EQ(setwise_stabilizer(s4, pair).order(), 4u);
  std::vector<Point> empty;
  EXPECT_SGK_ERROR(setwise_stabilizer(s4, empty), InvalidArgument);
}

TEST(Lattice, S4PointStabilizerIsMaximal) {
  auto s4 = make_group(4, "(1 2),(1 2 3 4)");
  auto lat = subgroup_block_lattice(s4, 0);
  ASSERT_EQ(lat.size(), 2u);
  EXPECT_EQ(lat[0].subgroup.order(), 6u);
  EXPECT_EQ(lat[0].block, (std::vector<Point>{0}));
  EXPECT_EQ(lat[1].block.size(), 4u);
  EXPECT_TRUE(lattice_is_order_isomorphic(lat));
}

TEST(Lattice, MatchesBlocksThroughBasePoint) {
  for (const char* file : {"d4.grp", "d6.grp", "z6.grp", "octahedron.grp", "q3.grp", "s5_pairs.grp"}) {
    auto g = fixtures::group(file);
    auto lat = subgroup_block_lattice(g, 0);
    std::set<std::vector<Point>> from_lattice;
    for (const auto& e : lat) {
      from_lattice.insert(e.block);
      // K = stabilizer of the block.
      EXPECT_EQ(e.subgroup, setwise_stabilizer(g, e.block)) << file;
    }
    std::set<std::vector<Point>> from_systems;
    for (const auto& b : all_block_systems(g)) from_systems.insert(b.block(b.block_of(0)));
    EXPECT_EQ(from_lattice, from_systems) << file;
    EXPECT_EQ(lat.size(), from_lattice.size());
    EXPECT_TRUE(lattice_is_order_isomorphic(lat)) << file;
  }
}

TEST(Lattice, CapExceeded) {
  auto g = fixtures::group("q3.grp");
  EXPECT_SGK_ERROR(subgroup_block_lattice(g, 0, 1), SubgroupEnumerationCapExceeded);
}

TEST(IntermediateSubgroups, BetweenTrivialAndZ6) {
  auto z6 = make_group(6, "(1 2 3 4 5 6)");
  auto subs = intermediate_subgroups(z6, Subgroup::trivial(z6), Subgroup::whole(z6));
  ASSERT_EQ(subs.size(), 4u);
  std::vector<std::size_t> orders;
  for (const auto& s : subs) orders.push_back(s.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 6}));
}

TEST(BlockFile, RoundTrip) {
  std::istringstream in("# antipodal\n1 2\n3 4\n5 6\n");
  auto b = read_block_system(in, 6);
  EXPECT_EQ(b.block_count(), 3u);
  std::ostringstream out;
  write_block_system(out, b);
  std::istringstream again(out.str());
  EXPECT_EQ(read_block_system(again, 6), b);
  std::istringstream bad("1 2\n2 3\n");
  EXPECT_SGK_ERROR(read_block_system(bad, 3), InvalidPartition);
  EXPECT_EQ(read_block_system_file(fixtures::path("c6_antipodal.blocks"), 6).block_count(), 3u);
}

}  // namespace
}  // namespace sgk
