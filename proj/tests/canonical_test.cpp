#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hypertree/canonical.hpp"
#include "hypertree/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace hypertree;

std::vector<Tree> all_free_trees(std::size_t n) {
  return oracles::free_trees_by_brute_force(n, [](const Tree&) { return true; });
}

TEST(CanonicalCode, SmallExamples) {
  const auto arc = fixtures::arc_at_end();
  EXPECT_EQ(canonical_code(arc).str(), "(())");
  EXPECT_EQ(canonical_code(fixtures::star(3)).str(), "(()()())");
  EXPECT_EQ(canonical_code(fixtures::arc_at_interior()).str(), "(()())");
  EXPECT_EQ(free_code(arc.tree).str(), "[()()]");
}

TEST(CanonicalCode, EdgeRootedCodeIsSymmetric) {
  const auto t = fixtures::f2();
  const auto e = *t.tree.edge_between(*t.tree.find("p"), *t.tree.find("a"));
  EXPECT_EQ(edge_rooted_code(t.tree, e).str(), "[(()())(()())]");
}

TEST(Center, PathsAndStars) {
  EXPECT_EQ(center(fixtures::star(5).tree).size(), 1u);
  EXPECT_EQ(center(fixtures::f2().tree).size(), 2u);
  EXPECT_EQ(center(fixtures::f3().tree), std::vector<Vertex>{*fixtures::f3().tree.find("a")});
}

// Tree counts on n vertices (OEIS A000055) come out of the brute-force
// generator; the codes must separate exactly those classes.
TEST(CanonicalCodeOracle, FreeCodesSeparateIsomorphismClasses) {
  const std::vector<std::size_t> expected{0, 0, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto reps = all_free_trees(n);
    ASSERT_EQ(reps.size(), expected[n]) << n;
    std::set<CanonicalCode> codes;
    for (const auto& t : reps) codes.insert(free_code(t));
    EXPECT_EQ(codes.size(), reps.size()) << n;
  }
}

TEST(CanonicalCodeOracle, RootedCodesAgreeWithBijectionSearch) {
  for (std::size_t n = 2; n <= 7; ++n) {
    std::vector<PointedTree> pointed;
    for (const auto& t : all_free_trees(n))
      for (Vertex v = 0; v < t.vertex_count(); ++v) pointed.push_back({t, v});
    for (std::size_t i = 0; i < pointed.size(); ++i)
      for (std::size_t j = i; j < pointed.size(); ++j) {
        const bool brute = oracles::rooted_isomorphic(pointed[i].tree, pointed[i].basepoint, pointed[j].tree,
                                                      pointed[j].basepoint);
        EXPECT_EQ(canonical_code(pointed[i]) == canonical_code(pointed[j]), brute) << n << ' ' << i << ' ' << j;
      }
  }
}

TEST(CanonicalCodeProperty, InvariantUnderRelabeling) {
  std::uint64_t seed = 1;
  for (const auto& t : all_free_trees(8)) {
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      const PointedTree pt{t, v};
      const auto r = relabeled(pt, seed++);
      EXPECT_EQ(canonical_code(pt), canonical_code(r));
      EXPECT_EQ(free_code(pt.tree), free_code(r.tree));
    }
  }
}

TEST(Orbits, MatchAutomorphismOrbits) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& t : all_free_trees(n)) {
      const auto expected = oracles::orbits_by_automorphisms(t);
      const auto got = orbits(t);
      std::set<std::set<Vertex>> vs;
      for (const auto& o : got.vertices) vs.insert(std::set<Vertex>(o.begin(), o.end()));
      std::set<std::set<EdgeId>> es;
      for (const auto& o : got.edges) es.insert(std::set<EdgeId>(o.begin(), o.end()));
      EXPECT_EQ(vs, expected.vertices);
      EXPECT_EQ(es, expected.edges);
    }
  }
}

TEST(HomogeneityDegree, Examples) {
  EXPECT_EQ(homogeneity_degree(fixtures::arc_at_end().tree), 2);
  EXPECT_EQ(homogeneity_degree(fixtures::star(3).tree), 3);
  EXPECT_EQ(homogeneity_degree(fixtures::f2().tree), 4);
  // F3 has a reflection swapping p and b: vertex orbits {p,b}, {a}, {a1} and
  // the four outer leaves; edge orbits {pa,ab}, {a a1} and the outer legs.
  EXPECT_EQ(homogeneity_degree(fixtures::f3().tree), 4 + 3);
  // Subdivision does not change the topology.
  const auto sub = build_tree({{"v", "x1"}, {"v", "x2"}, {"v", "s"}, {"s", "x3"}}, "v");
  EXPECT_EQ(homogeneity_degree(sub.tree), 3);
}

}  // namespace
