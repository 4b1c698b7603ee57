#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hypertree/complex.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/verify.hpp"

namespace {

using namespace hypertree;

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::InternalInvariant;
}

TEST(TrimmedTree, Degenerate) {
  const auto arc = fixtures::arc_at_end();
  EXPECT_TRUE(trimmed_tree(arc).vertices.empty());
  const auto star = trimmed_tree(fixtures::star(4));
  EXPECT_EQ(star.vertices.size(), 1u);
  EXPECT_TRUE(star.edges.empty());
  const auto f3 = fixtures::f3();
  EXPECT_EQ(trimmed_tree(f3).edges.size(), 2u);
  EXPECT_EQ(trimmed_tree(f3).vertices.size(), 3u);
}

TEST(Subtrees, F3ContainingEachVertex) {
  const auto t = fixtures::f3();
  const auto trimmed = trimmed_tree(t);
  const auto at = [&](const char* name) {
    return subtrees_containing(t.tree, trimmed, *t.tree.find(name)).size();
  };
  EXPECT_EQ(at("p"), 3u);
  EXPECT_EQ(at("a"), 4u);
  EXPECT_EQ(at("b"), 3u);
  EXPECT_EQ(error_of([&] { subtrees_containing(t.tree, trimmed, *t.tree.find("p1")); }),
            ErrorCode::BasepointNotInTrimmedTree);
}

TEST(Subtrees, CountMatchesListAndSaturates) {
  const auto t = fixtures::figure_tree();
  const auto trimmed = trimmed_tree(t);
  const auto list = subtrees_containing(t.tree, trimmed, t.basepoint);
  EXPECT_EQ(count_subtrees_containing(t.tree, trimmed, t.basepoint, 1'000'000), list.size());
  EXPECT_EQ(count_subtrees_containing(t.tree, trimmed, t.basepoint, 5), 6u);
  EXPECT_EQ(list.size(), oracle::rooted_subtrees(t.tree, t.basepoint).size());
}

TEST(BuildComplex, F3) {
  const auto c = build_complex(fixtures::f3());
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.abstract().dims, (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(c.intersection(0, 1), 2);
  EXPECT_EQ(c.intersection(1, 2), 3);
  EXPECT_EQ(c.intersection(0, 2), std::nullopt);
  EXPECT_EQ(c.intersections.size(), 2u);
}

TEST(BuildComplex, StarHasOneCell) {
  const auto c = build_complex(fixtures::star(5));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.cells[0].dimension, 5);
  EXPECT_TRUE(c.intersections.empty());
}

TEST(BuildComplex, Errors) {
  EXPECT_EQ(error_of([] { build_complex(fixtures::arc_at_end()); }), ErrorCode::NeedsAugmentation);
  const auto unnormalized = build_tree({{"v", "x1"}, {"v", "x2"}, {"v", "s"}, {"s", "x3"}}, "v");
  EXPECT_EQ(error_of([&] { build_complex(unnormalized); }), ErrorCode::InvalidInput);
  EXPECT_EQ(error_of([] { build_complex(fixtures::f3(), {2, 1}); }), ErrorCode::ComplexTooLarge);
}

TEST(Augment, AttachesUpToThreeBranches) {
  EXPECT_EQ(augment(fixtures::arc_at_end()).attached, 2);
  EXPECT_EQ(augment(fixtures::arc_at_interior()).attached, 1);
  EXPECT_EQ(augment(fixtures::star(3)).attached, 0);
  const auto aug = augment(fixtures::star(3, true));
  EXPECT_EQ(aug.tree.basepoint_order(), 3);
  EXPECT_EQ(aug.tree.tree.edge_count(), 5u);
}

TEST(HyperspaceComplex, KeepsOriginalOrder) {
  const auto c = hyperspace_complex(fixtures::arc_at_end());
  EXPECT_EQ(c.basepoint_order, 1);
  EXPECT_EQ(c.attached, 2);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.cells[0].dimension, 3);
}

// The labeled example: G and G' share the edges e-a and a-b.
class FigureTest : public ::testing::Test {
 protected:
  PointedTree t = fixtures::figure_tree();
  Cell g = cell_of({fixtures::edge_ids(t, {{"f", "e"}, {"e", "n1"}, {"e", "a"}, {"a", "b"}}), t.basepoint}, t);
  Cell g2 = cell_of({fixtures::edge_ids(t, {{"e", "a"}, {"a", "n2"}, {"a", "b"}, {"b", "d"}}), t.basepoint}, t);
};

TEST_F(FigureTest, BreakdownMatchesLabels) {
  const auto b = pair_breakdown(t.tree, g.subtree, g2.subtree);
  EXPECT_EQ(b.common, 2);
  EXPECT_EQ(b.shared_frontier, 9);
  EXPECT_EQ(b.frontier_g_only, 6);
  EXPECT_EQ(b.frontier_g2_only, 8);
  EXPECT_EQ(b.only_g, 2);
  EXPECT_EQ(b.only_g2, 2);
  EXPECT_TRUE(b.meets);
}

TEST_F(FigureTest, DimensionsAndIntersection) {
  EXPECT_EQ(g.dimension, 17);
  EXPECT_EQ(g2.dimension, 19);
  EXPECT_EQ(closure_intersection_dim(g, g2, t), 9);
  const oracle::EdgeSet ge(g.subtree.edges.begin(), g.subtree.edges.end());
  const oracle::EdgeSet g2e(g2.subtree.edges.begin(), g2.subtree.edges.end());
  EXPECT_EQ(oracle::dimension(t.tree, ge, t.basepoint), 17);
  EXPECT_EQ(oracle::intersection_dim(t.tree, ge, g2e, t.basepoint), 9);
}

TEST_F(FigureTest, DisjointWhenAnEdgeStraysAway) {
  // Dropping e-a from G' leaves e-n1 in G far from G'.
  const auto far = cell_of({fixtures::edge_ids(t, {{"a", "n2"}, {"a", "b"}, {"b", "d"}}), t.basepoint}, t);
  EXPECT_EQ(closure_intersection_dim(g, far, t), std::nullopt);
}

// Dimensions and intersections against the independent edge-set oracle for
// every augmented pointed tree with at most 7 edges.
TEST(BuildComplexOracle, AgreesWithEdgeSetFormulas) {
  for (const auto& original : enumerate_pointed(7)) {
    const auto x = augment(original).tree;
    const auto c = build_complex(x);
    const auto expected = oracle::rooted_subtrees(x.tree, x.basepoint);
    ASSERT_EQ(c.size(), expected.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const oracle::EdgeSet gi(c.cells[i].subtree.edges.begin(), c.cells[i].subtree.edges.end());
      EXPECT_EQ(c.cells[i].dimension, oracle::dimension(x.tree, gi, x.basepoint));
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        const oracle::EdgeSet gj(c.cells[j].subtree.edges.begin(), c.cells[j].subtree.edges.end());
        const bool meet = oracle::closures_meet(x.tree, gi, gj, x.basepoint);
        ASSERT_EQ(c.intersection(i, j).has_value(), meet);
        if (meet) {
          EXPECT_EQ(*c.intersection(i, j), oracle::intersection_dim(x.tree, gi, gj, x.basepoint));
        }
      }
    }
  }
}

TEST(BuildComplex, ParallelMatchesSerial) {
  const auto t = fixtures::figure_tree();
  EXPECT_EQ(build_complex(t, {1'000'000, 1}).abstract(), build_complex(t, {1'000'000, 4}).abstract());
}

}  // namespace
