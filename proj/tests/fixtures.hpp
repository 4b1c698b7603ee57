#pragma once

#include <string>
#include <vector>

#include "hypertree/tree.hpp"

namespace fixtures {

using hypertree::NamedEdge;
using hypertree::PointedTree;

inline void hang_leaves(std::vector<NamedEdge>& edges, const std::string& at, int count) {
  for (int i = 1; i <= count; ++i) edges.emplace_back(at, at + "_" + std::to_string(i));
}

inline PointedTree arc_at_end() { return hypertree::build_tree({{"a", "b"}}, "a"); }

/// Arc with the basepoint subdividing it.
inline PointedTree arc_at_interior() { return hypertree::build_tree({{"a", "m"}, {"m", "b"}}, "m"); }

/// Simple n-od with legs x1..xn, rooted at the center unless `at_leaf`.
inline PointedTree star(int n, bool at_leaf = false) {
  std::vector<NamedEdge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back("v", "x" + std::to_string(i));
  return hypertree::build_tree(edges, at_leaf ? "x1" : "v");
}

/// Double star F2: p - a with leaves x1, x2 at p and y1, y2 at a.
inline PointedTree f2(const std::string& basepoint = "p") {
  return hypertree::build_tree(
      {{"p", "a"}, {"p", "x1"}, {"p", "x2"}, {"a", "y1"}, {"a", "y2"}}, basepoint);
}

/// Caterpillar F3: T(X) is the path p - a - b; p carries 2 leaves, a one,
/// b two.
inline PointedTree f3(const std::string& basepoint = "p") {
  return hypertree::build_tree({{"p", "a"},
                                {"a", "b"},
                                {"p", "p1"},
                                {"p", "p2"},
                                {"a", "a1"},
                                {"b", "b1"},
                                {"b", "b2"}},
                               basepoint);
}

/// Labeled intersection example: trimmed tree on a, b, c, d, e, f, n1, n2
/// with edges a-b, a-e, b-c, b-d, e-f, e-n1, a-n2, and pendant edges
/// a:2, b:3, c:4, d:4, e:3, f:2, n1:4, n2:4.
inline PointedTree figure_tree() {
  std::vector<NamedEdge> edges{{"a", "b"}, {"a", "e"},  {"b", "c"}, {"b", "d"},
                               {"e", "f"}, {"e", "n1"}, {"a", "n2"}};
  hang_leaves(edges, "a", 2);
  hang_leaves(edges, "b", 3);
  hang_leaves(edges, "c", 4);
  hang_leaves(edges, "d", 4);
  hang_leaves(edges, "e", 3);
  hang_leaves(edges, "f", 2);
  hang_leaves(edges, "n1", 4);
  hang_leaves(edges, "n2", 4);
  return hypertree::build_tree(edges, "a");
}

/// Edge ids of the named pairs in `t`.
inline std::vector<hypertree::EdgeId> edge_ids(const PointedTree& t, std::vector<NamedEdge> pairs) {
  std::vector<hypertree::EdgeId> out;
  for (const auto& [a, b] : pairs) out.push_back(*t.tree.edge_between(*t.tree.find(a), *t.tree.find(b)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
