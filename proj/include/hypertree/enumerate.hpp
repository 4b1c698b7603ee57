#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypertree/canonical.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

namespace detail {

inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

// All free trees on `vertices` vertices (degree-2 vertices allowed), one per
// isomorphism class, keyed by free code. Grown leaf by leaf from the arc and
// deduplicated at every size.
inline std::vector<std::map<CanonicalCode, Tree>> free_trees_by_size(std::size_t max_vertices) {
  std::vector<std::map<CanonicalCode, Tree>> by_size(max_vertices + 1);
  if (max_vertices < 2) return by_size;
  Tree arc = Tree::from_edges(default_names(2), {{0, 1}});
  by_size[2].emplace(free_code(arc), arc);
  for (std::size_t n = 3; n <= max_vertices; ++n) {
    for (const auto& [code, tree] : by_size[n - 1]) {
      for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        Tree grown = tree.with_pendant(v, "v" + std::to_string(n - 1));
        auto key = free_code(grown);
        by_size[n].try_emplace(std::move(key), std::move(grown));
      }
    }
  }
  return by_size;
}

inline std::string midpoint_name(const Tree& tree) {
  return tree.find("mid") ? tree.fresh_name("mid") : std::string("mid");
}

}  // namespace detail

/// One representative per isomorphism class of trees with 1..max_edges edges
/// and no degree-2 vertex. Ordered by edge count, then by free code.
inline std::vector<Tree> enumerate_trees(int max_edges) {
  if (max_edges < 1) throw Error(ErrorCode::InvalidInput, "max_edges must be at least 1");
  std::vector<Tree> out;
  const auto by_size = detail::free_trees_by_size(static_cast<std::size_t>(max_edges) + 1);
  for (const auto& level : by_size)
    for (const auto& [code, tree] : level)
      if (is_normalized(tree)) out.push_back(tree);
  return out;
}

/// Every basepoint class of `tree`: one pointed tree per vertex orbit, then
/// one per edge orbit with the basepoint on a fresh vertex subdividing a
/// representative edge.
inline std::vector<PointedTree> point_classes(const Tree& tree) {
  std::vector<PointedTree> out;
  const auto o = orbits(tree);
  for (const auto& cls : o.vertices) out.push_back({tree, cls.front()});
  for (const auto& cls : o.edges) {
    auto [split, mid] = tree.subdivided(cls.front(), detail::midpoint_name(tree));
    out.push_back({std::move(split), mid});
  }
  return out;
}

inline std::vector<PointedTree> enumerate_pointed(int max_edges) {
  std::vector<PointedTree> out;
  for (const auto& tree : enumerate_trees(max_edges)) {
    auto classes = point_classes(tree);
    out.insert(out.end(), std::make_move_iterator(classes.begin()),
               std::make_move_iterator(classes.end()));
  }
  return out;
}

}  // namespace hypertree
