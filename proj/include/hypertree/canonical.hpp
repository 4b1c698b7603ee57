#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hypertree/tree.hpp"

namespace hypertree {

/// Order-invariant string encoding of a rooted tree (AHU style).
///
/// Alphabet and layout:
///   - a vertex with children c1..ck encodes as "(" + sorted(code(ci)) + ")",
///     where children codes are sorted by plain byte-wise string comparison
///     ('(' = 0x28 sorts before ')' = 0x29);
///   - a tree rooted at the midpoint of an edge {u, v} encodes as
///     "[" + min(a, b) + max(a, b) + "]", where a and b are the codes of the
///     two halves rooted at u and v.
/// A leaf is "()"; the arc rooted at an endpoint is "(())".
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string code) : code_(std::move(code)) {}

  const std::string& str() const noexcept { return code_; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CanonicalCode& c) {
    return os << c.code_;
  }

 private:
  std::string code_;
};

namespace detail {

// Code of the branch hanging from `root`, never stepping into `blocked`.
// Iterative post-order so deep trees do not exhaust the stack.
inline std::string branch_code(const Tree& tree, Vertex root,
                               std::optional<Vertex> blocked = std::nullopt) {
  const std::size_t n = tree.vertex_count();
  std::vector<Vertex> parent(n, n);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (Vertex w : tree.neighbors(v)) {
      if (parent[w] != n || (blocked && w == *blocked)) continue;
      parent[w] = v;
      order.push_back(w);
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (auto& k : kids) code += k;
    code += ")";
    kids.clear();
    kids.shrink_to_fit();
    if (v == root) {
      result = std::move(code);
    } else {
      child_codes[parent[v]].push_back(std::move(code));
    }
  }
  return result;
}

}  // namespace detail

inline CanonicalCode vertex_rooted_code(const Tree& tree, Vertex root) {
  return CanonicalCode(detail::branch_code(tree, root));
}

/// Code of the tree rooted at a formal subdivision point of edge `e`.
inline CanonicalCode edge_rooted_code(const Tree& tree, EdgeId e) {
  const Edge& ed = tree.edge(e);
  std::string a = detail::branch_code(tree, ed.u, ed.v);
  std::string b = detail::branch_code(tree, ed.v, ed.u);
  if (b < a) std::swap(a, b);
  return CanonicalCode("[" + a + b + "]");
}

inline CanonicalCode canonical_code(const PointedTree& t) {
  return vertex_rooted_code(t.tree, t.basepoint);
}

/// Basepoint-preserving isomorphism test for normalized pointed trees.
inline bool rooted_isomorphic(const PointedTree& a, const PointedTree& b) {
  if (a.tree.vertex_count() != b.tree.vertex_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

/// The center of a tree: one vertex, or the two ends of the central edge.
inline std::vector<Vertex> center(const Tree& tree) {
  const std::size_t n = tree.vertex_count();
  std::vector<int> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : tree.neighbors(v))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// Free (unrooted) canonical code: rooted at the center vertex, or at the
/// midpoint of the central edge for bicentral trees.
inline CanonicalCode free_code(const Tree& tree) {
  auto c = center(tree);
  if (c.size() == 1) return vertex_rooted_code(tree, c[0]);
  return edge_rooted_code(tree, *tree.edge_between(c[0], c[1]));
}

struct Orbits {
  std::vector<std::vector<Vertex>> vertices;
  std::vector<std::vector<EdgeId>> edges;
};

namespace detail {

template <typename Id, typename CodeFn>
std::vector<std::vector<Id>> group_by_code(std::size_t count, CodeFn code_of) {
  std::map<CanonicalCode, std::vector<Id>> groups;
  for (Id i = 0; i < count; ++i) groups[code_of(i)].push_back(i);
  std::vector<std::vector<Id>> out;
  out.reserve(groups.size());
  for (auto& [code, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace detail

/// Automorphism orbits of vertices and edges. Each class is sorted, and the
/// classes are ordered by smallest member.
inline Orbits orbits(const Tree& tree) {
  Orbits out;
  out.vertices = detail::group_by_code<Vertex>(
      tree.vertex_count(), [&](Vertex v) { return vertex_rooted_code(tree, v); });
  out.edges = detail::group_by_code<EdgeId>(
      tree.edge_count(), [&](EdgeId e) { return edge_rooted_code(tree, e); });
  return out;
}

/// Number of point classes of the topological tree under self-homeomorphisms:
/// vertex orbits plus edge orbits.
inline int homogeneity_degree(const Tree& tree) {
  const auto o = orbits(normalize(tree));
  return static_cast<int>(o.vertices.size() + o.edges.size());
}

}  // namespace hypertree
