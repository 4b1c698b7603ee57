#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hypertree/error.hpp"

namespace hypertree {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

using NamedEdge = std::pair<std::string, std::string>;

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

/// A finite tree with named vertices. Vertices are dense indices
/// 0..vertex_count()-1; names are only used for I/O and diagnostics.
/// Every edge is stored with u < v.
class Tree {
 public:
  /// Validates and builds a tree from index-based edges. Throws Error with
  /// CycleDetected, Disconnected, DuplicateEdge or EmptyEdgeList.
  static Tree from_edges(std::vector<std::string> names, std::vector<Edge> edges) {
    if (edges.empty()) throw Error(ErrorCode::EmptyEdgeList, "a tree needs at least one edge");
    const std::size_t n = names.size();
    std::unordered_set<std::string> seen_names;
    for (const auto& name : names) {
      if (!seen_names.insert(name).second)
        throw Error(ErrorCode::InvalidInput, "duplicate vertex name '" + name + "'");
    }
    detail::DisjointSets sets(n);
    std::unordered_set<std::size_t> seen_edges;
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
      if (e.u == e.v) throw Error(ErrorCode::CycleDetected, "self-loop at '" + names[e.u] + "'");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!seen_edges.insert(e.u * n + e.v).second)
        throw Error(ErrorCode::DuplicateEdge, "edge (" + names[e.u] + ", " + names[e.v] + ")");
    }
    for (const auto& e : edges) {
      if (!sets.unite(e.u, e.v))
        throw Error(ErrorCode::CycleDetected,
                    "edge (" + names[e.u] + ", " + names[e.v] + ") closes a cycle");
    }
    for (std::size_t v = 1; v < n; ++v) {
      if (sets.find(v) != sets.find(0))
        throw Error(ErrorCode::Disconnected,
                    "vertex '" + names[v] + "' is not connected to '" + names[0] + "'");
    }
    return Tree(std::move(names), std::move(edges));
  }

  /// Builds a tree from name pairs; vertices are inferred from the edges in
  /// order of first appearance, followed by any extra listed vertices.
  static Tree from_named_edges(std::span<const NamedEdge> edges,
                               std::span<const std::string> extra_vertices = {}) {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> index;
    auto intern = [&](const std::string& name) {
      auto [it, inserted] = index.emplace(name, names.size());
      if (inserted) names.push_back(name);
      return it->second;
    };
    std::vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b] : edges) indexed.push_back({intern(a), intern(b)});
    for (const auto& name : extra_vertices) intern(name);
    return from_edges(std::move(names), std::move(indexed));
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Vertex v) const { return names_.at(v); }

  std::optional<Vertex> find(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Vertex>(it - names_.begin());
  }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_.at(e);
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const {
    for (EdgeId e : incidence_.at(a))
      if (other_end(e, a) == b) return e;
    return std::nullopt;
  }

  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count(); ++v)
      if (degree(v) == 1) out.push_back(v);
    return out;
  }

  std::vector<NamedEdge> named_edges() const {
    std::vector<NamedEdge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(names_[e.u], names_[e.v]);
    return out;
  }

  /// A vertex name not yet used in this tree, derived from `stem`.
  std::string fresh_name(std::string_view stem) const {
    for (std::size_t i = 1;; ++i) {
      std::string candidate = std::string(stem) + "+" + std::to_string(i);
      if (!find(candidate)) return candidate;
    }
  }

  /// Copy of this tree with a new leaf hanging off `at`.
  Tree with_pendant(Vertex at, std::string leaf_name) const {
    auto names = names_;
    auto edges = edges_;
    names.push_back(std::move(leaf_name));
    edges.push_back({at, names.size() - 1});
    return from_edges(std::move(names), std::move(edges));
  }

  /// Copy of this tree with edge `e` split by a new degree-2 vertex, which is
  /// returned alongside the tree.
  std::pair<Tree, Vertex> subdivided(EdgeId e, std::string mid_name) const {
    auto names = names_;
    auto edges = edges_;
    names.push_back(std::move(mid_name));
    const Vertex mid = names.size() - 1;
    const Edge old = edges.at(e);
    edges[e] = {old.u, mid};
    edges.push_back({old.v, mid});
    return {from_edges(std::move(names), std::move(edges)), mid};
  }

 private:
  Tree(std::vector<std::string> names, std::vector<Edge> edges)
      : names_(std::move(names)),
        edges_(std::move(edges)),
        adjacency_(names_.size()),
        incidence_(names_.size()) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      adjacency_[edges_[e].u].push_back(edges_[e].v);
      adjacency_[edges_[e].v].push_back(edges_[e].u);
      incidence_[edges_[e].u].push_back(e);
      incidence_[edges_[e].v].push_back(e);
    }
  }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// The pair (X, p): a tree with a distinguished basepoint.
struct PointedTree {
  Tree tree;
  Vertex basepoint;

  const std::string& basepoint_name() const { return tree.name(basepoint); }
  int basepoint_order() const { return tree.degree(basepoint); }
};

enum class PointKind { End, Ordinary, Ramification };

struct VertexClass {
  PointKind kind;
  int order;

  static VertexClass of_order(int order) {
    if (order < 1) throw Error(ErrorCode::InvalidInput, "order must be positive");
    const PointKind kind = order == 1   ? PointKind::End
                           : order == 2 ? PointKind::Ordinary
                                        : PointKind::Ramification;
    return {kind, order};
  }

  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

inline PointedTree build_tree(std::span<const NamedEdge> edges, std::string_view basepoint,
                              std::span<const std::string> extra_vertices = {}) {
  Tree tree = Tree::from_named_edges(edges, extra_vertices);
  auto p = tree.find(basepoint);
  if (!p)
    throw Error(ErrorCode::BasepointMissing,
                "basepoint '" + std::string(basepoint) + "' is not a vertex");
  return {std::move(tree), *p};
}

inline PointedTree build_tree(std::initializer_list<NamedEdge> edges, std::string_view basepoint) {
  return build_tree(std::span<const NamedEdge>(edges.begin(), edges.size()), basepoint);
}

/// Degree of the named vertex.
inline int order_of(std::string_view vertex, const PointedTree& t) {
  auto v = t.tree.find(vertex);
  if (!v) throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(vertex) + "'");
  return t.tree.degree(*v);
}

inline VertexClass classify(Vertex v, const Tree& tree) {
  return VertexClass::of_order(tree.degree(v));
}

/// True when no vertex has degree 2, except possibly `keep`.
inline bool is_normalized(const Tree& tree, std::optional<Vertex> keep = std::nullopt) {
  for (Vertex v = 0; v < tree.vertex_count(); ++v)
    if (tree.degree(v) == 2 && v != keep) return false;
  return true;
}

inline bool is_normalized(const PointedTree& t) { return is_normalized(t.tree, t.basepoint); }

namespace detail {

// Suppresses every degree-2 vertex other than `keep`, merging its two edges.
// Returns the new tree and the new index of `keep` (if given).
inline std::pair<Tree, std::optional<Vertex>> suppress_degree_two(const Tree& tree,
                                                                  std::optional<Vertex> keep) {
  const std::size_t n = tree.vertex_count();
  auto kept = [&](Vertex v) { return tree.degree(v) != 2 || v == keep; };
  std::vector<Vertex> remap(n, n);
  std::vector<std::string> names;
  for (Vertex v = 0; v < n; ++v) {
    if (kept(v)) {
      remap[v] = names.size();
      names.push_back(tree.name(v));
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    if (!kept(u)) continue;
    for (Vertex w : tree.neighbors(u)) {
      Vertex prev = u;
      while (!kept(w)) {
        auto nb = tree.neighbors(w);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = w;
        w = next;
      }
      if (u < w) edges.push_back({remap[u], remap[w]});
    }
  }
  std::optional<Vertex> new_keep;
  if (keep) new_keep = remap[*keep];
  return {Tree::from_edges(std::move(names), std::move(edges)), new_keep};
}

}  // namespace detail

/// Suppresses degree-2 vertices other than the basepoint. Idempotent.
inline PointedTree normalize(const PointedTree& t) {
  if (is_normalized(t)) return t;
  auto [tree, p] = detail::suppress_degree_two(t.tree, t.basepoint);
  return {std::move(tree), *p};
}

inline Tree normalize(const Tree& t) {
  if (is_normalized(t)) return t;
  return detail::suppress_degree_two(t, std::nullopt).first;
}

}  // namespace hypertree
