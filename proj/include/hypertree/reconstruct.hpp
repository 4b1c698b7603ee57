#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <string>
#include <tuple>
#include <vector>

#include "hypertree/canonical.hpp"
#include "hypertree/complex.hpp"
#include "hypertree/error.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

/// The unique cell of minimum dimension, i.e. U_{p}.
inline std::size_t base_cell(const AbstractComplex& c) {
  if (c.dims.empty()) throw Error(ErrorCode::MalformedComplex, "complex has no cells");
  const auto it = std::min_element(c.dims.begin(), c.dims.end());
  if (std::count(c.dims.begin(), c.dims.end(), *it) != 1)
    throw Error(ErrorCode::AmbiguousBase,
                "minimum dimension " + std::to_string(*it) + " is shared by several cells");
  return static_cast<std::size_t>(it - c.dims.begin());
}

/// A covering pair G -> G' = G u e. `label` is the order in X of the vertex
/// that e adds.
struct Cover {
  std::size_t from;
  std::size_t to;
  int label;

  friend bool operator==(const Cover&, const Cover&) = default;
};

struct HasseDiagram {
  std::size_t base = 0;
  std::vector<Cover> covers;                 // sorted by (from, to)
  std::vector<std::vector<std::size_t>> below;  // below[j]: cells that j covers
  std::vector<std::vector<std::size_t>> above;  // above[i]: cells covering i
};

/// Recovers the covering relation from dimensions alone: i -> j is a cover
/// iff the closures meet in dimension dim(i) - 1.
inline HasseDiagram hasse(const AbstractComplex& c) {
  const std::size_t n = c.size();
  HasseDiagram h;
  h.base = base_cell(c);
  h.below.resize(n);
  h.above.resize(n);
  for (const auto& [key, value] : c.intersections) {
    const auto [i, j] = key;
    if (i >= n || j >= n || i >= j)
      throw Error(ErrorCode::MalformedComplex,
                  "bad intersection index pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    const bool up = value == c.dims[i] - 1;
    const bool down = value == c.dims[j] - 1;
    if (up && down)
      throw Error(ErrorCode::MalformedComplex, "cells " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " cover each other");
    if (!up && !down) continue;
    const std::size_t from = up ? i : j;
    const std::size_t to = up ? j : i;
    const int label = c.dims[to] - c.dims[from] + 2;
    if (label < 3)
      throw Error(ErrorCode::MalformedComplex, "cover " + std::to_string(from) + " -> " +
                                                   std::to_string(to) + " does not raise the dimension");
    h.covers.push_back({from, to, label});
    h.below[to].push_back(from);
    h.above[from].push_back(to);
  }
  std::sort(h.covers.begin(), h.covers.end(),
            [](const Cover& a, const Cover& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  for (auto& v : h.below) std::sort(v.begin(), v.end());
  for (auto& v : h.above) std::sort(v.begin(), v.end());

  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{h.base};
  seen[h.base] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    for (auto j : h.above[i]) {
      if (seen[j]) continue;
      seen[j] = true;
      ++reached;
      queue.push_back(j);
    }
  }
  if (reached != n)
    throw Error(ErrorCode::MalformedComplex,
                std::to_string(n - reached) + " cells are unreachable from the base cell");
  return h;
}

/// Rebuilds the pointed tree from cell and intersection dimensions only.
///
/// Cells covering exactly one cell are the paths from the basepoint; each of
/// them contributes one vertex of T(X), joined to the vertex of the cell it
/// covers. A vertex's order in X is the label of its incoming cover (the base
/// cell's dimension for the basepoint), and the missing degree is made up
/// with pendant leaves.
inline PointedTree reconstruct(const AbstractComplex& c) {
  const HasseDiagram h = hasse(c);
  const std::size_t n = c.size();
  if (c.dims[h.base] < 1) throw Error(ErrorCode::MalformedComplex, "base cell has dimension < 1");

  std::vector<std::size_t> parent(n, n);
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == h.base || h.below[j].size() != 1) continue;
    parent[j] = h.below[j].front();
    children[parent[j]].push_back(j);
  }

  // Walk path cells outward from the base; ids follow BFS order.
  std::vector<std::size_t> path_cells{h.base};
  std::vector<std::size_t> vertex_parent{0};
  std::vector<int> order{c.dims[h.base]};
  for (std::size_t k = 0; k < path_cells.size(); ++k) {
    const std::size_t cell = path_cells[k];
    for (std::size_t child : children[cell]) {
      path_cells.push_back(child);
      vertex_parent.push_back(k);
      order.push_back(c.dims[child] - c.dims[cell] + 2);
    }
  }
  const std::size_t path_count =
      static_cast<std::size_t>(std::count_if(parent.begin(), parent.end(),
                                             [n](std::size_t p) { return p != n; })) + 1;
  if (path_cells.size() != path_count)
    throw Error(ErrorCode::MalformedComplex, "a path cell covers a cell that is not a path cell");

  const std::size_t t_vertices = path_cells.size();
  std::vector<int> trimmed_degree(t_vertices, 0);
  for (std::size_t k = 1; k < t_vertices; ++k) {
    ++trimmed_degree[k];
    ++trimmed_degree[vertex_parent[k]];
  }

  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < t_vertices; ++k) names.push_back("r" + std::to_string(k));
  for (std::size_t k = 1; k < t_vertices; ++k) edges.push_back({vertex_parent[k], k});
  std::size_t leaf_index = 0;
  for (std::size_t k = 0; k < t_vertices; ++k) {
    const int leaves = order[k] - trimmed_degree[k];
    if (leaves < 0)
      throw Error(ErrorCode::MalformedComplex,
                  "vertex r" + std::to_string(k) + " has order " + std::to_string(order[k]) +
                      " below its trimmed degree " + std::to_string(trimmed_degree[k]));
    for (int i = 0; i < leaves; ++i) {
      names.push_back("x" + std::to_string(leaf_index++));
      edges.push_back({k, names.size() - 1});
    }
  }
  return normalize(PointedTree{Tree::from_edges(std::move(names), std::move(edges)), 0});
}

/// Undoes augmentation: removes `attached` pendant leaves at the basepoint.
inline PointedTree strip_attached(const PointedTree& t, int attached) {
  if (attached == 0) return t;
  std::vector<bool> dropped(t.tree.vertex_count(), false);
  int remaining = attached;
  for (Vertex w : t.tree.neighbors(t.basepoint)) {
    if (remaining == 0) break;
    if (t.tree.degree(w) == 1) {
      dropped[w] = true;
      --remaining;
    }
  }
  if (remaining != 0 || t.tree.edge_count() <= static_cast<std::size_t>(attached))
    throw Error(ErrorCode::MalformedComplex,
                "basepoint has fewer than " + std::to_string(attached) + " removable leaves");
  std::vector<Vertex> remap(t.tree.vertex_count());
  std::vector<std::string> names;
  for (Vertex v = 0; v < t.tree.vertex_count(); ++v) {
    if (dropped[v]) continue;
    remap[v] = names.size();
    names.push_back(t.tree.name(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : t.tree.edges())
    if (!dropped[e.u] && !dropped[e.v]) edges.push_back({remap[e.u], remap[e.v]});
  return normalize(PointedTree{Tree::from_edges(std::move(names), std::move(edges)), remap[t.basepoint]});
}

/// Reconstruction followed by removal of the arcs attached during
/// augmentation; recovers (X, p) itself.
inline PointedTree reconstruct_original(const AbstractComplex& c) {
  if (c.attached != std::max(0, 3 - c.basepoint_order))
    throw Error(ErrorCode::MalformedComplex,
                "attached count " + std::to_string(c.attached) + " does not match basepoint order " +
                    std::to_string(c.basepoint_order));
  return strip_attached(reconstruct(c), c.attached);
}

/// Complete invariant of C(p, X) among trees.
struct Signature {
  int basepoint_order = 0;
  int attached = 0;
  CanonicalCode code;

  friend auto operator<=>(const Signature&, const Signature&) = default;
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature(const PointedTree& t, const BuildOptions& options = {}) {
  const CellComplex c = hyperspace_complex(t, options);
  return {t.basepoint_order(), c.attached, canonical_code(reconstruct(c.abstract()))};
}

inline bool same_hyperspace(const PointedTree& a, const PointedTree& b,
                            const BuildOptions& options = {}) {
  return signature(a, options) == signature(b, options);
}

}  // namespace hypertree
