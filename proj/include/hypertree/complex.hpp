#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hypertree/error.hpp"
#include "hypertree/parallel.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

/// A connected set of edges of T(X) together with the basepoint it must
/// contain. The empty edge set stands for the one-point subtree {anchor}.
struct Subtree {
  std::vector<EdgeId> edges;  // sorted
  Vertex anchor = 0;

  friend bool operator==(const Subtree&, const Subtree&) = default;
  friend auto operator<=>(const Subtree& a, const Subtree& b) {
    if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
    if (auto c = a.edges <=> b.edges; c != 0) return c;
    return a.anchor <=> b.anchor;
  }

  bool contains(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }
};

/// Sorted vertex set of a subtree: the anchor plus all edge endpoints.
inline std::vector<Vertex> subtree_vertices(const Tree& x, const Subtree& y) {
  std::vector<Vertex> out{y.anchor};
  for (EdgeId e : y.edges) {
    out.push_back(x.edge(e).u);
    out.push_back(x.edge(e).v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The trimmed tree T(X): every edge whose endpoints are both non-leaves.
/// Empty for an arc; the single center for a simple n-od.
struct TrimmedTree {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
  bool has_edge(EdgeId e) const { return std::binary_search(edges.begin(), edges.end(), e); }
};

inline TrimmedTree trimmed_tree(const Tree& x) {
  TrimmedTree t;
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    if (x.degree(v) >= 2) t.vertices.push_back(v);
  for (EdgeId e = 0; e < x.edge_count(); ++e)
    if (x.degree(x.edge(e).u) >= 2 && x.degree(x.edge(e).v) >= 2) t.edges.push_back(e);
  return t;
}

inline TrimmedTree trimmed_tree(const PointedTree& t) { return trimmed_tree(t.tree); }

namespace detail {

inline std::size_t saturating_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (a != 0 && b > cap / a) return cap + 1;
  return std::min(a * b, cap + 1);
}

// Rooted-subtree enumeration over the trimmed tree, using T-edges only.
class SubtreeWalker {
 public:
  SubtreeWalker(const Tree& x, const TrimmedTree& trimmed) : x_(x), trimmed_(trimmed) {}

  // Number of T-subtrees containing v within the branch away from `parent`,
  // saturated at cap + 1.
  std::size_t count(Vertex v, std::optional<Vertex> parent, std::size_t cap) const {
    std::size_t total = 1;
    for (EdgeId e : x_.incident(v)) {
      if (!trimmed_.has_edge(e)) continue;
      const Vertex w = x_.other_end(e, v);
      if (parent && w == *parent) continue;
      total = saturating_mul(total, count(w, v, cap) + 1, cap);
    }
    return total;
  }

  std::vector<std::vector<EdgeId>> list(Vertex v, std::optional<Vertex> parent) const {
    std::vector<std::vector<EdgeId>> acc{{}};
    for (EdgeId e : x_.incident(v)) {
      if (!trimmed_.has_edge(e)) continue;
      const Vertex w = x_.other_end(e, v);
      if (parent && w == *parent) continue;
      const auto below = list(w, v);
      std::vector<std::vector<EdgeId>> next;
      next.reserve(acc.size() * (below.size() + 1));
      for (const auto& base : acc) {
        next.push_back(base);
        for (const auto& sub : below) {
          auto merged = base;
          merged.push_back(e);
          merged.insert(merged.end(), sub.begin(), sub.end());
          next.push_back(std::move(merged));
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

 private:
  const Tree& x_;
  const TrimmedTree& trimmed_;
};

}  // namespace detail

inline std::size_t count_subtrees_containing(const Tree& x, const TrimmedTree& trimmed, Vertex p,
                                             std::size_t cap = std::numeric_limits<std::size_t>::max() - 1) {
  if (!trimmed.has_vertex(p))
    throw Error(ErrorCode::BasepointNotInTrimmedTree,
                "vertex '" + x.name(p) + "' is not in the trimmed tree; augment first");
  return detail::SubtreeWalker(x, trimmed).count(p, std::nullopt, cap);
}

/// Sub_p(T): all connected edge subsets of the trimmed tree containing p,
/// including the empty subtree {p}. Sorted by size, then edge ids.
inline std::vector<Subtree> subtrees_containing(const Tree& x, const TrimmedTree& trimmed, Vertex p) {
  if (!trimmed.has_vertex(p))
    throw Error(ErrorCode::BasepointNotInTrimmedTree,
                "vertex '" + x.name(p) + "' is not in the trimmed tree; augment first");
  auto lists = detail::SubtreeWalker(x, trimmed).list(p, std::nullopt);
  std::vector<Subtree> out;
  out.reserve(lists.size());
  for (auto& edges : lists) {
    std::sort(edges.begin(), edges.end());
    out.push_back({std::move(edges), p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A component U_Y of the manifold part of C(p,X).
struct Cell {
  Subtree subtree;
  int dimension = 0;
  std::vector<EdgeId> frontier;  // edges of X outside Y meeting Y, sorted
};

/// Edges of X not in Y that share a vertex with Y.
inline std::vector<EdgeId> frontier_of(const Tree& x, const Subtree& y) {
  const auto verts = subtree_vertices(x, y);
  std::vector<EdgeId> out;
  for (Vertex v : verts)
    for (EdgeId e : x.incident(v))
      if (!y.contains(e)) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Cell cell_of(const Subtree& y, const PointedTree& t) {
  Cell c{y, 0, frontier_of(t.tree, y)};
  c.dimension = static_cast<int>(c.frontier.size());
  return c;
}

/// Edge bookkeeping for a pair of subtrees G, G':
///   common  - edges in both (k)
///   only_g  - edges of G not in G' (l);  only_g2 - the converse (l')
///   shared_frontier - edges outside G and G' meeting G and G' both (n)
///   frontier_g_only - edges outside both meeting G but not G' (m)
///   frontier_g2_only - the converse (m')
/// `meets` holds when every edge of either subtree lies in or touches the
/// other one; only then do the cell closures intersect.
struct PairBreakdown {
  int common = 0;
  int only_g = 0;
  int only_g2 = 0;
  int shared_frontier = 0;
  int frontier_g_only = 0;
  int frontier_g2_only = 0;
  bool meets = false;
};

inline PairBreakdown pair_breakdown(const Tree& x, const Subtree& g, const Subtree& g2) {
  const auto vg = subtree_vertices(x, g);
  const auto vg2 = subtree_vertices(x, g2);
  auto touches = [&x](EdgeId e, const std::vector<Vertex>& verts) {
    return std::binary_search(verts.begin(), verts.end(), x.edge(e).u) ||
           std::binary_search(verts.begin(), verts.end(), x.edge(e).v);
  };
  PairBreakdown b;
  b.meets = true;
  for (EdgeId e : g.edges) {
    if (g2.contains(e)) {
      ++b.common;
    } else {
      ++b.only_g;
      if (!touches(e, vg2)) b.meets = false;
    }
  }
  for (EdgeId e : g2.edges) {
    if (g.contains(e)) continue;
    ++b.only_g2;
    if (!touches(e, vg)) b.meets = false;
  }
  std::vector<Vertex> shared;
  std::set_intersection(vg.begin(), vg.end(), vg2.begin(), vg2.end(), std::back_inserter(shared));
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    if (g.contains(e) || g2.contains(e)) continue;
    const bool on_g = touches(e, vg);
    const bool on_g2 = touches(e, vg2);
    if (touches(e, shared)) {
      ++b.shared_frontier;
    } else if (on_g && !on_g2) {
      ++b.frontier_g_only;
    } else if (on_g2 && !on_g) {
      ++b.frontier_g2_only;
    }
  }
  return b;
}

/// Dimension of the intersection of the closures of two cells, or nullopt
/// when the closures are disjoint.
inline std::optional<int> closure_intersection_dim(const Cell& g, const Cell& g2, const PointedTree& t) {
  const Tree& x = t.tree;
  // G and G' both contain the anchor, so their shared vertices must be
  // exactly the vertices spanned by their shared edges.
  Subtree common{{}, g.subtree.anchor};
  std::set_intersection(g.subtree.edges.begin(), g.subtree.edges.end(), g2.subtree.edges.begin(),
                        g2.subtree.edges.end(), std::back_inserter(common.edges));
  const auto vg = subtree_vertices(x, g.subtree);
  const auto vg2 = subtree_vertices(x, g2.subtree);
  std::vector<Vertex> shared;
  std::set_intersection(vg.begin(), vg.end(), vg2.begin(), vg2.end(), std::back_inserter(shared));
  if (shared != subtree_vertices(x, common))
    throw Error(ErrorCode::InternalInvariant, "common part of two subtrees is not connected");

  const auto b = pair_breakdown(x, g.subtree, g2.subtree);
  if (!b.meets) return std::nullopt;
  return b.shared_frontier;
}

struct Augmented {
  PointedTree tree;
  int attached = 0;
};

/// Hangs max(0, 3 - ord(p)) fresh leaves on the basepoint so that it becomes
/// a ramification point.
inline Augmented augment(const PointedTree& t) {
  const int attached = std::max(0, 3 - t.basepoint_order());
  Tree x = t.tree;
  for (int i = 0; i < attached; ++i) x = x.with_pendant(t.basepoint, x.fresh_name(t.basepoint_name()));
  return {{std::move(x), t.basepoint}, attached};
}

using IntersectionTable = std::map<std::pair<std::size_t, std::size_t>, int>;

/// The data a homeomorphism of hyperspaces preserves: cell dimensions and
/// closure-intersection dimensions (present pairs only, keyed i < j).
struct AbstractComplex {
  int basepoint_order = 0;
  int attached = 0;
  std::vector<int> dims;
  IntersectionTable intersections;

  std::size_t size() const noexcept { return dims.size(); }

  std::optional<int> intersection(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = intersections.find({i, j});
    if (it == intersections.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const AbstractComplex&, const AbstractComplex&) = default;
};

struct CellComplex {
  int basepoint_order = 0;  // order of the basepoint before augmentation
  int attached = 0;
  std::vector<Cell> cells;
  IntersectionTable intersections;

  std::size_t size() const noexcept { return cells.size(); }

  std::optional<int> intersection(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = intersections.find({i, j});
    if (it == intersections.end()) return std::nullopt;
    return it->second;
  }

  AbstractComplex abstract() const {
    AbstractComplex a{basepoint_order, attached, {}, intersections};
    a.dims.reserve(cells.size());
    for (const auto& c : cells) a.dims.push_back(c.dimension);
    return a;
  }
};

struct BuildOptions {
  std::size_t cap = 1'000'000;
  unsigned jobs = 1;
};

/// One cell per subtree of T(X) containing p, plus the intersection table.
/// Requires a normalized tree whose basepoint has order at least 3.
inline CellComplex build_complex(const PointedTree& t, const BuildOptions& options = {}) {
  if (t.basepoint_order() < 3)
    throw Error(ErrorCode::NeedsAugmentation,
                "basepoint '" + t.basepoint_name() + "' has order " +
                    std::to_string(t.basepoint_order()) + " < 3");
  if (!is_normalized(t))
    throw Error(ErrorCode::InvalidInput, "tree has a degree-2 vertex besides the basepoint");
  const auto trimmed = trimmed_tree(t);
  const std::size_t count = count_subtrees_containing(t.tree, trimmed, t.basepoint, options.cap);
  if (count > options.cap)
    throw Error(ErrorCode::ComplexTooLarge,
                "more than " + std::to_string(options.cap) + " subtrees contain the basepoint");

  CellComplex complex;
  complex.basepoint_order = t.basepoint_order();
  for (auto& y : subtrees_containing(t.tree, trimmed, t.basepoint))
    complex.cells.push_back(cell_of(y, t));

  const std::size_t n = complex.cells.size();
  std::vector<std::vector<std::pair<std::size_t, int>>> rows(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (auto d = closure_intersection_dim(complex.cells[i], complex.cells[j], t))
        rows[i].emplace_back(j, *d);
  });
  for (std::size_t i = 0; i < n; ++i)
    for (auto [j, d] : rows[i]) complex.intersections.emplace(std::make_pair(i, j), d);
  return complex;
}

/// Augments when needed and builds the complex, recording the original
/// basepoint order and the number of attached arcs.
inline CellComplex hyperspace_complex(const PointedTree& t, const BuildOptions& options = {}) {
  const auto aug = augment(t);
  CellComplex c = build_complex(aug.tree, options);
  c.basepoint_order = t.basepoint_order();
  c.attached = aug.attached;
  return c;
}

}  // namespace hypertree
