#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypertree/canonical.hpp"
#include "hypertree/complex.hpp"
#include "hypertree/enumerate.hpp"
#include "hypertree/io.hpp"
#include "hypertree/parallel.hpp"
#include "hypertree/reconstruct.hpp"
#include "hypertree/tree.hpp"

namespace hypertree {

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool skipped = false;
  std::optional<nlohmann::json> counterexample;  // first failure only

  bool passed() const { return failures == 0; }
};

struct VerificationReport {
  int scope = 0;  // max_edges for sweeps, edge count for a single tree
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::size_t>> counts;
  std::chrono::duration<double> elapsed{0};

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  }

  CheckResult& check(const std::string& name) {
    for (auto& c : checks)
      if (c.name == name) return c;
    CheckResult fresh;
    fresh.name = name;
    checks.push_back(std::move(fresh));
    return checks.back();
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void add_count(const std::string& key, std::size_t value) {
    for (auto& [k, v] : counts)
      if (k == key) {
        v += value;
        return;
      }
    counts.emplace_back(key, value);
  }

  std::size_t count(const std::string& key) const {
    for (const auto& [k, v] : counts)
      if (k == key) return v;
    return 0;
  }

  /// Accumulates another report. Keeps the earliest counterexample.
  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks) {
      auto& mine = check(c.name);
      mine.instances += c.instances;
      mine.failures += c.failures;
      mine.skipped = mine.skipped || c.skipped;
      if (!mine.counterexample && c.counterexample) mine.counterexample = c.counterexample;
    }
    for (const auto& [k, v] : other.counts) add_count(k, v);
  }
};

namespace detail {

inline void record(CheckResult& check, bool ok, const std::function<nlohmann::json()>& witness) {
  ++check.instances;
  if (ok) return;
  ++check.failures;
  if (!check.counterexample) check.counterexample = witness();
}

}  // namespace detail

/// Brute-force computations used as the independent side of every check.
/// Nothing in here calls into complex.hpp or reconstruct.hpp.
namespace oracle {

using EdgeSet = std::vector<EdgeId>;  // sorted

inline std::set<Vertex> vertex_set(const Tree& x, const EdgeSet& edges, Vertex p) {
  std::set<Vertex> out{p};
  for (EdgeId e : edges) {
    out.insert(x.edges()[e].u);
    out.insert(x.edges()[e].v);
  }
  return out;
}

/// Edges of X none of whose endpoints is an end point of X.
inline EdgeSet inner_edges(const Tree& x) {
  std::set<Vertex> ends;
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    if (x.neighbors(v).size() == 1) ends.insert(v);
  EdgeSet out;
  for (EdgeId e = 0; e < x.edge_count(); ++e)
    if (!ends.count(x.edges()[e].u) && !ends.count(x.edges()[e].v)) out.push_back(e);
  return out;
}

inline bool connected_through(const Tree& x, const EdgeSet& edges, Vertex start) {
  if (edges.empty()) return true;
  std::set<Vertex> reached{start};
  bool grew = true;
  while (grew) {
    grew = false;
    for (EdgeId e : edges) {
      const auto [u, v] = x.edges()[e];
      if (reached.count(u) != reached.count(v)) {
        reached.insert(u);
        reached.insert(v);
        grew = true;
      }
    }
  }
  for (EdgeId e : edges)
    if (!reached.count(x.edges()[e].u)) return false;
  return true;
}

constexpr std::size_t kMaxSubsetEdges = 22;

/// Every subset of `pool` (as sorted edge sets) passing `keep`.
template <typename Keep>
std::vector<EdgeSet> filtered_subsets(const EdgeSet& pool, Keep keep) {
  std::vector<EdgeSet> out;
  const std::uint64_t limit = std::uint64_t{1} << pool.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    EdgeSet s;
    for (std::size_t b = 0; b < pool.size(); ++b)
      if (mask >> b & 1u) s.push_back(pool[b]);
    if (keep(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// All connected edge sets of T(X) containing p (the empty set included).
inline std::vector<EdgeSet> rooted_subtrees(const Tree& x, Vertex p) {
  const EdgeSet pool = inner_edges(x);
  return filtered_subsets(pool, [&](const EdgeSet& s) { return connected_through(x, s, p); });
}

/// Nonempty connected edge sets of T(X), wherever they sit.
inline std::vector<EdgeSet> connected_edge_sets(const Tree& x) {
  const EdgeSet pool = inner_edges(x);
  return filtered_subsets(pool, [&](const EdgeSet& s) {
    return !s.empty() && connected_through(x, s, x.edges()[s[0]].u);
  });
}

/// Number of edges outside Y touching Y, via degree sums: each outside edge
/// meets Y in exactly one vertex, each inside edge is counted twice.
inline int dimension(const Tree& x, const EdgeSet& y, Vertex p) {
  int total = 0;
  for (Vertex v : vertex_set(x, y, p)) total += static_cast<int>(x.neighbors(v).size());
  return total - 2 * static_cast<int>(y.size());
}

inline bool touches(const Tree& x, EdgeId e, const std::set<Vertex>& verts) {
  return verts.count(x.edges()[e].u) || verts.count(x.edges()[e].v);
}

inline bool has_edge(const EdgeSet& s, EdgeId e) { return std::find(s.begin(), s.end(), e) != s.end(); }

/// Closures meet iff each edge of one subtree lies in, or touches, the other.
inline bool closures_meet(const Tree& x, const EdgeSet& g, const EdgeSet& g2, Vertex p) {
  const auto vg = vertex_set(x, g, p);
  const auto vg2 = vertex_set(x, g2, p);
  for (EdgeId e : g)
    if (!has_edge(g2, e) && !touches(x, e, vg2)) return false;
  for (EdgeId e : g2)
    if (!has_edge(g, e) && !touches(x, e, vg)) return false;
  return true;
}

/// Edges outside G u G' touching a vertex common to both.
inline int intersection_dim(const Tree& x, const EdgeSet& g, const EdgeSet& g2, Vertex p) {
  const auto vg = vertex_set(x, g, p);
  const auto vg2 = vertex_set(x, g2, p);
  std::set<Vertex> common;
  for (Vertex v : vg)
    if (vg2.count(v)) common.insert(v);
  int n = 0;
  for (EdgeId e = 0; e < x.edge_count(); ++e)
    if (!has_edge(g, e) && !has_edge(g2, e) && touches(x, e, common)) ++n;
  return n;
}

/// The edge e with big = small u {e}, if there is one.
inline std::optional<EdgeId> added_edge(const EdgeSet& small, const EdgeSet& big) {
  if (big.size() != small.size() + 1) return std::nullopt;
  std::optional<EdgeId> extra;
  for (EdgeId e : big) {
    if (has_edge(small, e)) continue;
    if (extra) return std::nullopt;
    extra = e;
  }
  for (EdgeId e : small)
    if (!has_edge(big, e)) return std::nullopt;
  return extra;
}

inline bool is_proper_subset(const EdgeSet& a, const EdgeSet& b) {
  if (a.size() >= b.size()) return false;
  for (EdgeId e : a)
    if (!has_edge(b, e)) return false;
  return true;
}

/// True when the edge set is a path starting at p (the empty path included).
inline bool is_path_from(const Tree& x, const EdgeSet& s, Vertex p) {
  std::map<Vertex, int> degree;
  for (EdgeId e : s) {
    ++degree[x.edges()[e].u];
    ++degree[x.edges()[e].v];
  }
  for (const auto& [v, d] : degree) {
    if (d > 2) return false;
    if (v == p && d > 1) return false;
  }
  return true;
}

inline int leaf_count(const Tree& x) {
  int n = 0;
  for (Vertex v = 0; v < x.vertex_count(); ++v)
    if (x.neighbors(v).size() == 1) ++n;
  return n;
}

}  // namespace oracle

namespace check_names {
inline constexpr const char* kCellEnumeration = "cell-enumeration";
inline constexpr const char* kCellDimension = "cell-dimension";
inline constexpr const char* kMinimax = "minimax";
inline constexpr const char* kIncidence = "incidence-lower-bound";
inline constexpr const char* kMonotonicity = "monotonicity";
inline constexpr const char* kCovering = "covering-law";
inline constexpr const char* kCoveringConverse = "covering-converse";
inline constexpr const char* kDisjointness = "disjointness";
inline constexpr const char* kIntersectionDim = "intersection-dimension";
inline constexpr const char* kPathCells = "path-cells";
inline constexpr const char* kRoundTrip = "round-trip";
inline constexpr const char* kAugmentation = "augmentation-soundness";
inline constexpr const char* kSignatureDistinct = "signature-distinct";
inline constexpr const char* kHyperspaceIffIso = "hyperspace-iff-isomorphic";
inline constexpr const char* kKx = "kx-equals-homogeneity";
}  // namespace check_names

/// Checks a complex against brute force. `x` is the augmented pointed tree
/// the complex claims to describe and `original` the pair before
/// augmentation. Failures are counted, never thrown.
inline VerificationReport check_complex(const PointedTree& original, const PointedTree& x,
                                        const CellComplex& c) {
  namespace cn = check_names;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.scope = static_cast<int>(original.tree.edge_count());
  const Tree& tree = x.tree;
  const Vertex p = x.basepoint;
  const std::size_t n = c.size();
  r.add_count("cells", n);
  r.add_count("pairs", n * (n - (n ? 1 : 0)) / 2);

  auto witness = [&](const std::string& detail) {
    return [&, detail] {
      return nlohmann::json{{"detail", detail},
                            {"original", io::tree_to_json(original)},
                            {"tree", io::tree_to_json(x)},
                            {"complex", io::complex_to_json(c, tree)}};
    };
  };
  auto cell_name = [](std::size_t i) { return "cell " + std::to_string(i); };
  auto pair_name = [](std::size_t i, std::size_t j) {
    return "cells " + std::to_string(i) + "," + std::to_string(j);
  };

  // Independent enumeration of Sub_p(T(X)).
  const bool small = oracle::inner_edges(tree).size() <= oracle::kMaxSubsetEdges;
  if (small) {
    auto expected = oracle::rooted_subtrees(tree, p);
    std::vector<oracle::EdgeSet> actual;
    for (const auto& cell : c.cells) actual.push_back(cell.subtree.edges);
    std::sort(actual.begin(), actual.end());
    detail::record(r.check(cn::kCellEnumeration), actual == expected,
                   witness("expected " + std::to_string(expected.size()) + " subtrees, complex has " +
                           std::to_string(actual.size())));
  } else {
    r.check(cn::kCellEnumeration).skipped = true;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const int expected = oracle::dimension(tree, c.cells[i].subtree.edges, p);
    detail::record(r.check(cn::kCellDimension), c.cells[i].dimension == expected,
                   witness(cell_name(i) + ": dim " + std::to_string(c.cells[i].dimension) +
                           ", frontier count " + std::to_string(expected)));
  }

  // Minimum is ord(p) at {p} only; maximum is |E(X)| at T(X) only.
  {
    const int ord = static_cast<int>(tree.neighbors(p).size());
    const int ends = oracle::leaf_count(tree);
    const auto t_edges = oracle::inner_edges(tree);
    std::size_t min_hits = 0, max_hits = 0;
    bool min_ok = n > 0, max_ok = n > 0;
    int lo = n ? c.cells[0].dimension : 0, hi = lo;
    for (const auto& cell : c.cells) {
      lo = std::min(lo, cell.dimension);
      hi = std::max(hi, cell.dimension);
    }
    for (const auto& cell : c.cells) {
      if (cell.dimension == lo) {
        ++min_hits;
        min_ok = min_ok && cell.subtree.edges.empty();
      }
      if (cell.dimension == hi) {
        ++max_hits;
        max_ok = max_ok && cell.subtree.edges == t_edges;
      }
    }
    detail::record(r.check(cn::kMinimax), min_ok && min_hits == 1 && lo == ord,
                   witness("min dim " + std::to_string(lo) + " (x" + std::to_string(min_hits) +
                           "), ord(p) " + std::to_string(ord)));
    detail::record(r.check(cn::kMinimax), max_ok && max_hits == 1 && hi == ends,
                   witness("max dim " + std::to_string(hi) + " (x" + std::to_string(max_hits) +
                           "), |E(X)| " + std::to_string(ends)));
  }

  if (small) {
    for (const auto& g : oracle::connected_edge_sets(tree)) {
      const auto verts = oracle::vertex_set(tree, g, tree.edges()[g[0]].u);
      int outside = 0;
      for (EdgeId e = 0; e < tree.edge_count(); ++e)
        if (!oracle::has_edge(g, e) && oracle::touches(tree, e, verts)) ++outside;
      detail::record(r.check(cn::kIncidence), outside >= 2,
                     witness("edge set of size " + std::to_string(g.size()) + " has " +
                             std::to_string(outside) + " incident outside edges"));
    }
  } else {
    r.check(cn::kIncidence).skipped = true;
  }

  std::optional<HasseDiagram> diagram;
  try {
    diagram = hasse(c.abstract());
  } catch (const Error&) {
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& gi = c.cells[i].subtree.edges;
      const auto& gj = c.cells[j].subtree.edges;
      const int di = c.cells[i].dimension;
      const int dj = c.cells[j].dimension;
      const auto inter = c.intersection(i, j);

      if (oracle::is_proper_subset(gi, gj))
        detail::record(r.check(cn::kMonotonicity), di < dj,
                       witness(pair_name(i, j) + ": subtree inclusion without dimension increase"));

      if (auto e = oracle::added_edge(gi, gj)) {
        const auto [u, v] = tree.edges()[*e];
        const auto vi = oracle::vertex_set(tree, gi, p);
        const Vertex fresh = vi.count(u) ? v : u;
        const int ord_new = static_cast<int>(tree.neighbors(fresh).size());
        const bool ok = inter && *inter == di - 1 && dj == di + ord_new - 2;
        detail::record(r.check(cn::kCovering), ok,
                       witness(pair_name(i, j) + ": covering pair violates the covering law"));
      }

      if (inter && *inter == di - 1 && dj > di)
        detail::record(r.check(cn::kCoveringConverse), oracle::added_edge(gi, gj).has_value(),
                       witness(pair_name(i, j) + ": intersection dim(" + std::to_string(i) +
                               ")-1 without a single added edge"));

      if (i < j) {
        const bool meets = oracle::closures_meet(tree, gi, gj, p);
        detail::record(r.check(cn::kDisjointness), meets == inter.has_value(),
                       witness(pair_name(i, j) + ": intersection " +
                               (inter ? std::string("present") : std::string("absent")) +
                               ", mutual incidence " + (meets ? "holds" : "fails")));
        if (inter && meets) {
          const int expected = oracle::intersection_dim(tree, gi, gj, p);
          detail::record(r.check(cn::kIntersectionDim), *inter == expected,
                         witness(pair_name(i, j) + ": intersection dim " + std::to_string(*inter) +
                                 ", direct count " + std::to_string(expected)));
        }
      }
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    const bool is_path = oracle::is_path_from(tree, c.cells[j].subtree.edges, p);
    bool claims_path = false;
    if (diagram) claims_path = j == diagram->base || diagram->below[j].size() == 1;
    detail::record(r.check(cn::kPathCells), diagram && claims_path == is_path,
                   witness(cell_name(j) + ": path subtree " + (is_path ? "yes" : "no") +
                           ", covers exactly one cell " + (claims_path ? "yes" : "no")));
  }

  std::optional<PointedTree> rebuilt;
  try {
    rebuilt = reconstruct(c.abstract());
  } catch (const Error&) {
  }
  detail::record(r.check(cn::kRoundTrip), rebuilt && rooted_isomorphic(*rebuilt, x),
                 witness("reconstruction is not rooted-isomorphic to the source"));

  if (c.attached > 0) {
    // Every way of removing the attached leaves must give back (X, p).
    bool ok = rebuilt.has_value();
    if (rebuilt) {
      std::vector<Vertex> root_leaves;
      for (Vertex w : rebuilt->tree.neighbors(rebuilt->basepoint))
        if (rebuilt->tree.neighbors(w).size() == 1) root_leaves.push_back(w);
      std::vector<bool> choose(root_leaves.size(), false);
      std::fill(choose.end() - std::min<std::ptrdiff_t>(c.attached, choose.size()), choose.end(), true);
      const auto want = canonical_code(original);
      ok = root_leaves.size() >= static_cast<std::size_t>(c.attached);
      do {
        if (!ok) break;
        if (root_leaves.size() == static_cast<std::size_t>(c.attached) &&
            rebuilt->tree.edge_count() == root_leaves.size()) {
          // Nothing would be left once the attached arcs are gone.
          ok = false;
          break;
        }
        std::vector<std::string> names;
        std::vector<Vertex> remap(rebuilt->tree.vertex_count());
        std::set<Vertex> drop;
        for (std::size_t k = 0; k < root_leaves.size(); ++k)
          if (choose[k]) drop.insert(root_leaves[k]);
        for (Vertex v = 0; v < rebuilt->tree.vertex_count(); ++v) {
          if (drop.count(v)) continue;
          remap[v] = names.size();
          names.push_back(rebuilt->tree.name(v));
        }
        std::vector<Edge> edges;
        for (const auto& e : rebuilt->tree.edges())
          if (!drop.count(e.u) && !drop.count(e.v)) edges.push_back({remap[e.u], remap[e.v]});
        PointedTree stripped{Tree::from_edges(std::move(names), std::move(edges)),
                             remap[rebuilt->basepoint]};
        ok = canonical_code(normalize(stripped)) == want;
      } while (std::next_permutation(choose.begin(), choose.end()));
    }
    detail::record(r.check(cn::kAugmentation), ok,
                   witness("removing attached arcs does not give back the original pair"));
  }

  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// Builds the complex of (X, p) and runs every check on it.
inline VerificationReport check_pointed(const PointedTree& t, const BuildOptions& options = {}) {
  const auto aug = augment(t);
  CellComplex c = build_complex(aug.tree, options);
  c.basepoint_order = t.basepoint_order();
  c.attached = aug.attached;
  return check_complex(t, aug.tree, c);
}

/// Re-runs check_complex on a counterexample emitted by check_complex.
inline VerificationReport replay_counterexample(const nlohmann::json& witness) {
  const PointedTree original = io::pointed_tree_from_json(witness.at("original"));
  const PointedTree x = io::pointed_tree_from_json(witness.at("tree"));
  return check_complex(original, x, io::cell_complex_from_json(witness.at("complex"), x));
}

/// Same pointed tree under a random renaming and reordering of vertices
/// and edges.
inline PointedTree relabeled(const PointedTree& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = t.tree.vertex_count();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(n);
  for (Vertex v = 0; v < n; ++v) names[perm[v]] = "q" + std::to_string(perm[v]);
  std::vector<Edge> edges;
  for (const auto& e : t.tree.edges()) {
    if (rng() & 1u)
      edges.push_back({perm[e.v], perm[e.u]});
    else
      edges.push_back({perm[e.u], perm[e.v]});
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return {Tree::from_edges(std::move(names), std::move(edges)), perm[t.basepoint]};
}

struct SweepOptions {
  unsigned jobs = 1;
  BuildOptions build{};
};

/// Every pointed class up to `max_edges`: signatures are pairwise distinct
/// and equal signatures coincide with rooted isomorphism.
inline VerificationReport uniqueness_sweep(int max_edges, const SweepOptions& options = {}) {
  namespace cn = check_names;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.scope = max_edges;
  const auto pointed = enumerate_pointed(max_edges);
  const std::size_t n = pointed.size();
  r.add_count("pointed_classes", n);

  std::vector<Signature> sigs(n), relabeled_sigs(n);
  std::vector<bool> relabel_iso(n);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    sigs[i] = signature(pointed[i], options.build);
    const auto copy = relabeled(pointed[i], 0x9e3779b97f4a7c15ULL ^ i);
    relabeled_sigs[i] = signature(copy, options.build);
    relabel_iso[i] = rooted_isomorphic(copy, pointed[i]);
  });

  auto pair_witness = [&](std::size_t i, std::size_t j) {
    return [&, i, j] {
      return nlohmann::json{{"a", io::tree_to_json(pointed[i])},
                            {"b", io::tree_to_json(pointed[j])},
                            {"signature_a", io::signature_to_json(sigs[i])},
                            {"signature_b", io::signature_to_json(sigs[j])}};
    };
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_sig = sigs[i] == sigs[j];
      detail::record(r.check(cn::kSignatureDistinct), !same_sig, pair_witness(i, j));
      const bool iso = rooted_isomorphic(pointed[i], pointed[j]);
      detail::record(r.check(cn::kHyperspaceIffIso), same_sig == iso, pair_witness(i, j));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool ok = relabel_iso[i] && relabeled_sigs[i] == sigs[i];
    detail::record(r.check(cn::kHyperspaceIffIso), ok, pair_witness(i, i));
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// Number of distinct hyperspaces C(x, X) over all points x: every vertex,
/// and one interior point of every edge. No orbit computation involved.
inline int kx_size(const Tree& tree, const BuildOptions& options = {}) {
  std::set<Signature> seen;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) seen.insert(signature({tree, v}, options));
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    auto [split, mid] = tree.subdivided(e, tree.fresh_name("mid"));
    seen.insert(signature({std::move(split), mid}, options));
  }
  return static_cast<int>(seen.size());
}

inline VerificationReport corollary_sweep(int max_edges, const SweepOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.scope = max_edges;
  const auto trees = enumerate_trees(max_edges);
  r.add_count("trees", trees.size());
  std::vector<int> kx(trees.size()), hd(trees.size());
  parallel_for(trees.size(), options.jobs, [&](std::size_t i) {
    kx[i] = kx_size(trees[i], options.build);
    hd[i] = homogeneity_degree(trees[i]);
  });
  for (std::size_t i = 0; i < trees.size(); ++i)
    detail::record(r.check(check_names::kKx), kx[i] == hd[i], [&, i] {
      return nlohmann::json{{"tree", io::tree_to_json(trees[i])},
                            {"kx_size", kx[i]},
                            {"homogeneity_degree", hd[i]}};
    });
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

/// check_pointed over every pointed class up to `max_edges`.
inline VerificationReport pointed_sweep(int max_edges, const SweepOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto pointed = enumerate_pointed(max_edges);
  std::vector<VerificationReport> parts(pointed.size());
  parallel_for(pointed.size(), options.jobs,
               [&](std::size_t i) { parts[i] = check_pointed(pointed[i], options.build); });
  VerificationReport r;
  r.scope = max_edges;
  r.add_count("pointed_classes", pointed.size());
  for (const auto& part : parts) r.merge(part);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j{{"name", c.name}, {"instances", c.instances}, {"failures", c.failures},
                     {"skipped", c.skipped}};
    j["counterexample"] = c.counterexample ? *c.counterexample : nlohmann::json(nullptr);
    checks.push_back(std::move(j));
  }
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  return {{"scope", r.scope},
          {"passed", r.passed()},
          {"counts", std::move(counts)},
          {"checks", std::move(checks)},
          {"elapsed_seconds", r.elapsed.count()}};
}

/// Fixed-width table, one row per check.
inline void print_report(std::ostream& os, const VerificationReport& r, bool show_elapsed = true) {
  os << "scope: " << r.scope << '\n';
  for (const auto& [k, v] : r.counts) os << k << ": " << v << '\n';
  os << std::left << std::setw(28) << "check" << std::right << std::setw(12) << "instances"
     << std::setw(10) << "failures" << "  status\n";
  for (const auto& c : r.checks) {
    os << std::left << std::setw(28) << c.name << std::right << std::setw(12) << c.instances
       << std::setw(10) << c.failures << "  "
       << (c.skipped && c.passed() ? "SKIP" : c.passed() ? "PASS" : "FAIL") << '\n';
  }
  for (const auto& c : r.checks)
    if (c.counterexample) os << "counterexample[" << c.name << "]: " << c.counterexample->dump() << '\n';
  if (show_elapsed) os << "elapsed: " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s\n";
}

}  // namespace hypertree
