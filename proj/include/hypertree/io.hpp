#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypertree/complex.hpp"
#include "hypertree/error.hpp"
#include "hypertree/reconstruct.hpp"
#include "hypertree/tree.hpp"

namespace hypertree::io {

using json = nlohmann::json;

// ---- Tree JSON -------------------------------------------------------------
//   {"vertices": ["a", ...], "edges": [["a", "b"], ...], "basepoint": "a"}
// "vertices" is optional on input; "basepoint" is optional for plain trees.

struct TreeDocument {
  Tree tree;
  std::optional<Vertex> basepoint;
};

namespace detail {

inline std::string as_vertex_id(const json& j, const char* where) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidInput, std::string(where) + ": vertex ids must be strings");
  return j.get<std::string>();
}

}  // namespace detail

inline TreeDocument tree_document_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "tree document must be a JSON object");
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw Error(ErrorCode::InvalidInput, "tree document needs an \"edges\" array");
  std::vector<NamedEdge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw Error(ErrorCode::InvalidInput, "each edge must be a pair of vertex ids");
    edges.emplace_back(detail::as_vertex_id(e[0], "edges"), detail::as_vertex_id(e[1], "edges"));
  }
  std::vector<std::string> vertices;
  if (j.contains("vertices")) {
    if (!j.at("vertices").is_array()) throw Error(ErrorCode::InvalidInput, "\"vertices\" must be an array");
    for (const auto& v : j.at("vertices")) vertices.push_back(detail::as_vertex_id(v, "vertices"));
  }
  if (edges.empty()) throw Error(ErrorCode::EmptyEdgeList, "a tree needs at least one edge");
  Tree tree = Tree::from_named_edges(edges, vertices);
  std::optional<Vertex> basepoint;
  if (j.contains("basepoint")) {
    const std::string name = detail::as_vertex_id(j.at("basepoint"), "basepoint");
    basepoint = tree.find(name);
    if (!basepoint) throw Error(ErrorCode::BasepointMissing, "basepoint '" + name + "' is not a vertex");
  }
  return {std::move(tree), basepoint};
}

inline PointedTree pointed_tree_from_json(const json& j) {
  auto doc = tree_document_from_json(j);
  if (!doc.basepoint) throw Error(ErrorCode::BasepointMissing, "tree document has no \"basepoint\"");
  return {std::move(doc.tree), *doc.basepoint};
}

inline json tree_to_json(const Tree& tree, std::optional<Vertex> basepoint = std::nullopt) {
  json j;
  j["vertices"] = tree.names();
  json edges = json::array();
  for (const auto& [a, b] : tree.named_edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  if (basepoint) j["basepoint"] = tree.name(*basepoint);
  return j;
}

inline json tree_to_json(const PointedTree& t) { return tree_to_json(t.tree, t.basepoint); }

// ---- Complex JSON ----------------------------------------------------------
//   {"ord_basepoint": k, "attached": j,
//    "cells": [{"id": 0, "dim": 3, "edges": [["p", "a"], ...]}, ...],
//    "intersections": [[i, j, dim], ...]}      (i < j, present pairs only)

/// `x` is the (augmented) tree the complex was built on; it names the edges.
inline json complex_to_json(const CellComplex& c, const Tree& x) {
  json j;
  j["ord_basepoint"] = c.basepoint_order;
  j["attached"] = c.attached;
  json cells = json::array();
  for (std::size_t i = 0; i < c.cells.size(); ++i) {
    json edges = json::array();
    for (EdgeId e : c.cells[i].subtree.edges) edges.push_back({x.name(x.edge(e).u), x.name(x.edge(e).v)});
    cells.push_back({{"id", i}, {"dim", c.cells[i].dimension}, {"edges", std::move(edges)}});
  }
  j["cells"] = std::move(cells);
  json inter = json::array();
  for (const auto& [key, d] : c.intersections) inter.push_back({key.first, key.second, d});
  j["intersections"] = std::move(inter);
  return j;
}

/// Reads only what reconstruction may use: dimensions and intersections.
/// Edge labels in "cells" are accepted and ignored.
inline AbstractComplex complex_from_json(const json& j) {
  auto need_int = [](const json& obj, const char* key) {
    if (!obj.contains(key) || !obj.at(key).is_number_integer())
      throw Error(ErrorCode::InvalidInput, std::string("complex needs integer \"") + key + "\"");
    return obj.at(key).get<long long>();
  };
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "complex document must be a JSON object");
  AbstractComplex c;
  c.basepoint_order = static_cast<int>(need_int(j, "ord_basepoint"));
  c.attached = static_cast<int>(need_int(j, "attached"));
  if (c.basepoint_order < 1 || c.attached < 0 || c.attached > 2)
    throw Error(ErrorCode::InvalidInput, "ord_basepoint must be >= 1 and attached in 0..2");
  if (!j.contains("cells") || !j.at("cells").is_array() || j.at("cells").empty())
    throw Error(ErrorCode::InvalidInput, "complex needs a nonempty \"cells\" array");
  const auto& cells = j.at("cells");
  c.dims.assign(cells.size(), 0);
  std::vector<bool> seen(cells.size(), false);
  for (const auto& cell : cells) {
    if (!cell.is_object()) throw Error(ErrorCode::InvalidInput, "each cell must be an object");
    const auto id = need_int(cell, "id");
    if (id < 0 || static_cast<std::size_t>(id) >= cells.size() || seen[id])
      throw Error(ErrorCode::InvalidInput, "cell ids must be 0..n-1 without repeats");
    seen[id] = true;
    c.dims[id] = static_cast<int>(need_int(cell, "dim"));
    if (c.dims[id] < 0) throw Error(ErrorCode::InvalidInput, "cell dimensions must be nonnegative");
  }
  if (j.contains("intersections")) {
    if (!j.at("intersections").is_array())
      throw Error(ErrorCode::InvalidInput, "\"intersections\" must be an array");
    for (const auto& t : j.at("intersections")) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
          !t[2].is_number_integer())
        throw Error(ErrorCode::InvalidInput, "intersections must be integer triples [i, j, dim]");
      const auto a = t[0].get<long long>(), b = t[1].get<long long>(), d = t[2].get<long long>();
      if (a < 0 || b <= a || static_cast<std::size_t>(b) >= cells.size() || d < 0)
        throw Error(ErrorCode::InvalidInput, "intersection triple needs 0 <= i < j < n and dim >= 0");
      if (!c.intersections.emplace(std::make_pair(std::size_t(a), std::size_t(b)), int(d)).second)
        throw Error(ErrorCode::InvalidInput, "intersection pair listed twice");
    }
  }
  return c;
}

/// Reads a complex together with the tree it was built on, keeping the
/// subtree of each cell. Dimensions and intersections are taken verbatim from
/// the document, so a corrupted complex stays corrupted.
inline CellComplex cell_complex_from_json(const json& j, const PointedTree& x) {
  const AbstractComplex a = complex_from_json(j);
  CellComplex c;
  c.basepoint_order = a.basepoint_order;
  c.attached = a.attached;
  c.intersections = a.intersections;
  c.cells.resize(a.size());
  for (const auto& cell : j.at("cells")) {
    const auto id = cell.at("id").get<std::size_t>();
    Subtree y{{}, x.basepoint};
    if (cell.contains("edges")) {
      for (const auto& e : cell.at("edges")) {
        if (!e.is_array() || e.size() != 2)
          throw Error(ErrorCode::InvalidInput, "cell edges must be pairs of vertex ids");
        const auto u = x.tree.find(detail::as_vertex_id(e[0], "cells"));
        const auto v = x.tree.find(detail::as_vertex_id(e[1], "cells"));
        const auto edge = (u && v) ? x.tree.edge_between(*u, *v) : std::nullopt;
        if (!edge) throw Error(ErrorCode::InvalidInput, "cell edge is not an edge of the tree");
        y.edges.push_back(*edge);
      }
    }
    std::sort(y.edges.begin(), y.edges.end());
    c.cells[id] = {y, a.dims[id], frontier_of(x.tree, y)};
  }
  return c;
}

// ---- Signature JSON: {"ord": k, "attached": j, "code": "..."} -------------

inline json signature_to_json(const Signature& s) {
  return {{"ord", s.basepoint_order}, {"attached", s.attached}, {"code", s.code.str()}};
}

// ---- DOT -------------------------------------------------------------------

inline std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

/// Undirected graph; the basepoint is drawn as a double circle.
inline std::string tree_to_dot(const Tree& tree, std::optional<Vertex> basepoint = std::nullopt) {
  std::ostringstream os;
  os << "graph tree {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    os << "  " << quoted(tree.name(v));
    if (basepoint && v == *basepoint) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const auto& [a, b] : tree.named_edges()) os << "  " << quoted(a) << " -- " << quoted(b) << ";\n";
  os << "}\n";
  return os.str();
}

/// Covering pairs only; nodes carry cell dimensions, arrows the order of the
/// vertex each cover adds.
inline std::string hasse_to_dot(const AbstractComplex& c) {
  const HasseDiagram h = hasse(c);
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    os << "  c" << i << " [label=\"c" << i << "\\ndim=" << c.dims[i] << "\"";
    if (i == h.base) os << ", shape=box";
    os << "];\n";
  }
  for (const auto& cover : h.covers)
    os << "  c" << cover.from << " -> c" << cover.to << " [label=\"ord=" << cover.label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hypertree::io
