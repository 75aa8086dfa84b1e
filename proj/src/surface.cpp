/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/surface.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qrfcode/errors.hpp"
#include "qrfcode/gf2.hpp"
#include "qrfcode/io.hpp"

namespace qrf::surface {

namespace {

void check_edge_id(const CombinatorialMap& map, int e) {
  if (e < 0 || e >= map.edge_count())
    throw_error(ErrorCode::invalid_argument,
                "edge " + std::to_string(e) + " out of range");
}

void check_vertex_id(const CombinatorialMap& map, int v) {
  if (v < 0 || v >= map.vertex_count)
    throw_error(ErrorCode::invalid_argument,
                "vertex " + std::to_string(v) + " out of range");
}

void check_face_id(const CombinatorialMap& map, int f) {
  if (f < 0 || f >= map.face_count())
    throw_error(ErrorCode::invalid_argument,
                "face " + std::to_string(f) + " out of range");
}

// Edges incident to each vertex an odd number of times, ascending.
// Self-loops contribute twice and drop out.
std::vector<std::vector<int>> vertex_stars(const CombinatorialMap& map) {
  std::vector<std::vector<int>> star(map.vertex_count);
  for (int e = 0; e < map.edge_count(); ++e) {
    if (map.edges[e][0] == map.edges[e][1]) continue;
    for (int end : map.edges[e])
      if (end >= 0) star[end].push_back(e);
  }
  return star;
}

// Edges bordering each face an odd number of times, ascending.
std::vector<std::vector<int>> face_borders(const CombinatorialMap& map) {
  std::vector<std::vector<int>> border(map.face_count());
  for (int f = 0; f < map.face_count(); ++f) {
    std::set<int> odd;
    for (int e : map.faces[f]) {
      check_edge_id(map, e);
      if (!odd.insert(e).second) odd.erase(e);
    }
    border[f].assign(odd.begin(), odd.end());
  }
  return border;
}

Pauli letters_on(const CombinatorialMap& map, const std::vector<int>& edges,
                 char letter) {
  std::string text(static_cast<std::size_t>(map.edge_count()), 'I');
  for (int e : edges) text[static_cast<std::size_t>(e)] = letter;
  return Pauli::from_text(text);
}

gf2::BitVec edge_indicator(const CombinatorialMap& map,
                           const std::vector<int>& edges) {
  gf2::BitVec v(static_cast<std::size_t>(map.edge_count()), 0);
  for (int e : edges) v[static_cast<std::size_t>(e)] ^= 1;
  return v;
}

// Rows delta_f over the edges, the plaquette-boundary row space.
gf2::BitMatrix face_boundary_matrix(const CombinatorialMap& map) {
  std::vector<gf2::BitVec> rows;
  rows.reserve(static_cast<std::size_t>(map.face_count()));
  for (const auto& border : face_borders(map))
    rows.push_back(edge_indicator(map, border));
  return gf2::BitMatrix::from_rows(rows);
}

// Breadth-first tree over a node set, scanning each node's incident list
// in ascending edge order. Returns per-node discovery edge (-1 at the root
// and for unreached nodes).
struct BfsTree {
  std::vector<int> parent_edge;
  std::vector<int> parent_node;
  std::vector<char> reached;
};

BfsTree bfs_tree(int node_count, int root,
                 const std::vector<std::vector<std::pair<int, int>>>& adj) {
  BfsTree out;
  out.parent_edge.assign(static_cast<std::size_t>(node_count), -1);
  out.parent_node.assign(static_cast<std::size_t>(node_count), -1);
  out.reached.assign(static_cast<std::size_t>(node_count), 0);
  std::queue<int> queue;
  out.reached[static_cast<std::size_t>(root)] = 1;
  queue.push(root);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const auto& [edge, other] : adj[static_cast<std::size_t>(u)]) {
      if (out.reached[static_cast<std::size_t>(other)]) continue;
      out.reached[static_cast<std::size_t>(other)] = 1;
      out.parent_edge[static_cast<std::size_t>(other)] = edge;
      out.parent_node[static_cast<std::size_t>(other)] = u;
      queue.push(other);
    }
  }
  return out;
}

std::vector<int> walk_to_root(const BfsTree& tree, int node) {
  std::vector<int> path;
  while (tree.parent_edge[static_cast<std::size_t>(node)] >= 0) {
    path.push_back(tree.parent_edge[static_cast<std::size_t>(node)]);
    node = tree.parent_node[static_cast<std::size_t>(node)];
  }
  return path;
}

void check_rectangle(const CombinatorialMap& map) {
  if (map.closed || map.length < 1)
    throw_error(ErrorCode::invalid_argument,
                "operation needs a planar rectangle lattice");
}

CombinatorialMap map_from_json(const nlohmann::json& doc);

}  // namespace

CombinatorialMap build_rect_lattice(int length, int height) {
  if (length < 1 || height < 1)
    throw_error(ErrorCode::invalid_argument,
                "lattice needs length >= 1 and height >= 1");
  const int l = length, h = height;
  CombinatorialMap map;
  map.closed = false;
  map.length = l;
  map.height = h;
  map.vertex_count = (l + 1) * h;

  // Vertical edges: (x, j) spans height levels j and j+1; level 0 is the
  // bottom rough boundary, level h+1 the top one, level y in 1..h is the
  // vertex row y.
  for (int j = 0; j <= h; ++j)
    for (int x = 0; x <= l; ++x) {
      const int below = (j == 0) ? -1 : (j - 1) * (l + 1) + x;
      const int above = (j == h) ? -1 : j * (l + 1) + x;
      map.edges.push_back({below, above});
      const bool rough = (j == 0 || j == h);
      const bool smooth = (x == 0 || x == l);
      map.boundary.push_back(rough && smooth  ? EdgeBoundary::corner
                             : rough          ? EdgeBoundary::rough
                             : smooth         ? EdgeBoundary::smooth
                                              : EdgeBoundary::none);
    }
  // Horizontal edges: (x, y) joins vertices (x, y) and (x+1, y).
  for (int y = 1; y <= h; ++y)
    for (int x = 0; x < l; ++x) {
      map.edges.push_back({(y - 1) * (l + 1) + x, (y - 1) * (l + 1) + x + 1});
      map.boundary.push_back(EdgeBoundary::none);
    }

  // Faces: (x, j) between height levels j and j+1; incomplete squares at
  // the rough levels j = 0 and j = h.
  const int horizontal_base = (h + 1) * (l + 1);
  for (int j = 0; j <= h; ++j)
    for (int x = 0; x < l; ++x) {
      std::vector<int> border = {j * (l + 1) + x, j * (l + 1) + x + 1};
      if (j >= 1) border.push_back(horizontal_base + (j - 1) * l + x);
      if (j < h) border.push_back(horizontal_base + j * l + x);
      std::sort(border.begin(), border.end());
      map.faces.push_back(std::move(border));
    }
  return map;
}

CombinatorialMap build_closed_map(
    int vertex_count, const std::vector<std::array<int, 2>>& edges,
    const std::vector<std::vector<int>>& faces) {
  if (vertex_count < 1)
    throw_error(ErrorCode::invalid_argument, "closed map needs vertices");
  if (edges.empty())
    throw_error(ErrorCode::invalid_argument, "closed map needs edges");
  CombinatorialMap map;
  map.closed = true;
  map.vertex_count = vertex_count;
  map.edges = edges;
  map.faces = faces;
  map.boundary.assign(edges.size(), EdgeBoundary::none);
  for (const auto& e : edges)
    if (e[0] < 0 || e[0] >= vertex_count || e[1] < 0 || e[1] >= vertex_count)
      throw_error(ErrorCode::validation_error,
                  "closed map has a dangling edge end");

  // Each edge must separate exactly two distinct faces.
  std::vector<int> sides(edges.size(), 0);
  for (const auto& border : face_borders(map))
    for (int e : border) ++sides[static_cast<std::size_t>(e)];
  for (std::size_t e = 0; e < sides.size(); ++e)
    if (sides[e] != 2)
      throw_error(ErrorCode::validation_error,
                  "edge " + std::to_string(e) + " bounds " +
                      std::to_string(sides[e]) + " faces, expected 2");

  // Connectivity, needed for the genus bookkeeping below.
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(vertex_count));
  for (int e = 0; e < map.edge_count(); ++e) {
    const auto [a, b] = map.edges[e];
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)].push_back({e, b});
    adj[static_cast<std::size_t>(b)].push_back({e, a});
  }
  const BfsTree tree = bfs_tree(vertex_count, 0, adj);
  for (int v = 0; v < vertex_count; ++v)
    if (!tree.reached[static_cast<std::size_t>(v)])
      throw_error(ErrorCode::validation_error, "closed map is not connected");

  const int euler = map.face_count() - map.edge_count() + map.vertex_count;
  if ((2 - euler) % 2 != 0 || euler > 2)
    throw_error(ErrorCode::validation_error,
                "Euler characteristic " + std::to_string(euler) +
                    " does not match any orientable genus");
  map.genus = (2 - euler) / 2;
  return map;
}

int vertical_edge_index(const CombinatorialMap& map, int x, int j) {
  check_rectangle(map);
  if (x < 0 || x > map.length || j < 0 || j > map.height)
    throw_error(ErrorCode::invalid_argument, "vertical edge out of range");
  return j * (map.length + 1) + x;
}

int horizontal_edge_index(const CombinatorialMap& map, int x, int y) {
  check_rectangle(map);
  if (x < 0 || x >= map.length || y < 1 || y > map.height)
    throw_error(ErrorCode::invalid_argument, "horizontal edge out of range");
  return (map.height + 1) * (map.length + 1) + (y - 1) * map.length + x;
}

int vertex_index(const CombinatorialMap& map, int x, int y) {
  check_rectangle(map);
  if (x < 0 || x > map.length || y < 1 || y > map.height)
    throw_error(ErrorCode::invalid_argument, "vertex out of range");
  return (y - 1) * (map.length + 1) + x;
}

int face_index(const CombinatorialMap& map, int x, int j) {
  check_rectangle(map);
  if (x < 0 || x >= map.length || j < 0 || j > map.height)
    throw_error(ErrorCode::invalid_argument, "face out of range");
  return j * map.length + x;
}

Pauli vertex_operator(const CombinatorialMap& map, int v) {
  check_vertex_id(map, v);
  return letters_on(map, vertex_stars(map)[static_cast<std::size_t>(v)], 'X');
}

Pauli plaquette_operator(const CombinatorialMap& map, int f) {
  check_face_id(map, f);
  return letters_on(map, face_borders(map)[static_cast<std::size_t>(f)], 'Z');
}

Pauli string_operator(const CombinatorialMap& map,
                      const std::vector<int>& path, StringKind kind) {
  std::set<int> seen;
  for (int e : path) {
    check_edge_id(map, e);
    if (!seen.insert(e).second)
      throw_error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(e) + " listed twice in the path");
  }
  return letters_on(map, path, kind == StringKind::z ? 'Z' : 'X');
}

SurfaceCode vertex_plaquette_code(const CombinatorialMap& map) {
  SurfaceCode surf;
  surf.map = map;
  const auto stars = vertex_stars(map);
  const auto borders = face_borders(map);
  for (const auto& star : stars)
    surf.vertex_ops.push_back(letters_on(map, star, 'X'));
  for (const auto& border : borders)
    surf.face_ops.push_back(letters_on(map, border, 'Z'));

  for (std::size_t v = 0; v < surf.vertex_ops.size(); ++v)
    for (std::size_t f = 0; f < surf.face_ops.size(); ++f)
      if (!commutes(surf.vertex_ops[v], surf.face_ops[f]))
        throw_error(ErrorCode::validation_error,
                    "vertex operator " + std::to_string(v) +
                        " and plaquette operator " + std::to_string(f) +
                        " share an odd number of edges");

  // Kernel of (V, F) -> prod X_v prod Z_f over GF(2): columns are the
  // candidate generators, rows their symplectic coordinates.
  const int n = map.edge_count();
  std::vector<Pauli> all_ops = surf.vertex_ops;
  all_ops.insert(all_ops.end(), surf.face_ops.begin(), surf.face_ops.end());
  std::vector<gf2::BitVec> rows(
      2 * static_cast<std::size_t>(n),
      gf2::BitVec(all_ops.size(), 0));
  for (std::size_t i = 0; i < all_ops.size(); ++i)
    for (int q = 0; q < n; ++q) {
      rows[static_cast<std::size_t>(q)][i] = all_ops[i].x_bit(q) ? 1 : 0;
      rows[static_cast<std::size_t>(n + q)][i] = all_ops[i].z_bit(q) ? 1 : 0;
    }
  const auto kernel = gf2::kernel(gf2::BitMatrix::from_rows(rows));
  for (const auto& combo : kernel) {
    std::pair<std::vector<int>, std::vector<int>> element;
    Pauli product(n);
    for (std::size_t i = 0; i < combo.size(); ++i) {
      if (!combo[i]) continue;
      product = product * all_ops[i];
      if (i < surf.vertex_ops.size())
        element.first.push_back(static_cast<int>(i));
      else
        element.second.push_back(
            static_cast<int>(i - surf.vertex_ops.size()));
    }
    if (!product.is_identity_string() || product.phase_exp() != 0)
      throw_error(ErrorCode::validation_error,
                  "kernel combination is not exactly the identity");
    surf.kernel_basis.push_back(std::move(element));
  }
  surf.quotient_rank =
      static_cast<int>(all_ops.size() - surf.kernel_basis.size());
  if (!map.closed && !surf.kernel_basis.empty())
    throw_error(ErrorCode::validation_error,
                "planar representation must be faithful");

  std::vector<Pauli> generators;
  if (map.closed) {
    // Quotient handling: the last vertex and last face operators repeat
    // the products of all the others.
    generators.assign(surf.vertex_ops.begin(), surf.vertex_ops.end() - 1);
    generators.insert(generators.end(), surf.face_ops.begin(),
                      surf.face_ops.end() - 1);
    surf.code = build_code(n, generators,
                           "closed surface genus " +
                               std::to_string(map.genus));
    return surf;
  }

  generators = all_ops;
  // Logical pair: a rough-to-rough Z string down the left column and a
  // smooth-to-smooth X string across the bottom dangling edges.
  std::vector<int> left_column, bottom_row;
  for (int j = 0; j <= map.height; ++j)
    left_column.push_back(j * (map.length + 1));
  for (int x = 0; x <= map.length; ++x) bottom_row.push_back(x);
  surf.code = build_code(
      n, generators,
      "surface " + std::to_string(map.length) + "x" +
          std::to_string(map.height),
      {string_operator(map, left_column, StringKind::z)},
      {string_operator(map, bottom_row, StringKind::x)});
  return surf;
}

int homology_rank(const CombinatorialMap& map) {
  std::vector<gf2::BitVec> boundary_rows;
  boundary_rows.reserve(static_cast<std::size_t>(map.edge_count()));
  for (const auto& e : map.edges) {
    gf2::BitVec row(static_cast<std::size_t>(map.vertex_count), 0);
    for (int end : e)
      if (end >= 0) row[static_cast<std::size_t>(end)] ^= 1;
    boundary_rows.push_back(std::move(row));
  }
  const int cycle_dim =
      map.edge_count() - gf2::rank(gf2::BitMatrix::from_rows(boundary_rows));
  return cycle_dim - gf2::rank(face_boundary_matrix(map));
}

std::vector<int> homotopy_canonical(const CombinatorialMap& map,
                                    const std::vector<int>& path) {
  std::set<int> seen;
  for (int e : path) {
    check_edge_id(map, e);
    if (!seen.insert(e).second)
      throw_error(ErrorCode::invalid_argument,
                  "edge " + std::to_string(e) + " listed twice in the path");
  }
  const gf2::BitVec canon = gf2::coset_canonical(edge_indicator(map, path),
                                                 face_boundary_matrix(map));
  std::vector<int> out;
  for (std::size_t e = 0; e < canon.size(); ++e)
    if (canon[e]) out.push_back(static_cast<int>(e));
  return out;
}

std::pair<dense::Vec, dense::Vec> homological_codewords(
    const SurfaceCode& surf, const dense::Caps& caps) {
  if (surf.map.closed)
    throw_error(ErrorCode::precondition_failed,
                "codeword pair is defined for planar rectangles");
  const int n = surf.map.edge_count();
  dense::check_state_cap(n, caps);
  dense::Vec zero_bar =
      apply_group_average(surf.code, dense::basis_state(n, 0), caps);
  zero_bar /= zero_bar.norm();
  const dense::Vec one_bar =
      dense::apply_pauli(surf.code.logical_x()[0], zero_bar);
  return {zero_bar, one_bar};
}

ForestPair spanning_forests(const CombinatorialMap& map) {
  ForestPair out;
  const int vertex_nodes = map.vertex_count + (map.closed ? 0 : 1);
  const int vertex_sink = map.vertex_count;  // planar only
  const int vertex_root = map.closed ? map.vertex_count - 1 : vertex_sink;

  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(vertex_nodes));
  for (int e = 0; e < map.edge_count(); ++e) {
    int a = map.edges[e][0], b = map.edges[e][1];
    if (!map.closed) {
      if (a < 0) a = vertex_sink;
      if (b < 0) b = vertex_sink;
    }
    if (a == b) continue;
    adj[static_cast<std::size_t>(a)].push_back({e, b});
    adj[static_cast<std::size_t>(b)].push_back({e, a});
  }
  const BfsTree direct = bfs_tree(vertex_nodes, vertex_root, adj);
  std::vector<char> in_tree(static_cast<std::size_t>(map.edge_count()), 0);
  for (int v = 0; v < map.vertex_count; ++v) {
    if (!direct.reached[static_cast<std::size_t>(v)])
      throw_error(ErrorCode::validation_error,
                  "forest construction failed: vertex " + std::to_string(v) +
                      " unreachable");
    const int e = direct.parent_edge[static_cast<std::size_t>(v)];
    if (e >= 0) in_tree[static_cast<std::size_t>(e)] = 1;
  }

  // Dual pass over the edges not taken by the direct tree.
  const auto borders = face_borders(map);
  std::vector<std::vector<int>> edge_sides(
      static_cast<std::size_t>(map.edge_count()));
  for (std::size_t f = 0; f < borders.size(); ++f)
    for (int e : borders[f])
      edge_sides[static_cast<std::size_t>(e)].push_back(static_cast<int>(f));
  const int face_nodes = map.face_count() + (map.closed ? 0 : 1);
  const int face_sink = map.face_count();
  const int face_root = map.closed ? map.face_count() - 1 : face_sink;
  std::vector<std::vector<std::pair<int, int>>> dual_adj(
      static_cast<std::size_t>(face_nodes));
  for (int e = 0; e < map.edge_count(); ++e) {
    if (in_tree[static_cast<std::size_t>(e)]) continue;
    auto sides = edge_sides[static_cast<std::size_t>(e)];
    while (!map.closed && sides.size() < 2) sides.push_back(face_sink);
    if (sides.size() != 2 || sides[0] == sides[1]) continue;
    dual_adj[static_cast<std::size_t>(sides[0])].push_back({e, sides[1]});
    dual_adj[static_cast<std::size_t>(sides[1])].push_back({e, sides[0]});
  }
  const BfsTree dual = bfs_tree(face_nodes, face_root, dual_adj);
  std::vector<char> in_dual(static_cast<std::size_t>(map.edge_count()), 0);
  for (int f = 0; f < map.face_count(); ++f) {
    if (!dual.reached[static_cast<std::size_t>(f)])
      throw_error(ErrorCode::validation_error,
                  "forest construction failed: face " + std::to_string(f) +
                      " unreachable");
    const int e = dual.parent_edge[static_cast<std::size_t>(f)];
    if (e >= 0) in_dual[static_cast<std::size_t>(e)] = 1;
  }

  for (int e = 0; e < map.edge_count(); ++e) {
    if (in_tree[static_cast<std::size_t>(e)])
      out.tree.push_back(e);
    else if (in_dual[static_cast<std::size_t>(e)])
      out.dual_tree.push_back(e);
    else
      out.leftover.push_back(e);
  }
  const int expected_leftover = map.closed ? 2 * map.genus : 1;
  if (static_cast<int>(out.leftover.size()) != expected_leftover)
    throw_error(ErrorCode::validation_error,
                "forest construction failed: " +
                    std::to_string(out.leftover.size()) +
                    " leftover edges, expected " +
                    std::to_string(expected_leftover));

  if (map.closed) {
    out.root_vertex = vertex_root;
    out.root_face = face_root;
  }
  for (int v = 0; v < map.vertex_count; ++v)
    out.vertex_paths.push_back(walk_to_root(direct, v));
  for (int f = 0; f < map.face_count(); ++f)
    out.face_paths.push_back(walk_to_root(dual, f));
  return out;
}

Pauli forest_dual_string(const SurfaceCode& surf, const ForestPair& forests,
                         std::uint64_t chi) {
  const int m = surf.code.m();
  if (m < 64 && chi >> m)
    throw_error(ErrorCode::invalid_argument, "character out of range");
  const int vertex_gens =
      static_cast<int>(surf.vertex_ops.size()) - (surf.map.closed ? 1 : 0);
  Pauli op(surf.map.edge_count());
  for (int i = 0; i < m; ++i) {
    if (!((chi >> i) & 1)) continue;
    if (i < vertex_gens)
      op = op * string_operator(surf.map,
                                forests.vertex_paths[static_cast<std::size_t>(
                                    i)],
                                StringKind::z);
    else
      op = op * string_operator(surf.map,
                                forests.face_paths[static_cast<std::size_t>(
                                    i - vertex_gens)],
                                StringKind::x);
  }
  return op;
}

DualRep forest_dual_rep(const SurfaceCode& surf, const ForestPair& forests,
                        const dense::Caps& caps) {
  dense::check_matrix_cap(surf.map.edge_count(), caps);
  DualRep rep;
  rep.code = surf.code;
  const std::uint64_t order = surf.code.group_order();
  for (std::uint64_t chi = 0; chi < order; ++chi) {
    const Pauli op = forest_dual_string(surf, forests, chi);
    rep.ops.push_back(dense::pauli_matrix(op, caps));
    rep.pauli_ops.push_back(op);
  }
  return rep;
}

DualityVerdict check_forest_duality(const SurfaceCode& surf,
                                    const ForestPair& forests) {
  DualityVerdict verdict;
  const int m = surf.code.m();
  const Pauli unit = forest_dual_string(surf, forests, 0);
  if (!unit.is_identity_string() || unit.phase_exp() != 0) {
    verdict.ok = false;
    verdict.check = "unit";
    verdict.deviation = 2.0;
    verdict.note = "dual string of the trivial character is " +
                   unit.to_text();
    return verdict;
  }
  std::vector<Pauli> duals;
  for (int i = 0; i < m; ++i)
    duals.push_back(forest_dual_string(surf, forests, std::uint64_t{1} << i));
  const auto& gens = surf.code.generators();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const bool anticommutes = !commutes(gens[static_cast<std::size_t>(i)],
                                          duals[static_cast<std::size_t>(j)]);
      if (anticommutes != (i == j)) {
        verdict.ok = false;
        verdict.check = "weyl";
        verdict.left = static_cast<std::uint64_t>(i);
        verdict.right = static_cast<std::uint64_t>(j);
        verdict.deviation = 2.0;
        verdict.note = "generator " + std::to_string(i) +
                       " and dual string " + std::to_string(j) +
                       (anticommutes ? " anticommute" : " commute");
        return verdict;
      }
    }
  // Group law: an exact representation needs each generator dual to be an
  // involution and any two of them to commute; products in ascending bit
  // order then match forest_dual_string for every character.
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const Pauli forward = duals[static_cast<std::size_t>(i)] *
                            duals[static_cast<std::size_t>(j)];
      const Pauli backward = duals[static_cast<std::size_t>(j)] *
                             duals[static_cast<std::size_t>(i)];
      const bool involution =
          forward.is_identity_string() && forward.phase_exp() == 0;
      if ((i == j && !involution) || !(forward == backward)) {
        verdict.ok = false;
        verdict.check = "dual-group-law";
        verdict.left = static_cast<std::uint64_t>(i);
        verdict.right = static_cast<std::uint64_t>(j);
        verdict.deviation = 2.0;
        verdict.note = "dual strings " + std::to_string(i) + " and " +
                       std::to_string(j) +
                       (i == j ? " do not square to the identity"
                               : " do not commute");
        return verdict;
      }
    }
  return verdict;
}

DefectSector defect_sector(const SurfaceCode& surf, const dense::Vec& state,
                           double tol, const dense::Caps& caps) {
  const int n = surf.map.edge_count();
  dense::check_state_cap(n, caps);
  if (state.size() != (std::int64_t{1} << n))
    throw_error(ErrorCode::dimension_mismatch,
                "state dimension does not match the lattice");
  const double weight = state.squaredNorm();
  if (weight <= 0.0)
    throw_error(ErrorCode::invalid_argument, "zero state has no sector");

  DefectSector sector;
  const auto classify = [&](const Pauli& op, const std::string& what,
                            int id) {
    const dense::cd value =
        dense::inner(state, dense::apply_pauli(op, state)) / weight;
    if (std::abs(value - dense::cd(1, 0)) <= tol) return false;
    if (std::abs(value + dense::cd(1, 0)) <= tol) return true;
    throw_error(ErrorCode::validation_error,
                "ambiguous defect sector: " + what + " " +
                    std::to_string(id) + " expectation is not a sign");
    return false;
  };
  for (std::size_t v = 0; v < surf.vertex_ops.size(); ++v)
    if (classify(surf.vertex_ops[v], "vertex", static_cast<int>(v)))
      sector.vertices.push_back(static_cast<int>(v));
  for (std::size_t f = 0; f < surf.face_ops.size(); ++f)
    if (classify(surf.face_ops[f], "plaquette", static_cast<int>(f)))
      sector.faces.push_back(static_cast<int>(f));
  return sector;
}

CorrectedDefect correct_single_defect(const SurfaceCode& surf,
                                      const ForestPair& forests,
                                      const dense::Vec& state, double tol,
                                      const dense::Caps& caps) {
  CorrectedDefect out;
  out.sector = defect_sector(surf, state, tol, caps);
  const std::size_t total =
      out.sector.vertices.size() + out.sector.faces.size();
  if (total != 1)
    throw_error(ErrorCode::precondition_failed,
                "dressing correction needs exactly one defect, found " +
                    std::to_string(total));
  const Pauli dressing =
      out.sector.vertices.empty()
          ? string_operator(surf.map,
                            forests.face_paths[static_cast<std::size_t>(
                                out.sector.faces[0])],
                            StringKind::x)
          : string_operator(surf.map,
                            forests.vertex_paths[static_cast<std::size_t>(
                                out.sector.vertices[0])],
                            StringKind::z);
  out.state = dense::apply_pauli(dressing, state);
  return out;
}

namespace {

CombinatorialMap map_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("type"))
    throw_error(ErrorCode::parse_error, "lattice document needs 'type'");
  const std::string type = doc.at("type").get<std::string>();
  if (type == "rect") {
    if (!doc.contains("L") || !doc.contains("H"))
      throw_error(ErrorCode::parse_error,
                  "rect lattice document needs 'L' and 'H'");
    return build_rect_lattice(doc.at("L").get<int>(), doc.at("H").get<int>());
  }
  if (type == "closed") {
    if (!doc.contains("vertices") || !doc.contains("edges") ||
        !doc.contains("faces"))
      throw_error(ErrorCode::parse_error,
                  "closed lattice document needs 'vertices', 'edges', and "
                  "'faces'");
    std::vector<std::array<int, 2>> edges;
    for (const auto& pair : doc.at("edges")) {
      if (!pair.is_array() || pair.size() != 2)
        throw_error(ErrorCode::parse_error,
                    "closed lattice edges must be vertex pairs");
      edges.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    std::vector<std::vector<int>> faces;
    for (const auto& list : doc.at("faces"))
      faces.push_back(list.get<std::vector<int>>());
    return build_closed_map(doc.at("vertices").get<int>(), edges, faces);
  }
  throw_error(ErrorCode::parse_error,
              "lattice type must be 'rect' or 'closed'");
}

}  // namespace

CombinatorialMap map_from_json_text(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw_error(ErrorCode::parse_error, "invalid JSON in lattice document");
  return map_from_json(doc);
}

CombinatorialMap load_map(const std::string& path) {
  return map_from_json(io::load_json_file(path));
}

std::string map_to_json_text(const CombinatorialMap& map) {
  nlohmann::json doc;
  if (!map.closed) {
    doc["type"] = "rect";
    doc["L"] = map.length;
    doc["H"] = map.height;
    return doc.dump(2);
  }
  doc["type"] = "closed";
  doc["vertices"] = map.vertex_count;
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : map.edges) doc["edges"].push_back({e[0], e[1]});
  doc["faces"] = map.faces;
  return doc.dump(2);
}

}  // namespace qrf::surface
