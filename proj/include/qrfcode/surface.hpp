/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_SURFACE_HPP
#define QRFCODE_SURFACE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qrfcode/dense.hpp"
#include "qrfcode/duality.hpp"
#include "qrfcode/pauli.hpp"
#include "qrfcode/stabilizer.hpp"

namespace qrf::surface {

// Where an edge sits on a planar rectangle: rough boundary edges have a
// dangling end (top or bottom), smooth boundary edges border a single face
// (left or right side), corner edges are both. Closed maps have none.
enum class EdgeBoundary { none, rough, smooth, corner };

enum class StringKind { z, x };

// Discrete orientable surface: a graph with a chosen face set. Qubits live
// on edges. Planar rectangles of width L (length) and height H use the
// layout below; closed maps are given explicitly.
//
// Rectangle layout (row-major, vertical edges before horizontal ones):
//   vertical edge (x, j):  id = j*(L+1) + x          x in 0..L, j in 0..H
//   horizontal edge (x, y): id = (H+1)*(L+1) + (y-1)*L + x
//                                                     x in 0..L-1, y in 1..H
//   vertex (x, y):          id = (y-1)*(L+1) + x     x in 0..L, y in 1..H
//   face (x, j):            id = j*L + x             x in 0..L-1, j in 0..H
// Vertical edge (x, j) spans height levels j and j+1 where level 0 is the
// bottom rough boundary and level H+1 the top one; a boundary end is stored
// as endpoint -1. Face (x, j) sits between height levels j and j+1.
struct CombinatorialMap {
  bool closed = false;
  int genus = 0;        // closed maps only
  int length = 0;       // L, planar rectangles only
  int height = 0;       // H
  int vertex_count = 0;
  std::vector<std::array<int, 2>> edges;  // endpoint vertices, -1 = dangling
  std::vector<std::vector<int>> faces;    // border edge ids, each listed once
  std::vector<EdgeBoundary> boundary;     // per edge

  int edge_count() const { return static_cast<int>(edges.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
};

// Rectangle with rough boundaries at top and bottom and smooth boundaries
// left and right: 2LH+L+H+1 edges, LH+H vertices, LH+L faces.
CombinatorialMap build_rect_lattice(int length, int height);

// Closed surface from explicit incidence data. Every edge must bound
// exactly two distinct faces and the graph must be connected; the genus is
// read off the Euler relation |F| - |E| + |V| = 2 - 2g.
CombinatorialMap build_closed_map(
    int vertex_count, const std::vector<std::array<int, 2>>& edges,
    const std::vector<std::vector<int>>& faces);

// Index helpers for the rectangle layout above. Range-checked.
int vertical_edge_index(const CombinatorialMap& map, int x, int j);
int horizontal_edge_index(const CombinatorialMap& map, int x, int y);
int vertex_index(const CombinatorialMap& map, int x, int y);
int face_index(const CombinatorialMap& map, int x, int j);

// X on every edge incident to v (even-parity incidences drop out).
Pauli vertex_operator(const CombinatorialMap& map, int v);
// Z on every edge bordering f.
Pauli plaquette_operator(const CombinatorialMap& map, int f);

// Z or X on each listed edge; the list is a set, repeats are rejected.
Pauli string_operator(const CombinatorialMap& map,
                      const std::vector<int>& path, StringKind kind);

// The stabilizer code generated by all vertex and plaquette operators.
// Planar maps act faithfully and every operator is an independent
// generator (X_v ascending, then Z_f ascending). On a closed map the
// products of all X_v and of all Z_f are the identity, so the last vertex
// and the last face are dropped from the generator list and the resulting
// four-element kernel is recorded instead.
struct SurfaceCode {
  CombinatorialMap map;
  StabilizerCode code;
  std::vector<Pauli> vertex_ops;  // all X_v
  std::vector<Pauli> face_ops;    // all Z_f
  // Basis of the kernel of (V, F) -> prod_V X_v prod_F Z_f, as vertex and
  // face id lists. Empty for planar maps.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> kernel_basis;
  int quotient_rank = 0;  // |V| + |F| minus the kernel rank
};

SurfaceCode vertex_plaquette_code(const CombinatorialMap& map);

// dim over GF(2) of cycles modulo face boundaries, where a cycle may end
// on a rough boundary: 1 for rectangles, 2g for closed maps.
int homology_rank(const CombinatorialMap& map);

// Canonical representative of [path] modulo face boundaries: two paths are
// homotopic iff their canonical forms coincide, and a contractible
// relative cycle canonicalizes to the empty set.
std::vector<int> homotopy_canonical(const CombinatorialMap& map,
                                    const std::vector<int>& path);

// Logical pair of a planar rectangle: |bar 0> is the group average of the
// all-zeros ket, |bar 1> applies the smooth-to-smooth dual string.
std::pair<dense::Vec, dense::Vec> homological_codewords(
    const SurfaceCode& surf, const dense::Caps& caps = {});

// Spanning forest T in the direct graph and disjoint dual spanning forest
// T' in the dual graph. On a rectangle every vertex has a unique path in T
// to a rough boundary and every face a unique dual path in T' to a smooth
// boundary, and exactly one edge is left over. On a closed map both are
// trees rooted at the last vertex and last face, and 2g edges are left
// over. Construction: sink augmentation and breadth-first search in edge
// index order.
struct ForestPair {
  std::vector<int> tree;       // T
  std::vector<int> dual_tree;  // T'
  std::vector<int> leftover;   // edges in neither
  int root_vertex = -1;        // closed maps only
  int root_face = -1;
  std::vector<std::vector<int>> vertex_paths;  // per vertex, edges of gamma_v
  std::vector<std::vector<int>> face_paths;    // per face, edges of gamma'_f
};

ForestPair spanning_forests(const CombinatorialMap& map);

// The dual operator of one character: Z strings along the tree paths of
// the flagged vertices times X strings along the dual tree paths of the
// flagged faces. Character bit i flags generator i of surf.code.
Pauli forest_dual_string(const SurfaceCode& surf, const ForestPair& forests,
                         std::uint64_t chi);

// Dense dual representation assembled from forest_dual_string; every
// operator is an exact Pauli string, so checking it against surf.code with
// check_duality certifies the construction.
DualRep forest_dual_rep(const SurfaceCode& surf, const ForestPair& forests,
                        const dense::Caps& caps = {});

// Exact Pauli-level certification at any lattice size: generator-character
// anticommutation pattern plus the pairwise product law of the dual
// strings. left and right index generators on failure.
DualityVerdict check_forest_duality(const SurfaceCode& surf,
                                    const ForestPair& forests);

// Defect content read from the vertex and plaquette eigenvalues; throws
// when any expectation is farther than tol from +/-1.
struct DefectSector {
  std::vector<int> vertices;  // X_v = -1
  std::vector<int> faces;     // Z_f = -1
};

DefectSector defect_sector(const SurfaceCode& surf, const dense::Vec& state,
                           double tol = 1e-8, const dense::Caps& caps = {});

// Dressing correction for a state carrying exactly one defect: applies the
// forest path string of the defective vertex (or dual path of the face)
// and returns the result together with what was corrected. Whether the
// correction acted as the identity or as a logical operator depends on the
// homotopy class of the combined error and dressing path, which callers
// can test with homotopy_canonical.
struct CorrectedDefect {
  dense::Vec state;
  DefectSector sector;
};

CorrectedDefect correct_single_defect(const SurfaceCode& surf,
                                      const ForestPair& forests,
                                      const dense::Vec& state,
                                      double tol = 1e-8,
                                      const dense::Caps& caps = {});

// Lattice JSON: {"type": "rect", "L": int, "H": int} or {"type": "closed",
// "vertices": int, "edges": [[v, v]], "faces": [[edge-index]]}.
CombinatorialMap map_from_json_text(const std::string& text);
CombinatorialMap load_map(const std::string& path);
std::string map_to_json_text(const CombinatorialMap& map);

}  // namespace qrf::surface

#endif  // QRFCODE_SURFACE_HPP
