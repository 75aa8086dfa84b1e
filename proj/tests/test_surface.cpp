/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/surface.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qrfcode/dense.hpp"
#include "qrfcode/errors.hpp"
#include "qrfcode/group.hpp"
#include "qrfcode/stabilizer.hpp"

using qrf::Pauli;
using qrf::StabilizerCode;
using qrf::dense::Caps;
using qrf::dense::Mat;
using qrf::dense::Vec;

namespace surf = qrf::surface;

namespace {

// 2x2 torus: vertices v(x,y) = 2y+x, horizontal edges 2y+x joining
// v(x,y)-v(x+1,y), vertical edges 4+2y+x joining v(x,y)-v(x,y+1), both
// wrapping mod 2; face with corner v(x,y) borders its two horizontal and
// two vertical neighbours.
surf::CombinatorialMap torus_map() {
  const std::vector<std::array<int, 2>> edges = {
      {0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 2}, {1, 3}, {2, 0}, {3, 1}};
  const std::vector<std::vector<int>> faces = {
      {0, 2, 4, 5}, {1, 3, 4, 5}, {0, 2, 6, 7}, {1, 3, 6, 7}};
  return surf::build_closed_map(4, edges, faces);
}

// Two vertices joined by two parallel edges, each face bounded by both:
// a genus-zero sphere.
surf::CombinatorialMap digon_map() {
  return surf::build_closed_map(2, {{0, 1}, {0, 1}}, {{0, 1}, {0, 1}});
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::set<int> xor_sets(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out = a;
  for (int x : b)
    if (!out.insert(x).second) out.erase(x);
  return out;
}

double dev(const Mat& a, const Mat& b) { return qrf::dense::max_abs_diff(a, b); }
double vdev(const Vec& a, const Vec& b) {
  return qrf::dense::max_abs_diff(a, b);
}

// Joint eigenspace projector for the full defect assignment: eigenvalue -1
// of X_v on vhat and of Z_f on fhat, +1 elsewhere.
Mat defect_projector(const surf::SurfaceCode& code, const std::set<int>& vhat,
                     const std::set<int>& fhat, const Caps& caps) {
  const std::int64_t dim = std::int64_t{1}
                           << code.map.edge_count();
  Mat p = Mat::Identity(dim, dim);
  for (std::size_t v = 0; v < code.vertex_ops.size(); ++v) {
    const double sign = vhat.count(static_cast<int>(v)) ? -1.0 : 1.0;
    const Mat factor =
        0.5 * (Mat::Identity(dim, dim) +
               sign * qrf::dense::pauli_matrix(code.vertex_ops[v], caps));
    p = p * factor;
  }
  for (std::size_t f = 0; f < code.face_ops.size(); ++f) {
    const double sign = fhat.count(static_cast<int>(f)) ? -1.0 : 1.0;
    const Mat factor =
        0.5 * (Mat::Identity(dim, dim) +
               sign * qrf::dense::pauli_matrix(code.face_ops[f], caps));
    p = p * factor;
  }
  return p;
}

}  // namespace

TEST_CASE("rectangle lattice layout and counts") {
  const auto small = surf::build_rect_lattice(1, 1);
  CHECK(small.edge_count() == 5);
  CHECK(small.vertex_count == 2);
  CHECK(small.face_count() == 2);
  CHECK_FALSE(small.closed);

  // Vertical edges first: dangling ends at the rough levels.
  CHECK(small.edges[0] == std::array<int, 2>{-1, 0});
  CHECK(small.edges[1] == std::array<int, 2>{-1, 1});
  CHECK(small.edges[2] == std::array<int, 2>{0, -1});
  CHECK(small.edges[3] == std::array<int, 2>{1, -1});
  CHECK(small.edges[4] == std::array<int, 2>{0, 1});
  CHECK(as_set(small.faces[0]) == std::set<int>{0, 1, 4});
  CHECK(as_set(small.faces[1]) == std::set<int>{2, 3, 4});

  const auto big = surf::build_rect_lattice(2, 2);
  CHECK(big.edge_count() == 13);
  CHECK(big.vertex_count == 6);
  CHECK(big.face_count() == 6);

  const auto wide = surf::build_rect_lattice(4, 3);
  CHECK(wide.edge_count() == 2 * 12 + 4 + 3 + 1);
  CHECK(wide.vertex_count == 15);
  CHECK(wide.face_count() == 16);

  CHECK_THROWS_AS(surf::build_rect_lattice(0, 3), qrf::Error);
  CHECK_THROWS_AS(surf::build_rect_lattice(2, -1), qrf::Error);
}

TEST_CASE("rectangle boundary classification and index helpers") {
  const auto map = surf::build_rect_lattice(2, 2);

  int rough = 0, smooth = 0, corner = 0, none = 0;
  for (auto b : map.boundary) {
    if (b == surf::EdgeBoundary::rough) ++rough;
    if (b == surf::EdgeBoundary::smooth) ++smooth;
    if (b == surf::EdgeBoundary::corner) ++corner;
    if (b == surf::EdgeBoundary::none) ++none;
  }
  CHECK(rough == 2);
  CHECK(smooth == 2);
  CHECK(corner == 4);
  CHECK(none == 5);

  CHECK(surf::vertical_edge_index(map, 0, 0) == 0);
  CHECK(surf::vertical_edge_index(map, 2, 0) == 2);
  CHECK(surf::vertical_edge_index(map, 0, 1) == 3);
  CHECK(surf::horizontal_edge_index(map, 0, 1) == 9);
  CHECK(surf::horizontal_edge_index(map, 1, 2) == 12);
  CHECK(surf::vertex_index(map, 0, 1) == 0);
  CHECK(surf::vertex_index(map, 2, 2) == 5);
  CHECK(surf::face_index(map, 0, 0) == 0);
  CHECK(surf::face_index(map, 1, 2) == 5);

  // The horizontal edge (x, y) really joins vertices (x, y) and (x+1, y).
  CHECK(map.edges[9][0] == surf::vertex_index(map, 0, 1));
  CHECK(map.edges[9][1] == surf::vertex_index(map, 1, 1));

  CHECK_THROWS_AS(surf::vertical_edge_index(map, 3, 0), qrf::Error);
  CHECK_THROWS_AS(surf::horizontal_edge_index(map, 0, 0), qrf::Error);
  CHECK_THROWS_AS(surf::vertex_index(map, 0, 3), qrf::Error);
  CHECK_THROWS_AS(surf::face_index(map, 2, 0), qrf::Error);
  CHECK_THROWS_AS(surf::vertical_edge_index(torus_map(), 0, 0), qrf::Error);
}

TEST_CASE("closed map construction and validation") {
  const auto torus = torus_map();
  CHECK(torus.closed);
  CHECK(torus.genus == 1);
  CHECK(torus.vertex_count == 4);
  CHECK(torus.edge_count() == 8);
  CHECK(torus.face_count() == 4);
  for (auto b : torus.boundary) CHECK(b == surf::EdgeBoundary::none);

  const auto sphere = digon_map();
  CHECK(sphere.genus == 0);

  // Dangling ends are a planar feature.
  CHECK_THROWS_WITH_AS(
      surf::build_closed_map(2, {{0, -1}, {0, 1}}, {{0, 1}, {0, 1}}),
      doctest::Contains("dangling"), qrf::Error);
  // Every edge must separate two faces.
  CHECK_THROWS_WITH_AS(
      surf::build_closed_map(4,
                             {{0, 1},
                              {1, 0},
                              {2, 3},
                              {3, 2},
                              {0, 2},
                              {1, 3},
                              {2, 0},
                              {3, 1}},
                             {{0, 2, 4, 5}, {1, 3, 4, 5}, {0, 2, 6, 7}}),
      doctest::Contains("bounds"), qrf::Error);
  // Two disjoint digon spheres.
  CHECK_THROWS_WITH_AS(
      surf::build_closed_map(
          4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}},
          {{0, 1}, {0, 1}, {2, 3}, {2, 3}}),
      doctest::Contains("connected"), qrf::Error);
  // Two self-loop edges on one vertex: Euler characteristic 1.
  CHECK_THROWS_WITH_AS(
      surf::build_closed_map(1, {{0, 0}, {0, 0}}, {{0, 1}, {0, 1}}),
      doctest::Contains("Euler"), qrf::Error);
}

TEST_CASE("vertex and plaquette operators") {
  const auto map = surf::build_rect_lattice(1, 1);
  CHECK(surf::vertex_operator(map, 0).to_text() == "XIXIX");
  CHECK(surf::vertex_operator(map, 1).to_text() == "IXIXX");
  CHECK(surf::plaquette_operator(map, 0).to_text() == "ZZIIZ");
  CHECK(surf::plaquette_operator(map, 1).to_text() == "IIZZZ");

  const auto torus = torus_map();
  // Four incident edges at every torus vertex, four border edges per face.
  for (int v = 0; v < 4; ++v)
    CHECK(surf::vertex_operator(torus, v).weight() == 4);
  for (int f = 0; f < 4; ++f)
    CHECK(surf::plaquette_operator(torus, f).weight() == 4);
  for (int v = 0; v < 4; ++v)
    for (int f = 0; f < 4; ++f)
      CHECK(qrf::commutes(surf::vertex_operator(torus, v),
                          surf::plaquette_operator(torus, f)));

  CHECK(surf::string_operator(map, {0, 2}, surf::StringKind::z).to_text() ==
        "ZIZII");
  CHECK(surf::string_operator(map, {0, 1}, surf::StringKind::x).to_text() ==
        "XXIII");
  CHECK(surf::string_operator(map, {}, surf::StringKind::z)
            .is_identity_string());
  CHECK_THROWS_WITH_AS(
      surf::string_operator(map, {0, 0}, surf::StringKind::z),
      doctest::Contains("twice"), qrf::Error);
  CHECK_THROWS_AS(surf::vertex_operator(map, 2), qrf::Error);
  CHECK_THROWS_AS(surf::plaquette_operator(map, -1), qrf::Error);
  CHECK_THROWS_AS(surf::string_operator(map, {5}, surf::StringKind::x),
                  qrf::Error);
}

TEST_CASE("planar surface code structure") {
  const auto code = surf::vertex_plaquette_code(surf::build_rect_lattice(1, 1));
  CHECK(code.code.n() == 5);
  CHECK(code.code.k() == 1);
  CHECK(code.code.m() == 4);
  CHECK(code.kernel_basis.empty());
  CHECK(code.quotient_rank == 4);

  const auto& gens = code.code.generators();
  REQUIRE(gens.size() == 4);
  CHECK(gens[0].to_text() == "XIXIX");
  CHECK(gens[1].to_text() == "IXIXX");
  CHECK(gens[2].to_text() == "ZZIIZ");
  CHECK(gens[3].to_text() == "IIZZZ");
  CHECK(code.code.logical_z()[0].to_text() == "ZIZII");
  CHECK(code.code.logical_x()[0].to_text() == "XXIII");

  CHECK(qrf::dense::projector_rank(qrf::code_projector(code.code)) == 2);

  const auto big = surf::vertex_plaquette_code(surf::build_rect_lattice(2, 2));
  CHECK(big.code.n() == 13);
  CHECK(big.code.k() == 1);
  CHECK(big.code.m() == 12);
  CHECK(big.code.logical_z()[0].weight() == 3);
  CHECK(big.code.logical_x()[0].weight() == 3);
  CHECK_FALSE(qrf::commutes(big.code.logical_z()[0], big.code.logical_x()[0]));
}

TEST_CASE("closed surface code structure and kernel") {
  const auto torus = surf::vertex_plaquette_code(torus_map());
  CHECK(torus.code.n() == 8);
  CHECK(torus.code.m() == 6);
  CHECK(torus.code.k() == 2);
  CHECK(torus.code.group_order() == 64);
  CHECK(torus.quotient_rank == 6);
  REQUIRE(torus.kernel_basis.size() == 2);

  // Span of the kernel basis: product over all vertices and product over
  // all faces are the only identity combinations.
  const std::set<int> all = {0, 1, 2, 3};
  std::set<std::pair<std::set<int>, std::set<int>>> span;
  for (int mask = 0; mask < 4; ++mask) {
    std::set<int> vs, fs;
    for (int i = 0; i < 2; ++i)
      if ((mask >> i) & 1) {
        vs = xor_sets(vs, as_set(torus.kernel_basis[i].first));
        fs = xor_sets(fs, as_set(torus.kernel_basis[i].second));
      }
    span.insert({vs, fs});
  }
  const std::set<std::pair<std::set<int>, std::set<int>>> expected = {
      {{}, {}}, {all, {}}, {{}, all}, {all, all}};
  CHECK(span == expected);

  const auto sphere = surf::vertex_plaquette_code(digon_map());
  CHECK(sphere.code.n() == 2);
  CHECK(sphere.code.m() == 2);
  CHECK(sphere.code.k() == 0);
  CHECK(sphere.kernel_basis.size() == 2);
}

TEST_CASE("torus sector dimensions") {
  const Caps caps{8, 13};
  const auto torus = surf::vertex_plaquette_code(torus_map());

  // Ground space dimension 2^(2g) = 4.
  CHECK(qrf::dense::projector_rank(qrf::code_projector(torus.code, caps)) ==
        4);

  // Every character of the quotient group labels a dimension-4 sector.
  for (std::uint64_t chi : {std::uint64_t{1}, std::uint64_t{45}}) {
    const Mat p = qrf::isotype_projector(torus.code, {6, chi}, caps);
    CHECK(qrf::dense::projector_rank(p) == 4);
  }

  // Full defect assignments: nonzero exactly when both the flipped vertex
  // set and the flipped face set have even size.
  CHECK(qrf::dense::projector_rank(defect_projector(torus, {0}, {}, caps)) ==
        0);
  CHECK(qrf::dense::projector_rank(defect_projector(torus, {}, {2}, caps)) ==
        0);
  CHECK(qrf::dense::projector_rank(
            defect_projector(torus, {0, 2}, {1, 3}, caps)) == 4);

  // Even-even assignments are isotypes of the quotient code: the character
  // bit of a generator is its membership flag, and the dropped operators
  // are fixed by parity.
  const Mat even_a = defect_projector(torus, {0, 1}, {}, caps);
  CHECK(dev(even_a, qrf::isotype_projector(torus.code, {6, 3}, caps)) <=
        1e-10);
  const Mat even_b = defect_projector(torus, {0, 3}, {1, 2}, caps);
  CHECK(dev(even_b, qrf::isotype_projector(torus.code, {6, 49}, caps)) <=
        1e-10);
  const Mat trivial = defect_projector(torus, {}, {}, caps);
  CHECK(dev(trivial, qrf::code_projector(torus.code, caps)) <= 1e-10);
}

TEST_CASE("face borders are cycles") {
  for (const auto& map : {surf::build_rect_lattice(2, 2), torus_map()}) {
    for (int f = 0; f < map.face_count(); ++f) {
      std::map<int, int> parity;
      for (int e : map.faces[f])
        for (int end : map.edges[e])
          if (end >= 0) parity[end] ^= 1;
      for (const auto& [v, p] : parity) {
        CAPTURE(f);
        CAPTURE(v);
        CHECK(p == 0);
      }
    }
  }
}

TEST_CASE("string operator commutation parity") {
  const auto map = surf::build_rect_lattice(2, 2);
  std::mt19937 rng(20260815);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> zs, xs;
    for (int e = 0; e < map.edge_count(); ++e) {
      if (coin(rng)) zs.push_back(e);
      if (coin(rng)) xs.push_back(e);
    }
    const Pauli sz = surf::string_operator(map, zs, surf::StringKind::z);
    const Pauli sx = surf::string_operator(map, xs, surf::StringKind::x);
    const std::size_t overlap = xor_sets(as_set(zs), as_set(xs)).size();
    const std::size_t both = (zs.size() + xs.size() - overlap) / 2;
    CHECK(qrf::commutes(sz, sx) == (both % 2 == 0));
  }
}

TEST_CASE("homology rank") {
  CHECK(surf::homology_rank(surf::build_rect_lattice(1, 1)) == 1);
  CHECK(surf::homology_rank(surf::build_rect_lattice(3, 2)) == 1);
  CHECK(surf::homology_rank(torus_map()) == 2);
  CHECK(surf::homology_rank(digon_map()) == 0);
}

TEST_CASE("homotopy canonical forms") {
  const auto map = surf::build_rect_lattice(2, 2);

  // All three rough-to-rough columns are homotopic.
  const std::vector<int> left = {0, 3, 6};
  const std::vector<int> middle = {1, 4, 7};
  const std::vector<int> right = {2, 5, 8};
  const auto canon = surf::homotopy_canonical(map, left);
  CHECK(surf::homotopy_canonical(map, middle) == canon);
  CHECK(surf::homotopy_canonical(map, right) == canon);
  CHECK_FALSE(canon.empty());

  // Deforming across one face keeps the class.
  const auto deformed = xor_sets(as_set(left), as_set(map.faces[2]));
  CHECK(surf::homotopy_canonical(
            map, std::vector<int>(deformed.begin(), deformed.end())) ==
        canon);

  // Face borders are contractible, and a smooth-to-smooth chain is in a
  // different class.
  CHECK(surf::homotopy_canonical(map, map.faces[2]).empty());
  CHECK(surf::homotopy_canonical(map, {}).empty());
  CHECK(surf::homotopy_canonical(map, {9, 10}) != canon);

  CHECK_THROWS_AS(surf::homotopy_canonical(map, {0, 0}), qrf::Error);
}

TEST_CASE("homological codewords") {
  const auto code = surf::vertex_plaquette_code(surf::build_rect_lattice(1, 1));
  const auto [zero, one] = surf::homological_codewords(code);

  Vec expected_zero = Vec::Zero(32);
  expected_zero(0) = expected_zero(11) = expected_zero(21) =
      expected_zero(30) = 0.5;
  Vec expected_one = Vec::Zero(32);
  expected_one(24) = expected_one(13) = expected_one(19) = expected_one(6) =
      0.5;
  CHECK(vdev(zero, expected_zero) <= 1e-10);
  CHECK(vdev(one, expected_one) <= 1e-10);

  for (const auto& g : code.code.generators()) {
    CHECK(vdev(qrf::dense::apply_pauli(g, zero), zero) <= 1e-10);
    CHECK(vdev(qrf::dense::apply_pauli(g, one), one) <= 1e-10);
  }
  const Pauli zbar = code.code.logical_z()[0];
  CHECK(vdev(qrf::dense::apply_pauli(zbar, zero), zero) <= 1e-10);
  CHECK(vdev(qrf::dense::apply_pauli(zbar, one), Vec(-one)) <= 1e-10);
  CHECK(std::abs(qrf::dense::inner(zero, one)) <= 1e-10);

  CHECK_THROWS_AS(
      surf::homological_codewords(surf::vertex_plaquette_code(torus_map())),
      qrf::Error);
}

TEST_CASE("spanning forests") {
  const auto map = surf::build_rect_lattice(1, 1);
  const auto forests = surf::spanning_forests(map);
  CHECK(forests.tree == std::vector<int>{0, 1});
  CHECK(forests.dual_tree == std::vector<int>{2, 4});
  CHECK(forests.leftover == std::vector<int>{3});
  CHECK(forests.root_vertex == -1);
  CHECK(forests.root_face == -1);
  REQUIRE(forests.vertex_paths.size() == 2);
  REQUIRE(forests.face_paths.size() == 2);
  CHECK(forests.vertex_paths[0] == std::vector<int>{0});
  CHECK(forests.vertex_paths[1] == std::vector<int>{1});
  CHECK(forests.face_paths[0] == std::vector<int>{4, 2});
  CHECK(forests.face_paths[1] == std::vector<int>{2});

  // L*H + H tree edges, L*H + L dual tree edges, one edge left.
  const auto big = surf::build_rect_lattice(2, 2);
  const auto big_forests = surf::spanning_forests(big);
  CHECK(big_forests.tree.size() == 6);
  CHECK(big_forests.dual_tree.size() == 6);
  CHECK(big_forests.leftover.size() == 1);
  CHECK(xor_sets(as_set(big_forests.tree), as_set(big_forests.dual_tree))
            .size() == 12);

  const auto torus_forests = surf::spanning_forests(torus_map());
  CHECK(torus_forests.tree.size() == 3);
  CHECK(torus_forests.dual_tree.size() == 3);
  CHECK(torus_forests.leftover.size() == 2);
  CHECK(torus_forests.root_vertex == 3);
  CHECK(torus_forests.root_face == 3);
  CHECK(torus_forests.vertex_paths[3].empty());
  CHECK(torus_forests.face_paths[3].empty());

  const auto sphere_forests = surf::spanning_forests(digon_map());
  CHECK(sphere_forests.leftover.empty());
}

TEST_CASE("forest dual strings") {
  const auto code = surf::vertex_plaquette_code(surf::build_rect_lattice(1, 1));
  const auto forests = surf::spanning_forests(code.map);

  CHECK(surf::forest_dual_string(code, forests, 0).is_identity_string());
  CHECK(surf::forest_dual_string(code, forests, 1).to_text() == "ZIIII");
  CHECK(surf::forest_dual_string(code, forests, 2).to_text() == "IZIII");
  CHECK(surf::forest_dual_string(code, forests, 4).to_text() == "IIXIX");
  CHECK(surf::forest_dual_string(code, forests, 8).to_text() == "IIXII");
  CHECK(surf::forest_dual_string(code, forests, 15).to_text() == "ZZIIX");
  for (std::uint64_t chi = 0; chi < 16; ++chi)
    CHECK(surf::forest_dual_string(code, forests, chi).phase_exp() == 0);
  CHECK_THROWS_AS(surf::forest_dual_string(code, forests, 16), qrf::Error);
}

TEST_CASE("forest duality certification") {
  for (const auto& map :
       {surf::build_rect_lattice(1, 1), surf::build_rect_lattice(2, 2),
        surf::build_rect_lattice(3, 1), torus_map(), digon_map()}) {
    const auto code = surf::vertex_plaquette_code(map);
    const auto forests = surf::spanning_forests(map);
    const auto verdict = surf::check_forest_duality(code, forests);
    CAPTURE(verdict.note);
    CHECK(verdict.ok);
  }

  // Tampered forests fail the anticommutation pattern.
  const auto code = surf::vertex_plaquette_code(surf::build_rect_lattice(1, 1));
  auto forests = surf::spanning_forests(code.map);
  std::swap(forests.vertex_paths[0], forests.vertex_paths[1]);
  const auto verdict = surf::check_forest_duality(code, forests);
  CHECK_FALSE(verdict.ok);
  CHECK(verdict.check == "weyl");

  auto grown = surf::spanning_forests(code.map);
  grown.face_paths[0].push_back(3);
  const auto grown_verdict = surf::check_forest_duality(code, grown);
  CHECK_FALSE(grown_verdict.ok);
  CHECK(grown_verdict.check == "weyl");
}

TEST_CASE("forest dual rep dense check") {
  const auto code = surf::vertex_plaquette_code(surf::build_rect_lattice(1, 1));
  const auto forests = surf::spanning_forests(code.map);
  const auto rep = surf::forest_dual_rep(code, forests);
  REQUIRE(rep.ops.size() == 16);
  for (std::uint64_t chi = 0; chi < 16; ++chi) {
    REQUIRE(rep.pauli_ops[chi].has_value());
    CHECK(*rep.pauli_ops[chi] ==
          surf::forest_dual_string(code, forests, chi));
  }
  const auto verdict = qrf::check_duality(code.code, rep, 1e-10);
  CAPTURE(verdict.note);
  CHECK(verdict.ok);

  // The torus needs 8-qubit matrices, beyond the default cap.
  const auto torus = surf::vertex_plaquette_code(torus_map());
  CHECK_THROWS_AS(
      surf::forest_dual_rep(torus, surf::spanning_forests(torus.map)),
      qrf::Error);
}

TEST_CASE("defect sectors and dressing corrections") {
  const auto code = surf::vertex_plaquette_code(surf::build_rect_lattice(1, 1));
  const auto forests = surf::spanning_forests(code.map);
  const auto [zero, one] = surf::homological_codewords(code);
  const Vec plus = (zero + one) / std::sqrt(2.0);

  const auto clean = surf::defect_sector(code, zero);
  CHECK(clean.vertices.empty());
  CHECK(clean.faces.empty());

  // Z error on a rough edge of the same tree path: the dressing undoes it.
  const Vec z_err = qrf::dense::apply_pauli(Pauli::from_text("ZIIII"), plus);
  const auto fixed = surf::correct_single_defect(code, forests, z_err);
  CHECK(fixed.sector.vertices == std::vector<int>{0});
  CHECK(fixed.sector.faces.empty());
  CHECK(vdev(fixed.state, plus) <= 1e-10);

  // Z error on the opposite rough edge: error plus dressing crosses the
  // rectangle, a nontrivial class, so the correction acts as logical Z.
  const Vec z_far = qrf::dense::apply_pauli(Pauli::from_text("IIZII"), plus);
  const auto logical = surf::correct_single_defect(code, forests, z_far);
  CHECK(logical.sector.vertices == std::vector<int>{0});
  const Vec expected =
      qrf::dense::apply_pauli(code.code.logical_z()[0], plus);
  CHECK(vdev(logical.state, expected) <= 1e-10);
  CHECK(surf::homotopy_canonical(code.map, {0}).empty() ==
        surf::homotopy_canonical(code.map, {0, 2}).empty());
  CHECK_FALSE(surf::homotopy_canonical(code.map, {0, 2}).empty());

  // X error on a smooth edge: one plaquette defect, dressing along the
  // dual path implements logical X on this small lattice.
  const Vec x_err = qrf::dense::apply_pauli(Pauli::from_text("IIIXI"), zero);
  const auto magnetic = surf::correct_single_defect(code, forests, x_err);
  CHECK(magnetic.sector.faces == std::vector<int>{1});
  CHECK(vdev(magnetic.state, one) <= 1e-10);

  // The interior edge flips both plaquettes: two defects, no single
  // dressing applies.
  const Vec x_mid = qrf::dense::apply_pauli(Pauli::from_text("IIIIX"), zero);
  CHECK(surf::defect_sector(code, x_mid).faces == std::vector<int>{0, 1});
  CHECK_THROWS_WITH_AS(surf::correct_single_defect(code, forests, x_mid),
                       doctest::Contains("exactly one defect"), qrf::Error);
  CHECK_THROWS_WITH_AS(surf::correct_single_defect(code, forests, zero),
                       doctest::Contains("exactly one defect"), qrf::Error);

  // Superposing sectors leaves no sharp eigenvalue.
  const Vec blend =
      (zero + qrf::dense::apply_pauli(Pauli::from_text("ZIIII"), zero)) /
      std::sqrt(2.0);
  CHECK_THROWS_WITH_AS(surf::defect_sector(code, blend),
                       doctest::Contains("ambiguous"), qrf::Error);
  CHECK_THROWS_AS(surf::defect_sector(code, Vec::Zero(32)), qrf::Error);
  CHECK_THROWS_AS(surf::defect_sector(code, Vec::Zero(16)), qrf::Error);
}

TEST_CASE("lattice JSON round trips") {
  const auto rect = surf::build_rect_lattice(2, 3);
  const auto rect_back = surf::map_from_json_text(surf::map_to_json_text(rect));
  CHECK_FALSE(rect_back.closed);
  CHECK(rect_back.length == 2);
  CHECK(rect_back.height == 3);
  CHECK(rect_back.edges == rect.edges);
  CHECK(rect_back.faces == rect.faces);
  CHECK(rect_back.boundary == rect.boundary);

  const auto torus = torus_map();
  const auto torus_back =
      surf::map_from_json_text(surf::map_to_json_text(torus));
  CHECK(torus_back.closed);
  CHECK(torus_back.genus == 1);
  CHECK(torus_back.edges == torus.edges);
  CHECK(torus_back.faces == torus.faces);

  const std::string path = "/tmp/qrfcode_test_map.json";
  {
    std::ofstream out(path);
    out << surf::map_to_json_text(rect);
  }
  const auto loaded = surf::load_map(path);
  CHECK(loaded.edges == rect.edges);
  std::remove(path.c_str());

  CHECK_THROWS_AS(surf::map_from_json_text("{"), qrf::Error);
  CHECK_THROWS_AS(surf::map_from_json_text(R"({"type":"hex"})"), qrf::Error);
  CHECK_THROWS_AS(surf::map_from_json_text(R"({"type":"rect","L":2})"),
                  qrf::Error);
}
