/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/dense.hpp"

#include <random>

#include "doctest.h"
#include "qrfcode/errors.hpp"
#include "test_util.hpp"

using qrf::Pauli;
using qrf::dense::Mat;
using qrf::dense::Vec;
using qrf::dense::cd;

namespace {

Mat oracle_to_eigen(const qrftest::CMat& m) {
  Mat out(static_cast<std::int64_t>(m.size()),
          static_cast<std::int64_t>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j)
      out(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)) = m[i][j];
  return out;
}

}  // namespace

TEST_CASE("basis conventions: qubit 1 is the most significant bit") {
  const Vec s = qrf::dense::basis_state(3, 0);
  const Vec moved = qrf::dense::apply_pauli(Pauli::from_text("XII"), s);
  CHECK(qrf::dense::max_abs_diff(moved, qrf::dense::basis_state(3, 0b100)) == 0);

  const Vec one = qrf::dense::apply_pauli(Pauli::from_text("Y"),
                                          qrf::dense::basis_state(1, 0));
  CHECK(std::abs(one(1) - cd{0, 1}) == 0);
  CHECK(std::abs(one(0)) == 0);
}

TEST_CASE("stabilizers fix their codewords") {
  Vec plus = qrf::dense::basis_state(3, 0) + qrf::dense::basis_state(3, 7);
  plus /= std::sqrt(2.0);
  for (const char* s : {"ZZI", "IZZ", "ZIZ"}) {
    const Vec out = qrf::dense::apply_pauli(Pauli::from_text(s), plus);
    CHECK(qrf::dense::max_abs_diff(out, plus) < 1e-15);
  }
}

TEST_CASE("pauli action composes like the pauli product") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 6;
    const Pauli a = qrftest::random_pauli(rng, n);
    const Pauli b = qrftest::random_pauli(rng, n);
    const Vec s = qrf::dense::random_state(rng, n);
    const Vec lhs = qrf::dense::apply_pauli(a * b, s);
    const Vec rhs = qrf::dense::apply_pauli(a, qrf::dense::apply_pauli(b, s));
    CHECK(qrf::dense::max_abs_diff(lhs, rhs) < 1e-14);
  }
}

TEST_CASE("pauli_matrix matches the letter-matrix oracle") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const Pauli p = qrftest::random_pauli(rng, 1 + trial % 4);
    const Mat lhs = qrf::dense::pauli_matrix(p);
    const Mat rhs = oracle_to_eigen(qrftest::pauli_matrix_oracle(p));
    CHECK(qrf::dense::max_abs_diff(lhs, rhs) == 0);
  }
}

TEST_CASE("operator_from_paulis builds projectors") {
  const Mat p = qrf::dense::operator_from_paulis(
      {{0.5, Pauli::from_text("I")}, {0.5, Pauli::from_text("Z")}});
  Mat expected = Mat::Zero(2, 2);
  expected(0, 0) = 1;
  CHECK(qrf::dense::max_abs_diff(p, expected) == 0);
  CHECK(qrf::dense::projector_rank(p) == 1);
}

TEST_CASE("projector_rank validates its input") {
  CHECK(qrf::dense::projector_rank(Mat::Identity(4, 4)) == 4);
  CHECK(qrf::dense::projector_rank(Mat::Zero(4, 4)) == 0);
  Mat bad = Mat::Identity(2, 2);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(qrf::dense::projector_rank(bad), qrf::Error);
}

TEST_CASE("span_dimension counts independent directions") {
  const Vec e0 = qrf::dense::basis_state(2, 0);
  const Vec e1 = qrf::dense::basis_state(2, 1);
  CHECK(qrf::dense::span_dimension(std::vector<Vec>{e0, e1}) == 2);
  CHECK(qrf::dense::span_dimension(std::vector<Vec>{e0, e0, e0 + e1}) == 2);
  CHECK(qrf::dense::span_dimension(std::vector<Vec>{}) == 0);

  std::vector<Mat> ops;
  for (const char* s : {"I", "X", "Y", "Z"})
    ops.push_back(qrf::dense::pauli_matrix(Pauli::from_text(s)));
  CHECK(qrf::dense::span_dimension(ops) == 4);
  ops.push_back(ops[0] + ops[1]);
  CHECK(qrf::dense::span_dimension(ops) == 4);
}

TEST_CASE("kron matches the oracle and detects unitarity") {
  std::mt19937 rng(79);
  const Pauli a = qrftest::random_pauli(rng, 2);
  const Pauli b = qrftest::random_pauli(rng, 2);
  const Mat lhs = qrf::dense::kron(qrf::dense::pauli_matrix(a),
                                   qrf::dense::pauli_matrix(b));
  const Mat rhs = qrf::dense::pauli_matrix(tensor(a, b));
  CHECK(qrf::dense::max_abs_diff(lhs, rhs) < 1e-15);
  CHECK(qrf::dense::is_unitary(lhs));
  CHECK_FALSE(qrf::dense::is_unitary(lhs + Mat::Identity(16, 16)));
}

TEST_CASE("random density matrices are states") {
  std::mt19937 rng(83);
  const Mat rho = qrf::dense::random_density(rng, 3);
  CHECK(std::abs(rho.trace() - cd{1, 0}) < 1e-12);
  CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho);
  CHECK(solver.eigenvalues().minCoeff() > -1e-12);
}

TEST_CASE("caps are enforced") {
  CHECK_THROWS_AS(qrf::dense::pauli_matrix(qrf::Pauli(7)), qrf::Error);
  CHECK_THROWS_AS(qrf::dense::basis_state(14, 0), qrf::Error);
  const qrf::dense::Caps wide{.full_matrix_n = 8, .state_action_n = 13};
  CHECK(qrf::dense::pauli_matrix(qrf::Pauli(7), wide).rows() == 128);
}
