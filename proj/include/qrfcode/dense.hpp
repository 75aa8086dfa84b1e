/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_DENSE_HPP
#define QRFCODE_DENSE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qrfcode/pauli.hpp"

namespace qrf::dense {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

// Desk-scale limits for the brute-force oracle. Full 2^n x 2^n matrices are
// materialized only up to full_matrix_n qubits; state action is allowed up
// to state_action_n qubits (O(2^n) per Pauli application).
struct Caps {
  int full_matrix_n = 6;
  int state_action_n = 13;
};

void check_state_cap(int n, const Caps& caps = {});
void check_matrix_cap(int n, const Caps& caps = {});

// Basis conventions: the computational index runs over 0 .. 2^n - 1 and
// qubit 1 (0-based qubit 0) is the most significant bit, so the index read
// in binary is the ket label.
Vec basis_state(int n, std::uint64_t label);
std::uint64_t index_bit(int n, int qubit);

// Exact Pauli action: basis permutation plus a per-amplitude phase.
Vec apply_pauli(const Pauli& p, const Vec& state);

Mat pauli_matrix(const Pauli& p, const Caps& caps = {});

// sum_i coeff_i * matrix(p_i); all strings must share the qubit count.
Mat operator_from_paulis(const std::vector<std::pair<cd, Pauli>>& terms,
                         const Caps& caps = {});

// The unique phased Pauli string equal to m entrywise within tol, if one
// exists. Column structure fixes the candidate, a full comparison confirms.
std::optional<Pauli> match_pauli(const Mat& m, double tol = 1e-10,
                                 const Caps& caps = {});

cd inner(const Vec& a, const Vec& b);
cd trace(const Mat& m);

// Number of eigenvalues within tol of 1; requires an (almost) Hermitian
// idempotent input and verifies both before counting.
int projector_rank(const Mat& p, double tol = 1e-8);

// Dimension of the span of a list of vectors (Gram-matrix eigenvalues).
int span_dimension(const std::vector<Vec>& vectors, double tol = 1e-8);
// Same for operators, flattened column-major.
int span_dimension(const std::vector<Mat>& ops, double tol = 1e-8);

double max_abs_diff(const Mat& a, const Mat& b);
double max_abs_diff(const Vec& a, const Vec& b);

bool is_unitary(const Mat& m, double tol = 1e-10);

Vec random_state(std::mt19937& rng, int n);
// Random density matrix (positive semidefinite, unit trace).
Mat random_density(std::mt19937& rng, int n, const Caps& caps = {});

Mat kron(const Mat& a, const Mat& b);

// Qubit reordering between the physical layout and a "virtual" layout in
// which qubit j is physical qubit order[j]; `order` must be a permutation
// of 0 .. n-1. to_* reads physical data into virtual indices, from_* is the
// inverse scatter.
Vec to_qubit_order(const Vec& state, const std::vector<int>& order);
Vec from_qubit_order(const Vec& state, const std::vector<int>& order);
Mat to_qubit_order(const Mat& op, const std::vector<int>& order);
Mat from_qubit_order(const Mat& op, const std::vector<int>& order);

// Full n-qubit operator (or state) acting as `a` on qubits_a and `b` on
// qubits_b; the two lists are disjoint and jointly cover 0 .. n-1.
Mat embed_factors(int n, const Mat& a, const std::vector<int>& qubits_a,
                  const Mat& b, const std::vector<int>& qubits_b,
                  const Caps& caps = {});
Vec embed_factors(int n, const Vec& a, const std::vector<int>& qubits_a,
                  const Vec& b, const std::vector<int>& qubits_b,
                  const Caps& caps = {});

// Partial trace keeping the listed qubits, result ordered as `keep`.
Mat partial_trace_keep(const Mat& m, int n, const std::vector<int>& keep);

// Whether m equals (left factor) (x) I or I (x) (right factor) on a
// dim_left * dim_right space; stores the factor on success.
bool factor_times_identity(const Mat& m, int dim_left, int dim_right,
                           Mat* left, double tol = 1e-10);
bool identity_times_factor(const Mat& m, int dim_left, int dim_right,
                           Mat* right, double tol = 1e-10);

}  // namespace qrf::dense

#endif  // QRFCODE_DENSE_HPP
