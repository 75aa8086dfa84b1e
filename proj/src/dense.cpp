/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/dense.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qrfcode/errors.hpp"

namespace qrf::dense {

void check_state_cap(int n, const Caps& caps) {
  if (n < 0 || n > caps.state_action_n)
    throw_error(ErrorCode::cap_exceeded,
                "state action cap " + std::to_string(caps.state_action_n) +
                    " qubits exceeded (n=" + std::to_string(n) + ")");
}

void check_matrix_cap(int n, const Caps& caps) {
  if (n < 0 || n > caps.full_matrix_n)
    throw_error(ErrorCode::cap_exceeded,
                "full matrix cap " + std::to_string(caps.full_matrix_n) +
                    " qubits exceeded (n=" + std::to_string(n) + ")");
}

Vec basis_state(int n, std::uint64_t label) {
  check_state_cap(n);
  Vec v = Vec::Zero(std::int64_t{1} << n);
  v(static_cast<std::int64_t>(label)) = 1.0;
  return v;
}

std::uint64_t index_bit(int n, int qubit) {
  return std::uint64_t{1} << (n - 1 - qubit);
}

Vec apply_pauli(const Pauli& p, const Vec& state) {
  const int n = p.n();
  const std::int64_t dim = std::int64_t{1} << n;
  if (state.size() != dim)
    throw_error(ErrorCode::dimension_mismatch,
                "state has dimension " + std::to_string(state.size()) +
                    ", operator expects " + std::to_string(dim));
  std::uint64_t xmask = 0, zmask = 0;
  for (int q = 0; q < n; ++q) {
    if (p.x_bit(q)) xmask |= index_bit(n, q);
    if (p.z_bit(q)) zmask |= index_bit(n, q);
  }
  // p = i^k X^x Z^z acts as |b> -> i^k (-1)^{z.b} |b xor x>.
  const int k = p.xz_phase();
  static const cd phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const cd base = phases[k];
  Vec out(dim);
  for (std::int64_t b = 0; b < dim; ++b) {
    const int sign =
        std::popcount(zmask & static_cast<std::uint64_t>(b)) & 1 ? -1 : 1;
    out(static_cast<std::int64_t>(static_cast<std::uint64_t>(b) ^ xmask)) =
        base * static_cast<double>(sign) * state(b);
  }
  return out;
}

Mat pauli_matrix(const Pauli& p, const Caps& caps) {
  check_matrix_cap(p.n(), caps);
  const std::int64_t dim = std::int64_t{1} << p.n();
  Mat m(dim, dim);
  for (std::int64_t b = 0; b < dim; ++b)
    m.col(b) = apply_pauli(p, basis_state(p.n(), static_cast<std::uint64_t>(b)));
  return m;
}

Mat operator_from_paulis(const std::vector<std::pair<cd, Pauli>>& terms,
                         const Caps& caps) {
  if (terms.empty())
    throw_error(ErrorCode::invalid_argument, "empty Pauli sum");
  const int n = terms.front().second.n();
  check_matrix_cap(n, caps);
  const std::int64_t dim = std::int64_t{1} << n;
  Mat m = Mat::Zero(dim, dim);
  for (const auto& [coeff, p] : terms) {
    if (p.n() != n)
      throw_error(ErrorCode::dimension_mismatch,
                  "mixed qubit counts in Pauli sum");
    m += coeff * pauli_matrix(p, caps);
  }
  return m;
}

std::optional<Pauli> match_pauli(const Mat& m, double tol, const Caps& caps) {
  const std::int64_t dim = m.rows();
  if (dim < 2 || m.cols() != dim || (dim & (dim - 1)) != 0)
    return std::nullopt;
  int n = 0;
  while ((std::int64_t{1} << n) < dim) ++n;
  // A Pauli column holds a single unit-modulus entry; column 0 names the
  // X mask, columns at single index bits name the Z mask.
  std::int64_t r0 = 0;
  m.col(0).cwiseAbs().maxCoeff(&r0);
  const cd anchor = m(r0, 0);
  if (std::abs(std::abs(anchor) - 1.0) > 0.5) return std::nullopt;
  std::string letters(static_cast<std::size_t>(n), 'I');
  for (int q = 0; q < n; ++q) {
    const std::int64_t bit =
        static_cast<std::int64_t>(index_bit(n, q));
    const bool x = (r0 & bit) != 0;
    const cd ratio = m(r0 ^ bit, bit) / anchor;
    const bool z = ratio.real() < 0.0;
    letters[static_cast<std::size_t>(q)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  Pauli candidate = Pauli::from_text(letters);
  const Vec column = apply_pauli(candidate, basis_state(n, 0));
  const cd ratio = anchor / column(r0);
  const int s = static_cast<int>(
      std::lround(std::arg(ratio) * 2.0 / std::numbers::pi)) & 3;
  candidate = candidate.with_phase_exp(s);
  if (max_abs_diff(pauli_matrix(candidate, caps), m) > tol)
    return std::nullopt;
  return candidate;
}

cd inner(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw_error(ErrorCode::dimension_mismatch, "inner product size mismatch");
  return a.dot(b);  // Eigen's dot conjugates the left argument
}

cd trace(const Mat& m) { return m.trace(); }

int projector_rank(const Mat& p, double tol) {
  if (p.rows() != p.cols())
    throw_error(ErrorCode::invalid_argument, "projector must be square");
  if ((p - p.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw_error(ErrorCode::validation_error, "projector is not Hermitian");
  if ((p * p - p).cwiseAbs().maxCoeff() > tol)
    throw_error(ErrorCode::validation_error, "projector is not idempotent");
  Eigen::SelfAdjointEigenSolver<Mat> solver(p);
  int count = 0;
  for (std::int64_t i = 0; i < p.rows(); ++i)
    if (std::abs(solver.eigenvalues()(i) - 1.0) <= tol) ++count;
  return count;
}

namespace {

int gram_rank(const Mat& gram, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(gram);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  int dim = 0;
  for (std::int64_t i = 0; i < gram.rows(); ++i)
    if (solver.eigenvalues()(i) > tol * scale) ++dim;
  return dim;
}

}  // namespace

int span_dimension(const std::vector<Vec>& vectors, double tol) {
  if (vectors.empty()) return 0;
  const std::int64_t count = static_cast<std::int64_t>(vectors.size());
  Mat gram(count, count);
  for (std::int64_t i = 0; i < count; ++i)
    for (std::int64_t j = 0; j < count; ++j)
      gram(i, j) = vectors[static_cast<std::size_t>(i)].dot(
          vectors[static_cast<std::size_t>(j)]);
  return gram_rank(gram, tol);
}

int span_dimension(const std::vector<Mat>& ops, double tol) {
  std::vector<Vec> flat;
  flat.reserve(ops.size());
  for (const auto& m : ops)
    flat.push_back(Eigen::Map<const Vec>(m.data(), m.size()));
  return span_dimension(flat, tol);
}

double max_abs_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw_error(ErrorCode::dimension_mismatch, "matrix shape mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw_error(ErrorCode::dimension_mismatch, "vector length mismatch");
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Mat id = Mat::Identity(m.rows(), m.cols());
  return (m.adjoint() * m - id).cwiseAbs().maxCoeff() <= tol;
}

Vec random_state(std::mt19937& rng, int n) {
  check_state_cap(n);
  std::normal_distribution<double> gauss(0, 1);
  Vec v(std::int64_t{1} << n);
  for (std::int64_t i = 0; i < v.size(); ++i) v(i) = cd{gauss(rng), gauss(rng)};
  v.normalize();
  return v;
}

Mat random_density(std::mt19937& rng, int n, const Caps& caps) {
  check_matrix_cap(n, caps);
  const std::int64_t dim = std::int64_t{1} << n;
  std::normal_distribution<double> gauss(0, 1);
  Mat a(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i)
    for (std::int64_t j = 0; j < dim; ++j) a(i, j) = cd{gauss(rng), gauss(rng)};
  Mat rho = a * a.adjoint();
  rho /= rho.trace().real();
  return rho;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::int64_t i = 0; i < a.rows(); ++i)
    for (std::int64_t j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

namespace {

// physical index corresponding to virtual index v under `order`.
std::vector<std::int64_t> permutation_map(const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<bool> seen(n, false);
  for (int q : order) {
    if (q < 0 || q >= n || seen[q])
      throw_error(ErrorCode::invalid_argument,
                  "qubit order is not a permutation");
    seen[q] = true;
  }
  const std::int64_t dim = std::int64_t{1} << n;
  std::vector<std::int64_t> map(dim);
  for (std::int64_t v = 0; v < dim; ++v) {
    std::int64_t p = 0;
    for (int j = 0; j < n; ++j)
      if ((v >> (n - 1 - j)) & 1) p |= std::int64_t{1} << (n - 1 - order[j]);
    map[v] = p;
  }
  return map;
}

void check_order_size(std::int64_t dim, const std::vector<int>& order) {
  if (dim != (std::int64_t{1} << order.size()))
    throw_error(ErrorCode::dimension_mismatch,
                "qubit order does not match operand dimension");
}

}  // namespace

Vec to_qubit_order(const Vec& state, const std::vector<int>& order) {
  check_order_size(state.size(), order);
  const auto map = permutation_map(order);
  Vec out(state.size());
  for (std::int64_t v = 0; v < state.size(); ++v) out(v) = state(map[v]);
  return out;
}

Vec from_qubit_order(const Vec& state, const std::vector<int>& order) {
  check_order_size(state.size(), order);
  const auto map = permutation_map(order);
  Vec out(state.size());
  for (std::int64_t v = 0; v < state.size(); ++v) out(map[v]) = state(v);
  return out;
}

Mat to_qubit_order(const Mat& op, const std::vector<int>& order) {
  check_order_size(op.rows(), order);
  check_order_size(op.cols(), order);
  const auto map = permutation_map(order);
  Mat out(op.rows(), op.cols());
  for (std::int64_t i = 0; i < op.rows(); ++i)
    for (std::int64_t j = 0; j < op.cols(); ++j) out(i, j) = op(map[i], map[j]);
  return out;
}

Mat from_qubit_order(const Mat& op, const std::vector<int>& order) {
  check_order_size(op.rows(), order);
  check_order_size(op.cols(), order);
  const auto map = permutation_map(order);
  Mat out(op.rows(), op.cols());
  for (std::int64_t i = 0; i < op.rows(); ++i)
    for (std::int64_t j = 0; j < op.cols(); ++j) out(map[i], map[j]) = op(i, j);
  return out;
}

namespace {

std::vector<int> joint_order(int n, const std::vector<int>& qubits_a,
                             const std::vector<int>& qubits_b) {
  std::vector<int> order = qubits_a;
  order.insert(order.end(), qubits_b.begin(), qubits_b.end());
  if (static_cast<int>(order.size()) != n)
    throw_error(ErrorCode::invalid_argument,
                "factor qubit lists must cover every qubit exactly once");
  return order;
}

}  // namespace

Mat embed_factors(int n, const Mat& a, const std::vector<int>& qubits_a,
                  const Mat& b, const std::vector<int>& qubits_b,
                  const Caps& caps) {
  check_matrix_cap(n, caps);
  return from_qubit_order(kron(a, b), joint_order(n, qubits_a, qubits_b));
}

Vec embed_factors(int n, const Vec& a, const std::vector<int>& qubits_a,
                  const Vec& b, const std::vector<int>& qubits_b,
                  const Caps& caps) {
  check_state_cap(n, caps);
  Vec v(a.size() * b.size());
  for (std::int64_t i = 0; i < a.size(); ++i)
    for (std::int64_t j = 0; j < b.size(); ++j) v(i * b.size() + j) = a(i) * b(j);
  return from_qubit_order(v, joint_order(n, qubits_a, qubits_b));
}

Mat partial_trace_keep(const Mat& m, int n, const std::vector<int>& keep) {
  std::vector<int> rest;
  std::vector<bool> kept(n, false);
  for (int q : keep) kept[q] = true;
  for (int q = 0; q < n; ++q)
    if (!kept[q]) rest.push_back(q);
  const Mat v = to_qubit_order(m, joint_order(n, keep, rest));
  const std::int64_t dk = std::int64_t{1} << keep.size();
  const std::int64_t dr = std::int64_t{1} << rest.size();
  Mat out = Mat::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j)
      for (std::int64_t t = 0; t < dr; ++t) out(i, j) += v(i * dr + t, j * dr + t);
  return out;
}

bool factor_times_identity(const Mat& m, int dim_left, int dim_right,
                           Mat* left, double tol) {
  if (m.rows() != std::int64_t{dim_left} * dim_right || m.rows() != m.cols())
    throw_error(ErrorCode::dimension_mismatch, "factor split shape mismatch");
  Mat cand = Mat::Zero(dim_left, dim_left);
  for (int i = 0; i < dim_left; ++i)
    for (int j = 0; j < dim_left; ++j) {
      cd sum = 0;
      for (int t = 0; t < dim_right; ++t)
        sum += m(std::int64_t{i} * dim_right + t, std::int64_t{j} * dim_right + t);
      cand(i, j) = sum / static_cast<double>(dim_right);
    }
  const bool ok =
      max_abs_diff(kron(cand, Mat::Identity(dim_right, dim_right)), m) <= tol;
  if (ok && left != nullptr) *left = cand;
  return ok;
}

bool identity_times_factor(const Mat& m, int dim_left, int dim_right,
                           Mat* right, double tol) {
  if (m.rows() != std::int64_t{dim_left} * dim_right || m.rows() != m.cols())
    throw_error(ErrorCode::dimension_mismatch, "factor split shape mismatch");
  Mat cand = Mat::Zero(dim_right, dim_right);
  for (int i = 0; i < dim_right; ++i)
    for (int j = 0; j < dim_right; ++j) {
      cd sum = 0;
      for (int s = 0; s < dim_left; ++s)
        sum += m(std::int64_t{s} * dim_right + i, std::int64_t{s} * dim_right + j);
      cand(i, j) = sum / static_cast<double>(dim_left);
    }
  const bool ok =
      max_abs_diff(kron(Mat::Identity(dim_left, dim_left), cand), m) <= tol;
  if (ok && right != nullptr) *right = cand;
  return ok;
}

}  // namespace qrf::dense
