/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_ERROR_SET_HPP
#define QRFCODE_ERROR_SET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrfcode/dense.hpp"
#include "qrfcode/pauli.hpp"
#include "qrfcode/stabilizer.hpp"

namespace qrf {

// Recoverability verdict for a Pauli error list. The overlap matrix C is
// defined by Pi E_i^dag E_j Pi = C_ij Pi; for Pauli errors every entry is
// computed exactly (a power of i or zero), no dense algebra involved.
struct KLReport {
  dense::Mat kl_matrix;  // C; Hermitian, unit diagonal
  bool correctable = false;
  // Character bits of the sector each error maps the code space into.
  std::vector<std::uint64_t> sector_of;
  // Pairs i < j whose code restrictions are linearly dependent (same sector
  // and E_i^dag E_j proportional to a group element).
  std::vector<std::pair<int, int>> degenerate_pairs;
  bool degenerate = false;
  // First pair whose product is a logical operator (trivial sector but not
  // in the group up to phase); set iff not correctable.
  std::optional<std::pair<int, int>> violation;
  std::string violation_note;
};

KLReport kl_check(const StabilizerCode& code, const std::vector<Pauli>& errors);

// Error list bundled with its code and verdict. Not necessarily correctable;
// the report carries the verdict.
struct ErrorSet {
  StabilizerCode code;
  std::vector<Pauli> errors;
  KLReport report;
};

ErrorSet make_error_set(const StabilizerCode& code, std::vector<Pauli> errors);

// One representative per sector, indexed by character bits (errors[0] = I).
// Seeds are kept in their sectors; empty slots are filled deterministically
// by (weight, lexicographic) scan. Throws if the seeds are not correctable
// or collide after deduplication.
ErrorSet build_maximal_error_set(const StabilizerCode& code,
                                 const std::vector<Pauli>& seeds = {});

// Span{E Pi : E in a} == Span{F Pi : F in b}, decided exactly: restrictions
// of Pauli errors are pairwise proportional or Hilbert-Schmidt orthogonal,
// so the spans agree iff the (sector, stabilizer-coset) class sets agree.
bool equivalent(const ErrorSet& a, const ErrorSet& b);
// Dense Gram-rank comparison of the same spans; cross-check at small n.
bool equivalent_dense(const ErrorSet& a, const ErrorSet& b,
                      const dense::Caps& caps = {});

// Frame fields R_chi = eta_chi E_chi restricted to the code space, one per
// character, from a maximal correctable set. field[0] is the identity.
struct FrameFields {
  StabilizerCode code;
  std::vector<Pauli> field;    // indexed by character bits
  std::vector<dense::cd> eta;  // unit phases, +1 by default
};

FrameFields frame_fields_from_errors(const ErrorSet& set);

// O_R(rho) = sum_chi R_chi^{-1} P_chi rho P_chi R_chi. Inverts any error
// whose restriction lies in the field directions; the eta phases cancel, so
// the channel is gauge invariant.
dense::Mat dressing_recovery(const FrameFields& fields, const dense::Mat& rho,
                             const dense::Caps& caps = {});

// Unitary change of basis t mapping the kinematical space onto
// (code factor) (x) (gauge factor): t (E_chi |bar s>) = |s> (x) |chi>.
// The gauge factor is indexed by character bits; the group basis
// |g> = |G|^{-1/2} sum_chi chi(g) |chi> carries the regular representation.
struct NonlocalFactorization {
  StabilizerCode code;
  std::vector<Pauli> field;  // sector representative per character bits
  dense::Mat t;              // unitary, 2^n x 2^n
  int code_dim = 0;          // 2^k
  int gauge_dim = 0;         // 2^(n-k)
  std::vector<dense::Vec> group_basis;  // indexed by element bits
};

NonlocalFactorization build_factorization(const ErrorSet& set,
                                          const dense::Caps& caps = {});

// Whether t (e Pi) t^dag = id_code (x) (gauge operator); stores the gauge
// factor on success. This is the factorized form every member of a
// correctable set must take.
bool restriction_factors(const NonlocalFactorization& f, const Pauli& e,
                         dense::Mat* gauge_op, double tol = 1e-10,
                         const dense::Caps& caps = {});

// dim span{E_i Pi E_j}; 4^(n-k) for a maximal correctable set.
int frame_algebra_dim(const ErrorSet& set, const dense::Caps& caps = {});

// JSON layout: { "code": catalog-name-or-path, "errors": ["XII", ...] }.
ErrorSet error_set_from_json_text(const std::string& text);
ErrorSet load_error_set(const std::string& path);
std::string error_set_to_json_text(const ErrorSet& set);

}  // namespace qrf

#endif  // QRFCODE_ERROR_SET_HPP
