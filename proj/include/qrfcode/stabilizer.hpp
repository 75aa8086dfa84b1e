/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_STABILIZER_HPP
#define QRFCODE_STABILIZER_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qrfcode/dense.hpp"
#include "qrfcode/group.hpp"
#include "qrfcode/pauli.hpp"

namespace qrf {

// [[n,k]] stabilizer code. The m = n-k generators fix one isomorphism
// between the stabilizer group and Z_2^m: element g is the product of the
// generators whose exponent bit is set, in the order they were supplied.
// Every character/sector label downstream inherits this basis.
class StabilizerCode {
 public:
  int n() const noexcept { return n_; }
  int k() const noexcept { return n_ - static_cast<int>(generators_.size()); }
  int m() const noexcept { return static_cast<int>(generators_.size()); }
  std::uint64_t group_order() const noexcept {
    return std::uint64_t{1} << m();
  }
  const std::string& name() const noexcept { return name_; }

  const std::vector<Pauli>& generators() const noexcept { return generators_; }
  const std::vector<Pauli>& logical_z() const noexcept { return logical_z_; }
  const std::vector<Pauli>& logical_x() const noexcept { return logical_x_; }

  // U^g with exact phases; identity at g = e.
  Pauli element(const grp::GroupElem& g) const;
  Pauli element(std::uint64_t bits) const;
  // All 2^m elements indexed by exponent bits (materialized once, m <= 24).
  const std::vector<Pauli>& group_table() const;

  // +1/-1 per generator: +1 iff e commutes with S_i.
  std::vector<int> syndrome(const Pauli& e) const;
  std::vector<int> syndrome(const Pauli& e,
                            const std::vector<int>& generator_subset) const;

  // The unique character chi with U^g e (U^g)^dag = chi(g) e.
  grp::Character classify_sector(const Pauli& e) const;

  // If the letters of p match a group element, returns (g, t) with
  // p = i^t U^g; otherwise nullopt.
  struct GroupMatch {
    grp::GroupElem g;
    int phase_ratio;  // exponent of i
  };
  std::optional<GroupMatch> match_group_string(const Pauli& p) const;

  // True iff p's symplectic vector lies in the generator row space (i.e. p
  // is a group element up to phase).
  bool in_group_up_to_phase(const Pauli& p) const;

  friend StabilizerCode build_code(int n, const std::vector<Pauli>& generators,
                                   const std::string& name,
                                   const std::vector<Pauli>& logical_z,
                                   const std::vector<Pauli>& logical_x);

 private:
  int n_ = 0;
  std::string name_;
  std::vector<Pauli> generators_;
  std::vector<Pauli> logical_z_, logical_x_;
  mutable std::vector<Pauli> table_;
  mutable std::unordered_map<std::string, std::uint64_t> string_index_;
  void ensure_table() const;
};

// Validates commutation, hermiticity and symplectic independence; derives
// logical operators by deterministic (weight, lexicographic) search when
// none are supplied.
StabilizerCode build_code(int n, const std::vector<Pauli>& generators,
                          const std::string& name = "",
                          const std::vector<Pauli>& logical_z = {},
                          const std::vector<Pauli>& logical_x = {});

// Deterministic search for k symplectic logical pairs in the centralizer
// modulo the group; candidates scanned by (weight, lexicographic string).
std::pair<std::vector<Pauli>, std::vector<Pauli>> logical_operators(
    const StabilizerCode& code);

// Pi = (1/|G|) sum_g U^g (full matrix, n <= caps.full_matrix_n).
dense::Mat code_projector(const StabilizerCode& code,
                          const dense::Caps& caps = {});

// P_chi = (1/|G|) sum_g chi(g) U^g.
dense::Mat isotype_projector(const StabilizerCode& code,
                             const grp::Character& chi,
                             const dense::Caps& caps = {});

// (1/|G|) sum_g U^g |s> at state-action cost.
dense::Vec apply_group_average(const StabilizerCode& code,
                               const dense::Vec& state,
                               const dense::Caps& caps = {});
// Same with character weights.
dense::Vec apply_isotype_projector(const StabilizerCode& code,
                                   const grp::Character& chi,
                                   const dense::Vec& state,
                                   const dense::Caps& caps = {});

// Codeword basis fixed by the logical operators: |bar s> is the joint
// +/- eigenvector chain generated from the group average of the first
// computational basis state with nonzero projection, ordered by logical_z
// eigenvalues; logical bit i set applies logical_x[i]. The overall phase
// makes the lowest-index nonzero amplitude of |bar 0> real positive.
dense::Vec encode_computational(const StabilizerCode& code,
                                const dense::Vec& logical_amplitudes,
                                const dense::Caps& caps = {});

}  // namespace qrf

#endif  // QRFCODE_STABILIZER_HPP
