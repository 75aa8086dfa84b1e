/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/stabilizer.hpp"

#include <bit>
#include <functional>
#include <string>

#include "qrfcode/errors.hpp"
#include "qrfcode/gf2.hpp"

namespace qrf {

namespace {

constexpr int kTableCapRank = 24;

gf2::BitMatrix symplectic_rows(const std::vector<Pauli>& ops) {
  gf2::BitMatrix m;
  for (const auto& p : ops) m.append_row(p.symplectic());
  return m;
}

// Visits every weight-w string on n qubits in ascending lexicographic order
// (I < X < Y < Z); stops early when the callback returns true.
bool scan_weight(int n, int w, std::string& prefix,
                 const std::function<bool(const std::string&)>& visit) {
  const int pos = static_cast<int>(prefix.size());
  const int remaining = n - pos;
  if (w > remaining) return false;
  if (pos == n) return visit(prefix);
  static const char nontrivial[3] = {'X', 'Y', 'Z'};
  if (remaining > w) {
    prefix.push_back('I');
    if (scan_weight(n, w, prefix, visit)) return true;
    prefix.pop_back();
  }
  if (w > 0) {
    for (char c : nontrivial) {
      prefix.push_back(c);
      if (scan_weight(n, w - 1, prefix, visit)) return true;
      prefix.pop_back();
    }
  }
  return false;
}

bool scan_weight_lex(int n, const std::function<bool(const Pauli&)>& visit) {
  for (int w = 1; w <= n; ++w) {
    std::string prefix;
    if (scan_weight(n, w, prefix, [&](const std::string& s) {
          return visit(Pauli::from_text(s));
        }))
      return true;
  }
  return false;
}

}  // namespace

Pauli StabilizerCode::element(const grp::GroupElem& g) const {
  if (g.m != m())
    throw_error(ErrorCode::dimension_mismatch,
                "group element rank " + std::to_string(g.m) +
                    " != code rank " + std::to_string(m()));
  return element(g.bits);
}

Pauli StabilizerCode::element(std::uint64_t bits) const {
  if (m() <= kTableCapRank) {
    ensure_table();
    return table_[bits];
  }
  Pauli p(n_);
  for (int i = 0; i < m(); ++i)
    if ((bits >> i) & 1) p = p * generators_[static_cast<std::size_t>(i)];
  return p;
}

void StabilizerCode::ensure_table() const {
  if (!table_.empty()) return;
  if (m() > kTableCapRank)
    throw_error(ErrorCode::cap_exceeded,
                "group table materialization capped at rank 24");
  const std::uint64_t size = group_order();
  table_.resize(size);
  table_[0] = Pauli(n_);
  for (std::uint64_t g = 1; g < size; ++g) {
    const int low = std::countr_zero(g);
    table_[g] =
        generators_[static_cast<std::size_t>(low)] * table_[g ^ (1ull << low)];
  }
  string_index_.reserve(size);
  for (std::uint64_t g = 0; g < size; ++g)
    string_index_.emplace(table_[g].letters(), g);
}

const std::vector<Pauli>& StabilizerCode::group_table() const {
  ensure_table();
  return table_;
}

std::vector<int> StabilizerCode::syndrome(const Pauli& e) const {
  std::vector<int> s;
  s.reserve(generators_.size());
  for (const auto& g : generators_) s.push_back(commutes(e, g) ? 1 : -1);
  return s;
}

std::vector<int> StabilizerCode::syndrome(
    const Pauli& e, const std::vector<int>& generator_subset) const {
  std::vector<int> s;
  s.reserve(generator_subset.size());
  for (int i : generator_subset) {
    if (i < 0 || i >= m())
      throw_error(ErrorCode::invalid_argument, "generator index out of range");
    s.push_back(commutes(e, generators_[static_cast<std::size_t>(i)]) ? 1 : -1);
  }
  return s;
}

grp::Character StabilizerCode::classify_sector(const Pauli& e) const {
  grp::Character chi{m(), 0};
  for (int i = 0; i < m(); ++i)
    if (!commutes(e, generators_[static_cast<std::size_t>(i)]))
      chi.bits |= std::uint64_t{1} << i;
  return chi;
}

std::optional<StabilizerCode::GroupMatch> StabilizerCode::match_group_string(
    const Pauli& p) const {
  ensure_table();
  const auto it = string_index_.find(p.letters());
  if (it == string_index_.end()) return std::nullopt;
  const Pauli ratio = p * table_[it->second].adjoint();
  return GroupMatch{grp::GroupElem{m(), it->second}, ratio.phase_exp()};
}

bool StabilizerCode::in_group_up_to_phase(const Pauli& p) const {
  return gf2::in_rowspace(symplectic_rows(generators_), p.symplectic());
}

StabilizerCode build_code(int n, const std::vector<Pauli>& generators,
                          const std::string& name,
                          const std::vector<Pauli>& logical_z,
                          const std::vector<Pauli>& logical_x) {
  if (n <= 0) throw_error(ErrorCode::invalid_argument, "need n >= 1");
  if (static_cast<int>(generators.size()) > n)
    throw_error(ErrorCode::validation_error,
                "more generators than physical qubits");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Pauli& g = generators[i];
    if (g.n() != n)
      throw_error(ErrorCode::dimension_mismatch,
                  "generator " + std::to_string(i + 1) + " acts on " +
                      std::to_string(g.n()) + " qubits, expected " +
                      std::to_string(n));
    if (!g.is_hermitian())
      throw_error(ErrorCode::validation_error,
                  "generator " + g.to_text() + " is not Hermitian");
    const Pauli sq = g * g;
    if (!sq.is_identity_string() || sq.phase_exp() != 0)
      throw_error(ErrorCode::validation_error,
                  "generator " + g.to_text() + " does not square to +I");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!commutes(generators[i], generators[j]))
        throw_error(ErrorCode::validation_error,
                    "generators " + generators[i].to_text() + " and " +
                        generators[j].to_text() + " anticommute");
  const gf2::BitMatrix symp = symplectic_rows(generators);
  if (gf2::rank(symp) != static_cast<int>(generators.size())) {
    // Distinguish a sign inconsistency (some dependency multiplies to -I)
    // from plain redundancy; either way the set is rejected.
    gf2::BitMatrix transposed(symp.cols, symp.rows);
    for (int r = 0; r < symp.rows; ++r)
      for (int c = 0; c < symp.cols; ++c) transposed.set(c, r, symp.at(r, c));
    for (const auto& combo : gf2::kernel(transposed)) {
      Pauli prod(n);
      for (std::size_t i = 0; i < combo.size(); ++i)
        if (combo[i]) prod = prod * generators[i];
      if (prod.phase_exp() != 0)
        throw_error(ErrorCode::validation_error,
                    "dependent generators multiply to -I");
    }
    throw_error(ErrorCode::validation_error,
                "generators are dependent over GF(2)");
  }

  StabilizerCode code;
  code.n_ = n;
  code.name_ = name;
  code.generators_ = generators;

  const int k = code.k();
  auto validate_logicals = [&](const std::vector<Pauli>& lz,
                               const std::vector<Pauli>& lx) {
    if (static_cast<int>(lz.size()) != k || static_cast<int>(lx.size()) != k)
      throw_error(ErrorCode::validation_error,
                  "need exactly k logical operators of each type");
    for (int i = 0; i < k; ++i) {
      for (const auto* p : {&lz[static_cast<std::size_t>(i)],
                            &lx[static_cast<std::size_t>(i)]}) {
        if (p->n() != n)
          throw_error(ErrorCode::dimension_mismatch, "logical operator size");
        if (!p->is_hermitian())
          throw_error(ErrorCode::validation_error,
                      "logical operator " + p->to_text() + " is not Hermitian");
        for (const auto& g : generators)
          if (!commutes(*p, g))
            throw_error(ErrorCode::validation_error,
                        "logical operator " + p->to_text() +
                            " leaves the centralizer");
        if (gf2::in_rowspace(symp, p->symplectic()))
          throw_error(ErrorCode::validation_error,
                      "logical operator " + p->to_text() +
                          " is a stabilizer element");
      }
      for (int j = 0; j < k; ++j) {
        const bool same = i == j;
        if (commutes(lz[static_cast<std::size_t>(i)],
                     lx[static_cast<std::size_t>(j)]) == same)
          throw_error(ErrorCode::validation_error,
                      "logical pairing violated between Z" +
                          std::to_string(i + 1) + " and X" +
                          std::to_string(j + 1));
        if (j > i) {
          if (!commutes(lz[static_cast<std::size_t>(i)],
                        lz[static_cast<std::size_t>(j)]) ||
              !commutes(lx[static_cast<std::size_t>(i)],
                        lx[static_cast<std::size_t>(j)]))
            throw_error(ErrorCode::validation_error,
                        "logical operators of equal type must commute");
        }
      }
    }
  };

  if (!logical_z.empty() || !logical_x.empty()) {
    validate_logicals(logical_z, logical_x);
    code.logical_z_ = logical_z;
    code.logical_x_ = logical_x;
  } else if (k > 0) {
    auto [lz, lx] = logical_operators(code);
    validate_logicals(lz, lx);
    code.logical_z_ = std::move(lz);
    code.logical_x_ = std::move(lx);
  }
  return code;
}

std::pair<std::vector<Pauli>, std::vector<Pauli>> logical_operators(
    const StabilizerCode& code) {
  const int n = code.n(), k = code.k();
  std::vector<Pauli> lz, lx;
  gf2::BitMatrix chosen = symplectic_rows(code.generators());
  auto in_centralizer = [&](const Pauli& c) {
    for (const auto& g : code.generators())
      if (!commutes(c, g)) return false;
    return true;
  };
  for (int i = 0; i < k; ++i) {
    Pauli z_i, x_i;
    bool found = scan_weight_lex(n, [&](const Pauli& c) {
      if (!in_centralizer(c)) return false;
      for (const auto& p : lz)
        if (!commutes(c, p)) return false;
      for (const auto& p : lx)
        if (!commutes(c, p)) return false;
      if (gf2::in_rowspace(chosen, c.symplectic())) return false;
      z_i = c;
      return true;
    });
    if (!found)
      throw_error(ErrorCode::validation_error, "logical Z search exhausted");
    // Anticommuting with z_i already implies independence from everything
    // chosen so far (all of which commutes with z_i).
    found = scan_weight_lex(n, [&](const Pauli& c) {
      if (!in_centralizer(c)) return false;
      if (commutes(c, z_i)) return false;
      for (const auto& p : lz)
        if (!commutes(c, p)) return false;
      for (const auto& p : lx)
        if (!commutes(c, p)) return false;
      x_i = c;
      return true;
    });
    if (!found)
      throw_error(ErrorCode::validation_error, "logical X search exhausted");
    lz.push_back(z_i);
    lx.push_back(x_i);
    chosen.append_row(z_i.symplectic());
    chosen.append_row(x_i.symplectic());
  }
  return {lz, lx};
}

dense::Mat code_projector(const StabilizerCode& code, const dense::Caps& caps) {
  return isotype_projector(code, grp::trivial_character(code.m()), caps);
}

dense::Mat isotype_projector(const StabilizerCode& code,
                             const grp::Character& chi,
                             const dense::Caps& caps) {
  dense::check_matrix_cap(code.n(), caps);
  if (chi.m != code.m())
    throw_error(ErrorCode::dimension_mismatch, "character rank mismatch");
  std::vector<std::pair<dense::cd, Pauli>> terms;
  const double norm = 1.0 / static_cast<double>(code.group_order());
  for (std::uint64_t g = 0; g < code.group_order(); ++g)
    terms.emplace_back(norm * chi_eval(chi, {code.m(), g}), code.element(g));
  return dense::operator_from_paulis(terms, caps);
}

dense::Vec apply_group_average(const StabilizerCode& code,
                               const dense::Vec& state,
                               const dense::Caps& caps) {
  return apply_isotype_projector(code, grp::trivial_character(code.m()), state,
                                 caps);
}

dense::Vec apply_isotype_projector(const StabilizerCode& code,
                                   const grp::Character& chi,
                                   const dense::Vec& state,
                                   const dense::Caps& caps) {
  dense::check_state_cap(code.n(), caps);
  if (chi.m != code.m())
    throw_error(ErrorCode::dimension_mismatch, "character rank mismatch");
  dense::Vec acc = dense::Vec::Zero(state.size());
  for (std::uint64_t g = 0; g < code.group_order(); ++g) {
    const double sign = chi_eval(chi, {code.m(), g});
    acc += sign * dense::apply_pauli(code.element(g), state);
  }
  return acc / static_cast<double>(code.group_order());
}

dense::Vec encode_computational(const StabilizerCode& code,
                                const dense::Vec& logical_amplitudes,
                                const dense::Caps& caps) {
  dense::check_state_cap(code.n(), caps);
  const int k = code.k();
  const std::int64_t logical_dim = std::int64_t{1} << k;
  if (logical_amplitudes.size() != logical_dim)
    throw_error(ErrorCode::dimension_mismatch,
                "logical amplitude vector must have length 2^k");
  const double input_norm = logical_amplitudes.norm();
  if (input_norm < 1e-12)
    throw_error(ErrorCode::invalid_argument, "zero logical state");

  // |bar 0>: group-average the first basis state with nonzero projection,
  // then project onto the +1 eigenspace of every logical Z.
  const std::int64_t dim = std::int64_t{1} << code.n();
  dense::Vec zero_word;
  for (std::int64_t b = 0; b < dim; ++b) {
    dense::Vec v =
        apply_group_average(code, dense::basis_state(code.n(), b), caps);
    for (const auto& z : code.logical_z())
      v = 0.5 * (v + dense::apply_pauli(z, v));
    if (v.norm() > 1e-9) {
      zero_word = v.normalized();
      break;
    }
  }
  if (zero_word.size() == 0)
    throw_error(ErrorCode::validation_error, "no codeword found");
  for (std::int64_t b = 0; b < dim; ++b) {
    if (std::abs(zero_word(b)) > 1e-9) {
      zero_word *= std::conj(zero_word(b)) / std::abs(zero_word(b));
      break;
    }
  }

  dense::Vec out = dense::Vec::Zero(dim);
  for (std::int64_t s = 0; s < logical_dim; ++s) {
    if (std::abs(logical_amplitudes(s)) == 0.0) continue;
    dense::Vec word = zero_word;
    for (int i = 0; i < k; ++i)
      if ((static_cast<std::uint64_t>(s) >> (k - 1 - i)) & 1)
        word = dense::apply_pauli(code.logical_x()[static_cast<std::size_t>(i)],
                                  word);
    out += (logical_amplitudes(s) / input_norm) * word;
  }
  return out;
}

}  // namespace qrf
