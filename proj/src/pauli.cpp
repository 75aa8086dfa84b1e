/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/pauli.hpp"

#include <algorithm>
#include <bit>

#include "qrfcode/errors.hpp"

namespace qrf {

namespace {

constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Pauli::Pauli(int n) : n_(n), x_(words_for(n), 0), z_(words_for(n), 0) {
  if (n < 0) throw_error(ErrorCode::invalid_argument, "negative qubit count");
}

void Pauli::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= n_)
    throw_error(ErrorCode::invalid_argument,
                "qubit index " + std::to_string(qubit) + " out of range for n=" +
                    std::to_string(n_));
}

bool Pauli::x_bit(int qubit) const {
  check_qubit(qubit);
  return (x_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

bool Pauli::z_bit(int qubit) const {
  check_qubit(qubit);
  return (z_[qubit / kWordBits] >> (qubit % kWordBits)) & 1u;
}

char Pauli::letter(int qubit) const {
  const bool x = x_bit(qubit), z = z_bit(qubit);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

Pauli Pauli::single(int n, int qubit, char letter) {
  Pauli p(n);
  p.check_qubit(qubit);
  const int w = qubit / kWordBits;
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.x_[w] |= bit;
      break;
    case 'Z':
      p.z_[w] |= bit;
      break;
    case 'Y':
      p.x_[w] |= bit;
      p.z_[w] |= bit;
      p.phase_ = 1;  // Y = i XZ
      break;
    default:
      throw_error(ErrorCode::invalid_argument,
                  std::string("unknown Pauli letter '") + letter + "'");
  }
  return p;
}

Pauli Pauli::from_text(const std::string& text) {
  std::size_t pos = 0;
  int sign_exp = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    const bool neg = text[pos] == '-';
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      sign_exp = neg ? 3 : 1;
    } else {
      sign_exp = neg ? 2 : 0;
    }
  }
  if (pos >= text.size())
    throw_error(ErrorCode::parse_error,
                "empty Pauli string at offset " + std::to_string(pos));
  const int n = static_cast<int>(text.size() - pos);
  Pauli p(n);
  int y = 0;
  for (int q = 0; q < n; ++q, ++pos) {
    const char c = text[pos];
    const int w = q / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
    switch (c) {
      case 'I':
        break;
      case 'X':
        p.x_[w] |= bit;
        break;
      case 'Z':
        p.z_[w] |= bit;
        break;
      case 'Y':
        p.x_[w] |= bit;
        p.z_[w] |= bit;
        ++y;
        break;
      default:
        throw_error(ErrorCode::parse_error,
                    std::string("unexpected character '") + c + "' at offset " +
                        std::to_string(pos));
    }
  }
  p.phase_ = (sign_exp + y) & 3;
  return p;
}

int Pauli::y_count() const noexcept {
  int y = 0;
  for (std::size_t w = 0; w < x_.size(); ++w)
    y += std::popcount(x_[w] & z_[w]);
  return y;
}

int Pauli::phase_exp() const noexcept { return (phase_ - y_count()) & 3; }

Pauli Pauli::with_phase_exp(int s) const {
  Pauli p = *this;
  p.phase_ = (s + y_count()) & 3;
  return p;
}

std::complex<double> Pauli::phase() const noexcept {
  static const std::complex<double> table[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_exp()];
}

std::string Pauli::letters() const {
  std::string s(static_cast<std::size_t>(n_), 'I');
  for (int q = 0; q < n_; ++q) s[static_cast<std::size_t>(q)] = letter(q);
  return s;
}

std::string Pauli::to_text() const {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  return prefix[phase_exp()] + letters();
}

int Pauli::weight() const noexcept {
  int w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
  return w;
}

std::vector<int> Pauli::support() const {
  std::vector<int> s;
  for (int q = 0; q < n_; ++q)
    if (letter(q) != 'I') s.push_back(q);
  return s;
}

bool Pauli::is_identity_string() const noexcept {
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (x_[i] | z_[i]) return false;
  return true;
}

std::vector<std::uint8_t> Pauli::symplectic() const {
  std::vector<std::uint8_t> v(2 * static_cast<std::size_t>(n_), 0);
  for (int q = 0; q < n_; ++q) {
    v[static_cast<std::size_t>(q)] = x_bit(q) ? 1 : 0;
    v[static_cast<std::size_t>(n_ + q)] = z_bit(q) ? 1 : 0;
  }
  return v;
}

int Pauli::parity_and(const std::vector<std::uint64_t>& a,
                      const std::vector<std::uint64_t>& b) noexcept {
  int p = 0;
  for (std::size_t i = 0; i < a.size(); ++i) p ^= std::popcount(a[i] & b[i]) & 1;
  return p;
}

Pauli multiply(const Pauli& a, const Pauli& b) {
  if (a.n_ != b.n_)
    throw_error(ErrorCode::dimension_mismatch,
                "Pauli product of " + std::to_string(a.n_) + " and " +
                    std::to_string(b.n_) + " qubits");
  Pauli r(a.n_);
  // (X^x1 Z^z1)(X^x2 Z^z2) picks up (-1)^{z1.x2} when Z^z1 passes X^x2.
  r.phase_ = (a.phase_ + b.phase_ + 2 * Pauli::parity_and(a.z_, b.x_)) & 3;
  for (std::size_t i = 0; i < r.x_.size(); ++i) {
    r.x_[i] = a.x_[i] ^ b.x_[i];
    r.z_[i] = a.z_[i] ^ b.z_[i];
  }
  return r;
}

Pauli Pauli::adjoint() const {
  Pauli r = *this;
  // (i^k X^x Z^z)^dag = i^{-k} Z^z X^x = i^{-k+2(x.z)} X^x Z^z.
  r.phase_ = (-phase_ + 2 * y_count()) & 3;
  return r;
}

bool Pauli::is_hermitian() const noexcept {
  return ((phase_ - y_count()) & 1) == 0;
}

bool commutes(const Pauli& a, const Pauli& b) {
  if (a.n_ != b.n_)
    throw_error(ErrorCode::dimension_mismatch,
                "commutes() on " + std::to_string(a.n_) + " and " +
                    std::to_string(b.n_) + " qubits");
  return (Pauli::parity_and(a.x_, b.z_) ^ Pauli::parity_and(a.z_, b.x_)) == 0;
}

Pauli Pauli::truncate(const std::vector<int>& drop) const {
  Pauli r = *this;
  for (int q : drop) {
    check_qubit(q);
    const int w = q / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
    r.x_[w] &= ~bit;
    r.z_[w] &= ~bit;
  }
  r.phase_ = r.y_count() & 3;  // letters-form prefix +1
  return r;
}

Pauli Pauli::subword(const std::vector<int>& qubits) const {
  Pauli r(static_cast<int>(qubits.size()));
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    check_qubit(qubits[i]);
    const int w = static_cast<int>(i) / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
    if (x_bit(qubits[i])) r.x_[w] |= bit;
    if (z_bit(qubits[i])) r.z_[w] |= bit;
  }
  r.phase_ = r.y_count() & 3;
  return r;
}

Pauli tensor(const Pauli& a, const Pauli& b) {
  Pauli r(a.n_ + b.n_);
  for (int q = 0; q < a.n_; ++q) {
    const int w = q / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (q % kWordBits);
    if (a.x_bit(q)) r.x_[w] |= bit;
    if (a.z_bit(q)) r.z_[w] |= bit;
  }
  for (int q = 0; q < b.n_; ++q) {
    const int t = a.n_ + q;
    const int w = t / kWordBits;
    const std::uint64_t bit = std::uint64_t{1} << (t % kWordBits);
    if (b.x_bit(q)) r.x_[w] |= bit;
    if (b.z_bit(q)) r.z_[w] |= bit;
  }
  r.phase_ = (a.phase_ + b.phase_) & 3;
  return r;
}

bool operator==(const Pauli& a, const Pauli& b) {
  return a.n_ == b.n_ && a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
}

bool weight_lex_less(const Pauli& a, const Pauli& b) {
  const int wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa < wb;
  return a.letters() < b.letters();
}

}  // namespace qrf
