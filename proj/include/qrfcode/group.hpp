/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_GROUP_HPP
#define QRFCODE_GROUP_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace qrf::grp {

// Elements of Z_2^m and its characters share the bit-vector encoding: bit i
// is the exponent of generator i (element) or the label a with
// chi_a(g) = (-1)^{a.g} (character). The pairing is the GF(2) dot product,
// which makes the Fourier transform below an involutive relabeling.
struct GroupElem {
  int m = 0;
  std::uint64_t bits = 0;
};

struct Character {
  int m = 0;
  std::uint64_t bits = 0;
};

// Function on the group, values indexed by element bits (0 .. 2^m - 1).
struct GroupFunction {
  int m = 0;
  std::vector<std::complex<double>> values;
};

inline GroupElem identity_elem(int m) { return {m, 0}; }
inline Character trivial_character(int m) { return {m, 0}; }
inline GroupElem mul(const GroupElem& a, const GroupElem& b) {
  return {a.m, a.bits ^ b.bits};
}
inline Character mul(const Character& a, const Character& b) {
  return {a.m, a.bits ^ b.bits};
}

// (-1)^(chi.bits . g.bits), exactly.
int chi_eval(const Character& chi, const GroupElem& g);

std::uint64_t group_order(int m);

// F[f](chi) = 2^{-m/2} sum_g f(g) chi(g). Involutive under the shared
// bit encoding, so it doubles as the inverse.
GroupFunction fourier(const GroupFunction& f);
GroupFunction fourier_inverse(const GroupFunction& f);

// Matrix t[a][b] = 2^{-m} sum_g chi_a(g) chi_b(g); the Kronecker delta,
// returned as exact integers. Cap m <= 16 (table has 4^m entries); anything
// beyond a handful is impractical and tests stay at m <= 4.
std::vector<std::vector<int>> character_orthogonality_table(int m);

}  // namespace qrf::grp

#endif  // QRFCODE_GROUP_HPP
