/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_GF2_HPP
#define QRFCODE_GF2_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace qrf::gf2 {

using BitVec = std::vector<std::uint8_t>;

// Dense desk-scale GF(2) matrix, one byte per entry, row-major.
struct BitMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;

  BitMatrix() = default;
  BitMatrix(int r, int c);
  static BitMatrix from_rows(const std::vector<BitVec>& rows);

  std::uint8_t at(int r, int c) const;
  void set(int r, int c, std::uint8_t v);
  BitVec row(int r) const;
  void append_row(const BitVec& v);
};

// Reduced row echelon form; pivots are chosen lowest column index first so
// every derived canonical form is reproducible. If `pivots` is non-null it
// receives the pivot column of each nonzero row, ascending.
BitMatrix rref(const BitMatrix& m, std::vector<int>* pivots = nullptr);

int rank(const BitMatrix& m);

// Basis of the right null space {v : m v = 0}; empty iff full column rank.
std::vector<BitVec> kernel(const BitMatrix& m);

// True iff v lies in the row space of m.
bool in_rowspace(const BitMatrix& m, const BitVec& v);

// Coefficients c with sum_i c_i row_i(m) = v, or nullopt if v is outside
// the row space. Deterministic: free rows get coefficient 0.
std::optional<BitVec> solve_rowspace(const BitMatrix& m, const BitVec& v);

// Unique representative of v + rowspace(subspace): eliminate v against the
// reduced echelon basis, lowest pivot first. Constant on cosets, idempotent.
BitVec coset_canonical(const BitVec& v, const BitMatrix& subspace);

BitVec add(const BitVec& a, const BitVec& b);
bool is_zero(const BitVec& v);

}  // namespace qrf::gf2

#endif  // QRFCODE_GF2_HPP
