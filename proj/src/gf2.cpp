/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/gf2.hpp"

#include <string>

#include "qrfcode/errors.hpp"

namespace qrf::gf2 {

BitMatrix::BitMatrix(int r, int c)
    : rows(r), cols(c), bits(static_cast<std::size_t>(r) * c, 0) {
  if (r < 0 || c < 0)
    throw_error(ErrorCode::invalid_argument, "negative matrix shape");
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows_in) {
  BitMatrix m;
  for (const auto& r : rows_in) m.append_row(r);
  return m;
}

std::uint8_t BitMatrix::at(int r, int c) const {
  return bits[static_cast<std::size_t>(r) * cols + c];
}

void BitMatrix::set(int r, int c, std::uint8_t v) {
  bits[static_cast<std::size_t>(r) * cols + c] = v & 1;
}

BitVec BitMatrix::row(int r) const {
  return BitVec(bits.begin() + static_cast<std::ptrdiff_t>(r) * cols,
                bits.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols);
}

void BitMatrix::append_row(const BitVec& v) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols)
    throw_error(ErrorCode::dimension_mismatch,
                "row length " + std::to_string(v.size()) + " != cols " +
                    std::to_string(cols));
  bits.insert(bits.end(), v.begin(), v.end());
  ++rows;
}

BitMatrix rref(const BitMatrix& m, std::vector<int>* pivots) {
  BitMatrix a = m;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows; ++i) {
      if (a.at(i, c)) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols; ++j) {
        const std::uint8_t t = a.at(r, j);
        a.set(r, j, a.at(pivot, j));
        a.set(pivot, j, t);
      }
    for (int i = 0; i < a.rows; ++i) {
      if (i != r && a.at(i, c))
        for (int j = c; j < a.cols; ++j) a.set(i, j, a.at(i, j) ^ a.at(r, j));
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

int rank(const BitMatrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

std::vector<BitVec> kernel(const BitMatrix& m) {
  std::vector<int> pivots;
  const BitMatrix e = rref(m, &pivots);
  std::vector<std::uint8_t> is_pivot(static_cast<std::size_t>(m.cols), 0);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<BitVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    BitVec v(static_cast<std::size_t>(m.cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] =
          e.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_rowspace(const BitMatrix& m, const BitVec& v) {
  return is_zero(coset_canonical(v, m));
}

std::optional<BitVec> solve_rowspace(const BitMatrix& m, const BitVec& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw_error(ErrorCode::dimension_mismatch, "solve_rowspace length mismatch");
  // Eliminate the augmented system [m^T | v] by tracking row combinations.
  BitMatrix work = m;
  std::vector<BitVec> combo(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    combo[static_cast<std::size_t>(i)] =
        BitVec(static_cast<std::size_t>(m.rows), 0);
    combo[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  }
  BitVec target = v;
  BitVec coeff(static_cast<std::size_t>(m.rows), 0);
  int r = 0;
  for (int c = 0; c < work.cols && r < work.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < work.rows; ++i)
      if (work.at(i, c)) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < work.cols; ++j) {
        const std::uint8_t t = work.at(r, j);
        work.set(r, j, work.at(pivot, j));
        work.set(pivot, j, t);
      }
      std::swap(combo[static_cast<std::size_t>(r)],
                combo[static_cast<std::size_t>(pivot)]);
    }
    for (int i = 0; i < work.rows; ++i) {
      if (i != r && work.at(i, c)) {
        for (int j = 0; j < work.cols; ++j)
          work.set(i, j, work.at(i, j) ^ work.at(r, j));
        combo[static_cast<std::size_t>(i)] =
            add(combo[static_cast<std::size_t>(i)],
                combo[static_cast<std::size_t>(r)]);
      }
    }
    if (target[static_cast<std::size_t>(c)]) {
      for (int j = 0; j < work.cols; ++j)
        target[static_cast<std::size_t>(j)] =
            target[static_cast<std::size_t>(j)] ^ work.at(r, j);
      coeff = add(coeff, combo[static_cast<std::size_t>(r)]);
    }
    ++r;
  }
  if (!is_zero(target)) return std::nullopt;
  return coeff;
}

BitVec coset_canonical(const BitVec& v, const BitMatrix& subspace) {
  if (subspace.rows > 0 && static_cast<int>(v.size()) != subspace.cols)
    throw_error(ErrorCode::dimension_mismatch,
                "coset_canonical length mismatch");
  std::vector<int> pivots;
  const BitMatrix e = rref(subspace, &pivots);
  BitVec r = v;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (r[static_cast<std::size_t>(pivots[i])]) {
      for (int j = 0; j < e.cols; ++j)
        r[static_cast<std::size_t>(j)] =
            r[static_cast<std::size_t>(j)] ^ e.at(static_cast<int>(i), j);
    }
  }
  return r;
}

BitVec add(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size())
    throw_error(ErrorCode::dimension_mismatch, "BitVec add length mismatch");
  BitVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] ^ b[i]) & 1;
  return r;
}

bool is_zero(const BitVec& v) {
  for (auto b : v)
    if (b) return false;
  return true;
}

}  // namespace qrf::gf2
