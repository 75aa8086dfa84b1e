/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/group.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qrfcode/errors.hpp"

namespace qrf::grp {

int chi_eval(const Character& chi, const GroupElem& g) {
  if (chi.m != g.m)
    throw_error(ErrorCode::dimension_mismatch,
                "character rank " + std::to_string(chi.m) +
                    " != element rank " + std::to_string(g.m));
  return (std::popcount(chi.bits & g.bits) & 1) ? -1 : 1;
}

std::uint64_t group_order(int m) {
  if (m < 0 || m > 62)
    throw_error(ErrorCode::invalid_argument, "group rank out of range");
  return std::uint64_t{1} << m;
}

GroupFunction fourier(const GroupFunction& f) {
  const std::uint64_t size = group_order(f.m);
  if (f.values.size() != size)
    throw_error(ErrorCode::dimension_mismatch,
                "group function has wrong domain size");
  GroupFunction out{f.m, f.values};
  // In-place Walsh transform with 1/sqrt(2) per stage: each stage is a
  // self-inverse rotation, so the whole transform is involutive.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t stride = 1; stride < size; stride <<= 1) {
    for (std::uint64_t base = 0; base < size; base += stride << 1) {
      for (std::uint64_t i = base; i < base + stride; ++i) {
        const auto a = out.values[i];
        const auto b = out.values[i + stride];
        out.values[i] = (a + b) * inv_sqrt2;
        out.values[i + stride] = (a - b) * inv_sqrt2;
      }
    }
  }
  return out;
}

GroupFunction fourier_inverse(const GroupFunction& f) { return fourier(f); }

std::vector<std::vector<int>> character_orthogonality_table(int m) {
  if (m < 0 || m > 16)
    throw_error(ErrorCode::cap_exceeded,
                "character table cap is m <= 16, got " + std::to_string(m));
  const std::uint64_t size = group_order(m);
  std::vector<std::vector<int>> table(size, std::vector<int>(size, 0));
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) {
      long long sum = 0;
      for (std::uint64_t g = 0; g < size; ++g)
        sum += chi_eval({m, a}, {m, g}) * chi_eval({m, b}, {m, g});
      if (sum % static_cast<long long>(size) != 0)
        throw_error(ErrorCode::validation_error,
                    "character inner product is not integral");
      table[a][b] = static_cast<int>(sum / static_cast<long long>(size));
    }
  }
  return table;
}

}  // namespace qrf::grp
