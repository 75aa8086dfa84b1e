/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/pauli.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "qrfcode/errors.hpp"
#include "test_util.hpp"

using qrf::commutes;
using qrf::Pauli;

TEST_CASE("parse and format round trip with canonical prefixes") {
  const Pauli p = Pauli::from_text("ZYYZI");
  CHECK(p.n() == 5);
  CHECK(p.letters() == "ZYYZI");
  CHECK(p.phase_exp() == 0);
  CHECK(p.to_text() == "ZYYZI");

  CHECK(Pauli::from_text("-iXYZ").phase_exp() == 3);
  CHECK(Pauli::from_text("+iXYZ").phase_exp() == 1);
  CHECK(Pauli::from_text("+XYZ").phase_exp() == 0);
  CHECK(Pauli::from_text("-XYZ").phase_exp() == 2);
  CHECK(Pauli::from_text("IIIII").to_text() == "IIIII");
  CHECK(Pauli::from_text("-iXYZ").to_text() == "-iXYZ");
  CHECK(Pauli::from_text("+XYZ").to_text() == "XYZ");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Pauli q = qrftest::random_pauli(rng, 1 + trial % 9);
    CHECK(Pauli::from_text(q.to_text()) == q);
  }
}

TEST_CASE("parse rejects malformed text with an offset") {
  CHECK_THROWS_AS(Pauli::from_text(""), qrf::Error);
  CHECK_THROWS_AS(Pauli::from_text("+i"), qrf::Error);
  CHECK_THROWS_AS(Pauli::from_text("XQZ"), qrf::Error);
  try {
    Pauli::from_text("XQZ");
  } catch (const qrf::Error& e) {
    CHECK(e.code() == qrf::ErrorCode::parse_error);
    CHECK(std::string(e.what()).find("offset 1") != std::string::npos);
  }
}

TEST_CASE("single-qubit products: XZ = -iY") {
  const Pauli x = Pauli::from_text("X");
  const Pauli z = Pauli::from_text("Z");
  const Pauli xz = x * z;
  CHECK(xz.letters() == "Y");
  CHECK(xz.phase_exp() == 3);
  CHECK(xz.to_text() == "-iY");
  const Pauli zx = z * x;
  CHECK(zx.to_text() == "+iY");
}

TEST_CASE("four-qubit product with phase: ZXIX * IYXX = +i ZZXI") {
  const Pauli a = Pauli::from_text("ZXIX");
  const Pauli b = Pauli::from_text("IYXX");
  const Pauli ab = a * b;
  CHECK(ab.to_text() == "+iZZXI");
  // Independent oracle: literal letter matrices and a Kronecker product.
  const auto lhs = qrftest::pauli_matrix_oracle(ab);
  const auto rhs = qrftest::matmul(qrftest::pauli_matrix_oracle(a),
                                   qrftest::pauli_matrix_oracle(b));
  CHECK(qrftest::max_abs_diff(lhs, rhs) == 0.0);
}

TEST_CASE("products against the dense letter-matrix oracle") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 4;
    const Pauli a = qrftest::random_pauli(rng, n);
    const Pauli b = qrftest::random_pauli(rng, n);
    const auto lhs = qrftest::pauli_matrix_oracle(a * b);
    const auto rhs = qrftest::matmul(qrftest::pauli_matrix_oracle(a),
                                     qrftest::pauli_matrix_oracle(b));
    CHECK(qrftest::max_abs_diff(lhs, rhs) == 0.0);
  }
}

TEST_CASE("hermitian strings square to the identity with phase +1") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Pauli p = qrftest::random_pauli(rng, 1 + trial % 8, false);
    if (trial % 2) p = p.with_phase_exp(2);
    REQUIRE(p.is_hermitian());
    const Pauli sq = p * p;
    CHECK(sq.is_identity_string());
    CHECK(sq.phase_exp() == 0);
  }
}

TEST_CASE("commutation matches the phase shift between ab and ba") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const Pauli a = qrftest::random_pauli(rng, n);
    const Pauli b = qrftest::random_pauli(rng, n);
    const Pauli ab = a * b;
    const Pauli ba = b * a;
    CHECK(ab.letters() == ba.letters());
    const int shift = (ab.phase_exp() - ba.phase_exp()) & 3;
    CHECK((shift == 0 || shift == 2));
    CHECK(commutes(a, b) == (shift == 0));
  }
}

TEST_CASE("commutation examples") {
  const Pauli x1 = Pauli::from_text("XII");
  const Pauli z1z2 = Pauli::from_text("ZZI");
  const Pauli z2z3 = Pauli::from_text("IZZ");
  CHECK_FALSE(commutes(x1, z1z2));
  CHECK(commutes(z1z2, z2z3));
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(commutes(qrftest::random_pauli(rng, 5), Pauli(5)));
}

TEST_CASE("multiplication is associative") {
  // Exhaustive on 1 qubit including all phases.
  std::vector<Pauli> all;
  for (const char* s : {"I", "X", "Y", "Z"})
    for (int ph = 0; ph < 4; ++ph)
      all.push_back(Pauli::from_text(s).with_phase_exp(ph));
  for (const Pauli& a : all)
    for (const Pauli& b : all)
      for (const Pauli& c : all) CHECK((a * b) * c == a * (b * c));
  // Randomized for larger n.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 15;
    const Pauli a = qrftest::random_pauli(rng, n);
    const Pauli b = qrftest::random_pauli(rng, n);
    const Pauli c = qrftest::random_pauli(rng, n);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("identity is neutral and mismatched lengths are rejected") {
  std::mt19937 rng(29);
  const Pauli p = qrftest::random_pauli(rng, 6);
  CHECK(p * Pauli(6) == p);
  CHECK(Pauli(6) * p == p);
  CHECK_THROWS_AS(multiply(Pauli(3), Pauli(4)), qrf::Error);
  CHECK_THROWS_AS(commutes(Pauli(3), Pauli(4)), qrf::Error);
}

TEST_CASE("adjoint and hermiticity") {
  CHECK(Pauli::from_text("Y").is_hermitian());
  CHECK(Pauli::from_text("XYZ").is_hermitian());
  CHECK_FALSE(Pauli::from_text("+iX").is_hermitian());
  CHECK(Pauli::from_text("+iX").adjoint().to_text() == "-iX");
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Pauli p = qrftest::random_pauli(rng, 1 + trial % 7);
    CHECK(p.adjoint().adjoint() == p);
    const Pauli prod = p * p.adjoint();
    CHECK(prod.is_identity_string());
    CHECK(prod.phase_exp() == 0);
    CHECK((p.is_hermitian() == (p.adjoint() == p)));
  }
}

TEST_CASE("truncate replaces letters by I and resets the phase") {
  const Pauli p = Pauli::from_text("-XYZ");
  CHECK(p.truncate({2}).to_text() == "XYI");  // qubit 3 dropped
  CHECK(Pauli::from_text("IZZ").truncate({0}).to_text() == "IZZ");
  CHECK(Pauli::from_text("ZZI").truncate({0, 1}).to_text() == "III");
  // The reset applies even when no letter changes.
  CHECK(Pauli::from_text("-iYII").truncate({2}).to_text() == "YII");
  CHECK_THROWS_AS(p.truncate({3}), qrf::Error);
}

TEST_CASE("weight, support, subword and tensor") {
  const Pauli p = Pauli::from_text("-iXIZY");
  CHECK(p.weight() == 3);
  CHECK(p.support() == std::vector<int>{0, 2, 3});
  CHECK(p.subword({0, 2, 3}).to_text() == "XZY");
  CHECK(p.subword({3, 0}).to_text() == "YX");
  const Pauli t = tensor(Pauli::from_text("-iX"), Pauli::from_text("-Z"));
  CHECK(t.to_text() == "+iXZ");
  // Sub-words on complementary supports recombine to the string of p.
  const Pauli left = p.subword({0, 1});
  const Pauli right = p.subword({2, 3});
  CHECK(tensor(left, right).letters() == p.letters());
}

TEST_CASE("weight-then-lexicographic ordering") {
  CHECK(qrf::weight_lex_less(Pauli::from_text("IIZ"), Pauli::from_text("XXI")));
  CHECK(qrf::weight_lex_less(Pauli::from_text("IIZ"), Pauli::from_text("ZII")));
  CHECK(qrf::weight_lex_less(Pauli::from_text("XII"), Pauli::from_text("YII")));
  CHECK_FALSE(qrf::weight_lex_less(Pauli::from_text("ZII"), Pauli::from_text("IIZ")));
}
