/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/error_set.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "qrfcode/errors.hpp"
#include "qrfcode/io.hpp"
#include "test_util.hpp"

using qrf::ErrorSet;
using qrf::KLReport;
using qrf::Pauli;
using qrf::StabilizerCode;
using qrf::dense::cd;
using qrf::dense::Mat;
using qrf::dense::Vec;

namespace {

StabilizerCode three_qubit() { return qrf::io::load_code("3qubit"); }
StabilizerCode five_qubit() { return qrf::io::load_code("5qubit"); }

std::vector<Pauli> paulis(const std::vector<std::string>& texts) {
  std::vector<Pauli> out;
  for (const auto& t : texts) out.push_back(Pauli::from_text(t));
  return out;
}

std::vector<std::string> letter_list(const std::vector<Pauli>& ops) {
  std::vector<std::string> out;
  for (const auto& p : ops) out.push_back(p.letters());
  return out;
}

}  // namespace

TEST_CASE("kl_check accepts a set with pairwise distinct sectors") {
  const KLReport r =
      qrf::kl_check(three_qubit(), paulis({"III", "XII", "IXI", "IIX"}));
  CHECK(r.correctable);
  CHECK_FALSE(r.degenerate);
  CHECK_FALSE(r.violation.has_value());
  CHECK(r.sector_of == std::vector<std::uint64_t>{0, 1, 3, 2});
  CHECK(qrf::dense::max_abs_diff(r.kl_matrix, Mat::Identity(4, 4)) == 0.0);
}

TEST_CASE("kl_check keeps degenerate but dependent restrictions") {
  // IIX and ZZX differ by the group element ZZI, so they act identically
  // on the code space: correctable, C singular.
  const KLReport r =
      qrf::kl_check(three_qubit(), paulis({"III", "IIX", "ZZX"}));
  CHECK(r.correctable);
  CHECK(r.degenerate);
  CHECK(r.degenerate_pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(r.kl_matrix(1, 2) == cd{1, 0});
  CHECK(r.kl_matrix(0, 1) == cd{0, 0});  // different sectors
  Eigen::ColPivHouseholderQR<Mat> qr(r.kl_matrix);
  qr.setThreshold(1e-8);
  CHECK(qr.rank() == 2);  // one class per occupied sector
}

TEST_CASE("kl_check records exact unit phases in the overlap matrix") {
  // XII^dag * YZI = i ZZI, a group element with ratio i.
  const KLReport r = qrf::kl_check(three_qubit(), paulis({"XII", "YZI"}));
  CHECK(r.correctable);
  CHECK(r.degenerate);
  CHECK(r.kl_matrix(0, 1) == cd{0, 1});
  CHECK(r.kl_matrix(1, 0) == cd{0, -1});
  CHECK(r.kl_matrix(0, 0) == cd{1, 0});
}

TEST_CASE("kl_check rejects sets whose product is a bare logical") {
  SUBCASE("X3 against X1X2") {
    const KLReport r =
        qrf::kl_check(three_qubit(), paulis({"III", "IIX", "XXI"}));
    CHECK_FALSE(r.correctable);
    REQUIRE(r.violation.has_value());
    CHECK(*r.violation == std::pair<int, int>{1, 2});
    CHECK(r.violation_note.find("XXX") != std::string::npos);
  }
  SUBCASE("a sector-0 operator outside the group") {
    const KLReport r = qrf::kl_check(three_qubit(), paulis({"III", "ZII"}));
    CHECK_FALSE(r.correctable);
    REQUIRE(r.violation.has_value());
    CHECK(*r.violation == std::pair<int, int>{0, 1});
  }
}

TEST_CASE("kl verdict against the dense projector identity") {
  // Pi E_i^dag E_j Pi must equal C_ij Pi entrywise.
  const StabilizerCode code = three_qubit();
  const Mat projector = qrf::code_projector(code);
  for (const auto& texts : {std::vector<std::string>{"III", "XII", "IXI"},
                            std::vector<std::string>{"XII", "YZI", "IIX"},
                            std::vector<std::string>{"IYI", "ZZX", "YII"}}) {
    const std::vector<Pauli> errors = paulis(texts);
    const KLReport r = qrf::kl_check(code, errors);
    REQUIRE(r.correctable);
    for (std::size_t i = 0; i < errors.size(); ++i)
      for (std::size_t j = 0; j < errors.size(); ++j) {
        const Mat lhs = projector *
                        qrf::dense::pauli_matrix(errors[i].adjoint() *
                                                 errors[j]) *
                        projector;
        CHECK(qrf::dense::max_abs_diff(
                  lhs, r.kl_matrix(i, j) * projector) < 1e-12);
      }
  }
}

TEST_CASE("build_maximal_error_set fills sectors in weight-lex order") {
  const ErrorSet set = qrf::build_maximal_error_set(three_qubit());
  REQUIRE(set.errors.size() == 4);
  CHECK(letter_list(set.errors) ==
        std::vector<std::string>{"III", "XII", "IIX", "IXI"});
  CHECK(set.report.correctable);
  // Index equals sector: errors[chi] lands in sector chi.
  for (std::size_t chi = 0; chi < 4; ++chi)
    CHECK(set.report.sector_of[chi] == chi);
}

TEST_CASE("build_maximal_error_set keeps seeds in their sectors") {
  const ErrorSet set =
      qrf::build_maximal_error_set(three_qubit(), paulis({"XXI"}));
  CHECK(letter_list(set.errors) ==
        std::vector<std::string>{"III", "XII", "XXI", "IXI"});
  CHECK(set.report.correctable);
}

TEST_CASE("build_maximal_error_set rejects logical seeds") {
  CHECK_THROWS_AS(qrf::build_maximal_error_set(three_qubit(),
                                               paulis({"XXX"})),
                  qrf::Error);
  CHECK_THROWS_AS(qrf::build_maximal_error_set(three_qubit(),
                                               paulis({"IIX", "IIY"})),
                  qrf::Error);
  // A dependent duplicate is harmless: the first representative stays.
  const ErrorSet set =
      qrf::build_maximal_error_set(three_qubit(), paulis({"IIX", "ZZX"}));
  CHECK(set.errors[2].letters() == "IIX");
}

TEST_CASE("five-qubit maximal set is the fifteen weight-one errors") {
  const ErrorSet set = qrf::build_maximal_error_set(five_qubit());
  REQUIRE(set.errors.size() == 16);
  CHECK(set.report.correctable);
  std::set<std::uint64_t> sectors;
  for (std::size_t chi = 0; chi < 16; ++chi) {
    sectors.insert(set.report.sector_of[chi]);
    CHECK(set.report.sector_of[chi] == chi);
    CHECK(set.errors[chi].weight() <= 1);  // distance 3, so weight 1 suffices
  }
  CHECK(sectors.size() == 16);
}

TEST_CASE("equivalent compares code-space spans exactly") {
  const StabilizerCode code = three_qubit();
  const auto wrap = [&code](const std::vector<std::string>& texts) {
    return qrf::make_error_set(code, paulis(texts));
  };
  SUBCASE("group-element dressing does not change the span") {
    CHECK(qrf::equivalent(wrap({"III", "IIX"}), wrap({"III", "ZZX"})));
    CHECK(qrf::equivalent_dense(wrap({"III", "IIX"}), wrap({"III", "ZZX"})));
  }
  SUBCASE("same sector, different coset is a different span") {
    CHECK_FALSE(qrf::equivalent(wrap({"III", "IIX"}), wrap({"III", "XXI"})));
    CHECK_FALSE(
        qrf::equivalent_dense(wrap({"III", "IIX"}), wrap({"III", "XXI"})));
  }
  SUBCASE("cardinality does not matter, classes do") {
    CHECK(qrf::equivalent(wrap({"III", "IIX", "ZZX"}), wrap({"III", "IIX"})));
    CHECK(qrf::equivalent_dense(wrap({"III", "IIX", "ZZX"}),
                                wrap({"III", "IIX"})));
  }
  SUBCASE("phases are irrelevant") {
    CHECK(qrf::equivalent(wrap({"III", "-iIIX"}), wrap({"III", "IIX"})));
  }
  SUBCASE("random sets agree with the dense decision") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Pauli> a, b;
      for (int i = 0; i < 3; ++i) {
        a.push_back(qrftest::random_pauli(rng, 3));
        b.push_back(qrftest::random_pauli(rng, 3));
      }
      const ErrorSet sa = qrf::make_error_set(code, a);
      const ErrorSet sb = qrf::make_error_set(code, b);
      CHECK(qrf::equivalent(sa, sb) == qrf::equivalent_dense(sa, sb));
    }
  }
}

TEST_CASE("dressing recovery inverts errors along the field directions") {
  const StabilizerCode code = three_qubit();
  const qrf::FrameFields fields =
      qrf::frame_fields_from_errors(qrf::build_maximal_error_set(code));
  std::mt19937 rng(1234);
  Vec logical(2);
  logical << cd{0.6, 0.0}, cd{0.0, 0.8};
  const Vec codeword = qrf::encode_computational(code, logical);
  const Mat rho = codeword * codeword.adjoint();

  SUBCASE("field representatives themselves") {
    for (const Pauli& e : fields.field) {
      const Mat em = qrf::dense::pauli_matrix(e);
      const Mat recovered =
          qrf::dressing_recovery(fields, em * rho * em.adjoint());
      CHECK(qrf::dense::max_abs_diff(recovered, rho) < 1e-12);
    }
  }
  SUBCASE("a dressed error with the same restriction") {
    const Mat em = qrf::dense::pauli_matrix(Pauli::from_text("ZZX"));
    const Mat recovered =
        qrf::dressing_recovery(fields, em * rho * em.adjoint());
    CHECK(qrf::dense::max_abs_diff(recovered, rho) < 1e-12);
  }
  SUBCASE("eta phases cancel") {
    qrf::FrameFields gauged = fields;
    gauged.eta = {cd{1, 0}, cd{0, 1}, cd{-1, 0},
                  cd{std::sqrt(0.5), std::sqrt(0.5)}};
    const Mat em = qrf::dense::pauli_matrix(Pauli::from_text("IXI"));
    const Mat noisy = em * rho * em.adjoint();
    CHECK(qrf::dense::max_abs_diff(qrf::dressing_recovery(gauged, noisy),
                                   qrf::dressing_recovery(fields, noisy)) <
          1e-12);
  }
  SUBCASE("a mixture over sectors is recovered term by term") {
    Mat noisy = Mat::Zero(8, 8);
    const double weights[3] = {0.5, 0.3, 0.2};
    const char* errs[3] = {"III", "XII", "IXI"};
    for (int i = 0; i < 3; ++i) {
      const Mat em = qrf::dense::pauli_matrix(Pauli::from_text(errs[i]));
      noisy += weights[i] * em * rho * em.adjoint();
    }
    CHECK(qrf::dense::max_abs_diff(qrf::dressing_recovery(fields, noisy),
                                   rho) < 1e-12);
  }
}

TEST_CASE("frame_fields_from_errors requires a maximal correctable set") {
  CHECK_THROWS_AS(qrf::frame_fields_from_errors(qrf::make_error_set(
                      three_qubit(), paulis({"III", "XII"}))),
                  qrf::Error);
}

TEST_CASE("nonlocal factorization separates code and gauge factors") {
  const StabilizerCode code = three_qubit();
  const qrf::NonlocalFactorization fact =
      qrf::build_factorization(qrf::build_maximal_error_set(code));
  REQUIRE(fact.code_dim == 2);
  REQUIRE(fact.gauge_dim == 4);
  CHECK(qrf::dense::is_unitary(fact.t));

  SUBCASE("computational kets map by majority rule") {
    // Field order [III, XII, IIX, IXI]; |bar 0> = |000>, |bar 1> = |111>.
    const struct {
      const char* ket;
      int s;
      int chi;
    } rows[] = {{"000", 0, 0}, {"100", 0, 1}, {"001", 0, 2}, {"010", 0, 3},
                {"111", 1, 0}, {"011", 1, 1}, {"110", 1, 2}, {"101", 1, 3}};
    for (const auto& row : rows) {
      const Vec in =
          qrf::dense::basis_state(3, std::stoul(row.ket, nullptr, 2));
      const Vec expect =
          qrf::dense::basis_state(3, std::uint64_t(row.s) * 4 + row.chi);
      CHECK(qrf::dense::max_abs_diff(Vec(fact.t * in), expect) < 1e-12);
    }
  }
  SUBCASE("the uniform group element is the uniform character sum") {
    REQUIRE(fact.group_basis.size() == 4);
    Vec uniform = Vec::Constant(4, cd{0.5, 0.0});
    CHECK(qrf::dense::max_abs_diff(fact.group_basis[0], uniform) < 1e-12);
    // Characters of g are orthonormal rows: <g|h> = delta.
    for (int g = 0; g < 4; ++g)
      for (int h = 0; h < 4; ++h)
        CHECK(std::abs(qrf::dense::inner(fact.group_basis[g],
                                         fact.group_basis[h]) -
                       (g == h ? cd{1, 0} : cd{0, 0})) < 1e-12);
  }
  SUBCASE("stabilizers act as the regular representation on the gauge") {
    for (std::uint64_t g = 1; g < 4; ++g) {
      const Mat moved = fact.t * qrf::dense::pauli_matrix(code.element(g)) *
                        fact.t.adjoint();
      Mat gauge;
      REQUIRE(qrf::dense::identity_times_factor(moved, 2, 4, &gauge));
      for (std::uint64_t h = 0; h < 4; ++h)
        CHECK(qrf::dense::max_abs_diff(Vec(gauge * fact.group_basis[h]),
                                       fact.group_basis[g ^ h]) < 1e-12);
    }
  }
  SUBCASE("sector projectors become gauge ket projectors") {
    for (int chi = 0; chi < 4; ++chi) {
      Mat gauge;
      REQUIRE(qrf::restriction_factors(fact, fact.field[chi], &gauge));
      Mat expect = Mat::Zero(4, 4);
      expect(chi, 0) = 1;  // |chi><0| on the gauge factor
      CHECK(qrf::dense::max_abs_diff(gauge, expect) < 1e-12);
    }
  }
  SUBCASE("a logical does not factor") {
    Mat gauge;
    CHECK_FALSE(
        qrf::restriction_factors(fact, Pauli::from_text("XXX"), &gauge));
  }
}

TEST_CASE("factorization existence tracks the kl verdict") {
  const StabilizerCode code = three_qubit();
  const qrf::NonlocalFactorization canonical =
      qrf::build_factorization(qrf::build_maximal_error_set(code));
  std::mt19937 rng(60221);
  int correctable_seen = 0, uncorrectable_seen = 0;
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<Pauli> errors{Pauli(3)};
    const int extra = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < extra; ++i)
      errors.push_back(qrftest::random_pauli(rng, 3));
    const KLReport report = qrf::kl_check(code, errors);
    if (report.correctable) {
      ++correctable_seen;
      const qrf::NonlocalFactorization fact = qrf::build_factorization(
          qrf::build_maximal_error_set(code, errors));
      for (const Pauli& e : errors) {
        Mat gauge;
        CHECK(qrf::restriction_factors(fact, e, &gauge));
      }
    } else {
      ++uncorrectable_seen;
      // No unitary can factor all of them over the canonical split; if one
      // did, the overlap matrix would collapse to C_ij Pi and the set would
      // pass the check.
      bool some_fail = false;
      for (const Pauli& e : errors) {
        Mat gauge;
        if (!qrf::restriction_factors(canonical, e, &gauge)) some_fail = true;
      }
      CHECK(some_fail);
    }
  }
  CHECK(correctable_seen > 0);
  CHECK(uncorrectable_seen > 0);
}

TEST_CASE("frame algebra spans the full matrix algebra of the gauge") {
  const ErrorSet set = qrf::build_maximal_error_set(three_qubit());
  CHECK(qrf::frame_algebra_dim(set) == 16);  // 4^(n-k)
  const ErrorSet partial =
      qrf::make_error_set(three_qubit(), paulis({"III", "XII"}));
  CHECK(qrf::frame_algebra_dim(partial) == 4);
}

TEST_CASE("error-set JSON round trip") {
  const std::string text =
      R"({"code": "3qubit", "errors": ["III", "XII", "-iYZI"]})";
  const ErrorSet set = qrf::error_set_from_json_text(text);
  CHECK(set.code.name() == "3qubit");
  REQUIRE(set.errors.size() == 3);
  CHECK(set.errors[2].to_text() == "-iYZI");
  const ErrorSet again = qrf::error_set_from_json_text(
      qrf::error_set_to_json_text(set));
  REQUIRE(again.errors.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(again.errors[i] == set.errors[i]);
  CHECK(again.report.correctable == set.report.correctable);
  CHECK_THROWS_AS(qrf::error_set_from_json_text("{\"errors\": []}"),
                  qrf::Error);
  CHECK_THROWS_AS(qrf::error_set_from_json_text("not json"), qrf::Error);
}
