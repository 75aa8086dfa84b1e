/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/io.hpp"

#include "doctest.h"
#include "qrfcode/errors.hpp"

TEST_CASE("catalog codes load through the environment override") {
  const auto three = qrf::io::load_code("3qubit");
  CHECK(three.name() == "3qubit");
  CHECK(three.n() == 3);
  CHECK(three.logical_z()[0].to_text() == "ZII");
  CHECK(three.logical_x()[0].to_text() == "XXX");

  const auto five = qrf::io::load_code("5qubit");
  CHECK(five.n() == 5);
  CHECK(five.m() == 4);
  CHECK(five.logical_z()[0].to_text() == "ZZZZZ");
}

TEST_CASE("code specs round trip") {
  const auto code = qrf::io::load_code("3qubit");
  const auto doc = qrf::io::code_to_json(code);
  const auto again = qrf::io::code_from_json(doc);
  CHECK(again.n() == code.n());
  CHECK(again.generators().size() == code.generators().size());
  for (std::size_t i = 0; i < code.generators().size(); ++i)
    CHECK(again.generators()[i] == code.generators()[i]);
  CHECK(again.logical_z()[0] == code.logical_z()[0]);
}

TEST_CASE("malformed code specs are rejected") {
  using nlohmann::json;
  CHECK_THROWS_AS(qrf::io::code_from_json(json::array()), qrf::Error);
  CHECK_THROWS_AS(qrf::io::code_from_json(json{{"n", 3}}), qrf::Error);
  CHECK_THROWS_AS(
      qrf::io::code_from_json(json{{"n", 3}, {"generators", {"ZQI"}}}),
      qrf::Error);
  CHECK_THROWS_AS(
      qrf::io::code_from_json(json{{"n", 2}, {"generators", {"XI", "ZI"}}}),
      qrf::Error);
  CHECK_THROWS_AS(qrf::io::load_code("no-such-code"), qrf::Error);
}
