/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_ERRORS_HPP
#define QRFCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qrf {

// Stable error categories, mirrored one-to-one by the C API status codes.
enum class ErrorCode : int {
  ok = 0,
  dimension_mismatch = 1,
  parse_error = 2,
  validation_error = 3,
  cap_exceeded = 4,
  invalid_argument = 5,
  not_found = 6,
  precondition_failed = 7,
  io_error = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qrf

#endif  // QRFCODE_ERRORS_HPP
