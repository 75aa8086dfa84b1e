/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_IO_HPP
#define QRFCODE_IO_HPP

#include <string>

#include "json.hpp"
#include "qrfcode/stabilizer.hpp"

namespace qrf::io {

nlohmann::json load_json_file(const std::string& path);

// Code-spec document:
//   { "name": string, "n": int, "generators": [pauli-text],
//     "logical_z": [pauli-text]?, "logical_x": [pauli-text]? }
StabilizerCode code_from_json(const nlohmann::json& doc);
nlohmann::json code_to_json(const StabilizerCode& code);

// QRFCODE_CATALOG environment variable, falling back to ./data/codes.
std::string catalog_dir();

// Accepts either a JSON file path (contains '/' or ends in ".json") or a
// bundled catalog name such as "3qubit".
StabilizerCode load_code(const std::string& ref);

}  // namespace qrf::io

#endif  // QRFCODE_IO_HPP
