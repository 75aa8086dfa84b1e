/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/io.hpp"

#include <cstdlib>
#include <fstream>

#include "qrfcode/errors.hpp"

namespace qrf::io {

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorCode::io_error, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw_error(ErrorCode::parse_error, path + ": " + e.what());
  }
  return doc;
}

namespace {

std::vector<Pauli> parse_pauli_list(const nlohmann::json& arr,
                                    const std::string& what) {
  if (!arr.is_array())
    throw_error(ErrorCode::parse_error, what + " must be an array");
  std::vector<Pauli> out;
  for (const auto& item : arr) {
    if (!item.is_string())
      throw_error(ErrorCode::parse_error, what + " entries must be strings");
    out.push_back(Pauli::from_text(item.get<std::string>()));
  }
  return out;
}

}  // namespace

StabilizerCode code_from_json(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw_error(ErrorCode::parse_error, "code spec must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw_error(ErrorCode::parse_error, "code spec needs integer field 'n'");
  if (!doc.contains("generators"))
    throw_error(ErrorCode::parse_error, "code spec needs 'generators'");
  const int n = doc["n"].get<int>();
  const std::string name = doc.value("name", std::string{});
  const auto generators = parse_pauli_list(doc["generators"], "generators");
  std::vector<Pauli> lz, lx;
  if (doc.contains("logical_z")) lz = parse_pauli_list(doc["logical_z"], "logical_z");
  if (doc.contains("logical_x")) lx = parse_pauli_list(doc["logical_x"], "logical_x");
  return build_code(n, generators, name, lz, lx);
}

nlohmann::json code_to_json(const StabilizerCode& code) {
  nlohmann::json doc;
  doc["name"] = code.name();
  doc["n"] = code.n();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : code.generators()) gens.push_back(g.to_text());
  doc["generators"] = gens;
  nlohmann::json lz = nlohmann::json::array(), lx = nlohmann::json::array();
  for (const auto& p : code.logical_z()) lz.push_back(p.to_text());
  for (const auto& p : code.logical_x()) lx.push_back(p.to_text());
  doc["logical_z"] = lz;
  doc["logical_x"] = lx;
  return doc;
}

std::string catalog_dir() {
  if (const char* env = std::getenv("QRFCODE_CATALOG"); env && *env)
    return env;
  return "data/codes";
}

StabilizerCode load_code(const std::string& ref) {
  std::string path = ref;
  const bool is_path = ref.find('/') != std::string::npos ||
                       (ref.size() > 5 && ref.rfind(".json") == ref.size() - 5);
  if (!is_path) path = catalog_dir() + "/" + ref + ".json";
  return code_from_json(load_json_file(path));
}

}  // namespace qrf::io
