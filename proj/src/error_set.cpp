/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/error_set.hpp"

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "json.hpp"
#include "qrfcode/errors.hpp"
#include "qrfcode/gf2.hpp"
#include "qrfcode/io.hpp"

namespace qrf {

namespace {

const dense::cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_error_sizes(const StabilizerCode& code,
                       const std::vector<Pauli>& errors) {
  for (const Pauli& e : errors)
    if (e.n() != code.n())
      throw_error(ErrorCode::dimension_mismatch,
                  "error '" + e.to_text() + "' does not act on " +
                      std::to_string(code.n()) + " qubits");
}

// Restrictions E_i Pi and E_j Pi are linearly dependent iff the errors sit
// in the same sector and E_i^dag E_j is a group element up to phase.
bool restrictions_dependent(const StabilizerCode& code, const Pauli& a,
                            const Pauli& b) {
  return code.in_group_up_to_phase(a.adjoint() * b);
}

gf2::BitMatrix generator_rows(const StabilizerCode& code) {
  std::vector<gf2::BitVec> rows;
  rows.reserve(code.generators().size());
  for (const Pauli& g : code.generators()) rows.push_back(g.symplectic());
  return gf2::BitMatrix::from_rows(rows);
}

void require_same_code(const StabilizerCode& a, const StabilizerCode& b) {
  bool same = a.n() == b.n() && a.m() == b.m();
  for (int i = 0; same && i < a.m(); ++i)
    same = a.generators()[i] == b.generators()[i];
  if (!same)
    throw_error(ErrorCode::invalid_argument,
                "error sets compare only over the same code");
}

void require_maximal(const ErrorSet& set) {
  if (!set.report.correctable)
    throw_error(ErrorCode::validation_error,
                "error set is not correctable: " + set.report.violation_note);
  if (set.errors.size() != set.code.group_order())
    throw_error(ErrorCode::validation_error,
                "error set is not maximal: expected one error per sector");
  std::set<std::uint64_t> sectors(set.report.sector_of.begin(),
                                  set.report.sector_of.end());
  if (sectors.size() != set.errors.size())
    throw_error(ErrorCode::validation_error,
                "error set is not maximal: sectors collide");
  bool has_identity = false;
  for (std::size_t i = 0; i < set.errors.size(); ++i)
    has_identity = has_identity || (set.errors[i].is_identity_string() &&
                                    set.errors[i].phase_exp() == 0);
  if (!has_identity)
    throw_error(ErrorCode::validation_error,
                "maximal error set must contain the identity");
}

// Sector representatives keyed by character bits.
std::vector<Pauli> field_by_sector(const ErrorSet& set) {
  std::vector<Pauli> field(set.code.group_order(), Pauli(set.code.n()));
  for (std::size_t i = 0; i < set.errors.size(); ++i)
    field[set.report.sector_of[i]] = set.errors[i];
  return field;
}

}  // namespace

KLReport kl_check(const StabilizerCode& code,
                  const std::vector<Pauli>& errors) {
  check_error_sizes(code, errors);
  const int count = static_cast<int>(errors.size());
  KLReport report;
  report.kl_matrix = dense::Mat::Zero(count, count);
  report.correctable = true;
  report.sector_of.reserve(errors.size());
  for (const Pauli& e : errors)
    report.sector_of.push_back(code.classify_sector(e).bits);

  for (int i = 0; i < count; ++i) {
    for (int j = i; j < count; ++j) {
      if (report.sector_of[i] != report.sector_of[j]) continue;  // C_ij = 0
      const Pauli product = errors[i].adjoint() * errors[j];
      const auto match = code.match_group_string(product);
      if (match.has_value()) {
        const dense::cd value = kIPow[match->phase_ratio];
        report.kl_matrix(i, j) = value;
        report.kl_matrix(j, i) = std::conj(value);
        if (i != j) report.degenerate_pairs.emplace_back(i, j);
      } else {
        // Trivial sector but not a group element: the product acts as a
        // nontrivial logical operator, so Pi E_i^dag E_j Pi is not
        // proportional to Pi.
        report.correctable = false;
        if (!report.violation.has_value()) {
          report.violation = {i, j};
          report.violation_note = "product " + product.to_text() +
                                  " of errors " + std::to_string(i + 1) +
                                  " and " + std::to_string(j + 1) +
                                  " is a logical operator";
        }
      }
    }
  }
  report.degenerate = !report.degenerate_pairs.empty();
  return report;
}

ErrorSet make_error_set(const StabilizerCode& code, std::vector<Pauli> errors) {
  KLReport report = kl_check(code, errors);
  return ErrorSet{code, std::move(errors), std::move(report)};
}

namespace {

// Recursion emitting weight-w letter strings in lexicographic order.
bool scan_fill(const StabilizerCode& code, int qubit, int remaining,
               Pauli current, std::vector<std::optional<Pauli>>& slots,
               std::uint64_t& open) {
  if (remaining == 0) {
    const std::uint64_t mask = code.classify_sector(current).bits;
    if (!slots[mask].has_value()) {
      slots[mask] = current;
      --open;
    }
    return open == 0;
  }
  if (code.n() - qubit < remaining) return false;
  if (scan_fill(code, qubit + 1, remaining, current, slots, open)) return true;
  for (char letter : {'X', 'Y', 'Z'}) {
    Pauli next = current * Pauli::single(code.n(), qubit, letter);
    if (scan_fill(code, qubit + 1, remaining - 1, std::move(next), slots,
                  open))
      return true;
  }
  return false;
}

}  // namespace

ErrorSet build_maximal_error_set(const StabilizerCode& code,
                                 const std::vector<Pauli>& seeds) {
  check_error_sizes(code, seeds);
  const KLReport seed_report = kl_check(code, seeds);
  if (!seed_report.correctable)
    throw_error(ErrorCode::validation_error,
                "seed errors are not correctable: " +
                    seed_report.violation_note);

  std::vector<std::optional<Pauli>> slots(code.group_order());
  slots[0] = Pauli(code.n());
  std::uint64_t open = code.group_order() - 1;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const std::uint64_t mask = seed_report.sector_of[i];
    if (!slots[mask].has_value()) {
      slots[mask] = seeds[i];
      --open;
      continue;
    }
    // A filled slot is fine only when the seed duplicates its occupant up
    // to a group element (their restrictions span the same line).
    if (!restrictions_dependent(code, *slots[mask], seeds[i]))
      throw_error(ErrorCode::validation_error,
                  "seeds " + slots[mask]->to_text() + " and " +
                      seeds[i].to_text() +
                      " occupy one sector with independent restrictions");
  }

  for (int weight = 1; open > 0 && weight <= code.n(); ++weight)
    scan_fill(code, 0, weight, Pauli(code.n()), slots, open);
  if (open > 0)
    throw_error(ErrorCode::validation_error,
                "sector fill failed");  // unreachable: syndromes are onto

  std::vector<Pauli> errors;
  errors.reserve(slots.size());
  for (auto& slot : slots) errors.push_back(std::move(*slot));
  return make_error_set(code, std::move(errors));
}

bool equivalent(const ErrorSet& a, const ErrorSet& b) {
  require_same_code(a.code, b.code);
  const gf2::BitMatrix rows = generator_rows(a.code);
  const auto keys = [&rows](const ErrorSet& set) {
    std::set<std::pair<std::uint64_t, gf2::BitVec>> out;
    for (std::size_t i = 0; i < set.errors.size(); ++i)
      out.emplace(set.report.sector_of[i],
                  gf2::coset_canonical(set.errors[i].symplectic(), rows));
    return out;
  };
  return keys(a) == keys(b);
}

bool equivalent_dense(const ErrorSet& a, const ErrorSet& b,
                      const dense::Caps& caps) {
  require_same_code(a.code, b.code);
  const dense::Mat projector = code_projector(a.code, caps);
  std::vector<dense::Mat> span_a, span_b, joint;
  for (const Pauli& e : a.errors)
    span_a.push_back(dense::pauli_matrix(e, caps) * projector);
  for (const Pauli& e : b.errors)
    span_b.push_back(dense::pauli_matrix(e, caps) * projector);
  joint = span_a;
  joint.insert(joint.end(), span_b.begin(), span_b.end());
  const int rank_a = dense::span_dimension(span_a);
  const int rank_b = dense::span_dimension(span_b);
  return rank_a == rank_b && dense::span_dimension(joint) == rank_a;
}

FrameFields frame_fields_from_errors(const ErrorSet& set) {
  require_maximal(set);
  FrameFields fields;
  fields.code = set.code;
  fields.field = field_by_sector(set);
  fields.eta.assign(fields.field.size(), dense::cd{1, 0});
  return fields;
}

dense::Mat dressing_recovery(const FrameFields& fields, const dense::Mat& rho,
                             const dense::Caps& caps) {
  const StabilizerCode& code = fields.code;
  dense::check_matrix_cap(code.n(), caps);
  const std::int64_t dim = std::int64_t{1} << code.n();
  if (rho.rows() != dim || rho.cols() != dim)
    throw_error(ErrorCode::dimension_mismatch, "density matrix shape");
  const dense::Mat projector = code_projector(code, caps);
  dense::Mat out = dense::Mat::Zero(dim, dim);
  for (std::uint64_t chi = 0; chi < fields.field.size(); ++chi) {
    const dense::Mat e = dense::pauli_matrix(fields.field[chi], caps);
    // R_chi = eta E Pi maps the code space into sector chi; its inverse on
    // the image is conj(eta) Pi E^dag. P_chi = E Pi E^dag.
    const dense::Mat r = fields.eta[chi] * e * projector;
    const dense::Mat p = e * projector * e.adjoint();
    out += r.adjoint() * p * rho * p * r;
  }
  return out;
}

NonlocalFactorization build_factorization(const ErrorSet& set,
                                          const dense::Caps& caps) {
  require_maximal(set);
  const StabilizerCode& code = set.code;
  dense::check_matrix_cap(code.n(), caps);

  NonlocalFactorization fact;
  fact.code = code;
  fact.field = field_by_sector(set);
  fact.code_dim = 1 << code.k();
  fact.gauge_dim = static_cast<int>(code.group_order());

  std::vector<dense::Vec> codewords;
  codewords.reserve(fact.code_dim);
  for (int s = 0; s < fact.code_dim; ++s)
    codewords.push_back(
        encode_computational(code, dense::basis_state(code.k(), s), caps));

  const std::int64_t dim = std::int64_t{1} << code.n();
  fact.t = dense::Mat::Zero(dim, dim);
  for (int s = 0; s < fact.code_dim; ++s)
    for (int chi = 0; chi < fact.gauge_dim; ++chi)
      fact.t.row(std::int64_t{s} * fact.gauge_dim + chi) =
          dense::apply_pauli(fact.field[chi], codewords[s]).adjoint();
  if (!dense::is_unitary(fact.t))
    throw_error(ErrorCode::validation_error,
                "factorization basis is not orthonormal");

  fact.group_basis.reserve(code.group_order());
  const double norm = 1.0 / std::sqrt(static_cast<double>(fact.gauge_dim));
  for (std::uint64_t g = 0; g < code.group_order(); ++g) {
    dense::Vec v(fact.gauge_dim);
    for (int chi = 0; chi < fact.gauge_dim; ++chi)
      v(chi) =
          norm * grp::chi_eval({code.m(), static_cast<std::uint64_t>(chi)},
                               {code.m(), g});
    fact.group_basis.push_back(std::move(v));
  }
  return fact;
}

bool restriction_factors(const NonlocalFactorization& f, const Pauli& e,
                         dense::Mat* gauge_op, double tol,
                         const dense::Caps& caps) {
  const dense::Mat projector = code_projector(f.code, caps);
  const dense::Mat m =
      f.t * dense::pauli_matrix(e, caps) * projector * f.t.adjoint();
  return dense::identity_times_factor(m, f.code_dim, f.gauge_dim, gauge_op,
                                      tol);
}

int frame_algebra_dim(const ErrorSet& set, const dense::Caps& caps) {
  const dense::Mat projector = code_projector(set.code, caps);
  std::vector<dense::Mat> products;
  products.reserve(set.errors.size() * set.errors.size());
  for (const Pauli& a : set.errors) {
    const dense::Mat left = dense::pauli_matrix(a, caps) * projector;
    for (const Pauli& b : set.errors)
      products.push_back(left * dense::pauli_matrix(b, caps));
  }
  return dense::span_dimension(products);
}

namespace {

ErrorSet error_set_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("code") || !doc.contains("errors"))
    throw_error(ErrorCode::parse_error,
                "error-set document needs 'code' and 'errors'");
  const StabilizerCode code = io::load_code(doc.at("code").get<std::string>());
  std::vector<Pauli> errors;
  for (const auto& entry : doc.at("errors"))
    errors.push_back(Pauli::from_text(entry.get<std::string>()));
  return make_error_set(code, std::move(errors));
}

}  // namespace

ErrorSet error_set_from_json_text(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw_error(ErrorCode::parse_error, "invalid JSON in error-set document");
  return error_set_from_json(doc);
}

ErrorSet load_error_set(const std::string& path) {
  return error_set_from_json(io::load_json_file(path));
}

std::string error_set_to_json_text(const ErrorSet& set) {
  nlohmann::json doc;
  doc["code"] = set.code.name();
  doc["errors"] = nlohmann::json::array();
  for (const Pauli& e : set.errors) doc["errors"].push_back(e.to_text());
  return doc.dump(2);
}

}  // namespace qrf
