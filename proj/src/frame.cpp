/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/frame.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <string>
#include <utility>

#include "json.hpp"
#include "qrfcode/error_set.hpp"
#include "qrfcode/errors.hpp"
#include "qrfcode/gf2.hpp"
#include "qrfcode/io.hpp"

namespace qrf {

namespace {

const dense::cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::string one_based_list(const std::vector<int>& qubits) {
  std::string out = "{";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(qubits[i] + 1);
  }
  return out + "}";
}

// Symplectic rows of the generators restricted to the frame columns; the
// action on the frame is faithful iff this matrix has full row rank.
gf2::BitMatrix restricted_rows(const StabilizerCode& code,
                               const std::vector<int>& frame) {
  gf2::BitMatrix m(code.m(), 2 * static_cast<int>(frame.size()));
  for (int i = 0; i < code.m(); ++i) {
    const Pauli& gen = code.generators()[i];
    for (std::size_t j = 0; j < frame.size(); ++j) {
      m.set(i, static_cast<int>(j), gen.x_bit(frame[j]) ? 1 : 0);
      m.set(i, static_cast<int>(j + frame.size()),
            gen.z_bit(frame[j]) ? 1 : 0);
    }
  }
  return m;
}

// Some product of generators restricts to the identity; name one.
std::string unfaithful_element(const StabilizerCode& code,
                               const gf2::BitMatrix& restricted) {
  gf2::BitMatrix transposed(restricted.cols, restricted.rows);
  for (int r = 0; r < restricted.rows; ++r)
    for (int c = 0; c < restricted.cols; ++c)
      transposed.set(c, r, restricted.at(r, c));
  const auto combos = gf2::kernel(transposed);
  std::uint64_t bits = 0;
  if (!combos.empty())
    for (std::size_t i = 0; i < combos[0].size(); ++i)
      if (combos[0][i]) bits |= std::uint64_t{1} << i;
  return code.element(bits).letters();
}

void check_frame_qubits(const StabilizerCode& code,
                        const std::vector<int>& frame) {
  if (static_cast<int>(frame.size()) != code.m())
    throw_error(ErrorCode::invalid_argument,
                "frame needs exactly " + std::to_string(code.m()) +
                    " qubits, got " + std::to_string(frame.size()));
  std::set<int> seen;
  for (int q : frame) {
    if (q < 0 || q >= code.n())
      throw_error(ErrorCode::invalid_argument,
                  "frame qubit " + std::to_string(q + 1) + " out of range");
    if (!seen.insert(q).second)
      throw_error(ErrorCode::invalid_argument,
                  "frame qubit " + std::to_string(q + 1) + " repeated");
  }
}

void require_faithful(const StabilizerCode& code,
                      const std::vector<int>& frame) {
  const gf2::BitMatrix restricted = restricted_rows(code, frame);
  if (gf2::rank(restricted) == code.m()) return;
  throw_error(ErrorCode::validation_error,
              "frame " + one_based_list(frame) +
                  " is unfaithful: group element " +
                  unfaithful_element(code, restricted) +
                  " restricts to the identity on it");
}

}  // namespace

std::vector<int> complement_qubits(int n, const std::vector<int>& subset) {
  std::vector<bool> in(n, false);
  for (int q : subset) in[q] = true;
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (!in[q]) out.push_back(q);
  return out;
}

std::vector<int> select_frame_qubits(
    const StabilizerCode& code,
    const std::optional<std::vector<int>>& override_drop) {
  const int n = code.n();
  const int k = code.k();
  if (override_drop.has_value()) {
    const std::vector<int>& drop = *override_drop;
    if (static_cast<int>(drop.size()) != k)
      throw_error(ErrorCode::invalid_argument,
                  "dropped subset needs exactly " + std::to_string(k) +
                      " qubits");
    require_faithful(code, complement_qubits(n, drop));
    return drop;
  }
  // k-subsets in lexicographic order.
  std::vector<int> drop(k);
  for (int i = 0; i < k; ++i) drop[i] = i;
  while (true) {
    const gf2::BitMatrix restricted =
        restricted_rows(code, complement_qubits(n, drop));
    if (gf2::rank(restricted) == code.m()) return drop;
    int i = k - 1;
    while (i >= 0 && drop[i] == n - k + i) --i;
    if (i < 0) break;
    ++drop[i];
    for (int j = i + 1; j < k; ++j) drop[j] = drop[j - 1] + 1;
  }
  throw_error(ErrorCode::validation_error,
              "no faithful frame subset exists");  // unreachable for valid codes
}

namespace {

void check_fragment_table(const std::vector<Pauli>& fragments) {
  if (fragments.empty() ||
      (fragments.size() & (fragments.size() - 1)) != 0)
    throw_error(ErrorCode::invalid_argument,
                "fragment table size must be a power of two");
  const int m = fragments[0].n();
  if (!fragments[0].is_identity_string())
    throw_error(ErrorCode::invalid_argument,
                "fragments[0] must be the identity");
  std::set<std::string> letters;
  for (const Pauli& f : fragments) {
    if (f.n() != m)
      throw_error(ErrorCode::invalid_argument,
                  "fragments must share one qubit count");
    if (!letters.insert(f.letters()).second)
      throw_error(ErrorCode::validation_error,
                  "fragment table is not faithful: " + f.letters() +
                      " repeats");
  }
  // Products of generators against everything pin the whole table.
  for (std::size_t gen = 1; gen < fragments.size(); gen <<= 1)
    for (std::size_t b = 0; b < fragments.size(); ++b)
      if ((fragments[gen] * fragments[b]).letters() !=
          fragments[gen ^ b].letters())
        throw_error(ErrorCode::validation_error,
                    "fragment table is not closed under multiplication");
}

int table_rank(const std::vector<Pauli>& fragments) {
  int m = 0;
  while ((std::size_t{1} << m) < fragments.size()) ++m;
  return m;
}

// Strategy (a): a product eigenstate works iff every nontrivial fragment
// has, somewhere on its support, a letter different from the chosen one.
// Depth-first over qubits; a fragment is tested once its support is fully
// assigned, which prunes dead branches early.
bool product_dfs(const std::vector<std::vector<const Pauli*>>& by_last_support,
                 const std::string& digits, int m, int depth,
                 std::string& letters) {
  if (depth == m) return true;
  for (char c : digits) {
    letters.push_back(c);
    bool ok = true;
    for (const Pauli* f : by_last_support[depth]) {
      bool hit = false;
      for (int a = 0; a <= depth && !hit; ++a) {
        const char fl = f->letter(a);
        hit = fl != 'I' && fl != letters[a];
      }
      if (!hit) {
        ok = false;
        break;
      }
    }
    if (ok && product_dfs(by_last_support, digits, m, depth + 1, letters))
      return true;
    letters.pop_back();
  }
  return false;
}

dense::Vec product_eigenstate(const std::string& letters) {
  const int m = static_cast<int>(letters.size());
  dense::Vec one(2);
  dense::Vec seed = dense::Vec::Ones(1);
  const double s = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < m; ++a) {
    switch (letters[a]) {
      case 'X': one << s, s; break;
      case 'Y': one << s, dense::cd{0, s}; break;
      default: one << 1, 0; break;  // Z
    }
    dense::Vec next(seed.size() * 2);
    for (std::int64_t i = 0; i < seed.size(); ++i) {
      next(2 * i) = seed(i) * one(0);
      next(2 * i + 1) = seed(i) * one(1);
    }
    seed = std::move(next);
  }
  return seed;
}

// Strategy (b): a maximal commuting subgroup whose nontrivial strings all
// avoid the fragment strings stabilizes a valid seed. Grown greedily in
// (weight, lexicographic) candidate order with backtracking.
bool subgroup_dfs(const std::vector<Pauli>& candidates, std::size_t start,
                  const std::set<std::string>& banned, int m,
                  std::vector<Pauli>& chosen, std::vector<Pauli>& subgroup,
                  std::set<std::string>& members) {
  if (static_cast<int>(chosen.size()) == m) return true;
  for (std::size_t idx = start; idx < candidates.size(); ++idx) {
    const Pauli& q = candidates[idx];
    if (members.count(q.letters())) continue;
    bool ok = true;
    for (const Pauli& g : chosen)
      if (!commutes(q, g)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<Pauli> fresh;
    fresh.reserve(subgroup.size());
    for (const Pauli& s : subgroup) {
      Pauli p = q * s;
      if (banned.count(p.letters())) {
        ok = false;
        break;
      }
      fresh.push_back(std::move(p));
    }
    if (!ok) continue;
    chosen.push_back(q);
    for (const Pauli& p : fresh) members.insert(p.letters());
    const std::size_t old_size = subgroup.size();
    subgroup.insert(subgroup.end(), fresh.begin(), fresh.end());
    if (subgroup_dfs(candidates, idx + 1, banned, m, chosen, subgroup,
                     members))
      return true;
    subgroup.resize(old_size);
    for (const Pauli& p : fresh) members.erase(p.letters());
    chosen.pop_back();
  }
  return false;
}

}  // namespace

SeedResult find_seed_for_fragments(const std::vector<Pauli>& fragments,
                                   SeedBasis basis) {
  check_fragment_table(fragments);
  const int m = table_rank(fragments);
  dense::check_state_cap(m);

  std::vector<std::vector<const Pauli*>> by_last_support(m);
  for (std::size_t g = 1; g < fragments.size(); ++g)
    by_last_support[fragments[g].support().back()].push_back(&fragments[g]);

  SeedResult result;
  const std::string digits = basis == SeedBasis::x ? "XYZ" : "YXZ";
  std::string letters;
  if (product_dfs(by_last_support, digits, m, 0, letters)) {
    result.product_form = true;
    result.product_letters = letters;
    result.seed = product_eigenstate(letters);
  } else {
    if (m > 10)
      throw_error(ErrorCode::cap_exceeded,
                  "subgroup seed search is capped at 10 frame qubits");
    std::set<std::string> banned;
    for (std::size_t g = 1; g < fragments.size(); ++g)
      banned.insert(fragments[g].letters());
    std::vector<Pauli> candidates;
    candidates.reserve((std::size_t{1} << (2 * m)) - 1);
    for (std::uint64_t idx = 1; idx < (std::uint64_t{1} << (2 * m)); ++idx) {
      std::string text(m, 'I');
      for (int a = 0; a < m; ++a) text[a] = "IXYZ"[(idx >> (2 * a)) & 3];
      candidates.push_back(Pauli::from_text(text));
    }
    std::sort(candidates.begin(), candidates.end(), weight_lex_less);
    std::vector<Pauli> chosen;
    std::vector<Pauli> subgroup{Pauli(m)};
    std::set<std::string> members{Pauli(m).letters()};
    if (!subgroup_dfs(candidates, 0, banned, m, chosen, subgroup, members))
      throw_error(ErrorCode::validation_error,
                  "seed search exhausted: no commuting subgroup avoids the " +
                      std::to_string(fragments.size() - 1) +
                      " fragment strings");
    result.ansatz_generators = chosen;
    // The uniform projector over the signed subgroup has rank one; its
    // +1 eigenvector is the seed.
    const StabilizerCode ansatz = build_code(m, chosen);
    result.seed = encode_computational(ansatz, dense::Vec::Ones(1));
  }
  validate_seed_for_fragments(fragments, result.seed);
  return result;
}

void validate_seed_for_fragments(const std::vector<Pauli>& fragments,
                                 const dense::Vec& seed, double tol) {
  const int m = table_rank(fragments);
  if (seed.size() != (std::int64_t{1} << m))
    throw_error(ErrorCode::dimension_mismatch,
                "seed length does not match the fragment qubit count");
  if (std::abs(seed.norm() - 1.0) > tol)
    throw_error(ErrorCode::validation_error, "seed is not normalized");
  for (std::size_t g = 1; g < fragments.size(); ++g) {
    const dense::cd overlap =
        dense::inner(seed, dense::apply_pauli(fragments[g], seed));
    if (std::abs(overlap) > tol)
      throw_error(ErrorCode::validation_error,
                  "seed has overlap " + std::to_string(std::abs(overlap)) +
                      " with its image under " + fragments[g].letters());
  }
}

LocalFrame LocalFrame::assemble(const StabilizerCode& code,
                                const std::vector<int>& frame_qubits) {
  check_frame_qubits(code, frame_qubits);
  require_faithful(code, frame_qubits);

  LocalFrame frame;
  frame.code_ = code;
  frame.frame_ = frame_qubits;
  frame.system_ = complement_qubits(code.n(), frame_qubits);
  const auto& table = frame.code_.group_table();
  frame.frag_frame_.reserve(table.size());
  frame.frag_system_.reserve(table.size());
  for (const Pauli& element : table) {
    frame.frag_frame_.push_back(element.subword(frame.frame_));
    frame.frag_system_.push_back(
        element.subword(frame.system_).with_phase_exp(element.phase_exp()));
  }
  return frame;
}

void LocalFrame::finish_with_seed(dense::Vec seed, double tol) {
  validate_seed_for_fragments(frag_frame_, seed, tol);
  seed_ = std::move(seed);
  orientation_.reserve(frag_frame_.size());
  for (const Pauli& frag : frag_frame_)
    orientation_.push_back(dense::apply_pauli(frag, seed_));
}

LocalFrame LocalFrame::build(const StabilizerCode& code,
                             const std::vector<int>& frame_qubits,
                             SeedBasis basis) {
  LocalFrame frame = assemble(code, frame_qubits);
  frame.seed_result_ = find_seed_for_fragments(frame.frag_frame_, basis);
  frame.finish_with_seed(frame.seed_result_.seed, 1e-10);
  return frame;
}

LocalFrame LocalFrame::build_with_seed(const StabilizerCode& code,
                                       const std::vector<int>& frame_qubits,
                                       dense::Vec seed, double tol) {
  LocalFrame frame = assemble(code, frame_qubits);
  frame.seed_result_.seed = seed;
  frame.finish_with_seed(std::move(seed), tol);
  return frame;
}

const Pauli& LocalFrame::fragment_frame(std::uint64_t g) const {
  if (g >= frag_frame_.size())
    throw_error(ErrorCode::invalid_argument, "group element out of range");
  return frag_frame_[g];
}

const Pauli& LocalFrame::fragment_system(std::uint64_t g) const {
  if (g >= frag_system_.size())
    throw_error(ErrorCode::invalid_argument, "group element out of range");
  return frag_system_[g];
}

const dense::Vec& LocalFrame::orientation_state(std::uint64_t g) const {
  if (g >= orientation_.size())
    throw_error(ErrorCode::invalid_argument, "group element out of range");
  return orientation_[g];
}

dense::cd LocalFrame::cocycle(std::uint64_t g, std::uint64_t h) const {
  // U_R^{gh} carries prefix +1, so the prefix of the product is the ratio.
  return kIPow[(fragment_frame(g) * fragment_frame(h)).phase_exp()];
}

namespace {

std::vector<int> joined(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

dense::Vec LocalFrame::pw_reduce(const dense::Vec& state, std::uint64_t g,
                                 const dense::Caps& caps,
                                 double overlap_floor) const {
  dense::check_state_cap(code_.n(), caps);
  const dense::Vec projected = apply_group_average(code_, state, caps);
  if (projected.norm() < overlap_floor)
    throw_error(ErrorCode::precondition_failed,
                "state has code-space overlap below the floor");
  const dense::Vec virt =
      dense::to_qubit_order(projected, joined(frame_, system_));
  const std::int64_t sys_dim = std::int64_t{1} << system_.size();
  const dense::Vec& basis = orientation_state(g);
  dense::Vec out = dense::Vec::Zero(sys_dim);
  for (std::int64_t r = 0; r < basis.size(); ++r) {
    const dense::cd weight = std::conj(basis(r));
    if (weight == dense::cd{0, 0}) continue;
    for (std::int64_t t = 0; t < sys_dim; ++t)
      out(t) += weight * virt(r * sys_dim + t);
  }
  out *= std::sqrt(static_cast<double>(group_order()));
  return out;
}

dense::Vec LocalFrame::pw_lift(const dense::Vec& system_state, std::uint64_t g,
                               const dense::Caps& caps) const {
  dense::check_state_cap(code_.n(), caps);
  const std::int64_t sys_dim = std::int64_t{1} << system_.size();
  if (system_state.size() != sys_dim)
    throw_error(ErrorCode::dimension_mismatch,
                "system state length mismatch");
  const dense::Vec& basis = orientation_state(g);
  dense::Vec virt(basis.size() * sys_dim);
  for (std::int64_t r = 0; r < basis.size(); ++r)
    for (std::int64_t t = 0; t < sys_dim; ++t)
      virt(r * sys_dim + t) = basis(r) * system_state(t);
  const dense::Vec kin =
      dense::from_qubit_order(virt, joined(frame_, system_));
  return std::sqrt(static_cast<double>(group_order())) *
         apply_group_average(code_, kin, caps);
}

dense::Mat LocalFrame::disentangler(const dense::Caps& caps) const {
  dense::check_matrix_cap(code_.n(), caps);
  const std::int64_t dim = std::int64_t{1} << code_.n();
  dense::Mat t = dense::Mat::Zero(dim, dim);
  for (std::uint64_t g = 0; g < group_order(); ++g) {
    const dense::Vec& basis = orientation_state(g);
    const dense::Mat projector = basis * basis.adjoint();
    const dense::Mat system_part =
        dense::pauli_matrix(frag_system_[g], caps).adjoint();
    t += dense::embed_factors(code_.n(), projector, frame_, system_part,
                              system_, caps);
  }
  return t;
}

namespace {

dense::Vec apply_disentangler_impl(const LocalFrame& frame,
                                   const dense::Vec& state, bool adjoint,
                                   const dense::Caps& caps) {
  dense::check_state_cap(frame.code().n(), caps);
  const std::vector<int> order =
      joined(frame.frame_qubits(), frame.system_qubits());
  const dense::Vec virt = dense::to_qubit_order(state, order);
  const std::int64_t sys_dim = std::int64_t{1}
                               << frame.system_qubits().size();
  dense::Vec out = dense::Vec::Zero(virt.size());
  for (std::uint64_t g = 0; g < frame.group_order(); ++g) {
    const dense::Vec& basis = frame.orientation_state(g);
    dense::Vec component = dense::Vec::Zero(sys_dim);
    for (std::int64_t r = 0; r < basis.size(); ++r) {
      const dense::cd weight = std::conj(basis(r));
      if (weight == dense::cd{0, 0}) continue;
      for (std::int64_t t = 0; t < sys_dim; ++t)
        component(t) += weight * virt(r * sys_dim + t);
    }
    const Pauli& system_op = frame.fragment_system(g);
    component = dense::apply_pauli(adjoint ? system_op : system_op.adjoint(),
                                   component);
    for (std::int64_t r = 0; r < basis.size(); ++r) {
      if (basis(r) == dense::cd{0, 0}) continue;
      for (std::int64_t t = 0; t < sys_dim; ++t)
        out(r * sys_dim + t) += basis(r) * component(t);
    }
  }
  return dense::from_qubit_order(out, order);
}

}  // namespace

dense::Vec LocalFrame::apply_disentangler(const dense::Vec& state,
                                          const dense::Caps& caps) const {
  return apply_disentangler_impl(*this, state, false, caps);
}

dense::Vec LocalFrame::apply_disentangler_adjoint(
    const dense::Vec& state, const dense::Caps& caps) const {
  return apply_disentangler_impl(*this, state, true, caps);
}

dense::Mat LocalFrame::relational_observable(const dense::Mat& f_system,
                                             std::uint64_t g,
                                             const dense::Caps& caps) const {
  dense::check_matrix_cap(code_.n(), caps);
  const std::int64_t sys_dim = std::int64_t{1} << system_.size();
  if (f_system.rows() != sys_dim || f_system.cols() != sys_dim)
    throw_error(ErrorCode::dimension_mismatch,
                "system observable shape mismatch");
  const dense::Vec& basis = orientation_state(g);
  const dense::Mat embedded = dense::embed_factors(
      code_.n(), basis * basis.adjoint(), frame_, f_system, system_, caps);
  const dense::Mat projector = code_projector(code_, caps);
  return static_cast<double>(group_order()) * projector * embedded *
         projector;
}

std::vector<LocalFrame::Recovered> LocalFrame::recover_via_disentangler(
    const std::vector<Pauli>& errors, const dense::Caps& caps) const {
  const KLReport report = kl_check(code_, errors);
  if (!report.correctable) {
    const auto [i, j] = *report.violation;
    throw_error(ErrorCode::validation_error,
                "errors are not correctable: pair (" + std::to_string(i + 1) +
                    "," + std::to_string(j + 1) + "): " +
                    report.violation_note);
  }
  const int logical_dim = 1 << code_.k();
  std::vector<dense::Vec> codewords, reduced;
  for (int s = 0; s < logical_dim; ++s) {
    codewords.push_back(
        encode_computational(code_, dense::basis_state(code_.k(), s), caps));
    reduced.push_back(pw_reduce(codewords.back(), 0, caps));
  }

  const std::int64_t frame_dim = std::int64_t{1} << frame_.size();
  const std::int64_t sys_dim = std::int64_t{1} << system_.size();
  const std::vector<int> order = joined(frame_, system_);
  std::vector<Recovered> out;
  out.reserve(errors.size());
  for (const Pauli& error : errors) {
    dense::Mat stacked(frame_dim, std::int64_t{logical_dim} * sys_dim);
    for (int s = 0; s < logical_dim; ++s) {
      const dense::Vec image = dense::to_qubit_order(
          apply_disentangler(dense::apply_pauli(error, codewords[s]), caps),
          order);
      for (std::int64_t r = 0; r < frame_dim; ++r)
        for (std::int64_t t = 0; t < sys_dim; ++t)
          stacked(r, std::int64_t{s} * sys_dim + t) = image(r * sys_dim + t);
    }
    Eigen::JacobiSVD<dense::Mat> svd(
        stacked, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().size() > 1 &&
        svd.singularValues()(1) > 1e-8 * svd.singularValues()(0))
      throw_error(ErrorCode::validation_error,
                  "disentangled image of " + error.to_text() +
                      " does not factor over the frame");
    dense::Vec pointer = svd.matrixU().col(0);
    std::int64_t pivot = 0;
    while (pivot + 1 < pointer.size() && std::abs(pointer(pivot)) < 1e-6)
      ++pivot;
    pointer *= std::conj(pointer(pivot)) / std::abs(pointer(pivot));

    dense::Mat logical = dense::Mat::Zero(sys_dim, sys_dim);
    for (int s = 0; s < logical_dim; ++s) {
      const dense::Vec image_s =
          (pointer.adjoint() *
           stacked.middleCols(std::int64_t{s} * sys_dim, sys_dim))
              .transpose();
      logical += image_s * reduced[s].adjoint();
    }
    out.push_back(Recovered{error, std::move(pointer), std::move(logical)});
  }
  return out;
}

namespace {

void require_same_code(const StabilizerCode& a, const StabilizerCode& b) {
  bool same = a.n() == b.n() && a.m() == b.m();
  for (int i = 0; same && i < a.m(); ++i)
    same = a.generators()[i] == b.generators()[i];
  if (!same)
    throw_error(ErrorCode::invalid_argument,
                "frames must share one code for a transformation");
}

}  // namespace

dense::Vec qrf_transform(const LocalFrame& from, std::uint64_t g_from,
                         const LocalFrame& to, std::uint64_t g_to,
                         const dense::Vec& reduced, const dense::Caps& caps) {
  require_same_code(from.code(), to.code());
  return to.pw_reduce(from.pw_lift(reduced, g_from, caps), g_to, caps);
}

namespace {

LocalFrame frame_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("code"))
    throw_error(ErrorCode::parse_error, "frame document needs 'code'");
  const StabilizerCode code = io::load_code(doc.at("code").get<std::string>());
  std::vector<int> frame;
  if (doc.contains("frame_qubits")) {
    for (const auto& q : doc.at("frame_qubits"))
      frame.push_back(q.get<int>() - 1);
  } else {
    frame = complement_qubits(code.n(), select_frame_qubits(code));
  }
  const std::string basis = doc.value("basis", "X");
  if (basis == "X") return LocalFrame::build(code, frame, SeedBasis::x);
  if (basis == "Y") return LocalFrame::build(code, frame, SeedBasis::y);
  if (basis != "custom")
    throw_error(ErrorCode::parse_error,
                "basis must be 'X', 'Y' or 'custom'");
  if (!doc.contains("seed"))
    throw_error(ErrorCode::parse_error, "custom basis needs a 'seed' list");
  const auto& amplitudes = doc.at("seed");
  dense::Vec seed(amplitudes.size());
  for (std::size_t i = 0; i < amplitudes.size(); ++i)
    seed(i) = dense::cd{amplitudes[i].at(0).get<double>(),
                        amplitudes[i].at(1).get<double>()};
  return LocalFrame::build_with_seed(code, frame, std::move(seed));
}

}  // namespace

LocalFrame frame_from_json_text(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw_error(ErrorCode::parse_error, "invalid JSON in frame document");
  return frame_from_json(doc);
}

LocalFrame load_frame(const std::string& path) {
  return frame_from_json(io::load_json_file(path));
}

std::string frame_to_json_text(const LocalFrame& frame) {
  nlohmann::json doc;
  doc["code"] = frame.code().name();
  doc["frame_qubits"] = nlohmann::json::array();
  for (int q : frame.frame_qubits()) doc["frame_qubits"].push_back(q + 1);
  const SeedResult& seed = frame.seed_result();
  const auto uniform = [&seed](char c) {
    return seed.product_form &&
           seed.product_letters ==
               std::string(seed.product_letters.size(), c);
  };
  if (uniform('X')) {
    doc["basis"] = "X";
  } else if (uniform('Y')) {
    doc["basis"] = "Y";
  } else {
    doc["basis"] = "custom";
    doc["seed"] = nlohmann::json::array();
    for (std::int64_t i = 0; i < frame.seed().size(); ++i)
      doc["seed"].push_back(
          {frame.seed()(i).real(), frame.seed()(i).imag()});
  }
  return doc.dump(2);
}

}  // namespace qrf
