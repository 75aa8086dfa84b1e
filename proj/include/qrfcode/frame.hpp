/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_FRAME_HPP
#define QRFCODE_FRAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrfcode/dense.hpp"
#include "qrfcode/pauli.hpp"
#include "qrfcode/stabilizer.hpp"

namespace qrf {

// Seed preference: which single-qubit letter the product-eigenstate search
// tries first on every frame qubit.
enum class SeedBasis { x, y };

// Outcome of the seed search over a faithful fragment table.
struct SeedResult {
  dense::Vec seed;
  bool product_form = false;         // strategy (a) succeeded
  std::string product_letters;       // per frame qubit when product_form
  std::vector<Pauli> ansatz_generators;  // commuting subgroup otherwise
};

// fragments[g] for g in 0 .. 2^m-1 must form a faithful projective
// representation on m qubits: fragments[0] = I, letters pairwise distinct,
// letters(fragments[a] * fragments[b]) = letters(fragments[a^b]).
SeedResult find_seed_for_fragments(const std::vector<Pauli>& fragments,
                                   SeedBasis basis = SeedBasis::x);

// Unit norm and <seed| fragments[g] |seed> = 0 for every g != 0; throws
// naming the first violating fragment.
void validate_seed_for_fragments(const std::vector<Pauli>& fragments,
                                 const dense::Vec& seed, double tol = 1e-10);

// Lexicographically smallest k-subset of qubits (0-based) whose removal
// leaves the group acting faithfully on the complement; the complement is
// the frame. A supplied override is validated and returned as-is; failure
// names a group element whose truncation is the identity.
std::vector<int> select_frame_qubits(
    const StabilizerCode& code,
    const std::optional<std::vector<int>>& override_drop = std::nullopt);

std::vector<int> complement_qubits(int n, const std::vector<int>& subset);

// A local quantum reference frame: n-k physical qubits carrying the
// stabilizer group faithfully, an orthonormal orientation basis generated
// from a seed state, and the split U^g = U_R^g (x) U_S^g. U_R^g carries
// prefix +1; U_S^g absorbs the sign of U^g, so the tensor is exact.
class LocalFrame {
 public:
  static LocalFrame build(const StabilizerCode& code,
                          const std::vector<int>& frame_qubits,
                          SeedBasis basis = SeedBasis::x);
  static LocalFrame build_with_seed(const StabilizerCode& code,
                                    const std::vector<int>& frame_qubits,
                                    dense::Vec seed, double tol = 1e-10);

  const StabilizerCode& code() const noexcept { return code_; }
  const std::vector<int>& frame_qubits() const noexcept { return frame_; }
  const std::vector<int>& system_qubits() const noexcept { return system_; }
  int frame_size() const noexcept { return static_cast<int>(frame_.size()); }
  std::uint64_t group_order() const noexcept { return code_.group_order(); }

  const Pauli& fragment_frame(std::uint64_t g) const;
  const Pauli& fragment_system(std::uint64_t g) const;
  const std::vector<Pauli>& frame_fragments() const noexcept {
    return frag_frame_;
  }

  const dense::Vec& seed() const noexcept { return seed_; }
  const SeedResult& seed_result() const noexcept { return seed_result_; }
  // |g> = U_R^g |e>, orthonormal across the group.
  const dense::Vec& orientation_state(std::uint64_t g) const;

  // c(g,h) with U_R^g U_R^h = c(g,h) U_R^{gh}; a power of i.
  dense::cd cocycle(std::uint64_t g, std::uint64_t h) const;

  // sqrt(|G|) (<g| (x) I) Pi |state|>. The input needs code-space overlap
  // of at least `overlap_floor` in norm.
  dense::Vec pw_reduce(const dense::Vec& state, std::uint64_t g,
                       const dense::Caps& caps = {},
                       double overlap_floor = 1e-8) const;
  // Adjoint map sqrt(|G|) Pi (|g> (x) state).
  dense::Vec pw_lift(const dense::Vec& system_state, std::uint64_t g,
                     const dense::Caps& caps = {}) const;

  // T = sum_g |g><g| (x) (U_S^g)^dag, unitary on the full space.
  dense::Mat disentangler(const dense::Caps& caps = {}) const;
  dense::Vec apply_disentangler(const dense::Vec& state,
                                const dense::Caps& caps = {}) const;
  dense::Vec apply_disentangler_adjoint(const dense::Vec& state,
                                        const dense::Caps& caps = {}) const;

  // O = |G| Pi (|g><g| (x) f_system) Pi; commutes with every U^h and
  // reduces back to f_system under pw_reduce.
  dense::Mat relational_observable(const dense::Mat& f_system, std::uint64_t g,
                                   const dense::Caps& caps = {}) const;

  // For a correctable error list: T E |bar psi> = |w(E)> (x) L(E) |psi(e)>.
  // Pointer states are pairwise orthonormal, logicals unitary on the system
  // factor. The first nonzero pointer amplitude is made real positive.
  struct Recovered {
    Pauli error;
    dense::Vec pointer;   // w(E), on the frame factor
    dense::Mat logical;   // L(E), on the system factor
  };
  std::vector<Recovered> recover_via_disentangler(
      const std::vector<Pauli>& errors, const dense::Caps& caps = {}) const;

 private:
  LocalFrame() = default;
  static LocalFrame assemble(const StabilizerCode& code,
                             const std::vector<int>& frame_qubits);
  void finish_with_seed(dense::Vec seed, double tol);

  StabilizerCode code_;
  std::vector<int> frame_, system_;
  std::vector<Pauli> frag_frame_, frag_system_;
  dense::Vec seed_;
  SeedResult seed_result_;
  std::vector<dense::Vec> orientation_;
};

// Relational Schroedinger change of frame: lift out of `from` at
// orientation g_from, reduce into `to` at orientation g_to. Both frames
// must sit over the same code.
dense::Vec qrf_transform(const LocalFrame& from, std::uint64_t g_from,
                         const LocalFrame& to, std::uint64_t g_to,
                         const dense::Vec& reduced,
                         const dense::Caps& caps = {});

// Frame-spec JSON:
//   { "code": name-or-path, "frame_qubits": [1-based ints]?,
//     "basis": "X"|"Y"|"custom", "seed": [[re, im], ...]? }
// Omitted frame_qubits selects the default frame; basis "custom" requires
// the amplitude list.
LocalFrame frame_from_json_text(const std::string& text);
LocalFrame load_frame(const std::string& path);
std::string frame_to_json_text(const LocalFrame& frame);

}  // namespace qrf

#endif  // QRFCODE_FRAME_HPP
