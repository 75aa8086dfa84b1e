/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_PAULI_HPP
#define QRFCODE_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qrf {

// Phase-tracked n-qubit Pauli string in symplectic binary form.
//
// Internally the operator is stored as i^k * prod_q X_q^{x_q} Z_q^{z_q},
// with k tracked modulo 4. The user-facing phase exponent ("phase_exp")
// refers instead to the letters form i^s * (tensor of I/X/Y/Z letters);
// the two exponents differ by the Y-count because Y = i XZ. All text I/O
// uses the letters form. Qubit indices are 0-based in this API and 1-based
// in all text formats (the leftmost letter is qubit 1).
//
// Values are immutable in spirit: every operation returns a new Pauli.
class Pauli {
 public:
  Pauli() = default;
  // Identity on n qubits.
  explicit Pauli(int n);

  // Parses an optional sign prefix ("", "+", "-", "+i", "-i") followed by
  // letters from {I,X,Y,Z}. Throws Error(parse_error) with the byte offset
  // of the first bad character.
  static Pauli from_text(const std::string& text);

  // Single-letter string: letter at `qubit`, identity elsewhere.
  static Pauli single(int n, int qubit, char letter);

  int n() const noexcept { return n_; }

  bool x_bit(int qubit) const;
  bool z_bit(int qubit) const;
  // 'I', 'X', 'Y' or 'Z'.
  char letter(int qubit) const;
  // Letters only, qubit 1 first; doubles as the lexicographic sort key.
  std::string letters() const;
  // Canonical text: sign prefix ("" for +1, "-", "+i", "-i") + letters.
  std::string to_text() const;

  // Exponent s of the letters-form prefix i^s, in {0,1,2,3}.
  int phase_exp() const noexcept;
  // Returns a copy with the letters-form prefix set to i^s.
  Pauli with_phase_exp(int s) const;
  // Exponent k of the internal XZ form, in {0,1,2,3}.
  int xz_phase() const noexcept { return phase_; }

  std::complex<double> phase() const noexcept;

  // Number of non-identity letters.
  int weight() const noexcept;
  // 0-based indices of non-identity letters, ascending.
  std::vector<int> support() const;
  bool is_identity_string() const noexcept;

  // Length-2n GF(2) vector (x part, then z part).
  std::vector<std::uint8_t> symplectic() const;

  // Exact product, phases included. Throws on qubit-count mismatch.
  friend Pauli multiply(const Pauli& a, const Pauli& b);
  friend Pauli operator*(const Pauli& a, const Pauli& b) {
    return multiply(a, b);
  }

  Pauli adjoint() const;
  bool is_hermitian() const noexcept;

  // True iff the symplectic form a.x*b.z + a.z*b.x vanishes mod 2.
  friend bool commutes(const Pauli& a, const Pauli& b);

  // Letters at the 0-based indices in `drop` are replaced by I and the
  // phase is reset to +1 unconditionally.
  Pauli truncate(const std::vector<int>& drop) const;

  // Sub-string on the given 0-based qubits, in the given order, with the
  // letters-form prefix reset to +1.
  Pauli subword(const std::vector<int>& qubits) const;

  // Tensor product: `a` on qubits 1..a.n, `b` on the following b.n.
  friend Pauli tensor(const Pauli& a, const Pauli& b);

  // Equal qubit count, letters and phase.
  friend bool operator==(const Pauli& a, const Pauli& b);
  friend bool operator!=(const Pauli& a, const Pauli& b) { return !(a == b); }

  // (weight, letters) ordering used by every deterministic search.
  friend bool weight_lex_less(const Pauli& a, const Pauli& b);

 private:
  void check_qubit(int qubit) const;
  static int parity_and(const std::vector<std::uint64_t>& a,
                        const std::vector<std::uint64_t>& b) noexcept;
  int y_count() const noexcept;

  int n_ = 0;
  int phase_ = 0;  // exponent k of the XZ form, mod 4
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

Pauli multiply(const Pauli& a, const Pauli& b);
bool commutes(const Pauli& a, const Pauli& b);
Pauli tensor(const Pauli& a, const Pauli& b);
bool weight_lex_less(const Pauli& a, const Pauli& b);

}  // namespace qrf

#endif  // QRFCODE_PAULI_HPP
