/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_DUALITY_HPP
#define QRFCODE_DUALITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrfcode/dense.hpp"
#include "qrfcode/error_set.hpp"
#include "qrfcode/frame.hpp"
#include "qrfcode/pauli.hpp"
#include "qrfcode/stabilizer.hpp"

namespace qrf {

// Representation of the character group on the full space: ops[chi] is
// Uhat^chi with Uhat^0 = I, Uhat^chi Uhat^eta = Uhat^{chi xor eta}, each
// Hermitian and squaring to I, and the Weyl relation
// U^g Uhat^chi = chi(g) Uhat^chi U^g. pauli_ops[chi] is set whenever the
// matrix is exactly a phased Pauli string.
struct DualRep {
  StabilizerCode code;
  std::vector<dense::Mat> ops;                  // indexed by character bits
  std::vector<std::optional<Pauli>> pauli_ops;  // exact matches only
};

// Uhat^chi = sum_g chi(g) |g><g| on the frame qubits, identity on the
// system qubits.
DualRep dual_rep_from_basis(const LocalFrame& frame,
                            const dense::Caps& caps = {});

// Dual representation adapted to a complete set of frame fields:
// Uhat^chi = sum_mu (eta_{chi xor mu} conj(eta_mu)) E_{chi xor mu} Pi
// E_mu^dag, so that Uhat^chi Pi = R_chi Pi. Generally not Pauli-valued.
DualRep dual_rep_from_frame_fields(const FrameFields& fields,
                                   const dense::Caps& caps = {});

// First failed relation, if any. check is one of "unit" (Uhat^0 != I),
// "dual-group-law" (pair = two characters), "weyl" (pair = element bits,
// character bits).
struct DualityVerdict {
  bool ok = true;
  std::string check;
  std::uint64_t left = 0, right = 0;
  double deviation = 0.0;
  std::string note;
};

DualityVerdict check_duality(const StabilizerCode& code, const DualRep& rep,
                             double tol = 1e-10, const dense::Caps& caps = {});

// Gauge-fixing projectors Phat_g = (1/|G|) sum_chi chi(g) Uhat^chi and
// their unitary implementations
// Ehat_g = sqrt(|G|) sum_chi Phat_{h[g][chi]} Pi E_chi, where the base
// errors are a maximal nondegenerate correctable set indexed by sector and
// h[g] is a bijection with h[g][0] = g. Satisfies Ehat_g Pi =
// sqrt(|G|) Phat_g Pi regardless of the pairing choice.
struct GaugeFixErrorSet {
  DualRep rep;
  ErrorSet base;
  std::vector<dense::Mat> projectors;  // Phat_g, indexed by element bits
  std::vector<dense::Mat> unitaries;   // Ehat_g
  std::vector<std::vector<std::uint64_t>> pairing;  // h[g][chi]
};

GaugeFixErrorSet gauge_fix_errors(
    const DualRep& rep, const ErrorSet& base,
    const std::optional<std::vector<std::vector<std::uint64_t>>>& pairing =
        std::nullopt,
    const dense::Caps& caps = {});

// The unique g with ||Phat_g state||^2 = ||state||^2; throws when the
// state straddles dual isotypes by more than tol.
std::uint64_t dual_syndrome(const GaugeFixErrorSet& set,
                            const dense::Vec& state, double tol = 1e-8);

// O(rho) = sum_g Ehat_g^dag Phat_g rho Phat_g Ehat_g. Inverts any single
// gauge-fixing error Ehat_g on a code-space density and leaves code states
// intact.
dense::Mat dual_recovery(const GaugeFixErrorSet& set, const dense::Mat& rho);

// sum_g Phat_g rho Phat_g; equals character_twirl of the same rep.
dense::Mat dual_twirl(const GaugeFixErrorSet& set, const dense::Mat& rho);

// (1/|G^|) sum_chi Uhat^chi rho (Uhat^chi)^dag.
dense::Mat character_twirl(const DualRep& rep, const dense::Mat& rho);

// O(rho) = sum_chi E_chi^dag P_chi rho P_chi E_chi over the isotype
// projectors; restores a code-space density corrupted by any single listed
// error.
dense::Mat electric_recovery(const ErrorSet& set, const dense::Mat& rho,
                             const dense::Caps& caps = {});

// Fourier pairing between the character basis |chi> and the group basis
// |g> on the gauge factor of an error-induced factorization.
struct FourierReport {
  dense::Mat overlaps;            // <chi|g>, all chi(g)/sqrt(|G|)
  double max_fourier_dev = 0.0;   // |g> vs |G|^{-1/2} sum_chi chi(g)|chi>
  double max_unbiased_dev = 0.0;  // ||<chi|g>| - 1/sqrt(|G|)|
  double max_factor_dev = 0.0;    // P_chi Phat_g vs chi(g)/sqrt(|G|)
                                  //   |chi><g| on the gauge factor
};

FourierReport fourier_basis_relation(const NonlocalFactorization& f,
                                     const dense::Caps& caps = {});

}  // namespace qrf

#endif  // QRFCODE_DUALITY_HPP
