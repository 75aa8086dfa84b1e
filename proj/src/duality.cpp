/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qrfcode/errors.hpp"
#include "qrfcode/group.hpp"

namespace qrf {

namespace {

double chi_sign(int m, std::uint64_t chi, std::uint64_t g) {
  return static_cast<double>(grp::chi_eval({m, chi}, {m, g}));
}

void check_rep_shape(const StabilizerCode& code, const DualRep& rep) {
  const std::int64_t dim = std::int64_t{1} << code.n();
  if (rep.ops.size() != code.group_order())
    throw_error(ErrorCode::invalid_argument,
                "dual representation needs one operator per character");
  for (const dense::Mat& op : rep.ops)
    if (op.rows() != dim || op.cols() != dim)
      throw_error(ErrorCode::dimension_mismatch,
                  "dual operator dimension does not match the code");
}

}  // namespace

DualRep dual_rep_from_basis(const LocalFrame& frame, const dense::Caps& caps) {
  const StabilizerCode& code = frame.code();
  const int n = code.n();
  const int m = code.m();
  const std::uint64_t order = code.group_order();
  dense::check_matrix_cap(n, caps);
  const std::int64_t frame_dim = std::int64_t{1} << m;
  const std::int64_t sys_dim = std::int64_t{1} << (n - m);
  const dense::Mat sys_id = dense::Mat::Identity(sys_dim, sys_dim);

  DualRep rep;
  rep.code = code;
  rep.ops.reserve(order);
  rep.pauli_ops.reserve(order);
  for (std::uint64_t chi = 0; chi < order; ++chi) {
    dense::Mat d = dense::Mat::Zero(frame_dim, frame_dim);
    for (std::uint64_t g = 0; g < order; ++g) {
      const dense::Vec& ket = frame.orientation_state(g);
      d += chi_sign(m, chi, g) * (ket * ket.adjoint());
    }
    dense::Mat op = dense::embed_factors(n, d, frame.frame_qubits(), sys_id,
                                         frame.system_qubits(), caps);
    rep.pauli_ops.push_back(dense::match_pauli(op, 1e-10, caps));
    rep.ops.push_back(std::move(op));
  }
  return rep;
}

DualRep dual_rep_from_frame_fields(const FrameFields& fields,
                                   const dense::Caps& caps) {
  const StabilizerCode& code = fields.code;
  const std::uint64_t order = code.group_order();
  if (fields.field.size() != order || fields.eta.size() != order)
    throw_error(ErrorCode::precondition_failed,
                "frame fields must cover every character");
  if (!fields.field[0].is_identity_string() ||
      fields.field[0].phase_exp() != 0)
    throw_error(ErrorCode::precondition_failed,
                "the trivial-character field must be the identity");

  const dense::Mat pi = code_projector(code, caps);
  std::vector<dense::Mat> restriction(order);
  for (std::uint64_t chi = 0; chi < order; ++chi)
    restriction[chi] =
        fields.eta[chi] * dense::pauli_matrix(fields.field[chi], caps) * pi;

  DualRep rep;
  rep.code = code;
  rep.ops.reserve(order);
  rep.pauli_ops.reserve(order);
  for (std::uint64_t chi = 0; chi < order; ++chi) {
    dense::Mat op = dense::Mat::Zero(pi.rows(), pi.cols());
    for (std::uint64_t mu = 0; mu < order; ++mu)
      op += restriction[chi ^ mu] * restriction[mu].adjoint();
    rep.pauli_ops.push_back(dense::match_pauli(op, 1e-10, caps));
    rep.ops.push_back(std::move(op));
  }
  return rep;
}

DualityVerdict check_duality(const StabilizerCode& code, const DualRep& rep,
                             double tol, const dense::Caps& caps) {
  check_rep_shape(code, rep);
  const int m = code.m();
  const std::uint64_t order = code.group_order();
  const std::int64_t dim = std::int64_t{1} << code.n();

  DualityVerdict verdict;
  const double unit_dev =
      dense::max_abs_diff(rep.ops[0], dense::Mat::Identity(dim, dim));
  if (unit_dev > tol) {
    verdict.ok = false;
    verdict.check = "unit";
    verdict.deviation = unit_dev;
    verdict.note = "Uhat^0 differs from the identity";
    return verdict;
  }
  for (std::uint64_t g = 0; g < order; ++g) {
    const dense::Mat u = dense::pauli_matrix(code.element(g), caps);
    for (std::uint64_t chi = 0; chi < order; ++chi) {
      const dense::Mat lhs = u * rep.ops[chi];
      const dense::Mat rhs = chi_sign(m, chi, g) * (rep.ops[chi] * u);
      const double dev = dense::max_abs_diff(lhs, rhs);
      if (dev > tol) {
        verdict.ok = false;
        verdict.check = "weyl";
        verdict.left = g;
        verdict.right = chi;
        verdict.deviation = dev;
        verdict.note = "Weyl relation fails for element " +
                       code.element(g).letters() + " and character " +
                       std::to_string(chi);
        return verdict;
      }
    }
  }
  for (std::uint64_t chi = 0; chi < order; ++chi)
    for (std::uint64_t eta = 0; eta < order; ++eta) {
      const double dev =
          dense::max_abs_diff(rep.ops[chi] * rep.ops[eta], rep.ops[chi ^ eta]);
      if (dev > tol) {
        verdict.ok = false;
        verdict.check = "dual-group-law";
        verdict.left = chi;
        verdict.right = eta;
        verdict.deviation = dev;
        verdict.note = "Uhat^" + std::to_string(chi) + " Uhat^" +
                       std::to_string(eta) + " is not Uhat^" +
                       std::to_string(chi ^ eta);
        return verdict;
      }
    }
  return verdict;
}

GaugeFixErrorSet gauge_fix_errors(
    const DualRep& rep, const ErrorSet& base,
    const std::optional<std::vector<std::vector<std::uint64_t>>>& pairing,
    const dense::Caps& caps) {
  const StabilizerCode& code = rep.code;
  const std::uint64_t order = code.group_order();
  check_rep_shape(code, rep);
  if (base.code.n() != code.n() || base.code.m() != code.m())
    throw_error(ErrorCode::precondition_failed,
                "base errors belong to a different code");
  for (int i = 0; i < code.m(); ++i)
    if (!(base.code.generators()[i] == code.generators()[i]))
      throw_error(ErrorCode::precondition_failed,
                  "base errors belong to a different code");
  if (!base.report.correctable)
    throw_error(ErrorCode::precondition_failed,
                "base errors must be correctable");
  if (base.errors.size() != order)
    throw_error(ErrorCode::precondition_failed,
                "base set must be maximal: one error per character");
  if (base.report.degenerate)
    throw_error(ErrorCode::precondition_failed,
                "base set must be nondegenerate");
  for (std::size_t i = 0; i < base.errors.size(); ++i)
    if (base.report.sector_of[i] != i)
      throw_error(ErrorCode::precondition_failed,
                  "base errors must be indexed by sector");
  if (!base.errors[0].is_identity_string() || base.errors[0].phase_exp() != 0)
    throw_error(ErrorCode::precondition_failed,
                "the trivial-sector base error must be the identity");

  std::vector<std::vector<std::uint64_t>> h;
  if (pairing.has_value()) {
    h = *pairing;
    if (h.size() != order)
      throw_error(ErrorCode::invalid_argument,
                  "pairing needs one row per group element");
    for (std::uint64_t g = 0; g < order; ++g) {
      if (h[g].size() != order)
        throw_error(ErrorCode::invalid_argument,
                    "pairing rows need one entry per character");
      if (h[g][0] != g)
        throw_error(ErrorCode::invalid_argument,
                    "pairing must send the trivial character to g itself");
      std::vector<bool> seen(order, false);
      for (std::uint64_t chi = 0; chi < order; ++chi) {
        if (h[g][chi] >= order || seen[h[g][chi]])
          throw_error(ErrorCode::invalid_argument,
                      "pairing row " + std::to_string(g) +
                          " is not a bijection");
        seen[h[g][chi]] = true;
      }
    }
  } else {
    h.assign(order, std::vector<std::uint64_t>(order, 0));
    for (std::uint64_t g = 0; g < order; ++g)
      for (std::uint64_t chi = 0; chi < order; ++chi) h[g][chi] = g ^ chi;
  }

  const int m = code.m();
  const dense::Mat pi = code_projector(code, caps);
  GaugeFixErrorSet set;
  set.rep = rep;
  set.base = base;
  set.pairing = std::move(h);
  set.projectors.reserve(order);
  for (std::uint64_t g = 0; g < order; ++g) {
    dense::Mat p = dense::Mat::Zero(pi.rows(), pi.cols());
    for (std::uint64_t chi = 0; chi < order; ++chi)
      p += chi_sign(m, chi, g) * rep.ops[chi];
    set.projectors.push_back(p / static_cast<double>(order));
  }
  std::vector<dense::Mat> pi_base(order);
  for (std::uint64_t chi = 0; chi < order; ++chi)
    pi_base[chi] = pi * dense::pauli_matrix(base.errors[chi], caps);
  const double root = std::sqrt(static_cast<double>(order));
  set.unitaries.reserve(order);
  for (std::uint64_t g = 0; g < order; ++g) {
    dense::Mat e = dense::Mat::Zero(pi.rows(), pi.cols());
    for (std::uint64_t chi = 0; chi < order; ++chi)
      e += set.projectors[set.pairing[g][chi]] * pi_base[chi];
    e *= root;
    if (!dense::is_unitary(e, 1e-8))
      throw_error(ErrorCode::validation_error,
                  "gauge fixing error for element " +
                      code.element(g).letters() + " is not unitary");
    set.unitaries.push_back(std::move(e));
  }
  return set;
}

std::uint64_t dual_syndrome(const GaugeFixErrorSet& set,
                            const dense::Vec& state, double tol) {
  if (set.projectors.empty())
    throw_error(ErrorCode::invalid_argument, "empty gauge fixing set");
  if (state.size() != set.projectors[0].rows())
    throw_error(ErrorCode::dimension_mismatch,
                "state dimension does not match the code");
  const double total = state.squaredNorm();
  if (total <= 0.0)
    throw_error(ErrorCode::invalid_argument, "zero state has no syndrome");
  std::uint64_t best = 0;
  double best_weight = -1.0;
  for (std::uint64_t g = 0; g < set.projectors.size(); ++g) {
    const double w = (set.projectors[g] * state).squaredNorm();
    if (w > best_weight) {
      best_weight = w;
      best = g;
    }
  }
  if (best_weight < (1.0 - tol) * total)
    throw_error(ErrorCode::validation_error,
                "ambiguous dual syndrome: largest isotype weight is " +
                    std::to_string(best_weight / total));
  return best;
}

dense::Mat dual_recovery(const GaugeFixErrorSet& set, const dense::Mat& rho) {
  if (set.projectors.empty())
    throw_error(ErrorCode::invalid_argument, "empty gauge fixing set");
  if (rho.rows() != set.projectors[0].rows() || rho.cols() != rho.rows())
    throw_error(ErrorCode::dimension_mismatch,
                "density dimension does not match the code");
  dense::Mat out = dense::Mat::Zero(rho.rows(), rho.cols());
  for (std::size_t g = 0; g < set.projectors.size(); ++g) {
    const dense::Mat fixed = set.projectors[g] * rho * set.projectors[g];
    out += set.unitaries[g].adjoint() * fixed * set.unitaries[g];
  }
  return out;
}

dense::Mat dual_twirl(const GaugeFixErrorSet& set, const dense::Mat& rho) {
  if (set.projectors.empty())
    throw_error(ErrorCode::invalid_argument, "empty gauge fixing set");
  if (rho.rows() != set.projectors[0].rows() || rho.cols() != rho.rows())
    throw_error(ErrorCode::dimension_mismatch,
                "density dimension does not match the code");
  dense::Mat out = dense::Mat::Zero(rho.rows(), rho.cols());
  for (const dense::Mat& p : set.projectors) out += p * rho * p;
  return out;
}

dense::Mat character_twirl(const DualRep& rep, const dense::Mat& rho) {
  check_rep_shape(rep.code, rep);
  if (rho.rows() != rep.ops[0].rows() || rho.cols() != rho.rows())
    throw_error(ErrorCode::dimension_mismatch,
                "density dimension does not match the code");
  dense::Mat out = dense::Mat::Zero(rho.rows(), rho.cols());
  for (const dense::Mat& u : rep.ops) out += u * rho * u.adjoint();
  return out / static_cast<double>(rep.ops.size());
}

dense::Mat electric_recovery(const ErrorSet& set, const dense::Mat& rho,
                             const dense::Caps& caps) {
  const StabilizerCode& code = set.code;
  const std::uint64_t order = code.group_order();
  if (!set.report.correctable)
    throw_error(ErrorCode::precondition_failed, "errors must be correctable");
  if (set.errors.size() != order)
    throw_error(ErrorCode::precondition_failed,
                "recovery needs a maximal set: one error per character");
  for (std::size_t i = 0; i < set.errors.size(); ++i)
    if (set.report.sector_of[i] != i)
      throw_error(ErrorCode::precondition_failed,
                  "errors must be indexed by sector");
  const std::int64_t dim = std::int64_t{1} << code.n();
  if (rho.rows() != dim || rho.cols() != dim)
    throw_error(ErrorCode::dimension_mismatch,
                "density dimension does not match the code");
  dense::Mat out = dense::Mat::Zero(dim, dim);
  for (std::uint64_t chi = 0; chi < order; ++chi) {
    const dense::Mat p = isotype_projector(code, {code.m(), chi}, caps);
    const dense::Mat e = dense::pauli_matrix(set.errors[chi], caps);
    const dense::Mat fixed = p * rho * p;
    out += e.adjoint() * fixed * e;
  }
  return out;
}

FourierReport fourier_basis_relation(const NonlocalFactorization& f,
                                     const dense::Caps& caps) {
  const StabilizerCode& code = f.code;
  const int m = code.m();
  const std::uint64_t order = code.group_order();
  const std::int64_t gauge_dim = f.gauge_dim;
  const double root = std::sqrt(static_cast<double>(order));

  FourierReport report;
  report.overlaps = dense::Mat(gauge_dim, gauge_dim);
  for (std::uint64_t g = 0; g < order; ++g) {
    dense::Vec fourier(gauge_dim);
    for (std::uint64_t chi = 0; chi < order; ++chi)
      fourier(static_cast<std::int64_t>(chi)) = chi_sign(m, chi, g) / root;
    report.max_fourier_dev = std::max(
        report.max_fourier_dev, dense::max_abs_diff(fourier, f.group_basis[g]));
    for (std::uint64_t chi = 0; chi < order; ++chi) {
      const dense::cd overlap = f.group_basis[g](static_cast<std::int64_t>(chi));
      report.overlaps(static_cast<std::int64_t>(chi),
                      static_cast<std::int64_t>(g)) = overlap;
      report.max_unbiased_dev = std::max(
          report.max_unbiased_dev, std::abs(std::abs(overlap) - 1.0 / root));
    }
  }

  const dense::Mat id_code =
      dense::Mat::Identity(f.code_dim, f.code_dim);
  std::vector<dense::Mat> gauge_proj(order);
  for (std::uint64_t g = 0; g < order; ++g) {
    const dense::Mat outer = f.group_basis[g] * f.group_basis[g].adjoint();
    gauge_proj[g] = f.t.adjoint() * dense::kron(id_code, outer) * f.t;
  }
  for (std::uint64_t chi = 0; chi < order; ++chi) {
    const dense::Mat p_chi = isotype_projector(code, {m, chi}, caps);
    dense::Vec e_chi = dense::Vec::Zero(gauge_dim);
    e_chi(static_cast<std::int64_t>(chi)) = 1.0;
    for (std::uint64_t g = 0; g < order; ++g) {
      const dense::Mat ketbra = e_chi * f.group_basis[g].adjoint();
      const dense::Mat target = (chi_sign(m, chi, g) / root) *
                                (f.t.adjoint() * dense::kron(id_code, ketbra) *
                                 f.t);
      report.max_factor_dev = std::max(
          report.max_factor_dev,
          dense::max_abs_diff(p_chi * gauge_proj[g], target));
    }
  }
  return report;
}

}  // namespace qrf
