/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#include "qrfcode.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qrfcode/dense.hpp"
#include "qrfcode/duality.hpp"
#include "qrfcode/error_set.hpp"
#include "qrfcode/errors.hpp"
#include "qrfcode/frame.hpp"
#include "qrfcode/gf2.hpp"
#include "qrfcode/group.hpp"
#include "qrfcode/io.hpp"
#include "qrfcode/pauli.hpp"
#include "qrfcode/stabilizer.hpp"
#include "qrfcode/surface.hpp"

struct qrfcode_code {
  qrf::StabilizerCode code;
};

namespace {

using nlohmann::json;
using qrf::Pauli;
using qrf::StabilizerCode;
using qrf::dense::Mat;
using qrf::dense::Vec;

constexpr const char* kVersion = "1.0.0";
constexpr unsigned kReportSeed = 20260815u;

thread_local std::string t_last_error;

qrfcode_status to_status(qrf::ErrorCode code) {
  return static_cast<qrfcode_status>(static_cast<int>(code));
}

char* dup_text(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
qrfcode_status guarded(Fn&& fn) {
  t_last_error.clear();
  try {
    fn();
    return QRFCODE_OK;
  } catch (const qrf::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return QRFCODE_INTERNAL_ERROR;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) qrf::throw_error(qrf::ErrorCode::invalid_argument, what);
}

qrf::dense::Caps caps_for(int max_dense_n) {
  qrf::dense::Caps caps;
  if (max_dense_n > 0) {
    caps.full_matrix_n = std::min(max_dense_n, 8);
    caps.state_action_n = max_dense_n;
  }
  return caps;
}

double effective_tol(double tol) { return tol > 0 ? tol : 1e-10; }

// Collects per-check records and renders the report document. A record
// fails when its deviation exceeds the tolerance or its check throws
// anything other than a cap violation; cap violations become
// "skipped(cap)" and do not fail the report.
class ReportBuilder {
 public:
  ReportBuilder(std::string kind, std::string code_name, double tol,
                bool timings = false)
      : kind_(std::move(kind)),
        code_name_(std::move(code_name)),
        tol_(effective_tol(tol)),
        timings_(timings) {}

  struct Outcome {
    double deviation = 0.0;
    json extra = json::object();
  };

  template <typename Fn>
  void run(const std::string& name, const std::string& anchor, Fn&& fn) {
    json rec;
    rec["name"] = name;
    rec["anchor"] = anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome out = fn();
      rec["deviation"] = out.deviation;
      rec["verdict"] = out.deviation <= tol_ ? "pass" : "fail";
      for (auto& [key, value] : out.extra.items()) rec[key] = value;
    } catch (const qrf::Error& e) {
      rec["verdict"] = e.code() == qrf::ErrorCode::cap_exceeded
                           ? "skipped(cap)"
                           : "fail";
      rec["note"] = e.what();
    }
    if (timings_) {
      const auto stop = std::chrono::steady_clock::now();
      rec["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(stop - start).count();
    }
    if (rec["verdict"] == "fail") failed_ = true;
    records_.push_back(std::move(rec));
  }

  void skip(const std::string& name, const std::string& anchor,
            const std::string& note) {
    json rec;
    rec["name"] = name;
    rec["anchor"] = anchor;
    rec["verdict"] = "skipped(cap)";
    rec["note"] = note;
    records_.push_back(std::move(rec));
  }

  void payload(const std::string& key, json value) {
    payload_[key] = std::move(value);
  }

  void set_code_name(const std::string& name) { code_name_ = name; }
  bool pass() const { return !failed_; }
  double tol() const { return tol_; }

  std::string text() const {
    json doc;
    doc["schema_version"] = 1;
    doc["tool"] = std::string("qrfcode ") + kVersion;
    doc["report"] = kind_;
    doc["code"] = code_name_;
    doc["tolerance"] = tol_;
    doc["pass"] = !failed_;
    doc["records"] = records_;
    for (const auto& [key, value] : payload_.items()) doc[key] = value;
    return doc.dump(2) + "\n";
  }

 private:
  std::string kind_, code_name_;
  double tol_;
  bool timings_;
  bool failed_ = false;
  json records_ = json::array();
  json payload_ = json::object();
};

qrfcode_status finish(const ReportBuilder& rb, char** report_out,
                      int* pass_out) {
  *report_out = dup_text(rb.text());
  if (*report_out == nullptr)
    qrf::throw_error(qrf::ErrorCode::io_error, "out of memory");
  *pass_out = rb.pass() ? 1 : 0;
  return QRFCODE_OK;
}

json pauli_texts(const std::vector<Pauli>& list) {
  json out = json::array();
  for (const Pauli& p : list) out.push_back(p.to_text());
  return out;
}

json complex_entry(const qrf::dense::cd& z) {
  return json::array({z.real(), z.imag()});
}

json matrix_entries(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(complex_entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// The error-set document names its own code; it must agree with the handle
// so that sector labels mean the same thing in both.
qrf::ErrorSet parse_error_set(const StabilizerCode& code,
                              const char* errors_json) {
  qrf::ErrorSet set = qrf::error_set_from_json_text(errors_json);
  bool same = set.code.n() == code.n() && set.code.m() == code.m();
  if (same)
    for (int i = 0; i < code.m(); ++i)
      same = same && set.code.generators()[i] == code.generators()[i];
  if (!same)
    qrf::throw_error(qrf::ErrorCode::validation_error,
                     "error set code does not match the loaded code");
  return qrf::make_error_set(code, set.errors);
}

double gram_deviation(const std::vector<Vec>& states) {
  const std::size_t count = states.size();
  double dev = 0.0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      const qrf::dense::cd want = i == j ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(qrf::dense::inner(states[i], states[j]) -
                                   want));
    }
  return dev;
}

// Shared frame battery used by frame-local reports and verify-all.
void add_frame_records(ReportBuilder& rb, const qrf::LocalFrame& frame,
                       const qrf::dense::Caps& caps) {
  const StabilizerCode& code = frame.code();
  const std::uint64_t order = code.group_order();

  rb.run("orientation states orthonormal", "frame.orthonormal",
         [&]() -> ReportBuilder::Outcome {
           std::vector<Vec> states;
           states.reserve(order);
           for (std::uint64_t g = 0; g < order; ++g)
             states.push_back(frame.orientation_state(g));
           return {gram_deviation(states), {}};
         });

  if (code.m() > 6) {
    rb.skip("cocycle identity", "frame.cocycle",
            "cocycle triple scan capped at 2^6 group elements");
  } else {
    rb.run("cocycle identity", "frame.cocycle",
           [&]() -> ReportBuilder::Outcome {
             double dev = 0.0;
             for (std::uint64_t g = 0; g < order; ++g)
               for (std::uint64_t h = 0; h < order; ++h) {
                 dev = std::max(dev,
                                std::abs(std::abs(frame.cocycle(g, h)) - 1.0));
                 for (std::uint64_t l = 0; l < order; ++l) {
                   const qrf::dense::cd lhs =
                       frame.cocycle(g, h) * frame.cocycle(g ^ h, l);
                   const qrf::dense::cd rhs =
                       frame.cocycle(g, h ^ l) * frame.cocycle(h, l);
                   dev = std::max(dev, std::abs(lhs - rhs));
                 }
               }
             return {dev, {}};
           });
  }

  rb.run("disentangler unitary", "frame.disentangler",
         [&]() -> ReportBuilder::Outcome {
           const Mat t = frame.disentangler(caps);
           const Mat gram = t.adjoint() * t;
           const Mat id = Mat::Identity(t.rows(), t.cols());
           return {qrf::dense::max_abs_diff(gram, id), {}};
         });

  rb.run("disentangler round trip", "frame.roundtrip",
         [&]() -> ReportBuilder::Outcome {
           qrf::dense::check_state_cap(code.n(), caps);
           std::mt19937 rng(kReportSeed);
           const Vec state = qrf::dense::random_state(rng, code.n());
           const Vec back = frame.apply_disentangler_adjoint(
               frame.apply_disentangler(state, caps), caps);
           return {qrf::dense::max_abs_diff(back, state), {}};
         });
}

double gauge_fix_deviation(const qrf::GaugeFixErrorSet& gf,
                           const qrf::dense::Caps& caps) {
  const StabilizerCode& code = gf.rep.code;
  const std::uint64_t order = code.group_order();
  const double root = std::sqrt(static_cast<double>(order));
  const Mat pi = qrf::code_projector(code, caps);
  const Mat id = Mat::Identity(pi.rows(), pi.cols());
  double dev = 0.0;
  for (std::uint64_t g = 0; g < order; ++g) {
    const Mat& ehat = gf.unitaries[g];
    dev = std::max(dev,
                   qrf::dense::max_abs_diff(Mat(ehat.adjoint() * ehat), id));
    dev = std::max(dev, qrf::dense::max_abs_diff(Mat(ehat * pi),
                                                 Mat(root * gf.projectors[g] *
                                                     pi)));
  }
  // Gauge-fixed Knill-Laflamme condition; the pair scan is quadratic in
  // the group order, so it is capped.
  if (order <= 32) {
    for (std::uint64_t g = 0; g < order; ++g)
      for (std::uint64_t h = 0; h < order; ++h) {
        const Mat prod = pi * gf.projectors[g] * gf.projectors[h] * pi;
        const Mat want = g == h ? Mat(pi / static_cast<double>(order))
                                : Mat(Mat::Zero(pi.rows(), pi.cols()));
        dev = std::max(dev, qrf::dense::max_abs_diff(prod, want));
      }
  }
  return dev;
}

json duality_extras(const qrf::DualityVerdict& verdict) {
  json extra = json::object();
  if (!verdict.ok) {
    extra["failed_check"] = verdict.check;
    extra["left"] = verdict.left;
    extra["right"] = verdict.right;
    if (!verdict.note.empty()) extra["note"] = verdict.note;
  }
  return extra;
}

double verdict_deviation(const qrf::DualityVerdict& verdict) {
  if (verdict.ok) return verdict.deviation;
  // Structural failures can carry a zero numeric deviation; force the
  // record red.
  return std::max(verdict.deviation, 1.0);
}

}  // namespace

extern "C" {

const char* qrfcode_version(void) { return kVersion; }

const char* qrfcode_last_error(void) { return t_last_error.c_str(); }

void qrfcode_string_free(char* text) { std::free(text); }

qrfcode_status qrfcode_code_load(const char* ref, qrfcode_code** out) {
  return guarded([&] {
    require(ref != nullptr && out != nullptr,
            "qrfcode_code_load needs a code reference and an output handle");
    *out = new qrfcode_code{qrf::io::load_code(ref)};
  });
}

qrfcode_status qrfcode_code_from_json(const char* json_text,
                                      qrfcode_code** out) {
  return guarded([&] {
    require(json_text != nullptr && out != nullptr,
            "qrfcode_code_from_json needs JSON text and an output handle");
    json doc;
    try {
      doc = json::parse(json_text);
    } catch (const json::exception& e) {
      qrf::throw_error(qrf::ErrorCode::parse_error, e.what());
    }
    *out = new qrfcode_code{qrf::io::code_from_json(doc)};
  });
}

void qrfcode_code_free(qrfcode_code* code) { delete code; }

int qrfcode_code_qubits(const qrfcode_code* code) {
  return code == nullptr ? 0 : code->code.n();
}

int qrfcode_code_logical_qubits(const qrfcode_code* code) {
  return code == nullptr ? 0 : code->code.k();
}

int qrfcode_code_generator_count(const qrfcode_code* code) {
  return code == nullptr ? 0 : code->code.m();
}

uint64_t qrfcode_code_group_order(const qrfcode_code* code) {
  return code == nullptr ? 0 : code->code.group_order();
}

qrfcode_status qrfcode_code_summary(const qrfcode_code* code,
                                    char** json_out) {
  return guarded([&] {
    require(code != nullptr && json_out != nullptr,
            "qrfcode_code_summary needs a code handle and an output pointer");
    json doc = qrf::io::code_to_json(code->code);
    doc["k"] = code->code.k();
    doc["m"] = code->code.m();
    doc["group_order"] = code->code.group_order();
    *json_out = dup_text(doc.dump(2) + "\n");
    if (*json_out == nullptr)
      qrf::throw_error(qrf::ErrorCode::io_error, "out of memory");
  });
}

qrfcode_status qrfcode_kl_check(const qrfcode_code* code,
                                const char* errors_json, char** report_out,
                                int* pass_out) {
  return guarded([&] {
    require(code != nullptr && errors_json != nullptr &&
                report_out != nullptr && pass_out != nullptr,
            "qrfcode_kl_check needs a code, an error-set document, and "
            "output pointers");
    const qrf::ErrorSet set = parse_error_set(code->code, errors_json);
    const qrf::KLReport& report = set.report;

    ReportBuilder rb("kl-check", code->code.name(), 0.0);
    rb.run("knill-laflamme correctability", "kl.correctable",
           [&]() -> ReportBuilder::Outcome {
             ReportBuilder::Outcome out;
             out.deviation = report.correctable ? 0.0 : 1.0;
             if (report.violation) {
               out.extra["violating_pair"] = json::array(
                   {report.violation->first, report.violation->second});
               out.extra["note"] = report.violation_note;
             }
             return out;
           });
    rb.run("degeneracy scan", "kl.degeneracy",
           [&]() -> ReportBuilder::Outcome {
             ReportBuilder::Outcome out;
             out.extra["degenerate"] = report.degenerate;
             json pairs = json::array();
             for (const auto& [i, j] : report.degenerate_pairs)
               pairs.push_back(json::array({i, j}));
             out.extra["degenerate_pairs"] = std::move(pairs);
             return out;
           });

    rb.payload("errors", pauli_texts(set.errors));
    rb.payload("sector_of", json(report.sector_of));
    rb.payload("kl_matrix", matrix_entries(report.kl_matrix));
    finish(rb, report_out, pass_out);
  });
}

qrfcode_status qrfcode_frame_local(const qrfcode_code* code,
                                   const int* frame_qubits,
                                   int frame_qubit_count, const char* basis,
                                   double tol, int max_dense_n,
                                   char** report_out, int* pass_out) {
  return guarded([&] {
    require(code != nullptr && report_out != nullptr && pass_out != nullptr,
            "qrfcode_frame_local needs a code and output pointers");
    require(frame_qubit_count >= 0 &&
                (frame_qubit_count == 0 || frame_qubits != nullptr),
            "frame qubit list and count disagree");
    qrf::SeedBasis seed_basis = qrf::SeedBasis::x;
    if (basis != nullptr && basis[0] != '\0') {
      const std::string text = basis;
      if (text == "X" || text == "x")
        seed_basis = qrf::SeedBasis::x;
      else if (text == "Y" || text == "y")
        seed_basis = qrf::SeedBasis::y;
      else
        qrf::throw_error(qrf::ErrorCode::invalid_argument,
                         "seed basis must be X or Y, got " + text);
    }
    const qrf::dense::Caps caps = caps_for(max_dense_n);

    ReportBuilder rb("frame-local", code->code.name(), tol);
    if (code->code.m() > 10) {
      rb.skip("frame construction", "frame.build",
              "orientation-state table capped at 2^10 group elements");
      finish(rb, report_out, pass_out);
      return;
    }

    std::optional<qrf::LocalFrame> frame;
    rb.run("frame construction", "frame.build",
           [&]() -> ReportBuilder::Outcome {
             std::vector<int> qubits;
             if (frame_qubit_count > 0) {
               qubits.assign(frame_qubits, frame_qubits + frame_qubit_count);
               qubits = qrf::select_frame_qubits(code->code, qubits);
             } else {
               qubits = qrf::select_frame_qubits(code->code);
             }
             frame = qrf::LocalFrame::build(code->code, qubits, seed_basis);
             ReportBuilder::Outcome out;
             json chosen = json::array();
             for (int q : frame->frame_qubits()) chosen.push_back(q + 1);
             out.extra["frame_qubits"] = std::move(chosen);
             out.extra["seed_product_form"] = frame->seed_result().product_form;
             return out;
           });
    if (frame) {
      add_frame_records(rb, *frame, caps);
      rb.payload("frame", json::parse(qrf::frame_to_json_text(*frame)));
    }
    finish(rb, report_out, pass_out);
  });
}

qrfcode_status qrfcode_frame_from_errors(const qrfcode_code* code,
                                         const char* errors_json, double tol,
                                         int max_dense_n, char** report_out,
                                         int* pass_out) {
  return guarded([&] {
    require(code != nullptr && errors_json != nullptr &&
                report_out != nullptr && pass_out != nullptr,
            "qrfcode_frame_from_errors needs a code, an error-set document, "
            "and output pointers");
    const qrf::ErrorSet set = parse_error_set(code->code, errors_json);
    const qrf::dense::Caps caps = caps_for(max_dense_n);

    ReportBuilder rb("frame-from-errors", code->code.name(), tol);
    std::optional<qrf::FrameFields> fields;
    rb.run("frame fields construction", "fields.build",
           [&]() -> ReportBuilder::Outcome {
             fields = qrf::frame_fields_from_errors(set);
             ReportBuilder::Outcome out;
             out.extra["field"] = pauli_texts(fields->field);
             json eta = json::array();
             for (const auto& phase : fields->eta)
               eta.push_back(complex_entry(phase));
             out.extra["eta"] = std::move(eta);
             return out;
           });
    if (fields) {
      std::optional<qrf::DualRep> rep;
      rb.run("field representation laws", "duality.check",
             [&]() -> ReportBuilder::Outcome {
               rep = qrf::dual_rep_from_frame_fields(*fields, caps);
               const qrf::DualityVerdict verdict =
                   qrf::check_duality(code->code, *rep, rb.tol(), caps);
               return {verdict_deviation(verdict), duality_extras(verdict)};
             });
      if (rep) {
        rb.run("code-space restriction", "fields.restriction",
               [&]() -> ReportBuilder::Outcome {
                 const Mat pi = qrf::code_projector(code->code, caps);
                 double dev = 0.0;
                 for (std::size_t chi = 0; chi < rep->ops.size(); ++chi) {
                   const Mat want = fields->eta[chi] *
                                    qrf::dense::pauli_matrix(
                                        fields->field[chi], caps) *
                                    pi;
                   dev = std::max(dev, qrf::dense::max_abs_diff(
                                           Mat(rep->ops[chi] * pi), want));
                 }
                 return {dev, {}};
               });
      }
    }
    rb.payload("errors", pauli_texts(set.errors));
    finish(rb, report_out, pass_out);
  });
}

qrfcode_status qrfcode_duality(const qrfcode_code* code,
                               const char* frame_spec, double tol,
                               int max_dense_n, char** report_out,
                               int* pass_out) {
  return guarded([&] {
    require(code != nullptr && frame_spec != nullptr &&
                report_out != nullptr && pass_out != nullptr,
            "qrfcode_duality needs a code, a frame spec, and output "
            "pointers");
    const qrf::dense::Caps caps = caps_for(max_dense_n);
    const std::string spec = frame_spec;

    ReportBuilder rb("duality", code->code.name(), tol);
    rb.payload("frame_spec", spec);

    std::optional<qrf::DualRep> rep;
    rb.run("representation construction", "dual.build",
           [&]() -> ReportBuilder::Outcome {
             ReportBuilder::Outcome out;
             if (spec.rfind("from-errors:", 0) == 0) {
               const qrf::ErrorSet set =
                   parse_error_set(code->code, [&] {
                     const std::string path = spec.substr(12);
                     return qrf::error_set_to_json_text(
                         qrf::load_error_set(path));
                   }().c_str());
               rep = qrf::dual_rep_from_frame_fields(
                   qrf::frame_fields_from_errors(set), caps);
               out.extra["mode"] = "frame-fields";
             } else {
               qrf::LocalFrame frame = [&] {
                 if (spec == "local")
                   return qrf::LocalFrame::build(
                       code->code, qrf::select_frame_qubits(code->code));
                 if (spec.rfind("local:", 0) == 0) {
                   std::vector<int> qubits;
                   qrf::SeedBasis seed_basis = qrf::SeedBasis::x;
                   std::string rest = spec.substr(6);
                   const std::size_t colon = rest.find(':');
                   if (colon != std::string::npos) {
                     const std::string text = rest.substr(colon + 1);
                     if (text == "Y" || text == "y")
                       seed_basis = qrf::SeedBasis::y;
                     else if (text != "X" && text != "x")
                       qrf::throw_error(qrf::ErrorCode::invalid_argument,
                                        "seed basis must be X or Y, got " +
                                            text);
                     rest = rest.substr(0, colon);
                   }
                   std::size_t pos = 0;
                   while (pos < rest.size()) {
                     std::size_t next = rest.find(',', pos);
                     if (next == std::string::npos) next = rest.size();
                     const std::string item = rest.substr(pos, next - pos);
                     try {
                       const int one_based = std::stoi(item);
                       require(one_based >= 1,
                               "frame qubits are 1-based, got " + item);
                       qubits.push_back(one_based - 1);
                     } catch (const std::logic_error&) {
                       qrf::throw_error(qrf::ErrorCode::parse_error,
                                        "bad frame qubit index: " + item);
                     }
                     pos = next + 1;
                   }
                   return qrf::LocalFrame::build(
                       code->code,
                       qrf::select_frame_qubits(code->code, qubits),
                       seed_basis);
                 }
                 if (spec.find('/') != std::string::npos ||
                     (spec.size() >= 5 &&
                      spec.compare(spec.size() - 5, 5, ".json") == 0))
                   return qrf::load_frame(spec);
                 qrf::throw_error(
                     qrf::ErrorCode::invalid_argument,
                     "unrecognized frame spec: " + spec +
                         " (expected local, local:<qubits>[:basis], "
                         "from-errors:<path>, or a frame JSON path)");
               }();
               const bool same = frame.code().n() == code->code.n() &&
                                 frame.code().m() == code->code.m();
               if (!same)
                 qrf::throw_error(
                     qrf::ErrorCode::validation_error,
                     "frame document code does not match the loaded code");
               rep = qrf::dual_rep_from_basis(frame, caps);
               out.extra["mode"] = "frame-basis";
               json chosen = json::array();
               for (int q : frame.frame_qubits()) chosen.push_back(q + 1);
               out.extra["frame_qubits"] = std::move(chosen);
             }
             int pauli_valued = 0;
             for (const auto& p : rep->pauli_ops) pauli_valued += p ? 1 : 0;
             out.extra["pauli_valued_operators"] = pauli_valued;
             return out;
           });

    if (rep) {
      rb.run("unit, group law, weyl relations", "duality.check",
             [&]() -> ReportBuilder::Outcome {
               const qrf::DualityVerdict verdict =
                   qrf::check_duality(code->code, *rep, rb.tol(), caps);
               return {verdict_deviation(verdict), duality_extras(verdict)};
             });
      std::optional<qrf::ErrorSet> maximal;
      rb.run("gauge-fix unitaries and restriction", "duality.gauge",
             [&]() -> ReportBuilder::Outcome {
               maximal = qrf::build_maximal_error_set(code->code);
               const qrf::GaugeFixErrorSet gf =
                   qrf::gauge_fix_errors(*rep, *maximal, std::nullopt, caps);
               return {gauge_fix_deviation(gf, caps), {}};
             });
      rb.run("fourier unbiasedness", "duality.fourier",
             [&]() -> ReportBuilder::Outcome {
               if (!maximal) maximal = qrf::build_maximal_error_set(code->code);
               const qrf::NonlocalFactorization fact =
                   qrf::build_factorization(*maximal, caps);
               const qrf::FourierReport fr =
                   qrf::fourier_basis_relation(fact, caps);
               ReportBuilder::Outcome out;
               out.deviation =
                   std::max({fr.max_fourier_dev, fr.max_unbiased_dev,
                             fr.max_factor_dev});
               out.extra["max_fourier_dev"] = fr.max_fourier_dev;
               out.extra["max_unbiased_dev"] = fr.max_unbiased_dev;
               out.extra["max_factor_dev"] = fr.max_factor_dev;
               return out;
             });
    }
    finish(rb, report_out, pass_out);
  });
}

qrfcode_status qrfcode_surface(const char* lattice_spec, int with_forests,
                               int with_defect_demo, double tol,
                               int max_dense_n, char** report_out,
                               int* pass_out) {
  return guarded([&] {
    require(lattice_spec != nullptr && report_out != nullptr &&
                pass_out != nullptr,
            "qrfcode_surface needs a lattice spec and output pointers");
    const qrf::dense::Caps caps = caps_for(max_dense_n);
    const std::string spec = lattice_spec;

    qrf::CombinatorialMap map = [&] {
      if (spec.rfind("rect:", 0) == 0) {
        int length = 0, height = 0;
        char trailing = '\0';
        const int got = std::sscanf(spec.c_str(), "rect:%dx%d%c", &length,
                                    &height, &trailing);
        if (got != 2)
          qrf::throw_error(qrf::ErrorCode::parse_error,
                           "rectangle spec must look like rect:LxH, got " +
                               spec);
        return qrf::build_rect_lattice(length, height);
      }
      if (spec.find('{') != std::string::npos)
        return qrf::map_from_json_text(spec);
      return qrf::load_map(spec);
    }();
    const qrf::SurfaceCode surf = qrf::vertex_plaquette_code(map);
    const int expected_homology = map.closed ? 2 * map.genus : 1;

    ReportBuilder rb("surface", surf.code.name(), tol);
    rb.payload("frame_spec", json());  // keep key order stable across kinds
    rb.run("code construction", "surface.code",
           [&]() -> ReportBuilder::Outcome {
             ReportBuilder::Outcome out;
             out.extra["qubits"] = surf.code.n();
             out.extra["generators"] = surf.code.m();
             out.extra["logical_qubits"] = surf.code.k();
             out.extra["closed"] = map.closed;
             if (map.closed) {
               out.extra["genus"] = map.genus;
               out.extra["kernel_rank"] =
                   static_cast<int>(surf.kernel_basis.size());
             }
             return out;
           });
    rb.run("generator independence", "surface.rank",
           [&]() -> ReportBuilder::Outcome {
             const int m = surf.code.m();
             qrf::gf2::BitMatrix rows(m, 2 * surf.code.n());
             for (int i = 0; i < m; ++i) {
               const std::vector<std::uint8_t> sym =
                   surf.code.generators()[i].symplectic();
               for (std::size_t c = 0; c < sym.size(); ++c)
                 rows.set(i, static_cast<int>(c), sym[c]);
             }
             const int rank = qrf::gf2::rank(rows);
             ReportBuilder::Outcome out;
             out.deviation = static_cast<double>(std::abs(rank - m));
             out.extra["rank"] = rank;
             return out;
           });
    rb.run("homology rank", "surface.homology",
           [&]() -> ReportBuilder::Outcome {
             const int rank = qrf::homology_rank(map);
             ReportBuilder::Outcome out;
             out.deviation =
                 static_cast<double>(std::abs(rank - expected_homology));
             out.extra["rank"] = rank;
             out.extra["expected"] = expected_homology;
             return out;
           });

    std::optional<qrf::ForestPair> forests;
    if (with_forests != 0 || with_defect_demo != 0) {
      rb.run("forest partition", "surface.forests",
             [&]() -> ReportBuilder::Outcome {
               forests = qrf::spanning_forests(map);
               std::vector<char> seen(map.edge_count(), 0);
               for (const std::vector<int>* part :
                    {&forests->tree, &forests->dual_tree, &forests->leftover})
                 for (int e : *part) seen[e] += 1;
               bool exact = true;
               for (char c : seen) exact = exact && c == 1;
               const int expected_leftover = map.closed ? 2 * map.genus : 1;
               ReportBuilder::Outcome out;
               out.deviation = exact && static_cast<int>(
                                            forests->leftover.size()) ==
                                            expected_leftover
                                   ? 0.0
                                   : 1.0;
               out.extra["tree_edges"] =
                   static_cast<int>(forests->tree.size());
               out.extra["dual_tree_edges"] =
                   static_cast<int>(forests->dual_tree.size());
               out.extra["leftover"] = json(forests->leftover);
               return out;
             });
      if (forests) {
        rb.run("forest dual representation", "surface.duality",
               [&]() -> ReportBuilder::Outcome {
                 const qrf::DualityVerdict verdict =
                     qrf::check_forest_duality(surf, *forests);
                 return {verdict_deviation(verdict),
                         duality_extras(verdict)};
               });
      }
    }

    if (with_defect_demo != 0) {
      if (map.closed) {
        rb.skip("single defect dressing", "surface.defect",
                "defect demo runs on planar rectangles");
      } else if (forests) {
        rb.run("single defect dressing", "surface.defect",
               [&]() -> ReportBuilder::Outcome {
                 qrf::dense::check_state_cap(surf.code.n(), caps);
                 int edge = -1;
                 for (int e = 0; e < map.edge_count() && edge < 0; ++e)
                   if (map.edges[e][0] < 0 || map.edges[e][1] < 0) edge = e;
                 require(edge >= 0, "no boundary edge found");
                 const Vec zero = qrf::homological_codewords(surf, caps).first;
                 const Pauli error =
                     qrf::string_operator(map, {edge}, qrf::StringKind::z);
                 const Vec corrupted = qrf::dense::apply_pauli(error, zero);
                 const qrf::DefectSector before =
                     qrf::defect_sector(surf, corrupted, 1e-8, caps);
                 const qrf::CorrectedDefect fixed = qrf::correct_single_defect(
                     surf, *forests, corrupted, 1e-8, caps);
                 const Vec averaged =
                     qrf::apply_group_average(surf.code, fixed.state, caps);
                 double dev = qrf::dense::max_abs_diff(averaged, fixed.state);

                 // Homotopy class of error plus dressing decides whether the
                 // corrected state is the original codeword or a logical
                 // image of it.
                 require(before.vertices.size() + before.faces.size() == 1,
                         "boundary edge error should create one defect");
                 std::vector<int> combined = {edge};
                 const std::vector<int>& path =
                     before.vertices.empty()
                         ? forests->face_paths[before.faces[0]]
                         : forests->vertex_paths[before.vertices[0]];
                 for (int e : path) {
                   const auto it =
                       std::find(combined.begin(), combined.end(), e);
                   if (it == combined.end())
                     combined.push_back(e);
                   else
                     combined.erase(it);
                 }
                 std::sort(combined.begin(), combined.end());
                 const bool identity_class =
                     qrf::homotopy_canonical(map, combined).empty();
                 if (identity_class)
                   dev = std::max(dev,
                                  qrf::dense::max_abs_diff(fixed.state, zero));
                 ReportBuilder::Outcome out;
                 out.deviation = dev;
                 out.extra["error_edge"] = edge;
                 out.extra["correction_class"] =
                     identity_class ? "identity" : "logical";
                 return out;
               });
      }
    }

    if (map.edge_count() <= 256)
      rb.payload("lattice", json::parse(qrf::map_to_json_text(map)));
    finish(rb, report_out, pass_out);
  });
}

qrfcode_status qrfcode_verify_all(const qrfcode_code* code, double tol,
                                  int max_dense_n, int with_timings,
                                  char** report_out, int* pass_out) {
  return guarded([&] {
    require(code != nullptr && report_out != nullptr && pass_out != nullptr,
            "qrfcode_verify_all needs a code and output pointers");
    const StabilizerCode& c = code->code;
    const qrf::dense::Caps caps = caps_for(max_dense_n);
    const std::uint64_t order = c.group_order();

    ReportBuilder rb("verify-all", c.name(), tol, with_timings != 0);

    if (c.m() > 8) {
      rb.skip("group law and trivial sectors", "group.structure",
              "exact group scan capped at 2^8 elements");
    } else {
      rb.run("group law and trivial sectors", "group.structure",
             [&]() -> ReportBuilder::Outcome {
               double dev = 0.0;
               for (std::uint64_t g = 0; g < order; ++g) {
                 const Pauli eg = c.element(g);
                 if (c.classify_sector(eg).bits != 0) dev = 1.0;
                 for (std::uint64_t h = 0; h < order; ++h)
                   if (!(eg * c.element(h) == c.element(g ^ h))) dev = 1.0;
               }
               return {dev, {}};
             });
    }

    std::optional<Mat> pi;
    rb.run("projector idempotent and rank", "projector.structure",
           [&]() -> ReportBuilder::Outcome {
             pi = qrf::code_projector(c, caps);
             const double want_trace = static_cast<double>(1 << c.k());
             double dev = qrf::dense::max_abs_diff(Mat(*pi * *pi), *pi);
             dev = std::max(dev,
                            qrf::dense::max_abs_diff(Mat(pi->adjoint()), *pi));
             dev = std::max(dev, std::abs(pi->trace().real() - want_trace));
             dev = std::max(dev, std::abs(pi->trace().imag()));
             ReportBuilder::Outcome out;
             out.deviation = dev;
             out.extra["rank"] = qrf::dense::projector_rank(*pi);
             return out;
           });
    if (pi) {
      rb.run("generators stabilize the code space", "projector.stabilized",
             [&]() -> ReportBuilder::Outcome {
               double dev = 0.0;
               for (const Pauli& g : c.generators()) {
                 const Mat u = qrf::dense::pauli_matrix(g, caps);
                 dev = std::max(dev,
                                qrf::dense::max_abs_diff(Mat(u * *pi), *pi));
               }
               return {dev, {}};
             });
      if (c.m() > 8) {
        rb.skip("isotype resolution of identity", "projector.isotypes",
                "isotype sweep capped at 2^8 characters");
      } else {
        rb.run("isotype resolution of identity", "projector.isotypes",
               [&]() -> ReportBuilder::Outcome {
                 Mat sum = Mat::Zero(pi->rows(), pi->cols());
                 double dev = 0.0;
                 for (std::uint64_t chi = 0; chi < order; ++chi) {
                   const Mat p = qrf::isotype_projector(
                       c, qrf::grp::Character{c.m(), chi}, caps);
                   if (chi == 0)
                     dev = std::max(dev, qrf::dense::max_abs_diff(p, *pi));
                   sum += p;
                 }
                 const Mat id = Mat::Identity(pi->rows(), pi->cols());
                 return {std::max(dev, qrf::dense::max_abs_diff(sum, id)),
                         {}};
               });
      }
    }

    std::optional<qrf::ErrorSet> maximal;
    rb.run("maximal correctable error set", "kl.maximal",
           [&]() -> ReportBuilder::Outcome {
             maximal = qrf::build_maximal_error_set(c);
             const bool shape =
                 maximal->report.correctable &&
                 maximal->errors.size() == order &&
                 maximal->errors[0].is_identity_string();
             ReportBuilder::Outcome out;
             out.deviation = shape ? 0.0 : 1.0;
             if (order <= 64) out.extra["errors"] = pauli_texts(maximal->errors);
             return out;
           });
    if (maximal) {
      rb.run("sector labels match syndromes", "kl.syndrome",
             [&]() -> ReportBuilder::Outcome {
               double dev = 0.0;
               for (std::size_t i = 0; i < maximal->errors.size(); ++i) {
                 const std::uint64_t chi =
                     c.classify_sector(maximal->errors[i]).bits;
                 if (chi != maximal->report.sector_of[i]) dev = 1.0;
                 const std::vector<int> signs =
                     c.syndrome(maximal->errors[i]);
                 for (int b = 0; b < c.m(); ++b) {
                   const int want = (chi >> b) & 1 ? -1 : 1;
                   if (signs[b] != want) dev = 1.0;
                 }
               }
               return {dev, {}};
             });
      if (c.m() > 6) {
        rb.skip("frame algebra dimension", "frame.algebra",
                "frame algebra scan capped at 2^6 group elements");
      } else {
        rb.run("frame algebra dimension", "frame.algebra",
               [&]() -> ReportBuilder::Outcome {
                 const int dim = qrf::frame_algebra_dim(*maximal, caps);
                 const int expected = static_cast<int>(order * order);
                 ReportBuilder::Outcome out;
                 out.deviation = static_cast<double>(std::abs(dim - expected));
                 out.extra["dimension"] = dim;
                 out.extra["expected"] = expected;
                 return out;
               });
      }
      rb.run("fourier unbiasedness", "duality.fourier",
             [&]() -> ReportBuilder::Outcome {
               const qrf::NonlocalFactorization fact =
                   qrf::build_factorization(*maximal, caps);
               const qrf::FourierReport fr =
                   qrf::fourier_basis_relation(fact, caps);
               ReportBuilder::Outcome out;
               out.deviation =
                   std::max({fr.max_fourier_dev, fr.max_unbiased_dev,
                             fr.max_factor_dev});
               out.extra["max_fourier_dev"] = fr.max_fourier_dev;
               out.extra["max_unbiased_dev"] = fr.max_unbiased_dev;
               out.extra["max_factor_dev"] = fr.max_factor_dev;
               return out;
             });
      rb.run("electric recovery", "recovery.electric",
             [&]() -> ReportBuilder::Outcome {
               qrf::dense::check_matrix_cap(c.n(), caps);
               std::mt19937 rng(kReportSeed);
               const Vec logical = qrf::dense::random_state(rng, c.k());
               const Vec psi = qrf::encode_computational(c, logical, caps);
               const Mat rho = psi * psi.adjoint();
               double dev = 0.0;
               for (const Pauli& e : maximal->errors) {
                 const Vec corrupted = qrf::dense::apply_pauli(e, psi);
                 const Mat recovered = qrf::electric_recovery(
                     *maximal, Mat(corrupted * corrupted.adjoint()), caps);
                 dev = std::max(dev, qrf::dense::max_abs_diff(recovered, rho));
               }
               return {dev, {}};
             });
    }

    std::optional<qrf::LocalFrame> frame;
    bool frame_available = false;
    if (c.m() > 10) {
      rb.skip("local frame construction", "frame.build",
              "orientation-state table capped at 2^10 group elements");
    } else {
      rb.run("local frame construction", "frame.build",
             [&]() -> ReportBuilder::Outcome {
               ReportBuilder::Outcome out;
               try {
                 frame = qrf::LocalFrame::build(c, qrf::select_frame_qubits(c));
                 frame_available = true;
                 json chosen = json::array();
                 for (int q : frame->frame_qubits()) chosen.push_back(q + 1);
                 out.extra["frame_qubits"] = std::move(chosen);
               } catch (const qrf::Error& e) {
                 if (e.code() != qrf::ErrorCode::not_found) throw;
                 out.extra["available"] = false;
                 out.extra["note"] = e.what();
               }
               return out;
             });
    }

    const char* no_frame = "code has no local product frame";
    if (frame_available && frame) {
      add_frame_records(rb, *frame, caps);
    } else {
      for (const auto& [name, anchor] :
           std::initializer_list<std::pair<const char*, const char*>>{
               {"orientation states orthonormal", "frame.orthonormal"},
               {"cocycle identity", "frame.cocycle"},
               {"disentangler unitary", "frame.disentangler"},
               {"disentangler round trip", "frame.roundtrip"}})
        rb.skip(name, anchor, no_frame);
    }

    std::optional<qrf::DualRep> rep;
    std::optional<qrf::GaugeFixErrorSet> gauge;
    if (frame_available && frame) {
      rb.run("unit, group law, weyl relations", "duality.check",
             [&]() -> ReportBuilder::Outcome {
               rep = qrf::dual_rep_from_basis(*frame, caps);
               const qrf::DualityVerdict verdict =
                   qrf::check_duality(c, *rep, rb.tol(), caps);
               return {verdict_deviation(verdict), duality_extras(verdict)};
             });
    } else {
      rb.skip("unit, group law, weyl relations", "duality.check", no_frame);
    }
    if (rep && maximal) {
      rb.run("gauge-fix unitaries and restriction", "duality.gauge",
             [&]() -> ReportBuilder::Outcome {
               gauge = qrf::gauge_fix_errors(*rep, *maximal, std::nullopt,
                                             caps);
               return {gauge_fix_deviation(*gauge, caps), {}};
             });
    } else {
      rb.skip("gauge-fix unitaries and restriction", "duality.gauge",
              no_frame);
    }
    if (gauge) {
      rb.run("dual recovery", "recovery.dual",
             [&]() -> ReportBuilder::Outcome {
               qrf::dense::check_matrix_cap(c.n(), caps);
               std::mt19937 rng(kReportSeed);
               const Vec logical = qrf::dense::random_state(rng, c.k());
               const Vec psi = qrf::encode_computational(c, logical, caps);
               const Mat rho = psi * psi.adjoint();
               double dev = 0.0;
               for (std::uint64_t g = 0; g < std::min<std::uint64_t>(order, 16);
                    ++g) {
                 const Mat corrupted =
                     gauge->unitaries[g] * rho * gauge->unitaries[g].adjoint();
                 const Mat recovered = qrf::dual_recovery(*gauge, corrupted);
                 dev = std::max(dev, qrf::dense::max_abs_diff(recovered, rho));
               }
               return {dev, {}};
             });
      rb.run("dual twirl equals character twirl", "twirl.compare",
             [&]() -> ReportBuilder::Outcome {
               qrf::dense::check_matrix_cap(c.n(), caps);
               std::mt19937 rng(kReportSeed + 1);
               const Vec a = qrf::dense::random_state(rng, c.n());
               const Vec b = qrf::dense::random_state(rng, c.n());
               const Mat rho =
                   0.5 * (a * a.adjoint()) + 0.5 * (b * b.adjoint());
               const Mat lhs = qrf::dual_twirl(*gauge, rho);
               const Mat rhs = qrf::character_twirl(*rep, rho);
               return {qrf::dense::max_abs_diff(lhs, rhs), {}};
             });
    } else {
      rb.skip("dual recovery", "recovery.dual", no_frame);
      rb.skip("dual twirl equals character twirl", "twirl.compare", no_frame);
    }

    finish(rb, report_out, pass_out);
  });
}

}  // extern "C"
