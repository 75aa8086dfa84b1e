/**
 * Copyright 2026, the qrfcode authors.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE file in the root directory of this source tree.
 */

#ifndef QRFCODE_H
#define QRFCODE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Stable C interface of the qrfcode shared library. Handles are opaque,
 * all functions return a status, and reports are JSON text owned by the
 * caller (release with qrfcode_string_free). The thread-local message of
 * the most recent failure is available via qrfcode_last_error. */

typedef enum qrfcode_status {
  QRFCODE_OK = 0,
  QRFCODE_DIMENSION_MISMATCH = 1,
  QRFCODE_PARSE_ERROR = 2,
  QRFCODE_VALIDATION_ERROR = 3,
  QRFCODE_CAP_EXCEEDED = 4,
  QRFCODE_INVALID_ARGUMENT = 5,
  QRFCODE_NOT_FOUND = 6,
  QRFCODE_PRECONDITION_FAILED = 7,
  QRFCODE_IO_ERROR = 8,
  QRFCODE_INTERNAL_ERROR = 9
} qrfcode_status;

typedef struct qrfcode_code qrfcode_code;

const char* qrfcode_version(void);

/* Message of the last failing call on this thread; empty string when the
 * last call succeeded. The pointer stays valid until the next call. */
const char* qrfcode_last_error(void);

void qrfcode_string_free(char* text);

/* `ref` is a JSON file path (contains '/' or ends in ".json") or a catalog
 * name resolved under QRFCODE_CATALOG (default ./data/codes). */
qrfcode_status qrfcode_code_load(const char* ref, qrfcode_code** out);
qrfcode_status qrfcode_code_from_json(const char* json_text,
                                      qrfcode_code** out);
void qrfcode_code_free(qrfcode_code* code);

int qrfcode_code_qubits(const qrfcode_code* code);
int qrfcode_code_logical_qubits(const qrfcode_code* code);
int qrfcode_code_generator_count(const qrfcode_code* code);
uint64_t qrfcode_code_group_order(const qrfcode_code* code);

/* Summary document: name, n, k, m, group order, generator and logical
 * operator texts. */
qrfcode_status qrfcode_code_summary(const qrfcode_code* code,
                                    char** json_out);

/* Report-producing calls. Each writes a JSON report with per-check records
 * (name, anchor, verdict in {"pass", "fail", "skipped(cap)"}, deviation)
 * and sets *pass_out to 1 when no record fails. Reports are deterministic:
 * fixed reduction orders, fixed random seeds, no timestamps. Verification
 * failures are reported in the records, not as a status; a non-OK status
 * means the inputs could not be processed at all. */

/* `errors_json` is an error-set document {"code": ref, "errors": [text]}.
 * The named code must match `code`. */
qrfcode_status qrfcode_kl_check(const qrfcode_code* code,
                                const char* errors_json, char** report_out,
                                int* pass_out);

/* `frame_qubits` lists 0-based qubit indices kept as the frame, or NULL
 * with count 0 for the default selection. `basis` is "X" or "Y". */
qrfcode_status qrfcode_frame_local(const qrfcode_code* code,
                                   const int* frame_qubits,
                                   int frame_qubit_count, const char* basis,
                                   double tol, int max_dense_n,
                                   char** report_out, int* pass_out);

qrfcode_status qrfcode_frame_from_errors(const qrfcode_code* code,
                                         const char* errors_json, double tol,
                                         int max_dense_n, char** report_out,
                                         int* pass_out);

/* `frame_spec` selects the representation under test:
 *   "local"                 default frame qubits, X seeds
 *   "local:1,2"             explicit 1-based frame qubits
 *   "local:1,2:Y"           explicit qubits and seed basis
 *   "from-errors:<path>"    frame fields of the error set at <path>
 *   "<path.json>"           frame-spec JSON document */
qrfcode_status qrfcode_duality(const qrfcode_code* code,
                               const char* frame_spec, double tol,
                               int max_dense_n, char** report_out,
                               int* pass_out);

/* `lattice_spec` is "rect:LxH", a lattice JSON file path, or inline
 * lattice JSON. */
qrfcode_status qrfcode_surface(const char* lattice_spec, int with_forests,
                               int with_defect_demo, double tol,
                               int max_dense_n, char** report_out,
                               int* pass_out);

/* Full deterministic verification battery over one code. Dense checks that
 * would exceed `max_dense_n` qubits are recorded as "skipped(cap)".
 * `with_timings` adds elapsed milliseconds per record and makes the report
 * run-dependent; leave it 0 for byte-identical output. */
qrfcode_status qrfcode_verify_all(const qrfcode_code* code, double tol,
                                  int max_dense_n, int with_timings,
                                  char** report_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif /* QRFCODE_H */
