/*
 * qmds - exact construction and verification of quantum MDS codes derived
 * from Hermitian dual-containing constacyclic codes over GF(q^2).
 *
 * C interface to the C++ core. All objects are opaque handles, every
 * fallible call returns a qmds_status, and every char* output is allocated
 * by the library and must be released with qmds_string_free(). Handles are
 * immutable after creation and safe to share between threads.
 */

#ifndef QMDS_H
#define QMDS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qmds_field qmds_field;
typedef struct qmds_code qmds_code;

typedef enum qmds_status {
    QMDS_OK = 0,
    QMDS_ERR_INVALID_ARGUMENT,
    QMDS_ERR_NOT_PRIME,
    QMDS_ERR_EVEN_CHARACTERISTIC,
    QMDS_ERR_DIVISION_BY_ZERO,
    QMDS_ERR_FIELD_MISMATCH,
    QMDS_ERR_LENGTH_MISMATCH,
    QMDS_ERR_MESSAGE_TOO_LONG,
    QMDS_ERR_NOT_A_CODEWORD,
    QMDS_ERR_ODD_R,
    QMDS_ERR_EVEN_R,
    QMDS_ERR_R_ONE,
    QMDS_ERR_R_TOO_LARGE,
    QMDS_ERR_DELTA_OUT_OF_RANGE,
    QMDS_ERR_D_OUT_OF_RANGE,
    QMDS_ERR_ELEMENTS_OUTSIDE_OMEGA,
    QMDS_ERR_NOT_DUAL_CONTAINING,
    QMDS_ERR_DIMENSION_CONTRADICTION,
    QMDS_ERR_INTERNAL_DIVISIBILITY_FAILURE,
    QMDS_ERR_EQUIVALENCE_VIOLATION,
    QMDS_ERR_INVALID_Q,
    QMDS_ERR_VERIFICATION_FAILED,
    QMDS_ERR_NOMEM,
    QMDS_ERR_UNKNOWN
} qmds_status;

typedef enum qmds_family {
    QMDS_FAMILY_EVEN = 0,
    QMDS_FAMILY_ODD = 1,
    QMDS_FAMILY_BOTH = 2
} qmds_family;

typedef enum qmds_format {
    QMDS_FORMAT_JSON = 0,
    QMDS_FORMAT_CSV = 1,
    QMDS_FORMAT_TEXT = 2
} qmds_format;

const char* qmds_status_name(qmds_status status);
const char* qmds_version(void);
void qmds_string_free(char* s);

/* ---- fields: GF(q^2) with q = p^m ------------------------------------- */

/* On failure *errmsg (when non-NULL) receives an allocated description. */
qmds_status qmds_field_create(int p, int m, qmds_field** out, char** errmsg);
void qmds_field_destroy(qmds_field* field);
long long qmds_field_q(const qmds_field* field);
long long qmds_field_order(const qmds_field* field);
qmds_status qmds_field_to_json(const qmds_field* field, char** out);

/* ---- codes: single family instances and custom defining sets ---------- */

/* Family is selected by the parity of r; d is the designed distance. */
qmds_status qmds_code_create(const qmds_field* field, long long r, long long d, qmds_code** out,
                             char** errmsg);
/* eta-constacyclic code with an arbitrary defining set inside Omega. */
qmds_status qmds_code_create_custom(const qmds_field* field, long long r, const long long* elements,
                                    size_t count, qmds_code** out, char** errmsg);
void qmds_code_destroy(qmds_code* code);
long long qmds_code_length(const qmds_code* code);
long long qmds_code_dimension(const qmds_code* code);
long long qmds_code_bch_bound(const qmds_code* code);
/* *result = 1 when the code contains its Hermitian dual, else 0. */
qmds_status qmds_code_contains_dual(const qmds_code* code, int* result);
qmds_status qmds_code_to_json(const qmds_code* code, char** out);
/* Minor-scan distance certificate; report is the JSON described in README. */
qmds_status qmds_code_mds_check(const qmds_code* code, uint64_t budget, uint64_t seed, char** report);

/* ---- whole-family driving surface (used by the CLI) ------------------- */

/* All admissible (r, d) records for q, sorted by (n, d). new_only selects
 * the rows beyond previously known ranges. */
qmds_status qmds_enumerate(long long q, qmds_family family, int new_only, qmds_format format,
                           char** out, char** errmsg);

/* Full record (parameters, defining set, generator polynomial) for one
 * instance; the family is implied by the parity of r. */
qmds_status qmds_build_record(long long q, long long r, long long d, qmds_format format, char** out,
                              char** errmsg);

/* Runs distance certification on every family instance plus `trials`
 * randomized dual-containment crosschecks per shape. *verified = 1 iff
 * nothing was falsified; falsification also yields
 * QMDS_ERR_VERIFICATION_FAILED. */
qmds_status qmds_verify(long long q, qmds_family family, uint64_t budget, uint64_t seed,
                        long long trials, qmds_format format, int* verified, char** out,
                        char** errmsg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QMDS_H */
