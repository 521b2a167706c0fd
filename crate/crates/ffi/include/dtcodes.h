#ifndef DTCODES_H
#define DTCODES_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of a library call.
typedef enum DtStatus {
  DT_STATUS_OK = 0,
  DT_STATUS_NULL_POINTER = 1,
  DT_STATUS_INVALID_UTF8 = 2,
  // Malformed text or an unsupported field order.
  DT_STATUS_PARSE = 3,
  DT_STATUS_INVALID_ARGUMENT = 4,
  // An enumeration or search would exceed its configured budget.
  DT_STATUS_BUDGET_EXCEEDED = 5,
  // An equivalence test hit its node cap without a verdict.
  DT_STATUS_UNDECIDED = 6,
  // A panic was caught at the boundary.
  DT_STATUS_INTERNAL = 7,
} DtStatus;

// Family of codes to search.
typedef enum DtFamily {
  DT_FAMILY_TOEPLITZ = 0,
  DT_FAMILY_CIRCULANT = 1,
  DT_FAMILY_NEGACIRCULANT = 2,
} DtFamily;

// The outcome of classifying the optimal codes of one length.
typedef struct DtClassification DtClassification;

// A linear code with a generator matrix.
typedef struct DtCode DtCode;

// Class counts of a classification.
typedef struct DtClassCounts {
  size_t d_opt;
  size_t n_dt;
  size_t n_dc;
  size_t n_nc;
} DtClassCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string.
const char *dt_version(void);

// Copy of the calling thread's last error message, or null if the last
// call succeeded. Release with [`dt_string_free`].
char *dt_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a pointer returned by this library and not yet freed.
void dt_string_free(char *s);

// Builds the double Toeplitz code of the triple `"t;(a_1,...);(b_1,...)"`
// over F_q.
//
// # Safety
// `triple` must be a nul-terminated string; `out_code` must be writable.
enum DtStatus dt_code_from_triple(uint32_t q, const char *triple, struct DtCode **out_code);

// Builds the double circulant or negacirculant code with first row `row`,
// written `"(r_1,...,r_m)"`.
//
// # Safety
// `row` must be a nul-terminated string; `out_code` must be writable.
enum DtStatus dt_code_from_row(uint32_t q,
                               const char *row,
                               bool negacirculant,
                               struct DtCode **out_code);

// Releases a code. Null is ignored.
//
// # Safety
// `code` must be null or a handle from this library not yet freed.
void dt_code_free(struct DtCode *code);

// Length and dimension of a code.
//
// # Safety
// `handle` must be a live code; the out-pointers must be writable.
enum DtStatus dt_code_parameters(const struct DtCode *handle, size_t *out_n, size_t *out_k);

// Minimum Hamming weight of a nonzero codeword.
//
// # Safety
// `handle` must be a live code; `out_d` must be writable.
enum DtStatus dt_code_minimum_weight(const struct DtCode *handle, size_t *out_d);

// Weight enumerator as a JSON array of decimal strings.
//
// # Safety
// `handle` must be a live code; `out_json` must be writable. The result is
// released with [`dt_string_free`].
enum DtStatus dt_code_weight_enumerator(const struct DtCode *handle, char **out_json);

// Whether the code has the same weight enumerator as its dual.
//
// # Safety
// `handle` must be a live code; `out_fsd` must be writable.
enum DtStatus dt_code_is_formally_self_dual(const struct DtCode *handle, bool *out_fsd);

// Generator matrix of the dual code as a new handle.
//
// # Safety
// `handle` must be a live code; `out_code` must be writable.
enum DtStatus dt_code_dual(const struct DtCode *handle, struct DtCode **out_code);

// Whether two codes are monomially equivalent.
//
// # Safety
// Both codes must be live handles; `out_equivalent` must be writable.
enum DtStatus dt_codes_equivalent(const struct DtCode *a,
                                  const struct DtCode *b,
                                  bool *out_equivalent);

// Average weight enumerator over all double Toeplitz codes of length `n`,
// as a JSON array of decimal strings.
//
// # Safety
// `out_json` must be writable; release the result with [`dt_string_free`].
enum DtStatus dt_average_weight_enumerator(uint32_t q, size_t n, char **out_json);

// Smallest length from which the averaging bound guarantees a double
// Toeplitz code of minimum weight at least `d`.
//
// # Safety
// `out_n` must be writable.
enum DtStatus dt_minimal_guaranteed_length(uint32_t q, size_t d, size_t *out_n);

// Exhaustive search for the codes of largest minimum weight in `family` at
// length `n`, with the field's default symmetry filter for double Toeplitz
// codes and none for the circulant families. Writes the optimal minimum
// weight and the hits as JSON lines.
//
// # Safety
// The out-pointers must be writable; release the string with
// [`dt_string_free`].
enum DtStatus dt_find_optimal(uint32_t q,
                              size_t n,
                              enum DtFamily family,
                              size_t workers,
                              size_t *out_d,
                              char **out_json_lines);

// Classifies the optimal double Toeplitz codes of length `n` over F_q.
// `workers = 0` uses every core.
//
// # Safety
// `out_report` must be writable.
enum DtStatus dt_classify(uint32_t q,
                          size_t n,
                          size_t workers,
                          struct DtClassification **out_report);

// Class counts of a classification.
//
// # Safety
// `report` must be a live handle; `out_counts` must be writable.
enum DtStatus dt_classification_counts(const struct DtClassification *report,
                                       struct DtClassCounts *out_counts);

// The full classification report as a JSON document.
//
// # Safety
// `report` must be a live handle; `out_json` must be writable. Release the
// string with [`dt_string_free`].
enum DtStatus dt_classification_json(const struct DtClassification *report, char **out_json);

// Releases a classification. Null is ignored.
//
// # Safety
// `report` must be null or a handle from this library not yet freed.
void dt_classification_free(struct DtClassification *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DTCODES_H */
