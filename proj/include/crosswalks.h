/* C interface to the crosswalks library.
 *
 * Conventions:
 *   - Every fallible call returns a status code (CW_OK on success) and
 *     writes its result through an out parameter.
 *   - All returned char* buffers are owned by the caller and must be
 *     released with cw_string_free(). Outputs are UTF-8, newline-separated
 *     where they carry multiple values, and deterministic for identical
 *     inputs.
 *   - Arbitrarily large integers are passed as decimal strings.
 *   - On any non-CW_OK return, cw_last_error() describes the failure for
 *     the calling thread.
 */
#ifndef CROSSWALKS_H
#define CROSSWALKS_H

#if defined(_WIN32)
#define CW_API __declspec(dllexport)
#else
#define CW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  CW_OK = 0,        /* success */
  CW_FAIL = 1,      /* the requested check or search did not succeed */
  CW_BAD_INPUT = 2, /* unknown name, malformed text, out-of-range value */
  CW_INTERNAL = 3   /* unexpected failure; see cw_last_error() */
};

CW_API const char* cw_version(void);

/* Message for the most recent failure on the calling thread; never NULL. */
CW_API const char* cw_last_error(void);

/* Releases any char* produced by this library; NULL is ignored. */
CW_API void cw_string_free(char* s);

/* ------------------------------------------------------------------ rows */

/* Decimal values of a named count row, one per line. Names:
 *   vac-a1, vac-a2-even, vac-odd, vac-a3, vac-a4, vac-a4-odd,
 *   hes-a1, hes-a2-even, hes-odd, hes-a3, hes-a4.
 * ceiling <= 0 selects the built-in walk-length guard. */
CW_API int cw_row(const char* name, int terms, int ceiling, char** out);

/* Row names of a table ("paper2" or "paper3"), one per line. */
CW_API int cw_table_rows(const char* table, char** out);

/* Raw endpoint-set walk counts. flavor: "vacillating" | "hesitating"
 * (prefixes accepted); endset: A1 | A2 | A2p | A2pp | A3 | A4; parity:
 * "all" | "even" | "odd" selects which walk lengths in [0, max_length]
 * are reported, ascending, one decimal value per line. Hesitating walks
 * exist at even lengths only. */
CW_API int cw_walk_counts(const char* flavor, const char* endset,
                          const char* parity, int max_length, int ceiling,
                          char** out);

/* ------------------------------------------------------------ partitions */

/* Exact number of set partitions of [n] passing the filters: k >= 1 keeps
 * partitions with no k-crossing (k <= 0 disables the filter), enhanced
 * switches to the loop-augmented arc reading, bisymmetric keeps partitions
 * fixed by the mirror i -> n+1-i. guard <= 0 selects the built-in bound
 * on n. Result is a decimal string. */
CW_API int cw_partition_count(int n, int k, int enhanced, int bisymmetric,
                              int guard, char** out);

/* The partitions themselves, one per line in block notation such as
 * "{1,3}{2}", in lexicographic growth-string order. */
CW_API int cw_partition_list(int n, int k, int enhanced, int bisymmetric,
                             int guard, char** out);

/* ---------------------------------------------------------------- series */

/* A reusable constant-term evaluation engine for one flavor at a fixed
 * truncation order (coefficients t^0 .. t^{order-1}). */
typedef struct cw_engine cw_engine;

/* window_extra >= 0 widens the internal x-exponent window beyond the
 * flavor's proven-sufficient default (useful for stability experiments). */
CW_API cw_engine* cw_engine_new(const char* flavor, int order,
                                int window_extra);
CW_API void cw_engine_free(cw_engine* e);

/* combo names a weighted endpoint-set combination, e.g. "A2" or
 * "A1 + 2*A2p + 3*A2pp". counts: one integer coefficient per line.
 * triples: one "order<TAB>numerator<TAB>denominator" line per
 * coefficient of the underlying rational series. */
CW_API int cw_engine_counts(const cw_engine* e, const char* combo, char** out);
CW_API int cw_engine_triples(const cw_engine* e, const char* combo, char** out);

/* ---------------------------------------------------------- verification */

/* suite: "identities" | "recurrences" | "odes" | "bijections" | "all".
 * series_order bounds the series work (truncation order for identity and
 * differential-equation checks; <= 0 selects the default, 24). The report
 * carries one "PASS <id>" or "FAIL <id>: <detail>" line per check.
 * Returns CW_OK when every check passes and CW_FAIL when any fails; the
 * report is written either way. */
CW_API int cw_verify(const char* suite, int series_order, char** out_report);

/* ----------------------------------------------------- sequence analysis */

/* sequence_text: one decimal integer per line; '#' starts a comment.
 * Searches recurrences of order <= max_order with polynomial coefficients
 * of degree <= max_degree, holding out `holdout` trailing terms for
 * validation (holdout < 0 selects the default, 5). On success writes the
 * normalized recurrence as text; returns CW_FAIL when nothing fits. */
CW_API int cw_guess(const char* sequence_text, int max_order, int max_degree,
                    int holdout, char** out);

/* Growth fit a(n) ~ kappa * rho^n / n^alpha for a named row, extended by
 * its recurrence (or a guessed one) to `terms` entries. Output is one
 * "key<TAB>value" line per fitted quantity: rho_ref, rho_hat, alpha_hat,
 * alpha_int, kappa_hat. */
CW_API int cw_asymptotics(const char* row, long terms, char** out);

/* ------------------------------------------------------------ bijections */

/* The fixed worked example of the palindrome encodings. */
CW_API int cw_bijection_demo(char** out);

#ifdef __cplusplus
}
#endif

#endif /* CROSSWALKS_H */
