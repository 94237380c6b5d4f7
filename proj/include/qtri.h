/* C interface for the qtri exact q-series verification library.
 *
 * Every object is an opaque handle created and destroyed by the library;
 * functions return QTRI_OK (0) or a nonzero error code. String pointers
 * returned from accessors stay valid as long as the owning handle lives. */

#ifndef QTRI_H
#define QTRI_H

#ifdef __cplusplus
extern "C" {
#endif

#define QTRI_OK 0
#define QTRI_ERR_BAD_ARGUMENT 1
#define QTRI_ERR_UNKNOWN_IDENTITY 2
#define QTRI_ERR_SCHEMA 3
#define QTRI_ERR_UNKNOWN_NAME 4
#define QTRI_ERR_EVAL 5

typedef struct qtri_catalog qtri_catalog;
typedef struct qtri_result qtri_result;
typedef struct qtri_series qtri_series;

const char* qtri_version(void);
const char* qtri_strerror(int code);

/* ---- catalog and schema introspection ---- */

qtri_catalog* qtri_catalog_new(void);
void qtri_catalog_free(qtri_catalog* cat);

int qtri_catalog_count(const qtri_catalog* cat);
/* index of an identity id, or -1 */
int qtri_catalog_find(const qtri_catalog* cat, const char* id);
const char* qtri_catalog_id(const qtri_catalog* cat, int index);
/* 0 = polynomial, 1 = series */
int qtri_catalog_kind(const qtri_catalog* cat, int index);
const char* qtri_catalog_description(const qtri_catalog* cat, int index);

int qtri_catalog_param_count(const qtri_catalog* cat, int index);
const char* qtri_catalog_param_name(const qtri_catalog* cat, int index, int param);
long long qtri_catalog_param_min(const qtri_catalog* cat, int index, int param);
/* 1 when the parameter has an upper bound (written to *max) */
int qtri_catalog_param_max(const qtri_catalog* cat, int index, int param, long long* max);
long long qtri_catalog_param_default_lo(const qtri_catalog* cat, int index, int param);
long long qtri_catalog_param_default_hi(const qtri_catalog* cat, int index, int param);

/* ---- single-instance verification ---- */

/* Evaluates both sides of the identity at the given parameter binding and
 * compares them (exactly for polynomial kind, through the `order` parameter
 * for series kind). The result handle must be freed by the caller. */
int qtri_verify_instance(const qtri_catalog* cat, const char* id,
                         const char* const* names, const long long* values,
                         int n_params, qtri_result** out);

void qtri_result_free(qtri_result* r);
int qtri_result_pass(const qtri_result* r);
int qtri_result_has_mismatch(const qtri_result* r);
/* lowest differing exponent, doubled so half-integer exponents stay integral */
long long qtri_result_mismatch_exponent_twice(const qtri_result* r);
/* decimal coefficient strings at the first mismatch */
const char* qtri_result_mismatch_lhs(const qtri_result* r);
const char* qtri_result_mismatch_rhs(const qtri_result* r);
double qtri_result_millis(const qtri_result* r);

/* ---- series coefficient tables ---- */

/* name is either "<id>.lhs" / "<id>.rhs" for a series-kind identity, or a
 * named product: "euler_product", "kr1_product". Extra parameters (for
 * example nu) come from names/values; unspecified ones use their schema
 * defaults. Coefficients are indexed by whole powers of q. */
int qtri_series_eval(const qtri_catalog* cat, const char* name, long long order,
                     const char* const* names, const long long* values,
                     int n_params, qtri_series** out);

void qtri_series_free(qtri_series* s);
long long qtri_series_order(const qtri_series* s);
/* decimal coefficient of q^n, or NULL when n is out of range */
const char* qtri_series_coeff(const qtri_series* s, long long n);

#ifdef __cplusplus
}
#endif

#endif /* QTRI_H */
