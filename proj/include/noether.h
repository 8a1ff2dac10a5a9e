/*
 * noether - exact toolkit for polynomial ideals, Noetherian operators and
 * degree-bounded membership certificates.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every function returns a noe_status, with results
 * passed through out-parameters. Strings returned through noe_* functions
 * are malloc'd copies; release them with noe_string_free. On any error the
 * thread-local message from noe_last_error() describes what went wrong.
 */

#ifndef NOETHER_H
#define NOETHER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum noe_status {
  NOE_OK = 0,
  NOE_ERR_USAGE = 1,          /* bad arguments or invocation */
  NOE_ERR_PARSE = 2,          /* expression / JSON syntax error */
  NOE_ERR_CONTEXT = 3,        /* operands from different variable contexts */
  NOE_ERR_DOMAIN = 4,         /* precondition violated (non-homogeneous, ...) */
  NOE_ERR_RESOURCE = 5,       /* degree / step / size cap exceeded */
  NOE_ERR_GENERICITY = 6,     /* randomized choice failed its checks */
  NOE_ERR_LINKAGE = 7,        /* ideal not unmixed: double-link check failed */
  NOE_ERR_IO = 8,             /* file system problem */
  NOE_ERR_INTERNAL = 9        /* library invariant violated */
} noe_status;

typedef struct noe_context noe_context;   /* variable context */
typedef struct noe_poly noe_poly;         /* polynomial value */
typedef struct noe_ideal noe_ideal;       /* ideal presentation */
typedef struct noe_basis noe_basis;       /* reduced Groebner basis */
typedef struct noe_session noe_session;   /* loaded session file */
typedef struct noe_run noe_run;           /* one subcommand run (report) */

const char* noe_version(void);

/* Thread-local message for the most recent failing call. */
const char* noe_last_error(void);

void noe_string_free(char* s);

/* ---- contexts and polynomials ------------------------------------- */

/* names: array of NUL-terminated variable names; hom_name may be NULL or
 * one of the names (the homogenizing variable). */
noe_status noe_context_new(const char* const* names, size_t n_names,
                           const char* hom_name, noe_context** out);
void noe_context_free(noe_context* ctx);

noe_status noe_poly_parse(const noe_context* ctx, const char* text, noe_poly** out);
noe_status noe_poly_to_string(const noe_poly* p, char** out);
noe_status noe_poly_add(const noe_poly* a, const noe_poly* b, noe_poly** out);
noe_status noe_poly_sub(const noe_poly* a, const noe_poly* b, noe_poly** out);
noe_status noe_poly_mul(const noe_poly* a, const noe_poly* b, noe_poly** out);
noe_status noe_poly_derivative(const noe_poly* p, const char* var, noe_poly** out);
noe_status noe_poly_homogenize(const noe_poly* p, int target_degree, noe_poly** out);
noe_status noe_poly_dehomogenize(const noe_poly* p, noe_poly** out);
noe_status noe_poly_degree(const noe_poly* p, int* out);
int noe_poly_equal(const noe_poly* a, const noe_poly* b);
void noe_poly_free(noe_poly* p);

/* ---- ideals and the Groebner engine -------------------------------- */

noe_status noe_ideal_new(const noe_context* ctx, const noe_poly* const* gens,
                         size_t n_gens, noe_ideal** out);
noe_status noe_ideal_set_radical_generators(noe_ideal* ideal,
                                            const noe_poly* const* gens, size_t n_gens);
void noe_ideal_free(noe_ideal* ideal);

/* order: "lex", "grevlex" or "graded-lex". */
noe_status noe_groebner(const noe_ideal* ideal, const char* order, noe_basis** out);
noe_status noe_basis_size(const noe_basis* basis, size_t* out);
noe_status noe_basis_element(const noe_basis* basis, size_t i, noe_poly** out);
void noe_basis_free(noe_basis* basis);

noe_status noe_normal_form(const noe_poly* p, const noe_basis* basis, noe_poly** out);
noe_status noe_is_member(const noe_poly* p, const noe_ideal* ideal, int* out);
noe_status noe_is_radical_member(const noe_poly* p, const noe_ideal* ideal, int* out);
noe_status noe_dimension(const noe_ideal* ideal, int* out);
noe_status noe_quotient(const noe_ideal* ideal, const noe_poly* f, noe_ideal** out);
noe_status noe_saturation(const noe_ideal* ideal, const noe_poly* f, noe_ideal** out);
noe_status noe_homogeneous_closure(const noe_ideal* ideal, noe_ideal** out);
noe_status noe_ideal_size(const noe_ideal* ideal, size_t* out);
noe_status noe_ideal_generator(const noe_ideal* ideal, size_t i, noe_poly** out);

/* Castelnuovo-Mumford regularity of ctx/I for a homogeneous ideal. */
noe_status noe_regularity(const noe_ideal* ideal, int* out);

/* ---- sessions and subcommand runs ----------------------------------- */

noe_status noe_session_load_file(const char* path, noe_session** out);
noe_status noe_session_load_json(const char* json_text, noe_session** out);
void noe_session_free(noe_session* session);

/* Runs one CLI subcommand, e.g. argv = {"certify", "--session", "demo.json",
 * "--instance", "nss1"}. Always produces a run handle when the arguments
 * were understood; inspect the exit code and report. */
noe_status noe_run_argv(int argc, const char* const* argv, noe_run** out);

/* Borrowed pointers, valid until noe_run_free. */
const char* noe_run_report_json(const noe_run* run);
const char* noe_run_diagnostics(const noe_run* run);
const char* noe_run_out_path(const noe_run* run); /* NULL when --out absent */
int noe_run_exit_code(const noe_run* run);
void noe_run_free(noe_run* run);

/* Re-checks the identities embedded in a report (certificate expansion,
 * S-pair reduction, complex composition). *ok is 1 when all pass. */
noe_status noe_verify_report(const char* report_json, const char* session_json, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* NOETHER_H */
