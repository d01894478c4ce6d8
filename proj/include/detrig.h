/* detrig - exact analysis of monomial deformations of determinantal
 * factorizations. C interface of the shared library: opaque handles,
 * integer status codes, JSON strings for structured data. Strings returned
 * through char** are owned by the caller and released with
 * detrig_string_free; handles are released with their _free function.
 * On any non-zero status, detrig_last_error() describes the failure
 * (thread-local storage). */

#ifndef DETRIG_H
#define DETRIG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DETRIG_OK = 0,
  DETRIG_ERR_PARSE = 1,
  DETRIG_ERR_INVALID = 2,
  DETRIG_ERR_UNRECOVERABLE = 3,
  DETRIG_ERR_INTERNAL = 4
} detrig_status;

typedef enum {
  DETRIG_VERDICT_RIGID = 0,
  DETRIG_VERDICT_NON_INTEGRABLE = 2,
  DETRIG_VERDICT_INCONCLUSIVE = 3
} detrig_verdict;

typedef struct detrig_doc detrig_doc;
typedef struct detrig_report detrig_report;

typedef struct {
  uint64_t seed;      /* deterministic seed for sampled witnesses */
  long cache_cap;     /* subset cap for full minor tables (0 = default) */
  int exhaustive;     /* reserved; analyses are exhaustive up to cache_cap */
} detrig_options;

void detrig_options_init(detrig_options* opts);

/* ---- documents ({"vars", "k", "n", "L", "R"} JSON) ---- */
detrig_status detrig_doc_parse(const char* json_text, detrig_doc** out);
detrig_status detrig_doc_read(const char* path, detrig_doc** out);
detrig_status detrig_doc_to_json(const detrig_doc* doc, char** json_out);
void detrig_doc_free(detrig_doc* doc);

/* ---- analysis ---- */
detrig_status detrig_analyze(const detrig_doc* doc, const detrig_options* opts,
                             detrig_report** out);
detrig_verdict detrig_report_verdict(const detrig_report* rep);
detrig_status detrig_report_to_json(const detrig_report* rep, char** json_out);
void detrig_report_free(detrig_report* rep);

/* Exponent reconstruction (psi, m0) as JSON; fails with
 * DETRIG_ERR_UNRECOVERABLE when the instance is not integrable. */
detrig_status detrig_psi(const detrig_doc* doc, const detrig_options* opts, char** json_out);

/* Canonical factor pair (L*, R*) as a new document. */
detrig_status detrig_canonical(const detrig_doc* doc, detrig_doc** out);

/* ---- generators ----
 * family: "principal-minor" (params {"k"}), "weak-keys" ({"k","p"}),
 * "odd-type" ({"c"}), "planar-key" ({"k"}). params_json may be NULL for
 * defaults. */
detrig_status detrig_gen(const char* family, const char* params_json, uint64_t seed,
                         detrig_doc** out);

/* Ranking demonstration on the principal-minor family; psi is a list of
 * 2k pairwise distinct integers. */
detrig_status detrig_iia_demo(int k, const int64_t* psi, int psi_len, uint64_t seed,
                              char** json_out);

/* Appendix replication table; *all_ok is 1 when every row matches. */
detrig_status detrig_verify_appendix(char** json_out, int* all_ok);

const char* detrig_last_error(void);
void detrig_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DETRIG_H */
