/* C interface to the algebraic quantum group checker.
 *
 * Every call returns an aqg_status. Output strings are allocated by the library
 * and must be released with aqg_string_free. After a non-OK status,
 * aqg_last_error() describes the failure until the next call on the same thread.
 */
#ifndef AQG_AQG_H
#define AQG_AQG_H

#include <stddef.h>

#if defined(AQG_BUILDING_LIBRARY)
#define AQG_API __attribute__((visibility("default")))
#else
#define AQG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  AQG_OK = 0,
  AQG_FALSIFIED = 2,    /* an axiom or identity failed; the output carries the witness */
  AQG_INPUT_ERROR = 3,  /* malformed JSON, wrong shapes, dimension limit, unknown model */
  AQG_INTERNAL_ERROR = 4
} aqg_status;

typedef enum { AQG_FORMAT_TEXT = 0, AQG_FORMAT_JSON = 1 } aqg_format;

/* Parsed but not yet validated spec; validation failures surface from the commands. */
typedef struct aqg_spec aqg_spec;

AQG_API aqg_status aqg_spec_load_file(const char* path, size_t max_dim, aqg_spec** out);
AQG_API aqg_status aqg_spec_load_string(const char* json_text, size_t max_dim, aqg_spec** out);
AQG_API void aqg_spec_free(aqg_spec* spec);
AQG_API size_t aqg_spec_dim(const aqg_spec* spec);

/* Full suite. The report is written even when the status is AQG_FALSIFIED. */
AQG_API aqg_status aqg_check(const aqg_spec* spec, aqg_format format, char** report);
/* Integrals and modular data; with run_checks the stage report is included. */
AQG_API aqg_status aqg_haar(const aqg_spec* spec, aqg_format format, int run_checks, char** out);
/* Spec JSON of the dual, ready to be loaded again. */
AQG_API aqg_status aqg_dual(const aqg_spec* spec, char** spec_json);
/* Without verify: spec JSON of the dual of the dual. With verify: the biduality report. */
AQG_API aqg_status aqg_bidual(const aqg_spec* spec, int verify, aqg_format format, char** out);
AQG_API aqg_status aqg_universal(const aqg_spec* spec, aqg_format format, char** out);
/* corep_json: {"target": {"dim", "sc", "star"?}, "V": {"L", "R"} | {"element"}} */
AQG_API aqg_status aqg_corep_verify(const aqg_spec* spec, const char* corep_json, size_t max_dim, aqg_format format,
                                    char** out);
/* Built-in models by name; names is a newline separated list. */
AQG_API aqg_status aqg_model_spec(const char* name, char** spec_json);
AQG_API aqg_status aqg_model_names(char** names);

AQG_API void aqg_string_free(char* s);
AQG_API const char* aqg_last_error(void);
AQG_API const char* aqg_version(void);

#ifdef __cplusplus
}
#endif

#endif
