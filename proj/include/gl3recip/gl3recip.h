/* C interface to the gl3recip verification library. */
#ifndef GL3RECIP_H
#define GL3RECIP_H

#include <stddef.h>

#if defined(GL3RECIP_BUILDING)
#define G3R_API __attribute__((visibility("default")))
#else
#define G3R_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g3r_status {
    G3R_OK = 0,
    G3R_E_USAGE = 1,        /* unknown key, malformed value, parameters outside a verifier's preconditions */
    G3R_E_INVALID = 2,      /* invalid argument to a library function */
    G3R_E_DOMAIN = 3,       /* pole, composite modulus, non-invertible residue */
    G3R_E_REGION = 4,       /* outside a convergence margin */
    G3R_E_COMPLETENESS = 5, /* comparison above a truncation bound */
    G3R_E_CONVERGENCE = 6,  /* tail-stability check failed */
    G3R_E_INTERNAL = 7
} g3r_status;

typedef struct g3r_config g3r_config;
typedef struct g3r_result g3r_result;

G3R_API const char* g3r_version(void);
G3R_API const char* g3r_status_name(g3r_status status);
/* Message of the last failed call on this thread; empty after a successful call. */
G3R_API const char* g3r_last_error(void);

G3R_API g3r_status g3r_config_new(g3r_config** out);
G3R_API void g3r_config_free(g3r_config* config);
G3R_API g3r_status g3r_config_set(g3r_config* config, const char* key, const char* value);
/* Reads `key = value` lines; later g3r_config_set calls override file values. */
G3R_API g3r_status g3r_config_load_file(g3r_config* config, const char* path);

G3R_API size_t g3r_suite_count(void);
G3R_API const char* g3r_suite_name(size_t index);

G3R_API g3r_status g3r_verify(const g3r_config* config, const char* suite, g3r_result** out);
G3R_API void g3r_result_free(g3r_result* result);
G3R_API size_t g3r_result_count(const g3r_result* result);
G3R_API size_t g3r_result_passed(const g3r_result* result);
/* 1 when every report passed and there is at least one report. */
G3R_API int g3r_result_all_pass(const g3r_result* result);
/* Strings are owned by the result. */
G3R_API const char* g3r_result_json(const g3r_result* result);
G3R_API const char* g3r_result_text(const g3r_result* result);
G3R_API const char* g3r_result_summary(const g3r_result* result);

/* The returned string must be released with g3r_string_free. */
G3R_API g3r_status g3r_eval(const g3r_config* config, const char* function, char** out);
G3R_API void g3r_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
