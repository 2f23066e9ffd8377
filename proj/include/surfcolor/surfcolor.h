#ifndef SURFCOLOR_SURFCOLOR_H
#define SURFCOLOR_SURFCOLOR_H

/* C interface to the surfcolor library. Every call returns a status code;
 * on failure sc_last_error() describes the problem (per thread). Strings
 * handed out by the library are released with sc_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SURFCOLOR_API __declspec(dllexport)
#else
#define SURFCOLOR_API __attribute__((visibility("default")))
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_PARSE,
  SC_ERR_VALIDATION,
  SC_ERR_NON_CYCLE_CUFF,
  SC_ERR_INCONSISTENT_ROTATION,
  SC_ERR_SELF_LOOP_OR_MULTI_EDGE,
  SC_ERR_NOT_TWO_CELL,
  SC_ERR_NOT_A_DISK,
  SC_ERR_NOT_CONTRACTIBLE,
  SC_ERR_NOT_CYLINDER,
  SC_ERR_NOT_NEAR_PLANAR,
  SC_ERR_NOT_TRIANGLE_FREE,
  SC_ERR_SIZE_MISMATCH,
  SC_ERR_PRECONDITION,
  SC_ERR_ORACLE_CAP,
  SC_ERR_UNSUPPORTED_SURFACE,
  SC_ERR_BROKEN_CERTIFICATE,
  SC_ERR_TABLE_CAP,
  SC_ERR_NON_EXTENDABLE,
  SC_ERR_INTERNAL,
  SC_ERR_ARGUMENT
} sc_status;

typedef struct sc_instance sc_instance;

typedef struct sc_options {
  const char* eta; /* "p/q" or NULL for the default */
  int oracle_cap;  /* 0 for the default */
} sc_options;

SURFCOLOR_API const char* sc_version(void);
SURFCOLOR_API const char* sc_status_name(sc_status status);
SURFCOLOR_API const char* sc_last_error(void);
SURFCOLOR_API void sc_string_free(char* s);

SURFCOLOR_API sc_status sc_instance_parse(const char* text, sc_instance** out);
SURFCOLOR_API sc_status sc_instance_read(const char* path, sc_instance** out);
/* surface: sphere, disk, cylinder, projective-plane, torus, klein-bottle */
SURFCOLOR_API sc_status sc_instance_generate(const char* surface, int n,
                                             uint64_t seed, sc_instance** out);
SURFCOLOR_API void sc_instance_free(sc_instance* inst);

SURFCOLOR_API sc_status sc_instance_emit(const sc_instance* inst, char** out);
SURFCOLOR_API int sc_instance_vertex_count(const sc_instance* inst);
SURFCOLOR_API int sc_instance_edge_count(const sc_instance* inst);
/* Colors are indexed by vertex id in [0, capacity). */
SURFCOLOR_API int sc_instance_vertex_capacity(const sc_instance* inst);
/* color 0 clears the precoloring of v */
SURFCOLOR_API sc_status sc_instance_set_color(sc_instance* inst, int v,
                                              int color);

/* *yes is 1 or 0. json (may be NULL) receives
 * {"answer", "certificate"?, "stats"}. */
SURFCOLOR_API sc_status sc_decide(const sc_instance* inst,
                                  const sc_options* opts, int* yes,
                                  char** json);

/* colors must hold sc_instance_vertex_capacity entries. Returns
 * SC_ERR_NON_EXTENDABLE when the precoloring does not extend. */
SURFCOLOR_API sc_status sc_color(const sc_instance* inst,
                                 const sc_options* opts, int* colors,
                                 char** stats_json);

SURFCOLOR_API int sc_verify_coloring(const sc_instance* inst,
                                     const int* colors);

SURFCOLOR_API sc_status sc_analyze(const sc_instance* inst,
                                   const sc_options* opts, char** json);

#ifdef __cplusplus
}
#endif

#endif
