/* Licensed under the Apache License 2.0 (see LICENSE file). */

/*
 * C interface to the offloading-game engine. All functions return a status
 * code; on failure mco_last_error() carries a human-readable message for
 * the calling thread. Handles are opaque and freed with their matching
 * _free function; strings returned through char** are allocated by the
 * library and freed with mco_string_free.
 *
 * Structured inputs and outputs travel as UTF-8 JSON documents so the
 * surface stays stable while the engine evolves. Decision profiles travel
 * as bit strings like "0110", user 0 first, '1' = offload.
 */

#ifndef MCO_H
#define MCO_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(MCO_BUILD)
#define MCO_API __declspec(dllexport)
#else
#define MCO_API __declspec(dllimport)
#endif
#else
#if defined(MCO_BUILD)
#define MCO_API __attribute__((visibility("default")))
#else
#define MCO_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mco_status {
  MCO_OK = 0,
  MCO_ERR_INVALID_ARGUMENT = 1,
  MCO_ERR_OUT_OF_RANGE = 2,
  MCO_ERR_NOT_HOMOGENEOUS = 3,
  MCO_ERR_CAPACITY = 4,
  MCO_ERR_PARSE = 5,
  MCO_ERR_IO = 6,
  MCO_ERR_INTERNAL = 7
} mco_status;

typedef struct mco_scenario mco_scenario;
typedef struct mco_trace mco_trace;

MCO_API const char* mco_version(void);
MCO_API const char* mco_status_name(mco_status status);

/* Message for the last failing call on this thread; empty string if none. */
MCO_API const char* mco_last_error(void);

MCO_API void mco_string_free(char* text);

/* ---- scenarios ---------------------------------------------------- */

MCO_API mco_status mco_scenario_from_json(const char* json_text, mco_scenario** out);

/* Builds a random cell from a generator-spec JSON document (all fields
 * optional except users; the seed defaults to 0). */
MCO_API mco_status mco_scenario_generate(const char* generator_json, mco_scenario** out);

MCO_API mco_status mco_scenario_to_json(const mco_scenario* s, char** out_text);
MCO_API size_t mco_scenario_user_count(const mco_scenario* s);
MCO_API void mco_scenario_free(mco_scenario* s);

/* ---- per-user model ------------------------------------------------ */

MCO_API mco_status mco_uplink_rate(const mco_scenario* s, const char* profile,
                                   size_t user, double* out_bits_per_s);
MCO_API mco_status mco_interference(const mco_scenario* s, const char* profile,
                                    size_t user, double* out_watts);
MCO_API mco_status mco_user_overhead(const mco_scenario* s, const char* profile,
                                     size_t user, double* out_cost);
MCO_API mco_status mco_system_cost(const mco_scenario* s, const char* profile,
                                   double* out_cost);

/* out_never is 1 when no uplink rate can make offloading worthwhile; the
 * threshold value is then negative infinity. */
MCO_API mco_status mco_threshold(const mco_scenario* s, size_t user,
                                 double* out_watts, int* out_never);

/* ---- game logic ----------------------------------------------------- */

MCO_API mco_status mco_best_response(const mco_scenario* s, const char* profile,
                                     size_t user, int* out_offload);

/* out_has = 0 when the user has no strictly improving move; otherwise
 * out_move is the improving decision (1 = offload). */
MCO_API mco_status mco_improvement_set(const mco_scenario* s, const char* profile,
                                       size_t user, int* out_has, int* out_move);

MCO_API mco_status mco_is_nash(const mco_scenario* s, const char* profile, int* out);
MCO_API mco_status mco_potential(const mco_scenario* s, const char* profile,
                                 double* out);

/* JSON array of profile strings, lexicographically ordered. */
MCO_API mco_status mco_enumerate_equilibria(const mco_scenario* s, size_t cap,
                                            char** out_json);

/* Sorted view, beneficial group and constructed equilibrium for a
 * homogeneous scenario (equal received powers). */
MCO_API mco_status mco_homogeneous_report(const mco_scenario* s, char** out_json);

/* ---- decentralized mechanism ---------------------------------------- */

/* config_json keys: quiet_slots, contention ("uniform-backoff" or
 * "seeded-random-winner"), seed, max_slots; all optional. */
MCO_API mco_status mco_run_mechanism(const mco_scenario* s, const char* config_json,
                                     mco_trace** out);

MCO_API mco_status mco_trace_summary(const mco_trace* t, char** out_json);

/* One line per slot: t,winner,profile,potential,system-cost,messages. */
MCO_API mco_status mco_trace_lines(const mco_trace* t, char** out_text);

MCO_API size_t mco_trace_slot_count(const mco_trace* t);
MCO_API void mco_trace_free(mco_trace* t);

/* ---- benchmarks ------------------------------------------------------ */

MCO_API mco_status mco_centralized_optimum(const mco_scenario* s, size_t exhaustive_cap,
                                           char** out_json);
MCO_API mco_status mco_equilibrium_report(const mco_scenario* s, size_t cap,
                                          char** out_json);
MCO_API mco_status mco_poa_bound(const mco_scenario* s, double* out);

/* ---- experiments ----------------------------------------------------- */

/* opts_json: {"experiment": "convergence"|"sweep_d"|"sweep_b"|"scaling",
 *             "generator": {...}, "mechanism": {...},
 *             "grid": [...],                  (sweeps)
 *             "users_grid": [...], "compute_optimum": bool,
 *             "exhaustive_cap": n,            (scaling)
 *             "trials": n}
 * Returns the full experiment result document. */
MCO_API mco_status mco_experiment_run(const char* opts_json, char** out_json);

/* Writes CSV, schema sidecars, result JSON and optionally an SVG chart
 * into out_dir; out_files_json receives a JSON array of written paths. */
MCO_API mco_status mco_result_emit(const char* result_json, const char* out_dir,
                                   int with_svg, char** out_files_json);

#ifdef __cplusplus
}
#endif

#endif /* MCO_H */
