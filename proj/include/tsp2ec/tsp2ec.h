/*
 * C API of the tsp2ec library: exact TSP / 2ECM solvers, LP relaxations,
 * cut-margin certificates, and the open-problem search pipeline behind
 * opaque handles and status codes.
 *
 * Conventions:
 *  - Every function returning tsp2ec_status reports failure details through
 *    tsp2ec_last_error() (thread-local message).
 *  - Strings returned through char** out-parameters are heap-allocated and
 *    must be released with tsp2ec_string_free().
 *  - All numeric payloads inside returned JSON are exact rationals encoded
 *    as "p/q" strings; no floating point appears anywhere.
 */
#ifndef TSP2EC_H
#define TSP2EC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tsp2ec_instance tsp2ec_instance;

typedef enum tsp2ec_status {
  TSP2EC_OK = 0,
  TSP2EC_VERIFY_FAILED = 1, /* certificate checked and rejected */
  TSP2EC_ERR_INPUT = 2,     /* parse/validation/config error */
  TSP2EC_ERR_TOO_LARGE = 3, /* instance exceeds a size bound */
  TSP2EC_ERR_INTERNAL = 4
} tsp2ec_status;

/* ---- instances ---------------------------------------------------- */

/* Parses the text or JSON instance format. */
tsp2ec_status tsp2ec_instance_parse(const char* text, tsp2ec_instance** out);
tsp2ec_status tsp2ec_instance_read_file(const char* path, tsp2ec_instance** out);
/* as_json != 0 emits the JSON form, otherwise the canonical text form. */
tsp2ec_status tsp2ec_instance_serialize(const tsp2ec_instance* instance, int as_json,
                                        char** out_text);
int tsp2ec_instance_vertex_count(const tsp2ec_instance* instance);
void tsp2ec_instance_free(tsp2ec_instance* instance);

/* ---- solvers ------------------------------------------------------ */

/* problem: "tsp-ip" | "2ecm-ip" | "lp" | "2ecm-lp-nodeg". */
tsp2ec_status tsp2ec_solve(const tsp2ec_instance* instance, const char* problem, char** out_json);

/* ---- certificates -------------------------------------------------- */

/* certificate_json: {"tour": [...], "family": [[...], ...], "epsilon": "p/q"?}
 * The file is never trusted; everything is re-verified. Returns TSP2EC_OK on
 * a verified certificate, TSP2EC_VERIFY_FAILED with a witness report
 * otherwise. */
tsp2ec_status tsp2ec_certify(const tsp2ec_instance* instance, const char* certificate_json,
                             char** out_json);

/* Builds the family as the prefix chain of `chain_spec` ("1,2;4" segments in
 * tour order from `root`) plus singleton coverage repair. tour_csv is a
 * comma-separated vertex order, or NULL for the identity tour 0,1,...,n-1. */
tsp2ec_status tsp2ec_certify_chain(const tsp2ec_instance* instance, const char* tour_csv,
                                   const char* chain_spec, int root, char** out_json);

/* ---- gap / transfer reports ---------------------------------------- */

/* Full transfer report; with a chain_spec the bypass table and the
 * conditional LP-value formula report are included. */
tsp2ec_status tsp2ec_gap_report(const tsp2ec_instance* instance, const char* tour_csv,
                                const char* chain_spec, int root, char** out_json);

/* ---- search --------------------------------------------------------- */

/* config_json fields: seed, count, n_min, n_max, generator
 * ("random-metric" | "graph-completion" | "certified-perturbation"),
 * denominator_bound, workers, outcomes_path, summary_path, witness_dir,
 * graph: {family, param, random_weights}. Returns the summary JSON. */
tsp2ec_status tsp2ec_search_run(const char* config_json, char** out_summary_json);

/* Re-verifies a witness artifact (JSON with an embedded instance). */
tsp2ec_status tsp2ec_reverify_witness(const char* witness_json, char** out_json);

/* ---- configuration --------------------------------------------------- */

/* Enumeration / LP size bounds; pass 0 to keep a current value. Not
 * thread-safe against concurrent solves. */
void tsp2ec_set_bounds(int tsp_max_n, int ecm_max_n, int lp_max_n, int half_integral_max_n);

const char* tsp2ec_last_error(void);
void tsp2ec_string_free(char* text);
const char* tsp2ec_version(void);

#ifdef __cplusplus
}
#endif

#endif /* TSP2EC_H */
