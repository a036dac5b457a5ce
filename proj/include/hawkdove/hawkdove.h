/*
 * hawkdove: quantized Hawk-Dove game engine.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns an hdq_status, with HDQ_OK on success. On failure,
 * hdq_last_error() returns a human-readable message for the calling thread.
 *
 * Conventions: angles are radians; the entanglement parameter gamma lies in
 * [0, pi/4]; strategy angles (theta, phi) lie in [0, pi/2]. Measurement
 * outcomes are ordered DD, DH, HD, HH with the row player's result first.
 */

#ifndef HAWKDOVE_H
#define HAWKDOVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HDQ_API __declspec(dllexport)
#else
#define HDQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hdq_status {
  HDQ_OK = 0,
  /* Null handle or output pointer. */
  HDQ_ERROR_NULL_POINTER = 1,
  /* Range or payoff-hierarchy violation; see hdq_last_error(). */
  HDQ_ERROR_INVALID_ARGUMENT = 2,
  /* Internal failure; see hdq_last_error(). */
  HDQ_ERROR_INTERNAL = 3
} hdq_status;

/* Payoff structure handle: resource value v, injury cost i, display cost d
 * with the strict hierarchy 0 < 2d < v < i, plus the derived entries
 * a = (i-v)/2, b = v, c = v/2 - d. */
typedef struct hdq_game hdq_game;

/* Result of one equilibrium analysis, including the best-response set. */
typedef struct hdq_analysis hdq_analysis;

typedef struct hdq_outcome {
  double p_dd, p_dh, p_hd, p_hh;
  double payoff_row, payoff_col;
} hdq_outcome;

typedef struct hdq_classical_equilibrium {
  double hawk_prob;       /* mixed-ESS hawk probability p* */
  double average_payoff;  /* payoff per round at the resident mix */
} hdq_classical_equilibrium;

typedef enum hdq_restriction {
  HDQ_RESTRICT_NONE = 0,
  HDQ_RESTRICT_PHI_ZERO = 1,
  HDQ_RESTRICT_NAMED_VS_Q = 2
} hdq_restriction;

typedef struct hdq_validation_report {
  long samples;
  uint64_t seed;
  int restriction;        /* hdq_restriction */
  double tolerance;
  double max_deviation;
  int passed;             /* 1 if no sample exceeded the tolerance */
  /* Sample realizing the maximum deviation. */
  double worst_theta_row, worst_phi_row, worst_theta_col, worst_phi_col;
  double worst_gamma, worst_pipeline, worst_closed_form;
} hdq_validation_report;

typedef struct hdq_equilibrium_summary {
  double gamma;
  double gamma_critical;
  int grid_n;
  int qq_is_nash;
  int qq_is_ess;
  int qq_is_unique_best_response;
  int qq_is_pareto_optimal;
  hdq_classical_equilibrium classical_baseline;
  /* When the quantum pair is not Pareto optimal, one dominating strategy
   * pair and its payoffs. */
  int counterexample_found;
  double cx_theta_row, cx_phi_row, cx_theta_col, cx_phi_col;
  double cx_payoff_row, cx_payoff_col;
} hdq_equilibrium_summary;

HDQ_API const char* hdq_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
HDQ_API const char* hdq_last_error(void);

HDQ_API hdq_status hdq_game_create(double resource_value, double injury_cost,
                                   double display_cost, hdq_game** out);
HDQ_API void hdq_game_destroy(hdq_game* game);
HDQ_API hdq_status hdq_game_values(const hdq_game* game, double* v, double* i,
                                   double* d);
HDQ_API hdq_status hdq_game_derived(const hdq_game* game, double* a, double* b,
                                    double* c);

/* Expected payoffs of the classical 2x2 game under mixed strategies
 * (p, q are the row/column hawk probabilities). */
HDQ_API hdq_status hdq_classical_payoff(const hdq_game* game, double p,
                                        double q, double* payoff_row,
                                        double* payoff_col);

HDQ_API hdq_status hdq_classical_mixed_ess(const hdq_game* game,
                                           hdq_classical_equilibrium* out);

/* gamma_c = (1/2) arccos(sqrt(c/b)), always strictly inside (pi/8, pi/4). */
HDQ_API hdq_status hdq_critical_gamma(const hdq_game* game, double* out);

/* One quantized round: entangle, apply the players' unitaries, disentangle,
 * measure. Exact expected outcome distribution and payoffs. */
HDQ_API hdq_status hdq_play(const hdq_game* game, double theta_row,
                            double phi_row, double theta_col, double phi_col,
                            double gamma, hdq_outcome* out);

/* As hdq_play, additionally drawing `shots` measurement samples with the
 * given seed; counts[4] is filled in DD, DH, HD, HH order. */
HDQ_API hdq_status hdq_play_sampled(const hdq_game* game, double theta_row,
                                    double phi_row, double theta_col,
                                    double phi_col, double gamma,
                                    uint64_t shots, uint64_t seed,
                                    uint64_t counts[4], hdq_outcome* out);

/* Closed-form row payoff; agrees with hdq_play to machine precision
 * (audited by hdq_validate_closed_form). */
HDQ_API hdq_status hdq_closed_form_payoff(const hdq_game* game,
                                          double theta_row, double phi_row,
                                          double theta_col, double phi_col,
                                          double gamma, double* payoff_row);

HDQ_API hdq_status hdq_validate_closed_form(const hdq_game* game, long samples,
                                            double tolerance, int restriction,
                                            uint64_t seed,
                                            hdq_validation_report* out);

/* Equilibrium analysis of the quantum-vs-quantum pair at one gamma:
 * best responses on a grid_n x grid_n lattice with local refinement,
 * Nash/ESS verdicts, all-pairs Pareto scan, classical baseline. */
HDQ_API hdq_status hdq_analyze(const hdq_game* game, double gamma, int grid_n,
                               hdq_analysis** out);
HDQ_API void hdq_analysis_destroy(hdq_analysis* analysis);
HDQ_API hdq_status hdq_analysis_summary(const hdq_analysis* analysis,
                                        hdq_equilibrium_summary* out);
HDQ_API hdq_status hdq_analysis_best_response_count(
    const hdq_analysis* analysis, size_t* out);
HDQ_API hdq_status hdq_analysis_best_response(const hdq_analysis* analysis,
                                              size_t index, double* theta,
                                              double* phi, double* payoff);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HAWKDOVE_H */
