#pragma once

#include <optional>
#include <vector>

#include "protocol.hpp"

namespace hawkdove {

// Critical entanglement gamma_c = (1/2) arccos(sqrt(c/b)); strictly inside
// (pi/8, pi/4) for every valid payoff matrix. Above it the quantum strategy
// pair replaces the hawk response as the best reply to itself.
double critical_gamma(const PayoffMatrix& m);

struct BestResponse {
  Strategy strategy;
  double payoff;
};

// Upper bounds of the search lattice, for restricted exploration (e.g. the
// classical phi = 0 slice). Never above pi/2.
struct SearchBounds {
  double theta_max = kHalfPi;
  double phi_max = kHalfPi;
};

// Best responses to a fixed opponent: evaluates the pipeline on a
// grid_n x grid_n lattice over [0, theta_max] x [0, phi_max], refines each
// lattice maximum by coordinate ascent, and returns every maximizer whose
// refined payoff lies within kTieTol of the global maximum, sorted by
// (theta, phi) and de-duplicated. Strategies with theta at pi/2 are reported
// with phi = 0 since the phase is unobservable there.
std::vector<BestResponse> best_responses(const Strategy& opponent,
                                         double gamma, const PayoffMatrix& m,
                                         int grid_n, SearchBounds bounds = {});

// Nash test by best-response membership: each component must earn within
// kTieTol of the best achievable payoff against the other.
bool is_nash(const Strategy& row, const Strategy& col, double gamma,
             const PayoffMatrix& m, int grid_n);

// Maynard Smith's two conditions against every lattice mutant T != s:
// either payoff(s,s) beats payoff(T,s) strictly, or they tie and s beats T
// in the post-invasion game payoff(s,T) > payoff(T,T).
bool is_ess(const Strategy& s, double gamma, const PayoffMatrix& m, int grid_n,
            SearchBounds bounds = {});

struct ParetoCounterexample {
  Strategy row_strategy;
  Strategy col_strategy;
  double payoff_row;
  double payoff_col;
};

struct ParetoResult {
  bool optimal = false;
  std::optional<ParetoCounterexample> dominator;
};

// All-pairs dominance scan over the strategy lattice: the pair's outcome is
// Pareto optimal iff no lattice pair pays both players at least kTieTol more
// with one strictly more. Uses the closed-form fast path (cross-validated
// against the pipeline by validate_closed_form).
ParetoResult pareto_check(const Strategy& row, const Strategy& col,
                          double gamma, const PayoffMatrix& m, int grid_n);

bool is_pareto_optimal(const Strategy& row, const Strategy& col, double gamma,
                       const PayoffMatrix& m, int grid_n);

struct EquilibriumReport {
  double gamma = 0.0;
  double gamma_critical = 0.0;
  int grid_n = 0;
  std::vector<BestResponse> best_responses_to_q;
  bool qq_is_nash = false;
  bool qq_is_ess = false;
  bool qq_is_unique_best_response = false;
  bool qq_is_pareto_optimal = false;
  std::optional<ParetoCounterexample> pareto_counterexample;
  ClassicalEquilibrium classical_baseline;
};

// Full verdict sheet for the quantum-vs-quantum pair at one entanglement
// value, plus the classical baseline.
EquilibriumReport analyze(double gamma, const PayoffMatrix& m, int grid_n);

inline constexpr int kDefaultGridN = 181;

}  // namespace hawkdove
