#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "game.hpp"
#include "strategy.hpp"

namespace hawkdove {

// Joint measurement distribution of one quantized round plus both players'
// expected payoffs. Probabilities sum to 1 within kComponentTol and are
// clamped to [0,1]; payoff_row = c*p_dd + b*p_hd - a*p_hh, payoff_col the
// same with p_hd replaced by p_dh.
struct GameOutcome {
  double p_dd = 0.0;
  double p_dh = 0.0;
  double p_hd = 0.0;
  double p_hh = 0.0;
  double payoff_row = 0.0;
  double payoff_col = 0.0;
};

// Full quantization pipeline: prepare |DD>, entangle with J(gamma), apply
// the local strategy unitaries, disentangle with J^dagger, measure in the
// computational basis and score. This state-vector route is the library's
// ground truth; closed_form_payoff below is the fast path checked against it.
GameOutcome play(const Strategy& row, const Strategy& col, double gamma,
                 const PayoffMatrix& m);

// Closed-form row payoff, algebraically equal to play(...).payoff_row.
double closed_form_payoff(const Strategy& row, const Strategy& col,
                          double gamma, const PayoffMatrix& m);

// Closed-form joint distribution and payoffs (same trigonometric route);
// used by the all-pairs Pareto scan where the matrix pipeline is too slow.
GameOutcome closed_form_outcome(const Strategy& row, const Strategy& col,
                                double gamma, const PayoffMatrix& m);

enum class SampleRestriction {
  kNone,       // all five parameters random
  kPhiZero,    // phi_row = phi_col = 0
  kNamedVsQ,   // dove/hawk/quantum (cycled) against the quantum strategy
};

struct ValidationCase {
  double theta_row = 0.0, phi_row = 0.0;
  double theta_col = 0.0, phi_col = 0.0;
  double gamma = 0.0;
  double pipeline = 0.0;
  double closed_form = 0.0;
};

struct ValidationReport {
  long samples = 0;
  std::uint64_t seed = 0;
  SampleRestriction restriction = SampleRestriction::kNone;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  ValidationCase worst_case;
  // First sampled input whose deviation exceeds the tolerance, if any.
  std::optional<ValidationCase> first_failure;

  bool passed() const { return !first_failure.has_value(); }
};

// Compares closed_form_payoff against play over random inputs. Deterministic
// for a fixed seed (the generator maps raw mt19937_64 output to doubles, so
// the report does not depend on the standard library's distributions).
ValidationReport validate_closed_form(long samples, double tolerance,
                                      const PayoffMatrix& m,
                                      SampleRestriction restriction,
                                      std::uint64_t seed);

// Monte Carlo demonstration mode: draws measurement outcomes from the exact
// distribution. Counts are ordered DD, DH, HD, HH.
std::array<std::uint64_t, 4> sample_counts(const GameOutcome& outcome,
                                           std::uint64_t shots,
                                           std::uint64_t seed);

}  // namespace hawkdove
