#pragma once

#include <complex>
#include <numbers>

namespace hawkdove {

using Cx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kQuarterPi = kPi / 4.0;

// Absolute per-component tolerance for all equality checks on amplitudes,
// probabilities and matrix entries. Single knob for the whole library.
inline constexpr double kComponentTol = 1e-12;

// Payoff-space tolerance separating genuine ties (gamma == gamma_c) from
// floating-point noise in best-response and ESS comparisons.
inline constexpr double kTieTol = 1e-9;

// Payoff-space convergence tolerance of the local refinement step.
inline constexpr double kRefineTol = 1e-10;

}  // namespace hawkdove
