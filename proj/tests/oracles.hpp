#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: a truncated-series matrix exponential for the entangler, and
// random input generators.

#include <cmath>
#include <random>

#include "game.hpp"
#include "quantum.hpp"

namespace hawkdove::testing {

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

// exp(M) by the power series, truncated once terms fall below 1e-20.
inline Mat4 mat4_exp(const Mat4& m) {
  Mat4 result = identity4();
  Mat4 term = identity4();
  for (int k = 1; k <= 80; ++k) {
    term = mul(term, m);
    double scale = 1.0 / static_cast<double>(k);
    double largest = 0.0;
    for (auto& entry : term.e) {
      entry *= scale;
      largest = std::max(largest, std::abs(entry));
    }
    for (int idx = 0; idx < 16; ++idx) result.e[idx] += term.e[idx];
    if (largest < 1e-20) break;
  }
  return result;
}

// exp(i gamma H(x)H) via the generic series; the reference the closed-form
// entangler is compared against.
inline Mat4 entangler_series(double gamma) {
  Mat4 k = kron(hawk_op(), hawk_op());
  for (auto& entry : k.e) entry *= Cx(0.0, gamma);
  return mat4_exp(k);
}

inline PayoffMatrix random_matrix(std::mt19937_64& gen) {
  const double v = uniform(gen, 1.0, 100.0);
  const double i = v * uniform(gen, 1.05, 4.0);
  const double d = v * uniform(gen, 0.05, 0.45);
  return PayoffMatrix::make(v, i, d);
}

}  // namespace hawkdove::testing
