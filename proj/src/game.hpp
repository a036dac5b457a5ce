#pragma once

#include "common.hpp"

namespace hawkdove {

// Hawk-Dove payoff structure over resource value v, injury cost i and
// display cost d, with the derived entries a = (i-v)/2, b = v, c = v/2 - d:
//
//            H           D
//   H   (-a, -a)     (b, 0)
//   D    (0, b)      (c, c)
//
// Construction enforces the strict hierarchy 0 < 2d < v < i, which makes
// a, b, c > 0 and c < b/2.
class PayoffMatrix {
 public:
  // Throws std::invalid_argument naming the violated inequality.
  static PayoffMatrix make(double resource_value, double injury_cost,
                           double display_cost);

  double v() const { return v_; }
  double i() const { return i_; }
  double d() const { return d_; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  PayoffMatrix(double v, double i, double d);

  double v_, i_, d_;
  double a_, b_, c_;
};

struct PayoffPair {
  double row = 0.0;
  double col = 0.0;
};

// Bilinear expectation of the 2x2 game for mixed strategies: p and q are the
// row/column hawk probabilities. Throws std::domain_error outside [0,1].
PayoffPair classical_payoff(double p, double q, const PayoffMatrix& m);

struct ClassicalEquilibrium {
  double hawk_prob = 0.0;       // p* in (0,1)
  double average_payoff = 0.0;  // payoff per round at the resident mix, < c
};

// Mixed evolutionarily stable strategy of the classical game:
// p* = (v+2d)/(i+2d), average payoff ((i-v)/(i+2d)) * (v/2 - d).
ClassicalEquilibrium classical_mixed_ess(const PayoffMatrix& m);

}  // namespace hawkdove
