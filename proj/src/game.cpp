#include "game.hpp"

#include <sstream>
#include <stdexcept>

namespace hawkdove {

namespace {

[[noreturn]] void fail_hierarchy(const char* inequality, double v, double i,
                                 double d) {
  std::ostringstream os;
  os << "payoff hierarchy violated: require " << inequality << " (got v=" << v
     << ", i=" << i << ", d=" << d << ")";
  throw std::invalid_argument(os.str());
}

}  // namespace

PayoffMatrix PayoffMatrix::make(double resource_value, double injury_cost,
                                double display_cost) {
  const double v = resource_value, i = injury_cost, d = display_cost;
  if (!(0.0 < 2.0 * d)) fail_hierarchy("0 < 2d", v, i, d);
  if (!(2.0 * d < v)) fail_hierarchy("2d < v", v, i, d);
  if (!(v < i)) fail_hierarchy("v < i", v, i, d);
  return PayoffMatrix(v, i, d);
}

PayoffMatrix::PayoffMatrix(double v, double i, double d)
    : v_(v), i_(i), d_(d), a_((i - v) / 2.0), b_(v), c_(v / 2.0 - d) {}

PayoffPair classical_payoff(double p, double q, const PayoffMatrix& m) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("classical_payoff: probabilities must lie in [0,1]");
  }
  const auto row_payoff = [&m](double hp, double hq) {
    return -m.a() * hp * hq + m.b() * hp * (1.0 - hq) +
           m.c() * (1.0 - hp) * (1.0 - hq);
  };
  return PayoffPair{row_payoff(p, q), row_payoff(q, p)};
}

ClassicalEquilibrium classical_mixed_ess(const PayoffMatrix& m) {
  ClassicalEquilibrium eq;
  eq.hawk_prob = (m.v() + 2.0 * m.d()) / (m.i() + 2.0 * m.d());
  eq.average_payoff =
      ((m.i() - m.v()) / (m.i() + 2.0 * m.d())) * (m.v() / 2.0 - m.d());
  return eq;
}

}  // namespace hawkdove
