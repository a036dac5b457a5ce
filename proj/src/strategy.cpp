#include "strategy.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hawkdove {

Strategy::Strategy(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    std::ostringstream os;
    os << "strategy: theta must lie in [0, pi/2], got " << theta;
    throw std::invalid_argument(os.str());
  }
  if (!(phi >= 0.0 && phi <= kHalfPi)) {
    std::ostringstream os;
    os << "strategy: phi must lie in [0, pi/2], got " << phi;
    throw std::invalid_argument(os.str());
  }
}

NamedStrategies named_strategies() {
  return NamedStrategies{Strategy::dove(), Strategy::hawk(),
                         Strategy::quantum()};
}

Mat2 to_unitary(const Strategy& s) {
  const double ct = std::cos(s.theta());
  const double st = std::sin(s.theta());
  Mat2 u;
  u.at(0, 0) = std::polar(ct, s.phi());
  u.at(0, 1) = st;
  u.at(1, 0) = -st;
  u.at(1, 1) = std::polar(ct, -s.phi());
  return u;
}

double hawk_probability(double theta) {
  const double st = std::sin(theta);
  return st * st;
}

}  // namespace hawkdove
