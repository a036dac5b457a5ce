#pragma once

#include "quantum.hpp"

namespace hawkdove {

// A point of the two-parameter strategy space: the unitary
//
//   U(theta, phi) = [ e^{i phi} cos(theta)    sin(theta)          ]
//                   [ -sin(theta)             e^{-i phi} cos(theta) ]
//
// with theta, phi in [0, pi/2]. phi = 0 recovers the classical mixed
// strategies (hawk probability sin^2 theta); (0, pi/2) is the fully
// quantum phase move.
class Strategy {
 public:
  // Throws std::invalid_argument if either angle is out of range.
  Strategy(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  static Strategy dove() { return Strategy(0.0, 0.0); }
  static Strategy hawk() { return Strategy(kHalfPi, 0.0); }
  static Strategy quantum() { return Strategy(0.0, kHalfPi); }

 private:
  double theta_;
  double phi_;
};

struct NamedStrategies {
  Strategy dove;
  Strategy hawk;
  Strategy quantum;
};

NamedStrategies named_strategies();

Mat2 to_unitary(const Strategy& s);

// Hawk probability induced by U(theta, 0) on an unentangled dove qubit;
// the bijection between theta and the classical mixed strategies.
double hawk_probability(double theta);

}  // namespace hawkdove
