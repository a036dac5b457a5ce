#include "quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace hawkdove {

Mat2 identity2() {
  Mat2 m;
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 1.0;
  return m;
}

Mat4 identity4() {
  Mat4 m;
  for (int r = 0; r < 4; ++r) m.at(r, r) = 1.0;
  return m;
}

Mat2 dove_op() { return identity2(); }

Mat2 hawk_op() {
  Mat2 m;
  m.at(0, 1) = 1.0;
  m.at(1, 0) = -1.0;
  return m;
}

Mat2 adjoint(const Mat2& m) {
  Mat2 a;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) a.at(r, c) = std::conj(m.at(c, r));
  return a;
}

Mat4 adjoint(const Mat4& m) {
  Mat4 a;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) a.at(r, c) = std::conj(m.at(c, r));
  return a;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Cx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a.at(r, k) * b.at(k, c);
      out.at(r, c) = acc;
    }
  }
  return out;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out.at(2 * i + k, 2 * j + l) = a.at(i, j) * b.at(k, l);
  return out;
}

Mat4 entangler(double gamma) {
  if (!(gamma >= 0.0 && gamma <= kQuarterPi)) {
    throw std::domain_error("entangler: gamma must lie in [0, pi/4]");
  }
  const Mat4 k = kron(hawk_op(), hawk_op());
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  Mat4 j;
  for (int idx = 0; idx < 16; ++idx) {
    j.e[idx] = Cx(0.0, s) * k.e[idx];
  }
  for (int r = 0; r < 4; ++r) j.at(r, r) += c;
  return j;
}

TwoQubitState apply(const Mat4& m, const TwoQubitState& s) {
  TwoQubitState out;
  for (int r = 0; r < 4; ++r) {
    Cx acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m.at(r, c) * s.amp[c];
    out.amp[r] = acc;
  }
  return out;
}

double norm_squared(const TwoQubitState& s) {
  double n = 0.0;
  for (const Cx& a : s.amp) n += std::norm(a);
  return n;
}

TwoQubitState basis_state(BasisIndex k) {
  TwoQubitState s;
  s.amp[k] = 1.0;
  return s;
}

double concurrence(const TwoQubitState& s) {
  if (std::abs(norm_squared(s) - 1.0) > 1e-9) {
    throw std::domain_error("concurrence: state must be normalized");
  }
  return 2.0 * std::abs(s.amp[kDD] * s.amp[kHH] - s.amp[kDH] * s.amp[kHD]);
}

namespace {

template <typename M>
bool unitary_impl(const M& m, int n, double tol) {
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Cx acc = 0.0;
      for (int k = 0; k < n; ++k) acc += m.at(r, k) * std::conj(m.at(c, k));
      const Cx expect = (r == c) ? Cx(1.0) : Cx(0.0);
      if (std::abs(acc - expect) > tol) return false;
    }
  }
  return true;
}

}  // namespace

bool is_unitary(const Mat2& m, double tol) { return unitary_impl(m, 2, tol); }
bool is_unitary(const Mat4& m, double tol) { return unitary_impl(m, 4, tol); }

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double mx = 0.0;
  for (int idx = 0; idx < 16; ++idx) mx = std::max(mx, std::abs(a.e[idx] - b.e[idx]));
  return mx;
}

}  // namespace hawkdove
