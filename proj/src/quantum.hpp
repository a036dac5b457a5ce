#pragma once

#include <array>

#include "common.hpp"

namespace hawkdove {

// Dense complex 2x2 / 4x4 matrices and the 4-amplitude two-qubit state,
// row-major. Basis ordering is |DD>,|DH>,|HD>,|HH> (= |00>..|11>) with the
// row player's qubit first.
struct Mat2 {
  std::array<Cx, 4> e{};

  Cx& at(int r, int c) { return e[2 * r + c]; }
  const Cx& at(int r, int c) const { return e[2 * r + c]; }
};

struct Mat4 {
  std::array<Cx, 16> e{};

  Cx& at(int r, int c) { return e[4 * r + c]; }
  const Cx& at(int r, int c) const { return e[4 * r + c]; }
};

struct TwoQubitState {
  std::array<Cx, 4> amp{};
};

enum BasisIndex { kDD = 0, kDH = 1, kHD = 2, kHH = 3 };

Mat2 identity2();
Mat4 identity4();

// Operator for the dove move: leave the qubit alone.
Mat2 dove_op();
// Operator for the hawk move: rotate |0> to -|1> and |1> to |0>.
Mat2 hawk_op();

Mat2 adjoint(const Mat2& m);
Mat4 adjoint(const Mat4& m);
Mat4 mul(const Mat4& a, const Mat4& b);

// Standard Kronecker product; (A (x) B)(x (x) y) = (Ax) (x) (By).
Mat4 kron(const Mat2& a, const Mat2& b);

// Entangling gate J(gamma) = cos(gamma) I + i sin(gamma) (H (x) H).
// This is exp(i gamma H(x)H) in closed form, valid because (H(x)H)^2 = I.
// Requires gamma in [0, pi/4].
Mat4 entangler(double gamma);

TwoQubitState apply(const Mat4& m, const TwoQubitState& s);

double norm_squared(const TwoQubitState& s);

TwoQubitState basis_state(BasisIndex k);

// Two-qubit concurrence C = 2|a00*a11 - a01*a10|: 0 for product states,
// 1 for maximally entangled states. Requires a normalized state.
double concurrence(const TwoQubitState& s);

bool is_unitary(const Mat2& m, double tol = kComponentTol);
bool is_unitary(const Mat4& m, double tol = kComponentTol);

double max_abs_diff(const Mat4& a, const Mat4& b);

}  // namespace hawkdove
