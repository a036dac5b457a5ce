#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "quantum.hpp"

using namespace hawkdove;
using hawkdove::testing::entangler_series;
using hawkdove::testing::uniform;

namespace {

void check_state(const TwoQubitState& s, const std::array<Cx, 4>& expected,
                 double tol = kComponentTol) {
  for (int k = 0; k < 4; ++k) {
    CAPTURE(k);
    CHECK(std::abs(s.amp[static_cast<std::size_t>(k)] -
                   expected[static_cast<std::size_t>(k)]) <= tol);
  }
}

}  // namespace

TEST_CASE("kron of identities is the 4x4 identity") {
  CHECK(max_abs_diff(kron(identity2(), identity2()), identity4()) == 0.0);
}

TEST_CASE("kron acts factor-wise on basis states") {
  const TwoQubitState dd = basis_state(kDD);
  // hawk (x) hawk sends |00> to |11>: the two sign flips cancel.
  check_state(apply(kron(hawk_op(), hawk_op()), dd), {0.0, 0.0, 0.0, 1.0});
  // dove (x) hawk sends |00> to -|01>.
  check_state(apply(kron(dove_op(), hawk_op()), dd), {0.0, -1.0, 0.0, 0.0});
}

TEST_CASE("kron is multiplicative over products of basis vectors") {
  std::mt19937_64 gen(11);
  for (int iter = 0; iter < 200; ++iter) {
    Mat2 a, b;
    for (int k = 0; k < 4; ++k) {
      a.e[static_cast<std::size_t>(k)] =
          Cx(uniform(gen, -1, 1), uniform(gen, -1, 1));
      b.e[static_cast<std::size_t>(k)] =
          Cx(uniform(gen, -1, 1), uniform(gen, -1, 1));
    }
    const int i = static_cast<int>(gen() % 2), j = static_cast<int>(gen() % 2);
    // (A (x) B)(e_i (x) e_j) must equal (A e_i) (x) (B e_j).
    TwoQubitState in;
    in.amp[static_cast<std::size_t>(2 * i + j)] = 1.0;
    const TwoQubitState out = apply(kron(a, b), in);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        CHECK(std::abs(out.amp[static_cast<std::size_t>(2 * r + c)] -
                       a.at(r, i) * b.at(c, j)) <= kComponentTol);
      }
    }
  }
}

TEST_CASE("entangler at zero is the identity") {
  CHECK(max_abs_diff(entangler(0.0), identity4()) == 0.0);
}

TEST_CASE("entangler rejects gamma outside [0, pi/4]") {
  CHECK_THROWS_AS(entangler(-0.1), std::domain_error);
  CHECK_THROWS_AS(entangler(kQuarterPi + 1e-6), std::domain_error);
}

TEST_CASE("entangler prepares cos|00> + i sin|11>") {
  for (double gamma : {0.0, 0.1, 0.3, 0.5, kQuarterPi}) {
    CAPTURE(gamma);
    const TwoQubitState s = apply(entangler(gamma), basis_state(kDD));
    check_state(s, {Cx(std::cos(gamma), 0.0), 0.0, 0.0,
                    Cx(0.0, std::sin(gamma))});
  }
  // gamma = pi/4 is the maximally entangled (1/sqrt2)(|00> + i|11>).
  const TwoQubitState bell = apply(entangler(kQuarterPi), basis_state(kDD));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  check_state(bell, {inv_sqrt2, 0.0, 0.0, Cx(0.0, inv_sqrt2)});
}

TEST_CASE("entangler is unitary across the gamma range") {
  for (int k = 0; k <= 100; ++k) {
    const double gamma = kQuarterPi * k / 100.0;
    const Mat4 j = entangler(gamma);
    CHECK(is_unitary(j));
    CHECK(max_abs_diff(mul(j, adjoint(j)), identity4()) <= kComponentTol);
  }
}

TEST_CASE("closed-form entangler matches the series exponential") {
  std::mt19937_64 gen(7);
  double worst = 0.0;
  for (int iter = 0; iter < 1000; ++iter) {
    const double gamma = uniform(gen, 0.0, kQuarterPi);
    worst = std::max(worst, max_abs_diff(entangler(gamma), entangler_series(gamma)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("apply with the identity is a no-op, and J undoes J-dagger") {
  std::mt19937_64 gen(3);
  for (int iter = 0; iter < 200; ++iter) {
    TwoQubitState s;
    for (auto& amp : s.amp) amp = Cx(uniform(gen, -1, 1), uniform(gen, -1, 1));
    const double scale = 1.0 / std::sqrt(norm_squared(s));
    for (auto& amp : s.amp) amp *= scale;

    const TwoQubitState same = apply(identity4(), s);
    for (int k = 0; k < 4; ++k)
      CHECK(same.amp[static_cast<std::size_t>(k)] ==
            s.amp[static_cast<std::size_t>(k)]);

    const double gamma = uniform(gen, 0.0, kQuarterPi);
    const Mat4 j = entangler(gamma);
    const TwoQubitState back = apply(adjoint(j), apply(j, s));
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(back.amp[static_cast<std::size_t>(k)] -
                     s.amp[static_cast<std::size_t>(k)]) <= kComponentTol);
    CHECK(std::abs(norm_squared(apply(j, s)) - 1.0) <= kComponentTol);
  }
}

TEST_CASE("concurrence of the entangled preparation is sin(2 gamma)") {
  CHECK(concurrence(basis_state(kDD)) == 0.0);

  const TwoQubitState bell = apply(entangler(kQuarterPi), basis_state(kDD));
  CHECK(std::abs(concurrence(bell) - 1.0) <= kComponentTol);

  double previous = -1.0;
  for (int k = 0; k <= 200; ++k) {
    const double gamma = kQuarterPi * k / 200.0;
    const double c = concurrence(apply(entangler(gamma), basis_state(kDD)));
    CHECK(std::abs(c - std::sin(2.0 * gamma)) <= kComponentTol);
    CHECK(c >= previous);  // monotone on [0, pi/4]
    previous = c;
  }
}

TEST_CASE("concurrence rejects non-normalized states") {
  TwoQubitState s;
  s.amp[0] = 2.0;
  CHECK_THROWS_AS(concurrence(s), std::domain_error);
}
