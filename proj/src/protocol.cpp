#include "protocol.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hawkdove {

namespace {

double clamp_probability(double p) {
  if (p < 0.0) {
    if (p < -kComponentTol) {
      throw std::logic_error("probability below -tolerance");
    }
    return 0.0;
  }
  if (p > 1.0) {
    if (p > 1.0 + kComponentTol) {
      throw std::logic_error("probability above 1+tolerance");
    }
    return 1.0;
  }
  return p;
}

GameOutcome score(double p_dd, double p_dh, double p_hd, double p_hh,
                  const PayoffMatrix& m) {
  GameOutcome out;
  out.p_dd = clamp_probability(p_dd);
  out.p_dh = clamp_probability(p_dh);
  out.p_hd = clamp_probability(p_hd);
  out.p_hh = clamp_probability(p_hh);
  out.payoff_row = m.c() * out.p_dd + m.b() * out.p_hd - m.a() * out.p_hh;
  out.payoff_col = m.c() * out.p_dd + m.b() * out.p_dh - m.a() * out.p_hh;
  return out;
}

// Uniform double in [0,1) from raw generator output; keeps sampled reports
// byte-identical across standard libraries.
double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

GameOutcome play(const Strategy& row, const Strategy& col, double gamma,
                 const PayoffMatrix& m) {
  const Mat4 j = entangler(gamma);  // validates gamma's range
  const Mat4 j_dag = adjoint(j);
  const Mat4 moves = kron(to_unitary(row), to_unitary(col));

  TwoQubitState s = basis_state(kDD);
  s = apply(j, s);
  s = apply(moves, s);
  s = apply(j_dag, s);

  if (std::abs(norm_squared(s) - 1.0) > kComponentTol) {
    throw std::logic_error("play: final state lost normalization");
  }
  return score(std::norm(s.amp[kDD]), std::norm(s.amp[kDH]),
               std::norm(s.amp[kHD]), std::norm(s.amp[kHH]), m);
}

GameOutcome closed_form_outcome(const Strategy& row, const Strategy& col,
                                double gamma, const PayoffMatrix& m) {
  if (!(gamma >= 0.0 && gamma <= kQuarterPi)) {
    throw std::domain_error("closed_form_outcome: gamma must lie in [0, pi/4]");
  }
  const double cr = std::cos(row.theta()), sr = std::sin(row.theta());
  const double cc = std::cos(col.theta()), sc = std::sin(col.theta());
  const double cpr = std::cos(row.phi()), spr = std::sin(row.phi());
  const double cpc = std::cos(col.phi()), spc = std::sin(col.phi());
  const double c2g = std::cos(2.0 * gamma);
  const double s2g = std::sin(2.0 * gamma);
  // Sum-angle terms for phi_row + phi_col.
  const double cos_sum = cpr * cpc - spr * spc;
  const double sin_sum = spr * cpc + cpr * spc;

  const double g = cr * cc;  // cos(theta_R) cos(theta_C)
  const double h = sr * sc;  // sin(theta_R) sin(theta_C)

  const double dd_re = g * cos_sum;
  const double dd_im = g * c2g * sin_sum;
  const double p_dd = dd_re * dd_re + dd_im * dd_im;

  const double hh = h + s2g * sin_sum * g;
  const double p_hh = hh * hh;

  const double hd_re = s2g * spr * cr * sc - sr * cc * cpc;
  const double hd_im = -sr * cc * c2g * spc;
  const double p_hd = hd_re * hd_re + hd_im * hd_im;

  const double dh_re = s2g * spc * sr * cc - cr * sc * cpr;
  const double dh_im = -cr * sc * c2g * spr;
  const double p_dh = dh_re * dh_re + dh_im * dh_im;

  return score(p_dd, p_dh, p_hd, p_hh, m);
}

double closed_form_payoff(const Strategy& row, const Strategy& col,
                          double gamma, const PayoffMatrix& m) {
  return closed_form_outcome(row, col, gamma, m).payoff_row;
}

ValidationReport validate_closed_form(long samples, double tolerance,
                                      const PayoffMatrix& m,
                                      SampleRestriction restriction,
                                      std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("validate_closed_form: samples must be >= 1");
  }
  ValidationReport report;
  report.samples = samples;
  report.seed = seed;
  report.restriction = restriction;
  report.tolerance = tolerance;

  std::mt19937_64 gen(seed);
  const NamedStrategies named = named_strategies();
  const Strategy* cycle[3] = {&named.dove, &named.hawk, &named.quantum};

  for (long k = 0; k < samples; ++k) {
    ValidationCase vc;
    vc.gamma = next_uniform(gen) * kQuarterPi;
    switch (restriction) {
      case SampleRestriction::kNone:
        vc.theta_row = next_uniform(gen) * kHalfPi;
        vc.phi_row = next_uniform(gen) * kHalfPi;
        vc.theta_col = next_uniform(gen) * kHalfPi;
        vc.phi_col = next_uniform(gen) * kHalfPi;
        break;
      case SampleRestriction::kPhiZero:
        vc.theta_row = next_uniform(gen) * kHalfPi;
        vc.theta_col = next_uniform(gen) * kHalfPi;
        break;
      case SampleRestriction::kNamedVsQ: {
        const Strategy& s = *cycle[k % 3];
        vc.theta_row = s.theta();
        vc.phi_row = s.phi();
        vc.theta_col = named.quantum.theta();
        vc.phi_col = named.quantum.phi();
        break;
      }
    }
    const Strategy row(vc.theta_row, vc.phi_row);
    const Strategy col(vc.theta_col, vc.phi_col);
    vc.pipeline = play(row, col, vc.gamma, m).payoff_row;
    vc.closed_form = closed_form_payoff(row, col, vc.gamma, m);
    const double dev = std::abs(vc.pipeline - vc.closed_form);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst_case = vc;
    }
    if (dev > tolerance && !report.first_failure) {
      report.first_failure = vc;
    }
  }
  return report;
}

std::array<std::uint64_t, 4> sample_counts(const GameOutcome& outcome,
                                           std::uint64_t shots,
                                           std::uint64_t seed) {
  std::array<std::uint64_t, 4> counts{};
  const double cum1 = outcome.p_dd;
  const double cum2 = cum1 + outcome.p_dh;
  const double cum3 = cum2 + outcome.p_hd;
  std::mt19937_64 gen(seed);
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = next_uniform(gen);
    if (u < cum1)
      ++counts[0];
    else if (u < cum2)
      ++counts[1];
    else if (u < cum3)
      ++counts[2];
    else
      ++counts[3];
  }
  return counts;
}

}  // namespace hawkdove
