#include "equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hawkdove {

namespace {

std::vector<double> axis(double upper, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // Divide first so the endpoints land exactly on 0 and upper.
    v[static_cast<std::size_t>(k)] =
        static_cast<double>(k) / static_cast<double>(n - 1) * upper;
  }
  return v;
}

void check_grid_n(int grid_n) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
}

void check_bounds(const SearchBounds& b) {
  if (!(b.theta_max >= 0.0 && b.theta_max <= kHalfPi) ||
      !(b.phi_max >= 0.0 && b.phi_max <= kHalfPi)) {
    throw std::invalid_argument("search bounds must lie in [0, pi/2]");
  }
}

// Golden-section ascent of f over [lo, hi]; returns the located maximizer.
template <typename F>
double golden_max(F&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-9) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

struct Candidate {
  double theta;
  double phi;
  double payoff;
};

bool same_strategy(double t1, double p1, double t2, double p2) {
  return std::abs(t1 - t2) <= kTieTol && std::abs(p1 - p2) <= kTieTol;
}

// At theta = pi/2 the strategy unitary no longer depends on phi; collapse
// those labels onto phi = 0 so tie sets do not enumerate one operator many
// times.
void canonicalize(double& theta, double& phi) {
  if (std::abs(theta - kHalfPi) <= kTieTol) phi = 0.0;
}

}  // namespace

double critical_gamma(const PayoffMatrix& m) {
  const double from_cb = 0.5 * std::acos(std::sqrt(m.c() / m.b()));
  const double from_dv = 0.5 * std::acos(std::sqrt(0.5 - m.d() / m.v()));
  if (std::abs(from_cb - from_dv) > kComponentTol) {
    throw std::logic_error("critical_gamma: parameterizations disagree");
  }
  return from_cb;
}

std::vector<BestResponse> best_responses(const Strategy& opponent,
                                         double gamma, const PayoffMatrix& m,
                                         int grid_n, SearchBounds bounds) {
  check_grid_n(grid_n);
  check_bounds(bounds);

  const int nt = grid_n;
  const int np = bounds.phi_max > 0.0 ? grid_n : 1;
  const std::vector<double> thetas = axis(bounds.theta_max, nt);
  const std::vector<double> phis =
      np > 1 ? axis(bounds.phi_max, np) : std::vector<double>{0.0};

  const auto payoff_at = [&](double theta, double phi) {
    return play(Strategy(theta, phi), opponent, gamma, m).payoff_row;
  };

  std::vector<double> landscape(static_cast<std::size_t>(nt) * np);
  double lattice_max = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < nt; ++j) {
    for (int k = 0; k < np; ++k) {
      const double p = payoff_at(thetas[j], phis[k]);
      landscape[static_cast<std::size_t>(j) * np + k] = p;
      lattice_max = std::max(lattice_max, p);
    }
  }

  // Refining a lattice point can lift its payoff by at most the payoff
  // curvature times the squared step (second derivatives of the outcome
  // probabilities are bounded by 32), so anything further below the lattice
  // maximum can never re-enter the tie set.
  const double step =
      std::max(bounds.theta_max / (nt - 1), np > 1 ? bounds.phi_max / (np - 1) : 0.0);
  const double lift_bound = 16.0 * (m.a() + m.b() + m.c()) * step * step;
  const double keep_above = lattice_max - lift_bound - kTieTol;

  const auto value = [&](int j, int k) {
    return landscape[static_cast<std::size_t>(j) * np + k];
  };

  std::vector<Candidate> candidates;
  for (int j = 0; j < nt; ++j) {
    for (int k = 0; k < np; ++k) {
      const double p = value(j, k);
      if (p < keep_above) continue;
      // Tolerate pipeline noise in the neighbor comparison so exact payoff
      // plateaus (tied strategies) do not drop points arbitrarily.
      const bool local_max =
          (j == 0 || value(j - 1, k) <= p + kComponentTol) &&
          (j == nt - 1 || value(j + 1, k) <= p + kComponentTol) &&
          (k == 0 || value(j, k - 1) <= p + kComponentTol) &&
          (k == np - 1 || value(j, k + 1) <= p + kComponentTol);
      if (!local_max) continue;

      // On a flat plateau there is no gradient to ascend; keep the lattice
      // point as-is instead of running the line searches.
      const bool has_slope = (j > 0 && p - value(j - 1, k) > kRefineTol) ||
                             (j < nt - 1 && p - value(j + 1, k) > kRefineTol) ||
                             (k > 0 && p - value(j, k - 1) > kRefineTol) ||
                             (k < np - 1 && p - value(j, k + 1) > kRefineTol);
      if (!has_slope) {
        candidates.push_back(Candidate{thetas[j], phis[k], p});
        continue;
      }

      double theta = thetas[j], phi = phis[k], best = p;
      const double tstep = bounds.theta_max / (nt - 1);
      const double pstep = np > 1 ? bounds.phi_max / (np - 1) : 0.0;
      for (int round = 0; round < 60; ++round) {
        const double prev = best;
        theta = golden_max(
            [&](double t) { return payoff_at(t, phi); },
            std::max(0.0, theta - tstep), std::min(bounds.theta_max, theta + tstep));
        if (pstep > 0.0) {
          phi = golden_max(
              [&](double f) { return payoff_at(theta, f); },
              std::max(0.0, phi - pstep), std::min(bounds.phi_max, phi + pstep));
        }
        best = payoff_at(theta, phi);
        if (best - prev < kRefineTol) break;
      }
      // The payoff surface is flat to machine precision around a maximum, so
      // the located angles carry ~1e-8 of noise. When refinement gained
      // nothing beyond its own tolerance, the exact lattice point stands.
      if (best <= p + kRefineTol) {
        theta = thetas[j];
        phi = phis[k];
        best = p;
      }
      candidates.push_back(Candidate{theta, phi, best});
    }
  }

  double global = lattice_max;
  for (const Candidate& c : candidates) global = std::max(global, c.payoff);

  std::vector<Candidate> winners;
  for (Candidate c : candidates) {
    if (c.payoff < global - kTieTol) continue;
    canonicalize(c.theta, c.phi);
    winners.push_back(c);
  }
  std::sort(winners.begin(), winners.end(), [](const Candidate& x, const Candidate& y) {
    return x.theta != y.theta ? x.theta < y.theta : x.phi < y.phi;
  });

  std::vector<BestResponse> out;
  for (const Candidate& c : winners) {
    if (!out.empty() && same_strategy(out.back().strategy.theta(),
                                      out.back().strategy.phi(), c.theta, c.phi)) {
      continue;
    }
    out.push_back(BestResponse{Strategy(c.theta, c.phi), c.payoff});
  }
  return out;
}

namespace {

double best_payoff_against(const Strategy& opponent, double gamma,
                           const PayoffMatrix& m, int grid_n) {
  const std::vector<BestResponse> set = best_responses(opponent, gamma, m, grid_n);
  double mx = -std::numeric_limits<double>::infinity();
  for (const BestResponse& br : set) mx = std::max(mx, br.payoff);
  return mx;
}

}  // namespace

bool is_nash(const Strategy& row, const Strategy& col, double gamma,
             const PayoffMatrix& m, int grid_n) {
  const GameOutcome outcome = play(row, col, gamma, m);
  const double best_vs_col = best_payoff_against(col, gamma, m, grid_n);
  if (outcome.payoff_row < best_vs_col - kTieTol) return false;
  if (same_strategy(row.theta(), row.phi(), col.theta(), col.phi())) {
    return true;  // symmetric pair in a symmetric game: one check suffices
  }
  const double best_vs_row = best_payoff_against(row, gamma, m, grid_n);
  return outcome.payoff_col >= best_vs_row - kTieTol;
}

bool is_ess(const Strategy& s, double gamma, const PayoffMatrix& m, int grid_n,
            SearchBounds bounds) {
  check_grid_n(grid_n);
  check_bounds(bounds);

  const double resident = play(s, s, gamma, m).payoff_row;

  const auto stable_against = [&](const Strategy& mutant) {
    if (same_strategy(mutant.theta(), mutant.phi(), s.theta(), s.phi())) {
      return true;
    }
    const double invader = play(mutant, s, gamma, m).payoff_row;
    if (invader > resident + kTieTol) return false;
    if (invader >= resident - kTieTol) {
      // Tied entry payoff: the resident must win the post-invasion game.
      const double vs_mutant = play(s, mutant, gamma, m).payoff_row;
      const double mutant_self = play(mutant, mutant, gamma, m).payoff_row;
      return vs_mutant > mutant_self + kTieTol;
    }
    return true;
  };

  const int nt = grid_n;
  const int np = bounds.phi_max > 0.0 ? grid_n : 1;
  const std::vector<double> thetas = axis(bounds.theta_max, nt);
  const std::vector<double> phis =
      np > 1 ? axis(bounds.phi_max, np) : std::vector<double>{0.0};

  for (double theta : thetas) {
    for (double phi : phis) {
      if (!stable_against(Strategy(theta, phi))) return false;
    }
  }
  const NamedStrategies named = named_strategies();
  for (const Strategy* extra : {&named.dove, &named.hawk, &named.quantum}) {
    if (extra->theta() > bounds.theta_max || extra->phi() > bounds.phi_max) {
      continue;
    }
    if (!stable_against(*extra)) return false;
  }
  return true;
}

namespace {

struct StrategyTrig {
  double theta, phi;
  double ct, st;    // cos/sin theta
  double cp, sp;    // cos/sin phi
  double spct;      // sp * ct
  double cpct;      // cp * ct
};

StrategyTrig make_trig(double theta, double phi) {
  StrategyTrig t;
  t.theta = theta;
  t.phi = phi;
  t.ct = std::cos(theta);
  t.st = std::sin(theta);
  t.cp = std::cos(phi);
  t.sp = std::sin(phi);
  t.spct = t.sp * t.ct;
  t.cpct = t.cp * t.ct;
  return t;
}

struct PairPayoff {
  double row, col;
};

// Same trigonometric closed form as protocol's closed_form_outcome, arranged
// around per-strategy precomputation for the quartic pair scan.
inline PairPayoff pair_payoffs(const StrategyTrig& r, const StrategyTrig& c,
                               double c2g, double s2g, double pa, double pb,
                               double pc) {
  const double cos_sum = r.cp * c.cp - r.sp * c.sp;
  const double sin_sum = r.sp * c.cp + r.cp * c.sp;
  const double g = r.ct * c.ct;
  const double h = r.st * c.st;

  const double dd = g * g * (cos_sum * cos_sum + c2g * c2g * sin_sum * sin_sum);
  const double hh_amp = h + s2g * sin_sum * g;
  const double hh = hh_amp * hh_amp;

  const double hd_re = s2g * r.spct * c.st - r.st * c.cpct;
  const double hd_im = r.st * c.spct * c2g;
  const double hd = hd_re * hd_re + hd_im * hd_im;

  const double dh_re = s2g * c.spct * r.st - c.st * r.cpct;
  const double dh_im = c.st * r.spct * c2g;
  const double dh = dh_re * dh_re + dh_im * dh_im;

  const double common = pc * dd - pa * hh;
  return PairPayoff{common + pb * hd, common + pb * dh};
}

}  // namespace

ParetoResult pareto_check(const Strategy& row, const Strategy& col,
                          double gamma, const PayoffMatrix& m, int grid_n) {
  check_grid_n(grid_n);
  const GameOutcome target = play(row, col, gamma, m);
  const double r0 = target.payoff_row;
  const double c0 = target.payoff_col;

  // No pair can pay either player more than b, so targets at the ceiling are
  // optimal without scanning.
  if (r0 > m.b() - kTieTol || c0 > m.b() - kTieTol) {
    return ParetoResult{true, std::nullopt};
  }

  const double c2g = std::cos(2.0 * gamma);
  const double s2g = std::sin(2.0 * gamma);
  const double pa = m.a(), pb = m.b(), pc = m.c();

  const auto dominates = [&](const PairPayoff& p) {
    return p.row >= r0 + kTieTol && p.col >= c0 + kTieTol &&
           (p.row > r0 + kTieTol || p.col > c0 + kTieTol);
  };
  const auto found = [&](const StrategyTrig& a, const StrategyTrig& b,
                         const PairPayoff& p) {
    return ParetoResult{
        false, ParetoCounterexample{Strategy(a.theta, a.phi),
                                    Strategy(b.theta, b.phi), p.row, p.col}};
  };

  const std::vector<double> thetas = axis(kHalfPi, grid_n);
  const std::vector<double> phis = axis(kHalfPi, grid_n);

  std::vector<StrategyTrig> grid;
  grid.reserve(static_cast<std::size_t>(grid_n) * grid_n);
  for (double theta : thetas)
    for (double phi : phis) grid.push_back(make_trig(theta, phi));

  // Cheap candidate families first: symmetric classical mixes, symmetric
  // phase-edge pairs and the named corners catch nearly every dominated
  // target before the quartic scan starts.
  for (double theta : thetas) {
    for (double phi : {0.0, kHalfPi}) {
      const StrategyTrig t = make_trig(theta, phi);
      const PairPayoff p = pair_payoffs(t, t, c2g, s2g, pa, pb, pc);
      if (dominates(p)) return found(t, t, p);
    }
  }
  const NamedStrategies named = named_strategies();
  for (const Strategy* x : {&named.dove, &named.hawk, &named.quantum}) {
    for (const Strategy* y : {&named.dove, &named.hawk, &named.quantum}) {
      const StrategyTrig a = make_trig(x->theta(), x->phi());
      const StrategyTrig b = make_trig(y->theta(), y->phi());
      const PairPayoff p = pair_payoffs(a, b, c2g, s2g, pa, pb, pc);
      if (dominates(p)) return found(a, b, p);
    }
  }

  for (const StrategyTrig& a : grid) {
    for (const StrategyTrig& b : grid) {
      const PairPayoff p = pair_payoffs(a, b, c2g, s2g, pa, pb, pc);
      if (dominates(p)) return found(a, b, p);
    }
  }
  return ParetoResult{true, std::nullopt};
}

bool is_pareto_optimal(const Strategy& row, const Strategy& col, double gamma,
                       const PayoffMatrix& m, int grid_n) {
  return pareto_check(row, col, gamma, m, grid_n).optimal;
}

EquilibriumReport analyze(double gamma, const PayoffMatrix& m, int grid_n) {
  check_grid_n(grid_n);
  EquilibriumReport report;
  report.gamma = gamma;
  report.gamma_critical = critical_gamma(m);
  report.grid_n = grid_n;
  report.classical_baseline = classical_mixed_ess(m);

  const Strategy q = Strategy::quantum();
  report.best_responses_to_q = best_responses(q, gamma, m, grid_n);

  double best = -std::numeric_limits<double>::infinity();
  for (const BestResponse& br : report.best_responses_to_q) {
    best = std::max(best, br.payoff);
  }
  const double qq = play(q, q, gamma, m).payoff_row;
  report.qq_is_nash = qq >= best - kTieTol;
  report.qq_is_unique_best_response =
      report.best_responses_to_q.size() == 1 &&
      same_strategy(report.best_responses_to_q.front().strategy.theta(),
                    report.best_responses_to_q.front().strategy.phi(),
                    q.theta(), q.phi());
  report.qq_is_ess = is_ess(q, gamma, m, grid_n);

  const ParetoResult pareto = pareto_check(q, q, gamma, m, grid_n);
  report.qq_is_pareto_optimal = pareto.optimal;
  report.pareto_counterexample = pareto.dominator;
  return report;
}

}  // namespace hawkdove
