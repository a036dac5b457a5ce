#include "hawkdove/hawkdove.h"

#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "equilibrium.hpp"

struct hdq_game {
  hawkdove::PayoffMatrix matrix;
};

struct hdq_analysis {
  hawkdove::EquilibriumReport report;
};

namespace {

thread_local std::string g_last_error;

hdq_status fail(hdq_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Translates C++ exceptions from the core into status codes at the boundary.
template <typename Fn>
hdq_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return HDQ_OK;
  } catch (const std::invalid_argument& e) {
    return fail(HDQ_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(HDQ_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HDQ_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HDQ_ERROR_INTERNAL, e.what());
  }
}

hdq_status require(bool ok, const char* what) {
  return ok ? HDQ_OK : fail(HDQ_ERROR_NULL_POINTER, what);
}

}  // namespace

extern "C" {

const char* hdq_version(void) { return "1.0.0"; }

const char* hdq_last_error(void) { return g_last_error.c_str(); }

hdq_status hdq_game_create(double resource_value, double injury_cost,
                           double display_cost, hdq_game** out) {
  if (hdq_status s = require(out != nullptr, "out handle is null"); s != HDQ_OK)
    return s;
  *out = nullptr;
  return guarded([&] {
    *out = new hdq_game{
        hawkdove::PayoffMatrix::make(resource_value, injury_cost, display_cost)};
  });
}

void hdq_game_destroy(hdq_game* game) { delete game; }

hdq_status hdq_game_values(const hdq_game* game, double* v, double* i,
                           double* d) {
  if (hdq_status s = require(game && v && i && d, "null argument"); s != HDQ_OK)
    return s;
  *v = game->matrix.v();
  *i = game->matrix.i();
  *d = game->matrix.d();
  g_last_error.clear();
  return HDQ_OK;
}

hdq_status hdq_game_derived(const hdq_game* game, double* a, double* b,
                            double* c) {
  if (hdq_status s = require(game && a && b && c, "null argument"); s != HDQ_OK)
    return s;
  *a = game->matrix.a();
  *b = game->matrix.b();
  *c = game->matrix.c();
  g_last_error.clear();
  return HDQ_OK;
}

hdq_status hdq_classical_payoff(const hdq_game* game, double p, double q,
                                double* payoff_row, double* payoff_col) {
  if (hdq_status s = require(game && payoff_row && payoff_col, "null argument");
      s != HDQ_OK)
    return s;
  return guarded([&] {
    const hawkdove::PayoffPair pair =
        hawkdove::classical_payoff(p, q, game->matrix);
    *payoff_row = pair.row;
    *payoff_col = pair.col;
  });
}

hdq_status hdq_classical_mixed_ess(const hdq_game* game,
                                   hdq_classical_equilibrium* out) {
  if (hdq_status s = require(game && out, "null argument"); s != HDQ_OK)
    return s;
  return guarded([&] {
    const hawkdove::ClassicalEquilibrium eq =
        hawkdove::classical_mixed_ess(game->matrix);
    out->hawk_prob = eq.hawk_prob;
    out->average_payoff = eq.average_payoff;
  });
}

hdq_status hdq_critical_gamma(const hdq_game* game, double* out) {
  if (hdq_status s = require(game && out, "null argument"); s != HDQ_OK)
    return s;
  return guarded([&] { *out = hawkdove::critical_gamma(game->matrix); });
}

namespace {

void copy_outcome(const hawkdove::GameOutcome& from, hdq_outcome* to) {
  to->p_dd = from.p_dd;
  to->p_dh = from.p_dh;
  to->p_hd = from.p_hd;
  to->p_hh = from.p_hh;
  to->payoff_row = from.payoff_row;
  to->payoff_col = from.payoff_col;
}

}  // namespace

hdq_status hdq_play(const hdq_game* game, double theta_row, double phi_row,
                    double theta_col, double phi_col, double gamma,
                    hdq_outcome* out) {
  if (hdq_status s = require(game && out, "null argument"); s != HDQ_OK)
    return s;
  return guarded([&] {
    const hawkdove::GameOutcome outcome =
        hawkdove::play(hawkdove::Strategy(theta_row, phi_row),
                       hawkdove::Strategy(theta_col, phi_col), gamma,
                       game->matrix);
    copy_outcome(outcome, out);
  });
}

hdq_status hdq_play_sampled(const hdq_game* game, double theta_row,
                            double phi_row, double theta_col, double phi_col,
                            double gamma, uint64_t shots, uint64_t seed,
                            uint64_t counts[4], hdq_outcome* out) {
  if (hdq_status s = require(game && out && counts, "null argument");
      s != HDQ_OK)
    return s;
  return guarded([&] {
    const hawkdove::GameOutcome outcome =
        hawkdove::play(hawkdove::Strategy(theta_row, phi_row),
                       hawkdove::Strategy(theta_col, phi_col), gamma,
                       game->matrix);
    copy_outcome(outcome, out);
    const auto sampled = hawkdove::sample_counts(outcome, shots, seed);
    for (int k = 0; k < 4; ++k) counts[k] = sampled[static_cast<size_t>(k)];
  });
}

hdq_status hdq_closed_form_payoff(const hdq_game* game, double theta_row,
                                  double phi_row, double theta_col,
                                  double phi_col, double gamma,
                                  double* payoff_row) {
  if (hdq_status s = require(game && payoff_row, "null argument"); s != HDQ_OK)
    return s;
  return guarded([&] {
    *payoff_row = hawkdove::closed_form_payoff(
        hawkdove::Strategy(theta_row, phi_row),
        hawkdove::Strategy(theta_col, phi_col), gamma, game->matrix);
  });
}

hdq_status hdq_validate_closed_form(const hdq_game* game, long samples,
                                    double tolerance, int restriction,
                                    uint64_t seed,
                                    hdq_validation_report* out) {
  if (hdq_status s = require(game && out, "null argument"); s != HDQ_OK)
    return s;
  if (restriction < HDQ_RESTRICT_NONE || restriction > HDQ_RESTRICT_NAMED_VS_Q) {
    return fail(HDQ_ERROR_INVALID_ARGUMENT, "unknown sample restriction");
  }
  return guarded([&] {
    const hawkdove::ValidationReport report = hawkdove::validate_closed_form(
        samples, tolerance, game->matrix,
        static_cast<hawkdove::SampleRestriction>(restriction), seed);
    out->samples = report.samples;
    out->seed = report.seed;
    out->restriction = restriction;
    out->tolerance = report.tolerance;
    out->max_deviation = report.max_deviation;
    out->passed = report.passed() ? 1 : 0;
    out->worst_theta_row = report.worst_case.theta_row;
    out->worst_phi_row = report.worst_case.phi_row;
    out->worst_theta_col = report.worst_case.theta_col;
    out->worst_phi_col = report.worst_case.phi_col;
    out->worst_gamma = report.worst_case.gamma;
    out->worst_pipeline = report.worst_case.pipeline;
    out->worst_closed_form = report.worst_case.closed_form;
  });
}

hdq_status hdq_analyze(const hdq_game* game, double gamma, int grid_n,
                       hdq_analysis** out) {
  if (hdq_status s = require(game && out, "null argument"); s != HDQ_OK)
    return s;
  *out = nullptr;
  return guarded([&] {
    *out = new hdq_analysis{hawkdove::analyze(gamma, game->matrix, grid_n)};
  });
}

void hdq_analysis_destroy(hdq_analysis* analysis) { delete analysis; }

hdq_status hdq_analysis_summary(const hdq_analysis* analysis,
                                hdq_equilibrium_summary* out) {
  if (hdq_status s = require(analysis && out, "null argument"); s != HDQ_OK)
    return s;
  const hawkdove::EquilibriumReport& r = analysis->report;
  out->gamma = r.gamma;
  out->gamma_critical = r.gamma_critical;
  out->grid_n = r.grid_n;
  out->qq_is_nash = r.qq_is_nash ? 1 : 0;
  out->qq_is_ess = r.qq_is_ess ? 1 : 0;
  out->qq_is_unique_best_response = r.qq_is_unique_best_response ? 1 : 0;
  out->qq_is_pareto_optimal = r.qq_is_pareto_optimal ? 1 : 0;
  out->classical_baseline.hawk_prob = r.classical_baseline.hawk_prob;
  out->classical_baseline.average_payoff = r.classical_baseline.average_payoff;
  out->counterexample_found = r.pareto_counterexample.has_value() ? 1 : 0;
  out->cx_theta_row = out->cx_phi_row = out->cx_theta_col = out->cx_phi_col =
      0.0;
  out->cx_payoff_row = out->cx_payoff_col = 0.0;
  if (r.pareto_counterexample) {
    const hawkdove::ParetoCounterexample& cx = *r.pareto_counterexample;
    out->cx_theta_row = cx.row_strategy.theta();
    out->cx_phi_row = cx.row_strategy.phi();
    out->cx_theta_col = cx.col_strategy.theta();
    out->cx_phi_col = cx.col_strategy.phi();
    out->cx_payoff_row = cx.payoff_row;
    out->cx_payoff_col = cx.payoff_col;
  }
  g_last_error.clear();
  return HDQ_OK;
}

hdq_status hdq_analysis_best_response_count(const hdq_analysis* analysis,
                                            size_t* out) {
  if (hdq_status s = require(analysis && out, "null argument"); s != HDQ_OK)
    return s;
  *out = analysis->report.best_responses_to_q.size();
  g_last_error.clear();
  return HDQ_OK;
}

hdq_status hdq_analysis_best_response(const hdq_analysis* analysis,
                                      size_t index, double* theta, double* phi,
                                      double* payoff) {
  if (hdq_status s = require(analysis && theta && phi && payoff, "null argument");
      s != HDQ_OK)
    return s;
  if (index >= analysis->report.best_responses_to_q.size()) {
    return fail(HDQ_ERROR_INVALID_ARGUMENT, "best-response index out of range");
  }
  const hawkdove::BestResponse& br =
      analysis->report.best_responses_to_q[index];
  *theta = br.strategy.theta();
  *phi = br.strategy.phi();
  *payoff = br.payoff;
  g_last_error.clear();
  return HDQ_OK;
}

}  // extern "C"
