#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "hawkdove/hawkdove.h"

namespace {

constexpr double kHalfPi = 1.5707963267948966;
constexpr double kQuarterPi = 0.7853981633974483;

struct Game {
  hdq_game* handle = nullptr;
  Game(double v, double i, double d) {
    REQUIRE(hdq_game_create(v, i, d, &handle) == HDQ_OK);
  }
  ~Game() { hdq_game_destroy(handle); }
};

}  // namespace

TEST_CASE("game creation and derived parameters") {
  const Game game(50.0, 100.0, 10.0);
  double v, i, d, a, b, c;
  CHECK(hdq_game_values(game.handle, &v, &i, &d) == HDQ_OK);
  CHECK(v == 50.0);
  CHECK(i == 100.0);
  CHECK(d == 10.0);
  CHECK(hdq_game_derived(game.handle, &a, &b, &c) == HDQ_OK);
  CHECK(a == 25.0);
  CHECK(b == 50.0);
  CHECK(c == 15.0);
}

TEST_CASE("hierarchy violations surface as status plus message") {
  hdq_game* game = nullptr;
  CHECK(hdq_game_create(50.0, 40.0, 10.0, &game) == HDQ_ERROR_INVALID_ARGUMENT);
  CHECK(game == nullptr);
  CHECK(std::string(hdq_last_error()).find("v < i") != std::string::npos);

  CHECK(hdq_game_create(50.0, 100.0, 30.0, &game) ==
        HDQ_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(hdq_last_error()).find("2d < v") != std::string::npos);
}

TEST_CASE("null pointers are rejected") {
  CHECK(hdq_game_create(50.0, 100.0, 10.0, nullptr) == HDQ_ERROR_NULL_POINTER);
  double out;
  CHECK(hdq_critical_gamma(nullptr, &out) == HDQ_ERROR_NULL_POINTER);
  hdq_outcome outcome;
  CHECK(hdq_play(nullptr, 0, 0, 0, 0, 0, &outcome) == HDQ_ERROR_NULL_POINTER);
}

TEST_CASE("play through the C surface") {
  const Game game(50.0, 100.0, 10.0);
  hdq_outcome outcome{};
  CHECK(hdq_play(game.handle, 0.0, kHalfPi, 0.0, kHalfPi, kQuarterPi,
                 &outcome) == HDQ_OK);
  CHECK(std::abs(outcome.p_dd - 1.0) <= 1e-12);
  CHECK(std::abs(outcome.payoff_row - 15.0) <= 1e-12);
  CHECK(std::abs(outcome.payoff_col - 15.0) <= 1e-12);

  // out-of-range gamma
  CHECK(hdq_play(game.handle, 0.0, 0.0, 0.0, 0.0, 1.0, &outcome) ==
        HDQ_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(hdq_last_error()).find("gamma") != std::string::npos);

  // out-of-range strategy angle
  CHECK(hdq_play(game.handle, 2.0, 0.0, 0.0, 0.0, 0.1, &outcome) ==
        HDQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("sampled play is reproducible") {
  const Game game(50.0, 100.0, 10.0);
  hdq_outcome outcome{};
  uint64_t counts1[4], counts2[4];
  CHECK(hdq_play_sampled(game.handle, 0.7, 0.2, 0.3, 0.9, 0.4, 5000, 11,
                         counts1, &outcome) == HDQ_OK);
  CHECK(hdq_play_sampled(game.handle, 0.7, 0.2, 0.3, 0.9, 0.4, 5000, 11,
                         counts2, &outcome) == HDQ_OK);
  uint64_t total = 0;
  for (int k = 0; k < 4; ++k) {
    CHECK(counts1[k] == counts2[k]);
    total += counts1[k];
  }
  CHECK(total == 5000);
}

TEST_CASE("classical baseline and critical gamma") {
  const Game game(50.0, 100.0, 10.0);
  hdq_classical_equilibrium eq{};
  CHECK(hdq_classical_mixed_ess(game.handle, &eq) == HDQ_OK);
  CHECK(std::abs(eq.hawk_prob - 7.0 / 12.0) <= 1e-12);
  CHECK(std::abs(eq.average_payoff - 6.25) <= 1e-12);

  double row, col;
  CHECK(hdq_classical_payoff(game.handle, 1.0, 0.0, &row, &col) == HDQ_OK);
  CHECK(row == 50.0);
  CHECK(col == 0.0);
  CHECK(hdq_classical_payoff(game.handle, 2.0, 0.0, &row, &col) ==
        HDQ_ERROR_INVALID_ARGUMENT);

  double gc = 0.0;
  CHECK(hdq_critical_gamma(game.handle, &gc) == HDQ_OK);
  CHECK(std::abs(gc - 0.5 * std::acos(std::sqrt(0.3))) <= 1e-15);
}

TEST_CASE("closed form and its validation") {
  const Game game(50.0, 100.0, 10.0);
  double payoff = 0.0;
  CHECK(hdq_closed_form_payoff(game.handle, kHalfPi, 0.0, 0.0, kHalfPi, 0.2,
                               &payoff) == HDQ_OK);
  CHECK(std::abs(payoff - 50.0 * std::cos(0.4) * std::cos(0.4)) <= 1e-12);

  hdq_validation_report report{};
  CHECK(hdq_validate_closed_form(game.handle, 2000, 1e-9, HDQ_RESTRICT_NONE,
                                 42, &report) == HDQ_OK);
  CHECK(report.passed == 1);
  CHECK(report.max_deviation <= 1e-12);
  CHECK(report.samples == 2000);

  CHECK(hdq_validate_closed_form(game.handle, 100, 1e-9, 9, 42, &report) ==
        HDQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("analysis handle exposes the full report") {
  const Game game(50.0, 100.0, 10.0);
  hdq_analysis* analysis = nullptr;
  REQUIRE(hdq_analyze(game.handle, kQuarterPi, 61, &analysis) == HDQ_OK);

  hdq_equilibrium_summary summary{};
  CHECK(hdq_analysis_summary(analysis, &summary) == HDQ_OK);
  CHECK(summary.gamma == kQuarterPi);
  CHECK(summary.grid_n == 61);
  CHECK(summary.qq_is_nash == 1);
  CHECK(summary.qq_is_ess == 1);
  CHECK(summary.qq_is_unique_best_response == 1);
  CHECK(summary.qq_is_pareto_optimal == 0);
  CHECK(summary.counterexample_found == 1);
  CHECK(summary.cx_payoff_row >= 15.0);
  CHECK(summary.cx_payoff_col >= 15.0);

  size_t count = 0;
  CHECK(hdq_analysis_best_response_count(analysis, &count) == HDQ_OK);
  REQUIRE(count == 1);
  double theta, phi, payoff;
  CHECK(hdq_analysis_best_response(analysis, 0, &theta, &phi, &payoff) ==
        HDQ_OK);
  CHECK(std::abs(theta - 0.0) <= 1e-6);
  CHECK(std::abs(phi - kHalfPi) <= 1e-6);
  CHECK(std::abs(payoff - 15.0) <= 1e-9);
  CHECK(hdq_analysis_best_response(analysis, count, &theta, &phi, &payoff) ==
        HDQ_ERROR_INVALID_ARGUMENT);

  hdq_analysis_destroy(analysis);

  // invalid grid
  CHECK(hdq_analyze(game.handle, 0.1, 1, &analysis) ==
        HDQ_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("version string is present") {
  CHECK(std::strlen(hdq_version()) > 0);
}
