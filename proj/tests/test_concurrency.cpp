// The engine is pure functions over immutable values; concurrent callers
// must see bit-identical results with no coordination.

#include <thread>
#include <vector>

#include "doctest.h"
#include "equilibrium.hpp"

using namespace hawkdove;

TEST_CASE("concurrent pipeline evaluations match the serial results") {
  const PayoffMatrix m = PayoffMatrix::make(50.0, 100.0, 10.0);
  const int n = 400;

  std::vector<GameOutcome> serial(n);
  for (int k = 0; k < n; ++k) {
    const double t = kHalfPi * k / (n - 1);
    serial[static_cast<std::size_t>(k)] =
        play(Strategy(t, kHalfPi - t), Strategy(t / 2.0, t), kQuarterPi * k / n, m);
  }

  std::vector<GameOutcome> parallel(n);
  std::vector<std::thread> workers;
  const int threads = 8;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (int k = w; k < n; k += threads) {
        const double t = kHalfPi * k / (n - 1);
        parallel[static_cast<std::size_t>(k)] = play(
            Strategy(t, kHalfPi - t), Strategy(t / 2.0, t), kQuarterPi * k / n, m);
      }
    });
  }
  for (std::thread& worker : workers) worker.join();

  for (int k = 0; k < n; ++k) {
    const GameOutcome& a = serial[static_cast<std::size_t>(k)];
    const GameOutcome& b = parallel[static_cast<std::size_t>(k)];
    CHECK(a.p_dd == b.p_dd);
    CHECK(a.p_dh == b.p_dh);
    CHECK(a.p_hd == b.p_hd);
    CHECK(a.p_hh == b.p_hh);
    CHECK(a.payoff_row == b.payoff_row);
    CHECK(a.payoff_col == b.payoff_col);
  }
}

TEST_CASE("concurrent best-response searches agree") {
  const PayoffMatrix m = PayoffMatrix::make(50.0, 100.0, 10.0);
  std::vector<std::vector<BestResponse>> results(6);
  std::vector<std::thread> workers;
  for (int w = 0; w < 6; ++w) {
    workers.emplace_back([&, w] {
      results[static_cast<std::size_t>(w)] =
          best_responses(Strategy::quantum(), 0.6, m, 61);
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (const auto& set : results) {
    REQUIRE(set.size() == results.front().size());
    for (std::size_t k = 0; k < set.size(); ++k) {
      CHECK(set[k].strategy.theta() == results.front()[k].strategy.theta());
      CHECK(set[k].strategy.phi() == results.front()[k].strategy.phi());
      CHECK(set[k].payoff == results.front()[k].payoff);
    }
  }
}
