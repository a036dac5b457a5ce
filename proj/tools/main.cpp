// Command-line front end for the hawkdove shared library: single-round
// evaluation, entanglement sweeps, equilibrium reports and the closed-form
// audit. Built entirely on the public C API.

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "hawkdove/hawkdove.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTieTolerance = 1e-9;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(hdq_status status) {
  if (status != HDQ_OK) throw CliError(hdq_last_error());
}

// Angles are radians by default; a trailing "deg" converts from degrees.
double parse_angle(const std::string& text) {
  std::string t = text;
  const auto first = t.find_first_not_of(" \t");
  const auto last = t.find_last_not_of(" \t");
  if (first == std::string::npos) throw CliError("empty angle value");
  t = t.substr(first, last - first + 1);
  bool degrees = false;
  if (t.size() > 3 && t.substr(t.size() - 3) == "deg") {
    degrees = true;
    t = t.substr(0, t.size() - 3);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
  }
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(t, &used);
  } catch (const std::exception&) {
    throw CliError("cannot parse angle '" + text + "'");
  }
  if (used != t.size()) throw CliError("cannot parse angle '" + text + "'");
  value = degrees ? value * std::numbers::pi / 180.0 : value;
  // Snap values written with truncated decimals onto the nearby bound so
  // e.g. 1.5707963268 is accepted as pi/2.
  for (double bound : {0.0, kQuarterPi, kHalfPi}) {
    if (value != bound && std::abs(value - bound) <= 1e-9) value = bound;
  }
  return value;
}

std::pair<double, double> parse_strategy(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw CliError("strategy must be given as theta,phi (got '" + text + "')");
  }
  return {parse_angle(text.substr(0, comma)), parse_angle(text.substr(comma + 1))};
}

std::string fmt12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw CliError("cannot open output file '" + output_path + "'");
  out << content;
}

struct GameArgs {
  double v = 50.0;
  double i = 100.0;
  double d = 10.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--v", v, "Resource value")->capture_default_str();
    cmd->add_option("--i", i, "Injury cost")->capture_default_str();
    cmd->add_option("--d", d, "Display cost")->capture_default_str();
  }
};

class GameHandle {
 public:
  explicit GameHandle(const GameArgs& args) {
    check(hdq_game_create(args.v, args.i, args.d, &game_));
  }
  ~GameHandle() { hdq_game_destroy(game_); }
  GameHandle(const GameHandle&) = delete;
  GameHandle& operator=(const GameHandle&) = delete;

  const hdq_game* get() const { return game_; }

  ordered_json describe() const {
    double v, i, d, a, b, c;
    check(hdq_game_values(game_, &v, &i, &d));
    check(hdq_game_derived(game_, &a, &b, &c));
    return ordered_json{{"v", v}, {"i", i}, {"d", d},
                        {"a", a}, {"b", b}, {"c", c}};
  }

 private:
  hdq_game* game_ = nullptr;
};

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int run_play(const GameArgs& game_args, const std::string& row_text,
             const std::string& col_text, const std::string& gamma_text,
             std::uint64_t shots, std::uint64_t seed,
             const std::string& output_path) {
  const GameHandle game(game_args);
  const auto [theta_r, phi_r] = parse_strategy(row_text);
  const auto [theta_c, phi_c] = parse_strategy(col_text);
  const double gamma = parse_angle(gamma_text);

  hdq_outcome outcome{};
  std::uint64_t counts[4] = {0, 0, 0, 0};
  if (shots > 0) {
    check(hdq_play_sampled(game.get(), theta_r, phi_r, theta_c, phi_c, gamma,
                           shots, seed, counts, &outcome));
  } else {
    check(hdq_play(game.get(), theta_r, phi_r, theta_c, phi_c, gamma, &outcome));
  }

  ordered_json j{
      {"game", game.describe()},
      {"gamma", gamma},
      {"row_strategy", ordered_json{{"theta", theta_r}, {"phi", phi_r}}},
      {"col_strategy", ordered_json{{"theta", theta_c}, {"phi", phi_c}}},
      {"probabilities", ordered_json{{"DD", outcome.p_dd},
                                     {"DH", outcome.p_dh},
                                     {"HD", outcome.p_hd},
                                     {"HH", outcome.p_hh}}},
      {"payoff_row", outcome.payoff_row},
      {"payoff_col", outcome.payoff_col},
  };
  if (shots > 0) {
    j["shots"] = shots;
    j["seed"] = seed;
    j["counts"] = ordered_json{{"DD", counts[0]},
                               {"DH", counts[1]},
                               {"HD", counts[2]},
                               {"HH", counts[3]}};
  }
  emit(dump(j), output_path);
  return 0;
}

int run_sweep(const GameArgs& game_args, int steps, const std::string& format,
              const std::string& output_path) {
  if (steps < 2) throw CliError("--steps must be >= 2");
  const GameHandle game(game_args);
  double gamma_c = 0.0;
  check(hdq_critical_gamma(game.get(), &gamma_c));

  struct Row {
    double gamma, d, h, q;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    const double gamma =
        kQuarterPi * static_cast<double>(k) / static_cast<double>(steps - 1);
    hdq_outcome vs_d{}, vs_h{}, vs_q{};
    check(hdq_play(game.get(), 0.0, 0.0, 0.0, kHalfPi, gamma, &vs_d));
    check(hdq_play(game.get(), kHalfPi, 0.0, 0.0, kHalfPi, gamma, &vs_h));
    check(hdq_play(game.get(), 0.0, kHalfPi, 0.0, kHalfPi, gamma, &vs_q));
    rows.push_back(Row{gamma, vs_d.payoff_row, vs_h.payoff_row, vs_q.payoff_row});
  }

  if (format == "json") {
    ordered_json meta = game.describe();
    meta["gamma_c"] = gamma_c;
    meta["steps"] = steps;
    ordered_json out{{"meta", meta}, {"rows", ordered_json::array()}};
    for (const Row& r : rows) {
      out["rows"].push_back(ordered_json{{"gamma", r.gamma},
                                         {"payoff_D_vs_Q", r.d},
                                         {"payoff_H_vs_Q", r.h},
                                         {"payoff_Q_vs_Q", r.q}});
    }
    emit(dump(out), output_path);
    return 0;
  }

  double a, b, c;
  check(hdq_game_derived(game.get(), &a, &b, &c));
  std::string csv;
  csv += "# hawkdove sweep\n";
  csv += "# v=" + fmt12(game_args.v) + " i=" + fmt12(game_args.i) +
         " d=" + fmt12(game_args.d) + "\n";
  csv += "# a=" + fmt12(a) + " b=" + fmt12(b) + " c=" + fmt12(c) + "\n";
  csv += "# gamma_c=" + fmt12(gamma_c) + "\n";
  csv += "# steps=" + std::to_string(steps) + "\n";
  csv += "gamma,payoff_D_vs_Q,payoff_H_vs_Q,payoff_Q_vs_Q\n";
  for (const Row& r : rows) {
    csv += fmt12(r.gamma) + "," + fmt12(r.d) + "," + fmt12(r.h) + "," +
           fmt12(r.q) + "\n";
  }
  emit(csv, output_path);
  return 0;
}

int run_analyze(const GameArgs& game_args, const std::string& gamma_text,
                int grid_n, const std::string& output_path) {
  const GameHandle game(game_args);
  const double gamma = parse_angle(gamma_text);

  hdq_analysis* analysis = nullptr;
  check(hdq_analyze(game.get(), gamma, grid_n, &analysis));
  struct Guard {
    hdq_analysis* a;
    ~Guard() { hdq_analysis_destroy(a); }
  } guard{analysis};

  hdq_equilibrium_summary s{};
  check(hdq_analysis_summary(analysis, &s));

  ordered_json best = ordered_json::array();
  std::size_t n = 0;
  check(hdq_analysis_best_response_count(analysis, &n));
  for (std::size_t k = 0; k < n; ++k) {
    double theta, phi, payoff;
    check(hdq_analysis_best_response(analysis, k, &theta, &phi, &payoff));
    best.push_back(
        ordered_json{{"theta", theta}, {"phi", phi}, {"payoff", payoff}});
  }

  ordered_json counterexample;
  if (s.counterexample_found) {
    counterexample = ordered_json{
        {"row_strategy",
         ordered_json{{"theta", s.cx_theta_row}, {"phi", s.cx_phi_row}}},
        {"col_strategy",
         ordered_json{{"theta", s.cx_theta_col}, {"phi", s.cx_phi_col}}},
        {"payoff_row", s.cx_payoff_row},
        {"payoff_col", s.cx_payoff_col}};
  }

  ordered_json j{
      {"game", game.describe()},
      {"gamma", s.gamma},
      {"gamma_critical", s.gamma_critical},
      {"grid_n", s.grid_n},
      {"tie_tolerance", kTieTolerance},
      {"is_QQ_nash", s.qq_is_nash != 0},
      {"is_QQ_ess", s.qq_is_ess != 0},
      {"is_QQ_unique_best_response", s.qq_is_unique_best_response != 0},
      {"is_QQ_pareto_optimal", s.qq_is_pareto_optimal != 0},
      {"pareto_counterexample", counterexample},
      {"best_responses_to_Q", best},
      {"classical_baseline",
       ordered_json{{"hawk_probability", s.classical_baseline.hawk_prob},
                    {"average_payoff", s.classical_baseline.average_payoff}}},
  };
  emit(dump(j), output_path);
  return 0;
}

int run_validate(const GameArgs& game_args, long samples, double tolerance,
                 const std::string& restrict_name, std::uint64_t seed,
                 const std::string& output_path) {
  const GameHandle game(game_args);
  std::string name = restrict_name;
  for (char& ch : name) ch = static_cast<char>(std::tolower(ch));
  int restriction = HDQ_RESTRICT_NONE;
  if (name == "phi-zero")
    restriction = HDQ_RESTRICT_PHI_ZERO;
  else if (name == "named-vs-q")
    restriction = HDQ_RESTRICT_NAMED_VS_Q;
  else if (name != "none")
    throw CliError("--restrict must be none, phi-zero or named-vs-q");

  hdq_validation_report report{};
  check(hdq_validate_closed_form(game.get(), samples, tolerance, restriction,
                                 seed, &report));

  ordered_json j{
      {"game", game.describe()},
      {"samples", report.samples},
      {"seed", report.seed},
      {"restriction", name},
      {"tolerance", report.tolerance},
      {"max_deviation", report.max_deviation},
      {"worst_case",
       ordered_json{{"theta_row", report.worst_theta_row},
                    {"phi_row", report.worst_phi_row},
                    {"theta_col", report.worst_theta_col},
                    {"phi_col", report.worst_phi_col},
                    {"gamma", report.worst_gamma},
                    {"pipeline", report.worst_pipeline},
                    {"closed_form", report.worst_closed_form}}},
      {"passed", report.passed != 0},
  };
  emit(dump(j), output_path);
  return report.passed ? 0 : 3;
}

int run_classical(const GameArgs& game_args, const std::string& output_path) {
  const GameHandle game(game_args);
  hdq_classical_equilibrium eq{};
  check(hdq_classical_mixed_ess(game.get(), &eq));
  double a, b, c;
  check(hdq_game_derived(game.get(), &a, &b, &c));

  ordered_json j{
      {"game", game.describe()},
      {"hawk_probability", eq.hawk_prob},
      {"average_payoff", eq.average_payoff},
      {"cooperative_payoff", c},
  };
  emit(dump(j), output_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized Hawk-Dove game engine"};
  app.require_subcommand(1);

  std::string output_path;
  const auto add_output = [&output_path](CLI::App* cmd) {
    cmd->add_option("--output", output_path,
                    "Write output to this file instead of standard output");
  };

  GameArgs game_args;
  std::string row_text = "0,0", col_text = "0,0", gamma_text = "0";
  std::uint64_t shots = 0, seed = 12345;
  int steps = 256, grid_n = 181;
  std::string format = "csv", restrict_name = "none";
  long samples = 10000;
  double tolerance = 1e-9;

  CLI::App* play = app.add_subcommand("play", "Evaluate one quantized round");
  game_args.add_to(play);
  add_output(play);
  play->add_option("--row", row_text, "Row strategy as theta,phi")->required();
  play->add_option("--col", col_text, "Column strategy as theta,phi")->required();
  play->add_option("--gamma", gamma_text, "Entanglement parameter")->required();
  play->add_option("--shots", shots, "Also draw this many measurement samples");
  play->add_option("--seed", seed, "Seed for --shots")->capture_default_str();

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Payoffs of the named strategies against Q over gamma");
  game_args.add_to(sweep);
  add_output(sweep);
  sweep->add_option("--steps", steps, "Number of gamma samples")
      ->capture_default_str();
  sweep->add_option("--format", format, "csv or json")->capture_default_str();

  CLI::App* analyze =
      app.add_subcommand("analyze", "Equilibrium report at one gamma");
  game_args.add_to(analyze);
  add_output(analyze);
  analyze->add_option("--gamma", gamma_text, "Entanglement parameter")
      ->required();
  analyze->add_option("--grid-n", grid_n, "Lattice points per strategy axis")
      ->capture_default_str();

  CLI::App* validate = app.add_subcommand(
      "validate", "Audit the closed-form payoff against the pipeline");
  game_args.add_to(validate);
  add_output(validate);
  validate->add_option("--samples", samples, "Random samples")
      ->capture_default_str();
  validate->add_option("--tolerance", tolerance, "Pass/fail threshold")
      ->capture_default_str();
  validate->add_option("--restrict", restrict_name,
                       "none, phi-zero or named-vs-q")
      ->capture_default_str();
  validate->add_option("--seed", seed, "Sampling seed")->capture_default_str();

  CLI::App* classical =
      app.add_subcommand("classical", "Classical mixed-equilibrium baseline");
  game_args.add_to(classical);
  add_output(classical);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (play->parsed()) {
      return run_play(game_args, row_text, col_text, gamma_text, shots, seed,
                      output_path);
    }
    if (sweep->parsed()) {
      return run_sweep(game_args, steps, format, output_path);
    }
    if (analyze->parsed()) {
      return run_analyze(game_args, gamma_text, grid_n, output_path);
    }
    if (validate->parsed()) {
      return run_validate(game_args, samples, tolerance, restrict_name, seed,
                          output_path);
    }
    if (classical->parsed()) {
      return run_classical(game_args, output_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
