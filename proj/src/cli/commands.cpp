// Copyright 2026 The QGame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <optional>

#include "qgame/builtin/fixture.hpp"
#include "qgame/cli/format.hpp"
#include "qgame/cli/game_file.hpp"
#include "qgame/cli/strategy_file.hpp"
#include "qgame/equilibrium/best_response.hpp"
#include "qgame/equilibrium/nash.hpp"
#include "qgame/game/classical.hpp"
#include "qgame/game/payoff.hpp"
#include "qgame/game/payoff_tensor.hpp"
#include "qgame/game/simulate.hpp"
#include "qgame/rng.hpp"
#include "qgame/tolerances.hpp"

namespace qgame::cli {

using game::Player;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParseError:
    case ErrorKind::kUsageError:
      return kExitParse;
    case ErrorKind::kCrossCheckFailure:
      return kExitCrossCheck;
    case ErrorKind::kNoConvergence:
      return kExitNoConvergence;
    default:
      return kExitValidation;
  }
}

namespace {

constexpr double kCrossCheckTol = 1e-9;
constexpr double kFixtureTol = 1e-12;

Player parse_player(const std::string& s) {
  if (s == "I" || s == "1") return Player::kI;
  if (s == "II" || s == "2") return Player::kII;
  throw Error(ErrorKind::kUsageError,
              fmt::format("player must be I or II, got '{}'", s));
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_matrix(std::ostream& out, const ComplexMatrix& m,
                  const std::string& indent) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const cplx& z : m.data()) {
    cells.push_back(format_complex(z, false));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out << indent;
    for (std::size_t c = 0; c < m.dim(); ++c)
      out << (c ? "  " : "") << fmt::format("{:>{}}", cells[r * m.dim() + c], width);
    out << '\n';
  }
}

struct Common {
  bool json_out = false;
};

void add_json_flag(CLI::App* cmd, Common& common) {
  cmd->add_flag("--json", common.json_out, "Machine-readable JSON output");
}

// ---- validate -------------------------------------------------------------

int cmd_validate(const std::string& path, const Common& common, double tol,
                 std::ostream& out) {
  const RawGame raw = parse_game(read_json_file(path), path);
  const auto checks = game_checks(raw, tol);
  const bool ok = quantum::all_passed(checks);
  if (common.json_out) {
    json list = json::array();
    for (const auto& c : checks) {
      list.push_back({{"name", c.name},
                      {"kind", std::string(error_kind_name(c.kind))},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"passed", c.passed()}});
    }
    print_json(out, {{"command", "validate"},
                     {"game", path},
                     {"valid", ok},
                     {"checks", std::move(list)}});
  } else {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    for (const auto& c : checks) {
      out << fmt::format("{:<{}}  {}  residual {}  (tol {})", c.name, width,
                         c.passed() ? "PASS" : "FAIL", format_real(c.residual),
                         format_real(c.tolerance));
      if (!c.passed()) out << "  " << error_kind_name(c.kind);
      out << '\n';
    }
    out << (ok ? "valid\n" : "INVALID\n");
  }
  return ok ? kExitOk : kExitValidation;
}

// ---- tensor ---------------------------------------------------------------

json tensor_to_json(const game::PayoffTensor& a) {
  json rows = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (const cplx& z : a.row(r)) row.push_back(complex_to_json(z));
    rows.push_back(std::move(row));
  }
  return {{"player", std::string(game::player_name(a.player()))},
          {"n1", a.n1()},
          {"n2", a.n2()},
          {"rows", a.rows()},
          {"cols", a.cols()},
          {"entries", std::move(rows)}};
}

void print_tensor_text(std::ostream& out, const game::PayoffTensor& a,
                       bool exact) {
  std::vector<std::string> cells;
  cells.reserve(a.rows() * a.cols());
  std::vector<std::size_t> width(a.cols(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      cells.push_back(format_complex(a.flat(r, c), exact));
      width[c] = std::max(width[c], cells.back().size());
    }
  }
  out << fmt::format("A^{}  ({} x {}; row = alpha*{} + beta, col = gamma*{} + delta)\n",
                     game::player_name(a.player()), a.rows(), a.cols(),
                     a.n1() * a.n1(), a.n2() * a.n2());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out << (c ? "  " : "") << fmt::format("{:>{}}", cells[r * a.cols() + c], width[c]);
    }
    out << '\n';
  }
}

int check_fixture(const game::PayoffTensor& a, const Common& common,
                  std::ostream& out) {
  if (a.n1() != 2 || a.n2() != 2) {
    throw Error(ErrorKind::kUsageError,
                "--check-fixture needs a qubit game (n1 = n2 = 2)");
  }
  const auto refs = builtin::reference_payoff_tensors();
  const game::PayoffTensor& ref =
      a.player() == Player::kI ? refs.first : refs.second;
  std::size_t matched = 0;
  json mismatches = json::array();
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (std::abs(a.flat(r, c) - ref.flat(r, c)) <= kFixtureTol) {
        ++matched;
        continue;
      }
      mismatches.push_back({{"row", r + 1},
                            {"col", c + 1},
                            {"computed", complex_to_json(a.flat(r, c))},
                            {"fixture", complex_to_json(ref.flat(r, c))}});
      lines.push_back(fmt::format("  ({}, {}): computed {}, fixture {}", r + 1,
                                  c + 1, format_complex(a.flat(r, c), true),
                                  format_complex(ref.flat(r, c), true)));
    }
  }
  const std::size_t total = a.rows() * a.cols();
  if (common.json_out) {
    print_json(out, {{"command", "tensor"},
                     {"player", std::string(game::player_name(a.player()))},
                     {"matched", matched},
                     {"total", total},
                     {"mismatches", std::move(mismatches)}});
  } else {
    out << fmt::format("match: {}/{} entries\n", matched, total);
    for (const auto& l : lines) out << l << '\n';
  }
  return matched == total ? kExitOk : kExitValidation;
}

// ---- payoff ---------------------------------------------------------------

struct Loaded {
  LoadedGame game;
  Strategy s1;
  Strategy s2;
};

Loaded load_profile(const std::string& game_path, const std::string& s1,
                    const std::string& s2, double tol) {
  LoadedGame g = load_game(game_path, tol);
  Strategy a = load_strategy(s1, g.game.n1(), tol);
  Strategy b = load_strategy(s2, g.game.n2(), tol);
  return {std::move(g), std::move(a), std::move(b)};
}

int cmd_payoff(const std::string& game_path, const std::string& s1,
               const std::string& s2, const Common& common, double tol,
               std::ostream& out) {
  const Loaded in = load_profile(game_path, s1, s2, tol);
  const auto a_i = game::payoff_tensor_matrix_unit(in.game.game, Player::kI);
  const auto a_ii = game::payoff_tensor_matrix_unit(in.game.game, Player::kII);
  const double p1 = game::payoff_contract(a_i, in.s1.chi, in.s2.chi);
  const double p2 = game::payoff_contract(a_ii, in.s1.chi, in.s2.chi);
  std::optional<double> diff;
  if (in.s1.kraus && in.s2.kraus) {
    const double d1 = game::payoff_direct(in.game.game, *in.s1.kraus,
                                          *in.s2.kraus, Player::kI);
    const double d2 = game::payoff_direct(in.game.game, *in.s1.kraus,
                                          *in.s2.kraus, Player::kII);
    diff = std::max(std::abs(d1 - p1), std::abs(d2 - p2));
    if (*diff > kCrossCheckTol) {
      throw Error(ErrorKind::kCrossCheckFailure,
                  fmt::format("tensor contraction ({}, {}) and direct "
                              "evaluation ({}, {}) differ by {:.3e}",
                              p1, p2, d1, d2, *diff),
                  *diff);
    }
  }
  if (common.json_out) {
    json check = {{"performed", diff.has_value()}};
    if (diff) check["max_diff"] = *diff;
    print_json(out, {{"command", "payoff"},
                     {"payoff_I", p1},
                     {"payoff_II", p2},
                     {"cross_check", std::move(check)}});
  } else {
    out << fmt::format("payoffs: ({}, {})\n", format_real(p1), format_real(p2));
    if (diff) {
      out << fmt::format("cross-check: direct evaluation agrees (max diff {})\n",
                         format_sci1(*diff));
    } else {
      out << "cross-check: skipped (chi-form strategy)\n";
    }
  }
  return kExitOk;
}

// ---- best-response --------------------------------------------------------

int cmd_best_response(const std::string& game_path, const std::string& opp,
                      const std::string& player_arg, double br_tol,
                      std::size_t max_iters, const Common& common, double tol,
                      std::ostream& out, std::ostream& err) {
  const Player player = parse_player(player_arg);
  const LoadedGame g = load_game(game_path, tol);
  const Player other = game::opponent_of(player);
  const Strategy s = load_strategy(opp, g.game.dim_of(other), tol);
  const auto a = game::payoff_tensor_matrix_unit(g.game, player);
  const auto problem = equilibrium::response_problem(a, s.chi, player);
  equilibrium::BestResponseOptions options;
  options.tol = br_tol;
  options.max_iters = max_iters;
  const auto r = equilibrium::best_response(problem, options);
  if (common.json_out) {
    print_json(out, {{"command", "best-response"},
                     {"player", std::string(game::player_name(player))},
                     {"value", r.value},
                     {"dual_bound", r.dual_bound},
                     {"gap", r.gap},
                     {"iterations", r.iterations},
                     {"converged", r.converged},
                     {"strategy", strategy_to_json(r.chi_opt)}});
  } else {
    out << fmt::format("player: {}\n", game::player_name(player));
    out << fmt::format("value: {}\n", format_real(r.value));
    out << fmt::format("dual bound: {}\n", format_real(r.dual_bound));
    out << fmt::format("gap: {}\n", format_sci1(r.gap));
    out << fmt::format("iterations: {}\n", r.iterations);
    out << fmt::format("converged: {}\n", r.converged ? "yes" : "no");
    out << "chi:\n";
    print_matrix(out, r.chi_opt.matrix(), "  ");
  }
  if (!r.converged) {
    err << fmt::format("{}: gap {} still above tolerance {} after {} "
                       "iterations\n",
                       error_kind_name(ErrorKind::kNoConvergence),
                       format_sci1(r.gap), format_sci1(br_tol), r.iterations);
    return kExitNoConvergence;
  }
  return kExitOk;
}

// ---- verify-nash ----------------------------------------------------------

int cmd_verify_nash(const std::string& game_path, const std::string& s1,
                    const std::string& s2, double epsilon,
                    std::size_t max_iters, const Common& common, double tol,
                    std::ostream& out, std::ostream& err) {
  const Loaded in = load_profile(game_path, s1, s2, tol);
  equilibrium::BestResponseOptions options;
  // Certify each response well inside epsilon.
  options.tol = std::min(options.tol, epsilon / 10.0);
  options.max_iters = max_iters;
  const auto rep =
      equilibrium::verify_nash(in.game.game, in.s1.chi, in.s2.chi, epsilon, options);
  if (common.json_out) {
    auto side = [](double payoff, double gap,
                   const equilibrium::BestResponseResult& r) {
      return json{{"payoff", payoff},
                  {"best_response", r.value},
                  {"dual_bound", r.dual_bound},
                  {"gap", gap},
                  {"iterations", r.iterations},
                  {"converged", r.converged}};
    };
    print_json(out, {{"command", "verify-nash"},
                     {"epsilon", epsilon},
                     {"equilibrium", rep.is_equilibrium},
                     {"I", side(rep.payoff_i, rep.gap_i, rep.response_i)},
                     {"II", side(rep.payoff_ii, rep.gap_ii, rep.response_ii)}});
  } else {
    out << fmt::format("{} (gaps {}, {})\n",
                       rep.is_equilibrium ? "EQUILIBRIUM" : "NOT EQUILIBRIUM",
                       format_sci1(rep.gap_i), format_sci1(rep.gap_ii));
    out << fmt::format("player I:  payoff {}  best response {}  gap_I {}\n",
                       format_real(rep.payoff_i),
                       format_real(rep.response_i.value), format_real(rep.gap_i));
    out << fmt::format("player II: payoff {}  best response {}  gap_II {}\n",
                       format_real(rep.payoff_ii),
                       format_real(rep.response_ii.value),
                       format_real(rep.gap_ii));
  }
  if (!rep.converged()) {
    err << fmt::format("{}: a best-response solve did not certify its gap\n",
                       error_kind_name(ErrorKind::kNoConvergence));
    return kExitNoConvergence;
  }
  return rep.is_equilibrium ? kExitOk : kExitValidation;
}

// ---- simulate -------------------------------------------------------------

quantum::KrausChannel kraus_of(const Strategy& s) {
  return s.kraus ? *s.kraus : quantum::chi_to_kraus(s.chi);
}

int cmd_simulate(const std::string& game_path, const std::string& povm_path,
                 const std::string& s1, const std::string& s2,
                 std::uint64_t rounds, std::optional<std::uint64_t> seed,
                 const Common& common, double tol, std::ostream& out) {
  if (rounds == 0) {
    throw Error(ErrorKind::kUsageError, "--rounds must be at least 1");
  }
  const Loaded in = load_profile(game_path, s1, s2, tol);
  const game::RefereeMeasurement m = load_measurement(povm_path, tol);
  const std::uint64_t used_seed = seed.value_or(kDefaultSeed);
  Rng rng(used_seed);
  const auto r = game::simulate_play(in.game.game, m, kraus_of(in.s1),
                                     kraus_of(in.s2), rounds, rng);
  auto z_score = [&](int p) -> std::optional<double> {
    const double dev = r.mean[p] - r.exact[p];
    if (r.standard_error[p] > 0.0) return dev / r.standard_error[p];
    if (std::abs(dev) <= 1e-12) return 0.0;
    return std::nullopt;
  };
  if (common.json_out) {
    json players = json::object();
    for (int p = 0; p < 2; ++p) {
      const auto z = z_score(p);
      players[p == 0 ? "I" : "II"] = {{"mean", r.mean[p]},
                                      {"standard_error", r.standard_error[p]},
                                      {"exact", r.exact[p]},
                                      {"z", z ? json(*z) : json(nullptr)}};
    }
    print_json(out, {{"command", "simulate"},
                     {"seed", used_seed},
                     {"seed_defaulted", !seed.has_value()},
                     {"rounds", r.rounds},
                     {"players", std::move(players)}});
  } else {
    out << fmt::format("seed: {}{}\n", used_seed, seed ? "" : " (default)");
    out << fmt::format("rounds: {}\n", r.rounds);
    for (int p = 0; p < 2; ++p) {
      const auto z = z_score(p);
      out << fmt::format("player {:<2}  mean {}  stderr {}  exact {}  z {}\n",
                         p == 0 ? "I" : "II", format_real(r.mean[p]),
                         format_real(r.standard_error[p]), format_real(r.exact[p]),
                         z ? format_real(*z) : std::string("inf"));
    }
  }
  return kExitOk;
}

// ---- classical ------------------------------------------------------------

int cmd_classical(const std::string& game_path, const Common& common,
                  double tol, std::ostream& out) {
  const LoadedGame g = load_game(game_path, tol);
  const game::ClassicalBimatrix b = game::classical_reduction(g.game);
  if (common.json_out) {
    json rows = json::array();
    for (std::size_t r = 0; r < b.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < b.cols; ++c)
        row.push_back(json::array({b.at(r, c).first, b.at(r, c).second}));
      rows.push_back(std::move(row));
    }
    print_json(out, {{"command", "classical"}, {"payoffs", std::move(rows)}});
    return kExitOk;
  }
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& [p1, p2] : b.entries) {
    cells.push_back(fmt::format("({}, {})", format_real(p1), format_real(p2)));
    width = std::max(width, cells.back().size());
  }
  out << fmt::format("{:>4}", "");
  for (std::size_t c = 0; c < b.cols; ++c) out << fmt::format("  {:>{}}", c, width);
  out << '\n';
  for (std::size_t r = 0; r < b.rows; ++r) {
    out << fmt::format("{:>4}", r);
    for (std::size_t c = 0; c < b.cols; ++c)
      out << fmt::format("  {:>{}}", cells[r * b.cols + c], width);
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Static two-player quantum games: validation, payoff tensors, "
               "best responses and Nash checks",
               "qgame"};
  app.require_subcommand(1);
  Common common;

  std::string game_path, povm_path, s1, s2, player = "I", format = "text";
  bool exact = false, fixture = false;
  double br_tol = equilibrium::BestResponseOptions{}.tol;
  double epsilon = 1e-6;
  std::size_t max_iters = equilibrium::BestResponseOptions{}.max_iters;
  std::uint64_t rounds = 100000;
  std::optional<std::uint64_t> seed;

  auto* validate = app.add_subcommand("validate", "Check a game file");
  validate->add_option("game", game_path)->required();
  add_json_flag(validate, common);

  auto* tensor = app.add_subcommand("tensor", "Print a payoff tensor");
  tensor->add_option("game", game_path)->required();
  tensor->add_option("player", player, "I or II")->required();
  tensor->add_option("--format", format, "text or rows")
      ->check(CLI::IsMember({"text", "rows"}));
  tensor->add_flag("--exact-fractions", exact, "Render small rationals exactly");
  tensor->add_flag("--check-fixture", fixture,
                   "Compare against the bundled reference tables");
  add_json_flag(tensor, common);

  auto* payoff = app.add_subcommand("payoff", "Payoffs of a strategy profile");
  payoff->add_option("game", game_path)->required();
  payoff->add_option("strategy-I", s1)->required();
  payoff->add_option("strategy-II", s2)->required();
  add_json_flag(payoff, common);

  auto* best = app.add_subcommand("best-response", "Certified best response");
  best->add_option("game", game_path)->required();
  best->add_option("opponent", s2, "Strategy of the other player")->required();
  best->add_option("--player", player, "Responding player, I or II");
  best->add_option("--tol", br_tol, "Duality gap target")
      ->check(CLI::PositiveNumber);
  best->add_option("--max-iters", max_iters, "Iteration budget");
  add_json_flag(best, common);

  auto* nash = app.add_subcommand("verify-nash", "epsilon-Nash check");
  nash->add_option("game", game_path)->required();
  nash->add_option("strategy-I", s1)->required();
  nash->add_option("strategy-II", s2)->required();
  nash->add_option("--epsilon", epsilon, "Allowed gain from deviating")
      ->check(CLI::PositiveNumber);
  nash->add_option("--max-iters", max_iters, "Iteration budget per solve");
  add_json_flag(nash, common);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo play");
  sim->add_option("game", game_path)->required();
  sim->add_option("povm", povm_path)->required();
  sim->add_option("strategy-I", s1)->required();
  sim->add_option("strategy-II", s2)->required();
  sim->add_option("--rounds", rounds, "Number of plays");
  sim->add_option("--seed", seed, "Generator seed");
  add_json_flag(sim, common);

  auto* classical = app.add_subcommand("classical", "Classical bimatrix");
  classical->add_option("game", game_path)->required();
  add_json_flag(classical, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    const double tol = validation_tolerance();
    if (validate->parsed()) return cmd_validate(game_path, common, tol, out);
    if (tensor->parsed()) {
      const Player p = parse_player(player);
      const LoadedGame g = load_game(game_path, tol);
      const auto a = game::payoff_tensor_matrix_unit(g.game, p);
      if (fixture) return check_fixture(a, common, out);
      if (common.json_out) {
        json j = tensor_to_json(a);
        j["command"] = "tensor";
        print_json(out, j);
      } else if (format == "rows") {
        out << builtin::format_payoff_fixture(a);
      } else {
        print_tensor_text(out, a, exact);
      }
      return kExitOk;
    }
    if (payoff->parsed()) return cmd_payoff(game_path, s1, s2, common, tol, out);
    if (best->parsed()) {
      return cmd_best_response(game_path, s2, player, br_tol, max_iters, common,
                               tol, out, err);
    }
    if (nash->parsed()) {
      return cmd_verify_nash(game_path, s1, s2, epsilon, max_iters, common, tol,
                             out, err);
    }
    if (sim->parsed()) {
      return cmd_simulate(game_path, povm_path, s1, s2, rounds, seed, common,
                          tol, out);
    }
    if (classical->parsed()) return cmd_classical(game_path, common, tol, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitParse;
}

}  // namespace qgame::cli
