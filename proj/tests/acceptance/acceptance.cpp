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

// Acceptance checks, one line per criterion:
//
//   qgame_acceptance            run all ten
//   qgame_acceptance --only N   run criterion N
//
// Exit status is 0 only if every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <functional>
#include <string>
#include <vector>

#include "qgame/builtin/ewl.hpp"
#include "qgame/builtin/fixture.hpp"
#include "qgame/equilibrium/nash.hpp"
#include "qgame/equilibrium/unitary_oracle.hpp"
#include "qgame/game/classical.hpp"
#include "qgame/game/payoff.hpp"
#include "qgame/game/simulate.hpp"
#include "random_objects.hpp"

namespace {

using namespace qgame;
using game::Player;
using linalg::ComplexMatrix;
using linalg::cplx;

struct Outcome {
  bool passed;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const quantum::ChiMatrix& strategy(const builtin::NamedGame& g,
                                   const std::string& name) {
  for (const auto& [n, chi] : g.reference_strategies)
    if (n == name) return chi;
  throw std::runtime_error("no reference strategy " + name);
}

// 1. Closed-form tensors against the stored reference tables.
Outcome reference_tables() {
  const auto t0 = Clock::now();
  const auto ewl = builtin::ewl_prisoners_dilemma(builtin::default_data_dir());
  const auto& [ref_i, ref_ii] = *ewl.reference_tensors;
  std::size_t matched = 0;
  std::size_t total = 0;
  std::string misses;
  for (Player p : {Player::kI, Player::kII}) {
    const auto a = game::payoff_tensor_matrix_unit(ewl.game, p);
    const auto& ref = p == Player::kI ? ref_i : ref_ii;
    for (std::size_t r = 0; r < 16; ++r) {
      for (std::size_t c = 0; c < 16; ++c) {
        ++total;
        const double d = std::abs(a.flat(r, c) - ref.flat(r, c));
        if (d <= 1e-12) {
          ++matched;
        } else {
          misses += fmt::format(" A^{}({},{})", game::player_name(p), r + 1, c + 1);
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {matched == total && secs < 1.0,
          fmt::format("{}/{} entries within 1e-12 in {:.3f} s{}{}", matched,
                      total, secs, misses.empty() ? "" : "; mismatched:",
                      misses)};
}

// 2. Literal trace evaluation against the matrix-unit closed form.
Outcome closed_form_identity() {
  const auto t0 = Clock::now();
  Rng rng(0x2002);
  double worst = 0.0;
  std::size_t games = 0;
  for (auto [n, count] : {std::pair{2, 100}, std::pair{3, 20}}) {
    for (int k = 0; k < count; ++k) {
      const auto g = testing::random_game(n, n, rng);
      for (Player p : {Player::kI, Player::kII}) {
        worst = std::max(worst, game::max_abs_diff(
                                    game::payoff_tensor_general(g, p),
                                    game::payoff_tensor_matrix_unit(g, p)));
      }
      ++games;
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && secs < 10.0,
          fmt::format("{} games, max |general - closed form| = {:.2e}, {:.2f} s",
                      games, worst, secs)};
}

// 3. Identity / bit-flip restriction of the quantized prisoner's dilemma.
Outcome classical_reduction() {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto b = game::classical_reduction(ewl.game);
  const double expected[2][2][2] = {{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}};
  double worst = 0.0;
  std::string table;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      worst = std::max({worst, std::abs(b.at(r, c).first - expected[r][c][0]),
                        std::abs(b.at(r, c).second - expected[r][c][1])});
      table += fmt::format(" ({:.6g},{:.6g})", b.at(r, c).first, b.at(r, c).second);
    }
  }
  return {b.rows == 2 && b.cols == 2 && worst <= 1e-10,
          fmt::format("bimatrix{}, max deviation {:.2e}", table, worst)};
}

// 4. The (chi*, xi*) profile pays 2.5 each and is certified as a Nash point.
Outcome equilibrium_reproduction() {
  const auto t0 = Clock::now();
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto eq = builtin::ewl_equilibrium_strategies();
  const auto a_i = game::payoff_tensor_matrix_unit(ewl.game, Player::kI);
  const auto a_ii = game::payoff_tensor_matrix_unit(ewl.game, Player::kII);
  const double p1 = game::payoff_contract(a_i, eq.chi_star, eq.xi_star);
  const double p2 = game::payoff_contract(a_ii, eq.chi_star, eq.xi_star);
  const auto rep = equilibrium::verify_nash(a_i, a_ii, eq.chi_star, eq.xi_star, 1e-5);
  const double secs = seconds_since(t0);
  const bool ok = std::abs(p1 - 2.5) <= 1e-10 && std::abs(p2 - 2.5) <= 1e-10 &&
                  rep.is_equilibrium && rep.response_i.gap <= 1e-5 &&
                  rep.response_ii.gap <= 1e-5 && secs < 30.0;
  return {ok, fmt::format("payoffs ({:.12g}, {:.12g}), equilibrium={}, "
                          "certificate gaps ({:.1e}, {:.1e}), {:.2f} s",
                          p1, p2, rep.is_equilibrium, rep.response_i.gap,
                          rep.response_ii.gap, secs)};
}

// 5. (identity, identity) is not an equilibrium: defecting gains 2.
Outcome non_equilibrium_detection() {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto& id = strategy(ewl, "identity");
  const auto rep = equilibrium::verify_nash(ewl.game, id, id, 1e-3);
  return {!rep.is_equilibrium && rep.gap_i >= 2.0 - 1e-3,
          fmt::format("equilibrium={}, gap_I={:.9g}, gap_II={:.9g}",
                      rep.is_equilibrium, rep.gap_i, rep.gap_ii)};
}

// 6. Direct evaluation against tensor contraction.
Outcome evaluation_equivalence() {
  Rng rng(0x6006);
  double worst = 0.0;
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 2}};
  for (int k = 0; k < 200; ++k) {
    const auto [n1, n2] = shapes[k % 3];
    const auto g = testing::random_game(n1, n2, rng);
    const auto ch1 = testing::random_channel(n1, rng);
    const auto ch2 = testing::random_channel(n2, rng);
    const auto chi = quantum::kraus_to_chi(ch1);
    const auto xi = quantum::kraus_to_chi(ch2);
    for (Player p : {Player::kI, Player::kII}) {
      const double direct = game::payoff_direct(g, ch1, ch2, p);
      const double contracted = game::payoff_contract(
          game::payoff_tensor_matrix_unit(g, p), chi, xi);
      worst = std::max(worst, std::abs(direct - contracted));
    }
  }
  return {worst <= 1e-9,
          fmt::format("200 channel pairs, max |direct - contraction| = {:.2e}",
                      worst)};
}

// States whose span is every n x n matrix: |i><i| and the two
// superpositions (|i> + |j>)/sqrt2, (|i> + i|j>)/sqrt2 for i < j.
std::vector<quantum::DensityMatrix> state_basis(std::size_t n) {
  std::vector<quantum::DensityMatrix> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(quantum::validate_density(ComplexMatrix::unit(n, i, i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (cplx phase : {cplx(1, 0), cplx(0, 1)}) {
        ComplexMatrix m = ComplexMatrix::zeros(n);
        m(i, i) = 0.5;
        m(j, j) = 0.5;
        m(i, j) = 0.5 * std::conj(phase);
        m(j, i) = 0.5 * phase;
        out.push_back(quantum::validate_density(m));
      }
    }
  }
  return out;
}

// 7. chi_to_kraus after kraus_to_chi acts like the original channel.
Outcome channel_round_trip() {
  Rng rng(0x7007);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const auto ch = testing::random_channel(n, rng, 5);
    const auto back = quantum::chi_to_kraus(quantum::kraus_to_chi(ch));
    for (const auto& rho : state_basis(n)) {
      worst = std::max(worst, linalg::max_abs_diff(
                                  quantum::apply_channel(ch, rho).matrix(),
                                  quantum::apply_channel(back, rho).matrix()));
    }
  }
  return {worst <= 1e-8,
          fmt::format("200 channels (n = 2..4), max output deviation {:.2e}", worst)};
}

// 8. Payoffs of random physical profiles stay inside [0, 5].
Outcome payoff_range() {
  Rng rng(0x8008);
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto a_i = game::payoff_tensor_matrix_unit(ewl.game, Player::kI);
  const auto a_ii = game::payoff_tensor_matrix_unit(ewl.game, Player::kII);
  double lo = 1e300;
  double hi = -1e300;
  for (int k = 0; k < 1000; ++k) {
    const auto chi = testing::random_chi(2, rng);
    const auto xi = testing::random_chi(2, rng);
    for (const auto* a : {&a_i, &a_ii}) {
      const double v = game::payoff_contract(*a, chi, xi);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo >= -1e-9 && hi <= 5.0 + 1e-9,
          fmt::format("1000 profiles, payoffs in [{:.6f}, {:.6f}]", lo, hi)};
}

// 9. Certified best response dominates the unitary grid; weak duality.
Outcome oracle_dominance() {
  Rng rng(0x9009);
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const game::PayoffTensor tensors[2] = {
      game::payoff_tensor_matrix_unit(ewl.game, Player::kI),
      game::payoff_tensor_matrix_unit(ewl.game, Player::kII)};
  equilibrium::BestResponseOptions options;
  options.tol = 1e-9;
  double worst_margin = 1e300;
  double worst_duality = 1e300;
  std::size_t unconverged = 0;
  for (int k = 0; k < 20; ++k) {
    const Player p = k % 2 == 0 ? Player::kI : Player::kII;
    const auto& a = tensors[p == Player::kI ? 0 : 1];
    const auto opp = testing::random_chi(2, rng);
    const auto problem = equilibrium::response_problem(a, opp, p);
    const auto br = equilibrium::best_response(problem, options);
    const auto oracle = equilibrium::unitary_oracle(a, opp, p);
    worst_margin = std::min(worst_margin, br.value - oracle.value);
    worst_duality = std::min(worst_duality, br.dual_bound - br.value);
    if (!br.converged) ++unconverged;
  }
  return {worst_margin >= -1e-8 && worst_duality >= 0.0,
          fmt::format("20 opponents, min(best response - oracle) = {:.3e}, "
                      "min(dual - primal) = {:.3e}, unconverged = {}",
                      worst_margin, worst_duality, unconverged)};
}

// 10. Monte Carlo play of (identity, identity).
Outcome monte_carlo() {
  const auto t0 = Clock::now();
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto id = quantum::unitary_channel(ComplexMatrix::identity(2));
  Rng a(42);
  Rng b(42);
  const auto r1 = game::simulate_play(ewl.game, *ewl.measurement, id, id, 100000, a);
  const auto r2 = game::simulate_play(ewl.game, *ewl.measurement, id, id, 100000, b);
  const double secs = seconds_since(t0);
  const bool same = r1.mean == r2.mean && r1.standard_error == r2.standard_error;
  const double dev = std::abs(r1.mean[0] - 3.0);
  return {dev <= 3.0 * r1.standard_error[0] && same && secs < 5.0,
          fmt::format("mean_I {:.12g}, stderr {:.3g}, |mean - 3| = {:.3g}, "
                      "repeatable={}, {:.2f} s (two runs)",
                      r1.mean[0], r1.standard_error[0], dev, same, secs)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "reference payoff tables", reference_tables},
      {2, "closed-form identity", closed_form_identity},
      {3, "classical reduction", classical_reduction},
      {4, "equilibrium reproduction", equilibrium_reproduction},
      {5, "non-equilibrium detection", non_equilibrium_detection},
      {6, "evaluation equivalence", evaluation_equivalence},
      {7, "channel round-trip", channel_round_trip},
      {8, "payoff range", payoff_range},
      {9, "oracle dominance", oracle_dominance},
      {10, "Monte Carlo consistency", monte_carlo},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      fmt::print(stderr, "usage: {} [--only N]\n", argv[0]);
      return 2;
    }
  }
  bool all_ok = true;
  int ran = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    fmt::print("criterion {:>2} {:<26} {}  {}\n", c.id, c.name,
               o.passed ? "PASS" : "FAIL", o.detail);
    all_ok = all_ok && o.passed;
  }
  if (ran == 0) {
    fmt::print(stderr, "no criterion {}\n", only);
    return 2;
  }
  return all_ok ? 0 : 1;
}
