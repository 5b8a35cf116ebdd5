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

#include "qgame/game/simulate.hpp"

#include <cmath>
#include <fmt/format.h>

#include "qgame/linalg/complex_matrix.hpp"

namespace qgame::game {
namespace {

// Welford running mean / variance.
struct RunningStats {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  double standard_error() const {
    if (count < 2) return 0.0;
    const double variance = m2 / static_cast<double>(count - 1);
    return std::sqrt(variance / static_cast<double>(count));
  }
};

constexpr double kMeasurementConsistencyTol = 1e-9;

}  // namespace

SimulationResult simulate_play(const QuantumGame& game,
                               const RefereeMeasurement& measurement,
                               const quantum::KrausChannel& ch_i,
                               const quantum::KrausChannel& ch_ii,
                               std::uint64_t rounds, Rng& rng) {
  if (rounds == 0)
    throw Error(ErrorKind::kUsageError, "rounds must be positive");
  for (Player p : {Player::kI, Player::kII}) {
    const ComplexMatrix r =
        payoff_operator(measurement.povm, measurement.payoffs(p));
    if (r.dim() != game.payoff_op(p).dim()) {
      throw Error(ErrorKind::kInconsistentMeasurement,
                  fmt::format("measurement acts on dimension {}, game on {}",
                              r.dim(), game.payoff_op(p).dim()));
    }
    const double deviation = linalg::max_abs_diff(r, game.payoff_op(p));
    if (deviation > kMeasurementConsistencyTol) {
      throw Error(ErrorKind::kInconsistentMeasurement,
                  fmt::format("measurement payoffs give R^{} off by {:.3e}",
                              player_name(p), deviation),
                  deviation);
    }
  }

  const quantum::DensityMatrix pi =
      quantum::apply_product_channel(ch_i, ch_ii, game.rho());
  const std::vector<double> probs = quantum::measure_probs(measurement.povm, pi);

  RunningStats stats[2];
  for (std::uint64_t round = 0; round < rounds; ++round) {
    const std::size_t outcome = quantum::sample_index(probs, rng);
    stats[0].push(measurement.payoffs_i[outcome]);
    stats[1].push(measurement.payoffs_ii[outcome]);
  }

  SimulationResult out;
  out.rounds = rounds;
  for (int p = 0; p < 2; ++p) {
    out.mean[p] = stats[p].mean;
    out.standard_error[p] = stats[p].standard_error();
    out.exact[p] = linalg::trace_of_product(
                       game.payoff_op(p == 0 ? Player::kI : Player::kII),
                       pi.matrix())
                       .real();
  }
  return out;
}

}  // namespace qgame::game
