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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "qgame/builtin/ewl.hpp"
#include "qgame/builtin/fixture.hpp"
#include "qgame/errors.hpp"
#include "qgame/game/classical.hpp"
#include "qgame/game/payoff.hpp"
#include "qgame/game/simulate.hpp"
#include "random_objects.hpp"

namespace qgame::game {
namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no qgame::Error thrown";
  return ErrorKind::kUsageError;
}

const cplx kI(0.0, 1.0);

TEST(PayoffTensor, ClosedFormMatchesLiteralEvaluation) {
  Rng rng(41);
  for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {1, 3}}) {
    const QuantumGame g = testing::random_game(n1, n2, rng);
    for (Player p : {Player::kI, Player::kII}) {
      const PayoffTensor a = payoff_tensor_matrix_unit(g, p);
      EXPECT_EQ(a.rows(), n1 * n1 * n1 * n1);
      EXPECT_EQ(a.cols(), n2 * n2 * n2 * n2);
      EXPECT_LT(max_abs_diff(a, payoff_tensor_general(g, p)), 1e-12);
      EXPECT_LT(a.pairing_residual(), 1e-14);
    }
  }
}

TEST(PayoffTensor, ConstantGameHasDiagonalStructure) {
  // R = c I and rho = |00><00|. Writing alpha = (ai, aj) and so on, the only
  // nonzero entries are c at ai = bi, gi = di with every second index 0.
  const double c = 1.75;
  const QuantumGame g = make_game(
      quantum::validate_density(ComplexMatrix::unit(4, 0, 0)),
      ComplexMatrix::identity(4) * cplx(c), ComplexMatrix::identity(4) * cplx(c),
      2, 2);
  const PayoffTensor a = payoff_tensor_matrix_unit(g, Player::kI);
  for (std::size_t ai = 0; ai < 2; ++ai)
    for (std::size_t aj = 0; aj < 2; ++aj)
      for (std::size_t bi = 0; bi < 2; ++bi)
        for (std::size_t bj = 0; bj < 2; ++bj)
          for (std::size_t gi = 0; gi < 2; ++gi)
            for (std::size_t gj = 0; gj < 2; ++gj)
              for (std::size_t di = 0; di < 2; ++di)
                for (std::size_t dj = 0; dj < 2; ++dj) {
                  const bool hit = ai == bi && gi == di && aj == 0 && bj == 0 &&
                                   gj == 0 && dj == 0;
                  EXPECT_EQ(a(ai * 2 + aj, bi * 2 + bj, gi * 2 + gj, di * 2 + dj),
                            cplx(hit ? c : 0.0));
                }
}

TEST(PayoffTensor, ShapeErrors) {
  EXPECT_EQ(kind_of([] { PayoffTensor(2, 2, Player::kI, std::vector<cplx>(10)); }),
            ErrorKind::kDimensionMismatch);
}

TEST(Payoff, ContractionMatchesDirectEvaluation) {
  Rng rng(42);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n1 = 2 + static_cast<std::size_t>(k % 2);
    const std::size_t n2 = 2 + static_cast<std::size_t>((k / 2) % 2);
    const QuantumGame g = testing::random_game(n1, n2, rng);
    const auto c1 = testing::random_channel(n1, rng);
    const auto c2 = testing::random_channel(n2, rng);
    for (Player p : {Player::kI, Player::kII}) {
      const double direct = payoff_direct(g, c1, c2, p);
      const double via = payoff_contract(payoff_tensor_matrix_unit(g, p),
                                         quantum::kraus_to_chi(c1),
                                         quantum::kraus_to_chi(c2));
      EXPECT_NEAR(direct, via, 1e-10);
    }
  }
}

TEST(Payoff, RejectsMismatchedStrategies) {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const PayoffTensor a = payoff_tensor_matrix_unit(ewl.game, Player::kI);
  const auto mm3 = quantum::maximally_mixing_chi(3);
  const auto mm2 = quantum::maximally_mixing_chi(2);
  EXPECT_EQ(kind_of([&] { payoff_contract(a, mm3, mm2); }),
            ErrorKind::kDimensionMismatch);
}

TEST(Payoff, OperatorFromMeasurement) {
  const auto m = builtin::ewl_measurement();
  EXPECT_LT(linalg::max_abs_diff(payoff_operator(m.povm, m.payoffs_i),
                                 builtin::ewl_payoff_operator(Player::kI)),
            1e-15);
  EXPECT_LT(linalg::max_abs_diff(payoff_operator(m.povm, m.payoffs_ii),
                                 builtin::ewl_payoff_operator(Player::kII)),
            1e-15);
  const std::vector<double> short_payoffs = {1.0, 2.0};
  EXPECT_EQ(kind_of([&] { payoff_operator(m.povm, short_payoffs); }),
            ErrorKind::kLengthMismatch);
}

TEST(Ewl, ReferenceProfilesPayKnownValues) {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto a_i = payoff_tensor_matrix_unit(ewl.game, Player::kI);
  const auto a_ii = payoff_tensor_matrix_unit(ewl.game, Player::kII);
  auto strat = [&](const std::string& name) -> const quantum::ChiMatrix& {
    for (const auto& [n, chi] : ewl.reference_strategies)
      if (n == name) return chi;
    throw std::runtime_error(name);
  };
  struct Case {
    const char* s1;
    const char* s2;
    double p1;
    double p2;
  };
  // Independently worked out by hand from the payoff operators.
  for (const Case& c : {Case{"chi_star", "xi_star", 2.5, 2.5},
                        Case{"identity", "identity", 3, 3},
                        Case{"bit_flip", "identity", 5, 0},
                        Case{"identity", "bit_flip", 0, 5},
                        Case{"bit_flip", "bit_flip", 1, 1}}) {
    EXPECT_NEAR(payoff_contract(a_i, strat(c.s1), strat(c.s2)), c.p1, 1e-12)
        << c.s1 << " " << c.s2;
    EXPECT_NEAR(payoff_contract(a_ii, strat(c.s1), strat(c.s2)), c.p2, 1e-12)
        << c.s1 << " " << c.s2;
  }
}

TEST(Ewl, TensorEntriesFromTheClosedForm) {
  // Spot values evaluated by hand from A = R_{(c k),(a i)} rho_{(b j),(d l)}.
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto a_i = payoff_tensor_matrix_unit(ewl.game, Player::kI);
  const auto a_ii = payoff_tensor_matrix_unit(ewl.game, Player::kII);
  // 0-based (row, col).
  EXPECT_EQ(a_i.flat(0, 0), cplx(1.0));    // R_00 rho_00 = 2 * 1/2
  EXPECT_EQ(a_i.flat(0, 10), cplx(1.25));  // R_11 rho_00
  EXPECT_EQ(a_i.flat(1, 1), -kI);          // R_00 rho_03
  EXPECT_EQ(a_ii.flat(11, 11), -kI);
  EXPECT_EQ(a_i.flat(4, 14), 1.25 * kI);
  EXPECT_EQ(a_i.flat(11, 11), -kI);
}

TEST(Fixture, DiscrepanciesAreExactlyTheTwoKnownEntries) {
  const auto ewl = builtin::ewl_prisoners_dilemma(builtin::default_data_dir());
  ASSERT_TRUE(ewl.reference_tensors);
  const auto& [ref_i, ref_ii] = *ewl.reference_tensors;
  const auto a_i = payoff_tensor_matrix_unit(ewl.game, Player::kI);
  const auto a_ii = payoff_tensor_matrix_unit(ewl.game, Player::kII);
  std::set<std::pair<std::size_t, std::size_t>> bad_i;
  for (std::size_t r = 0; r < 16; ++r)
    for (std::size_t c = 0; c < 16; ++c) {
      if (std::abs(a_i.flat(r, c) - ref_i.flat(r, c)) > 1e-12) bad_i.insert({r, c});
      EXPECT_LE(std::abs(a_ii.flat(r, c) - ref_ii.flat(r, c)), 1e-12) << r << "," << c;
    }
  const std::set<std::pair<std::size_t, std::size_t>> expected = {{4, 14}, {11, 11}};
  EXPECT_EQ(bad_i, expected);
  // The stored values break the pairing that any Hermitian game satisfies,
  // and only at those two entries.
  EXPECT_GT(ref_i.pairing_residual(), 1.0);
  EXPECT_EQ(ref_ii.pairing_residual(), 0.0);
  EXPECT_EQ(ref_i.flat(4, 14), -1.25 * kI);
  EXPECT_EQ(ref_i.flat(11, 11), cplx(-1.0));
}

TEST(Fixture, RoundTripAndCorruption) {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  const auto a = payoff_tensor_matrix_unit(ewl.game, Player::kII);
  const std::string text = builtin::format_payoff_fixture(a, "test");
  EXPECT_EQ(max_abs_diff(builtin::parse_payoff_fixture(text), a), 0.0);

  std::string tampered = text;
  const auto pos = tampered.rfind("1.25");
  ASSERT_NE(pos, std::string::npos);
  tampered.replace(pos, 4, "1.26");
  EXPECT_EQ(kind_of([&] { builtin::parse_payoff_fixture(tampered); }),
            ErrorKind::kFixtureCorrupt);
  EXPECT_EQ(kind_of([] { builtin::parse_payoff_fixture("nonsense\n"); }),
            ErrorKind::kFixtureCorrupt);
  EXPECT_EQ(kind_of([] { builtin::load_payoff_fixture("/nonexistent/file"); }),
            ErrorKind::kFixtureCorrupt);
}

TEST(Classical, ReductionOfEwl) {
  const auto b = classical_reduction(builtin::ewl_prisoners_dilemma().game);
  ASSERT_EQ(b.rows, 2u);
  EXPECT_NEAR(b.at(0, 0).first, 3, 1e-12);
  EXPECT_NEAR(b.at(0, 1).second, 5, 1e-12);
  EXPECT_NEAR(b.at(1, 0).first, 5, 1e-12);
  EXPECT_NEAR(b.at(1, 1).second, 1, 1e-12);
}

TEST(Classical, CyclicShiftAndUnsupportedShapes) {
  const ComplexMatrix x = cyclic_shift(3, 1);
  EXPECT_EQ(x(1, 0), cplx(1.0));
  EXPECT_EQ(x(2, 1), cplx(1.0));
  EXPECT_EQ(x(0, 2), cplx(1.0));
  Rng rng(43);
  EXPECT_EQ(kind_of([&] { classical_reduction(testing::random_game(2, 3, rng)); }),
            ErrorKind::kUnsupportedDimension);
  EXPECT_EQ(classical_reduction(testing::random_game(3, 3, rng)).rows, 3u);
}

TEST(Simulate, DeterministicAndConsistent) {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  Rng rng(44);
  const auto c1 = testing::random_channel(2, rng);
  const auto c2 = testing::random_channel(2, rng);
  Rng a(7);
  Rng b(7);
  const auto r1 = simulate_play(ewl.game, *ewl.measurement, c1, c2, 20000, a);
  const auto r2 = simulate_play(ewl.game, *ewl.measurement, c1, c2, 20000, b);
  EXPECT_EQ(r1.mean, r2.mean);
  for (int p = 0; p < 2; ++p) {
    EXPECT_GT(r1.standard_error[p], 0.0);
    EXPECT_LT(std::abs(r1.mean[p] - r1.exact[p]), 5 * r1.standard_error[p]);
    EXPECT_NEAR(r1.exact[p],
                payoff_direct(ewl.game, c1, c2, p == 0 ? Player::kI : Player::kII),
                1e-12);
  }
  Rng z(1);
  EXPECT_EQ(kind_of([&] { simulate_play(ewl.game, *ewl.measurement, c1, c2, 0, z); }),
            ErrorKind::kUsageError);
}

TEST(Simulate, RejectsMeasurementThatDisagreesWithGame) {
  const auto ewl = builtin::ewl_prisoners_dilemma();
  auto m = *ewl.measurement;
  m.payoffs_i[0] = 4.0;
  const auto id = quantum::unitary_channel(ComplexMatrix::identity(2));
  Rng rng(1);
  EXPECT_EQ(kind_of([&] { simulate_play(ewl.game, m, id, id, 10, rng); }),
            ErrorKind::kInconsistentMeasurement);
}

}  // namespace
}  // namespace qgame::game
