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

#ifndef QGAME_TOLERANCES_HPP_
#define QGAME_TOLERANCES_HPP_

#include <optional>

namespace qgame {

// Central numeric tolerances. Every validating function takes its own `tol`
// argument; these are the defaults it falls back to.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kReconstructionTol = 1e-9;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kValidationTol = 1e-9;
// Eigenvalues of a chi matrix at or below this are dropped when extracting
// Kraus operators.
inline constexpr double kKrausRankTol = 1e-10;
// Largest |imag| tolerated on a payoff before it is rejected as non-real.
inline constexpr double kRealPayoffTol = 1e-9;

inline constexpr int kJacobiSweepBudget = 100;

// Reads QGAME_TOL. Returns nullopt when unset; throws kParseError when the
// value is not a positive finite number.
std::optional<double> tolerance_from_env();

// kValidationTol unless QGAME_TOL overrides it.
double validation_tolerance();

}  // namespace qgame

#endif  // QGAME_TOLERANCES_HPP_
