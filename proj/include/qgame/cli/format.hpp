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

#ifndef QGAME_CLI_FORMAT_HPP_
#define QGAME_CLI_FORMAT_HPP_

#include <optional>
#include <string>
#include <utility>

#include "qgame/linalg/complex_matrix.hpp"

namespace qgame::cli {

inline constexpr int kSignificantDigits = 12;
inline constexpr long kMaxDenominator = 64;
inline constexpr double kFractionTol = 1e-12;

// 12 significant digits, no trailing zeros, never "-0".
std::string format_real(double x);

// p/q in lowest terms with 1 <= q <= 64 and |x - p/q| <= 1e-12.
std::optional<std::pair<long, long>> small_fraction(double x);

// Compact complex rendering: "0", "5/4", "-1i", "-5i/4", "1/2+1i/2".
std::string format_complex(linalg::cplx z, bool exact_fractions);

// One digit after the point and an unpadded exponent: 0.0e0, 2.0e0, 1.5e-7.
std::string format_sci1(double x);

}  // namespace qgame::cli

#endif  // QGAME_CLI_FORMAT_HPP_
