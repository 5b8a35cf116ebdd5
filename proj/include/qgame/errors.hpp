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

#ifndef QGAME_ERRORS_HPP_
#define QGAME_ERRORS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qgame {

// Every failure the library can report. The CLI maps these onto its exit
// codes, so new kinds need a matching entry in cli::exit_code_for().
enum class ErrorKind {
  kNonFinite,
  kNotSquare,
  kDimensionMismatch,
  kNotHermitian,
  kNotPositive,
  kTraceNotOne,
  kCompletenessViolation,
  kTraceConditionViolation,
  kNotInOmega,
  kNoConvergence,
  kLengthMismatch,
  kNonRealPayoff,
  kUnsupportedDimension,
  kInconsistentMeasurement,
  kInfeasibleProjection,
  kFixtureCorrupt,
  kParseError,
  kUsageError,
  kCrossCheckFailure,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<double> residual = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  // Measured size of the violation, when the check produced one.
  std::optional<double> residual() const noexcept { return residual_; }

 private:
  ErrorKind kind_;
  std::optional<double> residual_;
};

}  // namespace qgame

#endif  // QGAME_ERRORS_HPP_
