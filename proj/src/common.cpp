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

#include "qgame/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <string>

#include "qgame/tolerances.hpp"

namespace qgame {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotPositive: return "NotPositive";
    case ErrorKind::kTraceNotOne: return "TraceNotOne";
    case ErrorKind::kCompletenessViolation: return "CompletenessViolation";
    case ErrorKind::kTraceConditionViolation: return "TraceConditionViolation";
    case ErrorKind::kNotInOmega: return "NotInOmega";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNonRealPayoff: return "NonRealPayoff";
    case ErrorKind::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::kInconsistentMeasurement: return "InconsistentMeasurement";
    case ErrorKind::kInfeasibleProjection: return "InfeasibleProjection";
    case ErrorKind::kFixtureCorrupt: return "FixtureCorrupt";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUsageError: return "UsageError";
    case ErrorKind::kCrossCheckFailure: return "CrossCheckFailure";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<double> residual)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      residual_(residual) {}

std::optional<double> tolerance_from_env() {
  const char* raw = std::getenv("QGAME_TOL");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(raw, &end);
  if (errno != 0 || end == raw || *end != '\0' || !std::isfinite(value) ||
      value <= 0.0) {
    throw Error(ErrorKind::kParseError,
                std::string("QGAME_TOL is not a positive number: '") + raw +
                    "'");
  }
  return value;
}

double validation_tolerance() {
  return tolerance_from_env().value_or(kValidationTol);
}

}  // namespace qgame
