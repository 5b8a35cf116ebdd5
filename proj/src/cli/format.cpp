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

#include "qgame/cli/format.hpp"

#include <cmath>
#include <cstdlib>
#include <fmt/format.h>

namespace qgame::cli {

std::string format_real(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.{}g}", x, kSignificantDigits);
}

std::optional<std::pair<long, long>> small_fraction(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  for (long q = 1; q <= kMaxDenominator; ++q) {
    const double scaled = x * static_cast<double>(q);
    const double p = std::round(scaled);
    if (std::abs(scaled - p) <= kFractionTol * static_cast<double>(q) &&
        std::abs(p) < 1e15) {
      // The smallest q that works is already in lowest terms.
      return std::make_pair(static_cast<long>(p), q);
    }
  }
  return std::nullopt;
}

namespace {

// Magnitude of a part; `suffix` ("" or "i") goes after the numerator so
// fractions read 5i/4.
std::string magnitude(double x, bool exact_fractions, const char* suffix) {
  const double a = std::abs(x);
  if (exact_fractions) {
    if (const auto f = small_fraction(a)) {
      if (f->second == 1) return fmt::format("{}{}", f->first, suffix);
      return fmt::format("{}{}/{}", f->first, suffix, f->second);
    }
  }
  return format_real(a) + suffix;
}

bool is_zero(double x, bool exact_fractions) {
  return x == 0.0 || (exact_fractions && std::abs(x) <= kFractionTol);
}

}  // namespace

std::string format_complex(linalg::cplx z, bool exact_fractions) {
  const bool re_zero = is_zero(z.real(), exact_fractions);
  const bool im_zero = is_zero(z.imag(), exact_fractions);
  if (re_zero && im_zero) return "0";
  std::string out;
  if (!re_zero) {
    if (z.real() < 0) out += '-';
    out += magnitude(z.real(), exact_fractions, "");
  }
  if (!im_zero) {
    if (z.imag() < 0) {
      out += '-';
    } else if (!re_zero) {
      out += '+';
    }
    out += magnitude(z.imag(), exact_fractions, "i");
  }
  return out;
}

std::string format_sci1(double x) {
  if (x == 0.0 || !std::isfinite(x)) {
    return x == 0.0 ? "0.0e0" : fmt::format("{}", x);
  }
  // Split the rounded value so 9.96 -> 1.0e1, not 10.0e0.
  const std::string s = fmt::format("{:.1e}", x);
  const auto e = s.find('e');
  const int exponent = std::atoi(s.c_str() + e + 1);
  return fmt::format("{}e{}", s.substr(0, e), exponent);
}

}  // namespace qgame::cli
