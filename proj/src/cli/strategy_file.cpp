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

#include "qgame/cli/strategy_file.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>

#include "qgame/errors.hpp"
#include "qgame/game/classical.hpp"

namespace qgame::cli {

namespace {

Strategy from_kraus(std::string kind, quantum::KrausChannel ch, std::size_t n) {
  if (ch.dim() != n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("{} strategy acts on dimension {}, player has {}",
                            kind, ch.dim(), n));
  }
  quantum::ChiMatrix chi = quantum::kraus_to_chi(ch);
  return {std::move(kind), std::move(chi), std::move(ch)};
}

Strategy classical_strategy(long long index, std::size_t n,
                            const std::string& where) {
  if (index < 0 || static_cast<std::size_t>(index) >= n) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("{}: classical index {} out of range [0, {})",
                            where, index, n));
  }
  return from_kraus("classical",
                    quantum::unitary_channel(game::cyclic_shift(
                        n, static_cast<std::size_t>(index))),
                    n);
}

}  // namespace

Strategy parse_strategy(const json& doc, std::size_t n, double tol,
                        const std::string& source) {
  require_format_version(doc, source);
  const json& kind_field = require_field(doc, "kind", source);
  if (!kind_field.is_string()) {
    throw Error(ErrorKind::kParseError,
                fmt::format("{}.kind: expected a string", source));
  }
  const std::string kind = kind_field.get<std::string>();
  if (kind == "kraus") {
    const json& ops = require_field(doc, "operators", source);
    if (!ops.is_array() || ops.empty()) {
      throw Error(ErrorKind::kParseError,
                  fmt::format("{}.operators: expected a non-empty array", source));
    }
    std::vector<ComplexMatrix> mats;
    for (std::size_t k = 0; k < ops.size(); ++k)
      mats.push_back(
          matrix_from_json(ops[k], fmt::format("{}.operators[{}]", source, k)));
    return from_kraus(kind, quantum::validate_kraus(std::move(mats), tol), n);
  }
  if (kind == "unitary") {
    const ComplexMatrix u =
        matrix_from_json(require_field(doc, "unitary", source), source + ".unitary");
    return from_kraus(kind, quantum::unitary_channel(u, tol), n);
  }
  if (kind == "chi") {
    const ComplexMatrix m =
        matrix_from_json(require_field(doc, "chi", source), source + ".chi");
    if (m.dim() != n * n) {
      throw Error(ErrorKind::kDimensionMismatch,
                  fmt::format("chi strategy has dimension {}, player needs {}",
                              m.dim(), n * n));
    }
    return {kind, quantum::validate_chi(m, n, tol), std::nullopt};
  }
  if (kind == "classical") {
    const json& idx = require_field(doc, "index", source);
    if (!idx.is_number_integer()) {
      throw Error(ErrorKind::kParseError,
                  fmt::format("{}.index: expected an integer", source));
    }
    return classical_strategy(idx.get<long long>(), n, source);
  }
  throw Error(ErrorKind::kParseError,
              fmt::format("{}.kind: unknown strategy kind '{}'", source, kind));
}

Strategy load_strategy(const std::string& arg, std::size_t n, double tol) {
  constexpr std::string_view kPrefix = "classical:";
  if (arg.starts_with(kPrefix)) {
    const std::string_view digits = std::string_view(arg).substr(kPrefix.size());
    long long index = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw Error(ErrorKind::kParseError,
                  fmt::format("{}: expected classical:<index>", arg));
    }
    return classical_strategy(index, n, arg);
  }
  return parse_strategy(read_json_file(arg), n, tol, arg);
}

json strategy_to_json(const quantum::ChiMatrix& chi) {
  return {{"format_version", kFormatVersion},
          {"kind", "chi"},
          {"chi", matrix_to_json(chi.matrix())}};
}

}  // namespace qgame::cli
