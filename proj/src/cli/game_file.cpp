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

#include "qgame/cli/game_file.hpp"

#include <fmt/format.h>

#include "qgame/errors.hpp"
#include "qgame/quantum/density.hpp"

namespace qgame::cli {

namespace {

std::size_t positive_size(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) {
    throw Error(ErrorKind::kParseError,
                fmt::format("{}: expected a positive integer", where));
  }
  return j.get<std::size_t>();
}

std::vector<double> real_vector(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw Error(ErrorKind::kParseError,
                fmt::format("{}: expected an array of numbers", where));
  }
  std::vector<double> out;
  for (const json& v : j) {
    if (!v.is_number()) {
      throw Error(ErrorKind::kParseError,
                  fmt::format("{}: expected an array of numbers", where));
    }
    out.push_back(v.get<double>());
  }
  return out;
}

void check_dim(const ComplexMatrix& m, std::size_t dim, const char* what) {
  if (m.dim() != dim) {
    throw Error(ErrorKind::kDimensionMismatch,
                fmt::format("{} has dimension {}, expected n1 * n2 = {}", what,
                            m.dim(), dim));
  }
}

std::vector<quantum::ConditionCheck> hermitian_check(const ComplexMatrix& m,
                                                     const std::string& name,
                                                     double tol) {
  return {{ErrorKind::kNotHermitian, name + " Hermitian",
           m.hermiticity_residual(), std::max(kHermitianTol, tol)}};
}

}  // namespace

RawMeasurement parse_measurement(const json& j, const std::string& where) {
  RawMeasurement raw;
  const json& povm = require_field(j, "povm", where);
  if (!povm.is_array() || povm.empty()) {
    throw Error(ErrorKind::kParseError,
                fmt::format("{}.povm: expected a non-empty array", where));
  }
  for (std::size_t k = 0; k < povm.size(); ++k)
    raw.elements.push_back(
        matrix_from_json(povm[k], fmt::format("{}.povm[{}]", where, k)));
  raw.payoffs_i = real_vector(require_field(j, "payoffs_I", where),
                              where + ".payoffs_I");
  raw.payoffs_ii = real_vector(require_field(j, "payoffs_II", where),
                               where + ".payoffs_II");
  return raw;
}

RawGame parse_game(const json& doc, const std::string& source) {
  require_format_version(doc, source);
  RawGame raw;
  raw.n1 = positive_size(require_field(doc, "n1", source), source + ".n1");
  raw.n2 = positive_size(require_field(doc, "n2", source), source + ".n2");
  raw.rho = matrix_from_json(require_field(doc, "rho", source), source + ".rho");
  const bool has_ops = doc.contains("payoff_ops");
  const bool has_meas = doc.contains("measurement");
  if (has_ops == has_meas) {
    throw Error(ErrorKind::kParseError,
                fmt::format("{}: exactly one of payoff_ops or measurement "
                            "is required",
                            source));
  }
  if (has_ops) {
    const json& ops = doc["payoff_ops"];
    const std::string where = source + ".payoff_ops";
    raw.payoff_op_i = matrix_from_json(require_field(ops, "I", where), where + ".I");
    raw.payoff_op_ii =
        matrix_from_json(require_field(ops, "II", where), where + ".II");
  } else {
    raw.measurement = parse_measurement(doc["measurement"], source + ".measurement");
  }
  return raw;
}

game::RefereeMeasurement build_measurement(const RawMeasurement& raw,
                                           double tol) {
  quantum::Povm povm = quantum::validate_povm(raw.elements, tol);
  if (raw.payoffs_i.size() != povm.outcomes() ||
      raw.payoffs_ii.size() != povm.outcomes()) {
    throw Error(ErrorKind::kLengthMismatch,
                fmt::format("measurement has {} outcomes but payoff vectors "
                            "have {} and {} entries",
                            povm.outcomes(), raw.payoffs_i.size(),
                            raw.payoffs_ii.size()));
  }
  return {std::move(povm), raw.payoffs_i, raw.payoffs_ii};
}

std::vector<quantum::ConditionCheck> game_checks(const RawGame& raw,
                                                 double tol) {
  const std::size_t dim = raw.n1 * raw.n2;
  check_dim(raw.rho, dim, "rho");
  std::vector<quantum::ConditionCheck> out;
  for (auto c : quantum::density_checks(raw.rho, tol)) {
    c.name = "rho " + c.name;
    out.push_back(std::move(c));
  }
  if (raw.measurement) {
    const RawMeasurement& m = *raw.measurement;
    ComplexMatrix sum = ComplexMatrix::zeros(dim);
    for (std::size_t k = 0; k < m.elements.size(); ++k) {
      check_dim(m.elements[k], dim, "POVM element");
      sum += m.elements[k].adjoint() * m.elements[k];
    }
    if (m.payoffs_i.size() != m.elements.size() ||
        m.payoffs_ii.size() != m.elements.size()) {
      throw Error(ErrorKind::kLengthMismatch,
                  "payoff vectors need one entry per measurement outcome");
    }
    out.push_back({ErrorKind::kCompletenessViolation, "POVM completeness",
                   (sum - ComplexMatrix::identity(dim)).max_abs(), tol});
  } else {
    check_dim(*raw.payoff_op_i, dim, "R^I");
    check_dim(*raw.payoff_op_ii, dim, "R^II");
    for (auto& c : hermitian_check(*raw.payoff_op_i, "R^I", tol)) out.push_back(c);
    for (auto& c : hermitian_check(*raw.payoff_op_ii, "R^II", tol)) out.push_back(c);
  }
  return out;
}

LoadedGame build_game(const RawGame& raw, double tol) {
  const std::size_t dim = raw.n1 * raw.n2;
  check_dim(raw.rho, dim, "rho");
  quantum::DensityMatrix rho = quantum::validate_density(raw.rho, tol);
  if (raw.measurement) {
    game::RefereeMeasurement m = build_measurement(*raw.measurement, tol);
    if (m.povm.dim() != dim) check_dim(m.povm.elements()[0], dim, "POVM element");
    ComplexMatrix r1 = game::payoff_operator(m.povm, m.payoffs_i);
    ComplexMatrix r2 = game::payoff_operator(m.povm, m.payoffs_ii);
    return {game::make_game(std::move(rho), std::move(r1), std::move(r2),
                            raw.n1, raw.n2),
            std::move(m)};
  }
  for (const auto& c : hermitian_check(*raw.payoff_op_i, "R^I", tol))
    if (!c.passed()) quantum::throw_first_failure({c}, "payoff operator");
  for (const auto& c : hermitian_check(*raw.payoff_op_ii, "R^II", tol))
    if (!c.passed()) quantum::throw_first_failure({c}, "payoff operator");
  // make_game re-checks Hermiticity at its own tolerance; hand it the exact
  // Hermitian parts so a looser QGAME_TOL is honoured.
  return {game::make_game(std::move(rho), raw.payoff_op_i->hermitian_part(),
                          raw.payoff_op_ii->hermitian_part(), raw.n1, raw.n2),
          std::nullopt};
}

LoadedGame load_game(const std::filesystem::path& path, double tol) {
  return build_game(parse_game(read_json_file(path), path.string()), tol);
}

game::RefereeMeasurement load_measurement(const std::filesystem::path& path,
                                          double tol) {
  const json doc = read_json_file(path);
  require_format_version(doc, path.string());
  return build_measurement(parse_measurement(doc, path.string()), tol);
}

json measurement_to_json(const game::RefereeMeasurement& m) {
  json povm = json::array();
  for (const ComplexMatrix& e : m.povm.elements()) povm.push_back(matrix_to_json(e));
  return {{"povm", std::move(povm)},
          {"payoffs_I", m.payoffs_i},
          {"payoffs_II", m.payoffs_ii}};
}

json game_to_json(const game::QuantumGame& g) {
  return {{"format_version", kFormatVersion},
          {"n1", g.n1()},
          {"n2", g.n2()},
          {"rho", matrix_to_json(g.rho().matrix())},
          {"payoff_ops",
           {{"I", matrix_to_json(g.payoff_op(game::Player::kI))},
            {"II", matrix_to_json(g.payoff_op(game::Player::kII))}}}};
}

}  // namespace qgame::cli
