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

#include "qgame/cli/json_io.hpp"

#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <vector>

#include "qgame/errors.hpp"

namespace qgame::cli {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParseError, fmt::format("{}: {}", where, what));
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    const std::size_t end = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // Unexpected end of input is reported at the last character.
    if (end == text.size() && col > 1) --col;
    std::string reason = e.what();
    const auto pos = reason.find("parse error");
    if (pos != std::string::npos) reason = reason.substr(pos);
    throw Error(ErrorKind::kParseError,
                fmt::format("{}:{}:{}: malformed input ({})", source, line,
                            col, reason));
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kParseError,
                fmt::format("cannot open {}", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void require_format_version(const json& doc, const std::string& source) {
  if (!doc.is_object()) parse_fail(source, "top level must be an object");
  const auto it = doc.find("format_version");
  if (it == doc.end()) parse_fail(source, "missing format_version");
  if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
    parse_fail(source, fmt::format("unsupported format_version {} (expected {})",
                                   it->dump(), kFormatVersion));
  }
}

const json& require_field(const json& obj, const char* key,
                          const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, fmt::format("missing field '{}'", key));
  return *it;
}

cplx complex_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    parse_fail(where, fmt::format("expected [re, im], got {}", j.dump()));
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) {
    parse_fail(where, "expected a non-empty array of rows");
  }
  const std::size_t dim = j.size();
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != dim) {
      parse_fail(where, fmt::format("row {} must have {} entries", r, dim));
    }
    for (std::size_t c = 0; c < dim; ++c) {
      entries.push_back(
          complex_from_json(row[c], fmt::format("{}[{}][{}]", where, r, c)));
    }
  }
  try {
    return ComplexMatrix(dim, std::move(entries));
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qgame::cli
