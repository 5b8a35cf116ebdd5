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

#ifndef QGAME_CLI_JSON_IO_HPP_
#define QGAME_CLI_JSON_IO_HPP_

// Structured-text encoding shared by every file the CLI reads or writes.
// A complex number is a two-element array [re, im] (a bare number is read
// as a real value); a matrix is an array of rows.

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>

#include "qgame/linalg/complex_matrix.hpp"

namespace qgame::cli {

using nlohmann::json;
using linalg::ComplexMatrix;
using linalg::cplx;

inline constexpr int kFormatVersion = 1;

// Throws kParseError naming the line and column of the first bad byte.
json parse_json(const std::string& text, const std::string& source);
json read_json_file(const std::filesystem::path& path);

// Top-level object with a supported format_version.
void require_format_version(const json& doc, const std::string& source);

// `where` names the field in error messages.
cplx complex_from_json(const json& j, const std::string& where);
json complex_to_json(cplx z);
ComplexMatrix matrix_from_json(const json& j, const std::string& where);
json matrix_to_json(const ComplexMatrix& m);

const json& require_field(const json& obj, const char* key,
                          const std::string& where);

}  // namespace qgame::cli

#endif  // QGAME_CLI_JSON_IO_HPP_
