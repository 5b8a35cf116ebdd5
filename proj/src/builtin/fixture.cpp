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

#include "qgame/builtin/fixture.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "qgame/errors.hpp"

#ifndef QGAME_DEFAULT_DATA_DIR
#define QGAME_DEFAULT_DATA_DIR "data"
#endif

namespace qgame::builtin {

using game::PayoffTensor;
using game::Player;
using linalg::cplx;

namespace {

constexpr std::string_view kMagic = "qgame-payoff-fixture";

[[noreturn]] void corrupt(const std::string& message) {
  throw Error(ErrorKind::kFixtureCorrupt, message);
}

std::uint32_t crc32_of(const std::string& bytes) {
  return static_cast<std::uint32_t>(
      ::crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()),
              static_cast<uInt>(bytes.size())));
}

std::map<std::string, std::string> parse_header(const std::string& line) {
  std::istringstream in(line);
  std::string magic;
  std::string version;
  in >> magic >> version;
  if (magic != kMagic || version != "v1")
    corrupt("missing '" + std::string(kMagic) + " v1' header");
  std::map<std::string, std::string> fields;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) corrupt("bad header field '" + token + "'");
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"rows", "cols", "n1", "n2", "player", "crc32"})
    if (!fields.contains(key))
      corrupt(std::string("header lacks field '") + key + "'");
  return fields;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  char* end = nullptr;
  const unsigned long v = std::strtoul(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') corrupt("bad " + what + " '" + s + "'");
  return v;
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("QGAME_DATA_DIR"); env && *env)
    return env;
  return QGAME_DEFAULT_DATA_DIR;
}

PayoffTensor parse_payoff_fixture(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) corrupt("empty fixture");
  const auto header = parse_header(line);
  const std::size_t n1 = parse_size(header.at("n1"), "n1");
  const std::size_t n2 = parse_size(header.at("n2"), "n2");
  const std::size_t rows = parse_size(header.at("rows"), "rows");
  const std::size_t cols = parse_size(header.at("cols"), "cols");
  if (n1 == 0 || n2 == 0 || rows != n1 * n1 * n1 * n1 ||
      cols != n2 * n2 * n2 * n2)
    corrupt("header dimensions are inconsistent");
  const std::string& player_tag = header.at("player");
  if (player_tag != "I" && player_tag != "II")
    corrupt("player must be I or II");
  const Player player = player_tag == "I" ? Player::kI : Player::kII;

  std::string body;
  std::vector<cplx> entries(rows * cols);
  std::vector<bool> seen(rows * cols, false);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    body += line;
    body += '\n';
    std::istringstream fields(line);
    std::size_t r = 0;
    std::size_t c = 0;
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(fields >> r >> c >> re >> im) || (fields >> extra)) {
      corrupt(fmt::format("line {}: expected 'row col re im'", line_no));
    }
    if (r < 1 || r > rows || c < 1 || c > cols)
      corrupt(fmt::format("line {}: index ({}, {}) out of range", line_no, r,
                          c));
    const std::size_t k = (r - 1) * cols + (c - 1);
    if (seen[k])
      corrupt(fmt::format("line {}: duplicate entry ({}, {})", line_no, r, c));
    if (!std::isfinite(re) || !std::isfinite(im))
      corrupt(fmt::format("line {}: non-finite value", line_no));
    seen[k] = true;
    entries[k] = cplx(re, im);
  }

  const std::string expected = header.at("crc32");
  const std::string actual = fmt::format("{:08x}", crc32_of(body));
  if (expected != actual)
    corrupt("checksum mismatch: header says " + expected + ", entries give " +
            actual);
  return PayoffTensor(n1, n2, player, std::move(entries));
}

PayoffTensor load_payoff_fixture(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) corrupt("cannot open fixture " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_payoff_fixture(text.str());
}

std::string format_payoff_fixture(const PayoffTensor& tensor,
                                  const std::string& comment) {
  std::string body;
  for (std::size_t r = 0; r < tensor.rows(); ++r)
    for (std::size_t c = 0; c < tensor.cols(); ++c) {
      const cplx v = tensor.flat(r, c);
      if (v == cplx(0.0, 0.0)) continue;
      body += fmt::format("{} {} {} {}\n", r + 1, c + 1, v.real(), v.imag());
    }
  std::string out = fmt::format(
      "{} v1 rows={} cols={} n1={} n2={} player={} crc32={:08x}\n", kMagic,
      tensor.rows(), tensor.cols(), tensor.n1(), tensor.n2(),
      game::player_name(tensor.player()), crc32_of(body));
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string line;
    while (std::getline(lines, line)) out += "# " + line + "\n";
  }
  return out + body;
}

std::pair<PayoffTensor, PayoffTensor> reference_payoff_tensors(
    const std::filesystem::path& dir) {
  PayoffTensor a_i = load_payoff_fixture(dir / "fixtures" / "payoff_A_I.txt");
  PayoffTensor a_ii = load_payoff_fixture(dir / "fixtures" / "payoff_A_II.txt");
  if (a_i.player() != Player::kI || a_ii.player() != Player::kII)
    corrupt("fixture player tags do not match their file names");
  return {std::move(a_i), std::move(a_ii)};
}

}  // namespace qgame::builtin
