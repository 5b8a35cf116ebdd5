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

#ifndef QGAME_BUILTIN_FIXTURE_HPP_
#define QGAME_BUILTIN_FIXTURE_HPP_

// Reference payoff tensors stored as text:
//
//   qgame-payoff-fixture v1 rows=R cols=C n1=N n2=M player=I crc32=XXXXXXXX
//   # comments
//   row col re im
//   ...
//
// Rows and columns are 1-based in the file and 0-based once loaded. Omitted
// entries are zero. The CRC-32 covers the entry lines, each terminated by
// '\n', in file order.

#include <filesystem>
#include <string>
#include <utility>

#include "qgame/game/payoff_tensor.hpp"

namespace qgame::builtin {

// $QGAME_DATA_DIR if set, else the data/ directory of the source tree.
std::filesystem::path default_data_dir();

// Throws kFixtureCorrupt on a bad header, checksum mismatch, malformed or
// out-of-range line.
game::PayoffTensor parse_payoff_fixture(const std::string& text);
game::PayoffTensor load_payoff_fixture(const std::filesystem::path& file);

// Emits nonzero entries with round-trip precision.
std::string format_payoff_fixture(const game::PayoffTensor& tensor,
                                  const std::string& comment = "");

// The reference A^I and A^II tables for the quantized prisoner's dilemma,
// read verbatim from <dir>/fixtures/payoff_A_{I,II}.txt.
std::pair<game::PayoffTensor, game::PayoffTensor> reference_payoff_tensors(
    const std::filesystem::path& dir = default_data_dir());

}  // namespace qgame::builtin

#endif  // QGAME_BUILTIN_FIXTURE_HPP_
