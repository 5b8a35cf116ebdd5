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

#ifndef QGAME_QUANTUM_CHECKS_HPP_
#define QGAME_QUANTUM_CHECKS_HPP_

#include <string>
#include <vector>

#include "qgame/errors.hpp"

namespace qgame::quantum {

// One validation condition with the measured violation. Validators compute
// the full list (for reporting) and throw on the first failing entry.
struct ConditionCheck {
  ErrorKind kind;
  std::string name;
  double residual;
  double tolerance;

  bool passed() const { return residual <= tolerance; }
};

// Throws an Error of the first failing check's kind, prefixed by `what`.
void throw_first_failure(const std::vector<ConditionCheck>& checks,
                         const std::string& what);

bool all_passed(const std::vector<ConditionCheck>& checks);

}  // namespace qgame::quantum

#endif  // QGAME_QUANTUM_CHECKS_HPP_
