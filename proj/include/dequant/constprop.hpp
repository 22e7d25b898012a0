// Copyright 2026 The dequant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "dequant/circuit.hpp"
#include "dequant/rewrite.hpp"
#include "dequant/union_table.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

struct CpConfig {
  TableLimits limits;
  std::size_t maxSweeps = 100;
  /// Individual rules can be switched off for experiments and tests.
  bool unsatisfiable = true;
  bool constantControls = true;
  bool impliedControls = true;
  bool classicalControls = true;
  bool uniformPhase = true;
};

/// Rule names as they appear in PassReport::ruleCounts.
inline constexpr const char* RULE_UNSATISFIABLE = "unsatisfiable-controls";
inline constexpr const char* RULE_CONSTANT = "constant-control";
inline constexpr const char* RULE_IMPLIED = "implied-control";
inline constexpr const char* RULE_CLASSICAL = "classical-control";
inline constexpr const char* RULE_PHASE = "uniform-phase";

/// Constant propagation over the union table. Each sweep walks the circuit
/// once; at every gate the rules are tried in the order unsatisfiable,
/// constant, implied, classical, phase until none applies, then the table
/// steps over the (rewritten) gate. Sweeps repeat until nothing changes.
/// Throws CapExceeded after cfg.maxSweeps sweeps.
[[nodiscard]] std::pair<Circuit, PassReport> runCp(const Circuit& circuit,
                                                   const CpConfig& cfg = {});

struct ExplainLine {
  std::size_t index = 0;
  std::string statement;
  /// One note per rule application at this instruction.
  std::vector<std::string> notes;
  /// Facts known after the instruction: constant qubits and registers and
  /// groups that are top.
  std::vector<std::string> facts;
};

/// Annotated first sweep of runCp.
[[nodiscard]] std::vector<ExplainLine> explain(const Circuit& circuit,
                                               const CpConfig& cfg = {});

[[nodiscard]] std::string formatExplain(const std::vector<ExplainLine>& lines);

} // namespace dequant
