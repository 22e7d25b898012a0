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
#include "dequant/constprop.hpp"
#include "dequant/rewrite.hpp"
#include "dequant/semantics.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

enum class PassKind { Cp, MeasLift, HLift };

[[nodiscard]] std::string passName(PassKind kind);
/// Parses "cp,measlift,hlift"; throws std::invalid_argument.
[[nodiscard]] std::vector<PassKind> parsePassList(const std::string& text);
[[nodiscard]] std::string formatPassList(const std::vector<PassKind>& passes);

struct PipelineSpec {
  std::vector<PassKind> passes;
  CpConfig cp;
  /// Sweep cap of the lifting passes.
  std::size_t liftSweeps = DEFAULT_MAX_SWEEPS;
  bool cxHadamardMeasure = true;
  /// Cap on full cycles through the pass list.
  std::size_t cycleCap = 50;
  bool verify = false;
  std::size_t oracleLimit = DEFAULT_ORACLE_LIMIT;
};

enum class Verdict { NotRun, Pass, Fail, Skipped };

[[nodiscard]] std::string verdictName(Verdict v);
[[nodiscard]] Verdict verdictFromName(const std::string& name);

struct Verification {
  Verdict verdict = Verdict::NotRun;
  /// Total variation distance of the extended outcome distributions.
  double distance = 0.0;
  std::string witness;

  friend bool operator==(const Verification&, const Verification&) = default;
};

/// Equivalence check of two circuits, skipped above `oracleLimit` qubits.
[[nodiscard]] Verification verify(const Circuit& original,
                                  const Circuit& optimized,
                                  std::size_t oracleLimit = DEFAULT_ORACLE_LIMIT);

struct PassSummary {
  std::string pass;
  std::size_t invocations = 0;
  std::size_t iterations = 0;
  std::map<std::string, std::size_t> ruleCounts;
  double elapsedMs = 0.0;

  friend bool operator==(const PassSummary&, const PassSummary&) = default;
};

struct RunRecord {
  std::string input;
  std::string family;
  std::size_t size = 0;
  std::string passSpec;
  std::vector<PassSummary> passes;
  std::size_t cycles = 0;
  Metrics before;
  Metrics after;
  double reductionGatesPct = 0.0;
  double reductionCgatesPct = 0.0;
  Verification verification;
  double durationMs = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// (before - after) / before in percent, clamped to [0, 100]; 0 when
/// before is 0.
[[nodiscard]] double reductionPercent(std::size_t before, std::size_t after);

struct PipelineResult {
  Circuit circuit;
  RunRecord record;
};

class PipelineCapExceeded : public std::runtime_error {
public:
  PipelineCapExceeded(const std::string& message, RunRecord partial)
      : std::runtime_error(message), partial_(std::move(partial)) {}

  [[nodiscard]] const RunRecord& partial() const { return partial_; }

private:
  RunRecord partial_;
};

[[nodiscard]] std::pair<Circuit, PassReport>
runPass(PassKind kind, const Circuit& circuit, const PipelineSpec& spec);

/// Runs the passes in order, each to its own fixed point, and repeats the
/// list until a whole cycle leaves the circuit unchanged. Throws
/// PipelineCapExceeded when a pass or the cycle loop hits its cap.
[[nodiscard]] PipelineResult runPipeline(const Circuit& circuit,
                                         const PipelineSpec& spec,
                                         const std::string& input = "");

/// Shortest prefix of `circuit` whose optimisation fails verification,
/// paired with its optimised form. Empty if every prefix verifies.
[[nodiscard]] std::optional<std::pair<Circuit, Circuit>>
minimalWitness(const Circuit& circuit, const PipelineSpec& spec);

} // namespace dequant
