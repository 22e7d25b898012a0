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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

struct PassReport {
  std::string pass;
  /// Sweeps over the circuit until nothing changed (the last one included).
  std::size_t iterations = 0;
  std::map<std::string, std::size_t> ruleCounts;
  Metrics before;
  Metrics after;
  double elapsedMs = 0.0;

  [[nodiscard]] std::size_t totalApplications() const;
};

/// Thrown when a pass does not reach its fixed point within the sweep cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& message, PassReport partial)
      : std::runtime_error(message), partial_(std::move(partial)) {}

  [[nodiscard]] const PassReport& partial() const { return partial_; }

private:
  PassReport partial_;
};

/// Replaces body[start, start + length) with `replacement` and adds
/// `phaseDelta` to the global phase.
struct Rewrite {
  std::size_t start = 0;
  std::size_t length = 0;
  std::vector<Instruction> replacement;
  double phaseDelta = 0.0;
};

struct RewriteRule {
  std::string name;
  /// Tries the rule anchored at body[pos].
  std::function<std::optional<Rewrite>(const Circuit&, std::size_t pos)> match;
};

inline constexpr std::size_t DEFAULT_MAX_SWEEPS = 10000;

/// Scans left to right, applies the first matching rule, and restarts the
/// scan, until a full scan finds nothing.
[[nodiscard]] std::pair<Circuit, PassReport>
rewriteToFixedPoint(const Circuit& circuit, const std::vector<RewriteRule>& rules,
                    const std::string& passName,
                    std::size_t maxSweeps = DEFAULT_MAX_SWEEPS);

[[nodiscard]] Circuit applyRewrite(const Circuit& circuit, const Rewrite& rw);

/// Index of the first instruction after `from` that touches one of
/// `qubits`, or body.size().
[[nodiscard]] std::size_t nextOnWires(const Circuit& circuit, std::size_t from,
                                      const std::vector<Qubit>& qubits);
/// Index of the last instruction before `from` that touches one of
/// `qubits`, if any.
[[nodiscard]] std::optional<std::size_t>
previousOnWires(const Circuit& circuit, std::size_t from,
                const std::vector<Qubit>& qubits);

/// True if some instruction in (from, to) measures into one of `registers`.
[[nodiscard]] bool writesBetween(const Circuit& circuit, std::size_t from,
                                 std::size_t to,
                                 const std::vector<Register>& registers);

} // namespace dequant
