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

#include "dequant/rewrite.hpp"

#include <algorithm>
#include <chrono>

namespace dequant {

namespace {

bool touchesAny(const Instruction& instr, const std::vector<Qubit>& qubits) {
  const auto qs = qubitsOf(instr);
  return std::any_of(qs.begin(), qs.end(), [&](Qubit q) {
    return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
  });
}

} // namespace

std::size_t PassReport::totalApplications() const {
  std::size_t total = 0;
  for (const auto& [rule, count] : ruleCounts) {
    total += count;
  }
  return total;
}

Circuit applyRewrite(const Circuit& circuit, const Rewrite& rw) {
  Circuit out = splice(circuit, rw.start, rw.length, rw.replacement);
  if (rw.phaseDelta != 0.0) {
    out.globalPhase = wrapAngle(out.globalPhase + rw.phaseDelta);
  }
  return out;
}

std::size_t nextOnWires(const Circuit& circuit, std::size_t from,
                        const std::vector<Qubit>& qubits) {
  for (std::size_t k = from + 1; k < circuit.body.size(); ++k) {
    if (touchesAny(circuit.body[k], qubits)) {
      return k;
    }
  }
  return circuit.body.size();
}

std::optional<std::size_t> previousOnWires(const Circuit& circuit,
                                           std::size_t from,
                                           const std::vector<Qubit>& qubits) {
  for (std::size_t k = from; k-- > 0;) {
    if (touchesAny(circuit.body[k], qubits)) {
      return k;
    }
  }
  return std::nullopt;
}

bool writesBetween(const Circuit& circuit, std::size_t from, std::size_t to,
                   const std::vector<Register>& registers) {
  for (std::size_t k = from + 1; k < to; ++k) {
    if (const auto* m = std::get_if<Measure>(&circuit.body[k])) {
      if (std::find(registers.begin(), registers.end(), m->reg) !=
          registers.end()) {
        return true;
      }
    }
  }
  return false;
}

std::pair<Circuit, PassReport>
rewriteToFixedPoint(const Circuit& circuit, const std::vector<RewriteRule>& rules,
                    const std::string& passName, std::size_t maxSweeps) {
  const auto started = std::chrono::steady_clock::now();
  PassReport report;
  report.pass = passName;
  report.before = countMetrics(circuit);
  for (const auto& rule : rules) {
    report.ruleCounts[rule.name] = 0;
  }
  auto finish = [&](const Circuit& c) {
    report.after = countMetrics(c);
    report.elapsedMs = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  };

  Circuit current = circuit;
  while (true) {
    if (report.iterations == maxSweeps) {
      finish(current);
      throw CapExceeded(passName + " did not converge within " +
                            std::to_string(maxSweeps) + " sweeps",
                        report);
    }
    ++report.iterations;
    bool changed = false;
    for (std::size_t pos = 0; pos < current.body.size() && !changed; ++pos) {
      for (const auto& rule : rules) {
        if (auto rw = rule.match(current, pos)) {
          current = applyRewrite(current, *rw);
          ++report.ruleCounts[rule.name];
          changed = true;
          break;
        }
      }
    }
    if (!changed) {
      break;
    }
  }
  finish(current);
  return {std::move(current), std::move(report)};
}

} // namespace dequant
