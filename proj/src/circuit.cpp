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

#include "dequant/circuit.hpp"
#include "dequant/overloaded.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dequant {

namespace {

bool byIndex(const Condition& a, const Condition& b) {
  return a.index < b.index;
}

} // namespace

std::optional<Polarity> Apply::controlOn(Qubit q) const {
  for (const auto& c : controls) {
    if (c.index == q) {
      return c.polarity;
    }
  }
  return std::nullopt;
}

std::optional<Polarity> Apply::guardOn(Register r) const {
  for (const auto& g : guards) {
    if (g.index == r) {
      return g.polarity;
    }
  }
  return std::nullopt;
}

bool Apply::hasTarget(Qubit q) const {
  return std::find(targets.begin(), targets.end(), q) != targets.end();
}

void Apply::normalize() {
  std::stable_sort(controls.begin(), controls.end(), byIndex);
  std::stable_sort(guards.begin(), guards.end(), byIndex);
}

Circuit& Circuit::add(Instruction instr) {
  body.push_back(std::move(instr));
  return *this;
}

Apply apply(GateType type, Qubit target, double angle) {
  Apply a;
  a.gate = Gate(type, angle);
  if (a.gate.arity() > 0) {
    a.targets = {target};
  }
  return a;
}

Apply controlled(GateType type, std::vector<Condition> controls, Qubit target,
                 double angle) {
  Apply a = apply(type, target, angle);
  a.controls = std::move(controls);
  a.normalize();
  return a;
}

Apply cx(Qubit control, Qubit target) {
  return controlled(GateType::X, {pos(control)}, target);
}

Apply guarded(Apply base, std::vector<Condition> guards) {
  base.guards = std::move(guards);
  base.normalize();
  return base;
}

Condition pos(std::size_t index) { return {index, Polarity::Pos}; }
Condition neg(std::size_t index) { return {index, Polarity::Neg}; }

std::vector<Qubit> qubitsOf(const Instruction& instr) {
  return std::visit(
      Overloaded{[](const Apply& a) {
                   std::vector<Qubit> qs = a.targets;
                   for (const auto& c : a.controls) {
                     qs.push_back(c.index);
                   }
                   return qs;
                 },
                 [](const Measure& m) { return std::vector<Qubit>{m.qubit}; },
                 [](const Reset& r) { return std::vector<Qubit>{r.qubit}; }},
      instr);
}

std::vector<Register> registersOf(const Instruction& instr) {
  return std::visit(Overloaded{[](const Apply& a) {
                                 std::vector<Register> rs;
                                 for (const auto& g : a.guards) {
                                   rs.push_back(g.index);
                                 }
                                 return rs;
                               },
                               [](const Measure& m) {
                                 return std::vector<Register>{m.reg};
                               },
                               [](const Reset&) {
                                 return std::vector<Register>{};
                               }},
                    instr);
}

Metrics countMetrics(const Circuit& circuit) {
  Metrics m;
  std::vector<std::size_t> qubitLevel(circuit.numQubits, 0);
  std::vector<std::size_t> registerLevel(circuit.numRegisters, 0);
  for (const auto& instr : circuit.body) {
    if (const auto* a = std::get_if<Apply>(&instr)) {
      ++m.gates;
      if (a->isControlled()) {
        ++m.qcontrolledGates;
      } else if (a->isGuarded()) {
        ++m.cguardedGates;
      }
    } else if (std::holds_alternative<Measure>(instr)) {
      ++m.measurements;
    } else {
      ++m.resets;
    }
    const auto qs = qubitsOf(instr);
    const auto rs = registersOf(instr);
    std::size_t level = 0;
    for (const auto q : qs) {
      level = std::max(level, qubitLevel.at(q));
    }
    for (const auto r : rs) {
      level = std::max(level, registerLevel.at(r));
    }
    ++level;
    for (const auto q : qs) {
      qubitLevel[q] = level;
    }
    for (const auto r : rs) {
      registerLevel[r] = level;
    }
    m.depth = std::max(m.depth, level);
  }
  return m;
}

namespace {

void checkInstruction(const Instruction& instr, std::size_t index,
                      std::size_t numQubits, std::size_t numRegisters,
                      std::vector<Diagnostic>& out) {
  auto report = [&](Diagnostic::Rule rule, std::string msg) {
    out.push_back({index, rule, std::move(msg)});
  };
  auto checkQubit = [&](Qubit q) {
    if (q >= numQubits) {
      report(Diagnostic::Rule::QubitOutOfRange,
             "qubit " + std::to_string(q) + " out of range (n=" +
                 std::to_string(numQubits) + ")");
      return false;
    }
    return true;
  };
  auto checkRegister = [&](Register r) {
    if (r >= numRegisters) {
      report(Diagnostic::Rule::RegisterOutOfRange,
             "register " + std::to_string(r) + " out of range (m=" +
                 std::to_string(numRegisters) + ")");
      return false;
    }
    return true;
  };

  if (const auto* a = std::get_if<Apply>(&instr)) {
    if (a->targets.size() != a->gate.arity()) {
      report(Diagnostic::Rule::ArityMismatch,
             std::string(a->gate.name()) + " expects " +
                 std::to_string(a->gate.arity()) + " target(s), got " +
                 std::to_string(a->targets.size()));
    }
    std::set<Qubit> seen;
    bool overlap = false;
    for (const auto q : qubitsOf(instr)) {
      checkQubit(q);
      overlap |= !seen.insert(q).second;
    }
    if (overlap) {
      report(Diagnostic::Rule::OperandOverlap,
             "targets and controls must be pairwise disjoint");
    }
    std::set<Register> guards;
    bool duplicate = false;
    for (const auto& g : a->guards) {
      checkRegister(g.index);
      duplicate |= !guards.insert(g.index).second;
    }
    if (duplicate) {
      report(Diagnostic::Rule::DuplicateGuard,
             "at most one guard per register");
    }
  } else if (const auto* m = std::get_if<Measure>(&instr)) {
    checkQubit(m->qubit);
    checkRegister(m->reg);
  } else {
    checkQubit(std::get<Reset>(instr).qubit);
  }
}

} // namespace

std::vector<Diagnostic> validate(const Circuit& circuit) {
  std::vector<Diagnostic> out;
  for (std::size_t i = 0; i < circuit.body.size(); ++i) {
    checkInstruction(circuit.body[i], i, circuit.numQubits,
                     circuit.numRegisters, out);
  }
  return out;
}

Circuit splice(const Circuit& circuit, std::size_t start, std::size_t len,
               const std::vector<Instruction>& replacement) {
  if (start > circuit.body.size() || len > circuit.body.size() - start) {
    throw std::out_of_range("splice window [" + std::to_string(start) + ", " +
                            std::to_string(start + len) +
                            ") exceeds circuit of length " +
                            std::to_string(circuit.body.size()));
  }
  std::vector<Diagnostic> diags;
  for (std::size_t i = 0; i < replacement.size(); ++i) {
    checkInstruction(replacement[i], start + i, circuit.numQubits,
                     circuit.numRegisters, diags);
  }
  if (!diags.empty()) {
    throw std::invalid_argument("invalid replacement: " + diags.front().message);
  }
  Circuit result(circuit.numQubits, circuit.numRegisters);
  result.globalPhase = circuit.globalPhase;
  result.body.reserve(circuit.body.size() - len + replacement.size());
  const auto first = circuit.body.begin() + static_cast<std::ptrdiff_t>(start);
  result.body.insert(result.body.end(), circuit.body.begin(), first);
  result.body.insert(result.body.end(), replacement.begin(), replacement.end());
  result.body.insert(result.body.end(),
                     first + static_cast<std::ptrdiff_t>(len),
                     circuit.body.end());
  return result;
}

} // namespace dequant
