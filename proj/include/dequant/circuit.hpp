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

#include "dequant/gate.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dequant {

using Qubit = std::size_t;
using Register = std::size_t;

enum class Polarity : unsigned char { Pos, Neg };

[[nodiscard]] constexpr Polarity flip(Polarity p) {
  return p == Polarity::Pos ? Polarity::Neg : Polarity::Pos;
}

/// The bit value a condition of the given polarity is waiting for.
[[nodiscard]] constexpr bool expectedValue(Polarity p) {
  return p == Polarity::Pos;
}

[[nodiscard]] constexpr Polarity polarityFor(bool value) {
  return value ? Polarity::Pos : Polarity::Neg;
}

/// A quantum control (index = qubit) or a register guard (index = register).
struct Condition {
  std::size_t index = 0;
  Polarity polarity = Polarity::Pos;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// (Possibly controlled, possibly guarded) unitary application.
/// Controls and guards are kept sorted by index.
struct Apply {
  Gate gate;
  std::vector<Qubit> targets;
  std::vector<Condition> controls;
  std::vector<Condition> guards;

  [[nodiscard]] bool isControlled() const { return !controls.empty(); }
  [[nodiscard]] bool isGuarded() const { return !guards.empty(); }
  [[nodiscard]] std::optional<Polarity> controlOn(Qubit q) const;
  [[nodiscard]] std::optional<Polarity> guardOn(Register r) const;
  [[nodiscard]] bool hasTarget(Qubit q) const;
  /// Sorts controls and guards by index.
  void normalize();

  friend bool operator==(const Apply&, const Apply&) = default;
};

/// Measures `qubit` into `reg`. A negated measurement stores the complement
/// of the observed bit.
struct Measure {
  Qubit qubit = 0;
  Register reg = 0;
  bool negated = false;

  friend bool operator==(const Measure&, const Measure&) = default;
};

struct Reset {
  Qubit qubit = 0;

  friend bool operator==(const Reset&, const Reset&) = default;
};

using Instruction = std::variant<Apply, Measure, Reset>;

struct Circuit {
  std::size_t numQubits = 0;
  std::size_t numRegisters = 0;
  std::vector<Instruction> body;
  double globalPhase = 0.0;

  Circuit() = default;
  Circuit(std::size_t qubits, std::size_t registers)
      : numQubits(qubits), numRegisters(registers) {}

  Circuit& add(Instruction instr);

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Builders for readable test and generator code.
[[nodiscard]] Apply apply(GateType type, Qubit target, double angle = 0.0);
[[nodiscard]] Apply controlled(GateType type, std::vector<Condition> controls,
                               Qubit target, double angle = 0.0);
[[nodiscard]] Apply cx(Qubit control, Qubit target);
[[nodiscard]] Apply guarded(Apply base, std::vector<Condition> guards);
[[nodiscard]] Condition pos(std::size_t index);
[[nodiscard]] Condition neg(std::size_t index);

/// All qubits an instruction reads or writes.
[[nodiscard]] std::vector<Qubit> qubitsOf(const Instruction& instr);
/// All registers an instruction reads or writes.
[[nodiscard]] std::vector<Register> registersOf(const Instruction& instr);

struct Metrics {
  std::size_t gates = 0;
  std::size_t qcontrolledGates = 0;
  std::size_t cguardedGates = 0;
  std::size_t measurements = 0;
  std::size_t resets = 0;
  std::size_t depth = 0;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

[[nodiscard]] Metrics countMetrics(const Circuit& circuit);

struct Diagnostic {
  enum class Rule {
    QubitOutOfRange,
    RegisterOutOfRange,
    ArityMismatch,
    OperandOverlap,
    DuplicateGuard,
  };
  std::size_t instruction = 0;
  Rule rule = Rule::QubitOutOfRange;
  std::string message;
};

[[nodiscard]] std::vector<Diagnostic> validate(const Circuit& circuit);

/// Returns a copy of `circuit` with `len` instructions starting at `start`
/// replaced by `replacement`. Throws std::out_of_range for a bad window and
/// std::invalid_argument if the replacement is not valid for the circuit.
[[nodiscard]] Circuit splice(const Circuit& circuit, std::size_t start,
                             std::size_t len,
                             const std::vector<Instruction>& replacement);

} // namespace dequant
