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
#include "dequant/semantics.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

struct TableLimits {
  /// N: amplitudes per hybrid state.
  std::size_t maxAmplitudes = 16;
  /// M: hybrid states per group.
  std::size_t maxHybridStates = 4;
};

/// One entanglement group. Qubits and registers are kept sorted; index k of
/// the local state refers to qubits[k] (resp. registers[k]). An empty
/// `local` is the top element.
struct Group {
  std::vector<Qubit> qubits;
  std::vector<Register> registers;
  std::optional<MachineState> local;

  [[nodiscard]] bool isTop() const { return !local.has_value(); }
};

/// `index` names a qubit or a register; the literal holds when it has
/// `value`.
struct Literal {
  enum class Kind { Qubit, Register };
  Kind kind = Kind::Qubit;
  std::size_t index = 0;
  bool value = true;

  [[nodiscard]] static Literal qubit(Qubit q, bool value) {
    return {Kind::Qubit, q, value};
  }
  [[nodiscard]] static Literal reg(Register r, bool value) {
    return {Kind::Register, r, value};
  }
};

struct Implication {
  bool holds = false;
  /// No reachable state satisfies the premise.
  bool vacuous = false;
};

/// Abstract machine state: per-group exact states capped at (N, M), with top
/// for groups that overflowed. Registers outside every group hold 0.
class UnionTable {
public:
  UnionTable(std::size_t numQubits, std::size_t numRegisters,
             TableLimits limits = {});

  [[nodiscard]] std::size_t numQubits() const { return qubitGroup_.size(); }
  [[nodiscard]] std::size_t numRegisters() const {
    return registerGroup_.size();
  }
  [[nodiscard]] const TableLimits& limits() const { return limits_; }

  void step(const Instruction& instr);

  [[nodiscard]] const Group& groupOfQubit(Qubit q) const;
  /// Null for pooled registers.
  [[nodiscard]] const Group* groupOfRegister(Register r) const;
  /// Groups ordered by their smallest qubit (register-only groups last).
  [[nodiscard]] std::vector<const Group*> groups() const;
  [[nodiscard]] bool anyTop() const;

  [[nodiscard]] std::optional<bool> queryQubit(Qubit q) const;
  [[nodiscard]] std::optional<bool> queryRegister(Register r) const;
  /// (1, b') when, in every hybrid state of the shared group, qubit q is
  /// determined and q = 1 exactly when r = b'.
  [[nodiscard]] std::optional<std::pair<bool, bool>>
  queryCorrelation(Qubit q, Register r) const;
  [[nodiscard]] Implication queryImplication(const Literal& premise,
                                             const Literal& conclusion) const;
  /// False only when the literals provably never hold together.
  [[nodiscard]] bool querySatisfiable(const std::vector<Literal>& literals) const;
  /// The common phase a diagonal gate puts on every reachable amplitude.
  [[nodiscard]] std::optional<double> queryUniformPhase(const Apply& gate) const;

  /// Product of all group states over the global indices; empty if any
  /// group is top.
  [[nodiscard]] std::optional<MachineState> toMachineState() const;

  /// One block per group: `group {q..; r..}: k entries` followed by the
  /// entries.
  [[nodiscard]] std::string dump() const;

private:
  using GroupId = std::size_t;

  GroupId merge(const std::vector<GroupId>& ids);
  GroupId adopt(GroupId id, Register r);
  void enforceLimits(GroupId id);
  [[nodiscard]] std::optional<MachineState>
  mergedState(const std::vector<GroupId>& ids, std::vector<Qubit>& qubits,
              std::vector<Register>& registers) const;

  TableLimits limits_;
  std::map<GroupId, Group> groups_;
  std::vector<GroupId> qubitGroup_;
  std::vector<std::optional<GroupId>> registerGroup_;
  GroupId nextId_ = 0;
};

} // namespace dequant
