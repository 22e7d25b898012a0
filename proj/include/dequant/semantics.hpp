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
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

/// Basis string; element i is the value of qubit (or register) i.
using Bits = std::vector<bool>;

inline constexpr double AMPLITUDE_EPSILON = 1e-12;
inline constexpr double PROBABILITY_EPSILON = 1e-12;
inline constexpr double EQUALITY_EPSILON = 1e-9;
inline constexpr std::size_t DEFAULT_ORACLE_LIMIT = 12;

[[nodiscard]] std::string toString(const Bits& bits);
[[nodiscard]] Bits bitsFromString(const std::string& s);

/// Sparse quantum state over a fixed number of qubits. Only amplitudes with
/// magnitude above AMPLITUDE_EPSILON are stored.
class QuantumState {
public:
  QuantumState() : QuantumState(0) {}
  /// |0...0>.
  explicit QuantumState(std::size_t numQubits);
  QuantumState(std::size_t numQubits, std::map<Bits, Complex> amplitudes);

  [[nodiscard]] std::size_t numQubits() const { return numQubits_; }
  [[nodiscard]] const std::map<Bits, Complex>& amplitudes() const {
    return amplitudes_;
  }
  [[nodiscard]] std::size_t support() const { return amplitudes_.size(); }
  [[nodiscard]] Complex amplitude(const Bits& basis) const;
  [[nodiscard]] double squaredNorm() const;

  /// Value of qubit i if every supported basis string agrees on it.
  [[nodiscard]] std::optional<bool> determined(Qubit i) const;

  /// Equality up to a global phase (aligned through the inner product).
  [[nodiscard]] bool approxEqual(const QuantumState& other,
                                 double tol = EQUALITY_EPSILON) const;

  /// Drops amplitudes below AMPLITUDE_EPSILON.
  void prune();
  /// Scales to unit 2-norm. Throws std::domain_error for the zero vector.
  void normalize();

  friend bool operator==(const QuantumState&, const QuantumState&) = default;

private:
  std::size_t numQubits_;
  std::map<Bits, Complex> amplitudes_;
};

/// Kronecker product; the qubits of `lhs` come first.
[[nodiscard]] QuantumState tensor(const QuantumState& lhs,
                                  const QuantumState& rhs);

struct HybridState {
  QuantumState psi;
  Bits beta;

  [[nodiscard]] bool approxEqual(const HybridState& other,
                                 double tol = EQUALITY_EPSILON) const {
    return beta == other.beta && psi.approxEqual(other.psi, tol);
  }
};

struct WeightedState {
  HybridState state;
  double probability = 0.0;
};

/// Finite-support probability distribution over hybrid states.
class MachineState {
public:
  MachineState() = default;
  MachineState(std::size_t numQubits, std::size_t numRegisters)
      : numQubits_(numQubits), numRegisters_(numRegisters) {}

  [[nodiscard]] std::size_t numQubits() const { return numQubits_; }
  [[nodiscard]] std::size_t numRegisters() const { return numRegisters_; }
  [[nodiscard]] const std::vector<WeightedState>& entries() const {
    return entries_;
  }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] double totalProbability() const;
  /// Largest number of amplitudes held by any entry.
  [[nodiscard]] std::size_t maxSupport() const;

  /// Adds probability mass, merging with an equal hybrid state. Mass at or
  /// below PROBABILITY_EPSILON is dropped.
  void add(HybridState state, double probability);
  /// Rescales probabilities to sum to one.
  void renormalize();

  /// Same support (up to per-entry global phase) and probabilities within
  /// `tol`.
  [[nodiscard]] bool approxEqual(const MachineState& other,
                                 double tol = EQUALITY_EPSILON) const;

private:
  std::size_t numQubits_ = 0;
  std::size_t numRegisters_ = 0;
  std::vector<WeightedState> entries_;
};

/// Product distribution; qubits and registers of `lhs` come first.
[[nodiscard]] MachineState tensor(const MachineState& lhs,
                                  const MachineState& rhs);

class ZeroProbabilityBranch : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class DegenerateSet : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class OracleLimitExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

[[nodiscard]] MachineState initialState(std::size_t numQubits,
                                        std::size_t numRegisters);

/// The (controlled) unitary of `instr` applied to psi; guards are ignored.
[[nodiscard]] QuantumState applyUnitary(const QuantumState& psi,
                                        const Apply& instr);

[[nodiscard]] bool guardsHold(const std::vector<Condition>& guards,
                              const Bits& beta);

[[nodiscard]] MachineState applyGate(const MachineState& rho,
                                     const Apply& instr);

/// Collapsed state and Born probability of observing qubit i as b. Throws
/// ZeroProbabilityBranch when the branch has probability below 1e-12.
[[nodiscard]] std::pair<QuantumState, double> collapse(const QuantumState& psi,
                                                       Qubit i, bool b);

[[nodiscard]] MachineState measure(const MachineState& rho, Qubit i,
                                   Register j, bool negated = false);

/// Folds all amplitude mass onto the q_i = b hyperplane and renormalises.
/// Throws DegenerateSet when the folded amplitudes cancel.
[[nodiscard]] QuantumState setQubit(const QuantumState& psi, Qubit i, bool b);

[[nodiscard]] MachineState reset(const MachineState& rho, Qubit i);

[[nodiscard]] MachineState step(const MachineState& rho,
                                const Instruction& instr);

/// Left fold of the instruction semantics over the initial state. The
/// circuit's global phase accumulator is unobservable and not applied.
[[nodiscard]] MachineState run(const Circuit& circuit);

using Distribution = std::map<Bits, double>;

/// Marginal of run(circuit) over the register contents.
[[nodiscard]] Distribution
outcomeDistribution(const Circuit& circuit,
                    std::size_t oracleLimit = DEFAULT_ORACLE_LIMIT);

[[nodiscard]] double totalVariation(const Distribution& a,
                                    const Distribution& b);

/// True when qubit q is measured and, after its last measurement, is only
/// touched as the target of uncontrolled single-qubit gates. The remaining
/// state of such a qubit does not influence anything and is treated as
/// discarded by the equivalence check.
[[nodiscard]] bool isDiscardedAfterReadout(const Circuit& circuit, Qubit q);

struct EquivalenceResult {
  bool equivalent = false;
  /// TV distance of the register distributions.
  double registerDistance = 0.0;
  /// TV distance after reading out every non-discarded qubit.
  double extendedDistance = 0.0;
  /// Outcome (registers followed by appended read-outs) with the largest
  /// probability difference.
  Bits witness;
};

/// Compares two circuits over the same qubits and registers. Every qubit that
/// neither circuit discards is measured into a fresh register at the end, so
/// differences in the final computational-basis state are observable.
[[nodiscard]] EquivalenceResult
equivalent(const Circuit& a, const Circuit& b, double tol = EQUALITY_EPSILON,
           std::size_t oracleLimit = DEFAULT_ORACLE_LIMIT);

} // namespace dequant
