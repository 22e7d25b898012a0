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

#include "dequant/semantics.hpp"

#include "dequant/overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dequant {

std::string toString(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (const bool b : bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

Bits bitsFromString(const std::string& s) {
  Bits bits;
  bits.reserve(s.size());
  for (const char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("not a bit string: " + s);
    }
    bits.push_back(c == '1');
  }
  return bits;
}

QuantumState::QuantumState(std::size_t numQubits) : numQubits_(numQubits) {
  amplitudes_.emplace(Bits(numQubits, false), Complex{1.0, 0.0});
}

QuantumState::QuantumState(std::size_t numQubits,
                           std::map<Bits, Complex> amplitudes)
    : numQubits_(numQubits), amplitudes_(std::move(amplitudes)) {
  for (const auto& [basis, amp] : amplitudes_) {
    if (basis.size() != numQubits_) {
      throw std::invalid_argument("basis string of wrong length");
    }
  }
  prune();
}

Complex QuantumState::amplitude(const Bits& basis) const {
  const auto it = amplitudes_.find(basis);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double QuantumState::squaredNorm() const {
  double sum = 0.0;
  for (const auto& [basis, amp] : amplitudes_) {
    sum += std::norm(amp);
  }
  return sum;
}

std::optional<bool> QuantumState::determined(Qubit i) const {
  std::optional<bool> value;
  for (const auto& [basis, amp] : amplitudes_) {
    if (!value) {
      value = basis[i];
    } else if (*value != basis[i]) {
      return std::nullopt;
    }
  }
  return value;
}

bool QuantumState::approxEqual(const QuantumState& other, double tol) const {
  if (numQubits_ != other.numQubits_) {
    return false;
  }
  Complex overlap;
  for (const auto& [basis, amp] : amplitudes_) {
    overlap += std::conj(amp) * other.amplitude(basis);
  }
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  for (const auto& [basis, amp] : amplitudes_) {
    if (std::abs(amp * phase - other.amplitude(basis)) > tol) {
      return false;
    }
  }
  for (const auto& [basis, amp] : other.amplitudes_) {
    if (!amplitudes_.contains(basis) && std::abs(amp) > tol) {
      return false;
    }
  }
  return true;
}

void QuantumState::prune() {
  std::erase_if(amplitudes_, [](const auto& entry) {
    return std::abs(entry.second) <= AMPLITUDE_EPSILON;
  });
}

void QuantumState::normalize() {
  const double norm = std::sqrt(squaredNorm());
  if (norm <= AMPLITUDE_EPSILON) {
    throw std::domain_error("cannot normalise the zero vector");
  }
  for (auto& [basis, amp] : amplitudes_) {
    amp /= norm;
  }
  prune();
}

QuantumState tensor(const QuantumState& lhs, const QuantumState& rhs) {
  std::map<Bits, Complex> amps;
  for (const auto& [a, x] : lhs.amplitudes()) {
    for (const auto& [b, y] : rhs.amplitudes()) {
      Bits joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      amps.emplace(std::move(joined), x * y);
    }
  }
  return {lhs.numQubits() + rhs.numQubits(), std::move(amps)};
}

double MachineState::totalProbability() const {
  double sum = 0.0;
  for (const auto& e : entries_) {
    sum += e.probability;
  }
  return sum;
}

std::size_t MachineState::maxSupport() const {
  std::size_t most = 0;
  for (const auto& e : entries_) {
    most = std::max(most, e.state.psi.support());
  }
  return most;
}

void MachineState::add(HybridState state, double probability) {
  if (probability <= PROBABILITY_EPSILON) {
    return;
  }
  for (auto& e : entries_) {
    if (e.state.approxEqual(state)) {
      e.probability += probability;
      return;
    }
  }
  entries_.push_back({std::move(state), probability});
}

void MachineState::renormalize() {
  const double total = totalProbability();
  if (total <= 0.0) {
    throw std::domain_error("machine state has no probability mass");
  }
  for (auto& e : entries_) {
    e.probability /= total;
  }
}

bool MachineState::approxEqual(const MachineState& other, double tol) const {
  if (numQubits_ != other.numQubits_ || numRegisters_ != other.numRegisters_) {
    return false;
  }
  auto covered = [tol](const MachineState& x, const MachineState& y) {
    for (const auto& e : x.entries_) {
      const auto match =
          std::find_if(y.entries_.begin(), y.entries_.end(),
                       [&](const WeightedState& f) {
                         return f.state.approxEqual(e.state, tol);
                       });
      if (match == y.entries_.end() ||
          std::abs(match->probability - e.probability) > tol) {
        return false;
      }
    }
    return true;
  };
  return covered(*this, other) && covered(other, *this);
}

MachineState tensor(const MachineState& lhs, const MachineState& rhs) {
  MachineState result(lhs.numQubits() + rhs.numQubits(),
                      lhs.numRegisters() + rhs.numRegisters());
  for (const auto& a : lhs.entries()) {
    for (const auto& b : rhs.entries()) {
      Bits beta = a.state.beta;
      beta.insert(beta.end(), b.state.beta.begin(), b.state.beta.end());
      result.add({tensor(a.state.psi, b.state.psi), std::move(beta)},
                 a.probability * b.probability);
    }
  }
  return result;
}

MachineState initialState(std::size_t numQubits, std::size_t numRegisters) {
  MachineState rho(numQubits, numRegisters);
  rho.add({QuantumState(numQubits), Bits(numRegisters, false)}, 1.0);
  return rho;
}

namespace {

bool controlsHold(const std::vector<Condition>& controls, const Bits& basis) {
  return std::all_of(controls.begin(), controls.end(), [&](const Condition& c) {
    return basis[c.index] == expectedValue(c.polarity);
  });
}

} // namespace

QuantumState applyUnitary(const QuantumState& psi, const Apply& instr) {
  const auto matrix = instr.gate.matrix();
  const std::size_t dim = matrixDimension(instr.gate);
  const std::size_t arity = instr.targets.size();
  std::map<Bits, Complex> out;
  for (const auto& [basis, amp] : psi.amplitudes()) {
    if (!controlsHold(instr.controls, basis)) {
      out[basis] += amp;
      continue;
    }
    std::size_t column = 0;
    for (const auto t : instr.targets) {
      column = (column << 1U) | (basis[t] ? 1U : 0U);
    }
    for (std::size_t row = 0; row < dim; ++row) {
      const Complex coeff = matrix[row * dim + column];
      if (coeff == Complex{}) {
        continue;
      }
      Bits image = basis;
      for (std::size_t k = 0; k < arity; ++k) {
        image[instr.targets[k]] = ((row >> (arity - 1 - k)) & 1U) != 0;
      }
      out[image] += coeff * amp;
    }
  }
  return {psi.numQubits(), std::move(out)};
}

bool guardsHold(const std::vector<Condition>& guards, const Bits& beta) {
  return controlsHold(guards, beta);
}

MachineState applyGate(const MachineState& rho, const Apply& instr) {
  MachineState out(rho.numQubits(), rho.numRegisters());
  for (const auto& e : rho.entries()) {
    if (guardsHold(instr.guards, e.state.beta)) {
      out.add({applyUnitary(e.state.psi, instr), e.state.beta}, e.probability);
    } else {
      out.add(e.state, e.probability);
    }
  }
  return out;
}

namespace {

double branchProbability(const QuantumState& psi, Qubit i, bool b) {
  double p = 0.0;
  for (const auto& [basis, amp] : psi.amplitudes()) {
    if (basis[i] == b) {
      p += std::norm(amp);
    }
  }
  return p;
}

} // namespace

std::pair<QuantumState, double> collapse(const QuantumState& psi, Qubit i,
                                         bool b) {
  const double p = branchProbability(psi, i, b);
  if (p < PROBABILITY_EPSILON) {
    throw ZeroProbabilityBranch("qubit " + std::to_string(i) +
                                " cannot be observed as " +
                                std::to_string(static_cast<int>(b)));
  }
  std::map<Bits, Complex> kept;
  for (const auto& [basis, amp] : psi.amplitudes()) {
    if (basis[i] == b) {
      kept.emplace(basis, amp);
    }
  }
  QuantumState result(psi.numQubits(), std::move(kept));
  result.normalize();
  return {std::move(result), p};
}

MachineState measure(const MachineState& rho, Qubit i, Register j,
                     bool negated) {
  MachineState out(rho.numQubits(), rho.numRegisters());
  for (const auto& e : rho.entries()) {
    for (const bool b : {false, true}) {
      const double p = branchProbability(e.state.psi, i, b);
      if (e.probability * p <= PROBABILITY_EPSILON) {
        continue;
      }
      auto [psi, prob] = collapse(e.state.psi, i, b);
      Bits beta = e.state.beta;
      beta[j] = b != negated;
      out.add({std::move(psi), std::move(beta)}, e.probability * prob);
    }
  }
  out.renormalize();
  return out;
}

QuantumState setQubit(const QuantumState& psi, Qubit i, bool b) {
  std::map<Bits, Complex> folded;
  for (const auto& [basis, amp] : psi.amplitudes()) {
    Bits image = basis;
    image[i] = b;
    folded[image] += amp;
  }
  QuantumState result(psi.numQubits(), std::move(folded));
  if (result.squaredNorm() <= AMPLITUDE_EPSILON * AMPLITUDE_EPSILON) {
    throw DegenerateSet("setting qubit " + std::to_string(i) +
                        " cancels every amplitude");
  }
  result.normalize();
  return result;
}

MachineState reset(const MachineState& rho, Qubit i) {
  MachineState out(rho.numQubits(), rho.numRegisters());
  for (const auto& e : rho.entries()) {
    for (const bool b : {false, true}) {
      const double p = branchProbability(e.state.psi, i, b);
      if (e.probability * p <= PROBABILITY_EPSILON) {
        continue;
      }
      auto [psi, prob] = collapse(e.state.psi, i, b);
      if (b) {
        psi = setQubit(psi, i, false);
      }
      out.add({std::move(psi), e.state.beta}, e.probability * prob);
    }
  }
  out.renormalize();
  return out;
}

MachineState step(const MachineState& rho, const Instruction& instr) {
  return std::visit(
      Overloaded{
          [&](const Apply& a) { return applyGate(rho, a); },
          [&](const Measure& m) { return measure(rho, m.qubit, m.reg, m.negated); },
          [&](const Reset& r) { return reset(rho, r.qubit); }},
      instr);
}

MachineState run(const Circuit& circuit) {
  MachineState rho = initialState(circuit.numQubits, circuit.numRegisters);
  for (const auto& instr : circuit.body) {
    rho = step(rho, instr);
  }
  return rho;
}

Distribution outcomeDistribution(const Circuit& circuit,
                                 std::size_t oracleLimit) {
  if (circuit.numQubits > oracleLimit) {
    throw OracleLimitExceeded("circuit has " + std::to_string(circuit.numQubits) +
                              " qubits, oracle limit is " +
                              std::to_string(oracleLimit));
  }
  Distribution dist;
  const MachineState rho = run(circuit);
  for (const auto& e : rho.entries()) {
    dist[e.state.beta] += e.probability;
  }
  return dist;
}

double totalVariation(const Distribution& a, const Distribution& b) {
  std::set<Bits> keys;
  for (const auto& [k, v] : a) {
    keys.insert(k);
  }
  for (const auto& [k, v] : b) {
    keys.insert(k);
  }
  double sum = 0.0;
  for (const auto& k : keys) {
    const auto ia = a.find(k);
    const auto ib = b.find(k);
    sum += std::abs((ia == a.end() ? 0.0 : ia->second) -
                    (ib == b.end() ? 0.0 : ib->second));
  }
  return sum / 2.0;
}

bool isDiscardedAfterReadout(const Circuit& circuit, Qubit q) {
  bool discarded = false;
  for (const auto& instr : circuit.body) {
    if (const auto* m = std::get_if<Measure>(&instr); m != nullptr && m->qubit == q) {
      discarded = true;
      continue;
    }
    const auto qs = qubitsOf(instr);
    if (std::find(qs.begin(), qs.end(), q) == qs.end()) {
      continue;
    }
    const auto* a = std::get_if<Apply>(&instr);
    const bool singleQubitOnQ = a != nullptr && !a->isControlled() &&
                                a->targets.size() == 1 && a->targets[0] == q;
    if (!singleQubitOnQ) {
      discarded = false;
    }
  }
  return discarded;
}

namespace {

Distribution marginal(const Distribution& dist, std::size_t width) {
  Distribution out;
  for (const auto& [beta, p] : dist) {
    out[Bits(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(width))] += p;
  }
  return out;
}

} // namespace

EquivalenceResult equivalent(const Circuit& a, const Circuit& b, double tol,
                             std::size_t oracleLimit) {
  if (a.numQubits != b.numQubits || a.numRegisters != b.numRegisters) {
    throw std::invalid_argument("equivalence check needs matching qubit and "
                                "register counts");
  }
  std::vector<Qubit> observed;
  for (Qubit q = 0; q < a.numQubits; ++q) {
    if (!isDiscardedAfterReadout(a, q) && !isDiscardedAfterReadout(b, q)) {
      observed.push_back(q);
    }
  }
  auto extend = [&](const Circuit& c) {
    Circuit ext(c.numQubits, c.numRegisters + observed.size());
    ext.body = c.body;
    for (std::size_t k = 0; k < observed.size(); ++k) {
      ext.add(Measure{observed[k], c.numRegisters + k, false});
    }
    return ext;
  };
  const Distribution da = outcomeDistribution(extend(a), oracleLimit);
  const Distribution db = outcomeDistribution(extend(b), oracleLimit);

  EquivalenceResult result;
  result.extendedDistance = totalVariation(da, db);
  result.registerDistance = totalVariation(marginal(da, a.numRegisters),
                                           marginal(db, b.numRegisters));
  double worst = -1.0;
  std::set<Bits> keys;
  for (const auto& [k, v] : da) {
    keys.insert(k);
  }
  for (const auto& [k, v] : db) {
    keys.insert(k);
  }
  for (const auto& k : keys) {
    const auto ia = da.find(k);
    const auto ib = db.find(k);
    const double diff = std::abs((ia == da.end() ? 0.0 : ia->second) -
                                 (ib == db.end() ? 0.0 : ib->second));
    if (diff > worst) {
      worst = diff;
      result.witness = k;
    }
  }
  result.equivalent = result.extendedDistance <= tol;
  return result;
}

} // namespace dequant
