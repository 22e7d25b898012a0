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

#include "dequant/union_table.hpp"

#include "dequant/overloaded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dequant {

namespace {

std::size_t localIndex(const std::vector<std::size_t>& sorted, std::size_t v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) {
    throw std::logic_error("index " + std::to_string(v) + " not in group");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

/// Lays the product of `parts` out over the given qubit and register order.
/// Every index of every part must occur in the layout; indices of the
/// layout not covered by any part are |0> (resp. 0).
MachineState combine(const std::vector<const Group*>& parts,
                     const std::vector<Qubit>& qubits,
                     const std::vector<Register>& registers) {
  struct Partial {
    std::map<Bits, Complex> amps;
    Bits beta;
    double probability;
  };
  std::vector<Partial> partials = {
      {{{Bits(qubits.size(), false), Complex{1.0}}},
       Bits(registers.size(), false),
       1.0}};
  for (const Group* g : parts) {
    std::vector<std::size_t> qpos;
    std::vector<std::size_t> rpos;
    for (const auto q : g->qubits) {
      qpos.push_back(localIndex(qubits, q));
    }
    for (const auto r : g->registers) {
      rpos.push_back(localIndex(registers, r));
    }
    std::vector<Partial> next;
    for (const auto& p : partials) {
      for (const auto& e : g->local->entries()) {
        Partial out{{}, p.beta, p.probability * e.probability};
        for (std::size_t k = 0; k < rpos.size(); ++k) {
          out.beta[rpos[k]] = e.state.beta[k];
        }
        for (const auto& [pb, pa] : p.amps) {
          for (const auto& [lb, la] : e.state.psi.amplitudes()) {
            Bits b = pb;
            for (std::size_t k = 0; k < qpos.size(); ++k) {
              b[qpos[k]] = lb[k];
            }
            out.amps[b] += pa * la;
          }
        }
        next.push_back(std::move(out));
      }
    }
    partials = std::move(next);
  }
  MachineState result(qubits.size(), registers.size());
  for (auto& p : partials) {
    result.add({QuantumState(qubits.size(), std::move(p.amps)),
                std::move(p.beta)},
               p.probability);
  }
  return result;
}

bool conditionsHold(const std::vector<Condition>& conds, const Bits& bits) {
  return std::all_of(conds.begin(), conds.end(), [&](const Condition& c) {
    return bits[c.index] == expectedValue(c.polarity);
  });
}

std::string formatReal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::abs(x) < 1e-12 ? 0.0 : x);
  return buf;
}

std::string formatAmplitude(Complex z) {
  if (std::abs(z.imag()) < 1e-12) {
    return formatReal(z.real());
  }
  if (std::abs(z.real()) < 1e-12) {
    return formatReal(z.imag()) + "i";
  }
  return "(" + formatReal(z.real()) + (z.imag() < 0 ? "" : "+") +
         formatReal(z.imag()) + "i)";
}

} // namespace

UnionTable::UnionTable(std::size_t numQubits, std::size_t numRegisters,
                       TableLimits limits)
    : limits_(limits), qubitGroup_(numQubits), registerGroup_(numRegisters) {
  if (limits.maxAmplitudes == 0 || limits.maxHybridStates == 0) {
    throw std::invalid_argument("table limits must be at least 1");
  }
  for (Qubit q = 0; q < numQubits; ++q) {
    const GroupId id = nextId_++;
    groups_.emplace(id, Group{{q}, {}, initialState(1, 0)});
    qubitGroup_[q] = id;
  }
}

const Group& UnionTable::groupOfQubit(Qubit q) const {
  return groups_.at(qubitGroup_.at(q));
}

const Group* UnionTable::groupOfRegister(Register r) const {
  const auto& id = registerGroup_.at(r);
  return id ? &groups_.at(*id) : nullptr;
}

std::vector<const Group*> UnionTable::groups() const {
  std::vector<const Group*> out;
  for (const auto& [id, g] : groups_) {
    out.push_back(&g);
  }
  std::sort(out.begin(), out.end(), [](const Group* a, const Group* b) {
    if (a->qubits.empty() != b->qubits.empty()) {
      return b->qubits.empty();
    }
    if (!a->qubits.empty()) {
      return a->qubits.front() < b->qubits.front();
    }
    return a->registers.front() < b->registers.front();
  });
  return out;
}

bool UnionTable::anyTop() const {
  return std::any_of(groups_.begin(), groups_.end(),
                     [](const auto& entry) { return entry.second.isTop(); });
}

std::optional<MachineState>
UnionTable::mergedState(const std::vector<GroupId>& ids,
                        std::vector<Qubit>& qubits,
                        std::vector<Register>& registers) const {
  std::vector<const Group*> parts;
  bool top = false;
  std::size_t entries = 1;
  std::size_t amplitudes = 1;
  for (const auto id : ids) {
    const Group& g = groups_.at(id);
    parts.push_back(&g);
    qubits.insert(qubits.end(), g.qubits.begin(), g.qubits.end());
    registers.insert(registers.end(), g.registers.begin(), g.registers.end());
    if (g.isTop()) {
      top = true;
    } else {
      entries *= g.local->size();
      amplitudes *= g.local->maxSupport();
    }
  }
  std::sort(qubits.begin(), qubits.end());
  std::sort(registers.begin(), registers.end());
  // Products of distinct hybrid states stay distinct and supports multiply,
  // so the sizes of the product are known before building it.
  if (top || entries > limits_.maxHybridStates ||
      amplitudes > limits_.maxAmplitudes) {
    return std::nullopt;
  }
  return combine(parts, qubits, registers);
}

UnionTable::GroupId UnionTable::merge(const std::vector<GroupId>& ids) {
  std::vector<GroupId> unique = ids;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (unique.size() == 1) {
    return unique.front();
  }
  Group merged;
  merged.local = mergedState(unique, merged.qubits, merged.registers);
  for (const auto id : unique) {
    groups_.erase(id);
  }
  const GroupId id = nextId_++;
  for (const auto q : merged.qubits) {
    qubitGroup_[q] = id;
  }
  for (const auto r : merged.registers) {
    registerGroup_[r] = id;
  }
  groups_.emplace(id, std::move(merged));
  return id;
}

UnionTable::GroupId UnionTable::adopt(GroupId id, Register r) {
  Group& g = groups_.at(id);
  const auto at = std::lower_bound(g.registers.begin(), g.registers.end(), r);
  const auto pos = static_cast<std::size_t>(at - g.registers.begin());
  g.registers.insert(at, r);
  registerGroup_[r] = id;
  if (g.local) {
    MachineState widened(g.local->numQubits(), g.registers.size());
    for (const auto& e : g.local->entries()) {
      Bits beta = e.state.beta;
      beta.insert(beta.begin() + static_cast<std::ptrdiff_t>(pos), false);
      widened.add({e.state.psi, std::move(beta)}, e.probability);
    }
    g.local = std::move(widened);
  }
  return id;
}

void UnionTable::enforceLimits(GroupId id) {
  Group& g = groups_.at(id);
  if (g.local && (g.local->size() > limits_.maxHybridStates ||
                  g.local->maxSupport() > limits_.maxAmplitudes)) {
    g.local.reset();
  }
}

void UnionTable::step(const Instruction& instr) {
  std::visit(
      Overloaded{
          [&](const Apply& a) {
            std::vector<Condition> guards;
            for (const auto& g : a.guards) {
              if (registerGroup_.at(g.index)) {
                guards.push_back(g);
              } else if (expectedValue(g.polarity)) {
                return; // pooled registers are 0: the gate never fires
              }
            }
            const auto qubits = qubitsOf(a);
            if (qubits.empty()) {
              return; // a bare phase on whole hybrid states is unobservable
            }
            std::vector<GroupId> ids;
            for (const auto q : qubits) {
              ids.push_back(qubitGroup_.at(q));
            }
            for (const auto& g : guards) {
              ids.push_back(*registerGroup_[g.index]);
            }
            const GroupId id = merge(ids);
            Group& group = groups_.at(id);
            if (group.isTop()) {
              return;
            }
            Apply local = a;
            for (auto& t : local.targets) {
              t = localIndex(group.qubits, t);
            }
            for (auto& c : local.controls) {
              c.index = localIndex(group.qubits, c.index);
            }
            local.guards = guards;
            for (auto& g : local.guards) {
              g.index = localIndex(group.registers, g.index);
            }
            group.local = applyGate(*group.local, local);
            enforceLimits(id);
          },
          [&](const Measure& m) {
            std::vector<GroupId> ids = {qubitGroup_.at(m.qubit)};
            if (const auto& rg = registerGroup_.at(m.reg)) {
              ids.push_back(*rg);
            }
            GroupId id = merge(ids);
            if (!registerGroup_[m.reg]) {
              id = adopt(id, m.reg);
            }
            Group& group = groups_.at(id);
            if (group.isTop()) {
              return;
            }
            group.local = measure(*group.local, localIndex(group.qubits, m.qubit),
                                  localIndex(group.registers, m.reg), m.negated);
            enforceLimits(id);
          },
          [&](const Reset& r) {
            const GroupId id = qubitGroup_.at(r.qubit);
            Group& group = groups_.at(id);
            if (!group.isTop()) {
              group.local = reset(*group.local, localIndex(group.qubits, r.qubit));
              enforceLimits(id);
              return;
            }
            std::erase(group.qubits, r.qubit);
            if (group.qubits.empty() && group.registers.empty()) {
              groups_.erase(id);
            }
            const GroupId fresh = nextId_++;
            groups_.emplace(fresh, Group{{r.qubit}, {}, initialState(1, 0)});
            qubitGroup_[r.qubit] = fresh;
          }},
      instr);
}

std::optional<bool> UnionTable::queryQubit(Qubit q) const {
  const Group& g = groupOfQubit(q);
  if (g.isTop()) {
    return std::nullopt;
  }
  const std::size_t k = localIndex(g.qubits, q);
  std::optional<bool> value;
  for (const auto& e : g.local->entries()) {
    const auto v = e.state.psi.determined(k);
    if (!v || (value && *value != *v)) {
      return std::nullopt;
    }
    value = v;
  }
  return value;
}

std::optional<bool> UnionTable::queryRegister(Register r) const {
  const Group* g = groupOfRegister(r);
  if (g == nullptr) {
    return false;
  }
  if (g->isTop()) {
    return std::nullopt;
  }
  const std::size_t k = localIndex(g->registers, r);
  std::optional<bool> value;
  for (const auto& e : g->local->entries()) {
    const bool v = e.state.beta[k];
    if (value && *value != v) {
      return std::nullopt;
    }
    value = v;
  }
  return value;
}

std::optional<std::pair<bool, bool>>
UnionTable::queryCorrelation(Qubit q, Register r) const {
  const Group& g = groupOfQubit(q);
  if (g.isTop() || groupOfRegister(r) != &g) {
    return std::nullopt;
  }
  const std::size_t kq = localIndex(g.qubits, q);
  const std::size_t kr = localIndex(g.registers, r);
  std::optional<bool> whenOne;
  for (const auto& e : g.local->entries()) {
    const auto v = e.state.psi.determined(kq);
    if (!v) {
      return std::nullopt;
    }
    // q = 1 <=> r = b'  fixes b' from every entry.
    const bool b = *v ? e.state.beta[kr] : !e.state.beta[kr];
    if (whenOne && *whenOne != b) {
      return std::nullopt;
    }
    whenOne = b;
  }
  if (!whenOne) {
    return std::nullopt;
  }
  return std::make_pair(true, *whenOne);
}

Implication UnionTable::queryImplication(const Literal& premise,
                                         const Literal& conclusion) const {
  if (conclusion.kind != Literal::Kind::Qubit) {
    throw std::invalid_argument("implication conclusions must be qubits");
  }
  const Group& cg = groupOfQubit(conclusion.index);
  const Group* pg = premise.kind == Literal::Kind::Qubit
                        ? &groupOfQubit(premise.index)
                        : groupOfRegister(premise.index);

  if (pg != &cg) {
    const auto p = premise.kind == Literal::Kind::Qubit
                       ? queryQubit(premise.index)
                       : queryRegister(premise.index);
    if (p && *p != premise.value) {
      return {true, true};
    }
    const auto c = queryQubit(conclusion.index);
    return {c && *c == conclusion.value, false};
  }
  if (cg.isTop()) {
    return {};
  }
  const std::size_t kc = localIndex(cg.qubits, conclusion.index);
  const bool onQubit = premise.kind == Literal::Kind::Qubit;
  const std::size_t kp =
      localIndex(onQubit ? cg.qubits : cg.registers, premise.index);
  bool seen = false;
  for (const auto& e : cg.local->entries()) {
    if (!onQubit && e.state.beta[kp] != premise.value) {
      continue;
    }
    for (const auto& [basis, amp] : e.state.psi.amplitudes()) {
      if (onQubit && basis[kp] != premise.value) {
        continue;
      }
      seen = true;
      if (basis[kc] != conclusion.value) {
        return {};
      }
    }
  }
  return {true, !seen};
}

bool UnionTable::querySatisfiable(const std::vector<Literal>& literals) const {
  std::map<const Group*, std::vector<Literal>> byGroup;
  for (const auto& lit : literals) {
    if (lit.kind == Literal::Kind::Qubit) {
      byGroup[&groupOfQubit(lit.index)].push_back(lit);
    } else if (const Group* g = groupOfRegister(lit.index)) {
      byGroup[g].push_back(lit);
    } else if (lit.value) {
      return false;
    }
  }
  for (const auto& [g, lits] : byGroup) {
    if (g->isTop()) {
      continue;
    }
    bool satisfied = false;
    for (const auto& e : g->local->entries()) {
      const bool registersOk =
          std::all_of(lits.begin(), lits.end(), [&](const Literal& l) {
            return l.kind == Literal::Kind::Qubit ||
                   e.state.beta[localIndex(g->registers, l.index)] == l.value;
          });
      if (!registersOk) {
        continue;
      }
      for (const auto& [basis, amp] : e.state.psi.amplitudes()) {
        if (std::all_of(lits.begin(), lits.end(), [&](const Literal& l) {
              return l.kind == Literal::Kind::Register ||
                     basis[localIndex(g->qubits, l.index)] == l.value;
            })) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) {
        break;
      }
    }
    if (!satisfied) {
      return false;
    }
  }
  return true;
}

std::optional<double> UnionTable::queryUniformPhase(const Apply& gate) const {
  if (!gate.gate.isDiagonal()) {
    throw std::invalid_argument("uniform phase query needs a diagonal gate");
  }
  std::vector<Condition> guards;
  for (const auto& g : gate.guards) {
    if (registerGroup_.at(g.index)) {
      guards.push_back(g);
    } else if (expectedValue(g.polarity)) {
      return 0.0;
    }
  }
  std::vector<GroupId> ids;
  for (const auto q : qubitsOf(gate)) {
    ids.push_back(qubitGroup_.at(q));
  }
  for (const auto& g : guards) {
    ids.push_back(*registerGroup_[g.index]);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Qubit> qubits;
  std::vector<Register> registers;
  const auto merged = mergedState(ids, qubits, registers);
  if (!merged) {
    return std::nullopt;
  }
  Apply local = gate;
  for (auto& t : local.targets) {
    t = localIndex(qubits, t);
  }
  for (auto& c : local.controls) {
    c.index = localIndex(qubits, c.index);
  }
  local.guards = guards;
  for (auto& g : local.guards) {
    g.index = localIndex(registers, g.index);
  }
  const auto matrix = gate.gate.matrix();
  const std::size_t dim = matrixDimension(gate.gate);
  std::optional<Complex> common;
  for (const auto& e : merged->entries()) {
    const bool fires = conditionsHold(local.guards, e.state.beta);
    for (const auto& [basis, amp] : e.state.psi.amplitudes()) {
      Complex factor{1.0};
      if (fires && conditionsHold(local.controls, basis)) {
        std::size_t index = 0;
        for (const auto t : local.targets) {
          index = (index << 1U) | (basis[t] ? 1U : 0U);
        }
        factor = matrix[index * dim + index];
      }
      if (!common) {
        common = factor;
      } else if (std::abs(*common - factor) > EQUALITY_EPSILON) {
        return std::nullopt;
      }
    }
  }
  return common ? wrapAngle(std::arg(*common)) : 0.0;
}

std::optional<MachineState> UnionTable::toMachineState() const {
  std::vector<const Group*> parts;
  for (const auto& [id, g] : groups_) {
    if (g.isTop()) {
      return std::nullopt;
    }
    parts.push_back(&g);
  }
  std::vector<Qubit> qubits(numQubits());
  std::vector<Register> registers(numRegisters());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    qubits[i] = i;
  }
  for (std::size_t j = 0; j < registers.size(); ++j) {
    registers[j] = j;
  }
  return combine(parts, qubits, registers);
}

std::string UnionTable::dump() const {
  std::ostringstream out;
  for (const Group* g : groups()) {
    out << "group {";
    for (std::size_t k = 0; k < g->qubits.size(); ++k) {
      out << (k == 0 ? "" : ",") << 'q' << g->qubits[k];
    }
    for (std::size_t k = 0; k < g->registers.size(); ++k) {
      out << (k == 0 ? "; " : ",") << 'r' << g->registers[k];
    }
    if (g->isTop()) {
      out << "}: top\n";
      continue;
    }
    out << "}: " << g->local->size() << " entries\n";
    for (const auto& e : g->local->entries()) {
      out << "  ";
      bool first = true;
      for (const auto& [basis, amp] : e.state.psi.amplitudes()) {
        out << (first ? "" : ",") << '|' << toString(basis) << "⟩→"
            << formatAmplitude(amp);
        first = false;
      }
      out << "  β=" << toString(e.state.beta)
          << "  p=" << formatReal(e.probability) << '\n';
    }
  }
  return out.str();
}

} // namespace dequant
