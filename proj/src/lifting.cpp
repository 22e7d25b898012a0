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

#include "dequant/lifting.hpp"

#include "dequant/semantics.hpp"

#include <algorithm>
#include <cmath>

namespace dequant {

namespace {

bool isBare(const Apply& a) { return !a.isControlled() && !a.isGuarded(); }

bool isSingle(const Apply& a, GateType type) {
  return a.gate.type == type && a.targets.size() == 1;
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::vector<Register> guardRegisters(const Apply& a) {
  std::vector<Register> rs;
  for (const auto& g : a.guards) {
    rs.push_back(g.index);
  }
  return rs;
}

std::vector<Instruction> slice(const Circuit& c, std::size_t from,
                               std::size_t to) {
  return {c.body.begin() + static_cast<std::ptrdiff_t>(from),
          c.body.begin() + static_cast<std::ptrdiff_t>(to)};
}

/// Adds a guard on r, or reports that the gate can never fire.
std::optional<Apply> withGuard(Apply a, Register r, Polarity polarity) {
  if (const auto existing = a.guardOn(r)) {
    if (*existing != polarity) {
      return std::nullopt;
    }
    return a;
  }
  a.guards.push_back({r, polarity});
  a.normalize();
  return a;
}

// ---- measurement lifting --------------------------------------------------

std::optional<Rewrite> measCommute(const Circuit& c, std::size_t pos) {
  const auto* m = std::get_if<Measure>(&c.body[pos]);
  if (m == nullptr) {
    return std::nullopt;
  }
  std::optional<std::size_t> found;
  for (std::size_t k = pos; k-- > 0;) {
    if (contains(qubitsOf(c.body[k]), m->qubit) ||
        contains(registersOf(c.body[k]), m->reg)) {
      found = k;
      break;
    }
  }
  if (!found) {
    return std::nullopt;
  }
  const auto* a = std::get_if<Apply>(&c.body[*found]);
  if (a == nullptr || a->guardOn(m->reg)) {
    return std::nullopt;
  }
  Measure moved = *m;
  if (a->controlOn(m->qubit)) {
    // Controls are diagonal in the measured basis.
  } else if (a->gate.isDiagonal()) {
    // Phases do not change outcome probabilities.
  } else if (isBare(*a) && (isSingle(*a, GateType::X) || isSingle(*a, GateType::Y))) {
    moved.negated = !moved.negated;
  } else {
    return std::nullopt;
  }
  Rewrite rw{*found, pos - *found + 1, {moved, *a}, 0.0};
  const auto rest = slice(c, *found + 1, pos);
  rw.replacement.insert(rw.replacement.end(), rest.begin(), rest.end());
  return rw;
}

std::optional<Rewrite> classicalize(const Circuit& c, std::size_t pos) {
  const auto* m = std::get_if<Measure>(&c.body[pos]);
  if (m == nullptr) {
    return std::nullopt;
  }
  const Qubit q = m->qubit;
  for (std::size_t k = pos + 1; k < c.body.size(); ++k) {
    const Instruction& instr = c.body[k];
    if (const auto* later = std::get_if<Measure>(&instr)) {
      if (later->reg == m->reg) {
        return std::nullopt;
      }
      continue;
    }
    if (const auto* r = std::get_if<Reset>(&instr)) {
      if (r->qubit == q) {
        return std::nullopt;
      }
      continue;
    }
    const auto& a = std::get<Apply>(instr);
    if (const auto control = a.controlOn(q)) {
      // The control holds iff q == e iff c == e xor negated.
      const bool want = expectedValue(*control) != m->negated;
      Apply rewritten = a;
      std::erase_if(rewritten.controls,
                    [q](const Condition& cond) { return cond.index == q; });
      const auto guardedGate = withGuard(rewritten, m->reg, polarityFor(want));
      Rewrite rw{k, 1, {}, 0.0};
      if (guardedGate) {
        rw.replacement.emplace_back(*guardedGate);
      }
      return rw;
    }
    if (a.hasTarget(q)) {
      const bool positive =
          std::all_of(a.controls.begin(), a.controls.end(), [](const Condition& x) {
            return x.polarity == Polarity::Pos;
          });
      if (a.gate.isPhaseFamily() && a.isControlled() && positive) {
        // diag(1, e^{i theta}) fires only when every involved qubit is 1.
        Apply rewritten = a;
        rewritten.targets = {a.controls.front().index};
        rewritten.controls.erase(rewritten.controls.begin());
        const auto guardedGate =
            withGuard(rewritten, m->reg, polarityFor(!m->negated));
        Rewrite rw{k, 1, {}, 0.0};
        if (guardedGate) {
          rw.replacement.emplace_back(*guardedGate);
        }
        return rw;
      }
      if (!a.gate.isDiagonal()) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> deadGate(const Circuit& c, std::size_t pos) {
  const auto* a = std::get_if<Apply>(&c.body[pos]);
  if (a == nullptr || a->isControlled() || a->targets.size() != 1) {
    return std::nullopt;
  }
  const Qubit q = a->targets.front();
  if (nextOnWires(c, pos, {q}) != c.body.size()) {
    return std::nullopt;
  }
  for (std::size_t k = pos; k-- > 0;) {
    const Instruction& instr = c.body[k];
    if (!contains(qubitsOf(instr), q)) {
      continue;
    }
    if (std::holds_alternative<Measure>(instr)) {
      return Rewrite{pos, 1, {}, 0.0};
    }
    const auto* earlier = std::get_if<Apply>(&instr);
    if (earlier == nullptr || earlier->isControlled() ||
        earlier->targets.size() != 1) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---- Hadamard lifting -------------------------------------------------------

/// The next instruction on every wire of `a`, if it is an Apply with the same
/// qubits and no measurement in between overwrites a guard of `a`.
std::optional<std::size_t> adjacentPartner(const Circuit& c, std::size_t pos,
                                           const Apply& a) {
  const auto qubits = qubitsOf(a);
  const std::size_t k = nextOnWires(c, pos, qubits);
  if (k == c.body.size() || !std::holds_alternative<Apply>(c.body[k])) {
    return std::nullopt;
  }
  auto mine = qubits;
  auto theirs = qubitsOf(c.body[k]);
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  if (mine != theirs || writesBetween(c, pos, k, guardRegisters(a))) {
    return std::nullopt;
  }
  return k;
}

/// P;H -> H;P' on one target with identical conditions.
RewriteRule pauliPastHadamard(std::string name, GateType from, GateType to,
                              bool bareOnly, double phase) {
  return {std::move(name), [=](const Circuit& c, std::size_t pos)
                               -> std::optional<Rewrite> {
            const auto* p = std::get_if<Apply>(&c.body[pos]);
            if (p == nullptr || !isSingle(*p, from) || (bareOnly && !isBare(*p))) {
              return std::nullopt;
            }
            const auto k = adjacentPartner(c, pos, *p);
            if (!k) {
              return std::nullopt;
            }
            const auto& h = std::get<Apply>(c.body[*k]);
            if (!isSingle(h, GateType::H) || h.targets != p->targets ||
                h.controls != p->controls || h.guards != p->guards) {
              return std::nullopt;
            }
            Apply swapped = *p;
            swapped.gate = Gate(to);
            Rewrite rw{pos, *k - pos + 1, {h, swapped}, phase};
            const auto rest = slice(c, pos + 1, *k);
            rw.replacement.insert(rw.replacement.end(), rest.begin(), rest.end());
            return rw;
          }};
}

std::optional<Rewrite> hhCancel(const Circuit& c, std::size_t pos) {
  const auto* h = std::get_if<Apply>(&c.body[pos]);
  if (h == nullptr || !isSingle(*h, GateType::H) || !isBare(*h)) {
    return std::nullopt;
  }
  const std::size_t k = nextOnWires(c, pos, h->targets);
  if (k == c.body.size()) {
    return std::nullopt;
  }
  const auto* next = std::get_if<Apply>(&c.body[k]);
  if (next == nullptr || *next != *h) {
    return std::nullopt;
  }
  return Rewrite{pos, k - pos + 1, slice(c, pos + 1, k), 0.0};
}

bool singlePositiveControl(const Apply& a) {
  return a.controls.size() == 1 && a.controls.front().polarity == Polarity::Pos;
}

std::optional<Rewrite> czRetarget(const Circuit& c, std::size_t pos) {
  const auto* z = std::get_if<Apply>(&c.body[pos]);
  if (z == nullptr || !isSingle(*z, GateType::Z) || !singlePositiveControl(*z)) {
    return std::nullopt;
  }
  const auto k = adjacentPartner(c, pos, *z);
  if (!k) {
    return std::nullopt;
  }
  const auto& h = std::get<Apply>(c.body[*k]);
  const Qubit a = z->controls.front().index;
  const Qubit b = z->targets.front();
  if (!isSingle(h, GateType::H) || !singlePositiveControl(h) ||
      h.controls.front().index != b || h.targets.front() != a ||
      h.guards != z->guards) {
    return std::nullopt;
  }
  Apply flipped = *z;
  flipped.controls = {Condition{b, Polarity::Pos}};
  flipped.targets = {a};
  return Rewrite{pos, 1, {flipped}, 0.0};
}

std::optional<Rewrite> cxHadamardMeasure(const Circuit& c, std::size_t pos) {
  const auto* x = std::get_if<Apply>(&c.body[pos]);
  if (x == nullptr || !isSingle(*x, GateType::X) || !singlePositiveControl(*x) ||
      x->isGuarded()) {
    return std::nullopt;
  }
  const Qubit control = x->controls.front().index;
  const Qubit target = x->targets.front();
  const std::size_t k1 = nextOnWires(c, pos, {target});
  if (k1 == c.body.size()) {
    return std::nullopt;
  }
  const auto* h = std::get_if<Apply>(&c.body[k1]);
  if (h == nullptr || !isBare(*h) || !isSingle(*h, GateType::H) ||
      h->targets.front() != target) {
    return std::nullopt;
  }
  const std::size_t k2 = nextOnWires(c, k1, {target});
  if (k2 == c.body.size() || !std::holds_alternative<Measure>(c.body[k2])) {
    return std::nullopt;
  }
  // Keeps the rule from undoing itself on the flipped CX.
  const std::size_t kc = nextOnWires(c, pos, {control});
  if (kc < c.body.size()) {
    if (const auto* mc = std::get_if<Measure>(&c.body[kc]);
        mc != nullptr && mc->qubit == control) {
      return std::nullopt;
    }
  }
  Rewrite rw{pos, k1 - pos + 1,
             {apply(GateType::H, control), apply(GateType::H, target),
              cx(target, control), apply(GateType::H, control)},
             0.0};
  const auto rest = slice(c, pos + 1, k1);
  rw.replacement.insert(rw.replacement.end(), rest.begin(), rest.end());
  return rw;
}

} // namespace

std::vector<RewriteRule> measurementLiftingRules() {
  return {{"meas-commute", measCommute},
          {"classicalize", classicalize},
          {"dead-gate", deadGate}};
}

std::vector<RewriteRule> hadamardLiftingRules(bool cxHadamardMeasureRule) {
  std::vector<RewriteRule> rules = {
      {"hh-cancel", hhCancel},
      pauliPastHadamard("xh-to-hz", GateType::X, GateType::Z, false, 0.0),
      pauliPastHadamard("zh-to-hx", GateType::Z, GateType::X, false, 0.0),
      pauliPastHadamard("yh-to-hy", GateType::Y, GateType::Y, true, PI),
      {"cz-retarget", czRetarget}};
  if (cxHadamardMeasureRule) {
    rules.push_back({"cx-h-measure", cxHadamardMeasure});
  }
  return rules;
}

std::pair<Circuit, PassReport> liftMeasurements(const Circuit& circuit,
                                                std::size_t maxSweeps) {
  return rewriteToFixedPoint(circuit, measurementLiftingRules(), "measlift",
                             maxSweeps);
}

std::pair<Circuit, PassReport> liftHadamards(const Circuit& circuit,
                                             bool cxHadamardMeasureRule,
                                             std::size_t maxSweeps) {
  return rewriteToFixedPoint(circuit, hadamardLiftingRules(cxHadamardMeasureRule),
                             "hlift", maxSweeps);
}

std::vector<Complex> denseUnitary(const std::vector<Apply>& gates,
                                  std::size_t numQubits) {
  const std::size_t dim = std::size_t{1} << numQubits;
  std::vector<Complex> u(dim * dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Bits basis(numQubits);
    for (std::size_t i = 0; i < numQubits; ++i) {
      basis[i] = ((col >> (numQubits - 1 - i)) & 1U) != 0;
    }
    QuantumState psi(numQubits, {{basis, Complex{1.0}}});
    for (const auto& g : gates) {
      Apply unguarded = g;
      unguarded.guards.clear();
      psi = applyUnitary(psi, unguarded);
    }
    for (const auto& [b, amp] : psi.amplitudes()) {
      std::size_t row = 0;
      for (const bool bit : b) {
        row = (row << 1U) | (bit ? 1U : 0U);
      }
      u[row * dim + col] = amp;
    }
  }
  return u;
}

std::vector<RuleDeviation> checkRuleUnitaries() {
  const auto h = [](Qubit q) { return apply(GateType::H, q); };
  const auto g = [](GateType t, Qubit q) { return apply(t, q); };
  const auto ch = [](Qubit c, Qubit t) { return controlled(GateType::H, {pos(c)}, t); };
  const auto cz = [](Qubit c, Qubit t) { return controlled(GateType::Z, {pos(c)}, t); };

  struct Identity {
    std::string name;
    std::size_t qubits;
    std::vector<Apply> lhs;
    std::vector<Apply> rhs;
    double phase;
  };
  const std::vector<Identity> identities = {
      {"hh-cancel", 1, {h(0), h(0)}, {}, 0.0},
      {"xh-to-hz", 1, {g(GateType::X, 0), h(0)}, {h(0), g(GateType::Z, 0)}, 0.0},
      {"zh-to-hx", 1, {g(GateType::Z, 0), h(0)}, {h(0), g(GateType::X, 0)}, 0.0},
      {"yh-to-hy", 1, {g(GateType::Y, 0), h(0)}, {h(0), g(GateType::Y, 0)}, PI},
      {"xh-to-hz (controlled)", 2, {cx(1, 0), ch(1, 0)}, {ch(1, 0), cz(1, 0)}, 0.0},
      {"zh-to-hx (controlled)", 2, {cz(1, 0), ch(1, 0)}, {ch(1, 0), cx(1, 0)}, 0.0},
      {"xh-to-hz (doubly controlled)",
       3,
       {controlled(GateType::X, {pos(0), neg(1)}, 2),
        controlled(GateType::H, {pos(0), neg(1)}, 2)},
       {controlled(GateType::H, {pos(0), neg(1)}, 2),
        controlled(GateType::Z, {pos(0), neg(1)}, 2)},
       0.0},
      {"cz-retarget", 2, {cz(0, 1), ch(1, 0)}, {cz(1, 0), ch(1, 0)}, 0.0},
      {"cz-retarget then zh-to-hx", 2, {cz(0, 1), ch(1, 0)}, {ch(1, 0), cx(1, 0)}, 0.0},
      {"cx conjugated by hadamards", 2, {cx(0, 1)},
       {h(0), h(1), cx(1, 0), h(0), h(1)}, 0.0},
      {"cx-h-measure", 2, {cx(0, 1), h(1)}, {h(0), h(1), cx(1, 0), h(0)}, 0.0},
  };

  std::vector<RuleDeviation> out;
  for (const auto& id : identities) {
    const auto l = denseUnitary(id.lhs, id.qubits);
    const auto r = denseUnitary(id.rhs, id.qubits);
    const Complex phase = std::polar(1.0, id.phase);
    double worst = 0.0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      worst = std::max(worst, std::abs(l[i] - phase * r[i]));
    }
    out.push_back({id.name, id.qubits, id.phase, worst});
  }
  return out;
}

} // namespace dequant
