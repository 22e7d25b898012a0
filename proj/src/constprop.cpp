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

#include "dequant/constprop.hpp"

#include "dequant/qasm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace dequant {

namespace {

struct Applied {
  const char* rule;
  std::optional<Apply> result;
  double phaseDelta = 0.0;
  std::string note;
};

std::string qubitName(Qubit q) { return "q" + std::to_string(q); }
std::string registerName(Register r) { return "c" + std::to_string(r); }

Literal controlLiteral(const Condition& c) {
  return Literal::qubit(c.index, expectedValue(c.polarity));
}

Literal guardLiteral(const Condition& g) {
  return Literal::reg(g.index, expectedValue(g.polarity));
}

std::string literalName(const Literal& l) {
  return (l.kind == Literal::Kind::Qubit ? qubitName(l.index)
                                         : registerName(l.index)) +
         "=" + (l.value ? "1" : "0");
}

Apply without(Apply a, std::vector<Condition> Apply::*field, std::size_t index) {
  std::erase_if(a.*field,
                [index](const Condition& c) { return c.index == index; });
  return a;
}

std::optional<Applied> unsatisfiable(const UnionTable& table, const Apply& a) {
  if (a.controls.size() + a.guards.size() < 2) {
    return std::nullopt;
  }
  std::vector<Literal> literals;
  for (const auto& c : a.controls) {
    literals.push_back(controlLiteral(c));
  }
  for (const auto& g : a.guards) {
    literals.push_back(guardLiteral(g));
  }
  if (table.querySatisfiable(literals)) {
    return std::nullopt;
  }
  return Applied{RULE_UNSATISFIABLE, std::nullopt, 0.0,
                 "conditions never hold together, gate deleted"};
}

std::optional<Applied> constantCondition(const UnionTable& table,
                                         const Apply& a) {
  for (const auto& c : a.controls) {
    if (const auto v = table.queryQubit(c.index)) {
      const std::string fact = qubitName(c.index) + " is always " +
                               (*v ? "1" : "0");
      if (*v == expectedValue(c.polarity)) {
        return Applied{RULE_CONSTANT, without(a, &Apply::controls, c.index),
                       0.0, fact + ", control dropped"};
      }
      return Applied{RULE_CONSTANT, std::nullopt, 0.0, fact + ", gate deleted"};
    }
  }
  for (const auto& g : a.guards) {
    if (const auto v = table.queryRegister(g.index)) {
      const std::string fact = registerName(g.index) + " is always " +
                               (*v ? "1" : "0");
      if (*v == expectedValue(g.polarity)) {
        return Applied{RULE_CONSTANT, without(a, &Apply::guards, g.index), 0.0,
                       fact + ", guard dropped"};
      }
      return Applied{RULE_CONSTANT, std::nullopt, 0.0, fact + ", gate deleted"};
    }
  }
  return std::nullopt;
}

std::optional<Applied> impliedControl(const UnionTable& table, const Apply& a) {
  for (const auto& c : a.controls) {
    const Literal conclusion = controlLiteral(c);
    std::vector<std::pair<Literal, bool>> premises;
    for (const auto& other : a.controls) {
      if (other.index != c.index) {
        premises.emplace_back(controlLiteral(other), true);
      }
    }
    for (const auto& g : a.guards) {
      premises.emplace_back(guardLiteral(g), false);
    }
    for (const auto& [premise, isQubit] : premises) {
      if (!table.queryImplication(premise, conclusion).holds) {
        continue;
      }
      // Of two controls implying each other the higher index goes.
      if (isQubit && c.index < premise.index &&
          table.queryImplication(conclusion, premise).holds) {
        continue;
      }
      return Applied{RULE_IMPLIED, without(a, &Apply::controls, c.index), 0.0,
                     literalName(premise) + " implies " +
                         literalName(conclusion) + ", control dropped"};
    }
  }
  return std::nullopt;
}

std::optional<Applied> classicalControl(const UnionTable& table,
                                        const Apply& a) {
  for (const auto& c : a.controls) {
    const Group& group = table.groupOfQubit(c.index);
    for (const auto r : group.registers) {
      const auto corr = table.queryCorrelation(c.index, r);
      if (!corr) {
        continue;
      }
      const bool want =
          expectedValue(c.polarity) ? corr->second : !corr->second;
      const Polarity polarity = polarityFor(want);
      const std::string fact = qubitName(c.index) + " ⇔ " +
                               (want ? "" : "!") + registerName(r);
      Apply rewritten = without(a, &Apply::controls, c.index);
      if (const auto existing = rewritten.guardOn(r)) {
        if (*existing != polarity) {
          return Applied{RULE_CLASSICAL, std::nullopt, 0.0,
                         fact + ", contradicts guard, gate deleted"};
        }
        return Applied{RULE_CLASSICAL, rewritten, 0.0,
                       fact + ", control already guarded, dropped"};
      }
      rewritten.guards.push_back({r, polarity});
      rewritten.normalize();
      return Applied{RULE_CLASSICAL, rewritten, 0.0,
                     fact + ", control classicalized"};
    }
  }
  return std::nullopt;
}

std::optional<Applied> uniformPhase(const UnionTable& table, const Apply& a) {
  if (!a.gate.isDiagonal() || a.isGuarded()) {
    return std::nullopt;
  }
  const auto theta = table.queryUniformPhase(a);
  if (!theta) {
    return std::nullopt;
  }
  const double delta = std::abs(*theta) <= AMPLITUDE_EPSILON ? 0.0 : *theta;
  return Applied{RULE_PHASE, std::nullopt, delta,
                 "uniform phase " + formatAngle(delta) + ", gate deleted"};
}

std::optional<Applied> tryRules(const UnionTable& table, const Apply& a,
                                const CpConfig& cfg) {
  if (cfg.unsatisfiable) {
    if (auto r = unsatisfiable(table, a)) {
      return r;
    }
  }
  if (cfg.constantControls) {
    if (auto r = constantCondition(table, a)) {
      return r;
    }
  }
  if (cfg.impliedControls) {
    if (auto r = impliedControl(table, a)) {
      return r;
    }
  }
  if (cfg.classicalControls) {
    if (auto r = classicalControl(table, a)) {
      return r;
    }
  }
  if (cfg.uniformPhase) {
    if (auto r = uniformPhase(table, a)) {
      return r;
    }
  }
  return std::nullopt;
}

std::vector<std::string> facts(const UnionTable& table) {
  std::vector<std::string> out;
  std::string constants;
  for (Qubit q = 0; q < table.numQubits(); ++q) {
    if (const auto v = table.queryQubit(q)) {
      constants += (constants.empty() ? "" : " ") + qubitName(q) + "=" +
                   (*v ? "1" : "0");
    }
  }
  for (Register r = 0; r < table.numRegisters(); ++r) {
    if (const auto v = table.queryRegister(r)) {
      constants += (constants.empty() ? "" : " ") + registerName(r) + "=" +
                   (*v ? "1" : "0");
    }
  }
  if (!constants.empty()) {
    out.push_back("constant " + constants);
  }
  for (const Group* g : table.groups()) {
    if (!g->isTop()) {
      continue;
    }
    std::string members;
    for (const auto q : g->qubits) {
      members += (members.empty() ? "" : ",") + qubitName(q);
    }
    for (const auto r : g->registers) {
      members += (members.empty() ? "" : ",") + registerName(r);
    }
    out.push_back("top {" + members + "}");
  }
  return out;
}

Circuit sweep(const Circuit& circuit, const CpConfig& cfg, PassReport& report,
              std::vector<ExplainLine>* lines) {
  UnionTable table(circuit.numQubits, circuit.numRegisters, cfg.limits);
  Circuit out(circuit.numQubits, circuit.numRegisters);
  out.globalPhase = circuit.globalPhase;
  for (std::size_t i = 0; i < circuit.body.size(); ++i) {
    const Instruction& instr = circuit.body[i];
    ExplainLine line{i, lines ? emitInstruction(instr) : "", {}, {}};
    std::optional<Instruction> kept = instr;
    if (const auto* a = std::get_if<Apply>(&instr)) {
      std::optional<Apply> current = *a;
      while (current) {
        auto applied = tryRules(table, *current, cfg);
        if (!applied) {
          break;
        }
        ++report.ruleCounts[applied->rule];
        if (applied->phaseDelta != 0.0) {
          out.globalPhase = wrapAngle(out.globalPhase + applied->phaseDelta);
        }
        line.notes.push_back(std::string(applied->rule) + ": " + applied->note);
        current = std::move(applied->result);
      }
      kept = current ? std::optional<Instruction>(*current) : std::nullopt;
    }
    if (kept) {
      table.step(*kept);
      out.add(*kept);
    }
    if (lines) {
      line.facts = facts(table);
      lines->push_back(std::move(line));
    }
  }
  return out;
}

} // namespace

std::pair<Circuit, PassReport> runCp(const Circuit& circuit,
                                     const CpConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  PassReport report;
  report.pass = "cp";
  report.before = countMetrics(circuit);
  for (const char* rule : {RULE_UNSATISFIABLE, RULE_CONSTANT, RULE_IMPLIED,
                           RULE_CLASSICAL, RULE_PHASE}) {
    report.ruleCounts[rule] = 0;
  }
  auto finish = [&](const Circuit& c) {
    report.after = countMetrics(c);
    report.elapsedMs = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  };
  Circuit current = circuit;
  while (true) {
    if (report.iterations == cfg.maxSweeps) {
      finish(current);
      throw CapExceeded("cp did not converge within " +
                            std::to_string(cfg.maxSweeps) + " sweeps",
                        report);
    }
    ++report.iterations;
    Circuit next = sweep(current, cfg, report, nullptr);
    if (next == current) {
      break;
    }
    current = std::move(next);
  }
  finish(current);
  return {std::move(current), std::move(report)};
}

std::vector<ExplainLine> explain(const Circuit& circuit, const CpConfig& cfg) {
  PassReport scratch;
  std::vector<ExplainLine> lines;
  (void)sweep(circuit, cfg, scratch, &lines);
  return lines;
}

std::string formatExplain(const std::vector<ExplainLine>& lines) {
  std::ostringstream out;
  for (const auto& line : lines) {
    std::string statement = line.statement;
    std::replace(statement.begin(), statement.end(), '\n', ' ');
    out << '[' << line.index << "] " << statement << '\n';
    for (const auto& note : line.notes) {
      out << "    " << note << '\n';
    }
    for (const auto& fact : line.facts) {
      out << "    | " << fact << '\n';
    }
  }
  return out.str();
}

} // namespace dequant
