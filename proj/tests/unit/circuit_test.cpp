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

#include <gtest/gtest.h>

namespace dequant {
namespace {

bool hasRule(const std::vector<Diagnostic>& ds, Diagnostic::Rule rule) {
  for (const auto& d : ds) {
    if (d.rule == rule) {
      return true;
    }
  }
  return false;
}

TEST(Circuit, BuildersNormalizeConditions) {
  const Apply a = controlled(GateType::X, {pos(3), neg(1)}, 0);
  ASSERT_EQ(a.controls.size(), 2U);
  EXPECT_EQ(a.controls[0].index, 1U);
  EXPECT_EQ(a.controls[0].polarity, Polarity::Neg);
  EXPECT_EQ(a.controlOn(3), Polarity::Pos);
  EXPECT_FALSE(a.controlOn(0).has_value());
  const Apply g = guarded(apply(GateType::Z, 2), {pos(2), neg(0)});
  EXPECT_EQ(g.guards[0].index, 0U);
  EXPECT_EQ(g.guardOn(2), Polarity::Pos);
  EXPECT_TRUE(g.hasTarget(2));
}

TEST(Circuit, PolarityHelpers) {
  EXPECT_EQ(flip(Polarity::Pos), Polarity::Neg);
  EXPECT_TRUE(expectedValue(Polarity::Pos));
  EXPECT_EQ(polarityFor(false), Polarity::Neg);
}

TEST(Circuit, OperandsOfInstructions) {
  const Apply a = guarded(controlled(GateType::X, {pos(0)}, 2), {pos(1)});
  EXPECT_EQ(qubitsOf(a), (std::vector<Qubit>{2, 0}));
  EXPECT_EQ(registersOf(a), (std::vector<Register>{1}));
  EXPECT_EQ(qubitsOf(Measure{1, 0, false}), (std::vector<Qubit>{1}));
  EXPECT_EQ(registersOf(Measure{1, 0, false}), (std::vector<Register>{0}));
  EXPECT_TRUE(registersOf(Reset{0}).empty());
}

TEST(Circuit, Metrics) {
  Circuit c(3, 2);
  c.add(apply(GateType::H, 0))
      .add(cx(0, 1))
      .add(Measure{0, 0, false})
      .add(guarded(apply(GateType::X, 2), {pos(0)}))
      .add(Reset{1})
      .add(apply(GateType::Z, 2));
  const Metrics m = countMetrics(c);
  EXPECT_EQ(m.gates, 4U);
  EXPECT_EQ(m.qcontrolledGates, 1U);
  EXPECT_EQ(m.cguardedGates, 1U);
  EXPECT_EQ(m.measurements, 1U);
  EXPECT_EQ(m.resets, 1U);
  // H, CX, measure, guarded X, Z on a chain through q0/c0/q2.
  EXPECT_EQ(m.depth, 5U);
}

TEST(Circuit, EmptyCircuitMetrics) {
  EXPECT_EQ(countMetrics(Circuit(4, 1)), Metrics{});
}

TEST(Circuit, ValidateFindsEachProblem) {
  Circuit c(2, 1);
  c.add(apply(GateType::X, 5));
  c.add(guarded(apply(GateType::X, 0), {pos(3)}));
  Apply swap;
  swap.gate = Gate(GateType::SWAP);
  swap.targets = {0};
  c.add(swap);
  c.add(controlled(GateType::X, {pos(0)}, 0));
  Apply dup = apply(GateType::X, 1);
  dup.guards = {pos(0), neg(0)};
  c.add(dup);
  const auto ds = validate(c);
  EXPECT_TRUE(hasRule(ds, Diagnostic::Rule::QubitOutOfRange));
  EXPECT_TRUE(hasRule(ds, Diagnostic::Rule::RegisterOutOfRange));
  EXPECT_TRUE(hasRule(ds, Diagnostic::Rule::ArityMismatch));
  EXPECT_TRUE(hasRule(ds, Diagnostic::Rule::OperandOverlap));
  EXPECT_TRUE(hasRule(ds, Diagnostic::Rule::DuplicateGuard));
}

TEST(Circuit, ValidCircuitHasNoDiagnostics) {
  Circuit c(2, 1);
  c.add(apply(GateType::H, 0)).add(cx(0, 1)).add(Measure{1, 0, true});
  EXPECT_TRUE(validate(c).empty());
}

TEST(Circuit, Splice) {
  Circuit c(2, 1);
  c.add(apply(GateType::H, 0)).add(apply(GateType::X, 1)).add(Measure{0, 0, false});
  const Circuit s = splice(c, 1, 1, {apply(GateType::Z, 1), apply(GateType::Y, 0)});
  ASSERT_EQ(s.body.size(), 4U);
  EXPECT_EQ(std::get<Apply>(s.body[1]).gate.type, GateType::Z);
  EXPECT_EQ(std::get<Apply>(s.body[2]).gate.type, GateType::Y);
  EXPECT_EQ(splice(c, 0, 3, {}).body.size(), 0U);
  EXPECT_THROW((void)splice(c, 2, 2, {}), std::out_of_range);
  EXPECT_THROW((void)splice(c, 0, 1, {apply(GateType::H, 7)}), std::invalid_argument);
}

} // namespace
} // namespace dequant
