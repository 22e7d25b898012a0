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

#include "oracle.hpp"
#include "random_circuit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace dequant {
namespace {

std::map<std::string, double> asStrings(const Distribution& d) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : d) {
    out[toString(k)] += v;
  }
  return out;
}

TEST(Semantics, InitialState) {
  const MachineState rho = initialState(2, 3);
  ASSERT_EQ(rho.size(), 1U);
  EXPECT_EQ(rho.entries()[0].state.beta, Bits(3, false));
  EXPECT_EQ(rho.entries()[0].state.psi.amplitude(Bits{false, false}), Complex(1.0));
  EXPECT_DOUBLE_EQ(rho.totalProbability(), 1.0);
}

TEST(Semantics, BitsStrings) {
  EXPECT_EQ(toString(Bits{true, false, true}), "101");
  EXPECT_EQ(bitsFromString("0110"), (Bits{false, true, true, false}));
}

TEST(Semantics, HadamardThenMeasure) {
  Circuit c(1, 1);
  c.add(apply(GateType::H, 0)).add(Measure{0, 0, false});
  const MachineState rho = run(c);
  ASSERT_EQ(rho.size(), 2U);
  for (const auto& e : rho.entries()) {
    EXPECT_NEAR(e.probability, 0.5, 1e-12);
    EXPECT_EQ(e.state.psi.determined(0), e.state.beta[0]);
  }
}

TEST(Semantics, NegatedMeasurementStoresComplement) {
  Circuit c(1, 1);
  c.add(apply(GateType::X, 0)).add(Measure{0, 0, true});
  const auto d = outcomeDistribution(c);
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d.begin()->first, Bits{false});
}

TEST(Semantics, ResetReturnsToZero) {
  Circuit c(1, 1);
  c.add(apply(GateType::H, 0)).add(Reset{0}).add(Measure{0, 0, false});
  const auto d = outcomeDistribution(c);
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d.begin()->first, Bits{false});
}

TEST(Semantics, CollapseOfImpossibleBranchThrows) {
  const QuantumState zero(1);
  EXPECT_THROW((void)collapse(zero, 0, true), ZeroProbabilityBranch);
  const auto [psi, p] = collapse(zero, 0, false);
  EXPECT_DOUBLE_EQ(p, 1.0);
  EXPECT_EQ(psi, zero);
}

TEST(Semantics, ApproxEqualIgnoresGlobalPhase) {
  const QuantumState a(1, {{Bits{false}, Complex(1.0 / std::sqrt(2.0))},
                           {Bits{true}, Complex(1.0 / std::sqrt(2.0))}});
  const QuantumState b(1, {{Bits{false}, Complex(0.0, 1.0 / std::sqrt(2.0))},
                           {Bits{true}, Complex(0.0, 1.0 / std::sqrt(2.0))}});
  const QuantumState c(1, {{Bits{false}, Complex(1.0 / std::sqrt(2.0))},
                           {Bits{true}, Complex(-1.0 / std::sqrt(2.0))}});
  EXPECT_TRUE(a.approxEqual(b));
  EXPECT_FALSE(a.approxEqual(c));
}

TEST(Semantics, TensorOrdersLeftFirst) {
  const QuantumState one(1, {{Bits{true}, Complex(1.0)}});
  const QuantumState zero(1);
  const QuantumState t = tensor(one, zero);
  EXPECT_EQ(t.numQubits(), 2U);
  EXPECT_EQ(t.amplitude(Bits{true, false}), Complex(1.0));
}

TEST(Semantics, GuardsHold) {
  EXPECT_TRUE(guardsHold({pos(0), neg(1)}, Bits{true, false}));
  EXPECT_FALSE(guardsHold({pos(0), neg(1)}, Bits{true, true}));
  EXPECT_TRUE(guardsHold({}, Bits{}));
}

TEST(Semantics, OracleLimit) {
  EXPECT_THROW((void)outcomeDistribution(Circuit(13, 0)), OracleLimitExceeded);
  EXPECT_NO_THROW((void)outcomeDistribution(Circuit(13, 0), 13));
}

TEST(Semantics, TotalVariation) {
  const Distribution a{{Bits{false}, 0.5}, {Bits{true}, 0.5}};
  const Distribution b{{Bits{false}, 1.0}};
  EXPECT_DOUBLE_EQ(totalVariation(a, b), 0.5);
  EXPECT_DOUBLE_EQ(totalVariation(a, a), 0.0);
}

// Independent dense simulator against the sparse semantics.
TEST(Semantics, AgreesWithDenseOracleOnRandomCircuits) {
  std::mt19937 rng(11);
  for (int i = 0; i < 400; ++i) {
    const Circuit c = testing::randomCircuit(rng);
    const auto sparse = asStrings(outcomeDistribution(c));
    const auto dense = testing::denseDistribution(c);
    ASSERT_LT(testing::tvDistance(sparse, dense), 1e-9);
    ASSERT_NEAR(run(c).totalProbability(), 1.0, 1e-9);
  }
}

TEST(Semantics, EquivalentDetectsFinalStateDifferences) {
  Circuit a(1, 0);
  a.add(apply(GateType::X, 0));
  const Circuit b(1, 0);
  const auto r = equivalent(a, b);
  EXPECT_FALSE(r.equivalent);
  EXPECT_DOUBLE_EQ(r.registerDistance, 0.0);
  EXPECT_DOUBLE_EQ(r.extendedDistance, 1.0);
  EXPECT_EQ(r.witness.size(), 1U);
}

TEST(Semantics, EquivalentIgnoresGlobalPhase) {
  Circuit a(1, 0);
  a.add(apply(GateType::RZ, 0, 0.4));
  Circuit b(1, 0);
  b.add(apply(GateType::Phase, 0, 0.4));
  EXPECT_TRUE(equivalent(a, b).equivalent);
}

TEST(Semantics, DiscardedAfterReadout) {
  Circuit c(2, 1);
  c.add(apply(GateType::H, 0)).add(Measure{0, 0, false}).add(apply(GateType::H, 0));
  EXPECT_TRUE(isDiscardedAfterReadout(c, 0));
  EXPECT_FALSE(isDiscardedAfterReadout(c, 1));
  c.add(cx(0, 1));
  EXPECT_FALSE(isDiscardedAfterReadout(c, 0));
}

TEST(Semantics, EquivalentRejectsMismatchedShapes) {
  EXPECT_THROW((void)equivalent(Circuit(1, 0), Circuit(2, 0)), std::invalid_argument);
}

} // namespace
} // namespace dequant
