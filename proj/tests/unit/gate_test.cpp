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

#include "dequant/gate.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace dequant {
namespace {

constexpr GateType kAll[] = {
    GateType::H,   GateType::X,  GateType::Y,  GateType::Z,    GateType::S,
    GateType::Sdg, GateType::T,  GateType::Tdg, GateType::Phase, GateType::RX,
    GateType::RY,  GateType::RZ, GateType::SWAP, GateType::GlobalPhase};

double maxDeviation(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
  }
  return d;
}

std::vector<Complex> identity(std::size_t dim) {
  std::vector<Complex> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    m[i * dim + i] = 1.0;
  }
  return m;
}

TEST(Gate, EveryMatrixIsUnitary) {
  for (const auto type : kAll) {
    const Gate g(type, 0.7);
    const auto dim = matrixDimension(g);
    const auto m = g.matrix();
    ASSERT_EQ(m.size(), dim * dim) << g.name();
    EXPECT_LT(maxDeviation(multiply(adjoint(m, dim), m, dim), identity(dim)), 1e-12)
        << g.name();
  }
}

TEST(Gate, Arity) {
  EXPECT_EQ(Gate(GateType::GlobalPhase).arity(), 0U);
  EXPECT_EQ(Gate(GateType::SWAP).arity(), 2U);
  EXPECT_EQ(Gate(GateType::H).arity(), 1U);
}

TEST(Gate, DiagonalMatricesAreDiagonal) {
  for (const auto type : kAll) {
    const Gate g(type, 1.1);
    const auto dim = matrixDimension(g);
    const auto m = g.matrix();
    bool diagonal = true;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (r != c && std::abs(m[r * dim + c]) > 1e-15) {
          diagonal = false;
        }
      }
    }
    EXPECT_EQ(g.isDiagonal(), diagonal) << g.name();
  }
}

TEST(Gate, PhaseFamilyHasUnitFirstEntry) {
  for (const auto type : kAll) {
    const Gate g(type, 0.3);
    if (g.isPhaseFamily()) {
      EXPECT_NEAR(std::abs(g.matrix()[0] - Complex(1.0, 0.0)), 0.0, 1e-15) << g.name();
    }
  }
  EXPECT_TRUE(Gate(GateType::Z).isPhaseFamily());
  EXPECT_FALSE(Gate(GateType::RZ, 0.3).isPhaseFamily());
}

TEST(Gate, SquaresOfPaulisAreIdentity) {
  for (const auto type : {GateType::X, GateType::Y, GateType::Z, GateType::H}) {
    const auto m = Gate(type).matrix();
    EXPECT_LT(maxDeviation(multiply(m, m, 2), identity(2)), 1e-12);
  }
}

TEST(Gate, TSquaredIsS) {
  const auto t = Gate(GateType::T).matrix();
  EXPECT_LT(maxDeviation(multiply(t, t, 2), Gate(GateType::S).matrix()), 1e-12);
}

TEST(Gate, RzMatchesPhaseUpToGlobalPhase) {
  const double theta = 0.9;
  const auto rz = Gate(GateType::RZ, theta).matrix();
  const auto p = Gate(GateType::Phase, theta).matrix();
  const Complex f = std::polar(1.0, -theta / 2.0);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LT(std::abs(rz[i] - f * p[i]), 1e-12);
  }
}

TEST(Gate, WrapAngle) {
  EXPECT_NEAR(wrapAngle(3 * PI), PI, 1e-12);
  EXPECT_NEAR(wrapAngle(-PI / 2), -PI / 2, 1e-12);
  EXPECT_NEAR(wrapAngle(2 * PI), 0.0, 1e-12);
  for (double t = -20.0; t < 20.0; t += 0.37) {
    const double w = wrapAngle(t);
    EXPECT_GT(w, -PI - 1e-12);
    EXPECT_LE(w, PI + 1e-12);
    EXPECT_NEAR(std::cos(w), std::cos(t), 1e-9);
    EXPECT_NEAR(std::sin(w), std::sin(t), 1e-9);
  }
}

TEST(Gate, Names) {
  EXPECT_EQ(Gate(GateType::Sdg).name(), "sdg");
  EXPECT_EQ(Gate(GateType::Phase).name(), "p");
  EXPECT_EQ(Gate(GateType::GlobalPhase).name(), "gphase");
}

} // namespace
} // namespace dequant
