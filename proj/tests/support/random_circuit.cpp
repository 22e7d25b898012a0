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

#include "random_circuit.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace dequant::testing {

namespace {

std::size_t pick(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool chance(std::mt19937& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

double randomAngle(std::mt19937& rng) {
  if (chance(rng, 0.8)) {
    return static_cast<double>(pick(rng, 0, 7)) * PI / 4.0 - PI;
  }
  return std::uniform_real_distribution<double>(-PI, PI)(rng);
}

constexpr std::array<GateType, 12> kSingle = {
    GateType::H,  GateType::X,  GateType::Y,     GateType::Z,
    GateType::S,  GateType::Sdg, GateType::T,    GateType::Tdg,
    GateType::Phase, GateType::RX, GateType::RY, GateType::RZ};

} // namespace

Circuit randomCircuit(std::mt19937& rng, const RandomCircuitOptions& options) {
  const std::size_t n = pick(rng, 1, options.maxQubits);
  const std::size_t m = pick(rng, 1, options.maxRegisters);
  const std::size_t length = pick(rng, 0, options.maxInstructions);
  Circuit c(n, m);
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t kind = pick(rng, 0, 99);
    if (kind < 15) {
      c.add(Measure{pick(rng, 0, n - 1), pick(rng, 0, m - 1), chance(rng, 0.15)});
      continue;
    }
    if (kind < 19) {
      c.add(Reset{pick(rng, 0, n - 1)});
      continue;
    }
    std::vector<Qubit> order(n);
    std::iota(order.begin(), order.end(), Qubit{0});
    std::shuffle(order.begin(), order.end(), rng);
    Apply a;
    std::size_t used = 1;
    if (kind < 23 && n >= 2) {
      a.gate = Gate(GateType::SWAP);
      a.targets = {order[0], order[1]};
      used = 2;
    } else if (kind < 25) {
      a.gate = Gate(GateType::GlobalPhase, randomAngle(rng));
      used = 0;
    } else {
      // H, X and Z dominate so that the lifting rules find matches.
      const std::size_t g = pick(rng, 0, 19);
      GateType type = g < 5 ? GateType::H : g < 9 ? GateType::X
                      : g < 11 ? GateType::Z : kSingle[pick(rng, 0, kSingle.size() - 1)];
      a.gate = Gate(type, Gate(type).isParametrised() ? randomAngle(rng) : 0.0);
      a.targets = {order[0]};
    }
    const std::size_t maxControls = std::min<std::size_t>(2, n - used);
    const std::size_t controls = chance(rng, 0.45) ? pick(rng, 1, std::max<std::size_t>(1, maxControls)) : 0;
    for (std::size_t j = 0; j < std::min(controls, maxControls); ++j) {
      a.controls.push_back({order[used + j], chance(rng, 0.2) ? Polarity::Neg : Polarity::Pos});
    }
    // A bare gphase would be folded into the global phase by the parser.
    if (a.gate.type == GateType::GlobalPhase && a.controls.empty()) {
      a.controls.push_back({order[0], Polarity::Pos});
    }
    if (chance(rng, 0.25)) {
      std::vector<Register> regs(m);
      std::iota(regs.begin(), regs.end(), Register{0});
      std::shuffle(regs.begin(), regs.end(), rng);
      const std::size_t guards = pick(rng, 1, std::min<std::size_t>(2, m));
      for (std::size_t j = 0; j < guards; ++j) {
        a.guards.push_back({regs[j], chance(rng, 0.3) ? Polarity::Neg : Polarity::Pos});
      }
    }
    a.normalize();
    c.add(std::move(a));
  }
  return c;
}

} // namespace dequant::testing
