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

#include <cstdint>
#include <random>

namespace dequant::testing {

struct RandomCircuitOptions {
  std::size_t maxQubits = 5;
  std::size_t maxRegisters = 3;
  std::size_t maxInstructions = 25;
};

/// Random valid circuit: 1..maxQubits qubits, 1..maxRegisters registers and
/// up to maxInstructions instructions mixing Clifford+T and rotation gates,
/// (negated) controls, guards, measurements and resets.
[[nodiscard]] Circuit randomCircuit(std::mt19937& rng,
                                    const RandomCircuitOptions& options = {});

} // namespace dequant::testing
