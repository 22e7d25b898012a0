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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dequant::testing {

/// Dense reference simulator. Each branch is an unnormalised state vector
/// (qubit q is bit q of the index) with its register word (register j is
/// bit j); the branch probability is the squared norm.
struct Branch {
  std::vector<std::complex<double>> amplitudes;
  std::uint64_t registers = 0;
};

class DenseOracle {
public:
  DenseOracle(std::size_t numQubits, std::size_t numRegisters);

  void step(const Instruction& instr);
  void run(const Circuit& circuit);

  [[nodiscard]] const std::vector<Branch>& branches() const { return branches_; }
  /// Register distribution keyed by "b0b1..." (register 0 first).
  [[nodiscard]] std::map<std::string, double> distribution() const;
  /// Probability that qubit q reads 1.
  [[nodiscard]] double probabilityOne(Qubit q) const;

private:
  std::size_t n_;
  std::size_t m_;
  std::vector<Branch> branches_;
};

[[nodiscard]] std::map<std::string, double> denseDistribution(const Circuit& c);

[[nodiscard]] double tvDistance(const std::map<std::string, double>& a,
                                const std::map<std::string, double>& b);

} // namespace dequant::testing
