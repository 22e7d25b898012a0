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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dequant {

class UnknownFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SizeOutOfRange : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::size_t MAX_BENCHMARK_QUBITS = 64;
inline constexpr std::uint32_t DEFAULT_SEED = 2026;

[[nodiscard]] const std::vector<std::string>& benchmarkFamilies();

/// Whether `size` qubits is a valid instance of `family`.
[[nodiscard]] bool validSize(const std::string& family, std::size_t size);

/// Every family measures all qubits at the end, qubit i into register i
/// unless noted.
///
///   ghz     H on q0 and a CX chain.
///   wstate  X on the last qubit, a ry/cz/ry cascade, then a CX ladder.
///   bv      size-1 input qubits and an ancilla in |->; CX from every input
///           whose secret bit is 1.
///   dj      like bv with a balanced oracle: X mask, CX from every input,
///           X mask again.
///   qft     H and controlled phases on |0...0>, final swaps.
///   qpe     size-1 counting qubits, eigenstate |1> on the last qubit with
///           an exact phase k/2^(size-1); registers 0..size-2 read k, most
///           significant bit first.
///   adder   CDKM ripple-carry adder on 2k+2 qubits (carry in, interleaved
///           b_i a_i, carry out), all inputs |0>.
[[nodiscard]] Circuit generateBenchmark(const std::string& family,
                                        std::size_t size,
                                        std::uint32_t seed = DEFAULT_SEED);

[[nodiscard]] Circuit ghz(std::size_t n);
[[nodiscard]] Circuit wstate(std::size_t n);
/// `secret[i]` is the oracle bit of input qubit i.
[[nodiscard]] Circuit bernsteinVazirani(const std::vector<bool>& secret);
[[nodiscard]] Circuit deutschJozsa(const std::vector<bool>& mask);
[[nodiscard]] Circuit qft(std::size_t n);
/// Phase k/2^(n-1) with 0 <= k < 2^(n-1).
[[nodiscard]] Circuit qpe(std::size_t n, std::uint64_t k);
[[nodiscard]] Circuit cdkmAdder(std::size_t n);

} // namespace dequant
