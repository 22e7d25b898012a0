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

#include "dequant/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dequant {

namespace {

void measureAll(Circuit& c) {
  for (Qubit q = 0; q < c.numQubits; ++q) {
    c.add(Measure{q, q, false});
  }
}

std::size_t minimumSize(const std::string& family) {
  if (family == "qft") {
    return 1;
  }
  if (family == "adder") {
    return 4;
  }
  return 2;
}

std::vector<bool> randomBits(std::size_t n, std::mt19937& rng, bool nonZero) {
  std::bernoulli_distribution coin(0.5);
  std::vector<bool> bits(n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      bits[i] = coin(rng);
    }
  } while (nonZero && std::none_of(bits.begin(), bits.end(), [](bool b) { return b; }));
  return bits;
}

/// Controlled phases and Hadamards of the textbook QFT without the final
/// swaps, on `qubits` (most significant first).
std::vector<Apply> qftCore(const std::vector<Qubit>& qubits) {
  std::vector<Apply> gates;
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    gates.push_back(apply(GateType::H, qubits[i]));
    for (std::size_t j = i + 1; j < qubits.size(); ++j) {
      gates.push_back(controlled(GateType::Phase, {pos(qubits[j])}, qubits[i],
                                 PI / std::ldexp(1.0, static_cast<int>(j - i))));
    }
  }
  return gates;
}

} // namespace

const std::vector<std::string>& benchmarkFamilies() {
  static const std::vector<std::string> families = {
      "ghz", "wstate", "bv", "dj", "qft", "qpe", "adder"};
  return families;
}

bool validSize(const std::string& family, std::size_t size) {
  const auto& fams = benchmarkFamilies();
  if (std::find(fams.begin(), fams.end(), family) == fams.end()) {
    throw UnknownFamily("unknown benchmark family '" + family + "'");
  }
  if (size < minimumSize(family) || size > MAX_BENCHMARK_QUBITS) {
    return false;
  }
  return family != "adder" || size % 2 == 0;
}

Circuit generateBenchmark(const std::string& family, std::size_t size,
                          std::uint32_t seed) {
  if (!validSize(family, size)) {
    throw SizeOutOfRange("size " + std::to_string(size) +
                         " is not valid for family '" + family + "'");
  }
  std::mt19937 rng(seed);
  if (family == "ghz") {
    return ghz(size);
  }
  if (family == "wstate") {
    return wstate(size);
  }
  if (family == "bv") {
    return bernsteinVazirani(randomBits(size - 1, rng, true));
  }
  if (family == "dj") {
    return deutschJozsa(randomBits(size - 1, rng, false));
  }
  if (family == "qft") {
    return qft(size);
  }
  if (family == "qpe") {
    const std::uint64_t range = std::uint64_t{1} << (size - 1);
    std::uniform_int_distribution<std::uint64_t> pick(1, range - 1 == 0 ? 1 : range - 1);
    return qpe(size, range == 1 ? 0 : pick(rng));
  }
  return cdkmAdder(size);
}

Circuit ghz(std::size_t n) {
  Circuit c(n, n);
  c.add(apply(GateType::H, 0));
  for (Qubit q = 0; q + 1 < n; ++q) {
    c.add(cx(q, q + 1));
  }
  measureAll(c);
  return c;
}

Circuit wstate(std::size_t n) {
  Circuit c(n, n);
  c.add(apply(GateType::X, n - 1));
  for (std::size_t m = 1; m < n; ++m) {
    const Qubit i = n - m;
    const Qubit j = n - m - 1;
    const double theta =
        std::acos(std::sqrt(1.0 / static_cast<double>(n - m + 1)));
    c.add(apply(GateType::RY, j, -theta));
    c.add(controlled(GateType::Z, {pos(i)}, j));
    c.add(apply(GateType::RY, j, theta));
  }
  for (std::size_t k = n - 1; k > 0; --k) {
    c.add(cx(k - 1, k));
  }
  measureAll(c);
  return c;
}

Circuit bernsteinVazirani(const std::vector<bool>& secret) {
  const std::size_t inputs = secret.size();
  const Qubit ancilla = inputs;
  Circuit c(inputs + 1, inputs + 1);
  for (Qubit q = 0; q < inputs; ++q) {
    c.add(apply(GateType::H, q));
  }
  c.add(apply(GateType::X, ancilla));
  c.add(apply(GateType::H, ancilla));
  for (Qubit q = 0; q < inputs; ++q) {
    if (secret[q]) {
      c.add(cx(q, ancilla));
    }
  }
  for (Qubit q = 0; q < inputs; ++q) {
    c.add(apply(GateType::H, q));
  }
  measureAll(c);
  return c;
}

Circuit deutschJozsa(const std::vector<bool>& mask) {
  const std::size_t inputs = mask.size();
  const Qubit ancilla = inputs;
  Circuit c(inputs + 1, inputs + 1);
  c.add(apply(GateType::X, ancilla));
  c.add(apply(GateType::H, ancilla));
  for (Qubit q = 0; q < inputs; ++q) {
    c.add(apply(GateType::H, q));
  }
  for (Qubit q = 0; q < inputs; ++q) {
    if (mask[q]) {
      c.add(apply(GateType::X, q));
    }
  }
  for (Qubit q = 0; q < inputs; ++q) {
    c.add(cx(q, ancilla));
  }
  for (Qubit q = 0; q < inputs; ++q) {
    if (mask[q]) {
      c.add(apply(GateType::X, q));
    }
  }
  for (Qubit q = 0; q < inputs; ++q) {
    c.add(apply(GateType::H, q));
  }
  measureAll(c);
  return c;
}

Circuit qft(std::size_t n) {
  Circuit c(n, n);
  std::vector<Qubit> qubits(n);
  for (Qubit q = 0; q < n; ++q) {
    qubits[q] = q;
  }
  for (auto& g : qftCore(qubits)) {
    c.add(std::move(g));
  }
  for (Qubit q = 0; q < n / 2; ++q) {
    Apply swap;
    swap.gate = Gate(GateType::SWAP);
    swap.targets = {q, n - 1 - q};
    c.add(swap);
  }
  measureAll(c);
  return c;
}

Circuit qpe(std::size_t n, std::uint64_t k) {
  const std::size_t t = n - 1;
  const Qubit eigen = t;
  Circuit c(n, n);
  const double theta =
      static_cast<double>(k) / std::ldexp(1.0, static_cast<int>(t));
  c.add(apply(GateType::X, eigen));
  for (Qubit q = 0; q < t; ++q) {
    c.add(apply(GateType::H, q));
  }
  // Counting qubit j carries weight 2^j; the phase is symmetric, so the
  // eigenstate qubit serves as the control.
  for (Qubit j = 0; j < t; ++j) {
    const double angle =
        wrapAngle(2.0 * PI * theta * std::ldexp(1.0, static_cast<int>(j)));
    c.add(controlled(GateType::Phase, {pos(eigen)}, j, angle));
  }
  // Inverse QFT without swaps; afterwards counting qubit j holds bit t-1-j
  // of k, so the registers read k most significant bit first.
  std::vector<Qubit> order(t);
  for (Qubit j = 0; j < t; ++j) {
    order[j] = j;
  }
  auto core = qftCore(order);
  std::reverse(core.begin(), core.end());
  for (auto& g : core) {
    g.gate.angle = -g.gate.angle;
    c.add(std::move(g));
  }
  for (Qubit j = 0; j < t; ++j) {
    c.add(Measure{j, j, false});
  }
  c.add(Measure{eigen, t, false});
  return c;
}

Circuit cdkmAdder(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw SizeOutOfRange("the adder needs an even number of at least 4 qubits");
  }
  const std::size_t k = (n - 2) / 2;
  const Qubit carryIn = 0;
  const Qubit carryOut = n - 1;
  auto b = [](std::size_t i) { return Qubit{1 + 2 * i}; };
  auto a = [](std::size_t i) { return Qubit{2 + 2 * i}; };
  Circuit c(n, n);
  auto maj = [&](Qubit x, Qubit y, Qubit z) {
    c.add(cx(z, y));
    c.add(cx(z, x));
    c.add(controlled(GateType::X, {pos(x), pos(y)}, z));
  };
  auto uma = [&](Qubit x, Qubit y, Qubit z) {
    c.add(controlled(GateType::X, {pos(x), pos(y)}, z));
    c.add(cx(z, x));
    c.add(cx(x, y));
  };
  maj(carryIn, b(0), a(0));
  for (std::size_t i = 1; i < k; ++i) {
    maj(a(i - 1), b(i), a(i));
  }
  c.add(cx(a(k - 1), carryOut));
  for (std::size_t i = k; i-- > 1;) {
    uma(a(i - 1), b(i), a(i));
  }
  uma(carryIn, b(0), a(0));
  measureAll(c);
  return c;
}

} // namespace dequant
