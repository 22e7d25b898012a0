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

#include "oracle.hpp"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace dequant::testing {

namespace {

using C = std::complex<double>;
using Mat2 = std::array<C, 4>;

constexpr double kPi = 3.14159265358979323846;

Mat2 singleQubitMatrix(GateType type, double t) {
  const double r = 1.0 / std::sqrt(2.0);
  const C i(0.0, 1.0);
  switch (type) {
  case GateType::H:
    return {r, r, r, -r};
  case GateType::X:
    return {0.0, 1.0, 1.0, 0.0};
  case GateType::Y:
    return {0.0, -i, i, 0.0};
  case GateType::Z:
    return {1.0, 0.0, 0.0, -1.0};
  case GateType::S:
    return {1.0, 0.0, 0.0, i};
  case GateType::Sdg:
    return {1.0, 0.0, 0.0, -i};
  case GateType::T:
    return {1.0, 0.0, 0.0, std::exp(i * (kPi / 4))};
  case GateType::Tdg:
    return {1.0, 0.0, 0.0, std::exp(-i * (kPi / 4))};
  case GateType::Phase:
    return {1.0, 0.0, 0.0, std::exp(i * t)};
  case GateType::RX:
    return {std::cos(t / 2), -i * std::sin(t / 2), -i * std::sin(t / 2),
            std::cos(t / 2)};
  case GateType::RY:
    return {std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2),
            std::cos(t / 2)};
  case GateType::RZ:
    return {std::exp(-i * (t / 2)), 0.0, 0.0, std::exp(i * (t / 2))};
  default:
    throw std::logic_error("not a single-qubit gate");
  }
}

bool bit(std::uint64_t word, std::size_t k) { return ((word >> k) & 1U) != 0; }

bool conditionsHold(const std::vector<Condition>& conds, std::uint64_t word) {
  for (const auto& c : conds) {
    if (bit(word, c.index) != (c.polarity == Polarity::Pos)) {
      return false;
    }
  }
  return true;
}

void applyUnitary(std::vector<C>& psi, const Apply& a) {
  const std::size_t dim = psi.size();
  if (a.gate.type == GateType::GlobalPhase) {
    const C f = std::exp(C(0.0, a.gate.angle));
    for (std::size_t k = 0; k < dim; ++k) {
      if (conditionsHold(a.controls, k)) {
        psi[k] *= f;
      }
    }
    return;
  }
  if (a.gate.type == GateType::SWAP) {
    const auto p = a.targets[0];
    const auto q = a.targets[1];
    for (std::size_t k = 0; k < dim; ++k) {
      if (!bit(k, p) && bit(k, q) && conditionsHold(a.controls, k)) {
        std::swap(psi[k], psi[(k | (std::size_t{1} << p)) & ~(std::size_t{1} << q)]);
      }
    }
    return;
  }
  const Mat2 u = singleQubitMatrix(a.gate.type, a.gate.angle);
  const auto t = a.targets[0];
  const std::size_t mask = std::size_t{1} << t;
  for (std::size_t k = 0; k < dim; ++k) {
    if (bit(k, t) || !conditionsHold(a.controls, k)) {
      continue;
    }
    const C a0 = psi[k];
    const C a1 = psi[k | mask];
    psi[k] = u[0] * a0 + u[1] * a1;
    psi[k | mask] = u[2] * a0 + u[3] * a1;
  }
}

double norm2(const std::vector<C>& psi) {
  double s = 0.0;
  for (const auto& a : psi) {
    s += std::norm(a);
  }
  return s;
}

constexpr double kDrop = 1e-14;

} // namespace

DenseOracle::DenseOracle(std::size_t numQubits, std::size_t numRegisters)
    : n_(numQubits), m_(numRegisters) {
  if (n_ > 16 || m_ > 63) {
    throw std::length_error("dense oracle is limited to 16 qubits");
  }
  Branch b;
  b.amplitudes.assign(std::size_t{1} << n_, 0.0);
  b.amplitudes[0] = 1.0;
  branches_.push_back(std::move(b));
}

void DenseOracle::step(const Instruction& instr) {
  std::vector<Branch> next;
  for (auto& b : branches_) {
    if (const auto* a = std::get_if<Apply>(&instr)) {
      if (conditionsHold(a->guards, b.registers)) {
        applyUnitary(b.amplitudes, *a);
      }
      next.push_back(std::move(b));
      continue;
    }
    const Qubit q = std::holds_alternative<Measure>(instr)
                        ? std::get<Measure>(instr).qubit
                        : std::get<Reset>(instr).qubit;
    const std::size_t mask = std::size_t{1} << q;
    for (const bool outcome : {false, true}) {
      Branch part = b;
      for (std::size_t k = 0; k < part.amplitudes.size(); ++k) {
        if (bit(k, q) != outcome) {
          part.amplitudes[k] = 0.0;
        }
      }
      if (norm2(part.amplitudes) <= kDrop) {
        continue;
      }
      if (const auto* m = std::get_if<Measure>(&instr)) {
        const bool stored = outcome != m->negated;
        part.registers = stored ? (part.registers | (std::uint64_t{1} << m->reg))
                                : (part.registers & ~(std::uint64_t{1} << m->reg));
      } else if (outcome) {
        for (std::size_t k = 0; k < part.amplitudes.size(); ++k) {
          if (bit(k, q)) {
            part.amplitudes[k & ~mask] = part.amplitudes[k];
            part.amplitudes[k] = 0.0;
          }
        }
      }
      next.push_back(std::move(part));
    }
  }
  branches_ = std::move(next);
}

void DenseOracle::run(const Circuit& circuit) {
  for (const auto& instr : circuit.body) {
    step(instr);
  }
}

std::map<std::string, double> DenseOracle::distribution() const {
  std::map<std::string, double> dist;
  for (const auto& b : branches_) {
    std::string key;
    for (std::size_t j = 0; j < m_; ++j) {
      key.push_back(bit(b.registers, j) ? '1' : '0');
    }
    dist[key] += norm2(b.amplitudes);
  }
  return dist;
}

double DenseOracle::probabilityOne(Qubit q) const {
  double p = 0.0;
  for (const auto& b : branches_) {
    for (std::size_t k = 0; k < b.amplitudes.size(); ++k) {
      if (bit(k, q)) {
        p += std::norm(b.amplitudes[k]);
      }
    }
  }
  return p;
}

std::map<std::string, double> denseDistribution(const Circuit& c) {
  DenseOracle oracle(c.numQubits, c.numRegisters);
  oracle.run(c);
  return oracle.distribution();
}

double tvDistance(const std::map<std::string, double>& a,
                  const std::map<std::string, double>& b) {
  std::set<std::string> keys;
  for (const auto& [k, v] : a) {
    keys.insert(k);
  }
  for (const auto& [k, v] : b) {
    keys.insert(k);
  }
  double sum = 0.0;
  for (const auto& k : keys) {
    const double pa = a.count(k) != 0 ? a.at(k) : 0.0;
    const double pb = b.count(k) != 0 ? b.at(k) : 0.0;
    sum += std::abs(pa - pb);
  }
  return sum / 2.0;
}

} // namespace dequant::testing
