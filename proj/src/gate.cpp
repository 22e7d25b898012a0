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

#include <cmath>

namespace dequant {

Gate::Gate(GateType t, double theta) : type(t) {
  if (isParametrised()) {
    angle = theta;
  }
}

std::size_t Gate::arity() const {
  switch (type) {
  case GateType::SWAP:
    return 2;
  case GateType::GlobalPhase:
    return 0;
  default:
    return 1;
  }
}

bool Gate::isParametrised() const {
  switch (type) {
  case GateType::Phase:
  case GateType::RX:
  case GateType::RY:
  case GateType::RZ:
  case GateType::GlobalPhase:
    return true;
  default:
    return false;
  }
}

bool Gate::isDiagonal() const {
  switch (type) {
  case GateType::Z:
  case GateType::S:
  case GateType::Sdg:
  case GateType::T:
  case GateType::Tdg:
  case GateType::Phase:
  case GateType::RZ:
  case GateType::GlobalPhase:
    return true;
  default:
    return false;
  }
}

bool Gate::isPhaseFamily() const {
  switch (type) {
  case GateType::Z:
  case GateType::S:
  case GateType::Sdg:
  case GateType::T:
  case GateType::Tdg:
  case GateType::Phase:
    return true;
  default:
    return false;
  }
}

bool Gate::isPauli() const {
  return type == GateType::X || type == GateType::Y || type == GateType::Z;
}

std::vector<Complex> Gate::matrix() const {
  using namespace std::complex_literals;
  const double invSqrt2 = 1.0 / std::sqrt(2.0);
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  switch (type) {
  case GateType::H:
    return {invSqrt2, invSqrt2, invSqrt2, -invSqrt2};
  case GateType::X:
    return {0.0, 1.0, 1.0, 0.0};
  case GateType::Y:
    return {0.0, -1.0i, 1.0i, 0.0};
  case GateType::Z:
    return {1.0, 0.0, 0.0, -1.0};
  case GateType::S:
    return {1.0, 0.0, 0.0, 1.0i};
  case GateType::Sdg:
    return {1.0, 0.0, 0.0, -1.0i};
  case GateType::T:
    return {1.0, 0.0, 0.0, std::polar(1.0, PI / 4.0)};
  case GateType::Tdg:
    return {1.0, 0.0, 0.0, std::polar(1.0, -PI / 4.0)};
  case GateType::Phase:
    return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
  case GateType::RX:
    return {c, -1.0i * s, -1.0i * s, c};
  case GateType::RY:
    return {c, -s, s, c};
  case GateType::RZ:
    return {std::polar(1.0, -angle / 2.0), 0.0, 0.0,
            std::polar(1.0, angle / 2.0)};
  case GateType::SWAP:
    return {1.0, 0.0, 0.0, 0.0, //
            0.0, 0.0, 1.0, 0.0, //
            0.0, 1.0, 0.0, 0.0, //
            0.0, 0.0, 0.0, 1.0};
  case GateType::GlobalPhase:
    return {std::polar(1.0, angle)};
  }
  return {};
}

std::string_view Gate::name() const {
  switch (type) {
  case GateType::H:
    return "h";
  case GateType::X:
    return "x";
  case GateType::Y:
    return "y";
  case GateType::Z:
    return "z";
  case GateType::S:
    return "s";
  case GateType::Sdg:
    return "sdg";
  case GateType::T:
    return "t";
  case GateType::Tdg:
    return "tdg";
  case GateType::Phase:
    return "p";
  case GateType::RX:
    return "rx";
  case GateType::RY:
    return "ry";
  case GateType::RZ:
    return "rz";
  case GateType::SWAP:
    return "swap";
  case GateType::GlobalPhase:
    return "gphase";
  }
  return "?";
}

std::vector<Complex> adjoint(const std::vector<Complex>& m, std::size_t dim) {
  std::vector<Complex> result(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      result[c * dim + r] = std::conj(m[r * dim + c]);
    }
  }
  return result;
}

std::vector<Complex> multiply(const std::vector<Complex>& a,
                              const std::vector<Complex>& b, std::size_t dim) {
  std::vector<Complex> result(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex lhs = a[r * dim + k];
      if (lhs == Complex{}) {
        continue;
      }
      for (std::size_t c = 0; c < dim; ++c) {
        result[r * dim + c] += lhs * b[k * dim + c];
      }
    }
  }
  return result;
}

double wrapAngle(double theta) {
  double wrapped = std::remainder(theta, 2.0 * PI);
  if (wrapped <= -PI) {
    wrapped += 2.0 * PI;
  }
  return wrapped;
}

} // namespace dequant
