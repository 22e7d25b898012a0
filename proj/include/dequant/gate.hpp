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

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace dequant {

using Complex = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846;

enum class GateType {
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Phase,
  RX,
  RY,
  RZ,
  SWAP,
  GlobalPhase,
};

/// A gate kind together with its (concrete) rotation angle. Angles are only
/// meaningful for the parametrised kinds and are kept at zero otherwise so
/// that equality is structural.
struct Gate {
  GateType type = GateType::X;
  double angle = 0.0;

  Gate() = default;
  explicit Gate(GateType t, double theta = 0.0);

  /// Number of target qubits (GlobalPhase acts on none).
  [[nodiscard]] std::size_t arity() const;
  [[nodiscard]] bool isParametrised() const;
  [[nodiscard]] bool isDiagonal() const;
  /// Diagonal gates of the form diag(1, e^{i theta}): their controlled
  /// versions are symmetric in all involved qubits.
  [[nodiscard]] bool isPhaseFamily() const;
  [[nodiscard]] bool isPauli() const;

  /// Row-major 2^arity x 2^arity unitary. The first target is the most
  /// significant bit of the local index.
  [[nodiscard]] std::vector<Complex> matrix() const;

  [[nodiscard]] std::string_view name() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Dimension of the matrix returned by Gate::matrix().
[[nodiscard]] inline std::size_t matrixDimension(const Gate& gate) {
  return std::size_t{1} << gate.arity();
}

/// Conjugate transpose of a square row-major matrix.
[[nodiscard]] std::vector<Complex> adjoint(const std::vector<Complex>& m,
                                           std::size_t dim);

/// Product a * b of square row-major matrices.
[[nodiscard]] std::vector<Complex> multiply(const std::vector<Complex>& a,
                                            const std::vector<Complex>& b,
                                            std::size_t dim);

/// Wraps an angle into (-pi, pi].
[[nodiscard]] double wrapAngle(double theta);

} // namespace dequant
