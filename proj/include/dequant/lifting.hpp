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
#include "dequant/rewrite.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dequant {

/// Measurement lifting rules, in priority order:
///
///   meas-commute   move a measurement of q into c before its closest
///                  predecessor on q or c when that predecessor
///                  - uses q only as a control,
///                  - is a diagonal gate on q, or
///                  - is a bare X or Y on q (the stored bit is negated);
///                  the predecessor must not read c.
///   classicalize   a later control on a measured qubit becomes a guard on
///                  its register; a positively controlled phase-family gate
///                  targeting the measured qubit is first retargeted onto a
///                  control. Stops at anything that changes q or c.
///   dead-gate      drop an uncontrolled single-qubit gate on a qubit that
///                  was measured and is never used afterwards.
[[nodiscard]] std::vector<RewriteRule> measurementLiftingRules();

/// Hadamard lifting rules, in priority order:
///
///   hh-cancel      H;H on one wire is the identity.
///   xh-to-hz       X;H -> H;Z (also with identical controls and guards).
///   zh-to-hx       Z;H -> H;X (likewise).
///   yh-to-hy       Y;H -> H;Y, adds pi to the global phase (bare gates only).
///   cz-retarget    CZ(a->b);CH(b->a) -> CZ(b->a);CH(b->a).
///   cx-h-measure   CX(c->t);H t;measure t ->
///                  H c;H t;CX(t->c);H c;measure t.
[[nodiscard]] std::vector<RewriteRule>
hadamardLiftingRules(bool cxHadamardMeasure = true);

[[nodiscard]] std::pair<Circuit, PassReport>
liftMeasurements(const Circuit& circuit,
                 std::size_t maxSweeps = DEFAULT_MAX_SWEEPS);

[[nodiscard]] std::pair<Circuit, PassReport>
liftHadamards(const Circuit& circuit, bool cxHadamardMeasure = true,
              std::size_t maxSweeps = DEFAULT_MAX_SWEEPS);

/// Dense 2^n x 2^n matrix of a gate sequence (guards ignored). Qubit 0 is
/// the most significant bit of the row index.
[[nodiscard]] std::vector<Complex> denseUnitary(const std::vector<Apply>& gates,
                                                std::size_t numQubits);

struct RuleDeviation {
  std::string rule;
  std::size_t numQubits = 0;
  /// Phase the rule adds to the global phase.
  double phase = 0.0;
  /// max |lhs - e^{i phase} rhs| over all entries.
  double deviation = 0.0;
};

/// Both sides of every Hadamard lifting identity as dense matrices.
[[nodiscard]] std::vector<RuleDeviation> checkRuleUnitaries();

} // namespace dequant
