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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dequant {

/// 1-based line/column of the first character plus the byte range
/// [begin, end) into the source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t begin = 0;
  std::size_t end = 0;
};

class QasmError : public std::runtime_error {
public:
  enum class Kind { Syntax, Unsupported, IndexOutOfRange };

  QasmError(Kind kind, SourceSpan span, const std::string& message);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const SourceSpan& span() const { return span_; }

private:
  Kind kind_;
  SourceSpan span_;
};

struct QasmWarning {
  SourceSpan span;
  std::string message;
};

struct ParseResult {
  Circuit circuit;
  std::vector<QasmWarning> warnings;
};

/// Parses the supported OpenQASM 3 subset:
///
///   OPENQASM 3.0;                       (optional)
///   include "stdgates.inc";             (ignored)
///   qubit[n] q;   bit[m] c;             (one of each, bit optional)
///   [mods] g[(angle)] q[i], ...;        g in h x y z s sdg t tdg p rx ry rz
///                                       swap cx cz ccx gphase,
///                                       mods: ctrl @ / negctrl @
///   c[j] = measure q[i];
///   c[j] = !c[j];                       (only right after measuring c[j];
///                                        marks the measurement as negated)
///   reset q[i];
///   if (cond) <gate call>;              cond: c[j] | !c[j] | c[j] == 0|1,
///                                       joined with &&
///   barrier ...;                        (dropped with a warning)
///
/// An unguarded, uncontrolled gphase is folded into Circuit::globalPhase.
[[nodiscard]] ParseResult parseQasm(std::string_view text);

[[nodiscard]] std::string emitQasm(const Circuit& circuit);

/// The statement(s) for a single instruction, without a trailing newline.
[[nodiscard]] std::string emitInstruction(const Instruction& instr);

/// Renders an angle as a multiple of pi when that reproduces the exact
/// double, otherwise as a round-trippable decimal literal.
[[nodiscard]] std::string formatAngle(double theta);

} // namespace dequant
