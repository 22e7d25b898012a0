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

#include "dequant/constprop.hpp"

#include "dequant/qasm.hpp"
#include "dequant/semantics.hpp"

#include <gtest/gtest.h>

namespace dequant {
namespace {

Circuit parse(const std::string& body) {
  return parseQasm("OPENQASM 3.0;\n" + body).circuit;
}

std::pair<Circuit, PassReport> cp(const std::string& body, CpConfig cfg = {}) {
  return runCp(parse(body), cfg);
}

void expectCp(const std::string& in, const std::string& out, const char* rule,
              CpConfig cfg = {}) {
  const Circuit input = parse(in);
  const auto [result, report] = runCp(input, cfg);
  EXPECT_EQ(emitQasm(result), emitQasm(parse(out)));
  EXPECT_GE(report.ruleCounts.at(rule), 1U) << rule;
  EXPECT_TRUE(equivalent(input, result).equivalent);
}

TEST(ConstantPropagation, ConstantControlIsDropped) {
  expectCp("qubit[2] q; x q[0]; cx q[0], q[1];", "qubit[2] q; x q[0]; x q[1];",
           RULE_CONSTANT);
}

TEST(ConstantPropagation, ConstantFalseControlDeletesGate) {
  expectCp("qubit[2] q; h q[1]; cx q[0], q[1];", "qubit[2] q; h q[1];", RULE_CONSTANT);
}

TEST(ConstantPropagation, ConstantGuard) {
  expectCp("qubit[1] q; bit[1] c; if (c[0]) x q[0]; if (!c[0]) h q[0];",
           "qubit[1] q; bit[1] c; h q[0];", RULE_CONSTANT);
}

TEST(ConstantPropagation, UnsatisfiableControls) {
  expectCp("qubit[3] q; h q[0]; cx q[0], q[1]; negctrl @ ctrl @ x q[0], q[1], q[2];",
           "qubit[3] q; h q[0]; cx q[0], q[1];", RULE_UNSATISFIABLE);
}

TEST(ConstantPropagation, ImpliedControlDropsHigherIndex) {
  expectCp("qubit[3] q; h q[0]; cx q[0], q[1]; ccx q[0], q[1], q[2];",
           "qubit[3] q; h q[0]; cx q[0], q[1]; cx q[0], q[2];", RULE_IMPLIED);
}

TEST(ConstantPropagation, ClassicalControl) {
  expectCp("qubit[3] q; bit[1] c; h q[0]; cx q[0], q[1]; c[0] = measure q[0]; "
           "cx q[1], q[2];",
           "qubit[3] q; bit[1] c; h q[0]; cx q[0], q[1]; c[0] = measure q[0]; "
           "if (c[0]) x q[2];",
           RULE_CLASSICAL);
}

TEST(ConstantPropagation, UniformPhase) {
  const Circuit input = parse("qubit[1] q; x q[0]; t q[0];");
  const auto [out, report] = runCp(input);
  EXPECT_EQ(out.body.size(), 1U);
  EXPECT_NEAR(out.globalPhase, PI / 4, 1e-12);
  EXPECT_EQ(report.ruleCounts.at(RULE_PHASE), 1U);
}

TEST(ConstantPropagation, GuardedDiagonalIsNotPhaseFolded) {
  const auto [out, report] =
      cp("qubit[1] q; bit[1] c; h q[0]; c[0] = measure q[0]; if (c[0]) z q[0];");
  EXPECT_EQ(report.ruleCounts.at(RULE_PHASE), 0U);
  EXPECT_EQ(out.body.size(), 3U);
}

TEST(ConstantPropagation, RulesCanBeDisabled) {
  CpConfig cfg;
  cfg.constantControls = false;
  const auto [out, report] = cp("qubit[2] q; x q[0]; cx q[0], q[1];", cfg);
  EXPECT_EQ(countMetrics(out).qcontrolledGates, 1U);
  EXPECT_EQ(report.totalApplications(), 0U);
}

TEST(ConstantPropagation, TopGroupsAreLeftAlone) {
  // Three entangled qubits in superposition exceed a 4-amplitude cap.
  CpConfig cfg;
  cfg.limits = {4, 4};
  const Circuit input =
      parse("qubit[4] q; h q[0]; h q[1]; h q[2]; cx q[0], q[1]; cx q[1], q[2]; "
            "cx q[2], q[3];");
  const auto [out, report] = runCp(input, cfg);
  EXPECT_EQ(out, input);
  EXPECT_EQ(report.totalApplications(), 0U);
}

TEST(ConstantPropagation, AllZeroAdderCollapses) {
  const Circuit input = parse("qubit[3] q; cx q[0], q[1]; ccx q[0], q[1], q[2]; "
                              "cx q[2], q[0];");
  const auto [out, report] = runCp(input);
  EXPECT_TRUE(out.body.empty());
  EXPECT_EQ(report.after.qcontrolledGates, 0U);
}

TEST(ConstantPropagation, SweepCap) {
  CpConfig cfg;
  cfg.maxSweeps = 1;
  // The first sweep changes the circuit, so a second sweep is needed.
  EXPECT_THROW((void)cp("qubit[2] q; x q[0]; cx q[0], q[1];", cfg), CapExceeded);
}

TEST(ConstantPropagation, Idempotent) {
  const Circuit input =
      parse("qubit[3] q; bit[1] c; h q[0]; cx q[0], q[1]; c[0] = measure q[0]; "
            "cx q[1], q[2]; x q[2]; cz q[2], q[1];");
  const Circuit once = runCp(input, {}).first;
  const auto [twice, report] = runCp(once, {});
  EXPECT_EQ(twice, once);
  EXPECT_EQ(report.totalApplications(), 0U);
}

TEST(ConstantPropagation, Explain) {
  const Circuit input = parse("qubit[3] q; bit[1] c; h q[0]; cx q[0], q[1]; "
                              "c[0] = measure q[0]; cx q[1], q[2];");
  const auto lines = explain(input, {});
  ASSERT_EQ(lines.size(), 4U);
  EXPECT_TRUE(lines[0].notes.empty());
  ASSERT_EQ(lines[3].notes.size(), 1U);
  EXPECT_EQ(lines[3].notes[0], "classical-control: q1 ⇔ c0, control classicalized");
  const std::string text = formatExplain(lines);
  EXPECT_NE(text.find("[3] cx q[1], q[2];"), std::string::npos) << text;
  EXPECT_NE(text.find("| constant q2=0"), std::string::npos) << text;
}

} // namespace
} // namespace dequant
