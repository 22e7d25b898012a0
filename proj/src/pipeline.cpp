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

#include "dequant/pipeline.hpp"

#include "dequant/lifting.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace dequant {

std::string passName(PassKind kind) {
  switch (kind) {
  case PassKind::Cp:
    return "cp";
  case PassKind::MeasLift:
    return "measlift";
  case PassKind::HLift:
    return "hlift";
  }
  return "?";
}

std::vector<PassKind> parsePassList(const std::string& text) {
  std::vector<PassKind> passes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "cp") {
      passes.push_back(PassKind::Cp);
    } else if (item == "measlift") {
      passes.push_back(PassKind::MeasLift);
    } else if (item == "hlift") {
      passes.push_back(PassKind::HLift);
    } else {
      throw std::invalid_argument("unknown pass '" + item + "'");
    }
  }
  if (passes.empty()) {
    throw std::invalid_argument("pass list is empty");
  }
  return passes;
}

std::string formatPassList(const std::vector<PassKind>& passes) {
  std::string s;
  for (const auto p : passes) {
    s += (s.empty() ? "" : ",") + passName(p);
  }
  return s;
}

std::string verdictName(Verdict v) {
  switch (v) {
  case Verdict::NotRun:
    return "not-run";
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::Skipped:
    return "skipped";
  }
  return "?";
}

Verdict verdictFromName(const std::string& name) {
  for (const auto v :
       {Verdict::NotRun, Verdict::Pass, Verdict::Fail, Verdict::Skipped}) {
    if (verdictName(v) == name) {
      return v;
    }
  }
  throw std::invalid_argument("unknown verdict '" + name + "'");
}

Verification verify(const Circuit& original, const Circuit& optimized,
                    std::size_t oracleLimit) {
  if (original.numQubits > oracleLimit) {
    return {Verdict::Skipped, 0.0, ""};
  }
  const auto result = equivalent(original, optimized, EQUALITY_EPSILON, oracleLimit);
  return {result.equivalent ? Verdict::Pass : Verdict::Fail,
          result.extendedDistance, toString(result.witness)};
}

double reductionPercent(std::size_t before, std::size_t after) {
  if (before == 0) {
    return 0.0;
  }
  const double pct = 100.0 * (static_cast<double>(before) - static_cast<double>(after)) /
                     static_cast<double>(before);
  return std::clamp(pct, 0.0, 100.0);
}

std::pair<Circuit, PassReport> runPass(PassKind kind, const Circuit& circuit,
                                       const PipelineSpec& spec) {
  switch (kind) {
  case PassKind::Cp:
    return runCp(circuit, spec.cp);
  case PassKind::MeasLift:
    return liftMeasurements(circuit, spec.liftSweeps);
  case PassKind::HLift:
    return liftHadamards(circuit, spec.cxHadamardMeasure, spec.liftSweeps);
  }
  throw std::invalid_argument("unknown pass");
}

namespace {

void accumulate(std::vector<PassSummary>& summaries, const PassReport& report) {
  auto it = std::find_if(summaries.begin(), summaries.end(),
                         [&](const PassSummary& s) { return s.pass == report.pass; });
  if (it == summaries.end()) {
    summaries.push_back({report.pass, 0, 0, {}, 0.0});
    it = std::prev(summaries.end());
  }
  ++it->invocations;
  it->iterations += report.iterations;
  for (const auto& [rule, count] : report.ruleCounts) {
    it->ruleCounts[rule] += count;
  }
  it->elapsedMs += report.elapsedMs;
}

} // namespace

PipelineResult runPipeline(const Circuit& circuit, const PipelineSpec& spec,
                           const std::string& input) {
  if (spec.passes.empty() || spec.cycleCap == 0) {
    throw std::invalid_argument("pipeline needs at least one pass and a "
                                "positive cycle cap");
  }
  const auto started = std::chrono::steady_clock::now();
  RunRecord record;
  record.input = input;
  record.passSpec = formatPassList(spec.passes);
  record.before = countMetrics(circuit);
  auto finish = [&](const Circuit& c) {
    record.after = countMetrics(c);
    record.reductionGatesPct = reductionPercent(record.before.gates, record.after.gates);
    record.reductionCgatesPct = reductionPercent(record.before.qcontrolledGates,
                                                 record.after.qcontrolledGates);
    record.durationMs = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  };

  Circuit current = circuit;
  while (true) {
    if (record.cycles == spec.cycleCap) {
      finish(current);
      throw PipelineCapExceeded("pipeline did not converge within " +
                                    std::to_string(spec.cycleCap) + " cycles",
                                record);
    }
    ++record.cycles;
    const Circuit start = current;
    for (const auto kind : spec.passes) {
      try {
        auto [next, report] = runPass(kind, current, spec);
        accumulate(record.passes, report);
        current = std::move(next);
      } catch (const CapExceeded& e) {
        accumulate(record.passes, e.partial());
        finish(current);
        throw PipelineCapExceeded(e.what(), record);
      }
    }
    if (current == start) {
      break;
    }
  }
  finish(current);
  if (spec.verify) {
    record.verification = verify(circuit, current, spec.oracleLimit);
  }
  return {std::move(current), std::move(record)};
}

std::optional<std::pair<Circuit, Circuit>>
minimalWitness(const Circuit& circuit, const PipelineSpec& spec) {
  PipelineSpec quiet = spec;
  quiet.verify = false;
  for (std::size_t len = 1; len <= circuit.body.size(); ++len) {
    Circuit prefix(circuit.numQubits, circuit.numRegisters);
    prefix.globalPhase = circuit.globalPhase;
    prefix.body.assign(circuit.body.begin(),
                       circuit.body.begin() + static_cast<std::ptrdiff_t>(len));
    auto result = runPipeline(prefix, quiet);
    if (verify(prefix, result.circuit, spec.oracleLimit).verdict == Verdict::Fail) {
      return std::make_pair(std::move(prefix), std::move(result.circuit));
    }
  }
  return std::nullopt;
}

} // namespace dequant
