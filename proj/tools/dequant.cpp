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
#include "dequant/constprop.hpp"
#include "dequant/lifting.hpp"
#include "dequant/pipeline.hpp"
#include "dequant/qasm.hpp"
#include "dequant/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

using namespace dequant;

enum ExitCode : int {
  EXIT_OK = 0,
  EXIT_USAGE = 1,
  EXIT_PARSE = 2,
  EXIT_VERIFY = 3,
  EXIT_CAP = 4,
};

struct Options {
  std::string input;
  std::string output;
  std::string passes = "cp,measlift";
  std::size_t maxAmplitudes = TableLimits{}.maxAmplitudes;
  std::size_t maxHybridStates = TableLimits{}.maxHybridStates;
  bool verify = false;
  std::size_t oracleLimit = DEFAULT_ORACLE_LIMIT;
  std::string stats;
  std::string families = "ghz,wstate,bv,dj,qft,qpe,adder";
  std::string sizes = "2..10";
  std::string report;
  std::string json;
  std::uint32_t seed = DEFAULT_SEED;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

std::vector<std::size_t> parseSizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  try {
    for (const auto& item : splitList(text)) {
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        sizes.push_back(std::stoul(item));
        continue;
      }
      const auto lo = std::stoul(item.substr(0, dots));
      const auto hi = std::stoul(item.substr(dots + 2));
      for (auto s = lo; s <= hi; ++s) {
        sizes.push_back(s);
      }
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad size list '" + text + "'");
  }
  if (sizes.empty()) {
    throw UsageError("empty size list");
  }
  return sizes;
}

PipelineSpec makeSpec(const Options& o) {
  PipelineSpec spec;
  try {
    spec.passes = parsePassList(o.passes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.maxAmplitudes == 0 || o.maxHybridStates == 0) {
    throw UsageError("table limits must be positive");
  }
  spec.cp.limits = {o.maxAmplitudes, o.maxHybridStates};
  spec.verify = o.verify;
  spec.oracleLimit = o.oracleLimit;
  return spec;
}

Circuit loadCircuit(const std::string& path) {
  const std::string text = readText(path);
  auto result = parseQasm(text);
  for (const auto& w : result.warnings) {
    std::cerr << path << ':' << w.span.line << ':' << w.span.column
              << ": warning: " << w.message << '\n';
  }
  return std::move(result.circuit);
}

void printWitness(const Circuit& circuit, const PipelineSpec& spec) {
  try {
    if (const auto pair = minimalWitness(circuit, spec)) {
      std::cerr << "minimal failing input:\n"
                << emitQasm(pair->first) << "optimized to:\n"
                << emitQasm(pair->second);
    }
  } catch (const std::exception& e) {
    std::cerr << "witness search failed: " << e.what() << '\n';
  }
}

int runOptimize(const Options& o) {
  const PipelineSpec spec = makeSpec(o);
  const Circuit circuit = loadCircuit(o.input);
  PipelineResult result;
  try {
    result = runPipeline(circuit, spec, o.input);
  } catch (const PipelineCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!o.stats.empty()) {
      writeText(o.stats, toJson({o.input, o.passes, {e.partial()}}));
    }
    return EXIT_CAP;
  }
  const std::string qasm = emitQasm(result.circuit);
  if (o.output.empty() || o.output == "-") {
    std::cout << qasm;
  } else {
    writeText(o.output, qasm);
  }
  if (!o.stats.empty()) {
    writeText(o.stats, toJson({o.input, o.passes, {result.record}}));
  }
  const auto& v = result.record.verification;
  if (v.verdict == Verdict::Skipped) {
    std::cerr << "verification skipped: more than " << o.oracleLimit
              << " qubits\n";
  }
  if (v.verdict == Verdict::Fail) {
    std::cerr << "verification failed: distance " << v.distance
              << ", outcome " << v.witness << '\n';
    printWitness(circuit, spec);
    return EXIT_VERIFY;
  }
  return EXIT_OK;
}

int runBench(const Options& o) {
  const PipelineSpec spec = makeSpec(o);
  const auto families = splitList(o.families);
  const auto sizes = parseSizes(o.sizes);
  std::vector<RunRecord> records;
  int status = EXIT_OK;
  for (const auto& family : families) {
    for (const auto size : sizes) {
      bool valid = false;
      try {
        valid = validSize(family, size);
      } catch (const UnknownFamily& e) {
        throw UsageError(e.what());
      }
      if (!valid) {
        continue;
      }
      const Circuit circuit = generateBenchmark(family, size, o.seed);
      const std::string id = family + "-" + std::to_string(size);
      RunRecord record;
      try {
        auto result = runPipeline(circuit, spec, id);
        record = std::move(result.record);
      } catch (const PipelineCapExceeded& e) {
        std::cerr << id << ": " << e.what() << '\n';
        record = e.partial();
        status = EXIT_CAP;
      }
      record.family = family;
      record.size = size;
      if (record.verification.verdict == Verdict::Fail) {
        std::cerr << id << ": verification failed, distance "
                  << record.verification.distance << '\n';
        printWitness(circuit, spec);
        if (status == EXIT_OK) {
          status = EXIT_VERIFY;
        }
      }
      records.push_back(std::move(record));
    }
  }
  const std::string csv = toCsv(records);
  if (o.report.empty() || o.report == "-") {
    std::cout << csv;
  } else {
    writeText(o.report, csv);
  }
  if (!o.json.empty()) {
    writeText(o.json, toJson({"bench:" + o.families, o.passes, records}));
  }
  return status;
}

int runExplain(const Options& o) {
  const PipelineSpec spec = makeSpec(o);
  const Circuit circuit = loadCircuit(o.input);
  std::cout << formatExplain(explain(circuit, spec.cp));
  return EXIT_OK;
}

int runCheckRules() {
  bool ok = true;
  for (const auto& d : checkRuleUnitaries()) {
    std::printf("%-24s %zu qubits  phase %-6s deviation %.3e\n", d.rule.c_str(),
                d.numQubits, formatAngle(d.phase).c_str(), d.deviation);
    ok = ok && d.deviation <= 1e-12;
  }
  return ok ? EXIT_OK : EXIT_VERIFY;
}

void addTableOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--passes", o.passes, "Comma-separated passes: cp, measlift, hlift")
      ->capture_default_str();
  cmd->add_option("--max-amplitudes", o.maxAmplitudes,
                  "Amplitude cap per union-table group")
      ->capture_default_str();
  cmd->add_option("--max-hybrid-states", o.maxHybridStates,
                  "Hybrid-state cap per union-table group")
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid quantum circuit optimizer"};
  app.require_subcommand(1);
  Options o;

  auto* optimize = app.add_subcommand("optimize", "Optimize a QASM file");
  optimize->add_option("input", o.input, "Input OpenQASM 3 file")->required();
  optimize->add_option("-o,--output", o.output, "Output file, '-' for stdout");
  addTableOptions(optimize, o);
  auto* verifyFlag = optimize->add_flag("--verify", o.verify,
                                        "Check equivalence with the simulator");
  optimize->add_option("--oracle-limit", o.oracleLimit,
                       "Largest qubit count the simulator checks")
      ->needs(verifyFlag)
      ->capture_default_str();
  optimize->add_option("--stats", o.stats, "Write run statistics as JSON");

  auto* bench = app.add_subcommand("bench", "Optimize generated benchmarks");
  bench->add_option("--families", o.families, "Comma-separated families")
      ->capture_default_str();
  bench->add_option("--sizes", o.sizes, "Sizes, e.g. 2..10 or 4,6,8")
      ->capture_default_str();
  addTableOptions(bench, o);
  auto* benchVerify = bench->add_flag("--verify", o.verify,
                                      "Check equivalence with the simulator");
  bench->add_option("--oracle-limit", o.oracleLimit,
                    "Largest qubit count the simulator checks")
      ->needs(benchVerify)
      ->capture_default_str();
  bench->add_option("--report", o.report, "CSV output, '-' for stdout");
  bench->add_option("--json", o.json, "Also write the records as JSON");
  bench->add_option("--seed", o.seed, "Seed for bv/dj oracle bits")
      ->capture_default_str();

  auto* explainCmd =
      app.add_subcommand("explain", "Annotate a circuit with constant facts");
  explainCmd->add_option("input", o.input, "Input OpenQASM 3 file")->required();
  addTableOptions(explainCmd, o);

  app.add_subcommand("check-rules",
                     "Compare both sides of every Hadamard-lifting rule");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? EXIT_OK : EXIT_USAGE;
  }

  try {
    if (optimize->parsed()) {
      return runOptimize(o);
    }
    if (bench->parsed()) {
      return runBench(o);
    }
    if (explainCmd->parsed()) {
      return runExplain(o);
    }
    return runCheckRules();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  } catch (const QasmError& e) {
    std::cerr << o.input << ':' << e.span().line << ':' << e.span().column
              << ": error: " << e.what() << '\n';
    return EXIT_PARSE;
  } catch (const ReportError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  }
}
