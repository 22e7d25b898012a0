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

#include "dequant/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dequant {

using nlohmann::json;

void to_json(json& j, const Metrics& m) {
  j = json{{"gates", m.gates},
           {"qcontrolled_gates", m.qcontrolledGates},
           {"cguarded_gates", m.cguardedGates},
           {"measurements", m.measurements},
           {"resets", m.resets},
           {"depth", m.depth}};
}

void from_json(const json& j, Metrics& m) {
  j.at("gates").get_to(m.gates);
  j.at("qcontrolled_gates").get_to(m.qcontrolledGates);
  j.at("cguarded_gates").get_to(m.cguardedGates);
  j.at("measurements").get_to(m.measurements);
  j.at("resets").get_to(m.resets);
  j.at("depth").get_to(m.depth);
}

void to_json(json& j, const PassSummary& s) {
  j = json{{"pass", s.pass},
           {"invocations", s.invocations},
           {"iterations", s.iterations},
           {"rule_counts", s.ruleCounts},
           {"elapsed_ms", s.elapsedMs}};
}

void from_json(const json& j, PassSummary& s) {
  j.at("pass").get_to(s.pass);
  j.at("invocations").get_to(s.invocations);
  j.at("iterations").get_to(s.iterations);
  j.at("rule_counts").get_to(s.ruleCounts);
  j.at("elapsed_ms").get_to(s.elapsedMs);
}

void to_json(json& j, const Verification& v) {
  j = json{{"verdict", verdictName(v.verdict)},
           {"distance", v.distance},
           {"witness", v.witness}};
}

void from_json(const json& j, Verification& v) {
  v.verdict = verdictFromName(j.at("verdict").get<std::string>());
  j.at("distance").get_to(v.distance);
  j.at("witness").get_to(v.witness);
}

void to_json(json& j, const RunRecord& r) {
  j = json{{"input", r.input},
           {"family", r.family},
           {"size", r.size},
           {"pass_spec", r.passSpec},
           {"passes", r.passes},
           {"cycles", r.cycles},
           {"before", r.before},
           {"after", r.after},
           {"reduction_gates_pct", r.reductionGatesPct},
           {"reduction_cgates_pct", r.reductionCgatesPct},
           {"verification", r.verification},
           {"duration_ms", r.durationMs}};
}

void from_json(const json& j, RunRecord& r) {
  j.at("input").get_to(r.input);
  j.at("family").get_to(r.family);
  j.at("size").get_to(r.size);
  j.at("pass_spec").get_to(r.passSpec);
  j.at("passes").get_to(r.passes);
  j.at("cycles").get_to(r.cycles);
  j.at("before").get_to(r.before);
  j.at("after").get_to(r.after);
  j.at("reduction_gates_pct").get_to(r.reductionGatesPct);
  j.at("reduction_cgates_pct").get_to(r.reductionCgatesPct);
  j.at("verification").get_to(r.verification);
  j.at("duration_ms").get_to(r.durationMs);
}

std::string toJson(const StatsDocument& doc) {
  const json j{{"input", doc.input}, {"spec", doc.spec}, {"records", doc.records}};
  return j.dump(2) + "\n";
}

StatsDocument fromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    StatsDocument doc;
    j.at("input").get_to(doc.input);
    j.at("spec").get_to(doc.spec);
    j.at("records").get_to(doc.records);
    return doc;
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed stats document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ReportError(std::string("malformed stats document: ") + e.what());
  }
}

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (const char c : s) {
    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return quoted + "\"";
}

} // namespace

std::string toCsv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << CSV_HEADER << '\n';
  for (const auto& r : records) {
    out << csvField(r.family) << ',' << r.size << ',' << csvField(r.passSpec)
        << ',' << r.before.gates << ',' << r.after.gates << ','
        << r.before.qcontrolledGates << ',' << r.after.qcontrolledGates << ','
        << fixed(r.reductionGatesPct, 2) << ','
        << fixed(r.reductionCgatesPct, 2) << ',' << fixed(r.durationMs, 3)
        << ',' << verdictName(r.verification.verdict) << '\n';
  }
  return out.str();
}

void writeText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ReportError("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  out.flush();
  if (!out) {
    throw ReportError("failed writing '" + path.string() + "'");
  }
}

std::string readText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ReportError("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace dequant
