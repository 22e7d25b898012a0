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

#include "dequant/pipeline.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace dequant {

class ReportError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct StatsDocument {
  std::string input;
  std::string spec;
  std::vector<RunRecord> records;

  friend bool operator==(const StatsDocument&, const StatsDocument&) = default;
};

[[nodiscard]] std::string toJson(const StatsDocument& doc);
/// Throws ReportError on malformed input.
[[nodiscard]] StatsDocument fromJson(const std::string& text);

inline constexpr const char* CSV_HEADER =
    "family,size,pass_spec,gates_before,gates_after,cgates_before,"
    "cgates_after,reduction_gates_pct,reduction_cgates_pct,duration_ms,"
    "verified";

[[nodiscard]] std::string toCsv(const std::vector<RunRecord>& records);

/// File helpers; failures name the path.
void writeText(const std::filesystem::path& path, const std::string& text);
[[nodiscard]] std::string readText(const std::filesystem::path& path);

} // namespace dequant
