// Copyright 2026 The ssfkit Authors.
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

// Machine-readable command reports with JSON and TSV encodings.
//
// TSV layout, one record per line, fields separated by tabs:
//   command   <name>
//   param     <key> <value>
//   result    <key> bool|int|string <value>
//   result    <key> list <item>...
//   result    <key> table <column>...
//   row       <key> <cell>...
//   input     <name> <sha256>
//   timing_us <microseconds>
// Tabs, newlines and backslashes inside fields are escaped as \t, \n, \\.

#ifndef SSFKIT_REPORT_HPP
#define SSFKIT_REPORT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ssfkit {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

using ResultValue = std::variant<bool, std::int64_t, std::string, std::vector<std::string>, Table>;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::pair<std::string, ResultValue>> results;
  std::vector<std::pair<std::string, std::string>> inputs;  // name -> SHA-256 hex
  std::int64_t timing_us = 0;

  void param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  void result(std::string key, ResultValue value) { results.emplace_back(std::move(key), std::move(value)); }
  // Records the digest of `content` under `name`.
  void input(std::string name, std::string_view content);

  friend bool operator==(const Report&, const Report&) = default;
};

enum class ReportFormat { kJson, kTsv };

class ReportFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ReportFormat parse_format(std::string_view name);

std::string emit_report(const Report& report, ReportFormat format);
Report parse_report(std::string_view document, ReportFormat format);

std::string sha256_hex(std::string_view content);

}  // namespace ssfkit

#endif  // SSFKIT_REPORT_HPP
