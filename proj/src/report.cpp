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

#include "ssfkit/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "json.hpp"

namespace ssfkit {

using Json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view content) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(content.data(), content.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

void Report::input(std::string name, std::string_view content) {
  inputs.emplace_back(std::move(name), sha256_hex(content));
}

ReportFormat parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  throw ReportFormatError("unsupported report format '" + std::string(name) + "'");
}

namespace {

Json to_json(const ResultValue& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Table>) {
          return Json{{"columns", v.columns}, {"rows", v.rows}};
        } else {
          return Json(v);
        }
      },
      value);
}

ResultValue from_json(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return j.get<std::vector<std::string>>();
  if (j.is_object()) {
    return Table{j.at("columns").get<std::vector<std::string>>(),
                 j.at("rows").get<std::vector<std::vector<std::string>>>()};
  }
  throw ReportFormatError("unexpected result value " + j.dump());
}

std::string emit_json(const Report& r) {
  Json doc;
  doc["command"] = r.command;
  doc["params"] = Json::object();
  for (const auto& [k, v] : r.params) doc["params"][k] = v;
  doc["results"] = Json::object();
  for (const auto& [k, v] : r.results) doc["results"][k] = to_json(v);
  doc["inputs"] = Json::object();
  for (const auto& [k, v] : r.inputs) doc["inputs"][k] = v;
  doc["timing_us"] = r.timing_us;
  return doc.dump(2) + "\n";
}

Report parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ReportFormatError(std::string("malformed JSON report: ") + e.what());
  }
  Report r;
  r.command = doc.at("command").get<std::string>();
  for (const auto& [k, v] : doc.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  for (const auto& [k, v] : doc.at("results").items()) r.results.emplace_back(k, from_json(v));
  for (const auto& [k, v] : doc.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  r.timing_us = doc.at("timing_us").get<std::int64_t>();
  return r;
}

std::string escape(std::string_view field) {
  std::string out;
  for (char c : field) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string unescape(std::string_view field) {
  std::string out;
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      out += field[i];
      continue;
    }
    if (++i == field.size()) throw ReportFormatError("dangling escape in TSV field");
    switch (field[i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case '\\': out += '\\'; break;
      default: throw ReportFormatError(std::string("unknown TSV escape \\") + field[i]);
    }
  }
  return out;
}

std::string line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i > 0 ? "\t" : "") + escape(fields[i]);
  return out + "\n";
}

std::string emit_tsv(const Report& r) {
  std::string out = line({"command", r.command});
  for (const auto& [k, v] : r.params) out += line({"param", k, v});
  for (const auto& [k, value] : r.results) {
    std::visit(
        [&out, &k](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, bool>) {
            out += line({"result", k, "bool", v ? "true" : "false"});
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            out += line({"result", k, "int", std::to_string(v)});
          } else if constexpr (std::is_same_v<T, std::string>) {
            out += line({"result", k, "string", v});
          } else if constexpr (std::is_same_v<T, std::vector<std::string>>) {
            std::vector<std::string> fields{"result", k, "list"};
            fields.insert(fields.end(), v.begin(), v.end());
            out += line(fields);
          } else {
            std::vector<std::string> fields{"result", k, "table"};
            fields.insert(fields.end(), v.columns.begin(), v.columns.end());
            out += line(fields);
            for (const auto& row : v.rows) {
              std::vector<std::string> cells{"row", k};
              cells.insert(cells.end(), row.begin(), row.end());
              out += line(cells);
            }
          }
        },
        value);
  }
  for (const auto& [k, v] : r.inputs) out += line({"input", k, v});
  out += line({"timing_us", std::to_string(r.timing_us)});
  return out;
}

std::vector<std::string> split_tsv(std::string_view text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    auto tab = text.find('\t', start);
    fields.push_back(unescape(text.substr(start, tab == std::string_view::npos ? tab : tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    auto v = std::stoll(s, &used);
    if (used != s.size()) throw ReportFormatError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw ReportFormatError("bad integer '" + s + "'");
  }
}

Report parse_tsv(std::string_view text) {
  Report r;
  bool saw_command = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (raw.empty()) continue;
    auto f = split_tsv(raw);
    const std::string& tag = f[0];
    auto need = [&f, &tag](std::size_t n) {
      if (f.size() < n) throw ReportFormatError("short TSV record '" + tag + "'");
    };
    if (tag == "command") {
      need(2);
      r.command = f[1];
      saw_command = true;
    } else if (tag == "param") {
      need(3);
      r.params.emplace_back(f[1], f[2]);
    } else if (tag == "input") {
      need(3);
      r.inputs.emplace_back(f[1], f[2]);
    } else if (tag == "timing_us") {
      need(2);
      r.timing_us = parse_int(f[1]);
    } else if (tag == "result") {
      need(3);
      const std::string& type = f[2];
      std::vector<std::string> rest(f.begin() + 3, f.end());
      if (type == "list") {
        r.results.emplace_back(f[1], rest);
      } else if (type == "table") {
        r.results.emplace_back(f[1], Table{rest, {}});
      } else {
        need(4);
        if (type == "bool") {
          if (f[3] != "true" && f[3] != "false") throw ReportFormatError("bad bool '" + f[3] + "'");
          r.results.emplace_back(f[1], f[3] == "true");
        } else if (type == "int") {
          r.results.emplace_back(f[1], parse_int(f[3]));
        } else if (type == "string") {
          r.results.emplace_back(f[1], f[3]);
        } else {
          throw ReportFormatError("unknown result type '" + type + "'");
        }
      }
    } else if (tag == "row") {
      need(2);
      if (r.results.empty() || r.results.back().first != f[1] || !std::holds_alternative<Table>(r.results.back().second)) {
        throw ReportFormatError("row for '" + f[1] + "' does not follow its table header");
      }
      std::get<Table>(r.results.back().second).rows.emplace_back(f.begin() + 2, f.end());
    } else {
      throw ReportFormatError("unknown TSV record '" + tag + "'");
    }
  }
  if (!saw_command) throw ReportFormatError("TSV report lacks a command record");
  return r;
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
  return format == ReportFormat::kJson ? emit_json(report) : emit_tsv(report);
}

Report parse_report(std::string_view document, ReportFormat format) {
  return format == ReportFormat::kJson ? parse_json(document) : parse_tsv(document);
}

}  // namespace ssfkit
