// Copyright 2026 The coemap Authors.
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

#include "coemap/cli/config_file.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "coemap/error.hpp"

namespace coemap::cli {
namespace {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::map<std::string, std::string> &config_keys() {
  static const std::map<std::string, std::string> kKeys = {
      {"decile", "top-decile fraction in (0, 1]"},
      {"min_cluster_size", "minimum top scientists per cluster"},
      {"top_k", "centers of excellence per category"},
      {"unit_level", "org or site"},
      {"fss_scope", "category or all"},
      {"years", "observation window A-B"},
      {"format", "csv or markdown"},
      {"workers", "worker threads"},
  };
  return kKeys;
}

std::map<std::string, std::string> parse_config(std::string_view text,
                                                std::string_view name) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(fmt::format("{}:{}: expected key=value, got '{}'", name,
                                    line_no, line));
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!config_keys().count(key)) {
      throw ConfigError(
          fmt::format("{}:{}: unknown key '{}'", name, line_no, key));
    }
    if (!out.emplace(key, value).second) {
      throw ConfigError(
          fmt::format("{}:{}: key '{}' given twice", name, line_no, key));
    }
  }
  return out;
}

std::map<std::string, std::string> read_config_file(
    const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError(fmt::format("cannot read config file {}", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

}  // namespace coemap::cli
