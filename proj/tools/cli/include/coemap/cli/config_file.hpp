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

// Plain key=value run configuration. Blank lines and lines starting with '#'
// are ignored; whitespace around keys and values is trimmed. Command-line
// flags override values read here.

#ifndef COEMAP_CLI_CONFIG_FILE_HPP_
#define COEMAP_CLI_CONFIG_FILE_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace coemap::cli {

// Keys accepted in a config file; each mirrors the run flag of the same name
// with dashes turned into underscores.
const std::map<std::string, std::string> &config_keys();

// Throws ConfigError naming file and line for a malformed line, an unknown
// key or a repeated key.
std::map<std::string, std::string> parse_config(std::string_view text,
                                                std::string_view name);
std::map<std::string, std::string> read_config_file(
    const std::filesystem::path &path);

}  // namespace coemap::cli

#endif  // COEMAP_CLI_CONFIG_FILE_HPP_
