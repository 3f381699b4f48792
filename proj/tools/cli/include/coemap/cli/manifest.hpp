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

// Input digests for the run manifest.

#ifndef COEMAP_CLI_MANIFEST_HPP_
#define COEMAP_CLI_MANIFEST_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace coemap::cli {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

// SHA-256 of a CSV file in canonical form: the header, then the data records
// re-encoded and sorted bytewise, one per line. Reordering rows or switching
// line endings leaves the digest unchanged.
std::string csv_digest(const std::filesystem::path &path);

// digest.<file name> for every input file present in the directory.
std::map<std::string, std::string> input_digests(
    const std::filesystem::path &input_dir);

}  // namespace coemap::cli

#endif  // COEMAP_CLI_MANIFEST_HPP_
