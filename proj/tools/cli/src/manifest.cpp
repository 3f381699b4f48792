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

#include "coemap/cli/manifest.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "coemap/corpus.hpp"
#include "coemap/csv.hpp"
#include "coemap/error.hpp"

namespace coemap::cli {

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

std::string csv_digest(const std::filesystem::path &path) {
  csv::Table t = csv::read_file(path);
  auto encode = [](const std::vector<std::string> &fields) {
    std::ostringstream os;
    csv::write_row(os, fields);
    return os.str();
  };
  std::vector<std::string> rows;
  rows.reserve(t.records.size());
  for (const auto &r : t.records) rows.push_back(encode(r.fields));
  std::sort(rows.begin(), rows.end());
  std::string canonical = encode(t.header);
  for (const auto &r : rows) canonical += r;
  return sha256_hex(canonical);
}

std::map<std::string, std::string> input_digests(
    const std::filesystem::path &input_dir) {
  std::vector<std::string> files = required_input_files();
  files.emplace_back(kAliasFile);
  std::map<std::string, std::string> out;
  for (const auto &f : files) {
    auto p = input_dir / f;
    if (std::filesystem::is_regular_file(p)) {
      out.emplace("digest." + f, csv_digest(p));
    }
  }
  return out;
}

}  // namespace coemap::cli
