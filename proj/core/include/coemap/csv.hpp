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

// RFC-4180 CSV reading and writing.

#ifndef COEMAP_CSV_HPP_
#define COEMAP_CSV_HPP_

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace coemap::csv {

struct Record {
  // 1-based row number of the record in its file; the header is row 1.
  std::size_t row = 0;
  std::vector<std::string> fields;
};

struct Table {
  std::string name;  // file name used in error messages
  std::vector<std::string> header;
  std::vector<Record> records;
};

// Parses RFC-4180 text: comma delimiter, double-quote quoting with "" as an
// escaped quote, CRLF or LF line ends, optional UTF-8 BOM. Blank lines are
// skipped. Throws CorpusError naming `name` and the row on malformed input.
Table parse(std::string_view text, std::string name);

// Reads and parses `path`; throws CorpusError if it cannot be read.
Table read_file(const std::filesystem::path &path);

// Checks that the header matches `expected` exactly and that every record
// has the same number of fields. Throws CorpusError otherwise.
void require_columns(const Table &table,
                     std::initializer_list<std::string_view> expected);

// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void write_row(std::ostream &os, const std::vector<std::string> &fields);

// Splits on `delim`, honoring backslash-escaped delimiters ("a\;b" stays one
// piece and is unescaped to "a;b"). An empty string yields no pieces.
std::vector<std::string> split_escaped(std::string_view s, char delim);

// Joins pieces with `delim`, escaping embedded delimiters with a backslash.
std::string join_escaped(const std::vector<std::string> &pieces, char delim);

}  // namespace coemap::csv

#endif  // COEMAP_CSV_HPP_
