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

#include "coemap/csv.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "coemap/error.hpp"

namespace coemap::csv {

Table parse(std::string_view text, std::string name) {
  Table table;
  table.name = std::move(name);

  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<std::string> fields;
  std::string field;
  std::size_t line = 1;         // current physical line
  std::size_t record_line = 1;  // line on which the current record started
  bool in_quotes = false;
  bool after_quote = false;  // closing quote seen, expecting , or EOL
  bool quoted_any = false;

  auto end_record = [&] {
    fields.push_back(std::move(field));
    field.clear();
    bool blank = fields.size() == 1 && fields[0].empty() && !quoted_any;
    if (!blank) {
      if (table.header.empty()) {
        table.header = std::move(fields);
      } else {
        table.records.push_back(Record{record_line, std::move(fields)});
      }
    }
    fields.clear();
    after_quote = false;
    quoted_any = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
          after_quote = true;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      after_quote = false;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      continue;
    } else if (c == '\n' || c == '\r') {
      end_record();
      ++line;
      record_line = line;
    } else if (after_quote) {
      throw CorpusError(fmt::format(
          "{} row {}: unexpected character after closing quote", table.name,
          record_line));
    } else if (c == '"') {
      if (!field.empty()) {
        throw CorpusError(fmt::format(
            "{} row {}: unexpected quote inside unquoted field", table.name,
            record_line));
      }
      in_quotes = true;
      quoted_any = true;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw CorpusError(fmt::format("{} row {}: unterminated quoted field",
                                  table.name, record_line));
  }
  if (!field.empty() || !fields.empty() || quoted_any) end_record();
  return table;
}

Table read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CorpusError(fmt::format("cannot read {}", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.filename().string());
}

void require_columns(const Table &table,
                     std::initializer_list<std::string_view> expected) {
  std::vector<std::string> want(expected.begin(), expected.end());
  if (table.header != want) {
    std::string got;
    for (const auto &h : table.header) got += (got.empty() ? "" : ",") + h;
    std::string exp;
    for (const auto &h : want) exp += (exp.empty() ? "" : ",") + h;
    throw CorpusError(fmt::format("{} row 1: header '{}' does not match '{}'",
                                  table.name, got, exp));
  }
  for (const auto &r : table.records) {
    if (r.fields.size() != want.size()) {
      throw CorpusError(fmt::format("{} row {}: expected {} fields, found {}",
                                    table.name, r.row, want.size(),
                                    r.fields.size()));
    }
  }
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream &os, const std::vector<std::string> &fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << escape(fields[i]);
  }
  os << '\n';
}

std::vector<std::string> split_escaped(std::string_view s, char delim) {
  std::vector<std::string> pieces;
  if (s.empty()) return pieces;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size() && s[i + 1] == delim) {
      cur.push_back(delim);
      ++i;
    } else if (s[i] == delim) {
      pieces.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(s[i]);
    }
  }
  pieces.push_back(std::move(cur));
  return pieces;
}

std::string join_escaped(const std::vector<std::string> &pieces, char delim) {
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out.push_back(delim);
    for (char c : pieces[i]) {
      if (c == delim) out.push_back('\\');
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace coemap::csv
