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

#include <fstream>
#include <sstream>
#include <system_error>

#include <fmt/format.h>

#include "coemap/analytics.hpp"
#include "coemap/csv.hpp"
#include "coemap/error.hpp"
#include "coemap/format.hpp"

namespace coemap {

std::string_view to_string(ReportFormat f) {
  return f == ReportFormat::kCsv ? "csv" : "markdown";
}

std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "markdown") return ReportFormat::kMarkdown;
  return std::nullopt;
}

namespace {

std::string md_cell(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

// Header, then rows. `numeric` marks right-aligned columns in markdown.
void write_table(std::ostream &os, ReportFormat format,
                 const std::vector<std::string> &header,
                 const std::vector<bool> &numeric,
                 const std::vector<std::vector<std::string>> &rows) {
  if (format == ReportFormat::kCsv) {
    csv::write_row(os, header);
    for (const auto &r : rows) csv::write_row(os, r);
    return;
  }
  auto line = [&](const std::vector<std::string> &cells) {
    os << '|';
    for (const auto &c : cells) os << ' ' << md_cell(c) << " |";
    os << '\n';
  };
  line(header);
  os << '|';
  for (bool n : numeric) os << (n ? " ---: |" : " --- |");
  os << '\n';
  for (const auto &r : rows) line(r);
}

std::string percent_or_dash(std::optional<double> v) {
  return v ? format_percent(*v) : "-";
}

}  // namespace

void write_distribution(std::ostream &os, const DistributionTable &table,
                        ReportFormat format) {
  std::vector<std::vector<std::string>> rows;
  for (const auto &r : table.rows) {
    rows.push_back({r.key, std::to_string(r.count),
                    format_percent(r.percentage),
                    format_percent(r.cumulative_percentage)});
  }
  write_table(os, format,
              {"key", "count", "percentage", "cumulative_percentage"},
              {false, true, true, true}, rows);
}

void write_cross(std::ostream &os, const CrossTable &table,
                 ReportFormat format) {
  bool total_row = table.normalize != CrossNormalize::kByRow;
  bool total_col = table.normalize != CrossNormalize::kByColumn;

  std::vector<std::string> header{"region"};
  for (const auto &m : table.macro_areas) header.push_back(m.str());
  if (total_col) header.push_back("total");
  std::vector<bool> numeric(header.size(), true);
  numeric[0] = false;

  auto cell = [&](std::size_t r, std::size_t c) -> std::string {
    if (table.normalize == CrossNormalize::kNone) {
      return std::to_string(table.counts[r][c]);
    }
    return percent_or_dash(table.value(r, c));
  };

  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < table.regions.size(); ++r) {
    std::vector<std::string> row{table.regions[r].str()};
    for (std::size_t c = 0; c < table.macro_areas.size(); ++c) {
      row.push_back(cell(r, c));
    }
    if (total_col) {
      if (table.normalize == CrossNormalize::kNone) {
        row.push_back(std::to_string(table.row_total(r)));
      } else {
        row.push_back(table.row_total(r) ? format_percent(100.0) : "-");
      }
    }
    rows.push_back(std::move(row));
  }
  if (total_row) {
    std::vector<std::string> row{"total"};
    for (std::size_t c = 0; c < table.macro_areas.size(); ++c) {
      if (table.normalize == CrossNormalize::kNone) {
        row.push_back(std::to_string(table.column_total(c)));
      } else {
        row.push_back(table.column_total(c) ? format_percent(100.0) : "-");
      }
    }
    if (total_col) row.push_back(std::to_string(table.total()));
    rows.push_back(std::move(row));
  }
  write_table(os, format, header, numeric, rows);
}

namespace {

void write_file(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot open '{}' for writing", path.string()));
  out << text;
  out.flush();
  if (!out) throw Error(fmt::format("write to '{}' failed", path.string()));
}

}  // namespace

std::vector<std::filesystem::path> emit_reports(
    const ExcellenceMap &map, const Corpus &corpus,
    const std::filesystem::path &out_dir, ReportFormat format,
    const std::map<std::string, std::string> &extra) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(fmt::format("cannot create '{}': {}", out_dir.string(),
                            ec.message()));
  }
  const std::string ext = format == ReportFormat::kCsv ? ".csv" : ".md";
  std::vector<std::filesystem::path> written;

  struct Dist {
    Dimension dimension;
    Subject subject;
  };
  static constexpr Dist kDistributions[] = {
      {Dimension::kMacroArea, Subject::kTsc},
      {Dimension::kCategory, Subject::kTsc},
      {Dimension::kOrganization, Subject::kTsc},
      {Dimension::kInstType, Subject::kTsc},
      {Dimension::kRegion, Subject::kTsc},
      {Dimension::kOrganization, Subject::kCoe},
      {Dimension::kMacroArea, Subject::kCoe},
      {Dimension::kInstType, Subject::kCoe},
      {Dimension::kGeoMacroArea, Subject::kCoe},
      {Dimension::kRegion, Subject::kCoe},
  };
  for (const Dist &d : kDistributions) {
    std::ostringstream os;
    write_distribution(os, distribution(map, corpus, d.dimension, d.subject),
                       format);
    auto path = out_dir / fmt::format("dist_{}_{}{}", to_string(d.dimension),
                                      to_string(d.subject), ext);
    write_file(path, os.str());
    written.push_back(path);
  }
  for (CrossNormalize n : {CrossNormalize::kByColumn, CrossNormalize::kByRow}) {
    std::ostringstream os;
    write_cross(os, cross_distribution(map, corpus, n), format);
    auto path = out_dir / fmt::format("cross_region_macroarea_{}{}",
                                      to_string(n), ext);
    write_file(path, os.str());
    written.push_back(path);
  }

  const PipelineConfig &cfg = map.config;
  std::map<std::string, std::string> manifest{
      {"config.decile", fmt::format("{}", cfg.decile_fraction)},
      {"config.min_cluster_size", std::to_string(cfg.min_cluster_size)},
      {"config.top_k", std::to_string(cfg.top_k)},
      {"config.unit_level", std::string(to_string(cfg.unit_level))},
      {"config.fss_scope", std::string(to_string(cfg.fss_scope))},
      {"config.years", cfg.window.str()},
      {"config.format", std::string(to_string(format))},
      {"count.categories", std::to_string(corpus.categories().size())},
      {"count.journals", std::to_string(corpus.journals().size())},
      {"count.impact_factors", std::to_string(corpus.impact_factor_count())},
      {"count.organizations", std::to_string(corpus.organizations().size())},
      {"count.researchers", std::to_string(corpus.researchers().size())},
      {"count.publications", std::to_string(corpus.publications().size())},
      {"count.links", std::to_string(map.authorships.links().size())},
      {"count.unresolved", std::to_string(map.authorships.unresolved().size())},
      {"count.excluded_pubs", std::to_string(map.excluded.size())},
      {"count.top_scientists", std::to_string(map.top_scientists.size())},
      {"count.tsc", std::to_string(map.clusters().size())},
      {"count.coe", std::to_string(map.centers().size())},
  };
  for (const auto &[k, v] : extra) manifest[k] = v;
  std::string text;
  for (const auto &[k, v] : manifest) text += fmt::format("{}={}\n", k, v);
  auto path = out_dir / "manifest.txt";
  write_file(path, text);
  written.push_back(path);
  return written;
}

}  // namespace coemap
