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

// Aggregate views over an ExcellenceMap: distributions of clusters and
// centers along one dimension, a region x macro-area cross table, Pearson
// correlation, and the report writer.

#ifndef COEMAP_ANALYTICS_HPP_
#define COEMAP_ANALYTICS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coemap/corpus.hpp"
#include "coemap/excellence.hpp"

namespace coemap {

enum class Dimension {
  kMacroArea,
  kCategory,
  kOrganization,
  kInstType,
  kRegion,
  kGeoMacroArea,
};
std::string_view to_string(Dimension d);

// kTsc counts every cluster, kCoe only the flagged ones.
enum class Subject { kTsc, kCoe };
std::string_view to_string(Subject s);

struct DistributionRow {
  std::string key;
  std::size_t count = 0;
  double percentage = 0.0;
  double cumulative_percentage = 0.0;
};

struct DistributionTable {
  Dimension dimension = Dimension::kMacroArea;
  Subject subject = Subject::kTsc;
  std::size_t total = 0;
  std::vector<DistributionRow> rows;  // count desc, then key; nonzero only
};

// Organization keys aggregate all sites of an organization.
DistributionTable distribution(const ExcellenceMap &map, const Corpus &corpus,
                               Dimension dimension, Subject subject);

enum class CrossNormalize { kByColumn, kByRow, kNone };
std::string_view to_string(CrossNormalize n);

// Centers of excellence by region (rows) and macro-area (columns). Every
// registry region and every macro-area gets a line, empty or not.
struct CrossTable {
  CrossNormalize normalize = CrossNormalize::kNone;
  std::vector<RegionId> regions;
  std::vector<MacroAreaId> macro_areas;
  std::vector<std::vector<std::size_t>> counts;  // [region][macro_area]

  std::size_t row_total(std::size_t r) const;
  std::size_t column_total(std::size_t c) const;
  std::size_t total() const;
  // Cell as rendered: a count for kNone, a percentage of the column or row
  // total otherwise. nullopt when that total is 0.
  std::optional<double> value(std::size_t r, std::size_t c) const;
};

CrossTable cross_distribution(const ExcellenceMap &map, const Corpus &corpus,
                              CrossNormalize normalize);

// Throws DomainError on a length mismatch, fewer than two points, or a
// constant vector.
double pearson_correlation(std::span<const double> x,
                           std::span<const double> y);

enum class ReportFormat { kCsv, kMarkdown };
std::string_view to_string(ReportFormat f);
std::optional<ReportFormat> parse_report_format(std::string_view s);

// Columns: key,count,percentage,cumulative_percentage.
void write_distribution(std::ostream &os, const DistributionTable &table,
                        ReportFormat format);
// First column region; "-" marks an undefined percentage.
void write_cross(std::ostream &os, const CrossTable &table,
                 ReportFormat format);

// Writes the distribution and cross tables plus manifest.txt into out_dir,
// creating it if needed. The manifest holds config.* and count.* entries
// merged with `extra` (one key=value per line, keys sorted). Returns the
// written paths, manifest last. Throws Error naming the path on I/O failure.
std::vector<std::filesystem::path> emit_reports(
    const ExcellenceMap &map, const Corpus &corpus,
    const std::filesystem::path &out_dir, ReportFormat format,
    const std::map<std::string, std::string> &extra = {});

}  // namespace coemap

#endif  // COEMAP_ANALYTICS_HPP_
