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

#include "coemap/analytics.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "coemap/error.hpp"

namespace coemap {

std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::kMacroArea: return "macro_area";
    case Dimension::kCategory: return "category";
    case Dimension::kOrganization: return "organization";
    case Dimension::kInstType: return "inst_type";
    case Dimension::kRegion: return "region";
    case Dimension::kGeoMacroArea: return "geo_macro_area";
  }
  return "";
}

std::string_view to_string(Subject s) {
  return s == Subject::kTsc ? "tsc" : "coe";
}

std::string_view to_string(CrossNormalize n) {
  switch (n) {
    case CrossNormalize::kByColumn: return "by_column";
    case CrossNormalize::kByRow: return "by_row";
    case CrossNormalize::kNone: return "none";
  }
  return "";
}

namespace {

std::string dimension_key(const RankedCluster &r, const Corpus &corpus,
                          Dimension d) {
  const TscCluster &c = r.cluster;
  switch (d) {
    case Dimension::kMacroArea:
      return corpus.category(c.category).macro_area.str();
    case Dimension::kCategory:
      return c.category.str();
    case Dimension::kOrganization:
      return c.unit.org.str();
    case Dimension::kInstType:
      return std::string(to_string(corpus.organization(c.unit).inst_type));
    case Dimension::kRegion:
      return corpus.organization(c.unit).region.str();
    case Dimension::kGeoMacroArea:
      return std::string(to_string(corpus.organization(c.unit).geo));
  }
  return {};
}

}  // namespace

DistributionTable distribution(const ExcellenceMap &map, const Corpus &corpus,
                               Dimension dimension, Subject subject) {
  std::map<std::string, std::size_t> counts;
  DistributionTable t{dimension, subject, 0, {}};
  for (const RankedCluster *r : map.clusters()) {
    if (subject == Subject::kCoe && !r->is_coe) continue;
    ++counts[dimension_key(*r, corpus, dimension)];
    ++t.total;
  }
  for (const auto &[key, n] : counts) t.rows.push_back({key, n, 0.0, 0.0});
  std::stable_sort(t.rows.begin(), t.rows.end(),
                   [](const auto &a, const auto &b) { return a.count > b.count; });

  std::size_t running = 0;
  for (auto &row : t.rows) {
    running += row.count;
    double total = static_cast<double>(t.total);
    row.percentage = 100.0 * static_cast<double>(row.count) / total;
    row.cumulative_percentage = 100.0 * static_cast<double>(running) / total;
  }
  return t;
}

std::size_t CrossTable::row_total(std::size_t r) const {
  std::size_t s = 0;
  for (std::size_t n : counts[r]) s += n;
  return s;
}

std::size_t CrossTable::column_total(std::size_t c) const {
  std::size_t s = 0;
  for (const auto &row : counts) s += row[c];
  return s;
}

std::size_t CrossTable::total() const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) s += row_total(r);
  return s;
}

std::optional<double> CrossTable::value(std::size_t r, std::size_t c) const {
  double n = static_cast<double>(counts[r][c]);
  std::size_t denom = 0;
  switch (normalize) {
    case CrossNormalize::kNone: return n;
    case CrossNormalize::kByColumn: denom = column_total(c); break;
    case CrossNormalize::kByRow: denom = row_total(r); break;
  }
  if (denom == 0) return std::nullopt;
  return 100.0 * n / static_cast<double>(denom);
}

CrossTable cross_distribution(const ExcellenceMap &map, const Corpus &corpus,
                              CrossNormalize normalize) {
  CrossTable t;
  t.normalize = normalize;
  t.regions = corpus.regions();
  t.macro_areas = corpus.macro_areas();
  t.counts.assign(t.regions.size(),
                  std::vector<std::size_t>(t.macro_areas.size(), 0));
  for (const RankedCluster *r : map.centers()) {
    const RegionId &region = corpus.organization(r->cluster.unit).region;
    const MacroAreaId &area = corpus.category(r->cluster.category).macro_area;
    auto ri = std::lower_bound(t.regions.begin(), t.regions.end(), region);
    auto ci =
        std::lower_bound(t.macro_areas.begin(), t.macro_areas.end(), area);
    ++t.counts[ri - t.regions.begin()][ci - t.macro_areas.begin()];
  }
  return t;
}

double pearson_correlation(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size()) {
    throw DomainError(fmt::format(
        "correlation needs vectors of equal length, got {} and {}", x.size(),
        y.size()));
  }
  if (x.size() < 2) {
    throw DomainError(fmt::format(
        "correlation needs at least 2 points, got {}", x.size()));
  }
  double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw DomainError("correlation undefined for a constant vector");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace coemap
