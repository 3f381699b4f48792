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

// Top scientists, top-scientist clusters and centers of excellence.
//
// The pipeline ranks researchers by Scientific Strength inside each
// macro-area and keeps the top decile (boundary ties included). Each top
// scientist is assigned the category holding most of their publications in
// that area. Top scientists sharing an organizational unit and a category
// form a cluster when there are at least min_cluster_size of them. Clusters
// are ranked per category by Fractional Scientific Strength, and the first
// top_k are centers of excellence.

#ifndef COEMAP_EXCELLENCE_HPP_
#define COEMAP_EXCELLENCE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coemap/corpus.hpp"
#include "coemap/identity.hpp"
#include "coemap/ids.hpp"
#include "coemap/scoring.hpp"

namespace coemap {

enum class UnitLevel { kOrg, kSite };
std::string_view to_string(UnitLevel l);
std::optional<UnitLevel> parse_unit_level(std::string_view s);

struct PipelineConfig {
  double decile_fraction = 0.10;  // in (0, 1]
  int min_cluster_size = 4;       // >= 1
  int top_k = 3;                  // >= 1
  UnitLevel unit_level = UnitLevel::kSite;
  FssScope fss_scope = FssScope::kCategory;
  YearRange window{2001, 2003};

  // Throws ConfigError naming the offending field.
  void validate() const;

  friend bool operator==(const PipelineConfig &,
                         const PipelineConfig &) = default;
};

struct TopScientist {
  ResearcherId researcher;
  MacroAreaId macro_area;
  double ss = 0.0;
  CategoryId specialization;
  // Support of the specialization, used to pick one specialization for
  // researchers who are top scientists in several macro-areas.
  std::size_t specialization_count = 0;
  double specialization_weight = 0.0;
};

struct TscCluster {
  UnitKey unit;
  CategoryId category;
  std::vector<ResearcherId> members;  // sorted
  double fss = 0.0;
};

struct RankedCluster {
  TscCluster cluster;
  std::size_t rank = 0;  // 1-based within the category
  bool is_coe = false;
};

// Number of researchers a decile cut keeps before ties: ceil(fraction * n),
// clamped to [1, n]; 0 when n is 0.
std::size_t decile_cutoff(double fraction, std::size_t n);

// Researchers of the macro-area whose SS is at least the SS of the
// researcher at rank decile_cutoff(...). Sorted by id. Empty when the area
// has no scored researcher.
std::vector<ResearcherId> top_scientists(const MacroAreaId &macro_area,
                                         const ScoreTable &scores,
                                         const PipelineConfig &cfg);

struct Specialization {
  CategoryId category;
  std::size_t count = 0;
  double weight = 0.0;
};

// Category of the macro-area holding most of the researcher's weighted
// publications; ties go to the larger summed weight, then to the smaller
// category id. Throws DomainError when the researcher has no publication in
// the area.
CategoryId specialization_category(const ResearcherId &researcher,
                                   const MacroAreaId &macro_area,
                                   const AuthorshipTable &authorships,
                                   const Corpus &corpus);
Specialization specialization(const ResearcherId &researcher,
                              const MacroAreaId &macro_area,
                              const AuthorshipTable &authorships,
                              const Corpus &corpus,
                              const WeightTable &weights);

// Unit of a researcher at the configured granularity.
UnitKey unit_at_level(const Researcher &r, UnitLevel level);

// Groups top scientists by (unit, specialization) and keeps groups of at
// least cfg.min_cluster_size. A researcher listed under several macro-areas
// is grouped only under their strongest specialization, so nobody is in two
// clusters. fss is left at 0. Sorted by (category, unit).
std::vector<TscCluster> cluster_top_scientists(
    std::span<const TopScientist> top, const PipelineConfig &cfg,
    const Corpus &corpus);

// Orders one category's clusters by FSS (then member count, then unit) and
// flags the first min(top_k, size) as centers of excellence.
std::vector<RankedCluster> select_coe(const CategoryId &category,
                                      std::vector<TscCluster> clusters,
                                      const PipelineConfig &cfg);

struct ExcellenceMap {
  PipelineConfig config;
  AuthorshipTable authorships;
  WeightTable weights;
  ScoreTable scores;
  std::vector<TopScientist> top_scientists;  // sorted by (macro, researcher)
  std::map<CategoryId, std::vector<RankedCluster>> rankings;
  std::vector<ExcludedPublication> excluded;  // load + scoring, by pub id
  std::vector<std::string> warnings;

  std::vector<const RankedCluster *> clusters() const;
  std::vector<const RankedCluster *> centers() const;
};

// resolve_mentions -> weights -> SS -> top scientists -> specialization ->
// clusters -> FSS -> ranking. Macro-areas and clusters are processed on up to
// `workers` threads; output does not depend on the worker count. Throws
// ConfigError for an invalid config.
ExcellenceMap run_pipeline(const Corpus &corpus, const PipelineConfig &cfg,
                           unsigned workers = 1);

// tsc.csv: category_id,org_id,site_id,rank,fss,is_coe,member_ids
void write_tsc(std::ostream &os, const ExcellenceMap &map);
// top_scientists.csv: researcher_id,macro_area_id,ss,specialization_category
void write_top_scientists(std::ostream &os, const ExcellenceMap &map);

}  // namespace coemap

#endif  // COEMAP_EXCELLENCE_HPP_
