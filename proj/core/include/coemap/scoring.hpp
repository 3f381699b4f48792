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

// Publication weights and strength indicators.
//
// A publication's weight in a macro-area is its journal's impact factor
// divided by the mean impact factor of the journal's category, averaged over
// the journal's categories inside that macro-area. Scientific Strength (SS)
// sums a researcher's weights per macro-area. Fractional Scientific Strength
// (FSS) credits a group of researchers with w * m / n per distinct
// publication, where m counts group members on the byline and n is the byline
// length, so co-authored papers are never counted twice.
//
// All sums run in pub_id order, so results are bitwise reproducible.

#ifndef COEMAP_SCORING_HPP_
#define COEMAP_SCORING_HPP_

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "coemap/corpus.hpp"
#include "coemap/identity.hpp"
#include "coemap/ids.hpp"

namespace coemap {

enum class FssScope { kCategory, kAll };
std::string_view to_string(FssScope s);
std::optional<FssScope> parse_fss_scope(std::string_view s);

// Mean impact factor in `year` over the category's journals that have an
// entry for that year. Throws DomainError if there is none or the mean is 0.
double category_mean_if(const CategoryId &category, int year,
                        const Corpus &corpus);

// The publication's own year if its journal has an impact factor then,
// otherwise the nearest earlier year inside the observation window that has
// one; nullopt when neither exists.
std::optional<int> reference_year(const Publication &pub,
                                  const Corpus &corpus);

// Throws DomainError when the journal has no category in the macro-area or no
// applicable impact factor. A zero impact factor yields weight 0.
double normalized_weight(const Publication &pub, const MacroAreaId &macro_area,
                         const Corpus &corpus);

// Weights of every corpus publication in every macro-area it touches.
class WeightTable {
 public:
  WeightTable() = default;
  static WeightTable compute(const Corpus &corpus, unsigned workers = 1);

  std::optional<double> weight(const PubId &pub,
                               const MacroAreaId &macro_area) const;
  // Publications dropped from scoring, with reason, sorted by pub id.
  const std::vector<ExcludedPublication> &excluded() const { return excluded_; }
  const std::map<std::pair<PubId, MacroAreaId>, double> &entries() const {
    return weights_;
  }

 private:
  std::map<std::pair<PubId, MacroAreaId>, double> weights_;
  std::vector<ExcludedPublication> excluded_;
};

// Scientific Strength per (researcher, macro-area). An entry exists only
// where the researcher has at least one weighted publication in the area.
class ScoreTable {
 public:
  using Key = std::pair<ResearcherId, MacroAreaId>;

  ScoreTable() = default;
  explicit ScoreTable(std::map<Key, double> ss);

  // 0 when absent.
  double ss(const ResearcherId &r, const MacroAreaId &m) const;
  bool contains(const ResearcherId &r, const MacroAreaId &m) const;
  const std::map<Key, double> &entries() const { return ss_; }
  // Scored researchers of the macro-area with their SS, sorted by id.
  std::vector<std::pair<ResearcherId, double>> in_macro_area(
      const MacroAreaId &m) const;

 private:
  std::map<Key, double> ss_;
  std::map<MacroAreaId, std::vector<std::pair<ResearcherId, double>>> by_area_;
};

ScoreTable compute_scores(const Corpus &corpus,
                          const AuthorshipTable &authorships,
                          const WeightTable &weights);

// SS of one researcher; equals compute_scores(...).ss(researcher, macro).
double scientific_strength(const ResearcherId &researcher,
                           const MacroAreaId &macro_area,
                           const AuthorshipTable &authorships,
                           const Corpus &corpus);

// FSS of a group. With kCategory only publications whose journal carries
// `category` count; with kAll every member publication touching the
// category's macro-area counts. n uses the full byline length, including
// unresolved mentions.
double fractional_strength(std::span<const ResearcherId> members,
                           const CategoryId &category, FssScope scope,
                           const AuthorshipTable &authorships,
                           const Corpus &corpus);
double fractional_strength(std::span<const ResearcherId> members,
                           const CategoryId &category, FssScope scope,
                           const AuthorshipTable &authorships,
                           const Corpus &corpus, const WeightTable &weights);

// scores.csv: researcher_id,macro_area_id,ss
void write_scores(std::ostream &os, const ScoreTable &scores);
// excluded_pubs.csv: pub_id,reason
void write_excluded_pubs(std::ostream &os,
                         const std::vector<ExcludedPublication> &excluded);

}  // namespace coemap

#endif  // COEMAP_SCORING_HPP_
