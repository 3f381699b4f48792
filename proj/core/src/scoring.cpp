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

#include "coemap/scoring.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "coemap/csv.hpp"
#include "coemap/error.hpp"
#include "coemap/format.hpp"
#include "coemap/parallel.hpp"

namespace coemap {

std::string_view to_string(FssScope s) {
  return s == FssScope::kCategory ? "category" : "all";
}

std::optional<FssScope> parse_fss_scope(std::string_view s) {
  if (s == "category") return FssScope::kCategory;
  if (s == "all") return FssScope::kAll;
  return std::nullopt;
}

double category_mean_if(const CategoryId &category, int year,
                        const Corpus &corpus) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto &j : corpus.journals_in(category)) {
    if (auto v = corpus.impact_factor(j, year)) {
      sum += *v;
      ++n;
    }
  }
  if (n == 0 || sum == 0.0) {
    throw DomainError(fmt::format(
        "normalization undefined for category '{}' in {}: {}", category.str(),
        year, n == 0 ? "no impact factors" : "mean impact factor is 0"));
  }
  return sum / static_cast<double>(n);
}

std::optional<int> reference_year(const Publication &pub,
                                  const Corpus &corpus) {
  if (corpus.impact_factor(pub.journal, pub.year)) return pub.year;
  for (int y = pub.year - 1; y >= corpus.window().first; --y) {
    if (corpus.impact_factor(pub.journal, y)) return y;
  }
  return std::nullopt;
}

namespace {

enum class WeightFailure { kNotInMacroArea, kMissingIf };

struct WeightResult {
  std::optional<double> weight;
  WeightFailure failure = WeightFailure::kNotInMacroArea;
};

// `mean` is called as mean(category, year); both the direct and the cached
// paths go through here so they produce identical bits.
template <typename MeanFn>
WeightResult try_weight(const Publication &pub, const MacroAreaId &macro_area,
                        const Corpus &corpus, MeanFn &&mean) {
  const Journal &journal = corpus.journal(pub.journal);
  std::vector<const CategoryId *> in_area;
  for (const auto &c : journal.categories) {
    if (corpus.category(c).macro_area == macro_area) in_area.push_back(&c);
  }
  if (in_area.empty()) return {std::nullopt, WeightFailure::kNotInMacroArea};

  auto year = reference_year(pub, corpus);
  if (!year) return {std::nullopt, WeightFailure::kMissingIf};
  double impact = *corpus.impact_factor(pub.journal, *year);
  if (impact == 0.0) return {0.0, {}};

  double sum = 0.0;
  for (const CategoryId *c : in_area) sum += impact / mean(*c, *year);
  return {sum / static_cast<double>(in_area.size()), {}};
}

double direct_mean(const CategoryId &c, int year, const Corpus &corpus) {
  return category_mean_if(c, year, corpus);
}

}  // namespace

double normalized_weight(const Publication &pub, const MacroAreaId &macro_area,
                         const Corpus &corpus) {
  auto r = try_weight(pub, macro_area, corpus,
                      [&](const CategoryId &c, int y) {
                        return direct_mean(c, y, corpus);
                      });
  if (r.weight) return *r.weight;
  if (r.failure == WeightFailure::kNotInMacroArea) {
    throw DomainError(fmt::format(
        "publication '{}' has no category in macro-area '{}'", pub.id.str(),
        macro_area.str()));
  }
  throw DomainError(fmt::format(
      "publication '{}': journal '{}' has no impact factor for {} or an "
      "earlier year in the window",
      pub.id.str(), pub.journal.str(), pub.year));
}

WeightTable WeightTable::compute(const Corpus &corpus, unsigned workers) {
  // Category means are memoized up front so the parallel part is read-only.
  std::map<std::pair<CategoryId, int>, double> means;
  std::set<std::pair<CategoryId, int>> needed;
  for (const auto &[id, pub] : corpus.publications()) {
    auto y = reference_year(pub, corpus);
    if (!y) continue;
    for (const auto &c : corpus.journal(pub.journal).categories) {
      needed.emplace(c, *y);
    }
  }
  for (const auto &[c, y] : needed) {
    try {
      means.emplace(std::pair(c, y), category_mean_if(c, y, corpus));
    } catch (const DomainError &) {
      // Only reachable for zero-IF journals, which short-circuit to 0.
    }
  }
  auto cached = [&](const CategoryId &c, int y) {
    auto it = means.find(std::pair(c, y));
    if (it == means.end()) return category_mean_if(c, y, corpus);
    return it->second;
  };

  std::vector<const Publication *> pubs;
  for (const auto &[id, pub] : corpus.publications()) pubs.push_back(&pub);

  struct Row {
    std::vector<std::pair<MacroAreaId, double>> weights;
    bool missing_if = false;
  };
  std::vector<Row> rows(pubs.size());
  parallel_for(pubs.size(), workers, [&](std::size_t i) {
    const Publication &pub = *pubs[i];
    for (const auto &m : publication_macro_areas(pub, corpus)) {
      auto r = try_weight(pub, m, corpus, cached);
      if (r.weight) {
        rows[i].weights.emplace_back(m, *r.weight);
      } else if (r.failure == WeightFailure::kMissingIf) {
        rows[i].missing_if = true;
        rows[i].weights.clear();
        return;
      }
    }
  });

  WeightTable t;
  for (std::size_t i = 0; i < pubs.size(); ++i) {
    if (rows[i].missing_if) {
      t.excluded_.push_back({pubs[i]->id, "missing_if"});
      continue;
    }
    for (auto &[m, w] : rows[i].weights) {
      t.weights_.emplace(std::pair(pubs[i]->id, m), w);
    }
  }
  return t;
}

std::optional<double> WeightTable::weight(const PubId &pub,
                                          const MacroAreaId &macro_area) const {
  auto it = weights_.find(std::pair(pub, macro_area));
  if (it == weights_.end()) return std::nullopt;
  return it->second;
}

ScoreTable::ScoreTable(std::map<Key, double> ss) : ss_(std::move(ss)) {
  for (const auto &[key, v] : ss_) by_area_[key.second].emplace_back(key.first, v);
}

double ScoreTable::ss(const ResearcherId &r, const MacroAreaId &m) const {
  auto it = ss_.find(Key(r, m));
  return it == ss_.end() ? 0.0 : it->second;
}

bool ScoreTable::contains(const ResearcherId &r, const MacroAreaId &m) const {
  return ss_.count(Key(r, m)) > 0;
}

std::vector<std::pair<ResearcherId, double>> ScoreTable::in_macro_area(
    const MacroAreaId &m) const {
  auto it = by_area_.find(m);
  if (it == by_area_.end()) return {};
  return it->second;
}

ScoreTable compute_scores(const Corpus &corpus,
                          const AuthorshipTable &authorships,
                          const WeightTable &weights) {
  std::map<ScoreTable::Key, double> ss;
  for (const auto &[rid, researcher] : corpus.researchers()) {
    for (const PubId &p : authorships.publications_of(rid)) {
      const Publication &pub = corpus.publication(p);
      for (const auto &m : publication_macro_areas(pub, corpus)) {
        if (auto w = weights.weight(p, m)) ss[ScoreTable::Key(rid, m)] += *w;
      }
    }
  }
  return ScoreTable(std::move(ss));
}

double scientific_strength(const ResearcherId &researcher,
                           const MacroAreaId &macro_area,
                           const AuthorshipTable &authorships,
                           const Corpus &corpus) {
  corpus.researcher(researcher);  // existence check
  double ss = 0.0;
  for (const PubId &p : authorships.publications_of(researcher)) {
    auto r = try_weight(corpus.publication(p), macro_area, corpus,
                        [&](const CategoryId &c, int y) {
                          return direct_mean(c, y, corpus);
                        });
    if (r.weight) ss += *r.weight;
  }
  return ss;
}

namespace {

template <typename WeightFn>
double fss_impl(std::span<const ResearcherId> members,
                const CategoryId &category, FssScope scope,
                const AuthorshipTable &authorships, const Corpus &corpus,
                WeightFn &&weight_of) {
  const MacroAreaId &macro_area = corpus.category(category).macro_area;
  std::vector<ResearcherId> group(members.begin(), members.end());
  std::sort(group.begin(), group.end());
  group.erase(std::unique(group.begin(), group.end()), group.end());

  std::set<PubId> pubs;
  for (const auto &r : group) {
    for (const PubId &p : authorships.publications_of(r)) pubs.insert(p);
  }

  double fss = 0.0;
  for (const PubId &p : pubs) {
    const Publication &pub = corpus.publication(p);
    if (scope == FssScope::kCategory) {
      const auto &cats = publication_categories(pub, corpus);
      if (!std::binary_search(cats.begin(), cats.end(), category)) continue;
    }
    std::optional<double> w = weight_of(pub, macro_area);
    if (!w) continue;
    auto authors = authorships.researchers_of(p);
    std::size_t m = 0;
    for (const auto &a : authors) {
      if (std::binary_search(group.begin(), group.end(), a)) ++m;
    }
    fss += *w * static_cast<double>(m) /
           static_cast<double>(pub.mentions.size());
  }
  return fss;
}

}  // namespace

double fractional_strength(std::span<const ResearcherId> members,
                           const CategoryId &category, FssScope scope,
                           const AuthorshipTable &authorships,
                           const Corpus &corpus) {
  return fss_impl(members, category, scope, authorships, corpus,
                  [&](const Publication &pub, const MacroAreaId &m) {
                    return try_weight(pub, m, corpus,
                                      [&](const CategoryId &c, int y) {
                                        return direct_mean(c, y, corpus);
                                      })
                        .weight;
                  });
}

double fractional_strength(std::span<const ResearcherId> members,
                           const CategoryId &category, FssScope scope,
                           const AuthorshipTable &authorships,
                           const Corpus &corpus, const WeightTable &weights) {
  return fss_impl(members, category, scope, authorships, corpus,
                  [&](const Publication &pub, const MacroAreaId &m) {
                    return weights.weight(pub.id, m);
                  });
}

void write_scores(std::ostream &os, const ScoreTable &scores) {
  csv::write_row(os, {"researcher_id", "macro_area_id", "ss"});
  for (const auto &[key, v] : scores.entries()) {
    csv::write_row(os, {key.first.str(), key.second.str(), format_real(v)});
  }
}

void write_excluded_pubs(std::ostream &os,
                         const std::vector<ExcludedPublication> &excluded) {
  csv::write_row(os, {"pub_id", "reason"});
  for (const auto &e : excluded) csv::write_row(os, {e.pub.str(), e.reason});
}

}  // namespace coemap
