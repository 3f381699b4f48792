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

#include "coemap/excellence.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <fmt/format.h>

#include "coemap/csv.hpp"
#include "coemap/error.hpp"
#include "coemap/format.hpp"
#include "coemap/parallel.hpp"

namespace coemap {

std::string_view to_string(UnitLevel l) {
  return l == UnitLevel::kOrg ? "org" : "site";
}

std::optional<UnitLevel> parse_unit_level(std::string_view s) {
  if (s == "org") return UnitLevel::kOrg;
  if (s == "site") return UnitLevel::kSite;
  return std::nullopt;
}

void PipelineConfig::validate() const {
  if (!(decile_fraction > 0.0 && decile_fraction <= 1.0)) {
    throw ConfigError(fmt::format(
        "decile fraction must be in (0, 1], got {}", decile_fraction));
  }
  if (min_cluster_size < 1) {
    throw ConfigError(fmt::format("min cluster size must be >= 1, got {}",
                                  min_cluster_size));
  }
  if (top_k < 1) {
    throw ConfigError(fmt::format("top-k must be >= 1, got {}", top_k));
  }
  if (window.first > window.last) {
    throw ConfigError(fmt::format("invalid year window {}", window.str()));
  }
}

std::size_t decile_cutoff(double fraction, std::size_t n) {
  if (n == 0) return 0;
  double x = fraction * static_cast<double>(n);
  // 0.1 * 30 evaluates to 3.0000000000000004; don't let that round up.
  double k = std::ceil(x - 1e-9 * std::max(1.0, x));
  return std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k, 1.0)),
                                 1, n);
}

std::vector<ResearcherId> top_scientists(const MacroAreaId &macro_area,
                                         const ScoreTable &scores,
                                         const PipelineConfig &cfg) {
  auto scored = scores.in_macro_area(macro_area);
  std::vector<ResearcherId> out;
  if (scored.empty()) return out;

  std::vector<double> values;
  values.reserve(scored.size());
  for (const auto &[r, ss] : scored) values.push_back(ss);
  std::sort(values.begin(), values.end(), std::greater<>());
  double threshold = values[decile_cutoff(cfg.decile_fraction, values.size()) - 1];

  for (const auto &[r, ss] : scored) {
    if (ss >= threshold) out.push_back(r);
  }
  return out;  // in_macro_area is sorted by id
}

namespace {

template <typename WeightFn>
Specialization pick_specialization(const ResearcherId &researcher,
                                   const MacroAreaId &macro_area,
                                   const AuthorshipTable &authorships,
                                   const Corpus &corpus, WeightFn &&weight_of) {
  std::map<CategoryId, Specialization> tally;
  for (const PubId &p : authorships.publications_of(researcher)) {
    const Publication &pub = corpus.publication(p);
    std::optional<double> w = weight_of(pub);
    if (!w) continue;
    for (const auto &c : publication_categories(pub, corpus)) {
      if (corpus.category(c).macro_area != macro_area) continue;
      Specialization &s = tally[c];
      s.category = c;
      ++s.count;
      s.weight += *w;
    }
  }
  if (tally.empty()) {
    throw DomainError(fmt::format(
        "researcher '{}' has no publications in macro-area '{}'",
        researcher.str(), macro_area.str()));
  }
  const Specialization *best = nullptr;
  for (const auto &[c, s] : tally) {  // ascending id: strict > keeps smallest
    if (!best || s.count > best->count ||
        (s.count == best->count && s.weight > best->weight)) {
      best = &s;
    }
  }
  return *best;
}

}  // namespace

CategoryId specialization_category(const ResearcherId &researcher,
                                   const MacroAreaId &macro_area,
                                   const AuthorshipTable &authorships,
                                   const Corpus &corpus) {
  return pick_specialization(
             researcher, macro_area, authorships, corpus,
             [&](const Publication &pub) -> std::optional<double> {
               try {
                 return normalized_weight(pub, macro_area, corpus);
               } catch (const DomainError &) {
                 return std::nullopt;
               }
             })
      .category;
}

Specialization specialization(const ResearcherId &researcher,
                              const MacroAreaId &macro_area,
                              const AuthorshipTable &authorships,
                              const Corpus &corpus,
                              const WeightTable &weights) {
  return pick_specialization(researcher, macro_area, authorships, corpus,
                             [&](const Publication &pub) {
                               return weights.weight(pub.id, macro_area);
                             });
}

UnitKey unit_at_level(const Researcher &r, UnitLevel level) {
  if (level == UnitLevel::kOrg) return UnitKey{r.org, SiteId()};
  return r.unit();
}

std::vector<TscCluster> cluster_top_scientists(
    std::span<const TopScientist> top, const PipelineConfig &cfg,
    const Corpus &corpus) {
  // Strongest specialization per researcher.
  auto stronger = [](const TopScientist &a, const TopScientist &b) {
    if (a.specialization_count != b.specialization_count) {
      return a.specialization_count > b.specialization_count;
    }
    if (a.specialization_weight != b.specialization_weight) {
      return a.specialization_weight > b.specialization_weight;
    }
    return std::tie(a.specialization, a.macro_area) <
           std::tie(b.specialization, b.macro_area);
  };
  std::map<ResearcherId, const TopScientist *> chosen;
  for (const TopScientist &t : top) {
    auto [it, inserted] = chosen.emplace(t.researcher, &t);
    if (!inserted && stronger(t, *it->second)) it->second = &t;
  }

  std::map<std::pair<CategoryId, UnitKey>, std::vector<ResearcherId>> groups;
  for (const auto &[rid, t] : chosen) {
    UnitKey unit = unit_at_level(corpus.researcher(rid), cfg.unit_level);
    groups[{t->specialization, unit}].push_back(rid);
  }

  std::vector<TscCluster> out;
  for (auto &[key, members] : groups) {
    if (members.size() < static_cast<std::size_t>(cfg.min_cluster_size)) {
      continue;
    }
    out.push_back(TscCluster{key.second, key.first, std::move(members), 0.0});
  }
  return out;
}

std::vector<RankedCluster> select_coe(const CategoryId &category,
                                      std::vector<TscCluster> clusters,
                                      const PipelineConfig &cfg) {
  for (const auto &c : clusters) {
    if (c.category != category) {
      throw DomainError(fmt::format(
          "cluster at '{}' belongs to category '{}', not '{}'", c.unit.str(),
          c.category.str(), category.str()));
    }
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const TscCluster &a, const TscCluster &b) {
              if (a.fss != b.fss) return a.fss > b.fss;
              if (a.members.size() != b.members.size()) {
                return a.members.size() > b.members.size();
              }
              return a.unit < b.unit;
            });
  std::vector<RankedCluster> out;
  out.reserve(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    out.push_back(RankedCluster{std::move(clusters[i]), i + 1,
                                i < static_cast<std::size_t>(cfg.top_k)});
  }
  return out;
}

std::vector<const RankedCluster *> ExcellenceMap::clusters() const {
  std::vector<const RankedCluster *> out;
  for (const auto &[c, ranked] : rankings) {
    for (const auto &r : ranked) out.push_back(&r);
  }
  return out;
}

std::vector<const RankedCluster *> ExcellenceMap::centers() const {
  std::vector<const RankedCluster *> out;
  for (const auto *r : clusters()) {
    if (r->is_coe) out.push_back(r);
  }
  return out;
}

ExcellenceMap run_pipeline(const Corpus &corpus, const PipelineConfig &cfg,
                           unsigned workers) {
  cfg.validate();
  if (cfg.window != corpus.window()) {
    throw ConfigError(fmt::format(
        "config window {} differs from the corpus window {}", cfg.window.str(),
        corpus.window().str()));
  }

  ExcellenceMap map;
  map.config = cfg;
  map.authorships = resolve_mentions(corpus, workers);
  map.weights = WeightTable::compute(corpus, workers);
  map.scores = compute_scores(corpus, map.authorships, map.weights);

  const auto &areas = corpus.macro_areas();
  std::vector<std::vector<TopScientist>> per_area(areas.size());
  parallel_for(areas.size(), workers, [&](std::size_t i) {
    for (const auto &rid : top_scientists(areas[i], map.scores, cfg)) {
      Specialization s =
          specialization(rid, areas[i], map.authorships, corpus, map.weights);
      per_area[i].push_back(TopScientist{rid, areas[i],
                                         map.scores.ss(rid, areas[i]),
                                         s.category, s.count, s.weight});
    }
  });
  for (std::size_t i = 0; i < areas.size(); ++i) {
    if (map.scores.in_macro_area(areas[i]).empty()) {
      map.warnings.push_back(fmt::format(
          "macro-area '{}' has no scored researchers", areas[i].str()));
    }
    map.top_scientists.insert(map.top_scientists.end(), per_area[i].begin(),
                              per_area[i].end());
  }

  std::vector<TscCluster> clusters =
      cluster_top_scientists(map.top_scientists, cfg, corpus);
  parallel_for(clusters.size(), workers, [&](std::size_t i) {
    clusters[i].fss =
        fractional_strength(clusters[i].members, clusters[i].category,
                            cfg.fss_scope, map.authorships, corpus,
                            map.weights);
  });

  std::map<CategoryId, std::vector<TscCluster>> by_category;
  for (auto &c : clusters) by_category[c.category].push_back(std::move(c));
  for (auto &[cat, list] : by_category) {
    map.rankings.emplace(cat, select_coe(cat, std::move(list), cfg));
  }

  map.excluded = corpus.load_report().excluded;
  map.excluded.insert(map.excluded.end(), map.weights.excluded().begin(),
                      map.weights.excluded().end());
  std::sort(map.excluded.begin(), map.excluded.end());
  return map;
}

void write_tsc(std::ostream &os, const ExcellenceMap &map) {
  csv::write_row(os, {"category_id", "org_id", "site_id", "rank", "fss",
                      "is_coe", "member_ids"});
  for (const auto &[cat, ranked] : map.rankings) {
    for (const auto &r : ranked) {
      std::vector<std::string> ids;
      for (const auto &m : r.cluster.members) ids.push_back(m.str());
      csv::write_row(os, {cat.str(), r.cluster.unit.org.str(),
                          r.cluster.unit.site.str(), std::to_string(r.rank),
                          format_real(r.cluster.fss),
                          r.is_coe ? "true" : "false",
                          csv::join_escaped(ids, ';')});
    }
  }
}

void write_top_scientists(std::ostream &os, const ExcellenceMap &map) {
  std::vector<const TopScientist *> rows;
  for (const auto &t : map.top_scientists) rows.push_back(&t);
  std::sort(rows.begin(), rows.end(), [](const auto *a, const auto *b) {
    return std::tie(a->researcher, a->macro_area) <
           std::tie(b->researcher, b->macro_area);
  });
  csv::write_row(os, {"researcher_id", "macro_area_id", "ss",
                      "specialization_category"});
  for (const auto *t : rows) {
    csv::write_row(os, {t->researcher.str(), t->macro_area.str(),
                        format_real(t->ss), t->specialization.str()});
  }
}

}  // namespace coemap
