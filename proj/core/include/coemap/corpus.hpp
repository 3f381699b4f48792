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

// Data model of a bibliographic corpus and its CSV loader.
//
// A Corpus is built once from CorpusData, validated for referential
// integrity, and immutable afterwards. All collections are keyed by token so
// iteration order is canonical regardless of input row order.

#ifndef COEMAP_CORPUS_HPP_
#define COEMAP_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coemap/ids.hpp"

namespace coemap {

struct YearRange {
  int first = 2001;
  int last = 2003;

  bool contains(int year) const { return year >= first && year <= last; }
  std::string str() const;
  // Parses "A-B" (or a single year "A"); throws ConfigError.
  static YearRange parse(std::string_view text);

  friend bool operator==(const YearRange &, const YearRange &) = default;
};

enum class DocType { kArticle, kReview, kOther };
enum class InstType { kUniversity, kPublicResearchLab, kResearchHospital };
enum class GeoMacroArea { kNorthWest, kNorthEast, kCenter, kSouth };

std::string_view to_string(DocType t);
std::string_view to_string(InstType t);
std::string_view to_string(GeoMacroArea g);
std::optional<DocType> parse_doc_type(std::string_view s);
std::optional<InstType> parse_inst_type(std::string_view s);
std::optional<GeoMacroArea> parse_geo_macro_area(std::string_view s);

struct Category {
  CategoryId id;
  std::string name;
  MacroAreaId macro_area;
};

struct Journal {
  JournalId id;
  std::string name;
  std::vector<CategoryId> categories;  // sorted, unique after build
};

struct ImpactFactorEntry {
  JournalId journal;
  int year = 0;
  double value = 0.0;
};

struct AuthorMention {
  std::string surname;
  std::string initials;
  std::optional<std::size_t> address_index;  // 0-based into addresses
};

struct Publication {
  PubId id;
  int year = 0;
  JournalId journal;
  DocType doc_type = DocType::kArticle;
  std::vector<AuthorMention> mentions;
  std::vector<std::string> addresses;
};

struct Organization {
  OrgId id;
  SiteId site;  // empty for a single-site organization
  std::string name;
  InstType inst_type = InstType::kUniversity;
  RegionId region;
  GeoMacroArea geo = GeoMacroArea::kNorthWest;
  std::vector<std::string> aliases;  // sorted, unique after build

  UnitKey unit() const { return {id, site}; }
};

struct OrgAlias {
  OrgId org;
  SiteId site;
  std::string alias;
};

struct Researcher {
  ResearcherId id;
  std::string surname;
  std::string initials;
  OrgId org;
  SiteId site;

  UnitKey unit() const { return {org, site}; }
};

// Raw collections as read from input files, in any order.
struct CorpusData {
  std::vector<Category> categories;
  std::vector<Journal> journals;
  std::vector<ImpactFactorEntry> impact_factors;
  std::vector<Organization> organizations;
  std::vector<OrgAlias> aliases;
  std::vector<Researcher> researchers;
  std::vector<Publication> publications;
};

struct ExcludedPublication {
  PubId pub;
  std::string reason;

  friend auto operator<=>(const ExcludedPublication &,
                          const ExcludedPublication &) = default;
  friend bool operator==(const ExcludedPublication &,
                         const ExcludedPublication &) = default;
};

struct LoadReport {
  std::size_t out_of_window = 0;
  std::size_t doc_type_other = 0;
  std::vector<ExcludedPublication> excluded;  // sorted by pub id
};

class Corpus {
 public:
  // Validates and canonicalizes `data`. Publications outside `window` or with
  // doc_type other are dropped and recorded in load_report(). Throws
  // CorpusError on duplicate tokens, dangling references, or invariant
  // violations.
  static Corpus build(CorpusData data, YearRange window);

  const YearRange &window() const { return window_; }
  const LoadReport &load_report() const { return report_; }

  const std::map<CategoryId, Category> &categories() const {
    return categories_;
  }
  const std::map<JournalId, Journal> &journals() const { return journals_; }
  const std::map<UnitKey, Organization> &organizations() const {
    return organizations_;
  }
  const std::map<ResearcherId, Researcher> &researchers() const {
    return researchers_;
  }
  const std::map<PubId, Publication> &publications() const {
    return publications_;
  }
  std::size_t impact_factor_count() const { return impact_factors_.size(); }
  const std::map<std::pair<JournalId, int>, double> &impact_factors() const {
    return impact_factors_;
  }

  const Category &category(const CategoryId &id) const;
  const Journal &journal(const JournalId &id) const;
  const Publication &publication(const PubId &id) const;
  const Researcher &researcher(const ResearcherId &id) const;

  // The registry row for a unit. An org-level key (empty site) that has no
  // row of its own resolves to the organization's primary row: the one with
  // empty site if any, else the smallest site token.
  const Organization &organization(const UnitKey &unit) const;

  std::optional<double> impact_factor(const JournalId &journal,
                                      int year) const;

  // Sorted macro-area tokens of the category scheme.
  const std::vector<MacroAreaId> &macro_areas() const { return macro_areas_; }
  const std::vector<CategoryId> &categories_in(const MacroAreaId &m) const;
  const std::vector<JournalId> &journals_in(const CategoryId &c) const;
  // Sorted distinct region tokens of the organization registry.
  const std::vector<RegionId> &regions() const { return regions_; }

 private:
  Corpus() = default;

  YearRange window_;
  LoadReport report_;
  std::map<CategoryId, Category> categories_;
  std::map<JournalId, Journal> journals_;
  std::map<std::pair<JournalId, int>, double> impact_factors_;
  std::map<UnitKey, Organization> organizations_;
  std::map<ResearcherId, Researcher> researchers_;
  std::map<PubId, Publication> publications_;
  std::vector<MacroAreaId> macro_areas_;
  std::map<MacroAreaId, std::vector<CategoryId>> categories_by_macro_;
  std::map<CategoryId, std::vector<JournalId>> journals_by_category_;
  std::map<OrgId, UnitKey> primary_unit_;
  std::vector<RegionId> regions_;
};

// Names of the six required input files, in documentation order.
const std::vector<std::string> &required_input_files();
inline constexpr std::string_view kAliasFile = "org_aliases.csv";

// Reads the six input files (plus org_aliases.csv when present) from
// `input_dir` into CorpusData. Throws CorpusError listing every missing file,
// or naming file, row and field of a malformed value.
CorpusData read_corpus_data(const std::filesystem::path &input_dir);

// read_corpus_data followed by Corpus::build.
Corpus load_corpus(const std::filesystem::path &input_dir, YearRange window);

// Writes `data` in the documented input formats (rows in the given order).
// org_aliases.csv is written only when data.aliases is non-empty.
void write_corpus_data(const CorpusData &data,
                       const std::filesystem::path &out_dir);

// The journal's category set. A publication counts once in each category and
// once in each macro-area it touches.
const std::vector<CategoryId> &publication_categories(const Publication &pub,
                                                      const Corpus &corpus);

// Macro-areas touched by the publication's categories, sorted.
std::vector<MacroAreaId> publication_macro_areas(const Publication &pub,
                                                 const Corpus &corpus);

// Impact factor from raw counts: citations in a year to items of the two
// previous years, divided by the number of those items. Throws DomainError
// when items_prev2 is zero.
double compute_impact_factor(long long citations_to_prev2,
                             long long items_prev2);

}  // namespace coemap

#endif  // COEMAP_CORPUS_HPP_
