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

#include "coemap/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "coemap/csv.hpp"
#include "coemap/error.hpp"
#include "coemap/text.hpp"

namespace coemap {

std::string YearRange::str() const { return fmt::format("{}-{}", first, last); }

YearRange YearRange::parse(std::string_view text) {
  auto parse_year = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
      throw ConfigError(fmt::format("invalid year range '{}'", text));
    }
    return v;
  };
  YearRange r;
  auto dash = text.find('-');
  if (dash == std::string_view::npos) {
    r.first = r.last = parse_year(text);
  } else {
    r.first = parse_year(text.substr(0, dash));
    r.last = parse_year(text.substr(dash + 1));
  }
  if (r.first > r.last) {
    throw ConfigError(fmt::format("invalid year range '{}': start after end",
                                  text));
  }
  return r;
}

std::string_view to_string(DocType t) {
  switch (t) {
    case DocType::kArticle: return "article";
    case DocType::kReview: return "review";
    case DocType::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(InstType t) {
  switch (t) {
    case InstType::kUniversity: return "university";
    case InstType::kPublicResearchLab: return "public_research_lab";
    case InstType::kResearchHospital: return "research_hospital";
  }
  return "university";
}

std::string_view to_string(GeoMacroArea g) {
  switch (g) {
    case GeoMacroArea::kNorthWest: return "north_west";
    case GeoMacroArea::kNorthEast: return "north_east";
    case GeoMacroArea::kCenter: return "center";
    case GeoMacroArea::kSouth: return "south";
  }
  return "north_west";
}

std::optional<DocType> parse_doc_type(std::string_view s) {
  if (s == "article") return DocType::kArticle;
  if (s == "review") return DocType::kReview;
  if (s == "other") return DocType::kOther;
  return std::nullopt;
}

std::optional<InstType> parse_inst_type(std::string_view s) {
  if (s == "university") return InstType::kUniversity;
  if (s == "public_research_lab") return InstType::kPublicResearchLab;
  if (s == "research_hospital") return InstType::kResearchHospital;
  return std::nullopt;
}

std::optional<GeoMacroArea> parse_geo_macro_area(std::string_view s) {
  if (s == "north_west") return GeoMacroArea::kNorthWest;
  if (s == "north_east") return GeoMacroArea::kNorthEast;
  if (s == "center") return GeoMacroArea::kCenter;
  if (s == "south") return GeoMacroArea::kSouth;
  return std::nullopt;
}

namespace {

template <typename Map, typename Key>
const auto &lookup(const Map &m, const Key &k, std::string_view what) {
  auto it = m.find(k);
  if (it == m.end()) {
    throw DomainError(fmt::format("unknown {} '{}'", what, k.str()));
  }
  return it->second;
}

}  // namespace

Corpus Corpus::build(CorpusData data, YearRange window) {
  Corpus c;
  c.window_ = window;

  for (auto &cat : data.categories) {
    if (cat.id.empty()) throw CorpusError("categories.csv: empty category_id");
    if (cat.macro_area.empty()) {
      throw CorpusError(fmt::format(
          "categories.csv: category '{}' has empty macro_area_id",
          cat.id.str()));
    }
    CategoryId id = cat.id;
    if (!c.categories_.emplace(id, std::move(cat)).second) {
      throw CorpusError(fmt::format(
          "categories.csv: duplicate category_id '{}'", id.str()));
    }
  }
  for (const auto &[id, cat] : c.categories_) {
    c.categories_by_macro_[cat.macro_area].push_back(id);
  }
  for (const auto &[m, cats] : c.categories_by_macro_) {
    c.macro_areas_.push_back(m);
  }

  for (auto &j : data.journals) {
    if (j.id.empty()) throw CorpusError("journals.csv: empty journal_id");
    std::sort(j.categories.begin(), j.categories.end());
    j.categories.erase(std::unique(j.categories.begin(), j.categories.end()),
                       j.categories.end());
    if (j.categories.empty()) {
      throw CorpusError(fmt::format(
          "journals.csv: journal '{}' has no categories", j.id.str()));
    }
    for (const auto &cat : j.categories) {
      if (!c.categories_.count(cat)) {
        throw CorpusError(fmt::format(
            "journals.csv: journal '{}' references unknown category '{}'",
            j.id.str(), cat.str()));
      }
    }
    JournalId id = j.id;
    if (!c.journals_.emplace(id, std::move(j)).second) {
      throw CorpusError(
          fmt::format("journals.csv: duplicate journal_id '{}'", id.str()));
    }
  }
  for (const auto &[id, j] : c.journals_) {
    for (const auto &cat : j.categories) {
      c.journals_by_category_[cat].push_back(id);
    }
  }

  for (const auto &e : data.impact_factors) {
    if (!c.journals_.count(e.journal)) {
      throw CorpusError(fmt::format(
          "impact_factors.csv: unknown journal '{}'", e.journal.str()));
    }
    if (!std::isfinite(e.value) || e.value < 0.0) {
      throw CorpusError(fmt::format(
          "impact_factors.csv: journal '{}' year {}: if_value must be a "
          "non-negative number",
          e.journal.str(), e.year));
    }
    if (!c.impact_factors_.emplace(std::pair(e.journal, e.year), e.value)
             .second) {
      throw CorpusError(fmt::format(
          "impact_factors.csv: duplicate entry for journal '{}' year {}",
          e.journal.str(), e.year));
    }
  }

  std::map<RegionId, GeoMacroArea> region_geo;
  for (auto &o : data.organizations) {
    if (o.id.empty()) throw CorpusError("organizations.csv: empty org_id");
    if (o.region.empty()) {
      throw CorpusError(fmt::format(
          "organizations.csv: unit '{}' has empty region", o.unit().str()));
    }
    auto [it, inserted] = region_geo.emplace(o.region, o.geo);
    if (!inserted && it->second != o.geo) {
      throw CorpusError(fmt::format(
          "organizations.csv: region '{}' mapped to both {} and {}",
          o.region.str(), to_string(it->second), to_string(o.geo)));
    }
    UnitKey key = o.unit();
    if (!c.organizations_.emplace(key, std::move(o)).second) {
      throw CorpusError(fmt::format(
          "organizations.csv: duplicate (org_id, site_id) '{}'", key.str()));
    }
  }
  for (const auto &[r, g] : region_geo) c.regions_.push_back(r);
  for (const auto &[key, o] : c.organizations_) {
    // std::map order puts the empty site first, so the first row seen is the
    // primary one.
    c.primary_unit_.emplace(key.org, key);
  }

  for (auto &a : data.aliases) {
    auto it = c.organizations_.find(UnitKey{a.org, a.site});
    if (it == c.organizations_.end()) {
      throw CorpusError(fmt::format(
          "org_aliases.csv: alias '{}' references unknown unit '{}'", a.alias,
          UnitKey{a.org, a.site}.str()));
    }
    it->second.aliases.push_back(std::move(a.alias));
  }
  for (auto &[key, o] : c.organizations_) {
    std::sort(o.aliases.begin(), o.aliases.end());
    o.aliases.erase(std::unique(o.aliases.begin(), o.aliases.end()),
                    o.aliases.end());
  }

  for (auto &r : data.researchers) {
    if (r.id.empty()) throw CorpusError("researchers.csv: empty researcher_id");
    if (text::alnum_key(r.surname).empty()) {
      throw CorpusError(fmt::format(
          "researchers.csv: researcher '{}' has an empty surname",
          r.id.str()));
    }
    if (!c.organizations_.count(r.unit())) {
      throw CorpusError(fmt::format(
          "researchers.csv: researcher '{}' references unknown unit '{}'",
          r.id.str(), r.unit().str()));
    }
    ResearcherId id = r.id;
    if (!c.researchers_.emplace(id, std::move(r)).second) {
      throw CorpusError(fmt::format(
          "researchers.csv: duplicate researcher_id '{}'", id.str()));
    }
  }

  std::set<PubId> seen;
  for (auto &p : data.publications) {
    if (p.id.empty()) throw CorpusError("publications.csv: empty pub_id");
    if (!seen.insert(p.id).second) {
      throw CorpusError(fmt::format(
          "publications.csv: duplicate pub_id '{}'", p.id.str()));
    }
    if (!c.journals_.count(p.journal)) {
      throw CorpusError(fmt::format(
          "publications.csv: publication '{}' references unknown journal '{}'",
          p.id.str(), p.journal.str()));
    }
    if (p.mentions.empty()) {
      throw CorpusError(fmt::format(
          "publications.csv: publication '{}' has no authors", p.id.str()));
    }
    for (std::size_t i = 0; i < p.mentions.size(); ++i) {
      const auto &m = p.mentions[i];
      if (text::alnum_key(m.surname).empty()) {
        throw CorpusError(fmt::format(
            "publications.csv: publication '{}' author {} has an empty "
            "surname",
            p.id.str(), i));
      }
      if (m.address_index && *m.address_index >= p.addresses.size()) {
        throw CorpusError(fmt::format(
            "publications.csv: publication '{}' author {} address_index {} "
            "out of range",
            p.id.str(), i, *m.address_index));
      }
    }
    if (!window.contains(p.year)) {
      ++c.report_.out_of_window;
      c.report_.excluded.push_back({p.id, "out_of_window"});
      continue;
    }
    if (p.doc_type == DocType::kOther) {
      ++c.report_.doc_type_other;
      c.report_.excluded.push_back({p.id, "doc_type_other"});
      continue;
    }
    PubId id = p.id;
    c.publications_.emplace(id, std::move(p));
  }
  std::sort(c.report_.excluded.begin(), c.report_.excluded.end());

  return c;
}

const Category &Corpus::category(const CategoryId &id) const {
  return lookup(categories_, id, "category");
}

const Journal &Corpus::journal(const JournalId &id) const {
  return lookup(journals_, id, "journal");
}

const Publication &Corpus::publication(const PubId &id) const {
  return lookup(publications_, id, "publication");
}

const Researcher &Corpus::researcher(const ResearcherId &id) const {
  return lookup(researchers_, id, "researcher");
}

const Organization &Corpus::organization(const UnitKey &unit) const {
  auto it = organizations_.find(unit);
  if (it != organizations_.end()) return it->second;
  if (unit.site.empty()) {
    auto p = primary_unit_.find(unit.org);
    if (p != primary_unit_.end()) return organizations_.at(p->second);
  }
  throw DomainError(fmt::format("unknown organization unit '{}'", unit.str()));
}

std::optional<double> Corpus::impact_factor(const JournalId &journal,
                                            int year) const {
  auto it = impact_factors_.find(std::pair(journal, year));
  if (it == impact_factors_.end()) return std::nullopt;
  return it->second;
}

const std::vector<CategoryId> &Corpus::categories_in(
    const MacroAreaId &m) const {
  static const std::vector<CategoryId> kEmpty;
  auto it = categories_by_macro_.find(m);
  return it == categories_by_macro_.end() ? kEmpty : it->second;
}

const std::vector<JournalId> &Corpus::journals_in(const CategoryId &c) const {
  static const std::vector<JournalId> kEmpty;
  auto it = journals_by_category_.find(c);
  return it == journals_by_category_.end() ? kEmpty : it->second;
}

const std::vector<std::string> &required_input_files() {
  static const std::vector<std::string> kFiles = {
      "categories.csv",    "journals.csv",    "impact_factors.csv",
      "organizations.csv", "researchers.csv", "publications.csv"};
  return kFiles;
}

namespace {

[[noreturn]] void bad_field(const csv::Table &t, const csv::Record &r,
                            std::string_view field, std::string_view why) {
  throw CorpusError(
      fmt::format("{} row {}, field {}: {}", t.name, r.row, field, why));
}

int parse_int_field(const csv::Table &t, const csv::Record &r,
                    std::size_t col, std::string_view field) {
  const std::string &s = r.fields[col];
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    bad_field(t, r, field, fmt::format("'{}' is not an integer", s));
  }
  return v;
}

double parse_real_field(const csv::Table &t, const csv::Record &r,
                        std::size_t col, std::string_view field) {
  const std::string &s = r.fields[col];
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() ||
      !std::isfinite(v)) {
    bad_field(t, r, field, fmt::format("'{}' is not a number", s));
  }
  if (v < 0) bad_field(t, r, field, "must be non-negative");
  return v;
}

void require_token(const csv::Table &t, const csv::Record &r,
                   std::size_t col, std::string_view field) {
  if (r.fields[col].empty()) bad_field(t, r, field, "empty token");
}

std::vector<AuthorMention> parse_authors(const csv::Table &t,
                                         const csv::Record &r,
                                         std::size_t col) {
  std::vector<AuthorMention> out;
  for (const auto &entry : csv::split_escaped(r.fields[col], ';')) {
    auto parts = csv::split_escaped(entry, '|');
    if (parts.size() < 2 || parts.size() > 3) {
      bad_field(t, r, "authors",
                fmt::format("'{}' is not surname|initials|address_index",
                            entry));
    }
    AuthorMention m;
    m.surname = parts[0];
    m.initials = parts[1];
    if (parts.size() == 3 && !parts[2].empty()) {
      std::size_t idx = 0;
      const std::string &s = parts[2];
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), idx);
      if (ec != std::errc() || p != s.data() + s.size()) {
        bad_field(t, r, "authors",
                  fmt::format("address_index '{}' is not an integer", s));
      }
      m.address_index = idx;
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

CorpusData read_corpus_data(const std::filesystem::path &input_dir) {
  std::vector<std::string> missing;
  for (const auto &f : required_input_files()) {
    if (!std::filesystem::is_regular_file(input_dir / f)) missing.push_back(f);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto &f : missing) list += (list.empty() ? "" : ", ") + f;
    throw CorpusError(fmt::format("missing input file(s) in {}: {}",
                                  input_dir.string(), list));
  }

  CorpusData d;

  auto t = csv::read_file(input_dir / "categories.csv");
  csv::require_columns(t, {"category_id", "name", "macro_area_id"});
  for (const auto &r : t.records) {
    require_token(t, r, 0, "category_id");
    require_token(t, r, 2, "macro_area_id");
    d.categories.push_back(
        {CategoryId(r.fields[0]), r.fields[1], MacroAreaId(r.fields[2])});
  }

  t = csv::read_file(input_dir / "journals.csv");
  csv::require_columns(t, {"journal_id", "name", "category_ids"});
  for (const auto &r : t.records) {
    require_token(t, r, 0, "journal_id");
    Journal j{JournalId(r.fields[0]), r.fields[1], {}};
    for (const auto &c : csv::split_escaped(r.fields[2], ';')) {
      if (c.empty()) bad_field(t, r, "category_ids", "empty category token");
      j.categories.emplace_back(c);
    }
    if (j.categories.empty()) bad_field(t, r, "category_ids", "empty list");
    d.journals.push_back(std::move(j));
  }

  t = csv::read_file(input_dir / "impact_factors.csv");
  csv::require_columns(t, {"journal_id", "year", "if_value"});
  for (const auto &r : t.records) {
    require_token(t, r, 0, "journal_id");
    d.impact_factors.push_back({JournalId(r.fields[0]),
                                parse_int_field(t, r, 1, "year"),
                                parse_real_field(t, r, 2, "if_value")});
  }

  t = csv::read_file(input_dir / "organizations.csv");
  csv::require_columns(
      t, {"org_id", "site_id", "name", "inst_type", "region", "geo_macro_area"});
  for (const auto &r : t.records) {
    require_token(t, r, 0, "org_id");
    require_token(t, r, 4, "region");
    auto inst = parse_inst_type(r.fields[3]);
    if (!inst) {
      bad_field(t, r, "inst_type",
                fmt::format("unknown institution type '{}'", r.fields[3]));
    }
    auto geo = parse_geo_macro_area(r.fields[5]);
    if (!geo) {
      bad_field(t, r, "geo_macro_area",
                fmt::format("unknown geographic macro-area '{}'", r.fields[5]));
    }
    d.organizations.push_back({OrgId(r.fields[0]), SiteId(r.fields[1]),
                               r.fields[2], *inst, RegionId(r.fields[4]), *geo,
                               {}});
  }

  if (std::filesystem::is_regular_file(input_dir / kAliasFile)) {
    t = csv::read_file(input_dir / kAliasFile);
    csv::require_columns(t, {"org_id", "site_id", "alias"});
    for (const auto &r : t.records) {
      require_token(t, r, 0, "org_id");
      if (r.fields[2].empty()) bad_field(t, r, "alias", "empty alias");
      d.aliases.push_back(
          {OrgId(r.fields[0]), SiteId(r.fields[1]), r.fields[2]});
    }
  }

  t = csv::read_file(input_dir / "researchers.csv");
  csv::require_columns(
      t, {"researcher_id", "surname", "initials", "org_id", "site_id"});
  for (const auto &r : t.records) {
    require_token(t, r, 0, "researcher_id");
    require_token(t, r, 3, "org_id");
    if (r.fields[1].empty()) bad_field(t, r, "surname", "empty surname");
    d.researchers.push_back({ResearcherId(r.fields[0]), r.fields[1],
                             r.fields[2], OrgId(r.fields[3]),
                             SiteId(r.fields[4])});
  }

  t = csv::read_file(input_dir / "publications.csv");
  csv::require_columns(t, {"pub_id", "year", "journal_id", "doc_type",
                           "authors", "addresses"});
  for (const auto &r : t.records) {
    require_token(t, r, 0, "pub_id");
    require_token(t, r, 2, "journal_id");
    Publication p;
    p.id = PubId(r.fields[0]);
    p.year = parse_int_field(t, r, 1, "year");
    p.journal = JournalId(r.fields[2]);
    auto dt = parse_doc_type(r.fields[3]);
    if (!dt) {
      bad_field(t, r, "doc_type",
                fmt::format("unknown doc_type '{}'", r.fields[3]));
    }
    p.doc_type = *dt;
    p.mentions = parse_authors(t, r, 4);
    if (p.mentions.empty()) bad_field(t, r, "authors", "no authors");
    p.addresses = csv::split_escaped(r.fields[5], ';');
    for (const auto &m : p.mentions) {
      if (m.address_index && *m.address_index >= p.addresses.size()) {
        bad_field(t, r, "authors",
                  fmt::format("address_index {} out of range (0..{})",
                              *m.address_index, p.addresses.size()));
      }
    }
    d.publications.push_back(std::move(p));
  }

  return d;
}

Corpus load_corpus(const std::filesystem::path &input_dir, YearRange window) {
  return Corpus::build(read_corpus_data(input_dir), window);
}

namespace {

std::ofstream open_out(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  return out;
}

std::string shortest_real(double v) {
  // Shortest representation that round-trips.
  return fmt::format("{}", v);
}

}  // namespace

void write_corpus_data(const CorpusData &data,
                       const std::filesystem::path &out_dir) {
  std::filesystem::create_directories(out_dir);

  auto out = open_out(out_dir / "categories.csv");
  csv::write_row(out, {"category_id", "name", "macro_area_id"});
  for (const auto &c : data.categories) {
    csv::write_row(out, {c.id.str(), c.name, c.macro_area.str()});
  }

  out = open_out(out_dir / "journals.csv");
  csv::write_row(out, {"journal_id", "name", "category_ids"});
  for (const auto &j : data.journals) {
    std::vector<std::string> cats;
    for (const auto &c : j.categories) cats.push_back(c.str());
    csv::write_row(out, {j.id.str(), j.name, csv::join_escaped(cats, ';')});
  }

  out = open_out(out_dir / "impact_factors.csv");
  csv::write_row(out, {"journal_id", "year", "if_value"});
  for (const auto &e : data.impact_factors) {
    csv::write_row(out, {e.journal.str(), std::to_string(e.year),
                         shortest_real(e.value)});
  }

  out = open_out(out_dir / "organizations.csv");
  csv::write_row(out, {"org_id", "site_id", "name", "inst_type", "region",
                       "geo_macro_area"});
  for (const auto &o : data.organizations) {
    csv::write_row(out, {o.id.str(), o.site.str(), o.name,
                         std::string(to_string(o.inst_type)), o.region.str(),
                         std::string(to_string(o.geo))});
  }

  if (!data.aliases.empty()) {
    out = open_out(out_dir / std::string(kAliasFile));
    csv::write_row(out, {"org_id", "site_id", "alias"});
    for (const auto &a : data.aliases) {
      csv::write_row(out, {a.org.str(), a.site.str(), a.alias});
    }
  }

  out = open_out(out_dir / "researchers.csv");
  csv::write_row(out,
                 {"researcher_id", "surname", "initials", "org_id", "site_id"});
  for (const auto &r : data.researchers) {
    csv::write_row(out, {r.id.str(), r.surname, r.initials, r.org.str(),
                         r.site.str()});
  }

  out = open_out(out_dir / "publications.csv");
  csv::write_row(out, {"pub_id", "year", "journal_id", "doc_type", "authors",
                       "addresses"});
  for (const auto &p : data.publications) {
    std::vector<std::string> authors;
    for (const auto &m : p.mentions) {
      std::vector<std::string> triple = {
          m.surname, m.initials,
          m.address_index ? std::to_string(*m.address_index) : ""};
      authors.push_back(csv::join_escaped(triple, '|'));
    }
    csv::write_row(out, {p.id.str(), std::to_string(p.year), p.journal.str(),
                         std::string(to_string(p.doc_type)),
                         csv::join_escaped(authors, ';'),
                         csv::join_escaped(p.addresses, ';')});
  }
}

const std::vector<CategoryId> &publication_categories(const Publication &pub,
                                                      const Corpus &corpus) {
  return corpus.journal(pub.journal).categories;
}

std::vector<MacroAreaId> publication_macro_areas(const Publication &pub,
                                                 const Corpus &corpus) {
  std::vector<MacroAreaId> out;
  for (const auto &c : publication_categories(pub, corpus)) {
    out.push_back(corpus.category(c).macro_area);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double compute_impact_factor(long long citations_to_prev2,
                             long long items_prev2) {
  if (items_prev2 <= 0) {
    throw DomainError(fmt::format(
        "impact factor undefined: {} items in the previous two years",
        items_prev2));
  }
  if (citations_to_prev2 < 0) {
    throw DomainError("impact factor undefined: negative citation count");
  }
  return static_cast<double>(citations_to_prev2) /
         static_cast<double>(items_prev2);
}

}  // namespace coemap
