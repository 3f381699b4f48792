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

#include "fixtures.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "coemap/scoring.hpp"

namespace coemap::testing {

CorpusBuilder &CorpusBuilder::category(const std::string &id,
                                       const std::string &macro) {
  data_.categories.push_back({CategoryId(id), "Category " + id, MacroAreaId(macro)});
  return *this;
}

CorpusBuilder &CorpusBuilder::journal(const std::string &id,
                                      const std::vector<std::string> &categories) {
  Journal j{JournalId(id), "Journal " + id, {}};
  for (const auto &c : categories) j.categories.emplace_back(c);
  data_.journals.push_back(std::move(j));
  return *this;
}

CorpusBuilder &CorpusBuilder::impact(const std::string &journal, int year,
                                     double value) {
  data_.impact_factors.push_back({JournalId(journal), year, value});
  return *this;
}

CorpusBuilder &CorpusBuilder::impact_all(const std::string &journal,
                                         double value) {
  for (int y = 2001; y <= 2003; ++y) impact(journal, y, value);
  return *this;
}

CorpusBuilder &CorpusBuilder::unit(const std::string &org,
                                   const std::string &site,
                                   const std::string &name,
                                   const std::string &region, GeoMacroArea geo,
                                   InstType type) {
  data_.organizations.push_back(Organization{OrgId(org), SiteId(site), name,
                                             type, RegionId(region), geo, {}});
  return *this;
}

CorpusBuilder &CorpusBuilder::alias(const std::string &org,
                                    const std::string &site,
                                    const std::string &alias) {
  data_.aliases.push_back({OrgId(org), SiteId(site), alias});
  return *this;
}

CorpusBuilder &CorpusBuilder::researcher(const std::string &id,
                                         const std::string &surname,
                                         const std::string &initials,
                                         const std::string &org,
                                         const std::string &site) {
  data_.researchers.push_back(
      {ResearcherId(id), surname, initials, OrgId(org), SiteId(site)});
  return *this;
}

CorpusBuilder &CorpusBuilder::publication(const std::string &id, int year,
                                          const std::string &journal,
                                          std::vector<AuthorMention> mentions,
                                          std::vector<std::string> addresses,
                                          DocType type) {
  data_.publications.push_back(Publication{PubId(id), year, JournalId(journal),
                                           type, std::move(mentions),
                                           std::move(addresses)});
  return *this;
}

CorpusBuilder &CorpusBuilder::authored(const std::string &id, int year,
                                       const std::string &journal,
                                       const std::vector<std::string> &researchers,
                                       int unknown) {
  std::vector<AuthorMention> mentions;
  for (const auto &rid : researchers) {
    auto it = std::find_if(
        data_.researchers.begin(), data_.researchers.end(),
        [&](const Researcher &r) { return r.id.str() == rid; });
    if (it == data_.researchers.end()) {
      throw std::logic_error("authored: unknown researcher " + rid);
    }
    mentions.push_back({it->surname, it->initials, std::nullopt});
  }
  for (int i = 0; i < unknown; ++i) {
    mentions.push_back({fmt::format("Outsider{}", i), "X", std::nullopt});
  }
  return publication(id, year, journal, std::move(mentions));
}

Corpus CorpusBuilder::build(YearRange window) const {
  return Corpus::build(data_, window);
}

namespace {

std::size_t below(std::mt19937_64 &g, std::size_t n) { return g() % n; }
double unit_real(std::mt19937_64 &g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}
template <typename T>
void shuffle(std::vector<T> &v, std::mt19937_64 &g) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(g, i)]);
}

}  // namespace

CorpusData random_corpus(std::uint64_t seed, const RandomSpec &spec) {
  std::mt19937_64 g(seed);
  CorpusBuilder b;

  int macros = 2 + static_cast<int>(below(g, 2));
  std::vector<std::vector<std::string>> cats(macros);
  std::vector<std::string> all_cats;
  for (int m = 0; m < macros; ++m) {
    int n = 1 + static_cast<int>(below(g, 3));
    for (int c = 0; c < n; ++c) {
      std::string id = fmt::format("C{}{}", m + 1, c + 1);
      b.category(id, fmt::format("M{}", m + 1));
      cats[m].push_back(id);
      all_cats.push_back(id);
    }
  }

  std::vector<std::string> journals;
  auto add_journal = [&](const std::vector<std::string> &cs) {
    std::string id = fmt::format("J{:02}", journals.size() + 1);
    b.journal(id, cs);
    journals.push_back(id);
    for (int y = 2001; y <= 2003; ++y) {
      double r = unit_real(g);
      if (r < 0.1) continue;  // missing year
      double v = r < 0.14 ? 0.0 : std::round((0.5 + 4.5 * unit_real(g)) * 100) / 100;
      b.impact(id, y, v);
    }
  };
  for (const auto &c : all_cats) {
    int n = 1 + static_cast<int>(below(g, 2));
    for (int k = 0; k < n; ++k) add_journal({c});
  }
  for (int m = 0; m < macros; ++m) {
    if (cats[m].size() >= 2 && unit_real(g) < 0.6) add_journal({cats[m][0], cats[m][1]});
  }
  if (unit_real(g) < 0.4) add_journal({cats[0][0], cats[1][0]});

  static const char *kCities[] = {"Alfa", "Bravo", "Charlie", "Delta",
                                  "Echo", "Foxtrot", "Golf", "Hotel"};
  static const GeoMacroArea kGeo[] = {GeoMacroArea::kNorthWest,
                                      GeoMacroArea::kNorthEast,
                                      GeoMacroArea::kCenter};
  struct U {
    std::string org, site, alias;
  };
  std::vector<U> units;
  int orgs = 3 + static_cast<int>(below(g, 3));
  int city = 0;
  for (int o = 0; o < orgs; ++o) {
    std::string org = fmt::format("O{}", o + 1);
    int sites = o == 0 && unit_real(g) < 0.5 ? 2 : 1;
    for (int s = 0; s < sites; ++s) {
      std::string site = sites > 1 ? fmt::format("S{}", s + 1) : "";
      std::string name = std::string("Institute ") + kCities[city];
      std::string alias = std::string("Inst ") + kCities[city];
      ++city;
      int r = static_cast<int>(below(g, 3));
      b.unit(org, site, name, fmt::format("R{}", r + 1), kGeo[r],
             static_cast<InstType>(below(g, 3)));
      b.alias(org, site, alias);
      units.push_back({org, site, alias});
    }
  }

  static const char *kSurnames[] = {"Rossi",  "Bianchi", "Verdi", "Neri",
                                    "Gallo",  "Conti",   "De Luca", "Costa",
                                    "Nicolò", "Ricci",   "Marino", "Greco",
                                    "D'Angelo", "Bruno", "Colombo", "Sala"};
  static const char *kLetters = "ABCDE";
  struct R {
    std::string id, surname, initials;
    std::size_t unit;
  };
  std::vector<R> people;
  std::set<std::pair<std::string, char>> used;
  int n_people = 6 + static_cast<int>(below(g, 11));
  for (int i = 0; i < n_people; ++i) {
    R r;
    r.id = fmt::format("R{:02}", i + 1);
    r.unit = below(g, units.size());
    if (spec.homonyms && !people.empty() && unit_real(g) < 0.2) {
      const R &twin = people[below(g, people.size())];
      r.surname = twin.surname;
      r.initials = twin.initials;
    } else {
      for (;;) {
        std::string s = kSurnames[below(g, 16)];
        char l = kLetters[below(g, 5)];
        if (used.emplace(s, l).second) {
          r.surname = s;
          r.initials = std::string(1, l) + ".";
          break;
        }
      }
    }
    b.researcher(r.id, r.surname, r.initials, units[r.unit].org,
                 units[r.unit].site);
    people.push_back(r);
  }

  int n_pubs = 1 + static_cast<int>(below(g, spec.max_publications));
  for (int p = 0; p < n_pubs; ++p) {
    int year = 2001 + static_cast<int>(below(g, 3));
    DocType type = DocType::kArticle;
    double r = unit_real(g);
    if (r < 0.03) year = 2000;
    else if (r < 0.06) type = DocType::kOther;
    else if (r < 0.2) type = DocType::kReview;

    std::vector<std::size_t> authors;
    int n = 1 + static_cast<int>(below(g, 4));
    for (int k = 0; k < n; ++k) {
      std::size_t a = below(g, people.size());
      if (std::find(authors.begin(), authors.end(), a) == authors.end()) {
        authors.push_back(a);
      }
    }
    std::vector<AuthorMention> mentions;
    std::vector<std::string> addresses;
    for (std::size_t a : authors) {
      const R &who = people[a];
      AuthorMention m{who.surname, who.initials, std::nullopt};
      std::string addr = "Dept X, " + units[who.unit].alias;
      auto it = std::find(addresses.begin(), addresses.end(), addr);
      std::size_t idx = it - addresses.begin();
      if (it == addresses.end()) addresses.push_back(addr);
      if (unit_real(g) < 0.5) m.address_index = idx;
      mentions.push_back(std::move(m));
    }
    if (unit_real(g) < 0.25) mentions.push_back({"Stranger", "Z", std::nullopt});
    shuffle(mentions, g);
    b.publication(fmt::format("P{:03}", p + 1), year,
                  journals[below(g, journals.size())], std::move(mentions),
                  std::move(addresses), type);
  }
  return b.data();
}

CorpusData permuted(CorpusData d, std::uint64_t seed, bool lists) {
  std::mt19937_64 g(seed);
  shuffle(d.categories, g);
  shuffle(d.journals, g);
  if (lists) {
    for (auto &j : d.journals) shuffle(j.categories, g);
  }
  shuffle(d.impact_factors, g);
  shuffle(d.organizations, g);
  shuffle(d.aliases, g);
  shuffle(d.researchers, g);
  shuffle(d.publications, g);
  return d;
}

void scale_category(CorpusData &data, const CategoryId &category, double c) {
  std::set<CategoryId> comp{category};
  std::set<JournalId> journals;
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto &j : data.journals) {
      bool touches = std::any_of(j.categories.begin(), j.categories.end(),
                                 [&](const auto &x) { return comp.count(x); });
      if (!touches) continue;
      grew |= journals.insert(j.id).second;
      for (const auto &x : j.categories) grew |= comp.insert(x).second;
    }
  }
  for (auto &e : data.impact_factors) {
    if (journals.count(e.journal)) e.value *= c;
  }
}

std::filesystem::path temp_dir(const std::string &tag) {
  static std::atomic<int> counter{0};
  auto p = std::filesystem::temp_directory_path() /
           fmt::format("coemap_{}_{}_{}", tag, ::getpid(), counter++);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

std::map<std::string, std::string> read_tree(const std::filesystem::path &dir) {
  std::map<std::string, std::string> out;
  for (const auto &e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    out[std::filesystem::relative(e.path(), dir).string()] = ss.str();
  }
  return out;
}

std::map<std::string, std::string> export_map(const ExcellenceMap &map) {
  std::ostringstream tsc, top, scores;
  write_tsc(tsc, map);
  write_top_scientists(top, map);
  write_scores(scores, map.scores);
  return {{"tsc.csv", tsc.str()},
          {"top_scientists.csv", top.str()},
          {"scores.csv", scores.str()}};
}

}  // namespace coemap::testing
