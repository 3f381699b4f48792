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

#include "coemap/cli/synth.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>

#include <fmt/format.h>

#include "coemap/csv.hpp"
#include "coemap/error.hpp"

namespace coemap::cli {
namespace {

constexpr int kBackgroundPerUnitCategory = 3;
constexpr int kMaxBackgroundAuthorships = 15;

// mt19937_64 is fully specified by the standard; the std distributions are
// not, so draws are derived here to keep corpora identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::size_t below(std::size_t n) { return gen_() % n; }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  bool chance(double p) { return uniform(0.0, 1.0) < p; }
  template <typename T>
  const T &pick(const std::vector<T> &v) {
    return v[below(v.size())];
  }
  template <typename T>
  void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

const std::vector<std::string> kNameSyllables = {
    "ba", "ce", "di", "fo", "gu", "la", "me", "ni", "po", "ru",
    "sa", "te", "vi", "zo", "ma", "ri", "lo", "ne", "ca", "to"};
// Disjoint letters from kNameSyllables, so external names never collide.
const std::vector<std::string> kForeignSyllables = {"ka", "we", "yo", "ki",
                                                    "wu", "ky", "ha", "jo"};
const std::vector<std::string> kCitySyllables = {
    "al", "ve", "na", "tor", "bel", "mon", "sar", "ri", "cor", "len", "dra"};
const std::string kInitials = "ABCDEFGILMNOPRSTV";

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(s[0]));
  return s;
}

std::string upper(std::string s) {
  for (char &c : s) c = static_cast<char>(std::toupper(c));
  return s;
}

std::string word(Rng &rng, const std::vector<std::string> &syllables,
                 int count) {
  std::string s;
  for (int i = 0; i < count; ++i) s += rng.pick(syllables);
  return capitalize(s);
}

// "Nicolo" -> "Nicolò" for vowel-final names.
std::string accent_last(const std::string &ascii) {
  static const std::map<char, std::string> kAccented = {
      {'a', "à"}, {'e', "è"}, {'i', "ì"}, {'o', "ò"}};
  auto it = kAccented.find(ascii.back());
  if (it == kAccented.end()) return ascii;
  return ascii.substr(0, ascii.size() - 1) + it->second;
}

struct Person {
  std::string surname;        // registry form, may carry diacritics
  std::string byline;         // uppercase ASCII, as printed on papers
  std::string initials;       // registry form, "G." or "G.L."
  std::string byline_initials;
  UnitKey unit;
  CategoryId home;
  bool planted = false;
  ResearcherId id;
};

struct Unit {
  UnitKey key;
  std::string alias;
};

void check(bool ok, const std::string &what) {
  if (!ok) throw ConfigError("infeasible synth spec: " + what);
}

void validate_spec(const SynthSpec &s) {
  check(s.researchers >= 1, "researchers must be >= 1");
  check(s.publications >= 1, "publications must be >= 1");
  check(s.macro_areas >= 1, "macro-areas must be >= 1");
  check(s.categories_per_macro >= 1, "categories per macro-area must be >= 1");
  check(s.journals_per_category >= 1, "journals per category must be >= 1");
  check(s.organizations >= 1, "organizations must be >= 1");
  check(s.planted >= 0, "planted count must be >= 0");
  check(s.planted == 0 || s.planted_size >= 1, "planted size must be >= 1");
  check(s.planted == 0 || s.planted_publications >= 1,
        "planted publications must be >= 1");
  check(s.window.first <= s.window.last, "empty year window");
  check(s.planted <= s.macro_areas,
        fmt::format("{} planted clusters need {} macro-areas, have {}",
                    s.planted, s.planted, s.macro_areas));
  check(static_cast<long long>(s.planted) * s.planted_size <= s.researchers,
        fmt::format("planted size {} x {} exceeds {} researchers",
                    s.planted_size, s.planted, s.researchers));
}

}  // namespace

SynthCorpus synthesize(const SynthSpec &spec) {
  validate_spec(spec);
  Rng rng(spec.seed);
  SynthCorpus out;
  CorpusData &d = out.data;

  // Taxonomy.
  std::vector<MacroAreaId> macros;
  std::vector<std::vector<CategoryId>> cats_of(spec.macro_areas);
  std::map<CategoryId, std::string> cat_name;
  for (int m = 0; m < spec.macro_areas; ++m) {
    macros.emplace_back(fmt::format("M{}", m + 1));
    for (int c = 0; c < spec.categories_per_macro; ++c) {
      CategoryId id(fmt::format("C{}{:02}", m + 1, c + 1));
      std::string name = fmt::format("Category {}.{}", m + 1, c + 1);
      d.categories.push_back({id, name, macros.back()});
      cats_of[m].push_back(id);
      cat_name[id] = name;
    }
  }

  // Organizations. Cities are unique so aliases never overlap.
  std::set<std::string> used_cities;
  auto city = [&] {
    for (;;) {
      std::string c = word(rng, kCitySyllables, 2 + static_cast<int>(rng.below(2)));
      if (used_cities.insert(c).second) return c;
    }
  };
  static const GeoMacroArea kGeo[] = {GeoMacroArea::kNorthWest,
                                      GeoMacroArea::kNorthEast,
                                      GeoMacroArea::kCenter, GeoMacroArea::kSouth,
                                      GeoMacroArea::kSouth};
  std::vector<Unit> units;
  auto add_unit = [&](const OrgId &org, const SiteId &site, std::string name,
                      std::string alias, InstType type) {
    std::size_t r = units.size() % 5;
    d.organizations.push_back(Organization{org, site, std::move(name), type,
                                           RegionId(fmt::format("R{:02}", r + 1)),
                                           kGeo[r], {}});
    d.aliases.push_back({org, site, alias});
    units.push_back({UnitKey{org, site}, alias});
  };
  for (int o = 0; o < spec.organizations; ++o) {
    OrgId org(fmt::format("O{:02}", o + 1));
    if (o == 0) {
      for (int s = 0; s < 3; ++s) {
        std::string c = city();
        add_unit(org, SiteId(fmt::format("S{}", s + 1)),
                 "National Research Council " + c, "CNR " + c,
                 InstType::kPublicResearchLab);
      }
      continue;
    }
    std::string c = city();
    if (o % 5 == 4) {
      add_unit(org, SiteId(), c + " General Hospital", "Osp " + c,
               InstType::kResearchHospital);
    } else {
      add_unit(org, SiteId(), "University of " + c, "Univ " + c,
               InstType::kUniversity);
    }
  }
  std::map<OrgId, std::vector<UnitKey>> sites_of;
  for (const auto &u : units) sites_of[u.key.org].push_back(u.key);
  std::map<UnitKey, std::string> alias_of;
  for (const auto &u : units) alias_of[u.key] = u.alias;

  // Planted groups: distinct macro-areas, distinct units.
  check(static_cast<std::size_t>(spec.planted) <= units.size(),
        fmt::format("{} planted clusters need {} units, have {}", spec.planted,
                    spec.planted, units.size()));
  std::vector<int> macro_order(spec.macro_areas);
  for (int m = 0; m < spec.macro_areas; ++m) macro_order[m] = m;
  rng.shuffle(macro_order);
  std::vector<std::size_t> unit_order(units.size());
  for (std::size_t u = 0; u < units.size(); ++u) unit_order[u] = u;
  rng.shuffle(unit_order);
  std::set<std::pair<OrgId, CategoryId>> blocked;
  for (int p = 0; p < spec.planted; ++p) {
    const auto &cats = cats_of[macro_order[p]];
    PlantedCluster pc{cats[rng.below(cats.size())],
                      units[unit_order[p]].key, {}};
    blocked.emplace(pc.unit.org, pc.category);
    out.planted.push_back(std::move(pc));
  }

  // Journals and impact factors.
  int journal_seq = 0;
  auto new_journal = [&](std::vector<CategoryId> cats, const std::string &name) {
    JournalId id(fmt::format("J{:03}", ++journal_seq));
    d.journals.push_back({id, name, std::move(cats)});
    return id;
  };
  auto add_if = [&](const JournalId &j, double lo, double hi, bool skip_last) {
    for (int y = spec.window.first; y <= spec.window.last; ++y) {
      if (skip_last && y == spec.window.last && y != spec.window.first) continue;
      double v = std::round(rng.uniform(lo, hi) * 1000.0) / 1000.0;
      d.impact_factors.push_back({j, y, v});
    }
  };
  std::map<CategoryId, std::vector<JournalId>> single_of, any_of;
  for (int m = 0; m < spec.macro_areas; ++m) {
    for (const auto &c : cats_of[m]) {
      for (int k = 0; k < spec.journals_per_category; ++k) {
        JournalId j = new_journal({c}, fmt::format("Journal of {} {}",
                                                   cat_name[c], k + 1));
        // One journal lacks its last year and falls back to the year before.
        add_if(j, 1.0, 2.0, journal_seq == 1);
        single_of[c].push_back(j);
        any_of[c].push_back(j);
      }
    }
    if (cats_of[m].size() >= 2) {
      const CategoryId &a = cats_of[m][0], &b = cats_of[m][1];
      JournalId j = new_journal(
          {a, b}, fmt::format("Letters in {} and {}", cat_name[a], cat_name[b]));
      add_if(j, 1.0, 2.0, false);
      any_of[a].push_back(j);
      any_of[b].push_back(j);
    }
  }
  std::map<CategoryId, JournalId> flagship;
  for (const auto &pc : out.planted) {
    JournalId j = new_journal({pc.category},
                              fmt::format("Annals of {}", cat_name[pc.category]));
    add_if(j, 4.0, 4.5, false);
    flagship[pc.category] = j;
  }
  std::optional<std::pair<JournalId, CategoryId>> no_if;
  for (const auto &cats : cats_of) {
    for (const auto &c : cats) {
      if (!no_if && !flagship.count(c)) {
        no_if.emplace(new_journal({c}, fmt::format("Bulletin of {}", cat_name[c])),
                      c);
      }
    }
  }

  // People. Name keys (ASCII surname, first initial) are unique.
  std::set<std::pair<std::string, char>> used_names;
  auto make_person = [&](const UnitKey &unit, const CategoryId &home,
                         bool planted) {
    for (;;) {
      std::string ascii =
          word(rng, kNameSyllables, 2 + static_cast<int>(rng.below(2)));
      char first = kInitials[rng.below(kInitials.size())];
      std::string lower = ascii;
      lower[0] = static_cast<char>(std::tolower(lower[0]));
      if (!used_names.emplace(lower, first).second) continue;
      Person p;
      p.surname = rng.chance(0.15) ? accent_last(ascii) : ascii;
      p.byline = upper(ascii);
      p.initials = fmt::format("{}.", first);
      p.byline_initials = std::string(1, first);
      if (rng.chance(0.3)) {
        char second = kInitials[rng.below(kInitials.size())];
        p.initials += fmt::format("{}.", second);
        p.byline_initials += second;
      }
      p.unit = unit;
      p.home = home;
      p.planted = planted;
      return p;
    }
  };

  std::vector<Person> people;
  for (const auto &pc : out.planted) {
    for (int i = 0; i < spec.planted_size; ++i) {
      people.push_back(make_person(pc.unit, pc.category, true));
    }
  }
  const int background =
      spec.researchers - spec.planted * spec.planted_size;
  std::vector<std::pair<OrgId, CategoryId>> slots;
  for (const auto &[org, sites] : sites_of) {
    for (const auto &cats : cats_of) {
      for (const auto &c : cats) {
        if (blocked.count({org, c})) continue;
        for (int k = 0; k < kBackgroundPerUnitCategory; ++k) slots.emplace_back(org, c);
      }
    }
  }
  check(static_cast<std::size_t>(background) <= slots.size(),
        fmt::format("{} background researchers exceed the capacity of {} "
                    "(at most {} per organization and category)",
                    background, slots.size(), kBackgroundPerUnitCategory));
  rng.shuffle(slots);
  for (int i = 0; i < background; ++i) {
    const auto &[org, cat] = slots[i];
    people.push_back(make_person(rng.pick(sites_of[org]), cat, false));
  }

  std::vector<std::size_t> id_order(people.size());
  for (std::size_t i = 0; i < people.size(); ++i) id_order[i] = i;
  rng.shuffle(id_order);
  for (std::size_t n = 0; n < id_order.size(); ++n) {
    people[id_order[n]].id = ResearcherId(fmt::format("R{:04}", n + 1));
  }
  for (std::size_t n = 0; n < id_order.size(); ++n) {
    const Person &p = people[id_order[n]];
    d.researchers.push_back(
        {p.id, p.surname, p.initials, p.unit.org, p.unit.site});
  }
  {
    std::size_t next = 0;
    for (auto &pc : out.planted) {
      for (int i = 0; i < spec.planted_size; ++i) {
        pc.members.push_back(people[next++].id);
      }
      std::sort(pc.members.begin(), pc.members.end());
    }
  }

  // Publications.
  const int planted_pubs = spec.planted * spec.planted_publications;
  const int n_other = spec.publications / 20;
  const int n_out_of_window = spec.publications / 100;
  const int n_no_if = no_if && background > 0 ? std::max(1, spec.publications / 200) : 0;
  const int core =
      spec.publications - planted_pubs - n_other - n_out_of_window - n_no_if;
  check(core >= background,
        fmt::format("{} publications leave {} regular papers for {} background "
                    "researchers, each of whom needs one",
                    spec.publications, std::max(core, 0), background));

  std::vector<std::size_t> bg;  // indexes into people
  std::map<CategoryId, std::vector<std::size_t>> bg_by_home;
  for (std::size_t i = 0; i < people.size(); ++i) {
    if (people[i].planted) continue;
    bg.push_back(i);
    bg_by_home[people[i].home].push_back(i);
  }
  std::vector<int> load(people.size(), 0);

  struct Author {
    const Person *person = nullptr;  // null for an external author
    std::string surname, initials, address;
  };
  auto external = [&] {
    Author a;
    a.surname = upper(word(rng, kForeignSyllables, 3));
    a.initials = std::string(1, kInitials[rng.below(kInitials.size())]);
    if (rng.chance(0.5)) {
      a.address = word(rng, kForeignSyllables, 2) + " University, Abroad";
    }
    return a;
  };
  auto registered = [&](std::size_t i) {
    Author a;
    a.person = &people[i];
    a.surname = people[i].byline;
    a.initials = people[i].byline_initials;
    a.address = fmt::format("Dept of {}, {}", cat_name[people[i].home],
                            alias_of[people[i].unit]);
    return a;
  };
  auto random_year = [&] {
    return spec.window.first +
           static_cast<int>(rng.below(spec.window.last - spec.window.first + 1));
  };

  std::vector<Publication> pubs;
  auto emit = [&](const std::vector<Author> &authors, const JournalId &j,
                  int year, DocType type) {
    Publication p;
    p.year = year;
    p.journal = j;
    p.doc_type = type;
    for (const Author &a : authors) {
      AuthorMention m{a.surname, a.initials, std::nullopt};
      if (!a.address.empty()) {
        auto it = std::find(p.addresses.begin(), p.addresses.end(), a.address);
        std::size_t idx = it - p.addresses.begin();
        if (it == p.addresses.end()) p.addresses.push_back(a.address);
        if (rng.chance(0.5)) m.address_index = idx;
      }
      p.mentions.push_back(std::move(m));
    }
    pubs.push_back(std::move(p));
  };
  // Up to `max` distinct coauthors sharing `lead`'s home category.
  auto coauthors = [&](std::size_t lead, int max, bool count) {
    std::vector<std::size_t> out_idx;
    const auto &pool = bg_by_home[people[lead].home];
    int want = static_cast<int>(rng.below(max + 1));
    for (int tries = 0; tries < 4 * want && static_cast<int>(out_idx.size()) < want;
         ++tries) {
      std::size_t c = rng.pick(pool);
      if (c == lead || std::count(out_idx.begin(), out_idx.end(), c)) continue;
      if (count && load[c] >= kMaxBackgroundAuthorships) continue;
      out_idx.push_back(c);
    }
    if (count) {
      for (std::size_t c : out_idx) ++load[c];
    }
    return out_idx;
  };
  auto byline = [&](std::size_t lead, const std::vector<std::size_t> &co) {
    std::vector<Author> authors{registered(lead)};
    for (std::size_t c : co) authors.push_back(registered(c));
    return authors;
  };

  // Every background researcher leads one plain article in a home journal.
  for (std::size_t i : bg) {
    ++load[i];
    auto co = coauthors(i, 2, true);
    emit(byline(i, co), rng.pick(single_of[people[i].home]), random_year(),
         DocType::kArticle);
  }
  for (int n = background; n < core; ++n) {
    std::vector<std::size_t> open;
    for (std::size_t i : bg) {
      if (load[i] < kMaxBackgroundAuthorships) open.push_back(i);
    }
    if (open.empty()) break;
    std::size_t lead = rng.pick(open);
    ++load[lead];
    auto co = coauthors(lead, 2, true);
    emit(byline(lead, co), rng.pick(any_of[people[lead].home]), random_year(),
         rng.chance(0.1) ? DocType::kReview : DocType::kArticle);
  }

  for (const auto &pc : out.planted) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < people.size(); ++i) {
      if (people[i].planted && people[i].unit == pc.unit &&
          people[i].home == pc.category) {
        members.push_back(i);
      }
    }
    for (int n = 0; n < spec.planted_publications; ++n) {
      std::vector<Author> authors;
      for (std::size_t i : members) authors.push_back(registered(i));
      int ext = static_cast<int>(rng.below(3));
      for (int e = 0; e < ext; ++e) authors.push_back(external());
      rng.shuffle(authors);
      emit(authors, flagship[pc.category], random_year(), DocType::kArticle);
    }
  }

  // Papers the loader or the scorer must set aside.
  if (!bg.empty()) {
    for (int n = 0; n < n_other; ++n) {
      std::size_t lead = rng.pick(bg);
      emit(byline(lead, coauthors(lead, 1, false)),
           rng.pick(single_of[people[lead].home]), random_year(),
           DocType::kOther);
    }
    for (int n = 0; n < n_out_of_window; ++n) {
      std::size_t lead = rng.pick(bg);
      int year = rng.chance(0.5) ? spec.window.first - 1 : spec.window.last + 1;
      emit(byline(lead, coauthors(lead, 1, false)),
           rng.pick(single_of[people[lead].home]), year, DocType::kArticle);
    }
    for (int n = 0; n < n_no_if; ++n) {
      const auto &pool = bg_by_home.count(no_if->second)
                             ? bg_by_home[no_if->second]
                             : bg;
      std::size_t lead = rng.pick(pool);
      emit(byline(lead, {}), no_if->first, random_year(), DocType::kArticle);
    }
  }

  rng.shuffle(pubs);
  for (std::size_t n = 0; n < pubs.size(); ++n) {
    pubs[n].id = PubId(fmt::format("P{:05}", n + 1));
  }
  d.publications = std::move(pubs);
  std::sort(out.planted.begin(), out.planted.end(),
            [](const auto &a, const auto &b) { return a.category < b.category; });
  return out;
}

void write_planted(std::ostream &os,
                   const std::vector<PlantedCluster> &planted) {
  csv::write_row(os, {"category_id", "org_id", "site_id", "member_ids"});
  for (const auto &pc : planted) {
    std::vector<std::string> ids;
    for (const auto &m : pc.members) ids.push_back(m.str());
    csv::write_row(os, {pc.category.str(), pc.unit.org.str(),
                        pc.unit.site.str(), csv::join_escaped(ids, ';')});
  }
}

}  // namespace coemap::cli
