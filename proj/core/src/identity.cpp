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

#include "coemap/identity.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "coemap/csv.hpp"
#include "coemap/error.hpp"
#include "coemap/parallel.hpp"
#include "coemap/text.hpp"

namespace coemap {

NameKey normalize_name(std::string_view surname, std::string_view initials) {
  NameKey key;
  key.surname = text::alnum_key(surname);
  if (key.surname.empty()) {
    throw DomainError(fmt::format("surname '{}' is empty after normalization",
                                  surname));
  }
  key.first_initial = text::first_code_point(text::alnum_key(initials));
  return key;
}

AffiliationIndex::AffiliationIndex(const Corpus &corpus) {
  for (const auto &[unit, org] : corpus.organizations()) {
    std::set<std::string> seen;
    auto add = [&](std::string_view raw) {
      std::string p = text::word_key(raw);
      if (p.empty() || !seen.insert(p).second) return;
      by_first_word_[p.substr(0, p.find(' '))].push_back(patterns_.size());
      patterns_.emplace_back(std::move(p), unit);
    };
    add(org.name);
    for (const auto &a : org.aliases) add(a);
  }
}

std::vector<UnitKey> AffiliationIndex::matching_units(
    std::string_view raw) const {
  std::vector<UnitKey> out;
  const std::string hay = text::word_key(raw);
  // word_key leaves single-space-separated words, so every match starts at a
  // word boundary and only patterns led by that word can occur there.
  for (std::size_t at = 0; at < hay.size();) {
    std::size_t end = std::min(hay.find(' ', at), hay.size());
    auto it = by_first_word_.find(std::string_view(hay).substr(at, end - at));
    if (it != by_first_word_.end()) {
      for (std::size_t i : it->second) {
        const auto &[pattern, unit] = patterns_[i];
        std::size_t stop = at + pattern.size();
        if (hay.compare(at, pattern.size(), pattern) == 0 &&
            (stop == hay.size() || hay[stop] == ' ')) {
          out.push_back(unit);
        }
      }
    }
    at = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<UnitKey> match_affiliation(std::string_view raw,
                                         const AffiliationIndex &index) {
  auto units = index.matching_units(raw);
  if (units.size() != 1) return std::nullopt;
  return units.front();
}

std::optional<UnitKey> match_affiliation(std::string_view raw,
                                         const Corpus &corpus) {
  return match_affiliation(raw, AffiliationIndex(corpus));
}

std::string_view to_string(UnresolvedReason r) {
  switch (r) {
    case UnresolvedReason::kNoCandidate: return "no_candidate";
    case UnresolvedReason::kAmbiguousName: return "ambiguous_name";
    case UnresolvedReason::kAmbiguousAffiliation:
      return "ambiguous_affiliation";
  }
  return "no_candidate";
}

AuthorshipTable::AuthorshipTable(std::vector<MentionLink> links,
                                 std::vector<UnresolvedMention> unresolved)
    : links_(std::move(links)), unresolved_(std::move(unresolved)) {
  std::sort(links_.begin(), links_.end());
  std::sort(unresolved_.begin(), unresolved_.end());
  for (const auto &l : links_) {
    by_researcher_[l.researcher].push_back(l.pub);
    by_pub_[l.pub].push_back(l.researcher);
  }
  for (auto &[r, pubs] : by_researcher_) {
    std::sort(pubs.begin(), pubs.end());
    pubs.erase(std::unique(pubs.begin(), pubs.end()), pubs.end());
  }
  for (auto &[p, rs] : by_pub_) {
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  }
}

std::span<const PubId> AuthorshipTable::publications_of(
    const ResearcherId &r) const {
  auto it = by_researcher_.find(r);
  if (it == by_researcher_.end()) return {};
  return it->second;
}

std::span<const ResearcherId> AuthorshipTable::researchers_of(
    const PubId &p) const {
  auto it = by_pub_.find(p);
  if (it == by_pub_.end()) return {};
  return it->second;
}

namespace {

struct PubResolution {
  std::vector<MentionLink> links;
  std::vector<UnresolvedMention> unresolved;
};

bool unit_matches(const Researcher &r, const std::vector<UnitKey> &matched) {
  auto has = [&](const UnitKey &u) {
    return std::binary_search(matched.begin(), matched.end(), u);
  };
  return has(r.unit()) || (!r.site.empty() && has(UnitKey{r.org, SiteId()}));
}

}  // namespace

AuthorshipTable resolve_mentions(const Corpus &corpus, unsigned workers) {
  std::map<NameKey, std::vector<const Researcher *>> registry;
  for (const auto &[id, r] : corpus.researchers()) {
    registry[normalize_name(r.surname, r.initials)].push_back(&r);
  }
  const AffiliationIndex index(corpus);

  std::vector<const Publication *> pubs;
  pubs.reserve(corpus.publications().size());
  for (const auto &[id, p] : corpus.publications()) pubs.push_back(&p);

  std::vector<PubResolution> results(pubs.size());
  parallel_for(pubs.size(), workers, [&](std::size_t i) {
    const Publication &pub = *pubs[i];
    // Address matching is only needed for homonyms, so it is done lazily.
    std::vector<std::optional<std::vector<UnitKey>>> per_address(
        pub.addresses.size());
    std::optional<std::vector<UnitKey>> all_units;
    auto address_units = [&](std::size_t a) -> const std::vector<UnitKey> & {
      if (!per_address[a]) per_address[a] = index.matching_units(pub.addresses[a]);
      return *per_address[a];
    };
    auto pub_units = [&]() -> const std::vector<UnitKey> & {
      if (!all_units) {
        all_units.emplace();
        for (std::size_t a = 0; a < pub.addresses.size(); ++a) {
          const auto &u = address_units(a);
          all_units->insert(all_units->end(), u.begin(), u.end());
        }
        std::sort(all_units->begin(), all_units->end());
        all_units->erase(std::unique(all_units->begin(), all_units->end()),
                         all_units->end());
      }
      return *all_units;
    };

    PubResolution &out = results[i];
    for (std::size_t m = 0; m < pub.mentions.size(); ++m) {
      const AuthorMention &mention = pub.mentions[m];
      auto it = registry.find(normalize_name(mention.surname, mention.initials));
      if (it == registry.end()) {
        out.unresolved.push_back(
            {pub.id, m, UnresolvedReason::kNoCandidate});
        continue;
      }
      const auto &candidates = it->second;
      if (candidates.size() == 1) {
        out.links.push_back({pub.id, m, candidates.front()->id});
        continue;
      }

      const std::vector<UnitKey> &matched =
          mention.address_index ? address_units(*mention.address_index)
                                : pub_units();
      std::vector<const Researcher *> hits;
      for (const Researcher *c : candidates) {
        if (unit_matches(*c, matched)) hits.push_back(c);
      }
      if (hits.size() == 1) {
        out.links.push_back({pub.id, m, hits.front()->id});
        continue;
      }
      const auto &remaining = hits.empty() ? candidates : hits;
      bool one_unit = std::all_of(
          remaining.begin(), remaining.end(), [&](const Researcher *c) {
            return c->unit() == remaining.front()->unit();
          });
      out.unresolved.push_back({pub.id, m,
                                one_unit
                                    ? UnresolvedReason::kAmbiguousName
                                    : UnresolvedReason::kAmbiguousAffiliation});
    }
  });

  std::vector<MentionLink> links;
  std::vector<UnresolvedMention> unresolved;
  for (auto &r : results) {
    links.insert(links.end(), r.links.begin(), r.links.end());
    unresolved.insert(unresolved.end(), r.unresolved.begin(),
                      r.unresolved.end());
  }
  return AuthorshipTable(std::move(links), std::move(unresolved));
}

void write_unresolved_mentions(std::ostream &os, const AuthorshipTable &table,
                               const Corpus &corpus) {
  csv::write_row(os, {"pub_id", "mention_index", "surname", "initials",
                      "reason"});
  for (const auto &u : table.unresolved()) {
    const AuthorMention &m = corpus.publication(u.pub).mentions[u.mention_index];
    csv::write_row(os, {u.pub.str(), std::to_string(u.mention_index),
                        m.surname, m.initials,
                        std::string(to_string(u.reason))});
  }
}

}  // namespace coemap
