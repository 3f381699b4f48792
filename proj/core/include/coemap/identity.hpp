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

// Resolution of byline mentions ("ROSSI M") to registered researchers.
//
// Bylines carry only a surname and initials, and addresses are not linked to
// authors. A mention is linked when its name key selects exactly one
// registered researcher, or when the publication's addresses single out one
// of several homonyms. Anything else goes to the unresolved ledger with a
// reason code; ambiguity is never broken by guessing.

#ifndef COEMAP_IDENTITY_HPP_
#define COEMAP_IDENTITY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coemap/corpus.hpp"
#include "coemap/ids.hpp"

namespace coemap {

struct NameKey {
  std::string surname;        // folded, diacritics and punctuation removed
  std::string first_initial;  // one folded code point, or empty

  friend auto operator<=>(const NameKey &, const NameKey &) = default;
  friend bool operator==(const NameKey &, const NameKey &) = default;
};

// Throws DomainError if the surname has no letters or digits.
NameKey normalize_name(std::string_view surname, std::string_view initials);

// Matches raw affiliation strings against unit names and aliases. A pattern
// matches when its word sequence occurs in the address as whole words,
// case-insensitively and ignoring diacritics and punctuation.
class AffiliationIndex {
 public:
  explicit AffiliationIndex(const Corpus &corpus);

  // Every unit with at least one matching pattern, sorted.
  std::vector<UnitKey> matching_units(std::string_view raw) const;

 private:
  std::vector<std::pair<std::string, UnitKey>> patterns_;
  // Pattern indexes keyed by the pattern's first word.
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_first_word_;
};

// The unique matching unit, or nullopt when zero or several units match.
std::optional<UnitKey> match_affiliation(std::string_view raw,
                                         const AffiliationIndex &index);
std::optional<UnitKey> match_affiliation(std::string_view raw,
                                         const Corpus &corpus);

enum class UnresolvedReason { kNoCandidate, kAmbiguousName, kAmbiguousAffiliation };
std::string_view to_string(UnresolvedReason r);

struct MentionLink {
  PubId pub;
  std::size_t mention_index = 0;
  ResearcherId researcher;

  friend auto operator<=>(const MentionLink &, const MentionLink &) = default;
  friend bool operator==(const MentionLink &, const MentionLink &) = default;
};

struct UnresolvedMention {
  PubId pub;
  std::size_t mention_index = 0;
  UnresolvedReason reason = UnresolvedReason::kNoCandidate;

  friend auto operator<=>(const UnresolvedMention &,
                          const UnresolvedMention &) = default;
  friend bool operator==(const UnresolvedMention &,
                         const UnresolvedMention &) = default;
};

class AuthorshipTable {
 public:
  AuthorshipTable() = default;
  // Sorts both lists; builds the per-researcher and per-publication indexes.
  AuthorshipTable(std::vector<MentionLink> links,
                  std::vector<UnresolvedMention> unresolved);

  const std::vector<MentionLink> &links() const { return links_; }
  const std::vector<UnresolvedMention> &unresolved() const {
    return unresolved_;
  }

  // Distinct publications linked to the researcher, sorted by pub id.
  std::span<const PubId> publications_of(const ResearcherId &r) const;
  // Distinct researchers linked to the publication, sorted.
  std::span<const ResearcherId> researchers_of(const PubId &p) const;

  friend bool operator==(const AuthorshipTable &a, const AuthorshipTable &b) {
    return a.links_ == b.links_ && a.unresolved_ == b.unresolved_;
  }

 private:
  std::vector<MentionLink> links_;
  std::vector<UnresolvedMention> unresolved_;
  std::map<ResearcherId, std::vector<PubId>> by_researcher_;
  std::map<PubId, std::vector<ResearcherId>> by_pub_;
};

// Links every mention of every publication in the corpus. Publications are
// processed independently on up to `workers` threads; the result does not
// depend on the worker count.
AuthorshipTable resolve_mentions(const Corpus &corpus, unsigned workers = 1);

// unresolved_mentions.csv: pub_id,mention_index,surname,initials,reason
void write_unresolved_mentions(std::ostream &os, const AuthorshipTable &table,
                               const Corpus &corpus);

}  // namespace coemap

#endif  // COEMAP_IDENTITY_HPP_
