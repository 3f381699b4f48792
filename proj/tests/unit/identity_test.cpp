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

#include <sstream>

#include <gtest/gtest.h>

#include "coemap/error.hpp"
#include "coemap/text.hpp"
#include "fixtures.hpp"

namespace coemap {
namespace {

using testing::CorpusBuilder;

TEST(Text, FoldStripsMarksAndCase) {
  EXPECT_EQ(text::fold("Nicolò"), "nicolo");
  EXPECT_EQ(text::alnum_key("D'Angelo"), "dangelo");
  EXPECT_EQ(text::word_key("Univ. Bologna, Dept  Phys"), "univ bologna dept phys");
  EXPECT_EQ(text::first_code_point("émile"), "é");
  EXPECT_EQ(text::first_code_point(""), "");
}

TEST(NormalizeName, Examples) {
  EXPECT_EQ(normalize_name("D'Angelo", "CA"), (NameKey{"dangelo", "c"}));
  EXPECT_EQ(normalize_name("ROSSI", "M"), (NameKey{"rossi", "m"}));
  EXPECT_EQ(normalize_name("De Luca", "G.L."), (NameKey{"deluca", "g"}));
  EXPECT_EQ(normalize_name("Nicolò", "p"), normalize_name("NICOLO", "P"));
  EXPECT_EQ(normalize_name("Rossi", ""), (NameKey{"rossi", ""}));
}

TEST(NormalizeName, Idempotent) {
  for (auto [s, i] : {std::pair{"D'Angelo", "CA"}, {"Müller-Lüdenscheidt", "Ö"},
                      {"  van der Berg ", "j.-p."}}) {
    NameKey k = normalize_name(s, i);
    EXPECT_EQ(normalize_name(k.surname, k.first_initial), k);
  }
}

TEST(NormalizeName, EmptySurnameRejected) {
  EXPECT_THROW(normalize_name("", "M"), DomainError);
  EXPECT_THROW(normalize_name("'-", "M"), DomainError);
}

CorpusBuilder bologna() {
  CorpusBuilder b;
  b.category("C1", "M1")
      .journal("J1", {"C1"})
      .impact_all("J1", 1.0)
      .unit("UB", "", "University of Bologna")
      .alias("UB", "", "Univ Bologna")
      .unit("UP", "", "University of Padua", "R2", GeoMacroArea::kNorthEast)
      .alias("UP", "", "Univ Padua")
      .unit("CNR", "BA", "CNR Bari Research Area", "R3", GeoMacroArea::kSouth)
      .alias("CNR", "BA", "CNR Bari");
  return b;
}

TEST(MatchAffiliation, UniqueAliasMatch) {
  Corpus c = bologna().build();
  auto u = match_affiliation("Univ Bologna, Dept Phys, Bologna, Italy", c);
  ASSERT_TRUE(u);
  EXPECT_EQ(*u, (UnitKey{OrgId("UB"), SiteId()}));
  EXPECT_EQ(*match_affiliation("UNIVERSITY OF PADUA", c),
            (UnitKey{OrgId("UP"), SiteId()}));
}

TEST(MatchAffiliation, AmbiguousOrEmptyIsAbsent) {
  Corpus c = bologna().build();
  EXPECT_FALSE(match_affiliation("Univ Bologna and Univ Padua", c));
  EXPECT_FALSE(match_affiliation("", c));
  EXPECT_FALSE(match_affiliation("Univ Bolognas", c));  // whole words only
}

TEST(ResolveMentions, UniqueCandidateLinks) {
  auto b = bologna();
  b.researcher("R1", "Rossi", "M.", "UB")
      .publication("P1", 2001, "J1", {{"ROSSI", "M", std::nullopt}},
                   {"Univ Bologna"});
  Corpus c = b.build();
  AuthorshipTable t = resolve_mentions(c);
  EXPECT_EQ(t.links(), (std::vector<MentionLink>{
                           {PubId("P1"), 0, ResearcherId("R1")}}));
  EXPECT_TRUE(t.unresolved().empty());
}

TEST(ResolveMentions, AddressSelectsHomonym) {
  auto b = bologna();
  b.researcher("R1", "Rossi", "M.", "UB")
      .researcher("R2", "Rossi", "Mario", "UP")
      .publication("P1", 2001, "J1", {{"ROSSI", "M", std::nullopt}},
                   {"Dept Chem, Univ Padua"})
      .publication("P2", 2001, "J1",
                   {{"ROSSI", "M", 1}, {"Verdi", "A", 0}},
                   {"Univ Padua", "Univ Bologna"});
  Corpus c = b.build();
  AuthorshipTable t = resolve_mentions(c);
  EXPECT_EQ(t.links(),
            (std::vector<MentionLink>{{PubId("P1"), 0, ResearcherId("R2")},
                                      {PubId("P2"), 0, ResearcherId("R1")}}));
  ASSERT_EQ(t.unresolved().size(), 1u);
  EXPECT_EQ(t.unresolved()[0].reason, UnresolvedReason::kNoCandidate);
}

TEST(ResolveMentions, SameUnitHomonymsAreAmbiguousName) {
  auto b = bologna();
  b.researcher("R1", "Rossi", "M.", "UB")
      .researcher("R2", "Rossi", "M.", "UB")
      .publication("P1", 2001, "J1", {{"Rossi", "M", std::nullopt}},
                   {"Univ Bologna"});
  AuthorshipTable t = resolve_mentions(b.build());
  ASSERT_EQ(t.unresolved().size(), 1u);
  EXPECT_EQ(t.unresolved()[0].reason, UnresolvedReason::kAmbiguousName);
  EXPECT_TRUE(t.links().empty());
}

TEST(ResolveMentions, UnmatchedAddressesAreAmbiguousAffiliation) {
  auto b = bologna();
  b.researcher("R1", "Rossi", "M.", "UB")
      .researcher("R2", "Rossi", "M.", "UP")
      .publication("P1", 2001, "J1", {{"Rossi", "M", std::nullopt}},
                   {"Somewhere Else"})
      .publication("P2", 2001, "J1", {{"Rossi", "M", std::nullopt}},
                   {"Univ Bologna", "Univ Padua"});
  AuthorshipTable t = resolve_mentions(b.build());
  ASSERT_EQ(t.unresolved().size(), 2u);
  for (const auto &u : t.unresolved()) {
    EXPECT_EQ(u.reason, UnresolvedReason::kAmbiguousAffiliation);
  }
}

TEST(ResolveMentions, SiteResearcherMatchesOrgLevelRow) {
  CorpusBuilder b;
  b.category("C1", "M1")
      .journal("J1", {"C1"})
      .unit("CNR", "", "National Research Council")
      .alias("CNR", "", "CNR")
      .unit("CNR", "BA", "CNR Bari Area")
      .unit("UB", "", "Univ Bologna", "R2", GeoMacroArea::kNorthEast)
      .researcher("R1", "Rossi", "M.", "CNR", "BA")
      .researcher("R2", "Rossi", "M.", "UB")
      .publication("P1", 2001, "J1", {{"Rossi", "M", std::nullopt}},
                   {"CNR, Rome"});
  AuthorshipTable t = resolve_mentions(b.build());
  ASSERT_EQ(t.links().size(), 1u);
  EXPECT_EQ(t.links()[0].researcher, ResearcherId("R1"));
}

TEST(AuthorshipTable, IndexesAreDistinctAndSorted) {
  AuthorshipTable t(
      {{PubId("P2"), 1, ResearcherId("R1")},
       {PubId("P1"), 0, ResearcherId("R2")},
       {PubId("P2"), 0, ResearcherId("R1")}},
      {});
  auto pubs = t.publications_of(ResearcherId("R1"));
  EXPECT_EQ(std::vector<PubId>(pubs.begin(), pubs.end()),
            std::vector<PubId>{PubId("P2")});
  EXPECT_TRUE(t.publications_of(ResearcherId("R9")).empty());
  EXPECT_EQ(t.links().front().pub, PubId("P1"));
}

TEST(WriteUnresolved, Columns) {
  auto b = bologna();
  b.publication("P1", 2001, "J1", {{"Nobody", "Q", std::nullopt}}, {});
  Corpus c = b.build();
  std::ostringstream os;
  write_unresolved_mentions(os, resolve_mentions(c), c);
  EXPECT_EQ(os.str(),
            "pub_id,mention_index,surname,initials,reason\n"
            "P1,0,Nobody,Q,no_candidate\n");
}

TEST(ResolveMentions, TotalAndSoundOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Corpus c = Corpus::build(testing::random_corpus(seed), {2001, 2003});
    AuthorshipTable t = resolve_mentions(c);
    std::size_t mentions = 0;
    for (const auto &[id, p] : c.publications()) mentions += p.mentions.size();
    EXPECT_EQ(t.links().size() + t.unresolved().size(), mentions);
    for (const auto &l : t.links()) {
      const auto &m = c.publication(l.pub).mentions[l.mention_index];
      const auto &r = c.researcher(l.researcher);
      EXPECT_EQ(normalize_name(m.surname, m.initials),
                normalize_name(r.surname, r.initials));
    }
    EXPECT_EQ(resolve_mentions(c, 4), t);
  }
}

// Adding an alias never re-targets an existing link.
TEST(ResolveMentions, AliasMonotonicity) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CorpusData d = testing::random_corpus(seed);
    AuthorshipTable before = resolve_mentions(Corpus::build(d, {2001, 2003}));
    const auto &o = d.organizations.front();
    d.aliases.push_back({o.id, o.site, "Dept X"});
    AuthorshipTable after = resolve_mentions(Corpus::build(d, {2001, 2003}));
    for (const auto &l : before.links()) {
      auto it = std::find_if(after.links().begin(), after.links().end(),
                             [&](const MentionLink &x) {
                               return x.pub == l.pub &&
                                      x.mention_index == l.mention_index;
                             });
      if (it != after.links().end()) {
        EXPECT_EQ(it->researcher, l.researcher) << "seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace coemap
