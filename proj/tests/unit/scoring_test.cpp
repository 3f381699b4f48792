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

#include <sstream>

#include <gtest/gtest.h>

#include "coemap/error.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace coemap {
namespace {

using testing::CorpusBuilder;

const PubId kP1("P1");
const MacroAreaId kM1("M1");

CorpusBuilder base() {
  CorpusBuilder b;
  b.category("A", "M1")
      .category("B", "M1")
      .category("X", "M2")
      .unit("O1", "", "Institute Alfa")
      .researcher("R1", "Rossi", "M.", "O1")
      .researcher("R2", "Verdi", "A.", "O1")
      .researcher("R3", "Neri", "G.", "O1");
  return b;
}

TEST(CategoryMeanIf, MeansOverPresentEntries) {
  auto b = base();
  b.journal("J1", {"A"}).journal("J2", {"A"}).journal("J3", {"A"})
      .impact("J1", 2001, 1.0).impact("J2", 2001, 3.0)
      .impact("J1", 2002, 2.0).impact("J2", 2002, 4.0)
      .journal("J4", {"B"}).impact("J4", 2001, 2.5);
  Corpus c = b.build();
  EXPECT_DOUBLE_EQ(category_mean_if(CategoryId("A"), 2001, c), 2.0);
  EXPECT_DOUBLE_EQ(category_mean_if(CategoryId("B"), 2001, c), 2.5);
  EXPECT_DOUBLE_EQ(category_mean_if(CategoryId("A"), 2002, c), 3.0);
}

TEST(CategoryMeanIf, UndefinedNamesCategoryAndYear) {
  auto b = base();
  b.journal("J1", {"A"}).impact("J1", 2001, 0.0);
  Corpus c = b.build();
  for (int year : {2001, 2002}) {
    try {
      category_mean_if(CategoryId("A"), year, c);
      FAIL();
    } catch (const DomainError &e) {
      EXPECT_NE(std::string(e.what()).find("'A'"), std::string::npos);
      EXPECT_NE(std::string(e.what()).find(std::to_string(year)),
                std::string::npos);
    }
  }
}

TEST(NormalizedWeight, JournalAtCategoryAverage) {
  auto b = base();
  b.journal("J1", {"A"}).impact("J1", 2001, 2.0).authored("P1", 2001, "J1", {"R1"});
  Corpus c = b.build();
  EXPECT_DOUBLE_EQ(normalized_weight(c.publication(kP1), kM1, c), 1.0);
}

TEST(NormalizedWeight, MultiCategoryAveragesRatios) {
  // J1 (IF 4) sits in A and B; A's mean is 2, B's mean is 8.
  auto b = base();
  b.journal("J1", {"A", "B"})
      .journal("J2", {"A"})
      .journal("J3", {"B"})
      .impact("J1", 2001, 4.0)
      .impact("J2", 2001, 0.0)
      .impact("J3", 2001, 12.0)
      .authored("P1", 2001, "J1", {"R1"});
  Corpus c = b.build();
  EXPECT_DOUBLE_EQ(normalized_weight(c.publication(kP1), kM1, c), 1.25);
}

TEST(NormalizedWeight, ZeroImpactIsZero) {
  auto b = base();
  b.journal("J1", {"A"}).impact("J1", 2001, 0.0).authored("P1", 2001, "J1", {"R1"});
  Corpus c = b.build();
  EXPECT_EQ(normalized_weight(c.publication(kP1), kM1, c), 0.0);
}

TEST(NormalizedWeight, OutsideMacroAreaAndMissingIfFail) {
  auto b = base();
  b.journal("J1", {"A"}).journal("J2", {"A"}).impact("J1", 2001, 1.0)
      .authored("P1", 2001, "J1", {"R1"})
      .authored("P2", 2001, "J2", {"R1"});
  Corpus c = b.build();
  EXPECT_THROW(normalized_weight(c.publication(kP1), MacroAreaId("M2"), c),
               DomainError);
  EXPECT_THROW(normalized_weight(c.publication(PubId("P2")), kM1, c),
               DomainError);
}

TEST(ReferenceYear, FallsBackToNearestEarlierYearInWindow) {
  auto b = base();
  b.journal("J1", {"A"}).impact("J1", 2001, 1.0).impact("J1", 2000, 5.0)
      .authored("P1", 2003, "J1", {"R1"})
      .authored("P2", 2001, "J1", {"R1"})
      .journal("J2", {"A"}).impact("J2", 2003, 1.0)
      .authored("P3", 2002, "J2", {"R1"});
  Corpus c = b.build();
  EXPECT_EQ(reference_year(c.publication(kP1), c), 2001);
  EXPECT_EQ(reference_year(c.publication(PubId("P2")), c), 2001);
  EXPECT_EQ(reference_year(c.publication(PubId("P3")), c), std::nullopt);
}

TEST(WeightTable, MissingIfExcludedWithReason) {
  auto b = base();
  b.journal("J1", {"A"}).journal("J2", {"B"}).impact("J1", 2001, 1.0)
      .authored("P1", 2001, "J1", {"R1"})
      .authored("P2", 2001, "J2", {"R1"});
  Corpus c = b.build();
  WeightTable w = WeightTable::compute(c);
  EXPECT_EQ(w.excluded(),
            (std::vector<ExcludedPublication>{{PubId("P2"), "missing_if"}}));
  EXPECT_EQ(w.weight(kP1, kM1), 1.0);
  EXPECT_FALSE(w.weight(PubId("P2"), kM1));
}

CorpusBuilder weighted() {
  // Category A has mean 2.0 in both 2001 and 2002.
  auto b = base();
  b.journal("J1", {"A"}).journal("J2", {"A"}).journal("J3", {"A"})
      .impact("J1", 2001, 2.0).impact("J2", 2001, 1.0).impact("J3", 2001, 3.0)
      .impact("J1", 2002, 1.0).impact("J2", 2002, 0.5).impact("J3", 2002, 4.5);
  return b;
}

TEST(ScientificStrength, Examples) {
  auto b = weighted();
  // 2001 mean 2.0: J1 -> 1.0. 2002 mean 2.0: J2 -> 0.25, J3 -> 2.25.
  b.authored("P1", 2001, "J1", {"R1"})
      .authored("P2", 2001, "J1", {"R2"})
      .authored("P3", 2002, "J3", {"R2"})
      .authored("P4", 2002, "J2", {"R2", "R1"});
  Corpus c = b.build();
  AuthorshipTable a = resolve_mentions(c);
  EXPECT_DOUBLE_EQ(scientific_strength(ResearcherId("R1"), kM1, a, c), 1.25);
  EXPECT_DOUBLE_EQ(scientific_strength(ResearcherId("R2"), kM1, a, c), 3.5);
  EXPECT_EQ(scientific_strength(ResearcherId("R3"), kM1, a, c), 0.0);
  EXPECT_EQ(scientific_strength(ResearcherId("R1"), MacroAreaId("M2"), a, c), 0.0);
  ScoreTable s = compute_scores(c, a, WeightTable::compute(c));
  EXPECT_EQ(s.ss(ResearcherId("R2"), kM1),
            scientific_strength(ResearcherId("R2"), kM1, a, c));
  EXPECT_FALSE(s.contains(ResearcherId("R3"), kM1));
}

TEST(ScientificStrength, MatchesBruteForceSum) {
  auto b = base();
  b.journal("J1", {"A"}).journal("J2", {"A"}).journal("J3", {"A"})
      .impact_all("J1", 2.0).impact_all("J2", 1.0).impact_all("J3", 5.0)
      .journal("JB", {"B"}).impact_all("JB", 1.0)
      .authored("P1", 2001, "J1", {"R1"})
      .authored("P2", 2002, "J2", {"R1"})
      .authored("P3", 2003, "J3", {"R1"});
  Corpus c = b.build();
  AuthorshipTable a = resolve_mentions(c);
  // Category A mean is 8/3 each year; weights 0.75, 0.375, 1.875.
  double ss = scientific_strength(ResearcherId("R1"), kM1, a, c);
  EXPECT_NEAR(ss, testing::oracle_ss(c, a, ResearcherId("R1"), kM1), 1e-15);
  EXPECT_NEAR(ss, 3.0, 1e-12);
}

TEST(FractionalStrength, SoleAuthorGetsFullWeight) {
  auto b = weighted();
  b.authored("P1", 2001, "J1", {"R1"});
  Corpus c = b.build();
  AuthorshipTable a = resolve_mentions(c);
  std::vector<ResearcherId> members{ResearcherId("R1")};
  EXPECT_DOUBLE_EQ(fractional_strength(members, CategoryId("A"),
                                       FssScope::kCategory, a, c),
                   1.0);
}

TEST(FractionalStrength, SharedPaperCountedOnce) {
  auto b = base();
  b.journal("J1", {"A"}).journal("J2", {"A"})
      .impact("J1", 2001, 3.0).impact("J2", 2001, 1.0)
      .authored("P1", 2001, "J1", {"R1", "R2", "R3"});
  Corpus c = b.build();
  AuthorshipTable a = resolve_mentions(c);
  std::vector<ResearcherId> xy{ResearcherId("R1"), ResearcherId("R2")};
  double fss = fractional_strength(xy, CategoryId("A"), FssScope::kCategory, a, c);
  EXPECT_DOUBLE_EQ(fss, 1.0);  // 1.5 * 2 / 3
  EXPECT_NEAR(fss,
              testing::oracle_fss_per_member(c, a, xy, CategoryId("A"),
                                             FssScope::kCategory),
              1e-12);
}

TEST(FractionalStrength, UnresolvedMentionsCountInByline) {
  auto b = weighted();
  b.authored("P1", 2001, "J1", {"R1"}, 1);
  Corpus c = b.build();
  AuthorshipTable a = resolve_mentions(c);
  std::vector<ResearcherId> r1{ResearcherId("R1")};
  EXPECT_DOUBLE_EQ(
      fractional_strength(r1, CategoryId("A"), FssScope::kCategory, a, c), 0.5);

  // Resolving the outsider to a non-member leaves FSS unchanged.
  b.researcher("R9", "Outsider0", "X.", "O1");
  Corpus c2 = b.build();
  AuthorshipTable a2 = resolve_mentions(c2);
  EXPECT_DOUBLE_EQ(
      fractional_strength(r1, CategoryId("A"), FssScope::kCategory, a2, c2),
      0.5);
}

TEST(FractionalStrength, ScopeAllIncludesSiblingCategories) {
  auto b = base();
  b.journal("JA", {"A"}).journal("JB", {"B"}).journal("JX", {"X"})
      .impact_all("JA", 1.0).impact_all("JB", 1.0).impact_all("JX", 1.0)
      .authored("P1", 2001, "JA", {"R1"})
      .authored("P2", 2001, "JB", {"R1"})
      .authored("P3", 2001, "JX", {"R1"});
  Corpus c = b.build();
  AuthorshipTable a = resolve_mentions(c);
  std::vector<ResearcherId> r1{ResearcherId("R1")};
  EXPECT_DOUBLE_EQ(
      fractional_strength(r1, CategoryId("A"), FssScope::kCategory, a, c), 1.0);
  EXPECT_DOUBLE_EQ(
      fractional_strength(r1, CategoryId("A"), FssScope::kAll, a, c), 2.0);
}

TEST(FractionalStrength, MatchesOraclesOnRandomCorpora) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Corpus c = Corpus::build(testing::random_corpus(seed), {2001, 2003});
    AuthorshipTable a = resolve_mentions(c);
    WeightTable w = WeightTable::compute(c);
    std::vector<ResearcherId> all;
    for (const auto &[id, r] : c.researchers()) all.push_back(id);
    for (std::size_t k = 1; k <= all.size(); k += 2) {
      std::vector<ResearcherId> members(all.begin(), all.begin() + k);
      for (const auto &[cid, cat] : c.categories()) {
        for (FssScope s : {FssScope::kCategory, FssScope::kAll}) {
          double fss = fractional_strength(members, cid, s, a, c, w);
          EXPECT_NEAR(fss, testing::oracle_fss(c, a, members, cid, s), 1e-12);
          EXPECT_NEAR(fss, testing::oracle_fss_per_member(c, a, members, cid, s),
                      1e-12);
          EXPECT_EQ(fss, fractional_strength(members, cid, s, a, c));
          EXPECT_GE(fss, 0.0);
        }
      }
    }
  }
}

TEST(Writers, ScoresAndExclusions) {
  ScoreTable s({{{ResearcherId("R1"), kM1}, 1.0 / 3.0}});
  std::ostringstream os;
  write_scores(os, s);
  EXPECT_EQ(os.str(), "researcher_id,macro_area_id,ss\nR1,M1,0.333333\n");
  std::ostringstream ex;
  write_excluded_pubs(ex, {{PubId("P1"), "missing_if"}});
  EXPECT_EQ(ex.str(), "pub_id,reason\nP1,missing_if\n");
}

}  // namespace
}  // namespace coemap
