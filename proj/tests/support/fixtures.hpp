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
// Test-only corpus construction: a fluent in-memory builder, seeded random
// corpora, row permutation and helpers that run the tool into a temp dir.

#ifndef COEMAP_TESTS_SUPPORT_FIXTURES_HPP_
#define COEMAP_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coemap/corpus.hpp"
#include "coemap/excellence.hpp"

namespace coemap::testing {

class CorpusBuilder {
 public:
  CorpusBuilder &category(const std::string &id, const std::string &macro);
  CorpusBuilder &journal(const std::string &id,
                         const std::vector<std::string> &categories);
  CorpusBuilder &impact(const std::string &journal, int year, double value);
  // Same value for every year of 2001-2003.
  CorpusBuilder &impact_all(const std::string &journal, double value);
  CorpusBuilder &unit(const std::string &org, const std::string &site,
                      const std::string &name, const std::string &region = "R1",
                      GeoMacroArea geo = GeoMacroArea::kNorthWest,
                      InstType type = InstType::kUniversity);
  CorpusBuilder &alias(const std::string &org, const std::string &site,
                       const std::string &alias);
  CorpusBuilder &researcher(const std::string &id, const std::string &surname,
                            const std::string &initials, const std::string &org,
                            const std::string &site = "");
  CorpusBuilder &publication(const std::string &id, int year,
                             const std::string &journal,
                             std::vector<AuthorMention> mentions,
                             std::vector<std::string> addresses = {},
                             DocType type = DocType::kArticle);
  // Byline built from registered names, then `unknown` external authors.
  CorpusBuilder &authored(const std::string &id, int year,
                          const std::string &journal,
                          const std::vector<std::string> &researchers,
                          int unknown = 0);

  const CorpusData &data() const { return data_; }
  CorpusData &data() { return data_; }
  Corpus build(YearRange window = {2001, 2003}) const;

 private:
  CorpusData data_;
};

struct RandomSpec {
  int max_publications = 50;
  bool homonyms = true;  // some name keys shared across units
};

// Small random corpus: two or three macro-areas, a handful of units, multi-
// category journals, occasional missing or zero impact factors.
CorpusData random_corpus(std::uint64_t seed, const RandomSpec &spec = {});

// Shuffles every row collection, and with `lists` also the category list of
// each journal.
CorpusData permuted(CorpusData data, std::uint64_t seed, bool lists = true);

// Multiplies every impact factor of journals in the connected journal/
// category component of `category` by c.
void scale_category(CorpusData &data, const CategoryId &category, double c);

// Fresh empty directory under the system temp dir.
std::filesystem::path temp_dir(const std::string &tag);

// Every regular file under dir, keyed by relative path.
std::map<std::string, std::string> read_tree(const std::filesystem::path &dir);

// tsc.csv, top_scientists.csv and scores.csv as written by the tool.
std::map<std::string, std::string> export_map(const ExcellenceMap &map);

}  // namespace coemap::testing

#endif  // COEMAP_TESTS_SUPPORT_FIXTURES_HPP_
