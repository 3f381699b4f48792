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

// Seeded synthetic corpora with planted clusters.
//
// Background researchers are spread so that no unit holds more than three of
// them in one category, and each publishes at most 15 papers in ordinary
// journals. Planted groups co-author a long series of papers in a high-impact
// journal of their category, which puts them far above everyone else in
// their macro-area. With the default pipeline config the planted groups are
// therefore exactly the clusters and exactly the centers of excellence.

#ifndef COEMAP_CLI_SYNTH_HPP_
#define COEMAP_CLI_SYNTH_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "coemap/corpus.hpp"
#include "coemap/ids.hpp"

namespace coemap::cli {

struct SynthSpec {
  std::uint64_t seed = 1;
  int researchers = 200;
  int publications = 1000;
  int macro_areas = 3;
  int categories_per_macro = 4;
  int journals_per_category = 3;
  int organizations = 10;  // the first one has three sites
  int planted = 1;         // at most one per macro-area
  int planted_size = 4;
  int planted_publications = 30;
  YearRange window{2001, 2003};
};

struct PlantedCluster {
  CategoryId category;
  UnitKey unit;
  std::vector<ResearcherId> members;  // sorted
};

struct SynthCorpus {
  CorpusData data;
  std::vector<PlantedCluster> planted;  // sorted by category
};

// Same spec, same bytes. Throws ConfigError for an infeasible spec.
SynthCorpus synthesize(const SynthSpec &spec);

// planted.csv: category_id,org_id,site_id,member_ids
void write_planted(std::ostream &os, const std::vector<PlantedCluster> &planted);

}  // namespace coemap::cli

#endif  // COEMAP_CLI_SYNTH_HPP_
