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

#ifndef COEMAP_IDS_HPP_
#define COEMAP_IDS_HPP_

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace coemap {

// Opaque token identifying an entity of one kind. The tag keeps a journal
// token from being passed where a category token is expected.
template <typename Tag>
class Id {
 public:
  Id() = default;
  explicit Id(std::string value) : value_(std::move(value)) {}
  explicit Id(std::string_view value) : value_(value) {}
  explicit Id(const char *value) : value_(value) {}

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Id &, const Id &) = default;
  friend bool operator==(const Id &, const Id &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Id &id) {
    return os << id.value_;
  }

 private:
  std::string value_;
};

using CategoryId = Id<struct CategoryTag>;
using MacroAreaId = Id<struct MacroAreaTag>;
using JournalId = Id<struct JournalTag>;
using PubId = Id<struct PublicationTag>;
using OrgId = Id<struct OrganizationTag>;
using SiteId = Id<struct SiteTag>;
using RegionId = Id<struct RegionTag>;
using ResearcherId = Id<struct ResearcherTag>;

// An organizational unit: a whole organization (empty site) or one of its
// sites.
struct UnitKey {
  OrgId org;
  SiteId site;

  friend auto operator<=>(const UnitKey &, const UnitKey &) = default;
  friend bool operator==(const UnitKey &, const UnitKey &) = default;

  std::string str() const {
    return site.empty() ? org.str() : org.str() + "/" + site.str();
  }
};

}  // namespace coemap

#endif  // COEMAP_IDS_HPP_
