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

// Unicode folding used for name keys and affiliation matching.

#ifndef COEMAP_TEXT_HPP_
#define COEMAP_TEXT_HPP_

#include <string>
#include <string_view>

namespace coemap::text {

// NFKD decomposition, removal of non-spacing marks, then full case folding.
// Input is UTF-8; invalid sequences become U+FFFD.
std::string fold(std::string_view utf8);

// fold() keeping only letters and digits: "D'Angelo" -> "dangelo".
std::string alnum_key(std::string_view utf8);

// fold() with every run of non-alphanumerics replaced by a single space and
// the result trimmed: "Univ. Bologna, Dept Phys" -> "univ bologna dept phys".
std::string word_key(std::string_view utf8);

// First code point of a UTF-8 string, as UTF-8 ("" for empty input).
std::string first_code_point(std::string_view utf8);

}  // namespace coemap::text

#endif  // COEMAP_TEXT_HPP_
