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

// Number formatting shared by every exported file.

#ifndef COEMAP_FORMAT_HPP_
#define COEMAP_FORMAT_HPP_

#include <string>

namespace coemap {

// Fixed six decimals ("75.970000"). Exported scores use this so that
// last-ulp differences never reach the output bytes.
std::string format_real(double v);

// One decimal ("12.1"), the precision of the percentage columns.
std::string format_percent(double v);

}  // namespace coemap

#endif  // COEMAP_FORMAT_HPP_
