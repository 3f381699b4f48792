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

#ifndef COEMAP_ERROR_HPP_
#define COEMAP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace coemap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input could not be loaded: missing file, malformed row, dangling token.
class CorpusError : public Error {
 public:
  using Error::Error;
};

// A computation is undefined for its arguments (zero denominator, constant
// vector, publication outside a macro-area, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// PipelineConfig or command-line values outside their documented range.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace coemap

#endif  // COEMAP_ERROR_HPP_
