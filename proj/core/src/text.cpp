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

#include "coemap/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "coemap/error.hpp"

namespace coemap::text {
namespace {

const icu::Normalizer2 &nfkd() {
  static const icu::Normalizer2 *instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2 *n = icu::Normalizer2::getNFKDInstance(status);
    if (U_FAILURE(status)) throw Error("ICU NFKD normalizer unavailable");
    return n;
  }();
  return *instance;
}

icu::UnicodeString folded(std::string_view utf8) {
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString decomposed = nfkd().normalize(src, status);
  if (U_FAILURE(status)) throw Error("ICU normalization failed");

  icu::UnicodeString out;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) out.append(c);
    i += U16_LENGTH(c);
  }
  out.foldCase();
  return out;
}

std::string to_utf8(const icu::UnicodeString &s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace

std::string fold(std::string_view utf8) { return to_utf8(folded(utf8)); }

std::string alnum_key(std::string_view utf8) {
  icu::UnicodeString f = folded(utf8);
  icu::UnicodeString out;
  for (int32_t i = 0; i < f.length();) {
    UChar32 c = f.char32At(i);
    if (u_isalnum(c)) out.append(c);
    i += U16_LENGTH(c);
  }
  return to_utf8(out);
}

std::string word_key(std::string_view utf8) {
  icu::UnicodeString f = folded(utf8);
  icu::UnicodeString out;
  bool pending_space = false;
  for (int32_t i = 0; i < f.length();) {
    UChar32 c = f.char32At(i);
    i += U16_LENGTH(c);
    if (!u_isalnum(c)) {
      pending_space = out.length() > 0;
      continue;
    }
    if (pending_space) out.append(static_cast<UChar>(' '));
    pending_space = false;
    out.append(c);
  }
  return to_utf8(out);
}

std::string first_code_point(std::string_view utf8) {
  if (utf8.empty()) return {};
  int32_t i = 0;
  UChar32 c;
  U8_NEXT(reinterpret_cast<const uint8_t *>(utf8.data()), i,
          static_cast<int32_t>(utf8.size()), c);
  (void)c;
  return std::string(utf8.substr(0, static_cast<std::size_t>(i)));
}

}  // namespace coemap::text
