// Copyright 2026 The SlangLex Authors.
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

#include "unicode.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <stdexcept>

namespace slanglex::detail {
namespace {

bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool is_strippable(UChar32 c) {
  const int8_t type = u_charType(c);
  return u_ispunct(c) || (type >= U_MATH_SYMBOL && type <= U_OTHER_SYMBOL);
}

icu::UnicodeString fold_unicode(std::string_view text) {
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u.toLower(icu::Locale::getRoot());
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalizer unavailable");
  icu::UnicodeString out = nfc->normalize(u, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  return out;
}

}  // namespace

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string fold_nfc(std::string_view text) {
  if (is_ascii(text)) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
  }
  std::string out;
  fold_unicode(text).toUTF8String(out);
  return out;
}

std::string fold_collapse(std::string_view text) {
  std::string out;
  if (is_ascii(text)) {
    bool pending_space = false;
    for (char c : text) {
      if (is_ascii_space(c)) {
        pending_space = !out.empty();
        continue;
      }
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(ascii_lower(c));
    }
    return out;
  }
  icu::UnicodeString u = fold_unicode(text);
  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < u.length(); i = u.moveIndex32(i, 1)) {
    UChar32 c = u.char32At(i);
    if (u_isUWhiteSpace(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) collapsed.append(static_cast<UChar>(' '));
    pending_space = false;
    collapsed.append(c);
  }
  collapsed.toUTF8String(out);
  return out;
}

std::string fold_strip_token(std::string_view token) {
  if (is_ascii(token)) {
    std::size_t begin = 0;
    std::size_t end = token.size();
    auto punct = [](char c) {
      return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
             (c >= '{' && c <= '~');
    };
    while (begin < end && punct(token[begin])) ++begin;
    while (end > begin && punct(token[end - 1])) --end;
    std::string out(token.substr(begin, end - begin));
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
  }
  icu::UnicodeString u = fold_unicode(token);
  int32_t begin = 0;
  int32_t end = u.length();
  while (begin < end && is_strippable(u.char32At(begin))) begin = u.moveIndex32(begin, 1);
  while (end > begin) {
    int32_t prev = u.moveIndex32(end, -1);
    if (!is_strippable(u.char32At(prev))) break;
    end = prev;
  }
  std::string out;
  u.tempSubStringBetween(begin, end).toUTF8String(out);
  return out;
}

}  // namespace slanglex::detail
