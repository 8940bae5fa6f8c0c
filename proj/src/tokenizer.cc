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

#include "slanglex/tokenizer.h"

#include <algorithm>

#include "unicode.h"

namespace slanglex {
namespace {

bool in(char c, std::string_view set) { return set.find(c) != std::string_view::npos; }

bool all_same(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [&](char c) { return c == s.front(); });
}

// [hat] eyes [nose] mouth+    e.g. ":)", ";-P", ">:(", ":'(", "=D", "xD", ":)))"
bool western(std::string_view t) {
  if (!t.empty() && in(t.front(), ">}]") && t.size() >= 3) t.remove_prefix(1);
  if (t.size() < 2) return false;
  const char eyes = t.front();
  t.remove_prefix(1);
  if (t.size() >= 2 && in(t.front(), "-'o^~")) t.remove_prefix(1);
  if (t.empty() || !all_same(t)) return false;
  const char mouth = t.front();
  if (in(eyes, ":;=")) return in(mouth, ")(][DPpOo03/\\|*@$}{<>Xx");
  if (in(eyes, "xX8")) return in(mouth, ")(DP");
  return false;
}

// mouth [nose] eyes    e.g. "(:", "):", "(-:", "D:"
bool reversed(std::string_view t) {
  if (t.size() < 2 || t.size() > 3) return false;
  if (!in(t.front(), "()[]D") || !in(t.back(), ":;=")) return false;
  return t.size() == 2 || in(t[1], "-'^");
}

// eye [mouth] eye    e.g. "^_^", "^^", "-_-", "T_T", "o_O", ">_<"
bool eastern(std::string_view t) {
  if (t.size() == 2) return t == "^^";
  if (t.size() != 3 || !in(t[1], "_.")) return false;
  return in(t[0], "^T-oO>xX;") && in(t[2], "^T-oO<xX;");
}

bool heart(std::string_view t) {
  if (t.starts_with("</3")) return t.size() == 3;
  if (!t.starts_with("<3")) return false;
  return std::all_of(t.begin() + 1, t.end(), [](char c) { return c == '3'; });
}

}  // namespace

bool looks_like_emoticon(std::string_view token) {
  return western(token) || reversed(token) || eastern(token) || heart(token);
}

Tokenizer::Tokenizer(std::vector<std::string> extra_emoticons)
    : extra_(extra_emoticons.begin(), extra_emoticons.end()) {}

bool Tokenizer::is_emoticon(std::string_view raw_token) const {
  return looks_like_emoticon(raw_token) || extra_.contains(std::string(raw_token));
}

std::vector<std::string> Tokenizer::operator()(std::string_view text) const {
  std::vector<std::string> out;
  for (std::string_view raw : raw_tokens(text)) {
    if (is_emoticon(raw)) {
      out.emplace_back(raw);
      continue;
    }
    std::string token = detail::fold_strip_token(raw);
    if (!token.empty()) out.push_back(std::move(token));
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  static const Tokenizer tokenizer;
  return tokenizer(text);
}

std::vector<std::string_view> raw_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && detail::is_ascii_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !detail::is_ascii_space(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> term_tokens(std::string_view term) { return tokenize(term); }

std::vector<Span> find_token_sequence(std::span<const std::string> tokens,
                                      std::span<const std::string> needle) {
  std::vector<Span> spans;
  if (needle.empty() || needle.size() > tokens.size()) return spans;
  std::size_t i = 0;
  while (i + needle.size() <= tokens.size()) {
    if (std::equal(needle.begin(), needle.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
      spans.push_back({i, i + needle.size() - 1});
      i += needle.size();
    } else {
      ++i;
    }
  }
  return spans;
}

std::vector<Span> find_occurrences(std::span<const std::string> tokens, std::string_view term) {
  const std::vector<std::string> needle = term_tokens(term);
  return find_token_sequence(tokens, needle);
}

}  // namespace slanglex
