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

#ifndef SLANGLEX_TOKENIZER_H_
#define SLANGLEX_TOKENIZER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace slanglex {

// Built-in shape test for a whitespace-delimited token: western faces
// (":)", ";-P", "):"), eastern faces ("^_^", "T_T") and hearts ("<3").
bool looks_like_emoticon(std::string_view token);

// Splits on whitespace. Emoticon tokens are kept verbatim; every other token
// is lowercased, NFC-normalized and stripped of leading and trailing
// punctuation. Tokens that end up empty are dropped.
class Tokenizer {
 public:
  Tokenizer() = default;
  // Tokens in `extra_emoticons` are kept verbatim even if the built-in shape
  // test rejects them.
  explicit Tokenizer(std::vector<std::string> extra_emoticons);

  bool is_emoticon(std::string_view raw_token) const;
  std::vector<std::string> operator()(std::string_view text) const;

 private:
  std::unordered_set<std::string> extra_;
};

std::vector<std::string> tokenize(std::string_view text);

// Whitespace-delimited pieces of `text`, untouched.
std::vector<std::string_view> raw_tokens(std::string_view text);

// Inclusive token-index range.
struct Span {
  std::size_t first = 0;
  std::size_t last = 0;
  bool operator==(const Span&) const = default;
};

// Token sequence a normalized term is matched as: the term run through the
// tokenizer, so "w00t!" matches the token "w00t".
std::vector<std::string> term_tokens(std::string_view term);

// Non-overlapping leftmost-first occurrences of the term's tokens.
std::vector<Span> find_occurrences(std::span<const std::string> tokens, std::string_view term);
std::vector<Span> find_token_sequence(std::span<const std::string> tokens,
                                      std::span<const std::string> needle);

}  // namespace slanglex

#endif  // SLANGLEX_TOKENIZER_H_
