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

#ifndef SLANGLEX_SRC_UNICODE_H_
#define SLANGLEX_SRC_UNICODE_H_

#include <string>
#include <string_view>

namespace slanglex::detail {

// Lowercase (root locale) then NFC. Invalid UTF-8 becomes U+FFFD.
std::string fold_nfc(std::string_view text);

// fold_nfc plus whitespace trimming and collapsing.
std::string fold_collapse(std::string_view text);

// fold_nfc of `token` with leading and trailing punctuation and symbol code
// points removed. May return an empty string.
std::string fold_strip_token(std::string_view token);

bool is_ascii_space(char c);

}  // namespace slanglex::detail

#endif  // SLANGLEX_SRC_UNICODE_H_
