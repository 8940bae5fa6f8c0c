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

#ifndef SLANGLEX_SRC_TEXT_UTIL_H_
#define SLANGLEX_SRC_TEXT_UTIL_H_

#include <charconv>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slanglex::detail {

std::vector<std::string_view> split(std::string_view text, char sep);

// Splits on '\n'. A trailing newline does not produce an empty last line.
std::vector<std::string_view> lines(std::string_view text);

std::string slurp(std::istream& in);

std::string format_double(double value);

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

}  // namespace slanglex::detail

#endif  // SLANGLEX_SRC_TEXT_UTIL_H_
