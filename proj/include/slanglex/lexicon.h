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

// Sentiment strengths, lexicon entries and the seed-lexicon merge.

#ifndef SLANGLEX_LEXICON_H_
#define SLANGLEX_LEXICON_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slanglex {

inline constexpr double kMinStrength = -2.0;
inline constexpr double kMaxStrength = 2.0;

// A real-valued sentiment strength in [-2, +2]. Computed values are clamped;
// values read from files go through checked() and are rejected when out of
// range.
class SentimentStrength {
 public:
  constexpr SentimentStrength() = default;

  static SentimentStrength clamped(double value);
  // Throws RangeError when value is outside [-2, +2] or not finite.
  static SentimentStrength checked(double value);

  constexpr double value() const { return value_; }
  constexpr SentimentStrength operator-() const {
    SentimentStrength s;
    s.value_ = -value_;
    return s;
  }
  friend constexpr auto operator<=>(SentimentStrength, SentimentStrength) = default;

 private:
  double value_ = 0.0;
};

// One of -2 (strongly negative), -1, 0 (neutral), +1, +2 (strongly positive).
class SentimentClass {
 public:
  constexpr SentimentClass() = default;
  // Throws RangeError outside [-2, 2].
  static SentimentClass of(int value);

  constexpr int value() const { return value_; }
  friend constexpr auto operator<=>(SentimentClass, SentimentClass) = default;

 private:
  std::int8_t value_ = 0;
};

// Nearest integer, exact halves rounded away from zero.
SentimentClass classify(SentimentStrength strength);

// Which mechanism produced an entry. Imported marks entries read back from a
// class-only SlangSD file, where the original stage is not recoverable.
enum class Stage : std::uint8_t { kSeedLexicon, kCorpusEstimate, kPropagation, kImported };

std::string_view stage_name(Stage stage);
std::optional<Stage> stage_from_name(std::string_view name);

struct LexiconEntry {
  std::string term;
  SentimentStrength strength;
  Stage stage = Stage::kSeedLexicon;
  std::vector<std::string> sources;  // non-empty iff stage == kSeedLexicon

  bool operator==(const LexiconEntry&) const = default;
};

// Normalized term -> entry. Iteration is in lexicographic term order.
// Immutable once built, so a const Lexicon may be shared between threads.
class Lexicon {
 public:
  using Map = std::map<std::string, LexiconEntry, std::less<>>;
  using const_iterator = Map::const_iterator;

  // Throws std::invalid_argument if the term is not normalized, is already
  // present, or the stage/sources pairing is inconsistent.
  void insert(LexiconEntry entry);

  const LexiconEntry* find(std::string_view term) const;
  bool contains(std::string_view term) const { return find(term) != nullptr; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  // Longest term measured in space-separated tokens (0 when empty).
  std::size_t max_phrase_tokens() const { return max_phrase_tokens_; }

  bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

 private:
  Map entries_;
  std::size_t max_phrase_tokens_ = 0;
};

// Lowercase, NFC, trimmed, internal whitespace runs collapsed to one space.
// Throws NormalizationError when nothing is left.
std::string normalize_term(std::string_view raw);
bool is_normalized_term(std::string_view term);

// Monotone increasing linear map from a source lexicon's native scale onto
// [-2, +2]: mapped = scale * native + offset.
struct ScaleMap {
  double scale = 1.0;
  double offset = 0.0;

  // Map native range [from_lo, from_hi] linearly onto [to_lo, to_hi].
  static ScaleMap between(double from_lo, double from_hi, double to_lo, double to_hi);
  // Throws ScaleError when the result leaves [-2, +2].
  double apply(double native) const;
};

struct SeedSource {
  std::string id;
  std::vector<std::pair<std::string, double>> terms;  // raw term, native value
  ScaleMap scale;
};

// Every term present in any source gets the arithmetic mean of its mapped
// values over the sources containing it. Sources are processed in id order, so
// the result does not depend on the order of `sources`. Raw terms that collide
// after normalization within one source are averaged first so each source
// contributes one value per term.
// Throws ScaleError (bad map or out-of-range value) and std::invalid_argument
// (duplicate or malformed source id).
Lexicon merge_seed_lexicons(const std::vector<SeedSource>& sources);

}  // namespace slanglex

#endif  // SLANGLEX_LEXICON_H_
