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

#include "slanglex/lexicon.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slanglex/errors.h"
#include "unicode.h"

namespace slanglex {

SentimentStrength SentimentStrength::clamped(double value) {
  if (std::isnan(value)) throw RangeError("sentiment strength is NaN");
  SentimentStrength s;
  s.value_ = std::clamp(value, kMinStrength, kMaxStrength);
  return s;
}

SentimentStrength SentimentStrength::checked(double value) {
  if (!std::isfinite(value) || value < kMinStrength || value > kMaxStrength) {
    throw RangeError("sentiment strength " + std::to_string(value) +
                     " outside [-2, 2]");
  }
  SentimentStrength s;
  s.value_ = value;
  return s;
}

SentimentClass SentimentClass::of(int value) {
  if (value < -2 || value > 2) {
    throw RangeError("sentiment class " + std::to_string(value) + " outside [-2, 2]");
  }
  SentimentClass c;
  c.value_ = static_cast<std::int8_t>(value);
  return c;
}

SentimentClass classify(SentimentStrength strength) {
  // std::round rounds halves away from zero.
  return SentimentClass::of(static_cast<int>(std::round(strength.value())));
}

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kSeedLexicon:
      return "seed";
    case Stage::kCorpusEstimate:
      return "corpus";
    case Stage::kPropagation:
      return "propagation";
    case Stage::kImported:
      return "imported";
  }
  return "unknown";
}

std::optional<Stage> stage_from_name(std::string_view name) {
  for (Stage s : {Stage::kSeedLexicon, Stage::kCorpusEstimate, Stage::kPropagation,
                  Stage::kImported}) {
    if (stage_name(s) == name) return s;
  }
  return std::nullopt;
}

void Lexicon::insert(LexiconEntry entry) {
  if (!is_normalized_term(entry.term)) {
    throw std::invalid_argument("lexicon term is not normalized: '" + entry.term + "'");
  }
  if ((entry.stage == Stage::kSeedLexicon) == entry.sources.empty()) {
    throw std::invalid_argument("term '" + entry.term +
                                "': sources must be listed exactly for seed entries");
  }
  const std::size_t tokens =
      1 + static_cast<std::size_t>(std::count(entry.term.begin(), entry.term.end(), ' '));
  auto [it, inserted] = entries_.try_emplace(entry.term, std::move(entry));
  if (!inserted) throw std::invalid_argument("duplicate lexicon term '" + it->first + "'");
  max_phrase_tokens_ = std::max(max_phrase_tokens_, tokens);
}

const LexiconEntry* Lexicon::find(std::string_view term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string normalize_term(std::string_view raw) {
  std::string out = detail::fold_collapse(raw);
  if (out.empty()) throw NormalizationError("term is empty after normalization");
  return out;
}

bool is_normalized_term(std::string_view term) {
  if (term.empty()) return false;
  return detail::fold_collapse(term) == term;
}

ScaleMap ScaleMap::between(double from_lo, double from_hi, double to_lo, double to_hi) {
  if (!(from_hi > from_lo) || !(to_hi > to_lo)) {
    throw ScaleError("scale-map ranges must be increasing");
  }
  ScaleMap m;
  m.scale = (to_hi - to_lo) / (from_hi - from_lo);
  m.offset = to_lo - m.scale * from_lo;
  return m;
}

double ScaleMap::apply(double native) const {
  if (!(scale > 0) || !std::isfinite(scale) || !std::isfinite(offset)) {
    throw ScaleError("scale-map is not monotone increasing");
  }
  const double mapped = scale * native + offset;
  if (!std::isfinite(mapped) || mapped < kMinStrength || mapped > kMaxStrength) {
    throw ScaleError("value " + std::to_string(native) + " maps to " +
                     std::to_string(mapped) + ", outside [-2, 2]");
  }
  return mapped;
}

Lexicon merge_seed_lexicons(const std::vector<SeedSource>& sources) {
  std::vector<const SeedSource*> ordered;
  ordered.reserve(sources.size());
  for (const SeedSource& s : sources) {
    if (s.id.empty() || s.id.find_first_of(",\t\n ") != std::string::npos) {
      throw std::invalid_argument("invalid seed source id '" + s.id + "'");
    }
    ordered.push_back(&s);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const SeedSource* a, const SeedSource* b) { return a->id < b->id; });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->id == ordered[i - 1]->id) {
      throw std::invalid_argument("duplicate seed source id '" + ordered[i]->id + "'");
    }
  }

  struct Accumulator {
    double sum = 0.0;
    double lo = kMaxStrength;
    double hi = kMinStrength;
    std::size_t count = 0;
    std::vector<std::string> sources;
  };
  std::map<std::string, Accumulator, std::less<>> merged;

  for (const SeedSource* source : ordered) {
    // Per-source value first, so duplicate raw spellings count once.
    std::map<std::string, std::pair<double, std::size_t>, std::less<>> local;
    for (const auto& [raw, native] : source->terms) {
      const double mapped = source->scale.apply(native);
      auto& slot = local[normalize_term(raw)];
      slot.first += mapped;
      slot.second += 1;
    }
    for (const auto& [term, slot] : local) {
      Accumulator& acc = merged[term];
      const double value = slot.first / static_cast<double>(slot.second);
      acc.sum += value;
      acc.lo = std::min(acc.lo, value);
      acc.hi = std::max(acc.hi, value);
      acc.count += 1;
      acc.sources.push_back(source->id);
    }
  }

  Lexicon lexicon;
  for (auto& [term, acc] : merged) {
    LexiconEntry entry;
    entry.term = term;
    const double mean = acc.sum / static_cast<double>(acc.count);
    entry.strength = SentimentStrength::clamped(std::clamp(mean, acc.lo, acc.hi));
    entry.stage = Stage::kSeedLexicon;
    entry.sources = std::move(acc.sources);
    lexicon.insert(std::move(entry));
  }
  return lexicon;
}

}  // namespace slanglex
