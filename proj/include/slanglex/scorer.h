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

// Lexicon-based scoring of short texts and the evaluation harness.

#ifndef SLANGLEX_SCORER_H_
#define SLANGLEX_SCORER_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slanglex/corpus_estimator.h"
#include "slanglex/distant_labeler.h"
#include "slanglex/lexicon.h"
#include "slanglex/tokenizer.h"

namespace slanglex {

struct TermMatch {
  std::string term;
  Span span;
  double strength = 0.0;
  bool operator==(const TermMatch&) const = default;
};

// Greedy left-to-right longest match of lexicon terms over a token sequence.
// Build once per lexicon; the lexicon must outlive the matcher.
class PhraseMatcher {
 public:
  explicit PhraseMatcher(const Lexicon& lexicon);
  std::vector<TermMatch> match(std::span<const std::string> tokens) const;

 private:
  std::unordered_map<std::string, const LexiconEntry*> by_tokens_;
  std::unordered_map<std::string, std::size_t> longest_from_;  // first token -> max length
};

std::vector<TermMatch> match_terms(std::span<const std::string> tokens, const Lexicon& lexicon);

struct ScoreBreakdown {
  std::vector<TermMatch> matches;
  double total = 0.0;
  Polarity polarity = Polarity::kNeutral;
};

// Sign of a sum of strengths. Totals within 1e-9 of the summed magnitudes are
// treated as zero, so cancellation noise never picks a side.
Polarity polarity_of(std::span<const TermMatch> matches, double* total = nullptr);

ScoreBreakdown score_tokens(std::span<const std::string> tokens, const PhraseMatcher& matcher);
ScoreBreakdown score_text(std::string_view text, const Lexicon& lexicon);

bool contains_slang(const Document& doc, const Lexicon& lexicon);

enum class Subset { kAll, kSlangOnly };

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

struct EvaluationReport {
  // confusion[gold][predicted], indexed by Polarity.
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  std::size_t documents = 0;
  double accuracy = 0.0;
  ClassScores positive;
  ClassScores negative;

  std::string render_text() const;
  std::string render_json() const;
};

// One-vs-all scores from a confusion matrix. Zero denominators give 0.
ClassScores one_vs_all(const std::array<std::array<std::size_t, 3>, 3>& confusion,
                       Polarity cls);

// Throws EmptyEvaluationError when the subset has no documents.
EvaluationReport evaluate(const std::vector<LabeledDocument>& corpus, const Lexicon& lexicon,
                          Subset subset);

}  // namespace slanglex

#endif  // SLANGLEX_SCORER_H_
