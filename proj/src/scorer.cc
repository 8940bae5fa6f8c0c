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

#include "slanglex/scorer.h"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "slanglex/errors.h"

namespace slanglex {
namespace {

std::string join(std::span<const std::string> tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::size_t index(Polarity p) { return static_cast<std::size_t>(p); }

}  // namespace

PhraseMatcher::PhraseMatcher(const Lexicon& lexicon) {
  for (const auto& [term, entry] : lexicon) {
    const std::vector<std::string> tokens = term_tokens(term);
    if (tokens.empty()) continue;
    std::string key = join(tokens);
    auto [it, inserted] = by_tokens_.try_emplace(key, &entry);
    // Two terms with the same token form: the one spelled like its tokens wins.
    if (!inserted && term == key) it->second = &entry;
    std::size_t& longest = longest_from_[tokens.front()];
    longest = std::max(longest, tokens.size());
  }
}

std::vector<TermMatch> PhraseMatcher::match(std::span<const std::string> tokens) const {
  std::vector<TermMatch> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    auto longest = longest_from_.find(tokens[i]);
    bool matched = false;
    if (longest != longest_from_.end()) {
      const std::size_t max_len = std::min(longest->second, tokens.size() - i);
      for (std::size_t len = max_len; len >= 1; --len) {
        auto hit = by_tokens_.find(join(tokens.subspan(i, len)));
        if (hit == by_tokens_.end()) continue;
        out.push_back({hit->second->term, {i, i + len - 1}, hit->second->strength.value()});
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return out;
}

std::vector<TermMatch> match_terms(std::span<const std::string> tokens, const Lexicon& lexicon) {
  return PhraseMatcher(lexicon).match(tokens);
}

Polarity polarity_of(std::span<const TermMatch> matches, double* total) {
  // Neumaier summation.
  double sum = 0.0;
  double compensation = 0.0;
  double magnitude = 0.0;
  for (const TermMatch& m : matches) {
    const double t = sum + m.strength;
    if (std::fabs(sum) >= std::fabs(m.strength)) {
      compensation += (sum - t) + m.strength;
    } else {
      compensation += (m.strength - t) + sum;
    }
    sum = t;
    magnitude += std::fabs(m.strength);
  }
  sum += compensation;
  if (total) *total = sum;
  if (std::fabs(sum) <= 1e-9 * magnitude) return Polarity::kNeutral;
  return sum > 0 ? Polarity::kPositive : Polarity::kNegative;
}

ScoreBreakdown score_tokens(std::span<const std::string> tokens, const PhraseMatcher& matcher) {
  ScoreBreakdown out;
  out.matches = matcher.match(tokens);
  out.polarity = polarity_of(out.matches, &out.total);
  return out;
}

ScoreBreakdown score_text(std::string_view text, const Lexicon& lexicon) {
  const std::vector<std::string> tokens = tokenize(text);
  return score_tokens(tokens, PhraseMatcher(lexicon));
}

bool contains_slang(const Document& doc, const Lexicon& lexicon) {
  return !match_terms(doc.tokens, lexicon).empty();
}

ClassScores one_vs_all(const std::array<std::array<std::size_t, 3>, 3>& confusion,
                       Polarity cls) {
  const std::size_t c = index(cls);
  const std::size_t tp = confusion[c][c];
  std::size_t predicted = 0;
  std::size_t actual = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    predicted += confusion[k][c];
    actual += confusion[c][k];
  }
  ClassScores s;
  s.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
  s.recall = actual ? static_cast<double>(tp) / static_cast<double>(actual) : 0.0;
  const double denom = s.precision + s.recall;
  s.f_score = denom > 0 ? 2.0 * s.precision * s.recall / denom : 0.0;
  return s;
}

EvaluationReport evaluate(const std::vector<LabeledDocument>& corpus, const Lexicon& lexicon,
                          Subset subset) {
  const PhraseMatcher matcher(lexicon);
  EvaluationReport report;
  for (const LabeledDocument& d : corpus) {
    const ScoreBreakdown score = score_tokens(d.document.tokens, matcher);
    if (subset == Subset::kSlangOnly && score.matches.empty()) continue;
    ++report.confusion[index(d.gold)][index(score.polarity)];
    ++report.documents;
  }
  if (report.documents == 0) throw EmptyEvaluationError("no documents in the evaluated subset");
  std::size_t correct = 0;
  for (std::size_t k = 0; k < 3; ++k) correct += report.confusion[k][k];
  report.accuracy = static_cast<double>(correct) / static_cast<double>(report.documents);
  report.positive = one_vs_all(report.confusion, Polarity::kPositive);
  report.negative = one_vs_all(report.confusion, Polarity::kNegative);
  return report;
}

std::string EvaluationReport::render_text() const {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof line, "documents  %zu\naccuracy   %.2f%%\n\n", documents,
                100.0 * accuracy);
  out += line;
  out += "class      precision   recall  f-score\n";
  auto row = [&](const char* name, const ClassScores& s) {
    std::snprintf(line, sizeof line, "%-9s %9.2f%% %7.2f%% %7.2f%%\n", name, 100.0 * s.precision,
                  100.0 * s.recall, 100.0 * s.f_score);
    out += line;
  };
  row("positive", positive);
  row("negative", negative);
  out += "\nconfusion (rows gold, columns predicted)\n";
  out += "           positive negative  neutral\n";
  const char* names[] = {"positive", "negative", "neutral"};
  for (std::size_t g = 0; g < 3; ++g) {
    std::snprintf(line, sizeof line, "%-9s %9zu %8zu %8zu\n", names[g], confusion[g][0],
                  confusion[g][1], confusion[g][2]);
    out += line;
  }
  return out;
}

std::string EvaluationReport::render_json() const {
  nlohmann::ordered_json j;
  j["documents"] = documents;
  j["accuracy"] = accuracy;
  auto scores = [](const ClassScores& s) {
    return nlohmann::ordered_json{
        {"precision", s.precision}, {"recall", s.recall}, {"f_score", s.f_score}};
  };
  j["positive"] = scores(positive);
  j["negative"] = scores(negative);
  j["confusion"] = confusion;
  return j.dump(2) + "\n";
}

}  // namespace slanglex
