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

// Weak polarity labels from emoticons.

#ifndef SLANGLEX_DISTANT_LABELER_H_
#define SLANGLEX_DISTANT_LABELER_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "slanglex/corpus_estimator.h"
#include "slanglex/tokenizer.h"

namespace slanglex {

enum class Polarity { kPositive, kNegative, kNeutral };

std::string_view polarity_name(Polarity polarity);
std::optional<Polarity> polarity_from_name(std::string_view name);

class EmoticonSet {
 public:
  // Throws std::invalid_argument if either set is empty or they intersect.
  EmoticonSet(std::set<std::string> positive, std::set<std::string> negative);

  // A conventional split of common western and eastern faces.
  static EmoticonSet defaults();

  // "[positive]" and "[negative]" section headers, one emoticon per line,
  // '#' starts a comment line. Throws ParseError.
  static EmoticonSet parse(std::istream& in);
  static EmoticonSet load(const std::filesystem::path& path);
  std::string serialize() const;

  const std::set<std::string>& positive() const { return positive_; }
  const std::set<std::string>& negative() const { return negative_; }
  bool contains(std::string_view token) const;

  // A tokenizer that keeps every emoticon of this set intact.
  Tokenizer tokenizer() const;

  EmoticonSet swapped() const { return EmoticonSet(negative_, positive_); }

 private:
  std::set<std::string> positive_;
  std::set<std::string> negative_;
};

struct LabeledDocument {
  Document document;
  Polarity gold = Polarity::kNeutral;
};

// Positive when only positive emoticons occur, Negative when only negative
// ones do; documents with both kinds or neither are discarded (nullopt).
// Emoticons of the set are removed from the tokens, and from the text, so
// re-tokenizing the output text cannot recover the label.
std::optional<LabeledDocument> label_by_emoticon(const Document& doc, const EmoticonSet& set);

struct LabelingReport {
  std::size_t read = 0;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t discarded_conflict = 0;
  std::size_t discarded_no_emoticon = 0;
};

struct EvalCorpus {
  std::vector<LabeledDocument> documents;
  LabelingReport report;
};

// Reads id<TAB>text lines and labels each document, in input order.
EvalCorpus build_eval_corpus(std::istream& in, const EmoticonSet& set);

// Labeled-corpus file: id<TAB>gold<TAB>text, gold in positive/negative/neutral.
std::string serialize_labeled_corpus(const std::vector<LabeledDocument>& docs);
std::vector<LabeledDocument> parse_labeled_corpus(std::istream& in);
std::vector<LabeledDocument> load_labeled_corpus(const std::filesystem::path& path);

}  // namespace slanglex

#endif  // SLANGLEX_DISTANT_LABELER_H_
