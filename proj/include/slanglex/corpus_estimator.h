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

// Corpus-based strength estimation: each retrieved document is scored by the
// seed words nearest to the query term, and the term gets the mean over
// documents.

#ifndef SLANGLEX_CORPUS_ESTIMATOR_H_
#define SLANGLEX_CORPUS_ESTIMATOR_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slanglex/ingestion.h"
#include "slanglex/lexicon.h"
#include "slanglex/tokenizer.h"

namespace slanglex {

inline constexpr std::size_t kDefaultMaxDocs = 150;

struct Document {
  std::string id;
  std::string text;
  std::vector<std::string> tokens;  // tokenizer(text)

  static Document from_text(std::string id, std::string text);
  static Document from_text(std::string id, std::string text, const Tokenizer& tokenizer);
};

// Returns at most max_docs documents, each containing the term at least once.
// Implementations must be safe to call concurrently and must be deterministic
// for a fixed configuration. Failures are reported as ProviderError.
class CorpusProvider {
 public:
  virtual ~CorpusProvider() = default;
  virtual std::vector<Document> query(std::string_view term, std::size_t max_docs) const = 0;
};

// In-memory corpus. When more than max_docs documents match, a sample is drawn
// with an RNG seeded from (sample_seed, term), so a term's sample does not
// depend on which other terms were queried before it. Sampled documents keep
// corpus order.
class OfflineCorpus : public CorpusProvider {
 public:
  OfflineCorpus(std::vector<Document> documents, std::uint64_t sample_seed);

  // One document per line: id<TAB>text. Blank lines are skipped; a line
  // without a tab is a ParseError.
  static OfflineCorpus parse(std::istream& in, std::uint64_t sample_seed);
  static OfflineCorpus load(const std::filesystem::path& path, std::uint64_t sample_seed);

  std::vector<Document> query(std::string_view term, std::size_t max_docs) const override;

  std::size_t size() const { return documents_.size(); }
  const std::vector<Document>& documents() const { return documents_; }

 private:
  std::vector<Document> documents_;
  std::uint64_t sample_seed_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_token_;
};

// Documents read from id<TAB>text lines without tokenizing; shared with the
// distant labeler, which needs its own tokenizer.
std::vector<std::pair<std::string, std::string>> parse_id_text_lines(std::string_view text);

// Strength of `term` in one document. Candidates are the document's tokens
// found in `seed`, excluding tokens inside an occurrence of the term. The
// distance of a candidate is its token gap to the nearest occurrence; the
// result is the mean strength of all candidates at the minimal distance, or 0
// when there are none. Throws MissingTermError if the term does not occur.
SentimentStrength document_strength(const Document& doc, std::string_view term,
                                    const Lexicon& seed);

// Mean document_strength over the provider's documents for `term`; nullopt
// when the provider returns nothing. Provider failures become
// EstimationError.
std::optional<SentimentStrength> estimate_strength(std::string_view term,
                                                   const CorpusProvider& provider,
                                                   const Lexicon& seed,
                                                   std::size_t max_docs = kDefaultMaxDocs);

struct EstimationOptions {
  std::size_t max_docs = kDefaultMaxDocs;
  unsigned workers = 1;
};

struct TermFailure {
  std::string term;
  std::string message;
};

struct EstimationRun {
  Lexicon labeled;  // stage kCorpusEstimate
  std::vector<std::string> unlabelable;
  std::vector<TermFailure> failures;
  std::size_t attempted = 0;
};

// Estimates every vocabulary term not already in `seed`. Per-term failures are
// recorded and the run continues. Output is independent of `workers`.
EstimationRun estimate_all(const Vocabulary& vocabulary, const CorpusProvider& provider,
                           const Lexicon& seed, const EstimationOptions& options = {});

}  // namespace slanglex

#endif  // SLANGLEX_CORPUS_ESTIMATOR_H_
