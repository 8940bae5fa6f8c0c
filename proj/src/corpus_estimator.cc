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

#include "slanglex/corpus_estimator.h"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>
#include <thread>

#include "averaging.h"
#include "slanglex/errors.h"
#include "slanglex/files.h"
#include "text_util.h"

namespace slanglex {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Document Document::from_text(std::string id, std::string text) {
  std::vector<std::string> tokens = tokenize(text);
  return {std::move(id), std::move(text), std::move(tokens)};
}

Document Document::from_text(std::string id, std::string text, const Tokenizer& tokenizer) {
  std::vector<std::string> tokens = tokenizer(text);
  return {std::move(id), std::move(text), std::move(tokens)};
}

std::vector<std::pair<std::string, std::string>> parse_id_text_lines(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t line_no = 0;
  for (std::string_view line : detail::lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(line_no, "expected id<TAB>text");
    out.emplace_back(std::string(line.substr(0, tab)), std::string(line.substr(tab + 1)));
  }
  return out;
}

OfflineCorpus::OfflineCorpus(std::vector<Document> documents, std::uint64_t sample_seed)
    : documents_(std::move(documents)), sample_seed_(sample_seed) {
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    const auto& tokens = documents_[i].tokens;
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      auto& postings = by_token_[tokens[t]];
      if (postings.empty() || postings.back() != i) postings.push_back(i);
    }
  }
}

OfflineCorpus OfflineCorpus::parse(std::istream& in, std::uint64_t sample_seed) {
  std::vector<Document> docs;
  for (auto& [id, text] : parse_id_text_lines(detail::slurp(in))) {
    docs.push_back(Document::from_text(std::move(id), std::move(text)));
  }
  return OfflineCorpus(std::move(docs), sample_seed);
}

OfflineCorpus OfflineCorpus::load(const std::filesystem::path& path, std::uint64_t sample_seed) {
  std::istringstream in(read_file(path));
  try {
    return parse(in, sample_seed);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

std::vector<Document> OfflineCorpus::query(std::string_view term, std::size_t max_docs) const {
  const std::vector<std::string> needle = term_tokens(term);
  if (needle.empty() || max_docs == 0) return {};
  auto postings = by_token_.find(needle.front());
  if (postings == by_token_.end()) return {};

  std::vector<std::size_t> matching;
  for (std::size_t i : postings->second) {
    if (!find_token_sequence(documents_[i].tokens, needle).empty()) matching.push_back(i);
  }
  if (matching.size() > max_docs) {
    std::mt19937_64 rng(splitmix64(sample_seed_ ^ fnv1a(term)));
    for (std::size_t i = 0; i < max_docs; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (matching.size() - i));
      std::swap(matching[i], matching[j]);
    }
    matching.resize(max_docs);
    std::sort(matching.begin(), matching.end());
  }
  std::vector<Document> out;
  out.reserve(matching.size());
  for (std::size_t i : matching) out.push_back(documents_[i]);
  return out;
}

SentimentStrength document_strength(const Document& doc, std::string_view term,
                                    const Lexicon& seed) {
  const std::vector<Span> spans = find_occurrences(doc.tokens, term);
  if (spans.empty()) {
    throw MissingTermError("term '" + std::string(term) + "' does not occur in document '" +
                           doc.id + "'");
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<double> nearest;
  std::size_t next_span = 0;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    while (next_span < spans.size() && spans[next_span].last < i) ++next_span;
    if (next_span < spans.size() && spans[next_span].first <= i) continue;  // inside the term
    const LexiconEntry* entry = seed.find(doc.tokens[i]);
    if (!entry) continue;
    std::size_t distance = std::numeric_limits<std::size_t>::max();
    if (next_span > 0) distance = i - spans[next_span - 1].last;
    if (next_span < spans.size()) distance = std::min(distance, spans[next_span].first - i);
    if (distance < best) {
      best = distance;
      nearest.clear();
    }
    if (distance == best) nearest.push_back(entry->strength.value());
  }
  return SentimentStrength::clamped(detail::symmetric_mean(std::move(nearest)));
}

std::optional<SentimentStrength> estimate_strength(std::string_view term,
                                                   const CorpusProvider& provider,
                                                   const Lexicon& seed,
                                                   std::size_t max_docs) {
  if (max_docs == 0) throw std::invalid_argument("max_docs must be at least 1");
  std::vector<Document> docs;
  try {
    docs = provider.query(term, max_docs);
  } catch (const ProviderError& e) {
    throw EstimationError("provider failed for '" + std::string(term) + "': " + e.what());
  }
  if (docs.empty()) return std::nullopt;
  if (docs.size() > max_docs) {
    throw EstimationError("provider returned more than max_docs documents");
  }
  std::vector<double> values;
  values.reserve(docs.size());
  for (const Document& doc : docs) values.push_back(document_strength(doc, term, seed).value());
  return SentimentStrength::clamped(detail::symmetric_mean(std::move(values)));
}

EstimationRun estimate_all(const Vocabulary& vocabulary, const CorpusProvider& provider,
                           const Lexicon& seed, const EstimationOptions& options) {
  if (options.max_docs == 0) throw std::invalid_argument("max_docs must be at least 1");
  std::vector<std::string> terms;
  for (const auto& [term, entry] : vocabulary) {
    if (!seed.contains(term)) terms.push_back(term);
  }

  struct Outcome {
    std::optional<SentimentStrength> strength;
    std::string error;
  };
  std::vector<Outcome> outcomes(terms.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < terms.size(); i += stride) {
      try {
        outcomes[i].strength = estimate_strength(terms[i], provider, seed, options.max_docs);
      } catch (const Error& e) {
        outcomes[i].error = e.what();
      }
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  EstimationRun run;
  run.attempted = terms.size();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!outcomes[i].error.empty()) {
      run.failures.push_back({terms[i], outcomes[i].error});
    } else if (outcomes[i].strength) {
      run.labeled.insert({terms[i], *outcomes[i].strength, Stage::kCorpusEstimate, {}});
    } else {
      run.unlabelable.push_back(terms[i]);
    }
  }
  return run;
}

}  // namespace slanglex
