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

// Crowdsourced slang-dictionary entries: record parsing, vocabulary merging
// and the date-keyed extension workflow.

#ifndef SLANGLEX_INGESTION_H_
#define SLANGLEX_INGESTION_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slanglex {

using Date = std::chrono::year_month_day;

// YYYY-MM-DD; nullopt for anything else, including impossible dates.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(Date date);

struct SlangEntry {
  std::string term;
  std::vector<std::string> meanings;       // at least one
  std::vector<std::string> examples;       // at least one
  std::vector<std::string> related_terms;  // may be empty
  std::uint64_t upvotes = 0;
  std::uint64_t downvotes = 0;
  std::optional<Date> created_date;

  std::int64_t net_votes() const {
    return static_cast<std::int64_t>(upvotes) - static_cast<std::int64_t>(downvotes);
  }
  bool operator==(const SlangEntry&) const = default;
};

// One JSON object per line:
//   {"term": .., "meanings": [..], "examples": [..], "related_terms": [..],
//    "upvotes": n, "downvotes": n, "created_date": "YYYY-MM-DD"}
// related_terms and created_date are optional.
std::string serialize_entry(const SlangEntry& entry);

enum class IngestMode { kStrict, kLenient };

struct IngestIssue {
  std::size_t line;
  std::string message;
};

struct IngestResult {
  std::vector<SlangEntry> entries;
  std::vector<IngestIssue> skipped;  // lenient mode only
};

// Strict mode throws IngestError on the first bad record; lenient mode skips
// it and records the reason. Blank lines are ignored.
IngestResult parse_entries(std::istream& in, IngestMode mode);
IngestResult parse_entries(std::string_view text, IngestMode mode);
// Reads each file (gzip-transparent) in order. Issue messages carry the path.
IngestResult load_entries(const std::vector<std::filesystem::path>& paths, IngestMode mode);

// Normalized term -> merged entry.
class Vocabulary {
 public:
  using Map = std::map<std::string, SlangEntry, std::less<>>;

  const SlangEntry* find(std::string_view term) const;
  bool contains(std::string_view term) const { return find(term) != nullptr; }
  std::size_t size() const { return terms_.size(); }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  // The merged entries in term order, e.g. for persisting with serialize_entry.
  std::vector<SlangEntry> entries() const;

  bool operator==(const Vocabulary&) const = default;

 private:
  friend Vocabulary build_vocabulary(const std::vector<SlangEntry>& entries);
  Map terms_;
};

// Groups entries by normalized term. Within a group, meanings and examples are
// concatenated in descending net-vote order (ties keep input order), related
// terms are normalized, deduplicated and stripped of the term itself, votes
// are summed, and the earliest created_date is kept.
Vocabulary build_vocabulary(const std::vector<SlangEntry>& entries);

// http://www.urbandictionary.com/yesterday.php?date=YYYY-MM-DD
std::string extension_url(Date date);

// Maps a URL to raw entry records. Implementations throw ProviderError on
// failure.
class EntryFetcher {
 public:
  virtual ~EntryFetcher() = default;
  virtual std::string fetch(const std::string& url) = 0;
};

// Serves <dir>/YYYY-MM-DD.jsonl or <dir>/YYYY-MM-DD.jsonl.gz for the date in
// an extension URL. A missing file is a fetch failure.
class DirectoryFetcher : public EntryFetcher {
 public:
  explicit DirectoryFetcher(std::filesystem::path dir) : dir_(std::move(dir)) {}
  std::string fetch(const std::string& url) override;

 private:
  std::filesystem::path dir_;
};

struct FetchFailure {
  Date date;
  std::string message;
};

struct FetchReport {
  std::vector<SlangEntry> entries;  // date order, then record order
  std::vector<FetchFailure> failures;
  std::vector<IngestIssue> skipped;
  std::size_t dates_requested = 0;
};

// Fetches every date in [from, to]. A failing date, including a strict-mode
// record error, is recorded and the remaining dates are still fetched.
FetchReport fetch_new_entries(EntryFetcher& fetcher, Date from, Date to, IngestMode mode);

}  // namespace slanglex

#endif  // SLANGLEX_INGESTION_H_
