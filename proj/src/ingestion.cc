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

#include "slanglex/ingestion.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "slanglex/errors.h"
#include "slanglex/files.h"
#include "slanglex/lexicon.h"
#include "text_util.h"

namespace slanglex {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kExtensionBase = "http://www.urbandictionary.com/yesterday.php?date=";

std::vector<std::string> string_list(const json& record, const char* field, bool required,
                                     std::size_t line) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) {
    if (required) throw IngestError(line, std::string("missing field '") + field + "'");
    return {};
  }
  if (!it->is_array()) throw IngestError(line, std::string("'") + field + "' must be a list");
  std::vector<std::string> out;
  for (const json& item : *it) {
    if (!item.is_string()) {
      throw IngestError(line, std::string("'") + field + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  if (required && out.empty()) {
    throw IngestError(line, std::string("'") + field + "' must not be empty");
  }
  return out;
}

std::uint64_t vote_count(const json& record, const char* field, std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) throw IngestError(line, std::string("missing field '") + field + "'");
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  if (it->is_number_integer()) {
    throw IngestError(line, std::string("'") + field + "' must be non-negative");
  }
  throw IngestError(line, std::string("'") + field + "' must be an integer");
}

SlangEntry parse_record(std::string_view line, std::size_t line_no) {
  json record = json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (record.is_discarded()) throw IngestError(line_no, "malformed JSON record");
  if (!record.is_object()) throw IngestError(line_no, "record is not an object");

  SlangEntry entry;
  auto term = record.find("term");
  if (term == record.end() || !term->is_string()) {
    throw IngestError(line_no, "missing field 'term'");
  }
  entry.term = term->get<std::string>();
  try {
    normalize_term(entry.term);
  } catch (const NormalizationError&) {
    throw IngestError(line_no, "term is empty");
  }
  entry.meanings = string_list(record, "meanings", true, line_no);
  entry.examples = string_list(record, "examples", true, line_no);
  entry.related_terms = string_list(record, "related_terms", false, line_no);
  entry.upvotes = vote_count(record, "upvotes", line_no);
  entry.downvotes = vote_count(record, "downvotes", line_no);
  if (auto date = record.find("created_date"); date != record.end() && !date->is_null()) {
    if (!date->is_string()) throw IngestError(line_no, "'created_date' must be a string");
    entry.created_date = parse_date(date->get<std::string>());
    if (!entry.created_date) throw IngestError(line_no, "'created_date' is not YYYY-MM-DD");
  }
  return entry;
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  const auto y = detail::parse_number<int>(text.substr(0, 4));
  const auto m = detail::parse_number<unsigned>(text.substr(5, 2));
  const auto d = detail::parse_number<unsigned>(text.substr(8, 2));
  if (!y || !m || !d) return std::nullopt;
  Date date{std::chrono::year(*y), std::chrono::month(*m), std::chrono::day(*d)};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_date(Date date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::string serialize_entry(const SlangEntry& entry) {
  ordered_json record;
  record["term"] = entry.term;
  record["meanings"] = entry.meanings;
  record["examples"] = entry.examples;
  record["related_terms"] = entry.related_terms;
  record["upvotes"] = entry.upvotes;
  record["downvotes"] = entry.downvotes;
  if (entry.created_date) record["created_date"] = format_date(*entry.created_date);
  return record.dump();
}

IngestResult parse_entries(std::string_view text, IngestMode mode) {
  IngestResult result;
  std::size_t line_no = 0;
  for (std::string_view line : detail::lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      result.entries.push_back(parse_record(line, line_no));
    } catch (const IngestError& e) {
      if (mode == IngestMode::kStrict) throw;
      result.skipped.push_back({line_no, e.what()});
    }
  }
  return result;
}

IngestResult parse_entries(std::istream& in, IngestMode mode) {
  return parse_entries(detail::slurp(in), mode);
}

IngestResult load_entries(const std::vector<std::filesystem::path>& paths, IngestMode mode) {
  IngestResult all;
  for (const auto& path : paths) {
    IngestResult one;
    try {
      one = parse_entries(read_file(path), mode);
    } catch (const IngestError& e) {
      throw IngestError(e.line(), path.string() + ": " + e.what());
    }
    for (auto& issue : one.skipped) issue.message = path.string() + ": " + issue.message;
    std::move(one.entries.begin(), one.entries.end(), std::back_inserter(all.entries));
    std::move(one.skipped.begin(), one.skipped.end(), std::back_inserter(all.skipped));
  }
  return all;
}

const SlangEntry* Vocabulary::find(std::string_view term) const {
  auto it = terms_.find(term);
  return it == terms_.end() ? nullptr : &it->second;
}

std::vector<SlangEntry> Vocabulary::entries() const {
  std::vector<SlangEntry> out;
  out.reserve(terms_.size());
  for (const auto& [term, entry] : terms_) out.push_back(entry);
  return out;
}

Vocabulary build_vocabulary(const std::vector<SlangEntry>& entries) {
  std::map<std::string, std::vector<const SlangEntry*>, std::less<>> groups;
  for (const SlangEntry& e : entries) groups[normalize_term(e.term)].push_back(&e);

  Vocabulary vocabulary;
  for (auto& [term, group] : groups) {
    std::stable_sort(group.begin(), group.end(), [](const SlangEntry* a, const SlangEntry* b) {
      return a->net_votes() > b->net_votes();
    });
    SlangEntry merged;
    merged.term = term;
    std::set<std::string, std::less<>> seen_related;
    for (const SlangEntry* e : group) {
      merged.meanings.insert(merged.meanings.end(), e->meanings.begin(), e->meanings.end());
      merged.examples.insert(merged.examples.end(), e->examples.begin(), e->examples.end());
      for (const std::string& raw : e->related_terms) {
        std::string related;
        try {
          related = normalize_term(raw);
        } catch (const NormalizationError&) {
          continue;
        }
        if (related == term) continue;
        if (seen_related.insert(related).second) merged.related_terms.push_back(related);
      }
      merged.upvotes += e->upvotes;
      merged.downvotes += e->downvotes;
      if (e->created_date && (!merged.created_date || *e->created_date < *merged.created_date)) {
        merged.created_date = e->created_date;
      }
    }
    vocabulary.terms_.emplace(term, std::move(merged));
  }
  return vocabulary;
}

std::string extension_url(Date date) {
  return std::string(kExtensionBase) + format_date(date);
}

std::string DirectoryFetcher::fetch(const std::string& url) {
  if (!url.starts_with(kExtensionBase)) throw ProviderError("unsupported URL '" + url + "'");
  const std::string day = url.substr(kExtensionBase.size());
  if (!parse_date(day)) throw ProviderError("no date in URL '" + url + "'");
  for (const char* suffix : {".jsonl", ".jsonl.gz"}) {
    const std::filesystem::path candidate = dir_ / (day + suffix);
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec)) {
      try {
        return read_file(candidate);
      } catch (const IoError& e) {
        throw ProviderError(e.what());
      }
    }
  }
  throw ProviderError("no records for " + day + " in '" + dir_.string() + "'");
}

FetchReport fetch_new_entries(EntryFetcher& fetcher, Date from, Date to, IngestMode mode) {
  FetchReport report;
  using std::chrono::days;
  using std::chrono::sys_days;
  for (sys_days day = sys_days(from); day <= sys_days(to); day += days(1)) {
    const Date date(day);
    ++report.dates_requested;
    try {
      IngestResult parsed = parse_entries(fetcher.fetch(extension_url(date)), mode);
      for (auto& issue : parsed.skipped) {
        issue.message = format_date(date) + ": " + issue.message;
        report.skipped.push_back(std::move(issue));
      }
      std::move(parsed.entries.begin(), parsed.entries.end(),
                std::back_inserter(report.entries));
    } catch (const Error& e) {
      report.failures.push_back({date, e.what()});
    }
  }
  return report;
}

}  // namespace slanglex
