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

#include "slanglex/lexicon_io.h"

#include <istream>
#include <sstream>

#include "slanglex/errors.h"
#include "slanglex/files.h"
#include "text_util.h"

namespace slanglex {
namespace {

std::string normalized_or_throw(std::string_view raw, std::size_t line) {
  try {
    return normalize_term(raw);
  } catch (const NormalizationError&) {
    throw ParseError(line, "empty term");
  }
}

void insert_or_throw(Lexicon& lexicon, LexiconEntry entry, std::size_t line) {
  if (lexicon.contains(entry.term)) {
    throw ParseError(line, "duplicate term '" + entry.term + "'");
  }
  lexicon.insert(std::move(entry));
}

}  // namespace

std::string export_slangsd(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [term, entry] : lexicon) {
    out += term;
    out += '\t';
    out += std::to_string(classify(entry.strength).value());
    out += '\n';
  }
  return out;
}

Lexicon parse_slangsd(std::istream& in) {
  const std::string text = detail::slurp(in);
  Lexicon lexicon;
  std::size_t line_no = 0;
  for (std::string_view line : detail::lines(text)) {
    ++line_no;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    const auto cls = detail::parse_number<int>(fields[1]);
    if (!cls || *cls < -2 || *cls > 2) {
      throw ParseError(line_no, "class '" + std::string(fields[1]) + "' not in {-2..2}");
    }
    LexiconEntry entry;
    entry.term = normalized_or_throw(fields[0], line_no);
    entry.strength = SentimentStrength::checked(*cls);
    entry.stage = Stage::kImported;
    insert_or_throw(lexicon, std::move(entry), line_no);
  }
  return lexicon;
}

std::string export_idiom_table(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [term, entry] : lexicon) {
    const int cls = classify(entry.strength).value();
    if (cls == 0) continue;
    out += term;
    out += '\t';
    out += std::to_string(2 * cls);
    out += '\n';
  }
  return out;
}

std::string export_staged(const Lexicon& lexicon) {
  std::string out(kStagedHeader);
  out += '\n';
  for (const auto& [term, entry] : lexicon) {
    out += term;
    out += '\t';
    out += detail::format_double(entry.strength.value());
    out += '\t';
    out += stage_name(entry.stage);
    out += '\t';
    if (entry.sources.empty()) {
      out += '-';
    } else {
      for (std::size_t i = 0; i < entry.sources.size(); ++i) {
        if (i) out += ',';
        out += entry.sources[i];
      }
    }
    out += '\n';
  }
  return out;
}

Lexicon parse_staged(std::istream& in) {
  const std::string text = detail::slurp(in);
  const auto all = detail::lines(text);
  if (all.empty() || all.front() != kStagedHeader) {
    throw ParseError(1, "missing staged-lexicon header");
  }
  Lexicon lexicon;
  for (std::size_t i = 1; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = detail::split(all[i], '\t');
    if (fields.size() != 4) {
      throw ParseError(line_no, "expected 4 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    LexiconEntry entry;
    entry.term = std::string(fields[0]);
    if (!is_normalized_term(entry.term)) {
      throw ParseError(line_no, "term '" + entry.term + "' is not normalized");
    }
    const auto value = detail::parse_number<double>(fields[1]);
    if (!value) throw ParseError(line_no, "bad strength '" + std::string(fields[1]) + "'");
    try {
      entry.strength = SentimentStrength::checked(*value);
    } catch (const RangeError& e) {
      throw ParseError(line_no, e.what());
    }
    const auto stage = stage_from_name(fields[2]);
    if (!stage) throw ParseError(line_no, "unknown stage '" + std::string(fields[2]) + "'");
    entry.stage = *stage;
    if (fields[3] != "-") {
      for (std::string_view id : detail::split(fields[3], ',')) {
        if (id.empty()) throw ParseError(line_no, "empty source id");
        entry.sources.emplace_back(id);
      }
    }
    if ((entry.stage == Stage::kSeedLexicon) == entry.sources.empty()) {
      throw ParseError(line_no, "sources must be listed exactly for seed entries");
    }
    insert_or_throw(lexicon, std::move(entry), line_no);
  }
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  try {
    if (in.str().starts_with(kStagedHeader)) return parse_staged(in);
    return parse_slangsd(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

SeedSource parse_seed_source(std::istream& in, std::string id, ScaleMap scale) {
  SeedSource source{std::move(id), {}, scale};
  const std::string text = detail::slurp(in);
  std::size_t line_no = 0;
  for (std::string_view line : detail::lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected term<TAB>value");
    }
    std::string_view number = fields[1];
    if (number.starts_with('+')) number.remove_prefix(1);
    const auto value = detail::parse_number<double>(number);
    if (!value) throw ParseError(line_no, "bad value '" + std::string(fields[1]) + "'");
    source.terms.emplace_back(std::string(fields[0]), *value);
  }
  return source;
}

SeedSource load_seed_source(const std::filesystem::path& path, std::string id,
                            ScaleMap scale) {
  std::istringstream in(read_file(path));
  return parse_seed_source(in, std::move(id), scale);
}

}  // namespace slanglex
