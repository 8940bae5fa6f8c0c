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

#include "slanglex/distant_labeler.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "slanglex/errors.h"
#include "slanglex/files.h"
#include "text_util.h"

namespace slanglex {

std::string_view polarity_name(Polarity polarity) {
  switch (polarity) {
    case Polarity::kPositive:
      return "positive";
    case Polarity::kNegative:
      return "negative";
    case Polarity::kNeutral:
      return "neutral";
  }
  return "neutral";
}

std::optional<Polarity> polarity_from_name(std::string_view name) {
  for (Polarity p : {Polarity::kPositive, Polarity::kNegative, Polarity::kNeutral}) {
    if (polarity_name(p) == name) return p;
  }
  return std::nullopt;
}

EmoticonSet::EmoticonSet(std::set<std::string> positive, std::set<std::string> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  if (positive_.empty() || negative_.empty()) {
    throw std::invalid_argument("emoticon sets must both be non-empty");
  }
  for (const std::string& e : positive_) {
    if (negative_.contains(e)) {
      throw std::invalid_argument("emoticon '" + e + "' is both positive and negative");
    }
    if (e.find_first_of(" \t\n\r") != std::string::npos) {
      throw std::invalid_argument("emoticon '" + e + "' contains whitespace");
    }
  }
  for (const std::string& e : negative_) {
    if (e.find_first_of(" \t\n\r") != std::string::npos) {
      throw std::invalid_argument("emoticon '" + e + "' contains whitespace");
    }
  }
}

EmoticonSet EmoticonSet::defaults() {
  return EmoticonSet(
      {":)", ":-)", ":))", ":)))", ":]", "=)", "=]", ":D", ":-D", "=D", "xD", "XD", ";)",
       ";-)", ":P", ":-P", ":p", ":-p", "(:", "(-:", "<3", "^_^", "^^", ":3", ":*", "8)"},
      {":(", ":-(", ":((", ":(((", ":[", "=(", "=[", ":'(", ":'-(", ";(", "D:", "):", ")-:",
       ">:(", ":/", ":-/", ":\\", ":|", ":-|", "</3", "T_T", ";_;", "-_-", ":S"});
}

EmoticonSet EmoticonSet::parse(std::istream& in) {
  std::set<std::string> positive;
  std::set<std::string> negative;
  std::set<std::string>* current = nullptr;
  const std::string text = detail::slurp(in);
  std::size_t line_no = 0;
  for (std::string_view line : detail::lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[positive]") {
      current = &positive;
    } else if (line == "[negative]") {
      current = &negative;
    } else if (!current) {
      throw ParseError(line_no, "emoticon before any [positive]/[negative] section");
    } else {
      current->emplace(line);
    }
  }
  try {
    return EmoticonSet(std::move(positive), std::move(negative));
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

EmoticonSet EmoticonSet::load(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse(in);
}

std::string EmoticonSet::serialize() const {
  std::string out = "[positive]\n";
  for (const auto& e : positive_) out += e + "\n";
  out += "[negative]\n";
  for (const auto& e : negative_) out += e + "\n";
  return out;
}

bool EmoticonSet::contains(std::string_view token) const {
  const std::string key(token);
  return positive_.contains(key) || negative_.contains(key);
}

Tokenizer EmoticonSet::tokenizer() const {
  std::vector<std::string> all(positive_.begin(), positive_.end());
  all.insert(all.end(), negative_.begin(), negative_.end());
  return Tokenizer(std::move(all));
}

std::optional<LabeledDocument> label_by_emoticon(const Document& doc, const EmoticonSet& set) {
  bool has_positive = false;
  bool has_negative = false;
  for (const std::string& token : doc.tokens) {
    has_positive |= set.positive().contains(token);
    has_negative |= set.negative().contains(token);
  }
  if (has_positive == has_negative) return std::nullopt;

  LabeledDocument out;
  out.gold = has_positive ? Polarity::kPositive : Polarity::kNegative;
  out.document.id = doc.id;
  for (const std::string& token : doc.tokens) {
    if (!set.contains(token)) out.document.tokens.push_back(token);
  }
  for (std::string_view raw : raw_tokens(doc.text)) {
    if (set.contains(raw)) continue;
    if (!out.document.text.empty()) out.document.text += ' ';
    out.document.text += raw;
  }
  return out;
}

EvalCorpus build_eval_corpus(std::istream& in, const EmoticonSet& set) {
  EvalCorpus corpus;
  const Tokenizer tokenizer = set.tokenizer();
  for (auto& [id, text] : parse_id_text_lines(detail::slurp(in))) {
    ++corpus.report.read;
    const Document doc = Document::from_text(std::move(id), std::move(text), tokenizer);
    bool has_emoticon = std::any_of(doc.tokens.begin(), doc.tokens.end(),
                                    [&](const std::string& t) { return set.contains(t); });
    auto labeled = label_by_emoticon(doc, set);
    if (!labeled) {
      ++(has_emoticon ? corpus.report.discarded_conflict : corpus.report.discarded_no_emoticon);
      continue;
    }
    ++(labeled->gold == Polarity::kPositive ? corpus.report.positive : corpus.report.negative);
    corpus.documents.push_back(std::move(*labeled));
  }
  return corpus;
}

std::string serialize_labeled_corpus(const std::vector<LabeledDocument>& docs) {
  std::string out;
  for (const LabeledDocument& d : docs) {
    out += d.document.id;
    out += '\t';
    out += polarity_name(d.gold);
    out += '\t';
    out += d.document.text;
    out += '\n';
  }
  return out;
}

std::vector<LabeledDocument> parse_labeled_corpus(std::istream& in) {
  std::vector<LabeledDocument> docs;
  const std::string text = detail::slurp(in);
  std::size_t line_no = 0;
  for (std::string_view line : detail::lines(text)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    const std::size_t first = line.find('\t');
    const std::size_t second =
        first == std::string_view::npos ? first : line.find('\t', first + 1);
    if (second == std::string_view::npos) throw ParseError(line_no, "expected id<TAB>gold<TAB>text");
    const auto gold = polarity_from_name(line.substr(first + 1, second - first - 1));
    if (!gold) throw ParseError(line_no, "gold label must be positive, negative or neutral");
    docs.push_back({Document::from_text(std::string(line.substr(0, first)),
                                        std::string(line.substr(second + 1))),
                    *gold});
  }
  return docs;
}

std::vector<LabeledDocument> load_labeled_corpus(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  try {
    return parse_labeled_corpus(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

}  // namespace slanglex
