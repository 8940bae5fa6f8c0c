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

#include <random>
#include <sstream>

#include "doctest.h"
#include "slanglex/distant_labeler.h"
#include "slanglex/errors.h"

using namespace slanglex;
using Tokens = std::vector<std::string>;

namespace {

std::optional<LabeledDocument> label(const std::string& text,
                                     const EmoticonSet& set = EmoticonSet::defaults()) {
  return label_by_emoticon(Document::from_text("d", text, set.tokenizer()), set);
}

}  // namespace

TEST_CASE("label_by_emoticon") {
  auto pos = label(":) great day");
  REQUIRE(pos.has_value());
  CHECK(pos->gold == Polarity::kPositive);
  CHECK(pos->document.tokens == Tokens{"great", "day"});
  CHECK(pos->document.text == "great day");

  auto neg = label("worst :( day ever :(");
  REQUIRE(neg.has_value());
  CHECK(neg->gold == Polarity::kNegative);
  CHECK(neg->document.tokens == Tokens{"worst", "day", "ever"});

  CHECK_FALSE(label("happy :) sad :(").has_value());
  CHECK_FALSE(label("no faces here").has_value());
  CHECK_FALSE(label("").has_value());
}

TEST_CASE("position and multiplicity do not matter") {
  const auto a = label(":) great day");
  const auto b = label("great :) day :) :)");
  const auto c = label("great day :-)");
  REQUIRE((a && b && c));
  CHECK(a->gold == b->gold);
  CHECK(a->gold == c->gold);
  CHECK(a->document.tokens == b->document.tokens);
}

TEST_CASE("swapping the sets swaps the labels") {
  const EmoticonSet set = EmoticonSet::defaults();
  const EmoticonSet swapped = set.swapped();
  for (const char* text : {":) ok", "bad :(", ":) :(", "plain", "<3 you", "T_T why"}) {
    CAPTURE(text);
    const auto l = label(text, set);
    const auto s = label(text, swapped);
    REQUIRE(l.has_value() == s.has_value());
    if (!l) continue;
    CHECK(l->gold != s->gold);
    CHECK(l->document.tokens == s->document.tokens);
  }
}

TEST_CASE("EmoticonSet validation and file format") {
  CHECK_THROWS_AS(EmoticonSet({}, {":("}), std::invalid_argument);
  CHECK_THROWS_AS(EmoticonSet({":)"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(EmoticonSet({":)"}, {":)"}), std::invalid_argument);
  CHECK_THROWS_AS(EmoticonSet({": )"}, {":("}), std::invalid_argument);

  std::istringstream in("# faces\n[positive]\n:)\n(y)\n\n[negative]\n:(\n");
  const EmoticonSet set = EmoticonSet::parse(in);
  CHECK(set.positive() == std::set<std::string>{":)", "(y)"});
  CHECK(set.contains("(y)"));
  CHECK_FALSE(set.contains("y"));
  // Custom entries survive tokenization thanks to the set-aware tokenizer.
  auto l = label("nice (y)", set);
  REQUIRE(l.has_value());
  CHECK(l->gold == Polarity::kPositive);
  CHECK(l->document.tokens == Tokens{"nice"});

  std::istringstream round(set.serialize());
  const EmoticonSet again = EmoticonSet::parse(round);
  CHECK(again.positive() == set.positive());
  CHECK(again.negative() == set.negative());

  std::istringstream orphan(":)\n[negative]\n:(\n");
  CHECK_THROWS_AS(EmoticonSet::parse(orphan), ParseError);
  std::istringstream one_sided("[positive]\n:)\n");
  CHECK_THROWS_AS(EmoticonSet::parse(one_sided), ParseError);
}

TEST_CASE("shipped emoticon file matches the built-in set") {
  const EmoticonSet shipped = EmoticonSet::load(SLANGLEX_DATA_DIR "/emoticons.txt");
  const EmoticonSet builtin = EmoticonSet::defaults();
  CHECK(shipped.positive() == builtin.positive());
  CHECK(shipped.negative() == builtin.negative());
}

TEST_CASE("build_eval_corpus") {
  const EmoticonSet set = EmoticonSet::defaults();
  std::istringstream in("1\t:) lovely\n2\thmm :( :)\n3\tbad day :(\n");
  const EvalCorpus corpus = build_eval_corpus(in, set);
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].document.id == "1");
  CHECK(corpus.documents[1].gold == Polarity::kNegative);
  CHECK(corpus.report.read == 3);
  CHECK(corpus.report.positive == 1);
  CHECK(corpus.report.negative == 1);
  CHECK(corpus.report.discarded_conflict == 1);
  CHECK(corpus.report.discarded_no_emoticon == 0);

  std::istringstream empty("");
  const EvalCorpus none = build_eval_corpus(empty, set);
  CHECK(none.documents.empty());
  CHECK(none.report.read == 0);
}

TEST_CASE("labeled corpus round trip") {
  std::istringstream in("a\t:) yay\nb\tboo :(\n");
  const EvalCorpus corpus = build_eval_corpus(in, EmoticonSet::defaults());
  const std::string text = serialize_labeled_corpus(corpus.documents);
  CHECK(text == "a\tpositive\tyay\nb\tnegative\tboo\n");
  std::istringstream back(text);
  const auto parsed = parse_labeled_corpus(back);
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].gold == Polarity::kPositive);
  CHECK(parsed[1].document.tokens == Tokens{"boo"});
  CHECK(serialize_labeled_corpus(parsed) == text);

  std::istringstream bad("a\tgood\ttext\n");
  CHECK_THROWS_AS(parse_labeled_corpus(bad), ParseError);
  std::istringstream fields("a\tpositive\n");
  CHECK_THROWS_AS(parse_labeled_corpus(fields), ParseError);
}
