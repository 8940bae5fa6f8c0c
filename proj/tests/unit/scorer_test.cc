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

#include "doctest.h"
#include "slanglex/errors.h"
#include "slanglex/scorer.h"

using namespace slanglex;
using Tokens = std::vector<std::string>;

namespace {

Lexicon lexicon_of(std::initializer_list<std::pair<const char*, double>> items) {
  Lexicon lex;
  for (auto [t, s] : items) lex.insert({t, SentimentStrength::checked(s), Stage::kImported, {}});
  return lex;
}

Lexicon scaled(const Lexicon& lex, double c) {
  Lexicon out;
  for (const auto& [t, e] : lex) {
    out.insert({t, SentimentStrength::clamped(e.strength.value() * c), e.stage, e.sources});
  }
  return out;
}

LabeledDocument labeled(std::string text, Polarity gold) {
  return {Document::from_text("d", std::move(text)), gold};
}

}  // namespace

TEST_CASE("match_terms") {
  const Lexicon lex = lexicon_of({{"shit hot", 2}, {"shit", -2}});
  const Tokens t1{"battery", "life's", "shit", "hot"};
  CHECK(match_terms(t1, lex) == std::vector<TermMatch>{{"shit hot", {2, 3}, 2.0}});
  const Tokens t2{"shit"};
  CHECK(match_terms(t2, lex) == std::vector<TermMatch>{{"shit", {0, 0}, -2.0}});
  const Tokens t3{"nothing", "here"};
  CHECK(match_terms(t3, lex).empty());
  const Tokens t4{"shit", "shit", "hot", "shit"};
  CHECK(match_terms(t4, lex) ==
        std::vector<TermMatch>{{"shit", {0, 0}, -2.0}, {"shit hot", {1, 2}, 2.0}, {"shit", {3, 3}, -2.0}});

  SUBCASE("falls back to a shorter phrase") {
    const Lexicon l = lexicon_of({{"a b c", 1}, {"a b", -1}, {"c", 2}});
    const Tokens t{"a", "b", "x", "a", "b", "c"};
    CHECK(match_terms(t, l) ==
          std::vector<TermMatch>{{"a b", {0, 1}, -1.0}, {"a b c", {3, 5}, 1.0}});
  }
  SUBCASE("spans are disjoint and sorted on random input") {
    const Lexicon l = lexicon_of({{"a", 1}, {"a b", -1}, {"b c a", 0.5}, {"c", -0.5}, {"b b", 2}});
    std::mt19937_64 rng(12);
    const char* words[] = {"a", "b", "c", "d"};
    for (int trial = 0; trial < 1000; ++trial) {
      Tokens t;
      for (int i = 0; i < 15; ++i) t.push_back(words[rng() % 4]);
      const auto m = match_terms(t, l);
      for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m[i].span.first <= m[i].span.last);
        if (i > 0) CHECK(m[i - 1].span.last < m[i].span.first);
      }
    }
  }
}

TEST_CASE("score_text") {
  const Lexicon lex = lexicon_of({{"great", 2}, {"meh", 1}, {"awful", -2}, {"shit hot", 2}, {"shit", -2}});
  ScoreBreakdown a = score_text("great stuff", lex);
  CHECK(a.total == 2.0);
  CHECK(a.polarity == Polarity::kPositive);
  ScoreBreakdown b = score_text("meh, awful!", lex);
  CHECK(b.total == -1.0);
  CHECK(b.polarity == Polarity::kNegative);
  ScoreBreakdown c = score_text("", lex);
  CHECK(c.total == 0.0);
  CHECK(c.polarity == Polarity::kNeutral);
  CHECK(score_text("great awful", lex).polarity == Polarity::kNeutral);
  CHECK(score_text("battery life's shit hot", lex).polarity == Polarity::kPositive);
  CHECK(score_text("Battery life's SHIT HOT!!", lex).matches.size() == 1);
}

TEST_CASE("polarity is invariant under positive scaling") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  Lexicon lex;
  const char* words[] = {"w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7"};
  for (const char* w : words) lex.insert({w, SentimentStrength::checked(u(rng)), Stage::kImported, {}});
  for (double c : {0.5, 3.0, 10.0}) {
    const Lexicon big = scaled(lex, c);
    for (int trial = 0; trial < 500; ++trial) {
      std::string text;
      for (int i = 0; i < 6; ++i) text += std::string(words[rng() % 8]) + " ";
      CHECK(score_text(text, lex).polarity == score_text(text, big).polarity);
    }
  }
  // Exact cancellation stays neutral after scaling.
  const Lexicon l = lexicon_of({{"a", 0.1}, {"b", 0.05}, {"c", -0.15}});
  for (double c : {0.5, 3.0, 10.0}) {
    CHECK(score_text("a b c", scaled(l, c)).polarity == score_text("a b c", l).polarity);
  }
}

TEST_CASE("contains_slang") {
  const Lexicon lex = lexicon_of({{"on fleek", 2}});
  CHECK(contains_slang(Document::from_text("1", "brows on fleek"), lex));
  CHECK_FALSE(contains_slang(Document::from_text("2", "brows on point"), lex));
}

TEST_CASE("evaluate") {
  const Lexicon lex = lexicon_of({{"good", 1}, {"bad", -1}});
  SUBCASE("perfect predictions") {
    const auto r = evaluate({labeled("good", Polarity::kPositive), labeled("bad", Polarity::kNegative)},
                            lex, Subset::kAll);
    CHECK(r.accuracy == 1.0);
    CHECK(r.positive.precision == 1.0);
    CHECK(r.positive.recall == 1.0);
    CHECK(r.negative.f_score == 1.0);
  }
  SUBCASE("all neutral predictions") {
    const auto r = evaluate({labeled("x", Polarity::kPositive), labeled("y", Polarity::kNegative)},
                            lex, Subset::kAll);
    CHECK(r.accuracy == 0.0);
    CHECK(r.positive.recall == 0.0);
    CHECK(r.negative.recall == 0.0);
    CHECK(r.positive.f_score == 0.0);
    CHECK(r.confusion[0][2] == 1);
  }
  SUBCASE("slang subset") {
    const std::vector<LabeledDocument> corpus{labeled("good", Polarity::kPositive),
                                              labeled("nothing", Polarity::kPositive),
                                              labeled("bad", Polarity::kPositive)};
    const auto all = evaluate(corpus, lex, Subset::kAll);
    const auto slang = evaluate(corpus, lex, Subset::kSlangOnly);
    CHECK(all.documents == 3);
    CHECK(slang.documents == 2);
    CHECK(slang.accuracy == 0.5);
    CHECK_THROWS_AS(evaluate({labeled("none", Polarity::kPositive)}, lex, Subset::kSlangOnly),
                    EmptyEvaluationError);
    CHECK_THROWS_AS(evaluate({}, lex, Subset::kAll), EmptyEvaluationError);
  }
  SUBCASE("all equals slang-only when every document has slang") {
    const std::vector<LabeledDocument> corpus{labeled("good good bad", Polarity::kPositive),
                                              labeled("bad", Polarity::kNeutral),
                                              labeled("good bad", Polarity::kNegative)};
    const auto a = evaluate(corpus, lex, Subset::kAll);
    const auto b = evaluate(corpus, lex, Subset::kSlangOnly);
    CHECK(a.confusion == b.confusion);
    CHECK(a.render_json() == b.render_json());
    CHECK(a.accuracy == double(a.confusion[0][0] + a.confusion[1][1] + a.confusion[2][2]) / 3);
  }
  SUBCASE("one_vs_all with no predictions of the class") {
    std::array<std::array<std::size_t, 3>, 3> m{};
    m[0][2] = 4;
    const ClassScores s = one_vs_all(m, Polarity::kPositive);
    CHECK(s.precision == 0.0);
    CHECK(s.recall == 0.0);
    CHECK(s.f_score == 0.0);
  }
  SUBCASE("reports render") {
    const auto r = evaluate({labeled("good", Polarity::kPositive)}, lex, Subset::kAll);
    CHECK(r.render_text().find("accuracy   100.00%") != std::string::npos);
    CHECK(r.render_json().find("\"f_score\"") != std::string::npos);
  }
}
