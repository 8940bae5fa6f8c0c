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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "slanglex/errors.h"
#include "slanglex/lexicon.h"
#include "slanglex/lexicon_io.h"

using namespace slanglex;

namespace {

LexiconEntry entry(std::string term, double strength, Stage stage = Stage::kCorpusEstimate) {
  LexiconEntry e{std::move(term), SentimentStrength::checked(strength), stage, {}};
  if (stage == Stage::kSeedLexicon) e.sources = {"test"};
  return e;
}

Lexicon lexicon_of(std::initializer_list<std::pair<const char*, double>> items) {
  Lexicon lex;
  for (auto [t, s] : items) lex.insert(entry(t, s));
  return lex;
}

}  // namespace

TEST_CASE("normalize_term") {
  CHECK(normalize_term("LoL") == "lol");
  CHECK(normalize_term("  Shit   Hot ") == "shit hot");
  CHECK(normalize_term("a\tb\nc") == "a b c");
  CHECK_THROWS_AS(normalize_term("   "), NormalizationError);
  CHECK_THROWS_AS(normalize_term(""), NormalizationError);

  SUBCASE("unicode case folding and NFC") {
    // "CAFE" + combining acute composes to a single code point.
    CHECK(normalize_term("CAFE\xCC\x81") == "caf\xC3\xA9");
    CHECK(normalize_term("\xC3\x89T\xC3\x89") == "\xC3\xA9t\xC3\xA9");
    // U+3000 ideographic space counts as whitespace.
    CHECK(normalize_term("a\xE3\x80\x80\xE3\x80\x80z") == "a z");
  }
  CHECK(is_normalized_term("shit hot"));
  CHECK_FALSE(is_normalized_term("Shit hot"));
  CHECK_FALSE(is_normalized_term("shit  hot"));
}

TEST_CASE("classify rounds half away from zero") {
  auto cls = [](double s) { return classify(SentimentStrength::checked(s)).value(); };
  CHECK(cls(0.4) == 0);
  CHECK(cls(1.5) == 2);
  CHECK(cls(-1.5) == -2);
  CHECK(cls(0.5) == 1);
  CHECK(cls(-0.5) == -1);
  CHECK(cls(-0.49) == 0);
  CHECK(cls(2.0) == 2);

  SUBCASE("odd symmetry") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 10000; ++i) {
      const double s = u(rng);
      CHECK(cls(-s) == -cls(s));
    }
    for (double s = -2.0; s <= 2.0; s += 0.25) CHECK(cls(-s) == -cls(s));
  }
}

TEST_CASE("strength construction") {
  CHECK(SentimentStrength::clamped(3.0).value() == 2.0);
  CHECK(SentimentStrength::clamped(-7.0).value() == -2.0);
  CHECK_THROWS_AS(SentimentStrength::checked(2.0000001), RangeError);
  CHECK_THROWS_AS(SentimentStrength::checked(std::nan("")), RangeError);
  CHECK_THROWS_AS(SentimentClass::of(3), RangeError);
}

TEST_CASE("lexicon invariants") {
  Lexicon lex;
  lex.insert(entry("lol", 1.0));
  CHECK_THROWS_AS(lex.insert(entry("lol", 2.0)), std::invalid_argument);
  CHECK_THROWS_AS(lex.insert(entry("LOL", 2.0)), std::invalid_argument);
  LexiconEntry seed_without_sources{"x", {}, Stage::kSeedLexicon, {}};
  CHECK_THROWS_AS(lex.insert(seed_without_sources), std::invalid_argument);
  LexiconEntry corpus_with_sources{"y", {}, Stage::kCorpusEstimate, {"a"}};
  CHECK_THROWS_AS(lex.insert(corpus_with_sources), std::invalid_argument);
  lex.insert(entry("out of the park", 2.0));
  CHECK(lex.max_phrase_tokens() == 4);
  for (const auto& [key, e] : lex) CHECK(key == e.term);
}

TEST_CASE("merge_seed_lexicons") {
  SUBCASE("single source passthrough") {
    Lexicon lex = merge_seed_lexicons({{"a", {{"great", 2.0}}, {}}});
    REQUIRE(lex.size() == 1);
    CHECK(lex.find("great")->strength.value() == 2.0);
    CHECK(lex.find("great")->stage == Stage::kSeedLexicon);
    CHECK(lex.find("great")->sources == std::vector<std::string>{"a"});
  }
  SUBCASE("average across sources") {
    Lexicon lex = merge_seed_lexicons({{"a", {{"good", 1.0}}, {}}, {"b", {{"Good", 2.0}}, {}}});
    CHECK(lex.find("good")->strength.value() == 1.5);
    CHECK(lex.find("good")->sources == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("empty") { CHECK(merge_seed_lexicons({}).empty()); }
  SUBCASE("scale maps") {
    // Binary lexicon mapped to +-1, a -5..5 lexicon mapped onto -2..2.
    SeedSource binary{"bin", {{"bad", -1}, {"nice", 1}}, {}};
    SeedSource afinn{"afinn", {{"bad", -5}, {"nice", 2.5}}, ScaleMap::between(-5, 5, -2, 2)};
    Lexicon lex = merge_seed_lexicons({binary, afinn});
    CHECK(lex.find("bad")->strength.value() == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(lex.find("nice")->strength.value() == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("out-of-range mapping") {
    CHECK_THROWS_AS(merge_seed_lexicons({{"a", {{"x", 3.0}}, {}}}), ScaleError);
    CHECK_THROWS_AS(merge_seed_lexicons({{"a", {{"x", 1.0}}, ScaleMap{-1.0, 0.0}}}), ScaleError);
  }
  SUBCASE("duplicate ids rejected") {
    CHECK_THROWS_AS(merge_seed_lexicons({{"a", {}, {}}, {"a", {}, {}}}), std::invalid_argument);
  }
  SUBCASE("duplicate spellings inside one source count once") {
    Lexicon lex = merge_seed_lexicons(
        {{"a", {{"Cool", 2.0}, {"cool", 1.0}}, {}}, {"b", {{"cool", -1.0}}, {}}});
    CHECK(lex.find("cool")->strength.value() == doctest::Approx((1.5 - 1.0) / 2));
  }
  SUBCASE("order independence and boundedness") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const char* words[] = {"a", "b", "c", "d", "e", "f"};
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<SeedSource> sources;
      for (int s = 0; s < 4; ++s) {
        SeedSource src{"s" + std::to_string(s), {}, {}};
        for (const char* w : words) {
          if (rng() % 2) src.terms.emplace_back(w, u(rng));
        }
        sources.push_back(src);
      }
      const Lexicon reference = merge_seed_lexicons(sources);
      std::shuffle(sources.begin(), sources.end(), rng);
      CHECK(merge_seed_lexicons(sources) == reference);
      for (const auto& [term, e] : reference) {
        double lo = 2, hi = -2;
        for (const auto& src : sources) {
          for (const auto& [t, v] : src.terms) {
            if (t == term) {
              lo = std::min(lo, v);
              hi = std::max(hi, v);
            }
          }
        }
        CHECK(e.strength.value() >= lo);
        CHECK(e.strength.value() <= hi);
      }
    }
  }
}

TEST_CASE("SlangSD format") {
  Lexicon lex;
  lex.insert(entry("shit hot", 2.0));
  CHECK(export_slangsd(lex) == "shit hot\t2\n");

  SUBCASE("sorted, classes only") {
    Lexicon l = lexicon_of({{"zzz", -0.6}, {"abc", 1.4}, {"mid", 0.2}});
    CHECK(export_slangsd(l) == "abc\t1\nmid\t0\nzzz\t-1\n");
  }
  SUBCASE("parse errors carry line numbers") {
    std::istringstream bad("ok\t1\nlol\t7\n");
    try {
      parse_slangsd(bad);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream fields("a\t1\t2\n");
    CHECK_THROWS_AS(parse_slangsd(fields), ParseError);
    std::istringstream not_int("a\t1.5\n");
    CHECK_THROWS_AS(parse_slangsd(not_int), ParseError);
    std::istringstream dup("a\t1\nA\t2\n");
    CHECK_THROWS_AS(parse_slangsd(dup), ParseError);
  }
  SUBCASE("round trip is a fixpoint after one export") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
      Lexicon l;
      for (int i = 0; i < 30; ++i) {
        const std::string term = "t" + std::to_string(rng() % 1000) + (rng() % 3 ? "" : " x");
        if (!l.contains(term)) l.insert(entry(term, u(rng)));
      }
      const std::string first = export_slangsd(l);
      std::istringstream in(first);
      const Lexicon parsed = parse_slangsd(in);
      CHECK(export_slangsd(parsed) == first);
      for (const auto& [term, e] : parsed) {
        CHECK(e.stage == Stage::kImported);
        CHECK(e.strength.value() == classify(l.find(term)->strength).value());
      }
    }
  }
}

TEST_CASE("idiom table") {
  Lexicon lex = lexicon_of({{"a", 2.0}, {"b", 0.3}, {"c", -1.0}, {"d", 1.2}, {"e", -1.6}});
  CHECK(export_idiom_table(lex) == "a\t4\nc\t-2\nd\t2\ne\t-4\n");
  CHECK(export_idiom_table(Lexicon{}).empty());
}

TEST_CASE("staged format is lossless") {
  Lexicon lex;
  lex.insert({"cool", SentimentStrength::checked(1.0 / 3.0), Stage::kSeedLexicon, {"a", "b"}});
  lex.insert(entry("meh", -0.1234567890123, Stage::kPropagation));
  lex.insert(entry("w00t", 2.0, Stage::kCorpusEstimate));
  std::istringstream in(export_staged(lex));
  CHECK(parse_staged(in) == lex);

  std::istringstream no_header("cool\t1\tseed\ta\n");
  CHECK_THROWS_AS(parse_staged(no_header), ParseError);
  std::istringstream bad_stage(std::string(kStagedHeader) + "\ncool\t1\twhat\t-\n");
  CHECK_THROWS_AS(parse_staged(bad_stage), ParseError);
  std::istringstream out_of_range(std::string(kStagedHeader) + "\ncool\t2.5\tcorpus\t-\n");
  CHECK_THROWS_AS(parse_staged(out_of_range), ParseError);
}

TEST_CASE("seed source parsing") {
  std::istringstream in("# comment\nGood\t+1\n\nbad\t-2.5\r\n");
  SeedSource s = parse_seed_source(in, "x", {});
  REQUIRE(s.terms.size() == 2);
  CHECK(s.terms[0] == std::pair<std::string, double>{"Good", 1.0});
  CHECK(s.terms[1].second == -2.5);
  std::istringstream bad("good\n");
  CHECK_THROWS_AS(parse_seed_source(bad, "x", {}), ParseError);
}
