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

#include "doctest.h"
#include "slanglex/tokenizer.h"

using namespace slanglex;
using Tokens = std::vector<std::string>;

TEST_CASE("tokenize") {
  CHECK(tokenize("Apple you knocked it out of the park!") ==
        Tokens{"apple", "you", "knocked", "it", "out", "of", "the", "park"});
  CHECK(tokenize("battery life's shit hot") == Tokens{"battery", "life's", "shit", "hot"});
  CHECK(tokenize(":) great") == Tokens{":)", "great"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("  \t\n ").empty());
  CHECK(tokenize("... !!! ,") .empty());
  CHECK(tokenize("\"well-known\" (co-op) 'quoted'") == Tokens{"well-known", "co-op", "quoted"});
  CHECK(tokenize("WOW!!! so GOOD?!") == Tokens{"wow", "so", "good"});
  CHECK(tokenize("#blessed @user") == Tokens{"blessed", "user"});
  CHECK(tokenize("\xC2\xBFQU\xC3\x89?") == Tokens{"qu\xC3\xA9"});
  CHECK(tokenize("cafe\xCC\x81!") == Tokens{"caf\xC3\xA9"});
}

TEST_CASE("emoticons survive tokenization verbatim") {
  for (const char* e : {":)", ":-)", ":(", ":-(", ";)", ":D", ":P", ":'(", "=)", "xD", "XD",
                        "<3", "</3", "^_^", "T_T", "(:", "):", ":-D", ":))", ":((", "^^"}) {
    CAPTURE(e);
    CHECK(looks_like_emoticon(e));
    CHECK(tokenize(std::string("so ") + e + " yes") == Tokens{"so", e, "yes"});
  }
  for (const char* word : {"lol", ":", "))", "x", "a:)", "3", "--"}) {
    CAPTURE(word);
    CHECK_FALSE(looks_like_emoticon(word));
  }
  Tokenizer custom({"(y)", "\xF0\x9F\x98\x82"});
  CHECK(custom("nice (y)") == Tokens{"nice", "(y)"});
  CHECK(tokenize("nice (y)") == Tokens{"nice", "y"});
}

TEST_CASE("term_tokens normalizes both sides") {
  CHECK(term_tokens("Shit  Hot") == Tokens{"shit", "hot"});
  CHECK(term_tokens("life's") == Tokens{"life's"});
}

TEST_CASE("find_occurrences") {
  const Tokens a{"a", "shit", "hot", "b"};
  CHECK(find_occurrences(a, "shit hot") == std::vector<Span>{{1, 2}});
  const Tokens b{"lol", "x", "lol"};
  CHECK(find_occurrences(b, "lol") == std::vector<Span>{{0, 0}, {2, 2}});
  CHECK(find_occurrences(b, "rofl").empty());
  const Tokens c{"ha", "ha", "ha"};
  CHECK(find_occurrences(c, "ha ha") == std::vector<Span>{{0, 1}});
  const Tokens d{"x"};
  CHECK(find_occurrences(d, "x y").empty());
}
