// Copyright 2026 The Emolex Authors.
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

#include <sstream>

#include "doctest.h"
#include "emolex/tokenizer.hpp"
#include "synthetic.hpp"

namespace emolex {
namespace {

using testing::Rng;
using Tokens = std::vector<std::string>;

TEST_CASE("tokenize splits, lowercases and drops punctuation") {
  CHECK(tokenize("This is BIZARRE, lunatic!") ==
        Tokens{"this", "is", "bizarre", "lunatic"});
  CHECK(tokenize("").empty());
  CHECK(tokenize("   \t\n").empty());
  CHECK(tokenize("covid-19 vaccine...works?") == Tokens{"covid", "19", "vaccine", "works"});
  CHECK(tokenize("snake_case") == Tokens{"snake", "case"});
}

TEST_CASE("tokenize removes URLs and mentions and keeps hashtag words") {
  CHECK(tokenize("see https://x.co @bob #fear") == Tokens{"see", "fear"});
  CHECK(tokenize("read www.example.com/a?b=c now") == Tokens{"read", "now"});
  CHECK(tokenize("HTTP://EXAMPLE.COM") == Tokens{});
  CHECK(tokenize("look:https://t.co/xyz") == Tokens{"look"});
  CHECK(tokenize("@alice_99: hi") == Tokens{"hi"});
  CHECK(tokenize("(@bob)") == Tokens{});
  CHECK(tokenize("#COVID19 #StayHome") == Tokens{"covid19", "stayhome"});
  // An '@' inside a word is not a mention.
  CHECK(tokenize("bob@example.org") == Tokens{"bob", "example", "org"});
}

TEST_CASE("tokenize handles apostrophes") {
  CHECK(tokenize("don't") == Tokens{"don't"});
  CHECK(tokenize("don\xE2\x80\x99t") == Tokens{"don't"});
  CHECK(tokenize("'quoted'") == Tokens{"quoted"});
  CHECK(tokenize("people's ''") == Tokens{"people's"});
}

TEST_CASE("tokenize handles non-ASCII letters and symbols") {
  CHECK(tokenize("Caf\xC3\xA9 NA\xC3\x8FVE") == Tokens{"caf\xC3\xA9", "na\xC3\xAFve"});
  CHECK(tokenize("\xCE\xA6\xCE\x9F\xCE\x92\xCE\x9F\xCE\xA3!") ==
        Tokens{"\xCF\x86\xCE\xBF\xCE\xB2\xCE\xBF\xCF\x83"});
  CHECK(tokenize("fear\xF0\x9F\x98\xB1panic") == Tokens{"fear", "panic"});
  CHECK(tokenize("\xE2\x80\x9Cscary\xE2\x80\x9D") == Tokens{"scary"});
  CHECK(tokenize("\xEF\xBB\xBFstart") == Tokens{"start"});
}

TEST_CASE("tokenize is case-insensitive") {
  Rng rng(51);
  for (int trial = 0; trial < 500; ++trial) {
    std::string s = testing::random_word(rng, "abcXYZ '!,.#@:/019", 0, 40);
    std::string upper = s;
    for (char& c : upper) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    CHECK(tokenize(s) == tokenize(upper));
    for (const auto& t : tokenize(s)) {
      CHECK_FALSE(t.empty());
      CHECK(t.find(' ') == std::string::npos);
    }
  }
}

TEST_CASE("remove_stopwords") {
  const auto& stop = StopList::bundled();
  CHECK(remove_stopwords({"this", "is", "bizarre", "lunatic"}, stop) ==
        Tokens{"bizarre", "lunatic"});
  CHECK(remove_stopwords({"the", "and", "of"}, stop).empty());
  CHECK(remove_stopwords({}, stop).empty());
  CHECK(remove_stopwords({"fear", "the", "fear"}, stop) == Tokens{"fear", "fear"});
}

TEST_CASE("bundled stop-word list") {
  const auto& stop = StopList::bundled();
  CHECK(stop.size() == 179);
  CHECK(stop.contains("this"));
  CHECK(stop.contains("don't"));
  CHECK_FALSE(stop.contains("fear"));
  CHECK_FALSE(stop.contains("This"));
  const auto id = bundled_stopwords_id();
  CHECK(id.rfind("en-1:", 0) == 0);
  CHECK(id.size() == 5 + 16);
  CHECK(bundled_stopwords_text().find("wouldn't\n") != std::string_view::npos);
}

TEST_CASE("custom stop-word lists") {
  std::istringstream in("# comment line\nFoo\n  bar  # trailing\n\nbaz\r\n");
  const auto stop = StopList::from_stream(in);
  CHECK(stop.size() == 3);
  CHECK(stop.contains("foo"));
  CHECK(stop.contains("bar"));
  CHECK(stop.contains("baz"));
  CHECK(StopList({"The"}).contains("the"));
  CHECK_THROWS_AS(StopList::from_file("/nonexistent/stop.txt"), InputError);
}

}  // namespace
}  // namespace emolex
