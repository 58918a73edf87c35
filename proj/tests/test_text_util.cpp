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

#include "doctest.h"
#include "emolex/text_util.hpp"

namespace emolex {
namespace {

TEST_CASE("decode_utf8 handles multibyte and invalid input") {
  CHECK(to_u32("a\xC3\xA9\xE2\x80\x99\xF0\x9F\x98\xB1") ==
        std::u32string{U'a', U'é', U'’', U'\U0001F631'});
  CHECK(to_u32("\xFF" "a") == std::u32string{U'�', U'a'});
  CHECK(to_u32("\xC3") == std::u32string{U'�'});
  // Overlong encoding of '/'.
  CHECK(to_u32("\xC0\xAF").front() == U'�');
}

TEST_CASE("append_utf8 inverts decoding") {
  const std::u32string cps = {U'z', U'ü', U'Ж', U'€', U'\U0001F600'};
  std::string s;
  for (char32_t c : cps) append_utf8(s, c);
  CHECK(to_u32(s) == cps);
}

TEST_CASE("fold_case covers the supported scripts") {
  CHECK(fold_case("DEADLY") == "deadly");
  CHECK(fold_case("\xC3\x84rger") == "\xC3\xA4rger");            // Ärger
  CHECK(fold_case("\xCE\xA6\xCE\x9F\xCE\x92\xCE\x9F\xCE\xA3") ==   // ΦΟΒΟΣ
        "\xCF\x86\xCE\xBF\xCE\xB2\xCE\xBF\xCF\x83");
  CHECK(fold_case("\xD0\x93\xD0\x9D\xD0\x95\xD0\x92") ==           // ГНЕВ
        "\xD0\xB3\xD0\xBD\xD0\xB5\xD0\xB2");
  CHECK(fold_case("\xC5\x81\xC3\x93" "DZ") == "\xC5\x82\xC3\xB3" "dz");  // ŁÓDZ
  CHECK(fold_case(U'ß') == U'ß');
  CHECK(fold_case(U'7') == U'7');
}

TEST_CASE("split keeps empty fields") {
  const auto parts = split("a\t\tb\t", '\t');
  REQUIRE(parts.size() == 4);
  CHECK(parts[0] == "a");
  CHECK(parts[1].empty());
  CHECK(parts[2] == "b");
  CHECK(parts[3].empty());
}

TEST_CASE("parse_double is strict") {
  CHECK(parse_double("0.76") == 0.76);
  CHECK(parse_double("1") == 1.0);
  CHECK(parse_double("+0.5") == 0.5);
  CHECK(parse_double(" 0.25 ") == 0.25);
  CHECK(parse_double("-0.5") == -0.5);
  CHECK(parse_double("1e-3") == 0.001);
  CHECK_FALSE(parse_double("").has_value());
  CHECK_FALSE(parse_double("abc").has_value());
  CHECK_FALSE(parse_double("0.5x").has_value());
  CHECK_FALSE(parse_double("nan").has_value());
  CHECK_FALSE(parse_double("inf").has_value());
  CHECK_FALSE(parse_double("0,5").has_value());
}

TEST_CASE("chomp and is_blank") {
  CHECK(chomp("abc\r") == "abc");
  CHECK(chomp("abc") == "abc");
  CHECK(is_blank(" \t\r"));
  CHECK(is_blank(""));
  CHECK_FALSE(is_blank(" x"));
}

}  // namespace
}  // namespace emolex
