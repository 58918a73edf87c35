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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "emolex/emotion.hpp"
#include "synthetic.hpp"

namespace emolex {
namespace {

using testing::Rng;

template <std::size_t N>
double sum_of(const std::array<double, N>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s;
}

TEST_CASE("normalize_sum1 divides by the sum") {
  const auto r = normalize_sum1(std::array<double, 4>{2, 2, 0, 0});
  CHECK_FALSE(r.degenerate);
  CHECK(r.values == std::array<double, 4>{0.5, 0.5, 0, 0});
}

TEST_CASE("normalize_sum1 flags the zero vector") {
  const auto r = normalize_sum1(std::array<double, 4>{0, 0, 0, 0});
  CHECK(r.degenerate);
  CHECK(r.values == std::array<double, 4>{0, 0, 0, 0});
}

TEST_CASE("normalize_sum1 on the NRC-Affect intensities of deadly") {
  const auto r = normalize_sum1(std::array<double, 4>{0.76, 0.90, 0.88, 0});
  CHECK(r.values[0] == doctest::Approx(0.2992126).epsilon(1e-7));
  CHECK(r.values[1] == doctest::Approx(0.35433071).epsilon(1e-7));
  CHECK(r.values[2] == doctest::Approx(0.34645669).epsilon(1e-7));
  CHECK(r.values[3] == 0.0);
}

TEST_CASE("normalize_sum1 rejects negative and non-finite components") {
  CHECK_THROWS_AS(normalize_sum1(std::array<double, 4>{1, -0.1, 0, 0}),
                  InvalidInput);
  CHECK_THROWS_AS(
      normalize_sum1(std::array<double, 3>{
          1, std::numeric_limits<double>::quiet_NaN(), 0}),
      InvalidInput);
  CHECK_THROWS_AS(
      normalize_sum1(std::array<double, 2>{
          std::numeric_limits<double>::infinity(), 1}),
      InvalidInput);
}

TEST_CASE("normalize_sum1 is idempotent and scale invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 5> v{};
    for (double& x : v) x = testing::coin(rng, 0.2) ? 0.0 : testing::uniform01(rng) * 10;
    const auto once = normalize_sum1(v);
    const auto twice = normalize_sum1(once.values);
    CHECK(once.degenerate == twice.degenerate);
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(std::fabs(once.values[i] - twice.values[i]) <= 1e-12);
    }
    if (!once.degenerate) {
      CHECK(std::fabs(sum_of(once.values) - 1.0) <= 1e-9);
    }

    const double c = std::exp(testing::uniform01(rng) * 14 - 7);
    auto scaled = v;
    for (double& x : scaled) x *= c;
    const auto s = normalize_sum1(scaled);
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(std::fabs(s.values[i] - once.values[i]) <= 1e-12);
    }

    // Power-of-two scaling is exact in binary floating point.
    auto pow2 = v;
    for (double& x : pow2) x *= 1024.0;
    CHECK(normalize_sum1(pow2).values == once.values);
  }
}

TEST_CASE("dominant_emotion examples") {
  CHECK(dominant_emotion(EmotionVector5::from_weights(
            {0.4583, 0.3997, 0.1419, 0, 0})) == EmotionLabel::kAnger);
  CHECK(dominant_emotion(EmotionVector5::from_normalized(
            {0.25, 0.25, 0.25, 0.25, 0})) == EmotionLabel::kAnger);
  CHECK(dominant_emotion(EmotionVector5()) == EmotionLabel::kNeutral);
  CHECK(dominant_emotion(EmotionVector5::from_normalized({0, 0.5, 0.5, 0, 0})) ==
        EmotionLabel::kFear);
  CHECK(dominant_emotion(EmotionVector5::from_normalized({0, 0, 0, 0.5, 0.5})) ==
        EmotionLabel::kHappiness);
  CHECK(dominant_emotion(EmotionVector4()) == EmotionLabel::kNeutral);
}

TEST_CASE("dominant_emotion is invariant under positive scaling") {
  Rng rng(12);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 5> w{};
    for (double& x : w) x = testing::uniform01(rng);
    const auto expected = testing::naive_argmax(w);
    const auto v = EmotionVector5::from_weights(w);
    CHECK(dominant_emotion(v) == expected);
    CHECK(dominant_emotion(v) == dominant_emotion(v));
    auto scaled = w;
    for (double& x : scaled) x *= 37.5;
    CHECK(dominant_emotion(EmotionVector5::from_weights(scaled)) == expected);
  }
}

TEST_CASE("EmotionVector4 validates its invariants") {
  CHECK(EmotionVector4().is_degenerate());
  CHECK(EmotionVector4::from_normalized({0, 0, 0, 0}).is_degenerate());
  CHECK_FALSE(EmotionVector4::from_normalized({0.1, 0.2, 0.3, 0.4}).is_degenerate());
  CHECK_THROWS_AS(EmotionVector4::from_normalized({0.5, 0.4, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(EmotionVector4::from_normalized({1.2, -0.2, 0, 0}), InvalidInput);
  const auto w = EmotionVector4::from_weights({0, 0, 0, 0.42});
  CHECK(w.happiness() == 1.0);
  CHECK(EmotionVector4::from_weights({0, 0, 0, 0}).is_degenerate());
}

TEST_CASE("EmotionVector5 always sums to one") {
  CHECK(EmotionVector5().values() == std::array<double, 5>{0, 0, 0, 0, 1});
  CHECK(EmotionVector5::from_weights({0, 0, 0, 0, 0}) == EmotionVector5());
  CHECK_THROWS_AS(EmotionVector5::from_normalized({0, 0, 0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(EmotionVector5::from_normalized({0.5, 0, 0, 0, 0.6}), InvalidInput);
  const auto v = EmotionVector5::from_weights({1, 1, 0, 0, 2});
  CHECK(v[EmotionLabel::kNeutral] == 0.5);
  CHECK(v.anger() == 0.25);
}

TEST_CASE("extend_with_neutral") {
  CHECK(extend_with_neutral(EmotionVector4()) == EmotionVector5());
  const auto v = extend_with_neutral(EmotionVector4::from_normalized({0.5, 0, 0.5, 0}));
  CHECK(v.values() == std::array<double, 5>{0.5, 0, 0.5, 0, 0});
}

TEST_CASE("label names round-trip in canonical order") {
  const std::array<std::string_view, 5> names = {"anger", "fear", "sadness",
                                                 "happiness", "neutral"};
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    CHECK(label_index(kAllLabels[i]) == i);
    CHECK(label_name(kAllLabels[i]) == names[i]);
    CHECK(parse_label(names[i]) == kAllLabels[i]);
  }
  CHECK_FALSE(parse_label("Anger").has_value());
  CHECK_FALSE(parse_label("joy").has_value());
}

TEST_CASE("VadVector factories check the scale range") {
  CHECK(VadVector::raw(0, 1, 0.5).scale == VadScale::kRaw01);
  CHECK_THROWS_AS(VadVector::raw(1.2, 0, 0), InvalidInput);
  CHECK_THROWS_AS(VadVector::raw(-0.1, 0, 0), InvalidInput);
  CHECK(VadVector::signed_scale(-1, 1, 0).scale == VadScale::kSigned);
  CHECK_THROWS_AS(VadVector::signed_scale(-1.5, 0, 0), InvalidInput);
  CHECK_THROWS_AS(VadVector::raw(std::nan(""), 0, 0), InvalidInput);
}

TEST_CASE("format_fixed6") {
  CHECK(format_fixed6(0.458327876776897) == "0.458328");
  CHECK(format_fixed6(1.0) == "1.000000");
  CHECK(format_fixed6(-1e-12) == "0.000000");
  CHECK(format_fixed6(-1.2247448713915890) == "-1.224745");
  CHECK(format_fixed6(11987.5) == "11987.500000");
}

}  // namespace
}  // namespace emolex
