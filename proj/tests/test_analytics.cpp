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
#include <numeric>

#include "doctest.h"
#include "emolex/analytics.hpp"
#include "synthetic.hpp"

namespace emolex {
namespace {

using testing::Rng;

ScoredClaim scored(std::string id, Credibility cred, std::array<double, 5> v,
                   std::uint64_t retweets = 0, std::uint64_t likes = 0,
                   std::size_t replies = 0) {
  ScoredClaim c;
  c.claim.id = std::move(id);
  c.claim.topic = "t";
  c.claim.credibility = cred;
  c.claim.retweets = retweets;
  c.claim.likes = likes;
  c.score.vector = EmotionVector5::from_normalized(v);
  c.dominant = dominant_emotion(c.score.vector);
  c.reply_count = replies;
  return c;
}

TEST_CASE("mean_emotions examples") {
  const std::vector<EmotionVector5> items = {
      EmotionVector5::from_normalized({1, 0, 0, 0, 0}),
      EmotionVector5::from_normalized({0, 0.5, 0, 0, 0.5})};
  const auto m = mean_emotions(items);
  REQUIRE(m.has_value());
  CHECK(m->n == 2);
  CHECK(m->values == std::array<double, 5>{0.5, 0.25, 0, 0, 0.25});
  CHECK_FALSE(mean_emotions(std::span<const EmotionVector5>()).has_value());
  CHECK_FALSE(mean_emotions(std::span<const ScoredClaim>()).has_value());
}

TEST_CASE("mean_emotions is a macro-average") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<EmotionVector5> items;
    const std::size_t n = 1 + testing::uniform_index(rng, 30);
    for (std::size_t i = 0; i < n; ++i) {
      std::array<double, 5> w{};
      for (double& x : w) x = testing::uniform01(rng);
      items.push_back(EmotionVector5::from_weights(w));
    }
    const auto m = mean_emotions(items);
    REQUIRE(m.has_value());
    double total = 0;
    for (std::size_t d = 0; d < kNumLabels; ++d) {
      double s = 0;
      for (const auto& v : items) s += v[d];
      CHECK(std::fabs(m->values[d] - s / static_cast<double>(n)) <= 1e-15);
      total += m->values[d];
    }
    CHECK(std::fabs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("partition_by_dominant") {
  const std::vector<ScoredClaim> claims = {
      scored("a", Credibility::kFalse, {0.5, 0.5, 0, 0, 0}),
      scored("b", Credibility::kTrue, {0, 0, 0, 0, 1}),
      scored("c", Credibility::kTrue, {0, 0, 0, 1, 0}),
      scored("d", Credibility::kFalse, {0.2, 0.2, 0.2, 0.2, 0.2})};
  const auto p = partition_by_dominant(claims);
  CHECK(p[label_index(EmotionLabel::kAnger)] == std::vector<std::size_t>{0, 3});
  CHECK(p[label_index(EmotionLabel::kFear)].empty());
  CHECK(p[label_index(EmotionLabel::kHappiness)] == std::vector<std::size_t>{2});
  CHECK(p[label_index(EmotionLabel::kNeutral)] == std::vector<std::size_t>{1});
}

TEST_CASE("engagement_table") {
  const std::vector<ScoredClaim> claims = {
      scored("a", Credibility::kFalse, {1, 0, 0, 0, 0}, 10, 4, 2),
      scored("b", Credibility::kFalse, {1, 0, 0, 0, 0}, 5, 1, 0),
      scored("c", Credibility::kTrue, {1, 0, 0, 0, 0}, 1, 1, 1),
      scored("d", Credibility::kTrue, {0, 0, 0, 1, 0}, 7, 9, 3)};
  const auto rows = engagement_table(claims);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].emotion == EmotionLabel::kAnger);
  CHECK(rows[0].credibility == Credibility::kFalse);
  CHECK(rows[0].n_claims == 2);
  CHECK(rows[0].avg_retweet == 7.5);
  CHECK(rows[0].avg_like == 2.5);
  CHECK(rows[0].avg_reply == 1.0);
  CHECK(rows[1].credibility == Credibility::kTrue);
  CHECK(rows[2].emotion == EmotionLabel::kHappiness);
  CHECK(rows[2].like_sum == 9);
  CHECK(engagement_table({}).empty());
}

TEST_CASE("engagement_table sums are consistent") {
  Rng rng(102);
  std::vector<ScoredClaim> claims;
  for (int i = 0; i < 300; ++i) {
    std::array<double, 5> w{};
    for (double& x : w) x = testing::coin(rng, 0.3) ? 0 : testing::uniform01(rng);
    w[4] += 0.01;
    claims.push_back(scored(std::to_string(i),
                            testing::coin(rng, 0.5) ? Credibility::kTrue : Credibility::kFalse,
                            EmotionVector5::from_weights(w).values(),
                            testing::uniform_index(rng, 1000), testing::uniform_index(rng, 1000),
                            testing::uniform_index(rng, 5)));
  }
  std::size_t total = 0;
  for (const auto& row : engagement_table(claims)) {
    const double n = static_cast<double>(row.n_claims);
    CHECK(row.avg_retweet * n == doctest::Approx(static_cast<double>(row.retweet_sum)));
    CHECK(row.avg_like * n == doctest::Approx(static_cast<double>(row.like_sum)));
    CHECK(row.avg_reply * n == doctest::Approx(static_cast<double>(row.reply_sum)));
    total += row.n_claims;
  }
  CHECK(total == claims.size());
}

double textbook_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double sy = std::accumulate(y.begin(), y.end(), 0.0);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += x[i] * y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

TEST_CASE("pearson examples") {
  const std::vector<double> x = {1, 2, 3, 4};
  const std::vector<double> up = {2, 4, 6, 8};
  const std::vector<double> down = {4, 3, 2, 1};
  CHECK(*pearson(x, up) == doctest::Approx(1.0));
  CHECK(*pearson(x, down) == doctest::Approx(-1.0));
  const std::vector<double> constant = {0.1, 0.1, 0.1};
  const std::vector<double> three = {1, 2, 3};
  CHECK_FALSE(pearson(constant, three).has_value());
  CHECK_FALSE(pearson(three, constant).has_value());
  CHECK_THROWS_AS(pearson(std::vector<double>{1}, std::vector<double>{2}), InsufficientData);
  CHECK_THROWS_AS(pearson(x, three), InvalidInput);
}

TEST_CASE("pearson matches the textbook formula") {
  Rng rng(103);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + testing::uniform_index(rng, 40);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = testing::uniform01(rng);
      y[i] = 0.5 * x[i] + testing::uniform01(rng);
    }
    const auto r = pearson(x, y);
    REQUIRE(r.has_value());
    CHECK(*r >= -1.0);
    CHECK(*r <= 1.0);
    CHECK(std::fabs(*r - textbook_pearson(x, y)) <= 1e-9);
  }
}

TEST_CASE("claim_reply_correlation") {
  std::vector<ScoredClaim> claims = {
      scored("a", Credibility::kFalse, {1, 0, 0, 0, 0}, 0, 0, 1),
      scored("b", Credibility::kFalse, {0, 1, 0, 0, 0}, 0, 0, 0),
      scored("c", Credibility::kTrue, {0, 0, 0, 0, 1}, 0, 0, 2)};
  claims[0].reply_mean = EmotionVector5::from_normalized({0.8, 0, 0, 0, 0.2});
  claims[2].reply_mean = EmotionVector5::from_normalized({0.1, 0, 0, 0, 0.9});
  const auto summary = claim_reply_correlation(claims);
  CHECK(summary.n == 2);
  CHECK(*summary.r[0] == doctest::Approx(1.0));
  CHECK_FALSE(summary.r[1].has_value());
  CHECK(*summary.r[4] == doctest::Approx(1.0));
  claims[2].reply_count = 0;
  CHECK_THROWS_AS(claim_reply_correlation(claims), InsufficientData);
}

TEST_CASE("welch_t") {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {2, 3, 4};
  const auto w = welch_t(a, b);
  CHECK(w.t == doctest::Approx(-1.224744871391589).epsilon(1e-14));
  CHECK(w.df == doctest::Approx(4.0).epsilon(1e-14));
  const auto flipped = welch_t(b, a);
  CHECK(flipped.t == doctest::Approx(1.224744871391589).epsilon(1e-14));

  const std::vector<double> c = {1, 2, 3, 4, 5};
  const std::vector<double> d = {2, 2};
  const auto one_constant = welch_t(c, d);
  CHECK(one_constant.t == doctest::Approx((3.0 - 2.0) / std::sqrt(2.5 / 5)));
  CHECK(one_constant.df == doctest::Approx(4.0));

  const std::vector<double> e = {2, 2, 2};
  CHECK_THROWS_AS(welch_t(d, e), InsufficientData);
  CHECK_THROWS_AS(welch_t(std::vector<double>{1}, a), InsufficientData);
}

TEST_CASE("welch_t df bounds") {
  Rng rng(104);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> a(2 + testing::uniform_index(rng, 20));
    std::vector<double> b(2 + testing::uniform_index(rng, 20));
    for (double& x : a) x = testing::uniform01(rng);
    for (double& x : b) x = 3 * testing::uniform01(rng);
    const auto w = welch_t(a, b);
    const double lo = static_cast<double>(std::min(a.size(), b.size()) - 1);
    CHECK(w.df >= lo - 1e-9);
    CHECK(w.df <= static_cast<double>(a.size() + b.size() - 2) + 1e-9);
    CHECK(welch_t(b, a).t == doctest::Approx(-w.t));
  }
}

}  // namespace
}  // namespace emolex
