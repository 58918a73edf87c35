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

#include "emolex/analytics.hpp"

#include <algorithm>
#include <cmath>

namespace emolex {
namespace {

double mean_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

bool is_constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
}

double sample_variance(std::span<const double> x, double mean) {
  if (is_constant(x)) return 0.0;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(x.size() - 1);
}

}  // namespace

std::optional<GroupMean> mean_emotions(std::span<const EmotionVector5> items) {
  if (items.empty()) return std::nullopt;
  GroupMean out;
  out.n = items.size();
  for (const auto& v : items) {
    for (std::size_t d = 0; d < kNumLabels; ++d) out.values[d] += v[d];
  }
  for (double& x : out.values) x /= static_cast<double>(out.n);
  return out;
}

std::optional<GroupMean> mean_emotions(std::span<const ScoredClaim> claims) {
  std::vector<EmotionVector5> vectors;
  vectors.reserve(claims.size());
  for (const auto& c : claims) vectors.push_back(c.emotions());
  return mean_emotions(vectors);
}

DominantPartition partition_by_dominant(std::span<const ScoredClaim> claims) {
  DominantPartition buckets;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    buckets[label_index(claims[i].dominant)].push_back(i);
  }
  return buckets;
}

std::vector<EngagementRow> engagement_table(
    std::span<const ScoredClaim> claims) {
  std::array<std::array<EngagementRow, 2>, kNumLabels> cells{};
  for (const auto& c : claims) {
    auto& row = cells[label_index(c.dominant)]
                     [static_cast<std::size_t>(c.claim.credibility)];
    ++row.n_claims;
    row.retweet_sum += c.claim.retweets;
    row.like_sum += c.claim.likes;
    row.reply_sum += c.reply_count;
  }
  std::vector<EngagementRow> rows;
  for (EmotionLabel label : kAllLabels) {
    for (Credibility cred : kAllCredibility) {
      EngagementRow row = cells[label_index(label)][static_cast<std::size_t>(cred)];
      if (row.n_claims == 0) continue;
      row.emotion = label;
      row.credibility = cred;
      const double n = static_cast<double>(row.n_claims);
      row.avg_retweet = static_cast<double>(row.retweet_sum) / n;
      row.avg_like = static_cast<double>(row.like_sum) / n;
      row.avg_reply = static_cast<double>(row.reply_sum) / n;
      rows.push_back(row);
    }
  }
  return rows;
}

std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidInput("pearson: size mismatch");
  if (x.size() < 2) throw InsufficientData("pearson: need at least 2 pairs");
  const double mx = mean_of(x);
  const double my = mean_of(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (is_constant(x) || is_constant(y)) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationSummary claim_reply_correlation(
    std::span<const ScoredClaim> claims) {
  std::array<std::vector<double>, kNumLabels> xs, ys;
  CorrelationSummary out;
  for (const auto& c : claims) {
    if (c.reply_count == 0) continue;
    ++out.n;
    for (std::size_t d = 0; d < kNumLabels; ++d) {
      xs[d].push_back(c.emotions()[d]);
      ys[d].push_back(c.reply_mean[d]);
    }
  }
  if (out.n < 2) {
    throw InsufficientData(
        "claim/reply correlation needs at least 2 claims with replies");
  }
  for (std::size_t d = 0; d < kNumLabels; ++d) out.r[d] = pearson(xs[d], ys[d]);
  return out;
}

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw InsufficientData("welch_t: each group needs at least 2 values");
  }
  const double ma = mean_of(a), mb = mean_of(b);
  const double va = sample_variance(a, ma) / static_cast<double>(a.size());
  const double vb = sample_variance(b, mb) / static_cast<double>(b.size());
  const double se2 = va + vb;
  if (se2 == 0.0) throw InsufficientData("welch_t: both groups are constant");
  WelchResult out;
  out.t = (ma - mb) / std::sqrt(se2);
  out.df = se2 * se2 /
           (va * va / static_cast<double>(a.size() - 1) +
            vb * vb / static_cast<double>(b.size() - 1));
  return out;
}

}  // namespace emolex
