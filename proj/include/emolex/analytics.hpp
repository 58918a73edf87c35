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

// Group-level aggregates over scored claims. The correlation and t
// statistics here are plain descriptive numbers, not model estimates.

#ifndef EMOLEX_ANALYTICS_HPP_
#define EMOLEX_ANALYTICS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emolex/corpus.hpp"
#include "emolex/emotion.hpp"

namespace emolex {

struct GroupMean {
  std::array<double, kNumLabels> values{};
  std::size_t n = 0;
};

/// Componentwise mean (macro-average over items). nullopt for an empty
/// group.
std::optional<GroupMean> mean_emotions(std::span<const EmotionVector5> items);
std::optional<GroupMean> mean_emotions(std::span<const ScoredClaim> claims);

/// Claim indices bucketed by dominant emotion, indexed by label_index().
using DominantPartition = std::array<std::vector<std::size_t>, kNumLabels>;
DominantPartition partition_by_dominant(std::span<const ScoredClaim> claims);

struct EngagementRow {
  EmotionLabel emotion = EmotionLabel::kNeutral;
  Credibility credibility = Credibility::kFalse;
  std::size_t n_claims = 0;
  std::uint64_t retweet_sum = 0;
  std::uint64_t like_sum = 0;
  std::uint64_t reply_sum = 0;
  double avg_retweet = 0.0;
  double avg_like = 0.0;
  double avg_reply = 0.0;
};

/// One row per non-empty (dominant emotion, credibility) cell, ordered by
/// canonical emotion order then false before true. avg_reply is the mean
/// number of attached replies.
std::vector<EngagementRow> engagement_table(
    std::span<const ScoredClaim> claims);

/// nullopt when either column is constant; throws InvalidInput on a size
/// mismatch and InsufficientData for fewer than two pairs.
std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y);

struct CorrelationSummary {
  /// Claims with at least one reply.
  std::size_t n = 0;
  /// Claim value vs. reply-mean value per dimension; nullopt where
  /// undefined.
  std::array<std::optional<double>, kNumLabels> r{};
};

/// Throws InsufficientData when fewer than two claims have replies.
CorrelationSummary claim_reply_correlation(
    std::span<const ScoredClaim> claims);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
};

/// Welch two-sample statistic (a minus b) with Welch-Satterthwaite degrees
/// of freedom. Throws InsufficientData if a group has fewer than two values
/// or both variances are zero.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

}  // namespace emolex

#endif  // EMOLEX_ANALYTICS_HPP_
