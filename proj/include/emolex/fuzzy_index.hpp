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

// Closest-word search over the unified lexicon.
//
// Semantics are those of an exhaustive scan: the best gestalt similarity
// wins if it is strictly above the threshold, and ties go to the
// lexicographically smallest word. The index only skips candidates whose
// similarity provably cannot exceed the threshold:
//
//   length   2 min(|q|,|w|) / (|q|+|w|) bounds the ratio; words are bucketed
//            by code-point length so whole buckets are skipped.
//   charset  a 32-bit character-class mask and a 32-bin character histogram
//            bound the number of characters the two words can share.

#ifndef EMOLEX_FUZZY_INDEX_HPP_
#define EMOLEX_FUZZY_INDEX_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/lexicon.hpp"

namespace emolex {

inline constexpr double kDefaultFuzzyThreshold = 0.9;

struct FuzzyMatch {
  std::size_t entry = 0;  // index into UnifiedLexicon::entries()
  double similarity = 0.0;
  bool exact = false;
};

/// Candidate prefilters of FuzzyIndex::closest. Both are exact: disabling
/// them changes only the running time, never the result.
struct FuzzyFilters {
  bool length = true;
  bool charset = true;
};

class FuzzyIndex {
 public:
  using Filters = FuzzyFilters;

  FuzzyIndex() = default;
  explicit FuzzyIndex(const UnifiedLexicon& lexicon);

  /// Best candidate strictly above `threshold`, or nullopt. An identical
  /// word scores 1.0 and is flagged exact.
  std::optional<FuzzyMatch> closest(std::string_view token,
                                    double threshold = kDefaultFuzzyThreshold,
                                    Filters filters = {}) const;

  std::size_t size() const noexcept { return words_.size(); }

 private:
  struct Bucket {
    std::size_t length = 0;
    std::vector<std::uint32_t> ids;  // ascending, i.e. word order
  };

  std::vector<std::u32string> words_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::array<std::uint8_t, 32>> histograms_;
  std::vector<Bucket> buckets_;  // ascending length
};

/// Exact hit if the token is in the lexicon, else FuzzyIndex::closest.
std::optional<FuzzyMatch> fuzzy_lookup(
    const UnifiedLexicon& lexicon, const FuzzyIndex& index,
    std::string_view token, double threshold = kDefaultFuzzyThreshold);

}  // namespace emolex

#endif  // EMOLEX_FUZZY_INDEX_HPP_
