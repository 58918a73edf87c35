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

#include "emolex/fuzzy_index.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "emolex/gestalt.hpp"
#include "emolex/text_util.hpp"

namespace emolex {
namespace {

// Histogram counts are bytes; longer words skip the histogram bound.
constexpr std::size_t kMaxHistogramLength = 255;

inline unsigned char_class(char32_t c) noexcept {
  if (c < 0x80) return static_cast<unsigned>(c) & 31u;
  return (static_cast<std::uint32_t>(c) * 2654435761u) >> 27;
}

std::uint32_t class_mask(std::u32string_view w) noexcept {
  std::uint32_t m = 0;
  for (char32_t c : w) m |= 1u << char_class(c);
  return m;
}

std::array<std::uint8_t, 32> class_histogram(std::u32string_view w) noexcept {
  std::array<std::uint8_t, 32> h{};
  if (w.size() > kMaxHistogramLength) return h;
  for (char32_t c : w) ++h[char_class(c)];
  return h;
}

}  // namespace

FuzzyIndex::FuzzyIndex(const UnifiedLexicon& lexicon) {
  const auto entries = lexicon.entries();
  words_.reserve(entries.size());
  masks_.reserve(entries.size());
  histograms_.reserve(entries.size());
  std::map<std::size_t, std::vector<std::uint32_t>> by_length;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    words_.push_back(to_u32(entries[i].word));
    masks_.push_back(class_mask(words_.back()));
    histograms_.push_back(class_histogram(words_.back()));
    by_length[words_.back().size()].push_back(static_cast<std::uint32_t>(i));
  }
  for (auto& [length, ids] : by_length) {
    buckets_.push_back({length, std::move(ids)});
  }
}

std::optional<FuzzyMatch> FuzzyIndex::closest(std::string_view token,
                                              double threshold,
                                              Filters filters) const {
  const std::u32string query = to_u32(token);
  if (query.empty()) return std::nullopt;
  const std::size_t q = query.size();
  const std::uint32_t qmask = class_mask(query);
  const auto qhist = class_histogram(query);

  std::optional<FuzzyMatch> best;
  // A candidate is only worth scoring if its bound beats the threshold and
  // can at least tie the current best.
  const auto hopeless = [&](double bound) {
    return bound <= threshold || (best && bound < best->similarity);
  };

  for (const Bucket& bucket : buckets_) {
    const std::size_t len = bucket.length;
    const std::size_t total = q + len;
    if (filters.length && hopeless(gestalt_ratio(std::min(q, len), total))) {
      continue;
    }
    const bool use_histogram =
        q <= kMaxHistogramLength && len <= kMaxHistogramLength;
    for (const std::uint32_t id : bucket.ids) {
      if (filters.charset) {
        const std::uint32_t m = masks_[id];
        const std::size_t missing_q = std::popcount(qmask & ~m);
        const std::size_t missing_w = std::popcount(m & ~qmask);
        const std::size_t bound = std::min(q - missing_q, len - missing_w);
        if (hopeless(gestalt_ratio(bound, total))) continue;
        if (use_histogram) {
          const auto& h = histograms_[id];
          std::size_t shared = 0;
          for (std::size_t k = 0; k < 32; ++k) {
            shared += std::min(qhist[k], h[k]);
          }
          if (hopeless(gestalt_ratio(shared, total))) continue;
        }
      }
      const double s = gestalt_ratio(gestalt_matches(query, words_[id]), total);
      if (s <= threshold) continue;
      if (!best || s > best->similarity ||
          (s == best->similarity && id < best->entry)) {
        best = FuzzyMatch{id, s, s == 1.0};
      }
    }
  }
  return best;
}

std::optional<FuzzyMatch> fuzzy_lookup(const UnifiedLexicon& lexicon,
                                       const FuzzyIndex& index,
                                       std::string_view token,
                                       double threshold) {
  if (auto i = lexicon.find(token)) return FuzzyMatch{*i, 1.0, true};
  return index.closest(token, threshold);
}

}  // namespace emolex
