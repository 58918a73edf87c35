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

#include "emolex/scorer.hpp"

#include "emolex/error.hpp"
#include "emolex/parallel.hpp"

namespace emolex {

Scorer::Scorer(std::shared_ptr<const UnifiedLexicon> lexicon,
               StopList stoplist, Options options)
    : lexicon_(std::move(lexicon)),
      stoplist_(std::move(stoplist)),
      options_(options) {
  if (!lexicon_) throw InvalidInput("Scorer: lexicon is null");
  if (!(options_.fuzzy_threshold > 0.0 && options_.fuzzy_threshold < 1.0)) {
    throw InvalidInput("fuzzy threshold must lie in (0, 1)");
  }
  index_ = FuzzyIndex(*lexicon_);
}

std::optional<FuzzyMatch> Scorer::lookup(std::string_view token,
                                         TokenCache* cache) const {
  if (auto i = lexicon_->find(token)) return FuzzyMatch{*i, 1.0, true};
  if (cache) {
    if (auto it = cache->find(std::string(token)); it != cache->end()) {
      return it->second;
    }
  }
  auto match = index_.closest(token, options_.fuzzy_threshold);
  if (cache) cache->emplace(std::string(token), match);
  return match;
}

ScoreResult Scorer::score_tokens(std::span<const std::string> tokens,
                                 TokenCache* cache) const {
  ScoreResult result;
  result.k = tokens.size();
  if (tokens.empty()) return result;
  std::array<double, kNumLabels> sum{};
  for (const auto& token : tokens) {
    const auto match = lookup(token, cache);
    EmotionVector5 contribution;
    if (match) {
      ++(match->exact ? result.matched : result.fuzzy);
      contribution = extend_with_neutral((*lexicon_)[match->entry].emotions);
    } else {
      ++result.neutral_tokens;
    }
    for (std::size_t i = 0; i < kNumLabels; ++i) sum[i] += contribution[i];
  }
  const double k = static_cast<double>(tokens.size());
  for (double& s : sum) s /= k;
  result.vector = EmotionVector5::from_weights(sum);
  return result;
}

ScoreResult Scorer::score_text(std::string_view text,
                               TokenCache* cache) const {
  const auto tokens = remove_stopwords(tokenize(text), stoplist_);
  return score_tokens(tokens, cache);
}

std::vector<ScoreResult> Scorer::score_batch(std::span<const std::string> texts,
                                             std::size_t threads) const {
  std::vector<ScoreResult> results(texts.size());
  threads = resolve_threads(threads);
  std::vector<TokenCache> caches(threads);
  parallel_for(texts.size(), threads, [&](std::size_t worker, std::size_t i) {
    results[i] = score_text(texts[i], &caches[worker]);
  });
  return results;
}

ScoreResult score_text(const UnifiedLexicon& lexicon, std::string_view text,
                       const StopList& stoplist) {
  // Aliasing shared_ptr: no ownership taken.
  const Scorer scorer(
      std::shared_ptr<const UnifiedLexicon>(std::shared_ptr<void>(), &lexicon),
      stoplist);
  return scorer.score_text(text);
}

}  // namespace emolex
