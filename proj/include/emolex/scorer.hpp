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

// Bag-of-words emotion scoring.
//
// A text is tokenized, stop words are dropped and every remaining token is
// resolved against the unified lexicon: exact hit, else the closest word
// with similarity strictly above the threshold, else nothing. Hits add
// (anger, fear, sadness, happiness, 0); misses and neutral-degenerate
// entries add (0, 0, 0, 0, 1). The score is the mean over the k tokens, so
// it sums to one. An empty token list scores as pure neutral.

#ifndef EMOLEX_SCORER_HPP_
#define EMOLEX_SCORER_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emolex/emotion.hpp"
#include "emolex/fuzzy_index.hpp"
#include "emolex/lexicon.hpp"
#include "emolex/tokenizer.hpp"

namespace emolex {

struct ScoreResult {
  EmotionVector5 vector;
  std::size_t matched = 0;         // exact lexicon hits
  std::size_t fuzzy = 0;           // hits through the closest-word search
  std::size_t neutral_tokens = 0;  // tokens without any lexicon entry
  std::size_t k = 0;               // tokens scored, after stop-word removal
};

/// Token -> lookup outcome memo. Purely an optimization; one per thread.
using TokenCache = std::unordered_map<std::string, std::optional<FuzzyMatch>>;

class Scorer {
 public:
  struct Options {
    double fuzzy_threshold = kDefaultFuzzyThreshold;
  };

  /// Throws InvalidInput unless 0 < threshold < 1.
  Scorer(std::shared_ptr<const UnifiedLexicon> lexicon, StopList stoplist,
         Options options);
  Scorer(std::shared_ptr<const UnifiedLexicon> lexicon, StopList stoplist)
      : Scorer(std::move(lexicon), std::move(stoplist), Options{}) {}

  ScoreResult score_text(std::string_view text,
                         TokenCache* cache = nullptr) const;

  /// Scores already-filtered tokens.
  ScoreResult score_tokens(std::span<const std::string> tokens,
                           TokenCache* cache = nullptr) const;

  /// One result per text, in input order; independent of `threads`.
  std::vector<ScoreResult> score_batch(std::span<const std::string> texts,
                                       std::size_t threads) const;

  std::optional<FuzzyMatch> lookup(std::string_view token,
                                   TokenCache* cache = nullptr) const;

  const UnifiedLexicon& lexicon() const noexcept { return *lexicon_; }
  const FuzzyIndex& index() const noexcept { return index_; }
  const StopList& stoplist() const noexcept { return stoplist_; }
  double fuzzy_threshold() const noexcept { return options_.fuzzy_threshold; }

 private:
  std::shared_ptr<const UnifiedLexicon> lexicon_;
  FuzzyIndex index_;
  StopList stoplist_;
  Options options_;
};

/// One-shot convenience: builds a Scorer and scores a single text.
ScoreResult score_text(const UnifiedLexicon& lexicon, std::string_view text,
                       const StopList& stoplist);

}  // namespace emolex

#endif  // EMOLEX_SCORER_HPP_
