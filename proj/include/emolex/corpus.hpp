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

// Claim/reply corpora.
//
//   claims.jsonl   {"id": "c1", "text": "...", "topic": "covid",
//                   "credibility": "false", "retweets": 10, "likes": 3}
//   replies.jsonl  {"claim_id": "c1", "text": "..."}
//
// `topic` may be omitted (it then reads as "unspecified"); credibility also
// accepts JSON booleans. Replies pointing at an unknown claim are skipped
// and counted.

#ifndef EMOLEX_CORPUS_HPP_
#define EMOLEX_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/emotion.hpp"
#include "emolex/error.hpp"
#include "emolex/scorer.hpp"

namespace emolex {

enum class Credibility : std::uint8_t { kFalse = 0, kTrue = 1 };

inline constexpr std::array<Credibility, 2> kAllCredibility = {
    Credibility::kFalse, Credibility::kTrue};

std::string_view credibility_name(Credibility c) noexcept;

struct ClaimRecord {
  std::string id;
  std::string text;
  std::string topic;
  Credibility credibility = Credibility::kFalse;
  std::uint64_t retweets = 0;
  std::uint64_t likes = 0;
};

struct ReplyRecord {
  std::string claim_id;
  std::string text;
};

struct Corpus {
  std::vector<ClaimRecord> claims;
  /// Only replies whose claim exists, in input order.
  std::vector<ReplyRecord> replies;
  std::size_t skipped_replies = 0;
  std::vector<Warning> warnings;
};

/// Throws ParseError on malformed JSON, a schema violation or a duplicate
/// claim id.
Corpus load_corpus(std::istream& claims, std::istream& replies,
                   std::string_view claims_name = "claims",
                   std::string_view replies_name = "replies");
/// `replies` may be omitted for reply-less corpora.
Corpus load_corpus(const std::filesystem::path& claims,
                   const std::optional<std::filesystem::path>& replies);

struct ScoredClaim {
  ClaimRecord claim;
  ScoreResult score;
  EmotionLabel dominant = EmotionLabel::kNeutral;
  std::size_t reply_count = 0;
  /// Mean of the reply vectors; pure neutral without replies.
  EmotionVector5 reply_mean;

  const EmotionVector5& emotions() const noexcept { return score.vector; }
};

/// Claims keep corpus order. Results do not depend on `threads`.
std::vector<ScoredClaim> score_corpus(const Corpus& corpus,
                                      const Scorer& scorer,
                                      std::size_t threads = 1);

}  // namespace emolex

#endif  // EMOLEX_CORPUS_HPP_
