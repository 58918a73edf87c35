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

#include "emolex/corpus.hpp"

#include <fmt/format.h>

#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "emolex/text_util.hpp"
#include "json.hpp"

namespace emolex {
namespace {

using nlohmann::json;

class JsonLines {
 public:
  JsonLines(std::istream& in, std::string_view name) : in_(in), name_(name) {}

  bool next(json& obj) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      const auto view = chomp(buffer_);
      if (is_blank(view)) continue;
      try {
        obj = json::parse(view);
      } catch (const json::parse_error& e) {
        fail(fmt::format("invalid JSON ({})", e.what()));
      }
      if (!obj.is_object()) fail("expected a JSON object");
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(name_, line_, what);
  }

  std::string string_field(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(fmt::format("missing field '{}'", key));
    if (!it->is_string()) fail(fmt::format("field '{}' must be a string", key));
    return it->get<std::string>();
  }

  std::uint64_t count_field(const json& obj, const char* key) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(fmt::format("missing field '{}'", key));
    if (it->is_number_unsigned()) return it->get<std::uint64_t>();
    if (it->is_number_integer()) {
      fail(fmt::format("field '{}' must be nonnegative", key));
    }
    fail(fmt::format("field '{}' must be an integer", key));
  }

  Credibility credibility_field(const json& obj) const {
    auto it = obj.find("credibility");
    if (it == obj.end()) fail("missing field 'credibility'");
    if (it->is_boolean()) {
      return it->get<bool>() ? Credibility::kTrue : Credibility::kFalse;
    }
    if (it->is_string()) {
      const std::string v = fold_case(it->get<std::string>());
      if (v == "true") return Credibility::kTrue;
      if (v == "false") return Credibility::kFalse;
    }
    fail("field 'credibility' must be \"true\" or \"false\"");
  }

  std::size_t line() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::string name_;
  std::string buffer_;
  std::size_t line_ = 0;
};

}  // namespace

std::string_view credibility_name(Credibility c) noexcept {
  return c == Credibility::kTrue ? "true" : "false";
}

Corpus load_corpus(std::istream& claims, std::istream& replies,
                   std::string_view claims_name,
                   std::string_view replies_name) {
  Corpus corpus;
  std::unordered_map<std::string, std::size_t> ids;

  JsonLines claim_lines(claims, claims_name);
  json obj;
  while (claim_lines.next(obj)) {
    ClaimRecord c;
    c.id = claim_lines.string_field(obj, "id");
    c.text = claim_lines.string_field(obj, "text");
    c.topic = obj.contains("topic") ? claim_lines.string_field(obj, "topic")
                                    : std::string("unspecified");
    c.credibility = claim_lines.credibility_field(obj);
    c.retweets = claim_lines.count_field(obj, "retweets");
    c.likes = claim_lines.count_field(obj, "likes");
    auto [it, inserted] = ids.emplace(c.id, claim_lines.line());
    if (!inserted) {
      claim_lines.fail(fmt::format("duplicate claim id '{}' (first at line {})",
                                   c.id, it->second));
    }
    corpus.claims.push_back(std::move(c));
  }

  JsonLines reply_lines(replies, replies_name);
  while (reply_lines.next(obj)) {
    ReplyRecord r;
    r.claim_id = reply_lines.string_field(obj, "claim_id");
    r.text = reply_lines.string_field(obj, "text");
    if (!ids.contains(r.claim_id)) {
      ++corpus.skipped_replies;
      corpus.warnings.push_back(
          {reply_lines.line(),
           fmt::format("reply references unknown claim '{}'; skipped",
                       r.claim_id)});
      continue;
    }
    corpus.replies.push_back(std::move(r));
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& claims,
                   const std::optional<std::filesystem::path>& replies) {
  std::ifstream claims_in(claims, std::ios::binary);
  if (!claims_in) throw InputError("cannot open '" + claims.string() + "'");
  if (!replies) {
    std::istringstream none;
    return load_corpus(claims_in, none, claims.string(), "replies");
  }
  std::ifstream replies_in(*replies, std::ios::binary);
  if (!replies_in) throw InputError("cannot open '" + replies->string() + "'");
  return load_corpus(claims_in, replies_in, claims.string(), replies->string());
}

std::vector<ScoredClaim> score_corpus(const Corpus& corpus,
                                      const Scorer& scorer,
                                      std::size_t threads) {
  // Claims and replies go through one batch so the pool is shared.
  std::vector<std::string> texts;
  texts.reserve(corpus.claims.size() + corpus.replies.size());
  for (const auto& c : corpus.claims) texts.push_back(c.text);
  for (const auto& r : corpus.replies) texts.push_back(r.text);
  auto scores = scorer.score_batch(texts, threads);

  std::unordered_map<std::string_view, std::size_t> index;
  std::vector<ScoredClaim> out(corpus.claims.size());
  for (std::size_t i = 0; i < corpus.claims.size(); ++i) {
    out[i].claim = corpus.claims[i];
    out[i].score = std::move(scores[i]);
    out[i].dominant = dominant_emotion(out[i].score.vector);
    index.emplace(corpus.claims[i].id, i);
  }

  // Sums run in reply input order, which keeps them reproducible.
  std::vector<std::array<double, kNumLabels>> sums(out.size());
  for (std::size_t r = 0; r < corpus.replies.size(); ++r) {
    auto it = index.find(corpus.replies[r].claim_id);
    if (it == index.end()) continue;
    const auto& v = scores[corpus.claims.size() + r].vector;
    for (std::size_t d = 0; d < kNumLabels; ++d) sums[it->second][d] += v[d];
    ++out[it->second].reply_count;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].reply_count == 0) continue;
    auto mean = sums[i];
    for (double& x : mean) x /= static_cast<double>(out[i].reply_count);
    out[i].reply_mean = EmotionVector5::from_weights(mean);
  }
  return out;
}

}  // namespace emolex
