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

#include "emolex/lexicon.hpp"

#include <algorithm>

namespace emolex {

std::string_view source_name(LexiconSource source) noexcept {
  switch (source) {
    case LexiconSource::kAffect:
      return "AFFECT";
    case LexiconSource::kDepecheMood:
      return "DM";
    case LexiconSource::kVad:
      return "VAD";
  }
  return "AFFECT";
}

std::optional<LexiconSource> parse_source(std::string_view name) noexcept {
  if (name == "AFFECT") return LexiconSource::kAffect;
  if (name == "DM") return LexiconSource::kDepecheMood;
  if (name == "VAD") return LexiconSource::kVad;
  return std::nullopt;
}

UnifiedLexicon::UnifiedLexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) {
              return a.word < b.word;
            });
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& word = entries_[i].word;
    if (word.empty()) throw InvalidInput("lexicon: empty word");
    if (i > 0 && entries_[i - 1].word == word) {
      throw InvalidInput("lexicon: duplicate word '" + word + "'");
    }
    index_.emplace(word, i);
  }
}

std::optional<std::size_t> UnifiedLexicon::find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const LexiconEntry* UnifiedLexicon::lookup(std::string_view word) const {
  auto i = find(word);
  return i ? &entries_[*i] : nullptr;
}

std::size_t UnifiedLexicon::count(LexiconSource source) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [source](const auto& e) { return e.source == source; }));
}

}  // namespace emolex
