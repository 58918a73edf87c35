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

#ifndef EMOLEX_LEXICON_HPP_
#define EMOLEX_LEXICON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "emolex/emotion.hpp"

namespace emolex {

/// Which merge stage inserted a word.
enum class LexiconSource : std::uint8_t { kAffect, kDepecheMood, kVad };

/// "AFFECT", "DM" or "VAD".
std::string_view source_name(LexiconSource source) noexcept;
std::optional<LexiconSource> parse_source(std::string_view name) noexcept;

struct LexiconEntry {
  std::string word;
  EmotionVector4 emotions;
  LexiconSource source = LexiconSource::kAffect;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

/// Immutable word -> emotion map. Entries are kept sorted by word (byte
/// order), which is also the serialization order.
class UnifiedLexicon {
 public:
  UnifiedLexicon() = default;

  /// Sorts the entries. Throws InvalidInput on a duplicate or empty word.
  explicit UnifiedLexicon(std::vector<LexiconEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  std::span<const LexiconEntry> entries() const noexcept { return entries_; }
  const LexiconEntry& operator[](std::size_t i) const { return entries_[i]; }

  /// Index of `word` in entries(), if present.
  std::optional<std::size_t> find(std::string_view word) const;
  const LexiconEntry* lookup(std::string_view word) const;

  std::size_t count(LexiconSource source) const noexcept;

  friend bool operator==(const UnifiedLexicon& a, const UnifiedLexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::size_t, Hash, std::equal_to<>> index_;
};

}  // namespace emolex

#endif  // EMOLEX_LEXICON_HPP_
