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

#include "emolex/lexicon_merge.hpp"

#include <string_view>
#include <unordered_set>

namespace emolex {

EmotionVector4 project_depechemood(const RawDmEntry& entry) {
  return EmotionVector4::from_weights(
      {entry.anger(), entry.fear(), entry.sadness(), entry.joy()});
}

EmotionVector4 normalize_affect(const RawAffectEntry& entry) {
  return EmotionVector4::from_weights(
      {entry.anger, entry.fear, entry.sadness, entry.joy});
}

UnifiedLexicon merge(std::span<const RawAffectEntry> affect,
                     std::span<const RawDmEntry> depechemood,
                     std::span<const RawVadEntry> vad, MergeOptions options) {
  std::vector<LexiconEntry> entries;
  entries.reserve(affect.size() + depechemood.size() + vad.size());
  std::unordered_set<std::string_view> present;
  present.reserve(entries.capacity());

  // `present` views strings owned by the input spans, which outlive it.
  for (const auto& e : affect) {
    if (present.insert(e.word).second) {
      entries.push_back({e.word, normalize_affect(e), LexiconSource::kAffect});
    }
  }
  for (const auto& e : depechemood) {
    if (present.insert(e.word).second) {
      entries.push_back(
          {e.word, project_depechemood(e), LexiconSource::kDepecheMood});
    }
  }
  for (const auto& e : vad) {
    if (present.insert(e.word).second) {
      entries.push_back({e.word, map_vad_to_emotions(e.vad, options.mapping),
                         LexiconSource::kVad});
    }
  }
  return UnifiedLexicon(std::move(entries));
}

}  // namespace emolex
