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

// Three-stage lexicon union with precedence NRC-Affect > DepecheMood++ >
// NRC-VAD. A word keeps the vector of the first stage that knows it; there
// is no blending across sources.

#ifndef EMOLEX_LEXICON_MERGE_HPP_
#define EMOLEX_LEXICON_MERGE_HPP_

#include <span>

#include "emolex/lexicon.hpp"
#include "emolex/lexicon_io.hpp"
#include "emolex/vad_mapping.hpp"

namespace emolex {

/// Keeps anger, fear, sadness and joy (as happiness), drops the other four
/// dimensions, normalizes to unit sum.
EmotionVector4 project_depechemood(const RawDmEntry& entry);

/// Joy becomes happiness; normalized to unit sum.
EmotionVector4 normalize_affect(const RawAffectEntry& entry);

struct MergeOptions {
  MappingOptions mapping;
};

/// Inputs are expected to be free of per-lexicon duplicates (the parsers
/// guarantee it); a repeated word within one list keeps its first entry.
UnifiedLexicon merge(std::span<const RawAffectEntry> affect,
                     std::span<const RawDmEntry> depechemood,
                     std::span<const RawVadEntry> vad,
                     MergeOptions options = {});

}  // namespace emolex

#endif  // EMOLEX_LEXICON_MERGE_HPP_
