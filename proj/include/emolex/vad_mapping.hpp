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

// Valence/arousal/dominance to categorical emotion mapping.
//
// A word's VAD triple is compared with four fixed emotion anchors (Russell &
// Mehrabian coordinates on a signed [-1,1] scale) by cosine similarity. The
// four similarities, with negatives clamped to zero, are rescaled to sum to
// one. Lexicon VAD values live on [0,1], so by default they are recentered
// with x -> 2x - 1 before the comparison; MappingOptions::recenter = false
// feeds the raw values straight in.

#ifndef EMOLEX_VAD_MAPPING_HPP_
#define EMOLEX_VAD_MAPPING_HPP_

#include <array>
#include <optional>

#include "emolex/emotion.hpp"

namespace emolex {

struct EmotionAnchor {
  EmotionLabel emotion;
  VadVector vad;  // signed scale
};

/// Anchors in EmotionVector4 component order (anger, fear, sadness,
/// happiness).
inline constexpr std::array<EmotionAnchor, kNumEmotions> kEmotionAnchors = {{
    {EmotionLabel::kAnger, {-0.51, 0.59, 0.25, VadScale::kSigned}},
    {EmotionLabel::kFear, {-0.64, 0.60, -0.43, VadScale::kSigned}},
    {EmotionLabel::kSadness, {-0.63, -0.27, -0.33, VadScale::kSigned}},
    {EmotionLabel::kHappiness, {0.76, 0.48, 0.35, VadScale::kSigned}},
}};

/// x -> 2x - 1 per component. Throws InvalidInput for a signed input or a
/// component outside [0,1].
VadVector recenter_vad(const VadVector& v);

/// dot(a, b) / (|a| |b|); nullopt when either vector is zero.
std::optional<double> cosine_similarity(const VadVector& a,
                                        const VadVector& b) noexcept;

struct MappingOptions {
  bool recenter = true;
};

/// Cosine against each anchor, negatives clamped to 0, then normalized to a
/// unit sum. A zero (recentered) vector, or one with no positive cosine,
/// gives the neutral-degenerate EmotionVector4.
EmotionVector4 map_vad_to_emotions(const VadVector& raw,
                                   MappingOptions options = {});

/// Unclamped cosine for each anchor, in anchor order.
std::optional<std::array<double, kNumEmotions>> anchor_cosines(
    const VadVector& raw, MappingOptions options = {});

}  // namespace emolex

#endif  // EMOLEX_VAD_MAPPING_HPP_
