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

#include "emolex/vad_mapping.hpp"

#include <algorithm>
#include <cmath>

namespace emolex {

VadVector recenter_vad(const VadVector& v) {
  if (v.scale != VadScale::kRaw01) {
    throw InvalidInput("recenter_vad: input is already on the signed scale");
  }
  const auto checked = VadVector::raw(v.valence, v.arousal, v.dominance);
  return VadVector::signed_scale(2.0 * checked.valence - 1.0,
                                 2.0 * checked.arousal - 1.0,
                                 2.0 * checked.dominance - 1.0);
}

std::optional<double> cosine_similarity(const VadVector& a,
                                        const VadVector& b) noexcept {
  const auto x = a.as_array();
  const auto y = b.as_array();
  double dot = 0.0, nx = 0.0, ny = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    dot += x[i] * y[i];
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0.0 || ny == 0.0) return std::nullopt;
  // Rounding can push |cos| a hair past 1 for parallel vectors.
  return std::clamp(dot / (std::sqrt(nx) * std::sqrt(ny)), -1.0, 1.0);
}

std::optional<std::array<double, kNumEmotions>> anchor_cosines(
    const VadVector& raw, MappingOptions options) {
  const VadVector input =
      options.recenter
          ? recenter_vad(raw)
          : VadVector::raw(raw.valence, raw.arousal, raw.dominance);
  std::array<double, kNumEmotions> out{};
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    auto c = cosine_similarity(input, kEmotionAnchors[i].vad);
    if (!c) return std::nullopt;
    out[i] = *c;
  }
  return out;
}

EmotionVector4 map_vad_to_emotions(const VadVector& raw,
                                   MappingOptions options) {
  if (raw.scale != VadScale::kRaw01) {
    throw InvalidInput("map_vad_to_emotions: expected a [0,1]-scale vector");
  }
  auto cosines = anchor_cosines(raw, options);
  if (!cosines) return EmotionVector4();
  for (double& c : *cosines) c = std::max(c, 0.0);
  return EmotionVector4::from_weights(*cosines);
}

}  // namespace emolex
