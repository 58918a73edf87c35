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

#include "emolex/emotion.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace emolex {
namespace {

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "anger", "fear", "sadness", "happiness", "neutral"};

template <std::size_t N>
void check_normalized(const std::array<double, N>& v, bool allow_zero,
                      const char* what) {
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw InvalidInput(std::string(what) + ": component outside [0,1]");
    }
    sum += x;
  }
  if (allow_zero && sum == 0.0) return;
  if (std::fabs(sum - 1.0) > kSumTolerance) {
    throw InvalidInput(std::string(what) + ": components must sum to 1");
  }
}

void check_range(double x, double lo, double hi, const char* what) {
  if (!std::isfinite(x) || x < lo || x > hi) {
    throw InvalidInput(fmt::format("{}: component {} outside [{}, {}]", what,
                                   x, lo, hi));
  }
}

}  // namespace

bool normalize_into(std::span<const double> in, std::span<double> out) {
  if (in.size() != out.size()) {
    throw InvalidInput("normalize_sum1: output size mismatch");
  }
  double sum = 0.0;
  for (double x : in) {
    if (!std::isfinite(x) || x < 0.0) {
      throw InvalidInput("normalize_sum1: components must be finite and >= 0");
    }
    sum += x;
  }
  if (sum == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    return true;
  }
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = in[i] / sum;
  return false;
}

std::string_view label_name(EmotionLabel label) noexcept {
  return kLabelNames[label_index(label)];
}

std::optional<EmotionLabel> parse_label(std::string_view name) noexcept {
  for (EmotionLabel l : kAllLabels) {
    if (kLabelNames[label_index(l)] == name) return l;
  }
  return std::nullopt;
}

EmotionVector4 EmotionVector4::from_normalized(
    const std::array<double, 4>& values) {
  check_normalized(values, /*allow_zero=*/true, "EmotionVector4");
  return EmotionVector4(values);
}

EmotionVector4 EmotionVector4::from_weights(
    const std::array<double, 4>& weights) {
  return EmotionVector4(normalize_sum1(weights).values);
}

EmotionVector5 EmotionVector5::from_normalized(
    const std::array<double, 5>& values) {
  check_normalized(values, /*allow_zero=*/false, "EmotionVector5");
  return EmotionVector5(values);
}

EmotionVector5 EmotionVector5::from_weights(
    const std::array<double, 5>& weights) {
  auto n = normalize_sum1(weights);
  if (n.degenerate) return EmotionVector5();
  return EmotionVector5(n.values);
}

EmotionVector5 extend_with_neutral(const EmotionVector4& v) noexcept {
  if (v.is_degenerate()) return EmotionVector5();
  const auto& a = v.values();
  return EmotionVector5({a[0], a[1], a[2], a[3], 0.0});
}

EmotionLabel dominant_emotion(const EmotionVector5& v) noexcept {
  std::size_t best = 0;
  for (std::size_t i = 1; i < kNumLabels; ++i) {
    if (v[i] > v[best]) best = i;
  }
  return kAllLabels[best];
}

EmotionLabel dominant_emotion(const EmotionVector4& v) noexcept {
  return dominant_emotion(extend_with_neutral(v));
}

VadVector VadVector::raw(double valence, double arousal, double dominance) {
  check_range(valence, 0.0, 1.0, "VAD (raw scale)");
  check_range(arousal, 0.0, 1.0, "VAD (raw scale)");
  check_range(dominance, 0.0, 1.0, "VAD (raw scale)");
  return {valence, arousal, dominance, VadScale::kRaw01};
}

VadVector VadVector::signed_scale(double valence, double arousal,
                                  double dominance) {
  check_range(valence, -1.0, 1.0, "VAD (signed scale)");
  check_range(arousal, -1.0, 1.0, "VAD (signed scale)");
  check_range(dominance, -1.0, 1.0, "VAD (signed scale)");
  return {valence, arousal, dominance, VadScale::kSigned};
}

std::string format_fixed6(double value) {
  // Avoid printing "-0.000000".
  if (std::fabs(value) < 5e-7) value = 0.0;
  return fmt::format("{:.6f}", value);
}

}  // namespace emolex
