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

// Emotion value types shared by the whole toolkit.
//
// Two vector shapes exist. EmotionVector4 is the per-word representation
// stored in the unified lexicon: intensities over anger, fear, sadness and
// happiness that sum to one, or the all-zero "neutral-degenerate" value that
// marks a word without emotional signal. EmotionVector5 appends a neutral
// axis and is what text scoring produces; it always sums to one.

#ifndef EMOLEX_EMOTION_HPP_
#define EMOLEX_EMOTION_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "emolex/error.hpp"

namespace emolex {

/// Canonical order is the declaration order; it doubles as the tie-break
/// order for dominant-emotion selection.
enum class EmotionLabel : std::uint8_t {
  kAnger = 0,
  kFear = 1,
  kSadness = 2,
  kHappiness = 3,
  kNeutral = 4,
};

inline constexpr std::size_t kNumEmotions = 4;
inline constexpr std::size_t kNumLabels = 5;

inline constexpr std::array<EmotionLabel, kNumLabels> kAllLabels = {
    EmotionLabel::kAnger, EmotionLabel::kFear, EmotionLabel::kSadness,
    EmotionLabel::kHappiness, EmotionLabel::kNeutral};

/// Lowercase serialized name ("anger", ..., "neutral").
std::string_view label_name(EmotionLabel label) noexcept;
std::optional<EmotionLabel> parse_label(std::string_view name) noexcept;

inline constexpr std::size_t label_index(EmotionLabel label) noexcept {
  return static_cast<std::size_t>(label);
}

/// Tolerance used when checking that a vector sums to one.
inline constexpr double kSumTolerance = 1e-9;

template <std::size_t N>
struct Normalized {
  std::array<double, N> values{};
  /// Set when the input summed to zero; `values` is then all zero.
  bool degenerate = false;
};

/// Writes in / sum(in) to `out` (same size) and returns false, or writes
/// zeros and returns true when the sum is zero. Throws InvalidInput on a
/// negative or non-finite component.
bool normalize_into(std::span<const double> in, std::span<double> out);

/// Divides a nonnegative vector by its sum. A zero-sum input yields the
/// all-zero vector with the degenerate flag set.
template <std::size_t N>
Normalized<N> normalize_sum1(const std::array<double, N>& v) {
  Normalized<N> out;
  out.degenerate = normalize_into(v, out.values);
  return out;
}

class EmotionVector4 {
 public:
  /// The neutral-degenerate value.
  constexpr EmotionVector4() = default;

  /// Adopts already-normalized values; throws InvalidInput unless each
  /// component lies in [0,1] and the sum is 1 (or everything is zero).
  static EmotionVector4 from_normalized(const std::array<double, 4>& values);

  /// normalize_sum1 over nonnegative weights.
  static EmotionVector4 from_weights(const std::array<double, 4>& weights);

  double anger() const noexcept { return values_[0]; }
  double fear() const noexcept { return values_[1]; }
  double sadness() const noexcept { return values_[2]; }
  double happiness() const noexcept { return values_[3]; }

  double operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::array<double, 4>& values() const noexcept { return values_; }

  bool is_degenerate() const noexcept {
    return values_[0] == 0.0 && values_[1] == 0.0 && values_[2] == 0.0 &&
           values_[3] == 0.0;
  }

  friend bool operator==(const EmotionVector4&,
                         const EmotionVector4&) = default;

 private:
  explicit constexpr EmotionVector4(const std::array<double, 4>& v)
      : values_(v) {}

  std::array<double, 4> values_{};
};

class EmotionVector5 {
 public:
  /// Pure neutral (0, 0, 0, 0, 1).
  constexpr EmotionVector5() : values_{0.0, 0.0, 0.0, 0.0, 1.0} {}

  static EmotionVector5 from_normalized(const std::array<double, 5>& values);
  /// Zero-sum weights map to pure neutral.
  static EmotionVector5 from_weights(const std::array<double, 5>& weights);

  double anger() const noexcept { return values_[0]; }
  double fear() const noexcept { return values_[1]; }
  double sadness() const noexcept { return values_[2]; }
  double happiness() const noexcept { return values_[3]; }
  double neutral() const noexcept { return values_[4]; }

  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double operator[](EmotionLabel l) const noexcept {
    return values_[label_index(l)];
  }
  const std::array<double, 5>& values() const noexcept { return values_; }

  friend bool operator==(const EmotionVector5&,
                         const EmotionVector5&) = default;
  friend EmotionVector5 extend_with_neutral(const EmotionVector4& v) noexcept;

 private:
  explicit constexpr EmotionVector5(const std::array<double, 5>& v)
      : values_(v) {}

  std::array<double, 5> values_;
};

/// (v, 0) for a regular vector; pure neutral for the degenerate one.
EmotionVector5 extend_with_neutral(const EmotionVector4& v) noexcept;

/// Label of the largest component; the first maximum in canonical order wins.
EmotionLabel dominant_emotion(const EmotionVector5& v) noexcept;
EmotionLabel dominant_emotion(const EmotionVector4& v) noexcept;

enum class VadScale : std::uint8_t {
  kRaw01,   // lexicon scale, components in [0,1]
  kSigned,  // anchor scale, components in [-1,1]
};

struct VadVector {
  double valence = 0.0;
  double arousal = 0.0;
  double dominance = 0.0;
  VadScale scale = VadScale::kRaw01;

  /// Both factories throw InvalidInput when a component is out of range.
  static VadVector raw(double valence, double arousal, double dominance);
  static VadVector signed_scale(double valence, double arousal,
                                double dominance);

  std::array<double, 3> as_array() const noexcept {
    return {valence, arousal, dominance};
  }
};

/// Fixed-point text with six decimals ("0.458328").
std::string format_fixed6(double value);

}  // namespace emolex

#endif  // EMOLEX_EMOTION_HPP_
