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

// Readers for the three source lexicons and the unified lexicon TSV.
//
// All inputs are tab-separated UTF-8. Words are case-folded on read, blank
// lines are ignored and a trailing '\r' is tolerated. A repeated word keeps
// its first occurrence and produces a Warning; every other defect is a
// ParseError carrying the 1-based line number.
//
//   DepecheMood++  word anger anticipation disgust fear joy sadness surprise
//                  trust (header line optional)
//   NRC-Affect     word emotion score, long format, emotion one of
//                  anger/fear/sadness/joy
//   NRC-VAD        word valence arousal dominance
//   unified        word anger fear sadness happiness source (header required)

#ifndef EMOLEX_LEXICON_IO_HPP_
#define EMOLEX_LEXICON_IO_HPP_

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/emotion.hpp"
#include "emolex/error.hpp"
#include "emolex/lexicon.hpp"

namespace emolex {

inline constexpr std::array<std::string_view, 8> kDepecheMoodColumns = {
    "anger", "anticipation", "disgust", "fear",
    "joy",   "sadness",      "surprise", "trust"};

struct RawDmEntry {
  std::string word;
  /// Indexed like kDepecheMoodColumns.
  std::array<double, 8> scores{};

  double anger() const noexcept { return scores[0]; }
  double fear() const noexcept { return scores[3]; }
  double joy() const noexcept { return scores[4]; }
  double sadness() const noexcept { return scores[5]; }
};

struct RawAffectEntry {
  std::string word;
  double anger = 0.0;
  double fear = 0.0;
  double sadness = 0.0;
  double joy = 0.0;
};

struct RawVadEntry {
  std::string word;
  VadVector vad;
};

template <typename Entry>
struct ParseResult {
  std::vector<Entry> entries;
  std::vector<Warning> warnings;
};

ParseResult<RawDmEntry> parse_depechemood(std::istream& in,
                                          std::string_view source = "depechemood");
ParseResult<RawAffectEntry> parse_nrc_affect(std::istream& in,
                                             std::string_view source = "nrc-affect");
ParseResult<RawVadEntry> parse_nrc_vad(std::istream& in,
                                       std::string_view source = "nrc-vad");

/// Header plus one row per entry in word order. Each row's four values are
/// rounded to micro-units so that they still sum to exactly 1.000000, which
/// makes write -> read -> write byte-stable.
void write_unified(const UnifiedLexicon& lexicon, std::ostream& out);
UnifiedLexicon read_unified(std::istream& in,
                            std::string_view source = "unified");

/// The four values as integer millionths, largest-remainder rounded so the
/// parts sum to 1000000 (or are all zero for the degenerate vector).
std::array<long long, 4> to_micro_units(const EmotionVector4& v);

// File-path conveniences; throw InputError when the file cannot be opened.
ParseResult<RawDmEntry> load_depechemood(const std::filesystem::path& path);
ParseResult<RawAffectEntry> load_nrc_affect(const std::filesystem::path& path);
ParseResult<RawVadEntry> load_nrc_vad(const std::filesystem::path& path);
UnifiedLexicon load_unified(const std::filesystem::path& path);
void save_unified(const UnifiedLexicon& lexicon,
                  const std::filesystem::path& path);

}  // namespace emolex

#endif  // EMOLEX_LEXICON_IO_HPP_
