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

#include "emolex/lexicon_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "emolex/text_util.hpp"

namespace emolex {
namespace {

constexpr std::array<std::string_view, 6> kUnifiedHeader = {
    "word", "anger", "fear", "sadness", "happiness", "source"};

// Values read back from six-decimal text may drift from a unit sum by up to
// a few millionths.
constexpr double kTextSumTolerance = 1e-5;

/// Yields non-blank lines with their 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string_view& line) {
    while (std::getline(in_, buffer_)) {
      ++number_;
      line = chomp(buffer_);
      if (!is_blank(line)) return true;
    }
    return false;
  }

  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t number_ = 0;
};

template <std::size_t N>
bool is_header(const std::vector<std::string_view>& fields,
               const std::array<std::string_view, N>& names) {
  if (fields.size() != N) return false;
  for (std::size_t i = 0; i < N; ++i) {
    if (fold_case(fields[i]) != names[i]) return false;
  }
  return true;
}

std::string read_word(std::string_view field, std::string_view source,
                      std::size_t line) {
  std::string word = fold_case(field);
  if (word.empty() || word.find_first_of(" \t") != std::string::npos) {
    throw ParseError(std::string(source), line,
                     "word must be nonempty and contain no whitespace");
  }
  return word;
}

double read_score(std::string_view field, double lo, double hi,
                  std::string_view source, std::size_t line) {
  auto value = parse_double(field);
  if (!value) {
    throw ParseError(std::string(source), line,
                     fmt::format("non-numeric value '{}'", field));
  }
  if (*value < lo || *value > hi) {
    throw ParseError(std::string(source), line,
                     fmt::format("value {} outside [{}, {}]", *value, lo, hi));
  }
  return *value;
}

void expect_columns(const std::vector<std::string_view>& fields,
                    std::size_t expected, std::string_view source,
                    std::size_t line) {
  if (fields.size() != expected) {
    throw ParseError(std::string(source), line,
                     fmt::format("expected {} tab-separated columns, got {}",
                                 expected, fields.size()));
  }
}

Warning duplicate_warning(std::size_t line, std::string_view what,
                          std::size_t first_line) {
  return {line, fmt::format("duplicate {} ignored (first seen at line {})",
                            what, first_line)};
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

ParseResult<RawDmEntry> parse_depechemood(std::istream& in,
                                          std::string_view source) {
  ParseResult<RawDmEntry> result;
  std::unordered_map<std::string, std::size_t> first_seen;
  LineReader reader(in);
  std::string_view line;
  bool first = true;
  while (reader.next(line)) {
    const auto fields = split(line, '\t');
    if (first) {
      first = false;
      std::array<std::string_view, 9> header{"word"};
      std::copy(kDepecheMoodColumns.begin(), kDepecheMoodColumns.end(),
                header.begin() + 1);
      if (is_header(fields, header)) continue;
    }
    expect_columns(fields, 9, source, reader.number());
    RawDmEntry entry;
    entry.word = read_word(fields[0], source, reader.number());
    for (std::size_t i = 0; i < 8; ++i) {
      entry.scores[i] = read_score(fields[i + 1], 0.0, 1.0, source,
                                   reader.number());
    }
    auto [it, inserted] = first_seen.emplace(entry.word, reader.number());
    if (!inserted) {
      result.warnings.push_back(duplicate_warning(
          reader.number(), "word '" + entry.word + "'", it->second));
      continue;
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

ParseResult<RawAffectEntry> parse_nrc_affect(std::istream& in,
                                             std::string_view source) {
  static constexpr std::array<std::string_view, 3> kHeader = {"word", "emotion",
                                                              "score"};
  ParseResult<RawAffectEntry> result;
  std::unordered_map<std::string, std::size_t> slot;
  // (word, emotion) -> line of first occurrence.
  std::unordered_map<std::string, std::size_t> first_seen;
  LineReader reader(in);
  std::string_view line;
  bool first = true;
  while (reader.next(line)) {
    const auto fields = split(line, '\t');
    if (first) {
      first = false;
      if (is_header(fields, kHeader)) continue;
    }
    expect_columns(fields, 3, source, reader.number());
    std::string word = read_word(fields[0], source, reader.number());
    const std::string emotion = fold_case(fields[1]);
    double RawAffectEntry::*member = nullptr;
    if (emotion == "anger") {
      member = &RawAffectEntry::anger;
    } else if (emotion == "fear") {
      member = &RawAffectEntry::fear;
    } else if (emotion == "sadness") {
      member = &RawAffectEntry::sadness;
    } else if (emotion == "joy") {
      member = &RawAffectEntry::joy;
    } else {
      throw ParseError(std::string(source), reader.number(),
                       fmt::format("unknown emotion '{}'", fields[1]));
    }
    const double score = read_score(fields[2], 0.0, 1.0, source,
                                    reader.number());

    auto [seen, fresh] =
        first_seen.emplace(word + '\t' + emotion, reader.number());
    if (!fresh) {
      result.warnings.push_back(duplicate_warning(
          reader.number(), fmt::format("pair ('{}', {})", word, emotion),
          seen->second));
      continue;
    }
    auto [it, inserted] = slot.emplace(word, result.entries.size());
    if (inserted) {
      result.entries.push_back(RawAffectEntry{.word = std::move(word)});
    }
    result.entries[it->second].*member = score;
  }
  return result;
}

ParseResult<RawVadEntry> parse_nrc_vad(std::istream& in,
                                       std::string_view source) {
  static constexpr std::array<std::string_view, 4> kHeader = {
      "word", "valence", "arousal", "dominance"};
  ParseResult<RawVadEntry> result;
  std::unordered_map<std::string, std::size_t> first_seen;
  LineReader reader(in);
  std::string_view line;
  bool first = true;
  while (reader.next(line)) {
    const auto fields = split(line, '\t');
    if (first) {
      first = false;
      if (is_header(fields, kHeader)) continue;
    }
    expect_columns(fields, 4, source, reader.number());
    RawVadEntry entry;
    entry.word = read_word(fields[0], source, reader.number());
    const double v = read_score(fields[1], 0.0, 1.0, source, reader.number());
    const double a = read_score(fields[2], 0.0, 1.0, source, reader.number());
    const double d = read_score(fields[3], 0.0, 1.0, source, reader.number());
    entry.vad = VadVector::raw(v, a, d);
    auto [it, inserted] = first_seen.emplace(entry.word, reader.number());
    if (!inserted) {
      result.warnings.push_back(duplicate_warning(
          reader.number(), "word '" + entry.word + "'", it->second));
      continue;
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

std::array<long long, 4> to_micro_units(const EmotionVector4& v) {
  std::array<long long, 4> units{};
  if (v.is_degenerate()) return units;
  std::array<double, 4> remainder{};
  long long total = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double scaled = v[i] * 1e6;
    units[i] = static_cast<long long>(std::floor(scaled));
    remainder[i] = scaled - static_cast<double>(units[i]);
    total += units[i];
  }
  // Hand the missing millionths to the largest remainders; earlier
  // components win ties.
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t k = 0; total < 1'000'000 && k < 4; ++k, ++total) {
    ++units[order[k]];
  }
  return units;
}

void write_unified(const UnifiedLexicon& lexicon, std::ostream& out) {
  std::string buffer;
  for (std::size_t i = 0; i < kUnifiedHeader.size(); ++i) {
    if (i) buffer.push_back('\t');
    buffer += kUnifiedHeader[i];
  }
  buffer.push_back('\n');
  for (const auto& entry : lexicon.entries()) {
    buffer += entry.word;
    for (long long u : to_micro_units(entry.emotions)) {
      fmt::format_to(std::back_inserter(buffer), "\t{}.{:06d}", u / 1'000'000,
                     u % 1'000'000);
    }
    buffer.push_back('\t');
    buffer += source_name(entry.source);
    buffer.push_back('\n');
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

UnifiedLexicon read_unified(std::istream& in, std::string_view source) {
  std::vector<LexiconEntry> entries;
  std::unordered_map<std::string, std::size_t> first_seen;
  LineReader reader(in);
  std::string_view line;
  if (!reader.next(line) || !is_header(split(line, '\t'), kUnifiedHeader)) {
    throw ParseError(std::string(source), reader.number(),
                     "missing header 'word\tanger\tfear\tsadness\thappiness\tsource'");
  }
  while (reader.next(line)) {
    const auto fields = split(line, '\t');
    expect_columns(fields, 6, source, reader.number());
    std::string word = read_word(fields[0], source, reader.number());
    std::array<double, 4> values{};
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      values[i] = read_score(fields[i + 1], 0.0, 1.0, source, reader.number());
      sum += values[i];
    }
    const auto src = parse_source(fields[5]);
    if (!src) {
      throw ParseError(std::string(source), reader.number(),
                       fmt::format("unknown source '{}'", fields[5]));
    }
    EmotionVector4 emotions;
    if (sum != 0.0) {
      if (std::fabs(sum - 1.0) > kTextSumTolerance) {
        throw ParseError(std::string(source), reader.number(),
                         fmt::format("emotion values sum to {}, expected 1", sum));
      }
      emotions = std::fabs(sum - 1.0) > kSumTolerance
                     ? EmotionVector4::from_weights(values)
                     : EmotionVector4::from_normalized(values);
    }
    auto [it, inserted] = first_seen.emplace(word, reader.number());
    if (!inserted) {
      throw ParseError(std::string(source), reader.number(),
                       fmt::format("duplicate word '{}' (first at line {})",
                                   word, it->second));
    }
    entries.push_back({std::move(word), emotions, *src});
  }
  return UnifiedLexicon(std::move(entries));
}

ParseResult<RawDmEntry> load_depechemood(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_depechemood(in, path.string());
}

ParseResult<RawAffectEntry> load_nrc_affect(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_nrc_affect(in, path.string());
}

ParseResult<RawVadEntry> load_nrc_vad(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_nrc_vad(in, path.string());
}

UnifiedLexicon load_unified(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_unified(in, path.string());
}

void save_unified(const UnifiedLexicon& lexicon,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  write_unified(lexicon, out);
  out.flush();
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace emolex
