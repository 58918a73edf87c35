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

#ifndef EMOLEX_TEXT_UTIL_HPP_
#define EMOLEX_TEXT_UTIL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emolex {

/// Decodes one UTF-8 sequence starting at `pos` and advances `pos`. Invalid
/// bytes decode to U+FFFD and consume a single byte.
char32_t decode_utf8(std::string_view s, std::size_t& pos) noexcept;
void append_utf8(std::string& out, char32_t cp);

std::u32string to_u32(std::string_view s);

/// Simple one-to-one lowercase mapping. Covers ASCII, Latin-1, Latin
/// Extended-A, Greek and Cyrillic; other code points map to themselves.
char32_t fold_case(char32_t cp) noexcept;
std::string fold_case(std::string_view s);

/// Splits on a single character; keeps empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Strict decimal parse of the whole field. Rejects empty input, trailing
/// garbage and non-finite values.
std::optional<double> parse_double(std::string_view s) noexcept;

/// Drops a trailing '\r' (files written on Windows).
inline std::string_view chomp(std::string_view line) noexcept {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

inline bool is_blank(std::string_view line) noexcept {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace emolex

#endif  // EMOLEX_TEXT_UTIL_HPP_
