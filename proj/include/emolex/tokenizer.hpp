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

#ifndef EMOLEX_TOKENIZER_HPP_
#define EMOLEX_TOKENIZER_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace emolex {

using TokenSequence = std::vector<std::string>;

/// Lowercases and splits on anything that is not a letter, digit or
/// apostrophe. URLs (from "http://", "https://" or "www." to the next
/// whitespace) and @mentions are dropped; '#' is a separator, so hashtags
/// keep their text. Apostrophes at token edges are trimmed and U+2019 is
/// read as an apostrophe.
TokenSequence tokenize(std::string_view text);

class StopList {
 public:
  StopList() = default;
  explicit StopList(std::unordered_set<std::string> words);

  /// One word per line; '#' starts a comment. Words are case-folded.
  static StopList from_stream(std::istream& in);
  static StopList from_file(const std::string& path);

  /// The English list shipped with the library.
  static const StopList& bundled();

  bool contains(std::string_view word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_set<std::string, Hash, std::equal_to<>> words_;
};

/// Order-preserving filter.
TokenSequence remove_stopwords(const TokenSequence& tokens,
                               const StopList& stoplist);

/// Text of the bundled list, one word per line.
std::string_view bundled_stopwords_text() noexcept;

/// "en-1:" followed by the FNV-1a 64-bit hash of the bundled list.
std::string bundled_stopwords_id();

}  // namespace emolex

#endif  // EMOLEX_TOKENIZER_HPP_
