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

// Ratcliff/Obershelp "gestalt pattern matching".
//
// The longest common contiguous block is found, then the procedure recurses
// on the unmatched pieces to its left and right. With M the total number of
// matched characters the similarity is 2M / (|a| + |b|). Among equally long
// blocks the one ending first in `a` (then in `b`) is taken, which makes the
// result agree with Python's difflib.SequenceMatcher(None, a, b,
// autojunk=False).ratio(). Lengths count Unicode code points.

#ifndef EMOLEX_GESTALT_HPP_
#define EMOLEX_GESTALT_HPP_

#include <cstddef>
#include <string_view>

namespace emolex {

/// Total matched characters M.
std::size_t gestalt_matches(std::u32string_view a, std::u32string_view b);

/// 2M / (|a| + |b|). Throws InvalidInput if either string is empty.
double gestalt_similarity(std::u32string_view a, std::u32string_view b);
double gestalt_similarity(std::string_view a, std::string_view b);

/// The ratio as computed for lengths and a match count; every caller goes
/// through this so bounds and exact values round identically.
inline double gestalt_ratio(std::size_t matches, std::size_t total_length) {
  return 2.0 * static_cast<double>(matches) /
         static_cast<double>(total_length);
}

}  // namespace emolex

#endif  // EMOLEX_GESTALT_HPP_
