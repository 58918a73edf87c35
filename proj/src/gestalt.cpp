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

#include "emolex/gestalt.hpp"

#include <cstdint>
#include <vector>

#include "emolex/error.hpp"
#include "emolex/text_util.hpp"

namespace emolex {
namespace {

struct Block {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

struct Range {
  std::size_t alo, ahi, blo, bhi;
};

/// Longest common block of a[alo, ahi) and b[blo, bhi). Scans end
/// positions in increasing (i, j) order and only replaces on a strictly
/// longer block, so the earliest-ending block wins ties.
Block longest_block(std::u32string_view a, std::u32string_view b,
                    const Range& r, std::vector<std::uint32_t>& prev,
                    std::vector<std::uint32_t>& cur) {
  const std::size_t width = r.bhi - r.blo;
  prev.assign(width + 1, 0);
  cur.assign(width + 1, 0);
  Block best{r.alo, r.blo, 0};
  for (std::size_t i = r.alo; i < r.ahi; ++i) {
    const char32_t ca = a[i];
    for (std::size_t jj = 1; jj <= width; ++jj) {
      if (b[r.blo + jj - 1] == ca) {
        const std::uint32_t k = prev[jj - 1] + 1;
        cur[jj] = k;
        if (k > best.size) {
          best = {i + 1 - k, r.blo + jj - k, k};
        }
      } else {
        cur[jj] = 0;
      }
    }
    prev.swap(cur);
  }
  return best;
}

}  // namespace

std::size_t gestalt_matches(std::u32string_view a, std::u32string_view b) {
  thread_local std::vector<std::uint32_t> prev, cur;
  thread_local std::vector<Range> pending;
  pending.clear();
  pending.push_back({0, a.size(), 0, b.size()});
  std::size_t matched = 0;
  while (!pending.empty()) {
    const Range r = pending.back();
    pending.pop_back();
    if (r.alo >= r.ahi || r.blo >= r.bhi) continue;
    const Block blk = longest_block(a, b, r, prev, cur);
    if (blk.size == 0) continue;
    matched += blk.size;
    pending.push_back({r.alo, blk.a, r.blo, blk.b});
    pending.push_back({blk.a + blk.size, r.ahi, blk.b + blk.size, r.bhi});
  }
  return matched;
}

double gestalt_similarity(std::u32string_view a, std::u32string_view b) {
  if (a.empty() || b.empty()) {
    throw InvalidInput("gestalt_similarity: strings must be nonempty");
  }
  return gestalt_ratio(gestalt_matches(a, b), a.size() + b.size());
}

double gestalt_similarity(std::string_view a, std::string_view b) {
  return gestalt_similarity(std::u32string_view(to_u32(a)),
                            std::u32string_view(to_u32(b)));
}

}  // namespace emolex
