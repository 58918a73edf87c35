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

#ifndef EMOLEX_CLI_HPP_
#define EMOLEX_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "emolex/fuzzy_index.hpp"

namespace emolex {

inline constexpr std::string_view kVersion = "0.1.0";

/// "emolex 0.1.0 (stopwords en-1:<hash>)".
std::string version_string();

/// Options shared by every subcommand. They may also come from a key=value
/// file passed with --config; command-line flags win over the file.
struct RunConfig {
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> affect;
  std::optional<std::filesystem::path> depechemood;
  std::optional<std::filesystem::path> vad;
  std::optional<std::filesystem::path> stopwords;
  bool recenter = true;
  double fuzzy_threshold = kDefaultFuzzyThreshold;
  /// 0 = all available cores.
  std::size_t threads = 0;

  /// Throws InvalidInput when the threshold is outside (0,1).
  void validate() const;
};

/// Exit codes: 0 success, 1 input or usage error, 2 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

/// Runs the command line `args` (without the program name). Data goes to
/// `out` or to the files named by the arguments; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

}  // namespace emolex

#endif  // EMOLEX_CLI_HPP_
