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

// Report CSVs produced by `emolex analyze`. All files are UTF-8 with a
// header row, LF line endings and six-decimal fixed-point numbers. Values
// that cannot be computed are written as "undefined".
//
//   emotion_means.csv     group,credibility,anger,fear,sadness,happiness,
//                         neutral,n
//   pattern.csv           claim_id,credibility,anger,fear,sadness,
//                         happiness,neutral,dominant
//   engagement_table.csv  emotion,credibility,n_claims,avg_retweet,avg_like,
//                         avg_reply
//   reply_means.csv       group,credibility,anger,fear,sadness,happiness,
//                         neutral,n_claims,n_replies
//   correlations.csv      dimension,r,n,kind
//   ttests.csv            metric,t,df,nA,nB,kind
//
// `group` is a topic or "all". In ttests.csv group A is the false claims
// and group B the true ones.

#ifndef EMOLEX_REPORT_HPP_
#define EMOLEX_REPORT_HPP_

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emolex/corpus.hpp"

namespace emolex {

inline constexpr std::string_view kAllGroup = "all";
inline constexpr std::string_view kUndefined = "undefined";
inline constexpr std::string_view kDescriptive = "descriptive";

struct ReportTables {
  std::string emotion_means;
  std::string pattern;
  std::string engagement_table;
  std::string reply_means;
  std::string correlations;
  std::string ttests;
};

inline constexpr std::array<std::string_view, 6> kReportFiles = {
    "emotion_means.csv", "pattern.csv",      "engagement_table.csv",
    "reply_means.csv",   "correlations.csv", "ttests.csv"};

ReportTables build_report(std::span<const ScoredClaim> claims);

/// Creates `dir` if needed and writes the six CSVs.
void write_report(const ReportTables& tables, const std::filesystem::path& dir);

/// Markdown rendering of the CSVs found in `dir`.
std::string render_markdown(const std::filesystem::path& dir);

/// RFC 4180 quoting when needed.
std::string csv_field(std::string_view value);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace emolex

#endif  // EMOLEX_REPORT_HPP_
