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

#include "emolex/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "emolex/analytics.hpp"

namespace emolex {
namespace {

constexpr std::string_view kEmotionColumns =
    "anger,fear,sadness,happiness,neutral";

void append_values(std::string& out, const std::array<double, kNumLabels>& v) {
  for (double x : v) {
    out.push_back(',');
    out += format_fixed6(x);
  }
}

void append_undefined(std::string& out, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(',');
    out += kUndefined;
  }
}

std::string optional_fixed6(const std::optional<double>& v) {
  return v ? format_fixed6(*v) : std::string(kUndefined);
}

/// "all" first, then topics in byte order.
std::vector<std::string> group_names(std::span<const ScoredClaim> claims) {
  std::set<std::string> topics;
  for (const auto& c : claims) topics.insert(c.claim.topic);
  std::vector<std::string> out{std::string(kAllGroup)};
  out.insert(out.end(), topics.begin(), topics.end());
  return out;
}

std::vector<const ScoredClaim*> select(std::span<const ScoredClaim> claims,
                                       std::string_view group,
                                       Credibility cred, bool all) {
  std::vector<const ScoredClaim*> out;
  for (const auto& c : claims) {
    if (c.claim.credibility != cred) continue;
    if (!all && c.claim.topic != group) continue;
    out.push_back(&c);
  }
  return out;
}

std::string emotion_means_csv(std::span<const ScoredClaim> claims) {
  std::string out = fmt::format("group,credibility,{},n\n", kEmotionColumns);
  const auto groups = group_names(claims);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (Credibility cred : kAllCredibility) {
      const auto members = select(claims, groups[g], cred, g == 0);
      std::vector<EmotionVector5> vectors;
      for (const auto* c : members) vectors.push_back(c->emotions());
      const auto mean = mean_emotions(vectors);
      if (!mean) continue;
      out += csv_field(groups[g]);
      out.push_back(',');
      out += credibility_name(cred);
      append_values(out, mean->values);
      out += fmt::format(",{}\n", mean->n);
    }
  }
  return out;
}

std::string reply_means_csv(std::span<const ScoredClaim> claims) {
  std::string out = fmt::format("group,credibility,{},n_claims,n_replies\n",
                                kEmotionColumns);
  const auto groups = group_names(claims);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (Credibility cred : kAllCredibility) {
      const auto members = select(claims, groups[g], cred, g == 0);
      if (members.empty()) continue;
      std::vector<EmotionVector5> vectors;
      std::size_t replies = 0;
      for (const auto* c : members) {
        if (c->reply_count == 0) continue;
        vectors.push_back(c->reply_mean);
        replies += c->reply_count;
      }
      out += csv_field(groups[g]);
      out.push_back(',');
      out += credibility_name(cred);
      if (auto mean = mean_emotions(vectors)) {
        append_values(out, mean->values);
      } else {
        append_undefined(out, kNumLabels);
      }
      out += fmt::format(",{},{}\n", vectors.size(), replies);
    }
  }
  return out;
}

std::string pattern_csv(std::span<const ScoredClaim> claims) {
  std::vector<const ScoredClaim*> sorted;
  for (const auto& c : claims) sorted.push_back(&c);
  std::sort(sorted.begin(), sorted.end(), [](const auto* a, const auto* b) {
    return a->claim.id < b->claim.id;
  });
  std::string out =
      fmt::format("claim_id,credibility,{},dominant\n", kEmotionColumns);
  for (const auto* c : sorted) {
    out += csv_field(c->claim.id);
    out.push_back(',');
    out += credibility_name(c->claim.credibility);
    append_values(out, c->emotions().values());
    out.push_back(',');
    out += label_name(c->dominant);
    out.push_back('\n');
  }
  return out;
}

std::string engagement_csv(std::span<const ScoredClaim> claims) {
  std::string out =
      "emotion,credibility,n_claims,avg_retweet,avg_like,avg_reply\n";
  for (const auto& row : engagement_table(claims)) {
    out += fmt::format("{},{},{},{},{},{}\n", label_name(row.emotion),
                       credibility_name(row.credibility), row.n_claims,
                       format_fixed6(row.avg_retweet),
                       format_fixed6(row.avg_like),
                       format_fixed6(row.avg_reply));
  }
  return out;
}

std::string correlations_csv(std::span<const ScoredClaim> claims) {
  std::string out = "dimension,r,n,kind\n";
  CorrelationSummary summary;
  try {
    summary = claim_reply_correlation(claims);
  } catch (const InsufficientData&) {
    summary = {};
    for (const auto& c : claims) summary.n += c.reply_count > 0 ? 1 : 0;
  }
  for (EmotionLabel label : kAllLabels) {
    out += fmt::format("{},{},{},{}\n", label_name(label),
                       optional_fixed6(summary.r[label_index(label)]),
                       summary.n, kDescriptive);
  }
  return out;
}

void append_ttest(std::string& out, std::string_view metric,
                  const std::vector<double>& a, const std::vector<double>& b) {
  std::string t(kUndefined), df(kUndefined);
  try {
    const auto w = welch_t(a, b);
    t = format_fixed6(w.t);
    df = format_fixed6(w.df);
  } catch (const InsufficientData&) {
  }
  out += fmt::format("{},{},{},{},{},{}\n", metric, t, df, a.size(), b.size(),
                     kDescriptive);
}

std::string ttests_csv(std::span<const ScoredClaim> claims) {
  std::string out = "metric,t,df,nA,nB,kind\n";
  using Extract = std::function<std::optional<double>(const ScoredClaim&)>;
  const auto run = [&](std::string_view metric, const Extract& get) {
    std::vector<double> a, b;
    for (const auto& c : claims) {
      auto v = get(c);
      if (!v) continue;
      (c.claim.credibility == Credibility::kFalse ? a : b).push_back(*v);
    }
    append_ttest(out, metric, a, b);
  };
  for (EmotionLabel label : kAllLabels) {
    run(fmt::format("claim_{}", label_name(label)),
        [label](const ScoredClaim& c) -> std::optional<double> {
          return c.emotions()[label];
        });
  }
  for (EmotionLabel label : kAllLabels) {
    run(fmt::format("reply_{}", label_name(label)),
        [label](const ScoredClaim& c) -> std::optional<double> {
          if (c.reply_count == 0) return std::nullopt;
          return c.reply_mean[label];
        });
  }
  run("retweets", [](const ScoredClaim& c) -> std::optional<double> {
    return static_cast<double>(c.claim.retweets);
  });
  run("likes", [](const ScoredClaim& c) -> std::optional<double> {
    return static_cast<double>(c.claim.likes);
  });
  run("replies", [](const ScoredClaim& c) -> std::optional<double> {
    return static_cast<double>(c.reply_count);
  });
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace

ReportTables build_report(std::span<const ScoredClaim> claims) {
  return {emotion_means_csv(claims), pattern_csv(claims),
          engagement_csv(claims),    reply_means_csv(claims),
          correlations_csv(claims),  ttests_csv(claims)};
}

void write_report(const ReportTables& tables,
                  const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create '" + dir.string() + "': " + ec.message());
  write_file(dir / kReportFiles[0], tables.emotion_means);
  write_file(dir / kReportFiles[1], tables.pattern);
  write_file(dir / kReportFiles[2], tables.engagement_table);
  write_file(dir / kReportFiles[3], tables.reply_means);
  write_file(dir / kReportFiles[4], tables.correlations);
  write_file(dir / kReportFiles[5], tables.ttests);
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    row_started = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      row_started = false;
    } else {
      field.push_back(c);
    }
  }
  if (row_started || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_markdown(const std::filesystem::path& dir) {
  static constexpr std::array<std::string_view, 6> kTitles = {
      "Mean claim emotions by group and credibility",
      "Emotional pattern per claim",
      "Engagement by dominant emotion and credibility",
      "Mean reply emotions by group and credibility",
      "Claim/reply correlations (descriptive)",
      "False vs. true Welch t statistics (descriptive)"};
  std::string out = "# Emotion analysis report\n";
  std::size_t found = 0;
  for (std::size_t f = 0; f < kReportFiles.size(); ++f) {
    const auto path = dir / kReportFiles[f];
    std::ifstream in(path, std::ios::binary);
    if (!in) continue;
    ++found;
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto rows = parse_csv(buffer.str());
    out += fmt::format("\n## {}\n\nSource: `{}`\n\n", kTitles[f],
                       kReportFiles[f]);
    if (rows.empty()) continue;
    const auto cell = [](const std::string& s) {
      std::string escaped;
      for (char c : s) {
        if (c == '|') escaped += "\\|";
        else if (c == '\n' || c == '\r') escaped.push_back(' ');
        else escaped.push_back(c);
      }
      return escaped;
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out += "|";
      for (const auto& v : rows[r]) out += " " + cell(v) + " |";
      out += "\n";
      if (r == 0) {
        out += "|";
        for (std::size_t k = 0; k < rows[0].size(); ++k) out += " --- |";
        out += "\n";
      }
    }
  }
  if (found == 0) {
    throw InputError("no report CSVs found in '" + dir.string() + "'");
  }
  return out;
}

}  // namespace emolex
