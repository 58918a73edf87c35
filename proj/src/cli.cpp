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

#include "emolex/cli.hpp"

#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <vector>

#include "CLI11.hpp"
#include "emolex/analytics.hpp"
#include "emolex/corpus.hpp"
#include "emolex/error.hpp"
#include "emolex/lexicon_io.hpp"
#include "emolex/lexicon_merge.hpp"
#include "emolex/report.hpp"
#include "emolex/scorer.hpp"
#include "emolex/text_util.hpp"
#include "emolex/vad_mapping.hpp"
#include "json.hpp"

namespace emolex {
namespace {

using nlohmann::json;

/// Missing or conflicting arguments; reported together with the usage text.
class UsageError : public InputError {
 public:
  using InputError::InputError;
};

constexpr std::size_t kMaxWarningsShown = 20;

void report_warnings(std::ostream& err, std::string_view source,
                     const std::vector<Warning>& warnings) {
  for (std::size_t i = 0; i < warnings.size() && i < kMaxWarningsShown; ++i) {
    err << fmt::format("warning: {}:{}: {}\n", source, warnings[i].line,
                       warnings[i].message);
  }
  if (warnings.size() > kMaxWarningsShown) {
    err << fmt::format("warning: {}: {} more warnings not shown\n", source,
                       warnings.size() - kMaxWarningsShown);
  }
}

struct SourceLexicons {
  ParseResult<RawAffectEntry> affect;
  ParseResult<RawDmEntry> depechemood;
  ParseResult<RawVadEntry> vad;
};

SourceLexicons load_sources(const RunConfig& cfg, std::ostream& err) {
  if (!cfg.affect || !cfg.depechemood || !cfg.vad) {
    throw UsageError("--affect, --depechemood and --vad are all required");
  }
  SourceLexicons s{load_nrc_affect(*cfg.affect),
                   load_depechemood(*cfg.depechemood), load_nrc_vad(*cfg.vad)};
  report_warnings(err, cfg.affect->string(), s.affect.warnings);
  report_warnings(err, cfg.depechemood->string(), s.depechemood.warnings);
  report_warnings(err, cfg.vad->string(), s.vad.warnings);
  return s;
}

UnifiedLexicon merge_sources(const SourceLexicons& s, const RunConfig& cfg) {
  MergeOptions options;
  options.mapping.recenter = cfg.recenter;
  return merge(s.affect.entries, s.depechemood.entries, s.vad.entries,
               options);
}

/// A prebuilt unified lexicon, or one merged on the fly from the three
/// source lexicons.
std::shared_ptr<const UnifiedLexicon> resolve_lexicon(const RunConfig& cfg,
                                                      std::ostream& err) {
  if (cfg.lexicon) {
    if (!cfg.recenter) {
      err << "warning: --no-recenter has no effect on a prebuilt lexicon\n";
    }
    return std::make_shared<const UnifiedLexicon>(load_unified(*cfg.lexicon));
  }
  if (cfg.affect || cfg.depechemood || cfg.vad) {
    return std::make_shared<const UnifiedLexicon>(
        merge_sources(load_sources(cfg, err), cfg));
  }
  throw UsageError("missing --lexicon");
}

StopList resolve_stoplist(const RunConfig& cfg) {
  if (cfg.stopwords) return StopList::from_file(cfg.stopwords->string());
  return StopList::bundled();
}

Scorer make_scorer(const RunConfig& cfg, std::ostream& err) {
  return Scorer(resolve_lexicon(cfg, err), resolve_stoplist(cfg),
                Scorer::Options{cfg.fuzzy_threshold});
}

std::string vector4_json(const EmotionVector4& v) {
  return fmt::format(
      "{{\"anger\":{},\"fear\":{},\"sadness\":{},\"happiness\":{},"
      "\"dominant\":\"{}\"}}",
      format_fixed6(v.anger()), format_fixed6(v.fear()),
      format_fixed6(v.sadness()), format_fixed6(v.happiness()),
      label_name(dominant_emotion(v)));
}

std::string score_json(const std::optional<std::string>& id,
                       const ScoreResult& r) {
  std::string out = "{";
  if (id) out += fmt::format("\"id\":{},", *id);
  const auto& v = r.vector;
  out += fmt::format(
      "\"anger\":{},\"fear\":{},\"sadness\":{},\"happiness\":{},"
      "\"neutral\":{},\"dominant\":\"{}\",\"k\":{},\"matched\":{},"
      "\"fuzzy\":{}}}",
      format_fixed6(v.anger()), format_fixed6(v.fear()),
      format_fixed6(v.sadness()), format_fixed6(v.happiness()),
      format_fixed6(v.neutral()), label_name(dominant_emotion(v)), r.k,
      r.matched, r.fuzzy);
  return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  return out;
}

// --- subcommands -----------------------------------------------------------

int cmd_build_lexicon(const RunConfig& cfg, const std::filesystem::path& dest,
                      std::ostream& out, std::ostream& err) {
  const auto lexicon = merge_sources(load_sources(cfg, err), cfg);
  save_unified(lexicon, dest);
  out << fmt::format("entries={} affect={} dm={} vad={}\n", lexicon.size(),
                     lexicon.count(LexiconSource::kAffect),
                     lexicon.count(LexiconSource::kDepecheMood),
                     lexicon.count(LexiconSource::kVad));
  return kExitOk;
}

struct VadArgs {
  double valence = 0.0;
  double arousal = 0.0;
  double dominance = 0.0;
};

int cmd_map_vad(const RunConfig& cfg, const VadArgs& a, std::ostream& out) {
  const auto v = map_vad_to_emotions(
      VadVector::raw(a.valence, a.arousal, a.dominance),
      MappingOptions{cfg.recenter});
  out << vector4_json(v) << "\n";
  return kExitOk;
}

struct ScoreArgs {
  std::optional<std::string> text;
  std::optional<std::filesystem::path> input;
  std::string field = "text";
  std::string id_field = "id";
  std::optional<std::filesystem::path> out;
};

int cmd_score(const RunConfig& cfg, const ScoreArgs& a, std::ostream& out,
              std::ostream& err) {
  if (a.text.has_value() == a.input.has_value()) {
    throw UsageError("exactly one of --text or --input is required");
  }
  const Scorer scorer = make_scorer(cfg, err);

  std::vector<std::string> texts;
  std::vector<std::optional<std::string>> ids;
  if (a.text) {
    texts.push_back(*a.text);
    ids.emplace_back();
  } else {
    std::ifstream in(*a.input, std::ios::binary);
    if (!in) throw InputError("cannot open '" + a.input->string() + "'");
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      const auto view = chomp(line);
      if (is_blank(view)) continue;
      json obj;
      try {
        obj = json::parse(view);
      } catch (const json::parse_error& e) {
        throw ParseError(a.input->string(), number,
                         fmt::format("invalid JSON ({})", e.what()));
      }
      if (!obj.is_object()) {
        throw ParseError(a.input->string(), number, "expected a JSON object");
      }
      auto it = obj.find(a.field);
      if (it == obj.end() || !it->is_string()) {
        throw ParseError(a.input->string(), number,
                         fmt::format("missing string field '{}'", a.field));
      }
      texts.push_back(it->get<std::string>());
      auto id = obj.find(a.id_field);
      ids.push_back(id == obj.end() ? std::nullopt
                                    : std::optional<std::string>(id->dump()));
    }
  }

  const auto results = scorer.score_batch(texts, cfg.threads);
  std::string buffer;
  for (std::size_t i = 0; i < results.size(); ++i) {
    buffer += score_json(ids[i], results[i]);
    buffer.push_back('\n');
  }
  if (a.out) {
    auto file = open_output(*a.out);
    file << buffer;
    if (!file.flush()) throw InputError("write failed for '" + a.out->string() + "'");
  } else {
    out << buffer;
  }
  return kExitOk;
}

struct AnalyzeArgs {
  std::filesystem::path claims;
  std::optional<std::filesystem::path> replies;
  std::filesystem::path out;
};

int cmd_analyze(const RunConfig& cfg, const AnalyzeArgs& a, std::ostream& out,
                std::ostream& err) {
  const Corpus corpus = load_corpus(a.claims, a.replies);
  report_warnings(err, a.replies ? a.replies->string() : "replies",
                  corpus.warnings);
  const Scorer scorer = make_scorer(cfg, err);
  const auto scored = score_corpus(corpus, scorer, cfg.threads);
  write_report(build_report(scored), a.out);

  // Run metadata; deterministic, so reruns stay byte-identical.
  json summary = json::object();
  summary["version"] = version_string();
  summary["claims"] = corpus.claims.size();
  summary["replies"] = corpus.replies.size();
  summary["skipped_replies"] = corpus.skipped_replies;
  summary["lexicon_entries"] = scorer.lexicon().size();
  summary["fuzzy_threshold"] = format_fixed6(cfg.fuzzy_threshold);
  summary["recenter"] = cfg.recenter;
  summary["stopwords"] =
      cfg.stopwords ? cfg.stopwords->filename().string() : bundled_stopwords_id();
  summary["statistics"] = "descriptive";
  auto file = open_output(a.out / "summary.json");
  file << summary.dump(2) << "\n";
  if (!file.flush()) throw InputError("cannot write summary.json");

  out << fmt::format("claims={} replies={} skipped_replies={} out={}\n",
                     corpus.claims.size(), corpus.replies.size(),
                     corpus.skipped_replies, a.out.string());
  return kExitOk;
}

int cmd_report(const std::filesystem::path& dir, const std::string& format,
               std::ostream& out) {
  if (format != "markdown") throw UsageError("unsupported format '" + format + "'");
  out << render_markdown(dir);
  return kExitOk;
}

}  // namespace

std::string version_string() {
  return fmt::format("emolex {} (stopwords {})", kVersion,
                     bundled_stopwords_id());
}

void RunConfig::validate() const {
  if (!(fuzzy_threshold > 0.0 && fuzzy_threshold < 1.0)) {
    throw InvalidInput("--fuzzy-threshold must lie in (0, 1)");
  }
}

int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Emotion lexicon fusion and bag-of-words emotion scoring.",
               "emolex"};
  app.set_version_flag("--version", version_string());
  app.set_config("--config", "",
                 "Read options from a key=value file; flags override it");
  app.require_subcommand(1);

  RunConfig cfg;
  bool no_recenter = false;
  app.add_option("--lexicon", cfg.lexicon, "Unified lexicon TSV")
      ->check(CLI::ExistingFile);
  app.add_option("--affect", cfg.affect, "NRC-Affect TSV (word emotion score)")
      ->check(CLI::ExistingFile);
  app.add_option("--depechemood", cfg.depechemood, "DepecheMood++ TSV")
      ->check(CLI::ExistingFile);
  app.add_option("--vad", cfg.vad, "NRC-VAD TSV (word valence arousal dominance)")
      ->check(CLI::ExistingFile);
  app.add_option("--stopwords", cfg.stopwords,
                 "Stop-word list, one word per line (default: bundled en-1)")
      ->check(CLI::ExistingFile);
  app.add_flag("--no-recenter", no_recenter,
               "Compare raw [0,1] VAD values with the anchors, no 2x-1 shift");
  app.add_option("--fuzzy-threshold", cfg.fuzzy_threshold,
                 "Closest-word similarity must exceed this")
      ->capture_default_str();
  app.add_option("-j,--threads", cfg.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  std::filesystem::path build_out;
  auto* build = app.add_subcommand("build-lexicon",
                                   "Merge the three source lexicons");
  build->fallthrough();
  build->add_option("--out", build_out, "Unified lexicon TSV to write")
      ->required();

  VadArgs vad_args;
  auto* map_vad = app.add_subcommand(
      "map-vad", "Map one [0,1] VAD triple to four emotions (JSON)");
  map_vad->fallthrough();
  map_vad->add_option("--valence", vad_args.valence)->required();
  map_vad->add_option("--arousal", vad_args.arousal)->required();
  map_vad->add_option("--dominance", vad_args.dominance)->required();

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "Score texts (JSON lines)");
  score->fallthrough();
  score->add_option("--text", score_args.text, "A single text to score");
  score->add_option("--input", score_args.input, "JSON-lines documents")
      ->check(CLI::ExistingFile);
  score->add_option("--field", score_args.field, "Text field in --input")
      ->capture_default_str();
  score->add_option("--id-field", score_args.id_field,
                    "Identifier field copied to the output when present")
      ->capture_default_str();
  score->add_option("--out", score_args.out, "Output file (default: stdout)");

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand(
      "analyze", "Score a claim/reply corpus and write the report CSVs");
  analyze->fallthrough();
  analyze->add_option("--claims", analyze_args.claims, "claims.jsonl")
      ->required()
      ->check(CLI::ExistingFile);
  analyze->add_option("--replies", analyze_args.replies, "replies.jsonl")
      ->check(CLI::ExistingFile);
  analyze->add_option("--out", analyze_args.out, "Report directory")
      ->required();

  std::filesystem::path report_in;
  std::string report_format = "markdown";
  auto* report = app.add_subcommand("report", "Render a report directory");
  report->add_option("--in", report_in, "Report directory")
      ->required()
      ->check(CLI::ExistingDirectory);
  report->add_option("--format", report_format, "Output format")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitInput;
  }
  cfg.recenter = !no_recenter;

  CLI::App* active = app.get_subcommands().front();
  try {
    cfg.validate();
    if (active == build) return cmd_build_lexicon(cfg, build_out, out, err);
    if (active == map_vad) return cmd_map_vad(cfg, vad_args, out);
    if (active == score) return cmd_score(cfg, score_args, out, err);
    if (active == analyze) return cmd_analyze(cfg, analyze_args, out, err);
    if (active == report) return cmd_report(report_in, report_format, out);
    throw std::logic_error("unhandled subcommand");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace emolex
