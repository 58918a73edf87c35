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

// Python bindings for the emolex core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <sstream>

#include "emolex/analytics.hpp"
#include "emolex/cli.hpp"
#include "emolex/corpus.hpp"
#include "emolex/gestalt.hpp"
#include "emolex/lexicon_io.hpp"
#include "emolex/lexicon_merge.hpp"
#include "emolex/report.hpp"
#include "emolex/scorer.hpp"
#include "emolex/tokenizer.hpp"
#include "emolex/vad_mapping.hpp"

namespace py = pybind11;

namespace emolex {
namespace {

using LexiconPtr = std::shared_ptr<UnifiedLexicon>;

py::dict emotions4_dict(const EmotionVector4& v) {
  py::dict d;
  for (std::size_t i = 0; i < kNumEmotions; ++i) {
    d[py::str(std::string(label_name(kAllLabels[i])))] = v[i];
  }
  return d;
}

py::dict score_dict(const ScoreResult& r) {
  py::dict d;
  for (EmotionLabel label : kAllLabels) {
    d[py::str(std::string(label_name(label)))] = r.vector[label];
  }
  d["dominant"] = std::string(label_name(dominant_emotion(r.vector)));
  d["k"] = r.k;
  d["matched"] = r.matched;
  d["fuzzy"] = r.fuzzy;
  d["neutral_tokens"] = r.neutral_tokens;
  return d;
}

StopList make_stoplist(const std::optional<std::vector<std::string>>& words) {
  if (!words) return StopList::bundled();
  return StopList(std::unordered_set<std::string>(words->begin(), words->end()));
}

std::vector<double> normalize(const std::vector<double>& v) {
  std::vector<double> out(v.size());
  normalize_into(v, out);
  return out;
}

std::string dominant(const std::vector<double>& v) {
  if (v.size() == kNumEmotions) {
    std::array<double, kNumEmotions> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return std::string(label_name(dominant_emotion(EmotionVector4::from_normalized(a))));
  }
  if (v.size() == kNumLabels) {
    std::array<double, kNumLabels> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return std::string(label_name(dominant_emotion(EmotionVector5::from_normalized(a))));
  }
  throw InvalidInput("dominant_emotion expects 4 or 5 values");
}

LexiconPtr build_lexicon(const std::filesystem::path& affect,
                         const std::filesystem::path& depechemood,
                         const std::filesystem::path& vad, bool recenter) {
  MergeOptions options;
  options.mapping.recenter = recenter;
  return std::make_shared<UnifiedLexicon>(
      merge(load_nrc_affect(affect).entries, load_depechemood(depechemood).entries,
            load_nrc_vad(vad).entries, options));
}

py::dict analyze(const std::filesystem::path& claims, const std::filesystem::path& out,
                 const Scorer& scorer, const std::optional<std::filesystem::path>& replies,
                 std::size_t threads) {
  Corpus corpus;
  {
    py::gil_scoped_release release;
    corpus = load_corpus(claims, replies);
    write_report(build_report(score_corpus(corpus, scorer, threads)), out);
  }
  py::dict d;
  d["claims"] = corpus.claims.size();
  d["replies"] = corpus.replies.size();
  d["skipped_replies"] = corpus.skipped_replies;
  return d;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace emolex

PYBIND11_MODULE(_core, m) {
  using namespace emolex;
  m.doc() = "Emotion lexicon fusion and bag-of-words emotion scoring.";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvalidInput>(m, "InvalidInput", input_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());
  py::register_exception<InsufficientData>(m, "InsufficientData", input_error.ptr());

  m.attr("DEFAULT_FUZZY_THRESHOLD") = kDefaultFuzzyThreshold;
  m.attr("LABELS") = py::make_tuple("anger", "fear", "sadness", "happiness", "neutral");
  m.def("version", &version_string);

  m.def("normalize_sum1", &normalize, py::arg("values"),
        "Divide nonnegative values by their sum; all zeros for a zero sum.");
  m.def("dominant_emotion", &dominant, py::arg("values"),
        "Argmax label of a 4- or 5-component emotion vector.");
  m.def(
      "recenter_vad",
      [](double v, double a, double d) {
        const auto r = recenter_vad(VadVector::raw(v, a, d));
        return py::make_tuple(r.valence, r.arousal, r.dominance);
      },
      py::arg("valence"), py::arg("arousal"), py::arg("dominance"));
  m.def(
      "cosine_similarity",
      [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
        return cosine_similarity(VadVector::signed_scale(a[0], a[1], a[2]),
                                 VadVector::signed_scale(b[0], b[1], b[2]));
      },
      py::arg("a"), py::arg("b"), "Cosine of two signed VAD vectors; None for a zero vector.");
  m.def(
      "map_vad_to_emotions",
      [](double v, double a, double d, bool recenter) {
        return emotions4_dict(
            map_vad_to_emotions(VadVector::raw(v, a, d), MappingOptions{recenter}));
      },
      py::arg("valence"), py::arg("arousal"), py::arg("dominance"), py::arg("recenter") = true);
  m.def(
      "gestalt_similarity",
      [](const std::string& a, const std::string& b) {
        return gestalt_similarity(std::string_view(a), std::string_view(b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "tokenize", [](const std::string& text) { return tokenize(text); }, py::arg("text"));
  m.def(
      "remove_stopwords",
      [](const std::vector<std::string>& tokens,
         const std::optional<std::vector<std::string>>& stopwords) {
        return remove_stopwords(tokens, make_stoplist(stopwords));
      },
      py::arg("tokens"), py::arg("stopwords") = py::none());
  m.def(
      "welch_t",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        const auto w = welch_t(a, b);
        return py::make_tuple(w.t, w.df);
      },
      py::arg("a"), py::arg("b"), "Welch t statistic and degrees of freedom (a minus b).");
  m.def(
      "pearson",
      [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); },
      py::arg("x"), py::arg("y"));

  py::class_<UnifiedLexicon, LexiconPtr>(m, "Lexicon")
      .def_static(
          "load",
          [](const std::filesystem::path& path) {
            return std::make_shared<UnifiedLexicon>(load_unified(path));
          },
          py::arg("path"))
      .def_static("build", &build_lexicon, py::arg("affect"), py::arg("depechemood"),
                  py::arg("vad"), py::arg("recenter") = true)
      .def_static(
          "from_entries",
          [](const std::vector<std::pair<std::string, std::array<double, 4>>>& entries) {
            std::vector<LexiconEntry> out;
            for (const auto& [word, weights] : entries) {
              out.push_back({word, EmotionVector4::from_weights(weights), LexiconSource::kAffect});
            }
            return std::make_shared<UnifiedLexicon>(std::move(out));
          },
          py::arg("entries"), "Build from (word, [anger, fear, sadness, happiness]) pairs.")
      .def("save", [](const UnifiedLexicon& lex, const std::filesystem::path& path) {
        save_unified(lex, path);
      })
      .def("__len__", &UnifiedLexicon::size)
      .def("__contains__",
           [](const UnifiedLexicon& lex, const std::string& w) { return lex.find(w).has_value(); })
      .def(
          "lookup",
          [](const UnifiedLexicon& lex, const std::string& word) -> std::optional<py::dict> {
            const auto* e = lex.lookup(word);
            if (e == nullptr) return std::nullopt;
            auto d = emotions4_dict(e->emotions);
            d["source"] = std::string(source_name(e->source));
            return d;
          },
          py::arg("word"))
      .def("words",
           [](const UnifiedLexicon& lex) {
             std::vector<std::string> out;
             for (const auto& e : lex.entries()) out.push_back(e.word);
             return out;
           })
      .def("counts", [](const UnifiedLexicon& lex) {
        py::dict d;
        d["AFFECT"] = lex.count(LexiconSource::kAffect);
        d["DM"] = lex.count(LexiconSource::kDepecheMood);
        d["VAD"] = lex.count(LexiconSource::kVad);
        return d;
      });

  py::class_<Scorer>(m, "Scorer")
      .def(py::init([](LexiconPtr lexicon, double threshold,
                       const std::optional<std::vector<std::string>>& stopwords) {
             return std::make_unique<Scorer>(std::move(lexicon), make_stoplist(stopwords),
                                             Scorer::Options{threshold});
           }),
           py::arg("lexicon"), py::arg("fuzzy_threshold") = kDefaultFuzzyThreshold,
           py::arg("stopwords") = py::none())
      .def_property_readonly("fuzzy_threshold", &Scorer::fuzzy_threshold)
      .def(
          "score", [](const Scorer& s, const std::string& text) { return score_dict(s.score_text(text)); },
          py::arg("text"))
      .def(
          "score_batch",
          [](const Scorer& s, const std::vector<std::string>& texts, std::size_t threads) {
            std::vector<ScoreResult> results;
            {
              py::gil_scoped_release release;
              results = s.score_batch(texts, threads);
            }
            py::list out;
            for (const auto& r : results) out.append(score_dict(r));
            return out;
          },
          py::arg("texts"), py::arg("threads") = 0);

  m.def("analyze", &analyze, py::arg("claims"), py::arg("out"), py::arg("scorer"),
        py::arg("replies") = py::none(), py::arg("threads") = 0,
        "Score a claim/reply corpus and write the report CSVs to `out`.");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command-line interface; returns (exit_code, stdout, stderr).");
}
