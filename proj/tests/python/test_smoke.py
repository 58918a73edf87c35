# Copyright 2026 The Emolex Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import json

import pytest

import emolex

EMOTION_KEYS = ("anger", "fear", "sadness", "happiness")


@pytest.fixture()
def sources(tmp_path):
    affect = tmp_path / "affect.tsv"
    affect.write_text(
        "word\temotion\tscore\n"
        "deadly\tanger\t0.76\ndeadly\tfear\t0.90\ndeadly\tsadness\t0.88\n"
        "joyful\tjoy\t0.9\n"
    )
    dm = tmp_path / "dm.tsv"
    dm.write_text(
        "word\tanger\tanticipation\tdisgust\tfear\tjoy\tsadness\tsurprise\ttrust\n"
        "grim\t0.1\t0\t0\t0.2\t0\t0.7\t0\t0\n"
    )
    vad = tmp_path / "vad.tsv"
    vad.write_text("word\tvalence\tarousal\tdominance\nlethal\t0.14\t0.85\t0.55\n")
    return affect, dm, vad


def test_version():
    assert emolex.version().startswith("emolex 0.1.0")
    assert emolex.LABELS == ("anger", "fear", "sadness", "happiness", "neutral")


def test_map_vad_deadly():
    v = emolex.map_vad_to_emotions(0.14, 0.85, 0.55)
    assert v["anger"] == pytest.approx(0.458327876776897, abs=1e-12)
    assert v["fear"] == pytest.approx(0.39975053132839766, abs=1e-12)
    assert v["sadness"] == pytest.approx(0.14192159189470532, abs=1e-12)
    assert v["happiness"] == 0.0
    assert emolex.dominant_emotion([v[k] for k in EMOTION_KEYS]) == "anger"
    literal = emolex.map_vad_to_emotions(0.14, 0.85, 0.55, recenter=False)
    assert emolex.dominant_emotion([literal[k] for k in EMOTION_KEYS]) == "happiness"
    with pytest.raises(ValueError):
        emolex.map_vad_to_emotions(1.5, 0, 0)


def test_scalar_helpers():
    assert emolex.normalize_sum1([1, 1, 2]) == [0.25, 0.25, 0.5]
    assert emolex.normalize_sum1([0, 0]) == [0, 0]
    with pytest.raises(emolex.InvalidInput):
        emolex.normalize_sum1([-1, 2])
    assert emolex.recenter_vad(0.5, 1.0, 0.0) == (0.0, 1.0, -1.0)
    assert emolex.cosine_similarity((1, 0, 0), (1, 0, 0)) == pytest.approx(1.0)
    assert emolex.cosine_similarity((0, 0, 0), (1, 0, 0)) is None
    assert emolex.gestalt_similarity("deadlyy", "deadly") == pytest.approx(12 / 13)
    assert emolex.tokenize("This is BIZARRE, lunatic! https://x.co") == [
        "this", "is", "bizarre", "lunatic"]
    assert emolex.remove_stopwords(["this", "is", "bizarre"]) == ["bizarre"]
    assert emolex.remove_stopwords(["this", "fear"], ["fear"]) == ["this"]


def test_statistics():
    t, df = emolex.welch_t([1, 2, 3], [2, 3, 4])
    assert t == pytest.approx(-1.224744871391589)
    assert df == pytest.approx(4.0)
    assert emolex.pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)
    assert emolex.pearson([0.1, 0.1, 0.1], [1, 2, 3]) is None
    with pytest.raises(emolex.InsufficientData):
        emolex.welch_t([1], [2, 3])


def test_lexicon_build_save_load(sources, tmp_path):
    lex = emolex.Lexicon.build(*sources)
    assert len(lex) == 4
    assert lex.counts() == {"AFFECT": 2, "DM": 1, "VAD": 1}
    assert "lethal" in lex
    assert lex.lookup("lethal")["source"] == "VAD"
    assert lex.lookup("missing") is None
    assert lex.words() == sorted(lex.words())
    path = tmp_path / "unified.tsv"
    lex.save(path)
    again = emolex.Lexicon.load(path)
    assert again.words() == lex.words()
    with pytest.raises(emolex.InputError):
        emolex.Lexicon.load(tmp_path / "missing.tsv")


def test_scorer(sources):
    lex = emolex.Lexicon.build(*sources)
    scorer = emolex.Scorer(lex)
    r = scorer.score("Deadly qwertyuiop")
    assert r["anger"] == pytest.approx(0.1496063, abs=1e-7)
    assert r["neutral"] == pytest.approx(0.5)
    assert (r["k"], r["matched"], r["fuzzy"], r["neutral_tokens"]) == (2, 1, 0, 1)
    assert scorer.score("")["neutral"] == 1.0
    assert scorer.score("deadlyy")["fuzzy"] == 1
    texts = ["grim news", "joyful", "lethal deadly", "the"] * 25
    batch = scorer.score_batch(texts, threads=3)
    assert batch == [scorer.score(t) for t in texts]
    for r in batch:
        assert sum(r[k] for k in emolex.LABELS) == pytest.approx(1.0)
    with pytest.raises(emolex.InvalidInput):
        emolex.Scorer(lex, fuzzy_threshold=1.5)


def test_from_entries():
    lex = emolex.Lexicon.from_entries([("calm", [0, 0, 0, 2]), ("fury", [3, 1, 0, 0])])
    assert lex.lookup("fury")["anger"] == pytest.approx(0.75)
    scorer = emolex.Scorer(lex, stopwords=[])
    assert scorer.score("calm")["dominant"] == "happiness"


def test_analyze_writes_report(sources, tmp_path):
    claims = tmp_path / "claims.jsonl"
    claims.write_text(
        json.dumps({"id": "c1", "text": "deadly", "credibility": "false",
                    "retweets": 10, "likes": 3}) + "\n" +
        json.dumps({"id": "c2", "text": "joyful", "credibility": True,
                    "retweets": 1, "likes": 7}) + "\n")
    replies = tmp_path / "replies.jsonl"
    replies.write_text(json.dumps({"claim_id": "c1", "text": "grim"}) + "\n")
    out = tmp_path / "report"
    scorer = emolex.Scorer(emolex.Lexicon.build(*sources))
    summary = emolex.analyze(claims, out, scorer, replies=replies)
    assert summary == {"claims": 2, "replies": 1, "skipped_replies": 0}
    for name in ("emotion_means.csv", "pattern.csv", "engagement_table.csv",
                 "reply_means.csv", "correlations.csv", "ttests.csv"):
        assert (out / name).exists()
    with open(out / "pattern.csv", newline="") as f:
        rows = list(csv.DictReader(f))
    assert [r["claim_id"] for r in rows] == ["c1", "c2"]
    assert rows[0]["dominant"] == "fear"
    assert rows[1]["dominant"] == "happiness"
    with pytest.raises(emolex.ParseError):
        bad = tmp_path / "bad.jsonl"
        bad.write_text("{broken\n")
        emolex.analyze(bad, out, scorer)


def test_run_cli():
    code, out, err = emolex.run_cli(
        ["map-vad", "--valence", "0.14", "--arousal", "0.85", "--dominance", "0.55"])
    assert code == 0
    assert json.loads(out)["dominant"] == "anger"
    code, _, err = emolex.run_cli(["score", "--text", "x"])
    assert code == 1
    assert "missing --lexicon" in err
