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

"""Emotion lexicon fusion and bag-of-words emotion scoring."""

from emolex._core import (
    DEFAULT_FUZZY_THRESHOLD,
    LABELS,
    InputError,
    InsufficientData,
    InvalidInput,
    Lexicon,
    ParseError,
    Scorer,
    analyze,
    cosine_similarity,
    dominant_emotion,
    gestalt_similarity,
    map_vad_to_emotions,
    normalize_sum1,
    pearson,
    recenter_vad,
    remove_stopwords,
    run_cli,
    tokenize,
    version,
    welch_t,
)

__all__ = [
    "DEFAULT_FUZZY_THRESHOLD",
    "LABELS",
    "InputError",
    "InsufficientData",
    "InvalidInput",
    "Lexicon",
    "ParseError",
    "Scorer",
    "analyze",
    "cosine_similarity",
    "dominant_emotion",
    "gestalt_similarity",
    "map_vad_to_emotions",
    "normalize_sum1",
    "pearson",
    "recenter_vad",
    "remove_stopwords",
    "run_cli",
    "tokenize",
    "version",
    "welch_t",
]
