#!/usr/bin/env python3
# Copyright 2026 The emocov Authors.
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
"""Regenerates fixture_400.txt from data/lexicon.tsv.

Every sentence draws its emotional words from a single emotion, so the
fixture never mixes two emotions in one sentence. One sentence in twenty is
labeled "love", a label no lexicon word carries.
"""

import collections
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parents[2]
EMOTIONS = ["joy", "anger", "sadness", "fear", "surprise"]
FILLER_VERBS = ["walked", "waited", "stood", "spoke", "looked"]
TAILS = ["", " today", " this morning", " at work", " after dinner",
         " near the table", " with a friend"]


def load_lexicon():
    words = collections.defaultdict(list)
    for line in (ROOT / "data" / "lexicon.tsv").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, pos, emotion = line.split("\t")
        words[(pos, emotion)].append(word)
    return words


def main():
    rng = random.Random(20260101)
    words = load_lexicon()
    neutral_nouns = words[("noun", "neutral")]
    lines = []
    for i in range(400):
        emotion = EMOTIONS[i % len(EMOTIONS)]
        slots = {pos: rng.random() < 0.6
                 for pos in ("verb", "adjective", "adverb", "noun")}
        if not any(slots.values()):
            slots[rng.choice(list(slots))] = True
        pick = lambda pos: rng.choice(words[(pos, emotion)])
        parts = ["the"]
        if slots["adjective"]:
            parts.append(pick("adjective"))
        parts.append(pick("noun") if slots["noun"] else rng.choice(neutral_nouns))
        parts.append(pick("verb") if slots["verb"] else rng.choice(FILLER_VERBS))
        if slots["adverb"]:
            parts.append(pick("adverb"))
        label = "love" if i % 20 == 19 else emotion
        lines.append(" ".join(parts) + rng.choice(TAILS) + ";" + label)
    out = pathlib.Path(__file__).with_name("fixture_400.txt")
    out.write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
