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
"""Python front end for the emocov core."""

import json
from fractions import Fraction

from ._emocov import Error, run_cli, total_cells
from . import _emocov

__all__ = [
        "Error",
        "coverage",
        "extract",
        "gaps",
        "load_corpus",
        "run_cli",
        "tally",
        "total_cells",
]


def extract(text, lexicon_path=""):
    """Feature vector of one sentence as {verb, adj, adv, noun}."""
    return json.loads(_emocov.extract_json(text, lexicon_path))


def coverage(texts, k=2, lexicon_path=""):
    report = json.loads(_emocov.coverage_json(list(texts), k, lexicon_path))
    report["cov"] = Fraction(int(report["cov_numerator"]),
                               int(report["cov_denominator"]))
    return report


def gaps(texts, k=2, budget=10, lexicon_path=""):
    return json.loads(_emocov.gaps_json(list(texts), k, budget, lexicon_path))


def tally(votes):
    """Weighted vote over (accuracy, label) pairs; accuracies as exact text."""
    return json.loads(_emocov.tally_json([(str(a), l) for a, l in votes]))


def load_corpus(path):
    return json.loads(_emocov.load_corpus_json(str(path)))
