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
"""Smoke tests for the Python bindings."""

import json
import math
import pathlib
from fractions import Fraction

import pytest

import emocov

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"
TINY = str(DATA / "tiny_lexicon.tsv")


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_total_cells_matches_binomial_oracle(k):
    assert emocov.total_cells(k) == math.comb(4, k) * 6**k


def test_total_cells_rejects_bad_k():
    with pytest.raises(emocov.Error) as info:
        emocov.total_cells(5)
    assert info.value.code == "invalid_argument"


def test_extract_with_custom_lexicon():
    fv = emocov.extract("The zebra grinned", lexicon_path=TINY)
    assert fv == {"verb": "joy", "adj": "neutral", "adv": "neutral",
                  "noun": "surprise"}


def test_single_sentence_covers_one_cell_per_projection():
    report = emocov.coverage(["The zebra grinned"], k=2, lexicon_path=TINY)
    assert report["covered"] == math.comb(4, 2)
    assert report["cov"] == Fraction(6, 216)
    assert report["total"] == 216


def test_gaps_are_uncovered_and_ranked():
    plan = emocov.gaps(["The zebra grinned"], k=1, budget=5,
                       lexicon_path=TINY)
    assert [g["priority"] for g in plan] == list(range(5))
    covered = {"verb=joy", "adj=neutral", "adv=neutral", "noun=surprise"}
    for gap in plan:
        assert gap["cell"] not in covered
        assert "Generate a sentence" in gap["prompt"]


def test_tally_weighted_vote():
    verdict = emocov.tally([("0.9", "joy"), ("0.5", "anger"),
                            ("0.5", "anger")])
    assert verdict["label"] == "anger"
    assert Fraction(verdict["margin"]) == Fraction(1, 10)


def test_tally_tie_goes_to_canonical_order():
    verdict = emocov.tally([("1/2", "fear"), ("1/2", "sadness")])
    assert verdict["label"] == "sadness"


def test_load_corpus_reports_bad_lines():
    result = emocov.load_corpus(DATA / "malformed.txt")
    assert len(result["sentences"]) == 4
    assert [i["line"] for i in result["issues"]] == [3, 5, 7, 9]


def test_run_cli_usage_error():
    code, out, err = emocov.run_cli(["coverage"])
    assert code == 2
    assert out == ""
    assert err


def test_run_cli_coverage_json():
    code, out, _ = emocov.run_cli(
        ["coverage", str(DATA / "fixture_400.txt"), "--k", "2"])
    assert code == 0
    report = json.loads(out)
    assert (report["covered"], report["total"]) == (96, 216)
