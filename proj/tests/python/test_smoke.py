# Copyright 2026 The qopt authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the qopt extension module."""

import os

import pytest

qopt = pytest.importorskip("qopt")

P1 = "gen: a <-> -b.\npref: a > b.\n"
P2 = "gen: a & -b.\npref: a > b.\n"


def test_parse_render_roundtrip():
    p = qopt.parse_problem(P1)
    text = qopt.render_problem(p)
    assert text == "gen: a <-> -b.\npref[1]: a > b :- top.\n"
    assert qopt.render_problem(qopt.parse_problem(text)) == text
    assert str(p) == text


def test_models_and_optimal():
    p = qopt.parse_problem(P1)
    assert qopt.models(p) == [["a"], ["b"]]
    assert qopt.optimal(p) == [["a"]]
    # under answer sets only {a} survives: ⟨∅,{b}⟩ is an HT-model, so {b}
    # is not in equilibrium
    assert qopt.models(p, semantics="answer-set") == [["a"]]
    # extending the alphabet doubles the classical outcomes
    assert len(qopt.models(p, alphabet=["z"])) == 4


def test_degrees():
    p = qopt.parse_problem(P1)
    assert qopt.degrees(p, ["b"]) == [(1, "a > b :- top", 2)]
    assert qopt.degrees(p, []) == [(1, "a > b :- top", 1)]


def test_compare_gen_failure():
    p = qopt.parse_problem(P1)
    q = qopt.parse_problem(P2)
    verdict = qopt.compare(p, q, mode="gen")
    assert verdict["equivalent"] is False
    assert verdict["failed_condition"] == "Thm3(1)"
    assert verdict["witness"] == [["b"]]
    assert verdict["interval"] is None
    assert qopt.verify_context(p, q, verdict["separating_context"])


def test_compare_equivalent():
    p = qopt.parse_problem(P1)
    verdict = qopt.compare(p, p, mode="combined", interval="2..3",
                           semantics="answer-set")
    assert verdict["equivalent"] is True
    assert verdict["failed_condition"] is None
    assert verdict["separating_context"] is None


def test_rank_interval_verdicts():
    p = qopt.parse_problem("gen: a <-> -b.\npref[2]: a > b.\n")
    q = qopt.parse_problem("gen: a <-> -b.\npref[3]: a > b.\n")
    assert qopt.compare(p, q, mode="sel", interval="4..inf")["equivalent"]
    assert qopt.compare(p, q, mode="sel", interval="1..1")["equivalent"]
    assert not qopt.compare(p, q, mode="sel", interval="2..3")["equivalent"]


def test_oracle():
    p6 = qopt.parse_problem("gen: a <-> -b.\npref: a > b.\npref: b > a.\n")
    p7 = qopt.parse_problem("gen: a <-> -b.\n")
    report = qopt.oracle(p6, p7, mode="sel", budget=10)
    assert report["agreed"] is False
    assert report["first_disagreement"] is not None

    same = qopt.oracle(p6, p6, mode="combined", budget=10)
    assert same["agreed"] is True
    assert same["checked"] > 10


def test_encode_min_models():
    p = qopt.parse_problem("gen: a | b.")
    enc = qopt.encode_min_models(p)
    assert sorted(qopt.optimal(enc)) == [["a", "b_p"], ["a_p", "b"]]
    with pytest.raises(Exception):
        qopt.encode_min_models(qopt.parse_problem("gen: a -> b."))
