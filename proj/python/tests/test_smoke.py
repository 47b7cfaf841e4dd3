# Copyright 2026 The auraspace Authors
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

import json
import pathlib

import pytest

import auraspace

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_load_and_round_trip():
    text = (FIXTURES / "nonidem4.json").read_text()
    space = auraspace.Space.from_json(text)
    assert space.size == 4
    assert space.points == ["a", "b", "c", "d"]
    again = auraspace.Space.from_json(space.to_json())
    assert json.loads(again.to_json()) == json.loads(space.to_json())


def test_trace_text():
    space = auraspace.Space.load(str(FIXTURES / "nonidem4.json"))
    assert space.compute_text("trace", "{d}") == "{d} ⊂ {c,d} ⊂ {b,c,d} ⊂ {a,b,c,d}  [stabilized at 3]"


def test_hierarchy_example():
    space = auraspace.Space.load(str(FIXTURES / "hier.json"))
    assert space.compute_text("intsa", "{a,c}") == "{c}"
    assert space.family("tausa") == space.family("tausa_c")
    profile = space.classify("{a,d}")
    assert profile["pre"] is False


def test_invalid_space_raises():
    with pytest.raises(auraspace.SpaceError):
        auraspace.Space.from_json('{"points": ["a"], "opens": [["a"]]}')


def test_corpus_all_match():
    rows = auraspace.repro()
    assert len(rows) == 77
    assert all(r["ok"] for r in rows)


def test_laws_small_scale():
    reports = auraspace.check_laws(["cech_axioms", "tausa_eq_tausa_c"], spaces="enum:n=1..2")
    assert [r["status"] for r in reports] == ["pass", "pass"]


def test_witness_search():
    w = auraspace.find_witness("NONIDEMPOTENT_K(3)", 4, discrete=True)
    assert w is not None
    assert w["witness"]["metrics"]["stabilized_at"] == 3
    assert auraspace.find_witness("NONIDEMPOTENT_K(3)", 3) is None


def test_cli_entry_point():
    code, out, err = auraspace.run_cli(["compute", str(FIXTURES / "hier.json"), "intsa", "{a,c}"])
    assert (code, out, err) == (0, "{c}\n", "")
    code, _, _ = auraspace.run_cli(["search", "--predicate", "STRICT_STAR_AURA", "--n", "6"])
    assert code == 3
