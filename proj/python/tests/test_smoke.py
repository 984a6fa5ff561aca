# Copyright 2026 The unsharp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

import unsharp

DATA = pathlib.Path(os.environ.get("UNSHARP_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


@pytest.fixture(scope="module")
def fig1():
    return unsharp.EffectAlgebra.load(str(DATA / "fig1.ea"))


@pytest.fixture(scope="module")
def chain():
    return unsharp.TimeFrame.load(str(DATA / "ex9.tf"))


def test_algebra_basics(fig1):
    assert len(fig1) == 9
    assert fig1.zero == "0" and fig1.one == "1"
    assert fig1.supplement("d") == "d"
    assert fig1.plus("a", "b") == "c'"
    assert fig1.plus("a", "a") is None
    assert fig1.odot("b'", "d") == "b"
    assert not fig1.is_lattice()


def test_connectives(fig1):
    assert fig1.imp_arrow("c'", "b'") == ["b'", "a'"]
    assert fig1.imp_squig("a", "b") is None
    assert fig1.imp_squig("c'", "b") == "a'"
    assert fig1.imp_double("b'", "c'") == ["d", "c'"]
    assert fig1.otimes("a", "b'") == ["a", "d"]


def test_table_rendering(fig1):
    table = fig1.table("otimes").splitlines()
    assert table[0].split() == ["⊗", "|", "0", "a", "b", "c", "d", "c'", "b'", "a'", "1"]
    with pytest.raises(ValueError):
        fig1.table("nope")


def test_tense_and_expressions(fig1, chain):
    assert chain.names == ["1", "2", "3"]
    assert chain.serial() and chain.reflexive()
    p = ["a'", "c'", "a'"]
    q = ["b'", "b'", "c'"]
    assert unsharp.tense(fig1, chain, "G", [p]) == [["b"], ["b"], ["a'"]]
    props = {"p": p, "q": q}
    assert unsharp.evaluate(fig1, chain, props, "H(p) & H(q)") == [["c"], ["0"], ["0"]]
    assert unsharp.evaluate(fig1, chain, props, "G(phi(p => q))") == [["b"], ["b"], ["c'"]]
    with pytest.raises(ValueError):
        unsharp.evaluate(fig1, chain, props, "G(p")
    with pytest.raises(ArithmeticError):
        unsharp.evaluate(fig1, chain, props, "p + q")


def test_frames(fig1):
    f = unsharp.TimeFrame(["x", "y"], [("x", "y"), ("y", "x")])
    assert f.serial() and not f.reflexive()
    with pytest.raises(ValueError):
        unsharp.tense(fig1, unsharp.TimeFrame(["x", "y"], [("x", "y")]), "G", [["0", "0"]])


def test_induced_relation(fig1, chain):
    assert sorted(unsharp.induced_relation(fig1, chain)) == sorted(chain.pairs())


def test_errors():
    with pytest.raises(KeyError):
        unsharp.EffectAlgebra.load(str(DATA / "fig1.ea")).supplement("zz")
    with pytest.raises(ValueError):
        unsharp.EffectAlgebra.parse("[elements]\n0 1\n[zero]\n0\n[one]\n1\n[plus]\n0: 0 1\n1: - -\n")


def test_laws(fig1):
    checks = unsharp.laws(fig1)
    assert checks and all(c["status"] == "pass" for c in checks)
    assert {"otimes.divisibility", "arrow.adjointness"} <= {c["id"] for c in checks}


def test_cli_in_process():
    code, out, err = unsharp.run_cli(["verify", str(DATA / "fig1.ea")])
    assert code == 0 and out == "valid effect algebra; not a lattice\n" and err == ""
