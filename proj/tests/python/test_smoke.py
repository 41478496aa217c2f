import json
import os
import subprocess

import pytest

import grothmn


def test_stable_expansion():
    got = grothmn.expand([3, 2, 1], 3, 3)
    assert got == {
        (6, 2, 1): {(0, 0): 1},
        (4, 4, 1): {(0, 0): -1},
        (3, 3, 3): {(0, 0): -1},
        (5, 4, 1): {(0, 1): -1},
        (5, 5, 1): {(0, 2): 1},
        (4, 4, 3): {(0, 2): 1},
        (4, 4, 4): {(0, 3): -1},
    }


def test_classical_and_row():
    assert grothmn.expand_render([2, 1], 3, 5, mode="classical") == (
        "p3 * s(2,1) = s(5,1) - s(3,3) - s(2,2,2) + s(2,1,1,1,1)"
    )
    row = json.loads(grothmn.expand_render([3, 2, 1], 3, 3, row=2, format="json"))
    assert [t["nu"] for t in row["terms"]] == [[4, 4, 1], [5, 4, 1], [5, 5, 1]]
    assert grothmn.enumerate_mn_outer([3, 2, 1], 3, 3, row=1) == [(6, 2, 1)]


def test_canonical_coefficient():
    got = grothmn.expand([3, 2, 1], 3, 3, mode="canonical")
    assert got[(4, 4, 4)] == {(3, 0): -1, (2, 1): -3, (1, 2): -3, (0, 3): -1}


def test_polynomials():
    assert grothmn.poly_text([1], 2) == "x1 + x2 + b*x1*x2"
    assert grothmn.poly_text([1], 1, construction="hvt", cap=3) == "x1 + a*x1^2 + a^2*x1^3"
    assert grothmn.poly([2, 1], 2, construction="det") == grothmn.poly([2, 1], 2, construction="svt")
    assert grothmn.poly([], 2, construction="det") == {((0, 0), 0, 0): 1}


def test_tableaux():
    assert grothmn.count_tableaux([2, 1], 3) == 8
    assert sorted(grothmn.tableaux([1], 2, family="svt")) == ["1", "1(|2)", "2"]
    stats = grothmn.tableau_statistics("1(12|23) 3(4|) 4(4|5)/4(|5) 5(56|6)", 6)
    assert stats["weight"] == [2, 2, 2, 4, 4, 2]
    assert (stats["arm_total"], stats["leg_total"]) == (6, 5)


def test_shapes():
    assert grothmn.shape_stats([5, 3, 1], [2, 1]) == {
        "size": 6,
        "rows_occupied": 3,
        "cols_occupied": 5,
        "connected": False,
    }
    assert grothmn.max_nw_ribbon_size([5, 5, 1], [3, 2, 1]) == 4


def test_errors():
    with pytest.raises(ValueError):
        grothmn.expand([1, 2], 1, 2)
    with pytest.raises(grothmn.InvalidInput):
        grothmn.poly([1], 2, construction="hvt")
    with pytest.raises(ValueError):
        grothmn.max_nw_ribbon_size([5, 3, 1], [2, 1])


def test_checks_and_sweeps():
    assert grothmn.check_theorem_stable([3, 2, 1], 3, 3)["passed"]
    assert grothmn.check_lemma([1, 0], 1, 2)["passed"]
    small = grothmn.verify(identities=["theorem", "lemma"], max_size=2, k_max=2, n_max=2)
    assert small["total"] > 0 and small["failed"] == 0
    mutated = grothmn.verify(max_size=2, k_max=2, n_max=2, self_test=True)
    assert mutated["detected"]
    assert mutated["failures"][0]["witness"] is not None


@pytest.mark.skipif("GROTHMN_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["GROTHMN_CLI"], "expand", "--lambda", "3,2,1", "--k", "3", "--n", "3", "--format", "text"],
        check=True,
        capture_output=True,
        text=True,
    ).stdout
    assert out.strip() == grothmn.expand_render([3, 2, 1], 3, 3)
