"""End-to-end smoke tests for the Python bindings."""

import json
import math

import pytest

import stringgrass as sg


def test_fixture_counts():
    row3 = sg.fixture(3)
    assert sg.chi(row3, [1, 0, 0]) == 2
    assert sg.chi(row3, [1, 1, 1]) == 0
    assert sg.chi(sg.fixture(1), [1, 1]) == 1


def test_single_vertex_binomials():
    rep = sg.representation_from_json(
        json.dumps({"vertices": [1], "arrows": [], "dims": {"1": 5}, "matrices": {}})
    )
    for k in range(6):
        assert sg.chi(rep, [k]) == math.comb(5, k)


def test_classification_and_chains():
    cls = sg.classify(sg.fixture(5))
    assert cls["monomial"] and cls["string"] and cls["orientable"]
    assert cls["chains"] == [["1.1", "1.2", "1.3", "1.4"]]

    not_string = sg.classify(sg.fixture(2))
    assert not_string["monomial"] and not not_string["string"]


def test_degree_certificates():
    cert = sg.certify_degrees(sg.fixture(6))
    assert cert["feasible"]
    degrees = cert["vertex_degrees"]
    assert len(set(degrees.values())) == len(degrees)

    # Identity plus a swap on two parallel arrows: no additive degree
    # assignment separates the two basis vectors named in the witness.
    rep = sg.representation_from_json(
        json.dumps(
            {
                "vertices": [1, 2],
                "arrows": [
                    {"label": "a", "source": 2, "target": 1},
                    {"label": "b", "source": 2, "target": 1},
                ],
                "dims": {"1": 2, "2": 2},
                "matrices": {
                    "a": [
                        {"row": 1, "col": 1, "value": 1},
                        {"row": 2, "col": 2, "value": 1},
                    ],
                    "b": [
                        {"row": 1, "col": 2, "value": 1},
                        {"row": 2, "col": 1, "value": 1},
                    ],
                },
            }
        )
    )
    cert = sg.certify_degrees(rep)
    assert not cert["feasible"]
    v1, v2 = cert["witness"]
    assert v1 != v2


def test_family_table_matches_closed_form():
    rep = sg.family("regular", p=1, n=2)
    table = sg.chi_table(rep)
    assert table[(0, 0)] == 1 and table[(1, 0)] == 2 and table[(2, 1)] == 2
    for e, count in table.items():
        assert sg.chi_regular(1, 2, list(e)) == count
    assert sum(table.values()) == 8


def test_kronecker_closed_forms():
    assert sg.chi_kronecker_preprojective(2, 1, 0) == 3
    assert sg.chi_kronecker_preprojective(4, 0, 0) == 1  # delta term
    assert sg.binom(40, 20) == math.comb(40, 20)
    assert sg.binom(-1, 0) == 0


def test_json_round_trip(tmp_path):
    path = tmp_path / "row4.json"
    sg.save_representation(sg.fixture(4), str(path))
    rep = sg.load_representation(str(path))
    assert rep.to_json() == sg.fixture(4).to_json()
    assert rep.dims == [2, 2]
    assert sg.to_dot(rep).startswith("digraph coefficient_quiver {")


def test_errors_surface_as_exceptions():
    with pytest.raises(RuntimeError):
        sg.fixture(9)
    with pytest.raises(RuntimeError):
        sg.chi(sg.fixture(3), [1, 0])  # wrong length
    with pytest.raises(RuntimeError):
        sg.family("regular", p=0, n=1)


def test_verification_sweep():
    report = sg.verify(pmax=1, nmax=1)
    assert report["passed"]
    assert report["cases"] > 0
    assert report["checks"]["preprojective-vs-enumeration"]["passed"]
