"""Smoke tests for the python bindings."""

import json

import pytest

import heckedn


def test_quantum_integer():
    assert heckedn.quantum_integer(3) == "1 + v + v^2"
    assert heckedn.quantum_integer(0) == "0"


def test_cyclotomic_polynomial():
    assert heckedn.cyclotomic_polynomial(3) == "1 + v + v^2"
    assert heckedn.cyclotomic_polynomial(6) == "1 - v + v^2"


def test_schur_elements():
    assert heckedn.schur_type_a([2, 1]) == "v^-1 + 1 + v"
    assert heckedn.schur_type_a([1]) == "1"


def test_f_poly_anchors():
    # v^4 (v+1)^4 (v^3+1)^2, expanded ascending
    beta = heckedn.f_poly([2, 1], [2, 1], one_param=True)
    assert beta.startswith("v^4 + 4 v^5")
    assert beta.endswith("4 v^13 + v^14")
    g = heckedn.g_poly([2, 1])
    assert g == "v^2 + 2 v^3 + v^4 + v^5 + 2 v^6 + v^7"


def test_separation():
    assert heckedn.separation_check(6, 3)
    assert not heckedn.separation_check(6, 2)
    with pytest.raises(heckedn.SeparationFailed):
        heckedn.dn_matrix(6, 2)


def test_typea_matrix():
    mat = heckedn.typea_matrix(3, 3)
    row = mat["rows"].index("[2,1]")
    col = mat["cols"].index("[1,1,1]")
    assert mat["entries"][row][col] == 1


def test_dn_matrix_worked_example():
    mat = heckedn.dn_matrix(6, 3)
    row = mat["rows"].index("([2,1]|[2,1])+")
    plus = mat["cols"].index("([1,1,1]|[1,1,1])+")
    minus = mat["cols"].index("([1,1,1]|[1,1,1])-")
    assert mat["entries"][row][plus] == 1
    assert mat["entries"][row][minus] == 0

    mat5 = heckedn.dn_matrix(6, 5)
    row5 = mat5["rows"].index("([2,1]|[2,1])+")
    assert mat5["entries"][row5][mat5["cols"].index("([1,1,1]|[1,1,1])+")] == 0


def test_dn_matrix_semisimple_identity():
    mat = heckedn.dn_matrix(4, 7)
    assert len(mat["rows"]) == 13
    for i, row in enumerate(mat["entries"]):
        for j, value in enumerate(row):
            assert value == (1 if i == j else 0)


def test_json_rendering():
    doc = json.loads(heckedn.dn_matrix_json(4, 3))
    assert doc["n"] == 4
    assert doc["convention"]["sqrt_sign"] == "+leading"
    assert len(doc["entries"]) == len(doc["rows"])


def test_oracle_agreement():
    assert heckedn.oracle_f([1], [1]) == heckedn.f_poly([1], [1])
    assert heckedn.verify_specht_scalar([2, 1])
    assert heckedn.verify_trace_identity([2], [1])
    assert heckedn.gram_rank_dim_simple([1, 1], 2) == 1
    assert heckedn.verify_dimension_consistency(3, 3)
