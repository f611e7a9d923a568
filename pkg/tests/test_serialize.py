import json
from fractions import Fraction

import pytest

from superstable.algebra import grassmann, sl2_adjoint, sl2_trivial
from superstable.corpus import corpus_modules, corpus_morphisms
from superstable.gradedmod import Rep
from superstable.linalg import Matrix, Polynomial
from superstable.rigid import L_of
from superstable.serialize import (
    FormatError,
    algebra_from_json,
    algebra_to_json,
    complex_from_json,
    complex_to_json,
    load_algebra,
    map_from_json,
    map_to_json,
    matrix_from_json,
    matrix_to_json,
    module_from_json,
    module_to_json,
    polynomial_from_json,
    polynomial_to_json,
    rep_from_json,
    rep_to_json,
    scalar_from_str,
    scalar_to_str,
)


def test_scalar_strings():
    assert scalar_to_str(Fraction(3, 4)) == "3/4"
    assert scalar_to_str(Fraction(-7)) == "-7"
    assert scalar_to_str(Fraction(6, 4)) == "3/2"
    assert scalar_from_str("3/4") == Fraction(3, 4)
    assert scalar_from_str("-2") == Fraction(-2)
    with pytest.raises(FormatError):
        scalar_from_str("1/0")
    with pytest.raises(FormatError):
        scalar_from_str("0.5")


def test_matrix_roundtrip_dense_and_sparse():
    m = Matrix.from_rows([[1, "1/2"], [0, -3]])
    assert matrix_from_json(matrix_to_json(m)) == m
    sparse = {"rows": 2, "cols": 2, "entries": [[0, 1, "1/2"], [1, 1, "-3"], [0, 0, "1"]]}
    assert matrix_from_json(sparse) == m


def test_matrix_shape_enforcement():
    with pytest.raises(FormatError):
        matrix_from_json([["1", "2"], ["3"]])
    with pytest.raises(FormatError):
        matrix_from_json([["1"]], rows=2, cols=2)
    # empty matrices take their shape from the context
    z = matrix_from_json([], rows=3, cols=0)
    assert (z.rows, z.cols) == (3, 0)


def test_polynomial_roundtrip():
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    p = x * x + y.scale(Fraction(-1, 3))
    j = polynomial_to_json(p)
    assert polynomial_from_json(j, 2) == p
    assert all(set(t) == {"exponents", "coefficient"} for t in j)


def test_algebra_roundtrip_inline():
    for g in (grassmann(2), sl2_trivial(2), sl2_adjoint()):
        j = algebra_to_json(g)
        g2 = algebra_from_json(j)
        assert g2 == g


def test_algebra_builtin_reference():
    assert algebra_from_json("sl2_trivial(2)") == sl2_trivial(2)
    assert load_algebra("grassmann(3)") == grassmann(3)


def test_algebra_rejects_invalid():
    bad = {"dim0": 1, "bracket": [[0, 0, 0, "1"]], "dim1": 0, "action": [[]]}
    with pytest.raises(FormatError):
        algebra_from_json(bad)


def test_rep_roundtrip():
    g = sl2_trivial(2)
    q = Rep(g.even, 3, tuple(g.even.ad(i) for i in range(3)))
    assert rep_from_json(rep_to_json(q), g.even) == q


def test_module_map_complex_roundtrips():
    mods = corpus_modules()
    for name in ("grassmann2_mixed", "sl2_triv2_natural", "sl2_adjoint_free"):
        v = mods[name].module
        assert module_from_json(module_to_json(v)) == v
        l = L_of(v)
        assert complex_from_json(complex_to_json(l)) == l
    for e in corpus_morphisms().values():
        assert map_from_json(map_to_json(e.map)) == e.map


def test_module_json_is_plain_data():
    v = corpus_modules()["grassmann2_free"].module
    # the schema survives a JSON text roundtrip unchanged
    j = module_to_json(v)
    assert json.loads(json.dumps(j)) == j
    assert set(j) == {"algebra", "lo", "hi", "dims", "rho0", "odd"}


def test_module_rejects_bad_window():
    v = corpus_modules()["grassmann2_free"].module
    j = module_to_json(v)
    j["dims"] = j["dims"][:-1]
    with pytest.raises(FormatError):
        module_from_json(j)
