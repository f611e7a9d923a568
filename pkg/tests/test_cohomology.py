from math import comb

import pytest

from superstable.algebra import SL2_NATURAL, grassmann, sl2, sl2_trivial
from superstable.cohomology import (
    cech_closed_form,
    cech_line_bundle,
    chevalley_eilenberg,
    ext_twisted,
    koszul_odd,
    nonfullness_ext,
    sym_power,
)
from superstable.corpus import corpus_modules, nonfullness_witness
from superstable.gradedmod import Rep


def test_cech_against_closed_form_full_sweep():
    for r in (1, 2, 3):
        for d in range(-8, 9):
            assert (
                cech_line_bundle(r, d).as_dict() == cech_closed_form(r, d).as_dict()
            ), (r, d)


def test_cech_specific_values():
    assert cech_line_bundle(1, -2).as_dict() == {0: 0, 1: 1}
    assert cech_line_bundle(2, 3).dim(0) == comb(5, 2)
    assert cech_line_bundle(3, -7).dim(3) == comb(6, 3)
    assert cech_line_bundle(2, -2).as_dict() == {0: 0, 1: 0, 2: 0}


def test_cech_rejects_bad_dimension():
    with pytest.raises(ValueError):
        cech_line_bundle(0, 1)


def test_ext_entries_only_bottom_and_top():
    for r in (1, 2, 3):
        for i in range(-4, 5):
            for j in range(-4, 5):
                desc = ext_twisted(i, j, r)
                for e in desc.entries:
                    assert e.cohom_degree in (0, r)
                    assert e.dim > 0


def test_ext_symmetric_degrees():
    d = ext_twisted(0, 3, 2)
    (bottom,) = d.entries
    assert bottom.cohom_degree == 0 and bottom.sym_degree == 3
    assert not bottom.top_twist_present
    d = ext_twisted(4, 0, 3)  # difference -4 = -(r+1): top contribution
    (top,) = d.entries
    assert top.cohom_degree == 3 and top.sym_degree == 0 and top.top_twist_present
    assert top.dim == 1


def test_ext_top_iff_condition():
    # a contribution in cohomological degree i-m-1 exists iff i-m = r+1
    for r in (1, 2, 3):
        for gap in range(1, 9):
            desc = ext_twisted(gap, 0, r)
            ent = desc.entry_at(gap - 1)
            assert (ent is not None and ent.dim > 0) == (gap == r + 1), (r, gap)


def test_ce_sl2_trivial_paper_values():
    g0 = sl2()
    table = chevalley_eilenberg(g0, Rep.trivial(g0, 1))
    assert table.as_dict() == {0: 1, 1: 0, 2: 0, 3: 1}


def test_ce_sl2_nontrivial_irreducibles_vanish():
    g0 = sl2()
    nat = Rep(g0, 2, tuple(SL2_NATURAL))
    assert chevalley_eilenberg(g0, nat).total == 0
    adj = Rep(g0, 3, tuple(g0.ad(i) for i in range(3)))
    assert chevalley_eilenberg(g0, adj).total == 0


def test_ce_abelian_one_dimensional():
    from superstable.algebra import LieAlgebraEven
    from superstable.linalg import Matrix

    ab = LieAlgebraEven.from_constants(1, [[[0]]])
    t = chevalley_eilenberg(ab, Rep(ab, 1, (Matrix.zero(1, 1),)))
    assert t.as_dict() == {0: 1, 1: 1}


def test_sym_power_dims_and_validity():
    g0 = sl2()
    nat = Rep(g0, 2, tuple(SL2_NATURAL))
    for m in range(5):
        s = sym_power(nat, m)
        s.check()
        assert s.dim == m + 1
    # S^2(natural) is the adjoint: same Casimir-free invariant count
    assert chevalley_eilenberg(g0, sym_power(nat, 2)).total == 0


def test_koszul_trivial_line_all_ones():
    v = corpus_modules()["grassmann1_trivial"].module
    assert koszul_odd(v, 8).as_dict() == {p: 1 for p in range(8)}


def test_koszul_free_rank_one():
    v = corpus_modules()["grassmann1_free"].module
    table = koszul_odd(v, 8).as_dict()
    assert table[0] == 1
    assert all(table[p] == 0 for p in range(1, 8))
    v2 = corpus_modules()["grassmann2_free"].module
    table2 = koszul_odd(v2, 6).as_dict()
    assert table2[0] == 1 and all(table2[p] == 0 for p in range(1, 6))


def test_nonfullness_witness_value():
    w = nonfullness_witness()
    assert (
        nonfullness_ext(w["algebra"], w["v"], w["w"], w["i"], w["j"])
        == w["expected_dim"]
    )


def test_nonfullness_vanishing_cases():
    alg = sl2_trivial(1)
    k = Rep.trivial(alg.even, 1)
    # below the window: m < 0
    assert nonfullness_ext(alg, k, k, 0, 0) == 0
    assert nonfullness_ext(alg, k, k, 1, 0) == 0
    # p = 2: H^2(sl2, trivial coefficients) = 0
    assert nonfullness_ext(alg, k, k, 2, 0) == 0
    # p beyond dim g0
    assert nonfullness_ext(alg, k, k, 5, 0) == 0
