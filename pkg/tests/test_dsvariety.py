from fractions import Fraction

import pytest

from superstable.corpus import corpus_modules
from superstable.dsvariety import (
    ds_at,
    in_variety,
    random_points,
    support_check,
    symbolic_x_matrix,
    variety_ideal,
    x_operator,
)
from superstable.linalg import Matrix
from superstable.rigid import OddPoint


def test_x_operator_squares_to_zero():
    for e in corpus_modules().values():
        v = e.module
        for x in random_points(v.alg.dim1, 5, seed=17):
            xm = x_operator(v, x)
            assert (xm * xm).is_zero()


def test_ds_dims_free_module_oracle():
    # grassmann(1) free module at t = 1: x_M = [[0,0],[1,0]], rank 1,
    # so the fiber vanishes (worked by hand)
    v = corpus_modules()["grassmann1_free"].module
    res = ds_at(v, OddPoint((1,)))
    assert (res.total_dim, res.rank_x, res.ds_dim) == (2, 1, 0)
    assert not in_variety(v, OddPoint((1,)))


def test_ds_dims_trivial_module_oracle():
    v = corpus_modules()["grassmann1_trivial"].module
    res = ds_at(v, OddPoint((3,)))
    assert (res.total_dim, res.rank_x, res.ds_dim) == (1, 0, 1)
    assert in_variety(v, OddPoint((3,)))


def test_ds_scale_invariance():
    v = corpus_modules()["sl2_triv2_mixed"].module
    for x in random_points(2, 10, seed=5):
        assert ds_at(v, x).ds_dim == ds_at(v, x.scale(Fraction(7, 3))).ds_dim


def test_symbolic_matrix_specializes_to_x_operator():
    v = corpus_modules()["sl2_triv2_free"].module
    sym = symbolic_x_matrix(v)
    for x in random_points(2, 5, seed=23):
        xm = x_operator(v, x)
        for r in range(v.total_dim):
            for c in range(v.total_dim):
                assert sym[r][c].eval(x.coords) == xm.data[r][c]


def test_variety_ideal_vs_rank_test():
    for name in ("grassmann2_mixed", "sl2_triv1_mixed", "sl2_triv2_free"):
        v = corpus_modules()[name].module
        ideal = variety_ideal(v)
        for x in random_points(v.alg.dim1, 30, seed=41):
            assert ideal.vanishes_at(x.coords) == in_variety(v, x), (name, x)


def test_variety_ideal_generators_monic_and_unique():
    v = corpus_modules()["grassmann2_mixed"].module
    ideal = variety_ideal(v)
    assert len(set(ideal.generators)) == len(ideal.generators)
    for g in ideal.generators:
        assert g.sorted_terms()[0][1] == 1


def test_variety_ideal_cap():
    v = corpus_modules()["sl2_adjoint_natural"].module
    with pytest.raises(ValueError, match="cap"):
        variety_ideal(v, max_dim=12)


def test_random_points_reproducible_and_nonzero():
    a = random_points(3, 10, seed=9)
    b = random_points(3, 10, seed=9)
    assert a == b
    assert all(any(c != 0 for c in p.coords) for p in a)
    assert random_points(3, 10, seed=10) != a


def test_support_check_consistency():
    for e in corpus_modules().values():
        v = e.module
        pts = random_points(v.alg.dim1, 10, seed=31)
        assert support_check(v, pts).ok
