import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superstable.corpus import corpus_modules, random_module
from superstable.gradedmod import ModuleError, identity_map, make_module
from superstable.linalg import Matrix
from superstable.rigid import (
    CohomologyTable,
    L_of,
    OddPoint,
    V_of,
    fiber,
    fiber_cohomology,
    make_complex,
    map_on_complexes,
)


def test_roundtrip_on_corpus():
    for e in corpus_modules().values():
        v = e.module
        assert V_of(L_of(v)) == v
        l = L_of(v)
        assert L_of(V_of(l)) == l


@given(st.integers(0, 499))
@settings(max_examples=30, deadline=None)
def test_roundtrip_on_random_modules(seed):
    v = random_module(seed)
    assert V_of(L_of(v)) == v


def test_differential_signs():
    v = corpus_modules()["grassmann2_free"].module
    l = L_of(v)
    for j in v.degrees():
        for e in range(v.alg.dim1):
            expected = v.odd_at(j, e).scale(-1 if j % 2 else 1)
            assert l.diff_at(j, e) == expected


def test_composability_is_anticommutation():
    # a family violating anticommutation is rejected by the complex
    # validator for exactly the composability reason
    from superstable.algebra import grassmann

    g = grassmann(2)
    d1 = Matrix.from_rows([[1], [0]])
    d2 = Matrix.from_rows([[0], [1]])
    t1 = Matrix.from_rows([[0, 1]])
    t2 = Matrix.from_rows([[1, 0]])
    with pytest.raises(ModuleError, match="composability"):
        make_complex(
            g, 0, 2, (1, 2, 1), ((), (), ()), ((d1, d2), (t1, t2), (Matrix.zero(0, 1),) * 2)
        )


def test_fiber_and_cohomology_of_free_module():
    v = corpus_modules()["grassmann2_free"].module
    l = L_of(v)
    f = fiber(l, OddPoint((1, 2)))
    table = fiber_cohomology(f)
    assert table.total == 0  # free modules have exact fibers


def test_fiber_of_trivial_module():
    v = corpus_modules()["grassmann1_trivial"].module
    table = fiber_cohomology(fiber(L_of(v), OddPoint((5,))))
    assert table.as_dict() == {0: 1}


def test_fiber_point_dimension_mismatch():
    v = corpus_modules()["grassmann2_free"].module
    with pytest.raises(ValueError):
        fiber(L_of(v), OddPoint((1,)))


def test_odd_point_rejects_zero():
    with pytest.raises(ValueError):
        OddPoint((0, 0))


def test_map_on_complexes_functorial():
    v = corpus_modules()["sl2_triv2_mixed"].module
    phi = identity_map(v)
    assert map_on_complexes(phi, L_of(v), L_of(v))


def test_cohomology_table_validation():
    with pytest.raises(ValueError):
        CohomologyTable.from_dict({0: -1})
    t = CohomologyTable.from_dict({2: 1, 0: 3})
    assert t.entries == ((0, 3), (2, 1))
    assert t.total == 4 and t.dim(2) == 1 and t.dim(5) == 0
