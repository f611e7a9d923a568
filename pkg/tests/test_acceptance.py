"""The acceptance suite: one test and one printed pass/fail line per
criterion.  Run with ``pytest -s tests/test_acceptance.py`` to see the
lines as they complete."""

import time

from superstable.algebra import sl2, validate
from superstable.cohomology import (
    cech_closed_form,
    cech_line_bundle,
    chevalley_eilenberg,
    ext_twisted,
    koszul_odd,
    nonfullness_ext,
)
from superstable.corpus import (
    corpus_modules,
    corpus_morphisms,
    corpus_reps,
    nonfullness_witness,
    random_modules,
)
from superstable.dsvariety import ds_at, in_variety, random_points, variety_ideal
from superstable.gradedmod import Rep, zero_map
from superstable.projstable import (
    decompose,
    frobenius_check,
    is_projective,
    stable_equal,
)
from superstable.rigid import L_of, V_of, fiber, fiber_cohomology

_T0 = time.monotonic()


def _verdict(num, desc, ok):
    print(f"\ncriterion {num:2d} [{desc}]: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({desc}) failed"


def test_criterion_01_roundtrip_exactness():
    t0 = time.monotonic()
    ok = True
    for e in corpus_modules().values():
        v = e.module
        ok = ok and V_of(L_of(v)) == v and L_of(V_of(L_of(v))) == L_of(v)
    for v in random_modules(20, seed=2024):
        ok = ok and V_of(L_of(v)) == v
    ok = ok and (time.monotonic() - t0) < 10
    _verdict(1, "roundtrip exactness", ok)


def test_criterion_02_projective_acyclicity():
    t0 = time.monotonic()
    ok = True
    for e in corpus_modules().values():
        if not e.induced:
            continue
        l = L_of(e.module)
        for x in random_points(e.module.alg.dim1, 25, seed=501):
            table = fiber_cohomology(fiber(l, x))
            ok = ok and table.total == 0 and all(d == 0 for _, d in table.entries)
            ok = ok and not in_variety(e.module, x)
    ok = ok and (time.monotonic() - t0) < 10
    _verdict(2, "projective fibers acyclic, variety empty", ok)


def test_criterion_03_ds_fiber_consistency():
    ok = True
    for e in corpus_modules().values():
        v = e.module
        l = L_of(v)
        for x in random_points(v.alg.dim1, 25, seed=777):
            res = ds_at(v, x)
            graded = fiber_cohomology(fiber(l, x))
            ok = ok and res.ds_dim == graded.total
            ok = ok and res.ds_dim == v.total_dim - 2 * res.rank_x
    _verdict(3, "ds dimension equals summed fiber cohomology", ok)


def test_criterion_04_determinantal_variety():
    ok = True
    for e in corpus_modules().values():
        v = e.module
        if v.total_dim > 12:
            continue
        ideal = variety_ideal(v, max_dim=12)
        for x in random_points(v.alg.dim1, 50, seed=909):
            ok = ok and ideal.vanishes_at(x.coords) == in_variety(v, x)
    _verdict(4, "ideal vanishing iff rank deficiency", ok)


def test_criterion_05_cech_and_twisted_ext():
    t0 = time.monotonic()
    ok = True
    for r in (1, 2, 3):
        for d in range(-8, 9):
            ok = ok and cech_line_bundle(r, d).as_dict() == cech_closed_form(r, d).as_dict()
    for r in (1, 2, 3):
        for i in range(-3, 4):
            for j in range(-3, 4):
                for entry in ext_twisted(i, j, r).entries:
                    ok = ok and entry.cohom_degree in (0, r)
        for gap in range(1, 9):
            ent = ext_twisted(gap, 0, r).entry_at(gap - 1)
            ok = ok and ((ent is not None and ent.dim > 0) == (gap == r + 1))
    ok = ok and (time.monotonic() - t0) < 5
    _verdict(5, "Cech agreement and twisted-ext support", ok)


def test_criterion_06_sl2_witness():
    g0 = sl2()
    table = chevalley_eilenberg(g0, Rep.trivial(g0, 1))
    ok = table.as_dict() == {0: 1, 1: 0, 2: 0, 3: 1}
    w = nonfullness_witness()
    ok = ok and nonfullness_ext(w["algebra"], w["v"], w["w"], w["i"], w["j"]) == 1
    _verdict(6, "sl2 cohomology and nonvanishing obstruction", ok)


def test_criterion_07_decomposition_and_frobenius():
    ok = True
    for name, e in corpus_modules().items():
        dec = decompose(e.module)
        n = e.module.alg.dim1
        m_dim = dec.reduced_part.total_dim
        ok = ok and e.module.total_dim == (2**n) * dec.q_dim + m_dim
        from superstable.projstable import top_operator

        if m_dim:
            ok = ok and top_operator(dec.reduced_part).is_zero()
        ok = ok and validate(dec.induced_part.alg).ok and validate(dec.reduced_part.alg).ok
        ok = ok and (is_projective(e.module) == (m_dim == 0))
    for e in corpus_reps().values():
        ok = ok and frobenius_check(e.alg, e.rep)
    _verdict(7, "induced/reduced decomposition and frobenius", ok)


def test_criterion_08_faithfulness():
    ok = True
    not_stably_zero_with_reduced_target = 0
    for name, e in corpus_morphisms().items():
        z = zero_map(e.map.source, e.map.target)
        got = stable_equal(e.map, z)
        ok = ok and got == e.stably_zero
        if not e.stably_zero and name != "grassmann1_trivial_id":
            t = e.map.target
            from superstable.projstable import is_reduced

            if is_reduced(t):
                x = random_points(t.alg.dim1, 1, seed=61)[0]
                if ds_at(t, x).ds_dim > 0:
                    not_stably_zero_with_reduced_target += 1
    ok = ok and not_stably_zero_with_reduced_target >= 3
    _verdict(8, "stable equality faithful at desk scale", ok)


def test_criterion_09_koszul_sanity():
    t0 = time.monotonic()
    mods = corpus_modules()
    line = koszul_odd(mods["grassmann1_trivial"].module, 8).as_dict()
    ok = line == {p: 1 for p in range(8)}
    free = koszul_odd(mods["grassmann1_free"].module, 8).as_dict()
    ok = ok and free[0] == 1 and all(free[p] == 0 for p in range(1, 8))
    ok = ok and (time.monotonic() - t0) < 5
    _verdict(9, "Koszul cohomology sanity", ok)


def test_criterion_10_runtime_budget():
    elapsed = time.monotonic() - _T0
    ok = elapsed < 120
    print(f"\nacceptance suite elapsed: {elapsed:.1f}s")
    _verdict(10, "full-suite runtime budget", ok)
