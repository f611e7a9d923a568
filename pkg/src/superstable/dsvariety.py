"""Duflo-Serganova fibers and the projective associated variety.

M_x = Ker x_M / Im x_M for the square-zero operator x_M; the variety is
the rank-deficiency locus, cut out by the minors of the symbolic matrix
x_M(t) with entries linear in the odd coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil

from .gradedmod import GradedModule
from .linalg import Matrix, Polynomial
from .rigid import CohomologyTable, L_of, OddPoint, fiber, fiber_cohomology


@dataclass(frozen=True)
class PolyIdeal:
    nvars: int
    generators: tuple

    def vanishes_at(self, point) -> bool:
        return all(g.eval(point) == 0 for g in self.generators)


@dataclass(frozen=True)
class DsResult:
    point: OddPoint
    total_dim: int
    rank_x: int
    ds_dim: int
    per_degree: CohomologyTable

    def __post_init__(self):
        assert self.ds_dim == self.total_dim - 2 * self.rank_x
        assert self.ds_dim == self.per_degree.total


def x_operator(m: GradedModule, x: OddPoint) -> Matrix:
    """The ungraded square-zero operator x_M on the total space."""
    if len(x.coords) != m.alg.dim1:
        raise ValueError("point dimension does not match the odd part")
    n = m.total_dim
    out = Matrix.zero(n, n)
    for e, c in enumerate(x.coords):
        if c != 0:
            out = out + m.total_odd(e).scale(c)
    return out


def ds_at(m: GradedModule, x: OddPoint) -> DsResult:
    """Dimensions of the DS fiber M_x, with its grading refinement."""
    xm = x_operator(m, x)
    if not (xm * xm).is_zero():
        raise ValueError("x_M does not square to zero")
    r = xm.rank()
    per = fiber_cohomology(fiber(L_of(m), x))
    return DsResult(x, m.total_dim, r, m.total_dim - 2 * r, per)


def in_variety(m: GradedModule, x: OddPoint) -> bool:
    """True iff rank x_M < dim M / 2, equivalently the DS fiber is nonzero."""
    return ds_at(m, x).ds_dim > 0


def symbolic_x_matrix(m: GradedModule) -> list:
    """x_M(t) as a total-space matrix of linear forms in t_1..t_n."""
    n1 = m.alg.dim1
    n = m.total_dim
    rows = [[Polynomial(n1) for _ in range(n)] for _ in range(n)]
    for e in range(n1):
        te = Polynomial.variable(n1, e)
        tot = m.total_odd(e)
        for r in range(n):
            for c in range(n):
                if tot.data[r][c] != 0:
                    rows[r][c] = rows[r][c] + te.scale(tot.data[r][c])
    return rows


def _poly_det(entries, rows, cols) -> Polynomial:
    """Determinant by cofactor expansion along the sparsest row."""
    nvars = entries[0][0].nvars if entries else 0
    k = len(rows)
    if k == 0:
        return Polynomial.constant(nvars, 1)
    if k == 1:
        return entries[rows[0]][cols[0]]
    # pick the row with the fewest nonzero entries
    best, best_nz = None, None
    for ri, r in enumerate(rows):
        nz = sum(1 for c in cols if not entries[r][c].is_zero())
        if best_nz is None or nz < best_nz:
            best, best_nz = ri, nz
            if nz == 0:
                return Polynomial(entries[r][cols[0]].nvars)
    r = rows[best]
    sub_rows = rows[:best] + rows[best + 1 :]
    total = Polynomial(entries[r][cols[0]].nvars)
    for ci, c in enumerate(cols):
        p = entries[r][c]
        if p.is_zero():
            continue
        sub = _poly_det(entries, sub_rows, cols[:ci] + cols[ci + 1 :])
        term = p * sub
        if (best + ci) % 2:
            term = -term
        total = total + term
    return total


def variety_ideal(m: GradedModule, max_dim: int | None = None) -> PolyIdeal:
    """Determinantal ideal of the associated variety.

    Generators are all minors of size ceil(dim M / 2) of x_M(t); a point
    lies in the variety iff every generator vanishes there.  Minor
    enumeration is combinatorial, so the caller may cap the feasible
    total dimension via max_dim.
    """
    n1 = m.alg.dim1
    d = m.total_dim
    if max_dim is not None and d > max_dim:
        raise ValueError(
            f"total dimension {d} exceeds the minor-enumeration cap {max_dim}; "
            "use the sampling test instead"
        )
    size = ceil(Fraction(d, 2))
    entries = symbolic_x_matrix(m)
    if size == 0:
        return PolyIdeal(n1, ())
    # rows/columns that are identically zero can never be in a nonzero minor
    live_rows = [r for r in range(d) if any(not p.is_zero() for p in entries[r])]
    live_cols = [c for c in range(d) if any(not entries[r][c].is_zero() for r in range(d))]
    gens = []
    seen = set()
    if len(live_rows) >= size and len(live_cols) >= size:
        for rows in combinations(live_rows, size):
            for cols in combinations(live_cols, size):
                p = _poly_det(entries, list(rows), list(cols))
                if p.is_zero():
                    continue
                p = p.monic()
                if p not in seen:
                    seen.add(p)
                    gens.append(p)
    return PolyIdeal(n1, tuple(gens))


def random_points(dim1: int, count: int, seed: int) -> list:
    """Reproducible sample of points with integer coordinates in [-9, 9]."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coords = tuple(rng.randint(-9, 9) for _ in range(dim1))
        if any(c != 0 for c in coords):
            out.append(OddPoint(coords))
    return out


@dataclass(frozen=True)
class SupportCheckEntry:
    point: OddPoint
    fiber_total: int
    ds_dim: int
    in_variety: bool

    @property
    def consistent(self) -> bool:
        ok = self.fiber_total == self.ds_dim
        if self.fiber_total != 0:
            ok = ok and self.in_variety
        return ok


@dataclass(frozen=True)
class SupportCheckReport:
    entries: tuple

    @property
    def ok(self) -> bool:
        return all(e.consistent for e in self.entries)


def support_check(m: GradedModule, samples) -> SupportCheckReport:
    """Fiberwise comparison of rigid-complex cohomology with the DS fiber.

    For each sample: total fiber cohomology must equal ds_dim, and a
    nonzero fiber must certify variety membership.
    """
    lm = L_of(m)
    entries = []
    for x in samples:
        total = fiber_cohomology(fiber(lm, x)).total
        res = ds_at(m, x)
        entries.append(SupportCheckEntry(x, total, res.ds_dim, res.ds_dim > 0))
    return SupportCheckReport(tuple(entries))
