"""Lie superalgebras g = g0 + g1 with vanishing odd bracket.

The even part is given by structure constants, the odd part by the
g0-action matrices.  A nonzero odd bracket can be supplied separately
for the diagnostic self-commuting-cone computation only; the main
pipeline always assumes [g1, g1] = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Matrix, Polynomial, scalar


@dataclass(frozen=True)
class LieAlgebraEven:
    """Even part: basis x_1..x_dim0 with [x_i, x_j] = sum_k c[i][j][k] x_k."""

    dim0: int
    bracket: tuple  # c[i][j] is a tuple of dim0 Fractions

    @staticmethod
    def from_constants(dim0: int, c) -> "LieAlgebraEven":
        c = tuple(
            tuple(tuple(scalar(x) for x in c[i][j]) for j in range(dim0)) for i in range(dim0)
        )
        return LieAlgebraEven(dim0, c)

    def bracket_coeffs(self, i: int, j: int):
        return self.bracket[i][j]

    def ad(self, i: int) -> Matrix:
        """Matrix of ad x_i: column j holds the coefficients of [x_i, x_j]."""
        return Matrix(
            self.dim0,
            self.dim0,
            [[self.bracket[i][j][k] for j in range(self.dim0)] for k in range(self.dim0)],
        )


@dataclass(frozen=True)
class OddPart:
    """Odd part: dim1-dimensional g0-module, [x_i, e_j] = sum_k A_i[k][j] e_k."""

    dim1: int
    action: tuple  # one dim1 x dim1 Matrix per even basis index


@dataclass(frozen=True)
class SuperAlgebra:
    even: LieAlgebraEven
    odd: OddPart
    name: str = ""

    @property
    def dim0(self) -> int:
        return self.even.dim0

    @property
    def dim1(self) -> int:
        return self.odd.dim1

    def __eq__(self, other):
        return (
            isinstance(other, SuperAlgebra)
            and self.even == other.even
            and self.odd == other.odd
        )

    def __hash__(self):
        return hash((self.even, self.odd))


@dataclass(frozen=True)
class OddBracketForm:
    """Diagnostic symmetric odd bracket [e_j, e_k] = sum_i B[j][k][i] x_i."""

    dim1: int
    dim0: int
    coeffs: tuple  # coeffs[j][k] is a tuple of dim0 Fractions

    @staticmethod
    def from_constants(dim1: int, dim0: int, b) -> "OddBracketForm":
        b = tuple(
            tuple(tuple(scalar(x) for x in b[j][k]) for k in range(dim1)) for j in range(dim1)
        )
        return OddBracketForm(dim1, dim0, b)


@dataclass
class ValidationReport:
    antisymmetry: bool = True
    jacobi: bool = True
    representation: bool = True
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.antisymmetry and self.jacobi and self.representation

    def as_dict(self):
        return {
            "antisymmetry": self.antisymmetry,
            "jacobi": self.jacobi,
            "representation": self.representation,
            "failures": self.failures,
            "ok": self.ok,
        }


def validate(g: SuperAlgebra) -> ValidationReport:
    """Check antisymmetry, Jacobi, and the g0-representation property on g1.

    Failures are data in the report; the first offending index triple of
    each kind is recorded.
    """
    rep = ValidationReport()
    ev = g.even
    n0 = ev.dim0
    for i in range(n0):
        for j in range(n0):
            if any(
                ev.bracket[i][j][k] != -ev.bracket[j][i][k] for k in range(n0)
            ):
                rep.antisymmetry = False
                rep.failures.append(("antisymmetry", (i, j)))
                break
        if not rep.antisymmetry:
            break
    for i in range(n0):
        broke = False
        for j in range(n0):
            for l in range(n0):
                # [[x_i,x_j],x_l] + [[x_j,x_l],x_i] + [[x_l,x_i],x_j] = 0
                total = [Fraction(0)] * n0
                for m in range(n0):
                    cij = ev.bracket[i][j][m]
                    cjl = ev.bracket[j][l][m]
                    cli = ev.bracket[l][i][m]
                    for k in range(n0):
                        total[k] += (
                            cij * ev.bracket[m][l][k]
                            + cjl * ev.bracket[m][i][k]
                            + cli * ev.bracket[m][j][k]
                        )
                if any(x != 0 for x in total):
                    rep.jacobi = False
                    rep.failures.append(("jacobi", (i, j, l)))
                    broke = True
                    break
            if broke:
                break
        if broke:
            break
    acts = g.odd.action
    for i in range(n0):
        broke = False
        for j in range(n0):
            comm = acts[i] * acts[j] - acts[j] * acts[i]
            lhs = Matrix.zero(g.dim1, g.dim1)
            for k in range(n0):
                c = ev.bracket[i][j][k]
                if c != 0:
                    lhs = lhs + acts[k].scale(c)
            if lhs != comm:
                rep.representation = False
                rep.failures.append(("representation", (i, j)))
                broke = True
                break
        if broke:
            break
    return rep


def killing_form(g0: LieAlgebraEven) -> Matrix:
    """K[i][j] = trace(ad x_i . ad x_j), exact."""
    ads = [g0.ad(i) for i in range(g0.dim0)]
    return Matrix(
        g0.dim0,
        g0.dim0,
        [[(ads[i] * ads[j]).trace() for j in range(g0.dim0)] for i in range(g0.dim0)],
    )


def is_semisimple(g0: LieAlgebraEven) -> bool:
    """Cartan's criterion over the rationals; dim0 = 0 counts as semisimple."""
    if g0.dim0 == 0:
        return True
    return killing_form(g0).det() != 0


def cone_equations(dim1: int, b: OddBracketForm | None) -> "PolyIdeal":
    """Quadratic generators of the self-commuting cone [x, x] = 0.

    For x = sum t_j e_j the i-th generator is sum_{j,k} B[j][k][i] t_j t_k.
    With b absent the cone is all of P(g1) and the ideal is empty.
    """
    from .dsvariety import PolyIdeal

    if b is None:
        return PolyIdeal(dim1, ())
    if b.dim1 != dim1:
        raise ValueError("odd bracket dimension mismatch")
    for j in range(dim1):
        for k in range(dim1):
            if b.coeffs[j][k] != b.coeffs[k][j]:
                raise ValueError("odd bracket form must be symmetric")
    gens = []
    for i in range(b.dim0):
        terms = {}
        for j in range(dim1):
            for k in range(dim1):
                c = b.coeffs[j][k][i]
                if c == 0:
                    continue
                e = [0] * dim1
                e[j] += 1
                e[k] += 1
                e = tuple(e)
                terms[e] = terms.get(e, Fraction(0)) + c
        p = Polynomial(dim1, terms)
        if not p.is_zero():
            gens.append(p)
    return PolyIdeal(dim1, tuple(gens))


# ---------------------------------------------------------------------------
# built-in algebras

# sl(2) in the basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h
_SL2_BRACKET = [
    # [e, *]:      e        h        f
    [[0, 0, 0], [-2, 0, 0], [0, 1, 0]],
    # [h, *]
    [[2, 0, 0], [0, 0, 0], [0, 0, -2]],
    # [f, *]
    [[0, -1, 0], [0, 0, 2], [0, 0, 0]],
]

SL2_NATURAL = [
    Matrix.from_rows([[0, 1], [0, 0]]),   # e
    Matrix.from_rows([[1, 0], [0, -1]]),  # h
    Matrix.from_rows([[0, 0], [1, 0]]),   # f
]


def sl2() -> LieAlgebraEven:
    return LieAlgebraEven.from_constants(3, _SL2_BRACKET)


def grassmann(n: int) -> SuperAlgebra:
    """g0 = 0, g1 = k^n: the exterior-algebra baseline."""
    return SuperAlgebra(
        LieAlgebraEven.from_constants(0, []), OddPart(n, ()), name=f"grassmann({n})"
    )


def sl2_trivial(n: int) -> SuperAlgebra:
    """g0 = sl2 acting trivially on an n-dimensional odd part."""
    return SuperAlgebra(
        sl2(), OddPart(n, tuple(Matrix.zero(n, n) for _ in range(3))), name=f"sl2_trivial({n})"
    )


def sl2_adjoint() -> SuperAlgebra:
    """g0 = sl2 with g1 the adjoint representation."""
    g0 = sl2()
    return SuperAlgebra(g0, OddPart(3, tuple(g0.ad(i) for i in range(3))), name="sl2_adjoint")


def sl2_natural_sum(m: int) -> SuperAlgebra:
    """g0 = sl2 with g1 a direct sum of m copies of the natural module."""
    acts = tuple(Matrix.block_diag([SL2_NATURAL[i]] * m) for i in range(3))
    return SuperAlgebra(sl2(), OddPart(2 * m, acts), name=f"sl2_natural_sum({m})")


BUILTIN_ALGEBRAS = {
    "grassmann": grassmann,
    "sl2_trivial": sl2_trivial,
    "sl2_adjoint": sl2_adjoint,
    "sl2_natural_sum": sl2_natural_sum,
}


def builtin_algebra(spec: str) -> SuperAlgebra:
    """Parse names like "grassmann(2)", "sl2_adjoint"."""
    spec = spec.strip()
    if "(" in spec:
        name, rest = spec.split("(", 1)
        arg = int(rest.rstrip(")"))
        fn = BUILTIN_ALGEBRAS.get(name.strip())
        if fn is None:
            raise KeyError(f"unknown builtin algebra {name!r}")
        return fn(arg)
    fn = BUILTIN_ALGEBRAS.get(spec)
    if fn is None:
        raise KeyError(f"unknown builtin algebra {spec!r}")
    return fn()
