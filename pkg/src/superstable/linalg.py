"""Dense exact linear algebra over arbitrary-precision rationals.

Everything downstream (module validation, rank tests, lifting solvers)
is a client of this module.  All arithmetic uses ``fractions.Fraction``,
so no operation ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _iproduct


Scalar = Fraction


def scalar(x) -> Fraction:
    """Coerce ints, strings like "3/4", and Fractions to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact scalar from {x!r}")


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        data = [[scalar(x) for x in row] for row in data]
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"shape mismatch: expected {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_rows(data) -> "Matrix":
        data = list(data)
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return Matrix(rows, cols, data)

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def column(entries) -> "Matrix":
        entries = list(entries)
        return Matrix(len(entries), 1, [[x] for x in entries])

    @staticmethod
    def diag(entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        return Matrix(n, n, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    # -- basics ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.data})"

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def copy_data(self):
        return [row[:] for row in self.data]

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in addition")
        return Matrix(
            self.rows,
            self.cols,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = scalar(c)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        ot = other.data
        out = []
        for row in self.data:
            acc = [Fraction(0)] * other.cols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                ok = ot[k]
                for j in range(other.cols):
                    if ok[j] != 0:
                        acc[j] += a * ok[j]
            out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [list(col) for col in zip(*self.data)] if self.rows and self.cols else [[] for _ in range(self.cols)])

    def col(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return Matrix(self.rows, self.cols + other.cols, [r1 + r2 for r1, r2 in zip(self.data, other.data)])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch in vstack")
        return Matrix(self.rows + other.rows, self.cols, self.copy_data() + other.copy_data())

    @staticmethod
    def block_diag(blocks) -> "Matrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0 : c0 + b.cols] = b.data[i][:]
            r0 += b.rows
            c0 += b.cols
        return Matrix(rows, cols, out)

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix(
            len(row_idx), len(col_idx), [[self.data[i][j] for j in col_idx] for i in row_idx]
        )

    # -- elimination -------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (rref matrix, pivot column list)."""
        m = self.copy_data()
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            p = m[r][c]
            if p != 1:
                m[r] = [x / p for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    mi, mr = m[i], m[r]
                    for j in range(c, cols):
                        if mr[j] != 0:
                            mi[j] -= f * mr[j]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Matrix(rows, cols, m), pivots

    def rank(self) -> int:
        """Rank over the rationals, computed exactly."""
        return len(self.rref()[1])

    def nullspace(self) -> "Matrix":
        """Columns form a basis of the right kernel; cols - rank columns.

        Deterministic: for each free column the basis vector has that
        coordinate 1 and the other free coordinates 0.
        """
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        out = [[Fraction(0)] * len(free) for _ in range(self.cols)]
        for k, fc in enumerate(free):
            out[fc][k] = Fraction(1)
            for r, pc in enumerate(pivots):
                out[pc][k] = -red.data[r][fc]
        return Matrix(self.cols, len(free), out)

    def solve_affine(self, b):
        """Some x with self*x = b, or None if inconsistent.

        Deterministic particular solution: free variables set to 0 after
        reduced row-echelon reduction.
        """
        b = [scalar(x) for x in b]
        if len(b) != self.rows:
            raise ValueError("dimension mismatch in solve_affine")
        aug = Matrix(self.rows, self.cols + 1, [row + [bb] for row, bb in zip(self.data, b)])
        red, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x = [Fraction(0)] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.cols]
        return x

    def solve_matrix(self, b: "Matrix"):
        """X with self*X = b (free variables zero), or None if inconsistent."""
        cols = []
        for j in range(b.cols):
            x = self.solve_affine(b.col(j))
            if x is None:
                return None
            cols.append(x)
        if not cols:
            return Matrix(self.cols, 0, [[] for _ in range(self.cols)])
        return Matrix(self.cols, b.cols, [list(r) for r in zip(*cols)])

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = self.copy_data()
        n = self.rows
        d = Fraction(1)
        for c in range(n):
            pr = None
            for i in range(c, n):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                return Fraction(0)
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                d = -d
            d *= m[c][c]
            p = m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / p
                    for j in range(c, n):
                        m[i][j] -= f * m[c][j]
        return d

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), Fraction(0))


def rank(m: Matrix) -> int:
    return m.rank()


def nullspace(m: Matrix) -> Matrix:
    return m.nullspace()


def solve_affine(a: Matrix, b):
    return a.solve_affine(b)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with (i_a, i_b) lexicographic index convention."""
    out = [[Fraction(0)] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for ia in range(a.rows):
        for ja in range(a.cols):
            x = a.data[ia][ja]
            if x == 0:
                continue
            for ib in range(b.rows):
                brow = b.data[ib]
                orow = out[ia * b.rows + ib]
                for jb in range(b.cols):
                    if brow[jb] != 0:
                        orow[ja * b.cols + jb] = x * brow[jb]
    return Matrix(a.rows * b.rows, a.cols * b.cols, out)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Multivariate polynomial: map exponent-vector -> nonzero Fraction.

    Term order for printing is graded lexicographic; semantics do not
    depend on it.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError("exponent vector of wrong length")
            c = scalar(c)
            if c != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c != 0}

    @staticmethod
    def constant(nvars: int, c) -> "Polynomial":
        return Polynomial(nvars, {tuple([0] * nvars): scalar(c)})

    @staticmethod
    def variable(nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return Polynomial(nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return Polynomial(self.nvars, t)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "Polynomial":
        c = scalar(c)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def __neg__(self) -> "Polynomial":
        return self.scale(-1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, t)

    def eval(self, point) -> Fraction:
        point = [scalar(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("dimension mismatch in poly_eval")
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def sorted_terms(self):
        # graded lexicographic: total degree first, then lex on exponents
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def monic(self) -> "Polynomial":
        """Scaled so the grlex-leading coefficient is 1 (canonical rep)."""
        if self.is_zero():
            return self
        lead = self.sorted_terms()[0][1]
        return self.scale(Fraction(1) / lead)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                f"t{i+1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
            if mono:
                parts.append(f"{c}*{mono}" if c != 1 else mono)
            else:
                parts.append(str(c))
        return " + ".join(parts)


def poly_eval(p: Polynomial, point) -> Fraction:
    return p.eval(point)


# ---------------------------------------------------------------------------
# block linear systems


class LinearSystem:
    """Joint linear system over several unknown matrices.

    Constraints have the form  sum_t A_t * X_{name_t} * B_t = C  and are
    assembled with kron into one big system; the solver inherits the
    free-variables-zero convention from solve_affine, so solutions are
    deterministic.
    """

    def __init__(self):
        self.shapes = {}  # name -> (rows, cols)
        self.offsets = {}
        self.size = 0
        self.rows = []  # list of coefficient rows
        self.rhs = []

    def add_unknown(self, name: str, rows: int, cols: int):
        if name in self.shapes:
            raise ValueError(f"duplicate unknown {name}")
        self.shapes[name] = (rows, cols)
        self.offsets[name] = self.size
        self.size += rows * cols

    def add_constraint(self, terms, rhs: Matrix):
        """terms: list of (A, name, B) meaning sum A*X_name*B = rhs."""
        shape = (rhs.rows, rhs.cols)
        blocks = []
        for a, name, b in terms:
            r, c = self.shapes[name]
            if a.cols != r or b.rows != c or (a.rows, b.cols) != shape:
                raise ValueError("inconsistent constraint shapes")
            # vec_row(A X B) = (A kron B^T) vec_row(X)
            blocks.append((self.offsets[name], kron(a, b.transpose())))
        nrows = shape[0] * shape[1]
        for i in range(nrows):
            row = [Fraction(0)] * self.size
            nonzero = False
            for off, k in blocks:
                kr = k.data[i]
                for j, x in enumerate(kr):
                    if x != 0:
                        row[off + j] += x
                        nonzero = True
            b_i = rhs.data[i // rhs.cols][i % rhs.cols]
            if not nonzero and b_i == 0:
                continue
            self.rows.append(row)
            self.rhs.append(b_i)

    def _matrix(self) -> Matrix:
        if not self.rows:
            return Matrix.zero(0, self.size)
        return Matrix(len(self.rows), self.size, self.rows)

    def solve(self):
        """dict name -> Matrix, or None if infeasible."""
        a = self._matrix()
        x = a.solve_affine(self.rhs)
        if x is None:
            return None
        return self._unpack(x)

    def solution_basis(self):
        """Basis of the homogeneous solution space as a list of dicts."""
        if any(b != 0 for b in self.rhs):
            raise ValueError("solution_basis requires a homogeneous system")
        ns = self._matrix().nullspace()
        return [self._unpack(ns.col(j)) for j in range(ns.cols)]

    def _unpack(self, vec):
        out = {}
        for name, (r, c) in self.shapes.items():
            off = self.offsets[name]
            out[name] = Matrix(r, c, [vec[off + i * c : off + (i + 1) * c] for i in range(r)])
        return out
