"""JSON (de)serialization for every on-disk object.

Scalars are strings "p/q" (or "p" when the denominator is 1); matrices
are nested arrays, with a sparse {rows, cols, entries} form also
accepted on input; the even bracket travels as sparse (i, j, k, value)
triples.  Algebra references inside module files may be a built-in name
like "sl2_trivial(2)" or an inline algebra object.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import (
    LieAlgebraEven,
    OddBracketForm,
    OddPart,
    SuperAlgebra,
    builtin_algebra,
    validate,
)
from .gradedmod import GradedMap, GradedModule, Rep, make_map, make_module
from .linalg import Matrix, Polynomial, scalar
from .rigid import RigidComplex, make_complex


class FormatError(ValueError):
    """Malformed input file or JSON object."""


def scalar_to_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_str(s) -> Fraction:
    if isinstance(s, str) and any(ch in s for ch in ".eE"):
        raise FormatError(f"bad scalar {s!r}: expected integer or p/q")
    try:
        return Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad scalar {s!r}") from exc


def matrix_to_json(m: Matrix):
    return [[scalar_to_str(x) for x in row] for row in m.data]


def matrix_from_json(obj, rows=None, cols=None) -> Matrix:
    if isinstance(obj, dict):
        r, c = int(obj["rows"]), int(obj["cols"])
        m = Matrix.zero(r, c)
        for i, j, v in obj.get("entries", []):
            m.data[int(i)][int(j)] = scalar_from_str(v)
    else:
        if not isinstance(obj, list):
            raise FormatError("matrix must be a nested array or a sparse object")
        r = len(obj)
        c = len(obj[0]) if r else (cols if cols is not None else 0)
        if any(len(row) != c for row in obj):
            raise FormatError("ragged matrix rows")
        m = Matrix(r, c, [[scalar_from_str(x) for x in row] for row in obj])
    if rows is not None and (m.rows, m.cols) != (rows, cols):
        # empty nested arrays cannot carry their column count
        if m.rows == 0 or m.cols == 0:
            m = Matrix.zero(rows, cols)
        else:
            raise FormatError(f"matrix shape {(m.rows, m.cols)}, expected {(rows, cols)}")
    return m


def polynomial_to_json(p: Polynomial):
    return [
        {"exponents": list(e), "coefficient": scalar_to_str(c)}
        for e, c in p.sorted_terms()
    ]


def polynomial_from_json(obj, nvars: int) -> Polynomial:
    terms = {}
    for t in obj:
        e = tuple(int(x) for x in t["exponents"])
        if len(e) != nvars:
            raise FormatError("polynomial exponent length mismatch")
        terms[e] = terms.get(e, Fraction(0)) + scalar_from_str(t["coefficient"])
    return Polynomial(nvars, terms)


# ---------------------------------------------------------------------------
# algebras


def algebra_to_json(g: SuperAlgebra):
    triples = []
    for i in range(g.dim0):
        for j in range(g.dim0):
            for k in range(g.dim0):
                v = g.even.bracket[i][j][k]
                if v != 0:
                    triples.append([i, j, k, scalar_to_str(v)])
    out = {
        "dim0": g.dim0,
        "bracket": triples,
        "dim1": g.dim1,
        "action": [matrix_to_json(a) for a in g.odd.action],
    }
    if g.name:
        out["name"] = g.name
    return out


def algebra_from_json(obj) -> SuperAlgebra:
    if isinstance(obj, str):
        return builtin_algebra(obj)
    dim0 = int(obj["dim0"])
    dim1 = int(obj["dim1"])
    c = [[[Fraction(0)] * dim0 for _ in range(dim0)] for _ in range(dim0)]
    for i, j, k, v in obj.get("bracket", []):
        c[int(i)][int(j)][int(k)] = scalar_from_str(v)
    even = LieAlgebraEven.from_constants(dim0, c)
    action = tuple(
        matrix_from_json(a, dim1, dim1) for a in obj.get("action", [])
    )
    if len(action) != dim0:
        raise FormatError("need one odd-action matrix per even basis element")
    g = SuperAlgebra(even, OddPart(dim1, action), name=obj.get("name", ""))
    rep = validate(g)
    if not rep.ok:
        raise FormatError(f"algebra fails validation: {rep.failures}")
    return g


def odd_bracket_from_json(obj, dim1: int, dim0: int) -> OddBracketForm:
    b = [[[Fraction(0)] * dim0 for _ in range(dim1)] for _ in range(dim1)]
    for j, k, i, v in obj:
        b[int(j)][int(k)][int(i)] = scalar_from_str(v)
    return OddBracketForm.from_constants(dim1, dim0, b)


# ---------------------------------------------------------------------------
# g0-representations


def rep_to_json(q: Rep):
    return {"dim": q.dim, "mats": [matrix_to_json(m) for m in q.mats]}


def rep_from_json(obj, g0: LieAlgebraEven) -> Rep:
    dim = int(obj["dim"])
    mats = tuple(matrix_from_json(m, dim, dim) for m in obj.get("mats", []))
    if len(mats) != g0.dim0:
        raise FormatError("need one representation matrix per even basis element")
    q = Rep(g0, dim, mats)
    q.check()
    return q


# ---------------------------------------------------------------------------
# modules, maps, complexes


def _algebra_ref(g: SuperAlgebra):
    return g.name if g.name else algebra_to_json(g)


def module_to_json(v: GradedModule):
    return {
        "algebra": _algebra_ref(v.alg),
        "lo": v.lo,
        "hi": v.hi,
        "dims": list(v.dims),
        "rho0": [[matrix_to_json(m) for m in per] for per in v.rho0],
        "odd": [[matrix_to_json(m) for m in per] for per in v.odd],
    }


def _graded_families(obj, alg, key):
    lo, hi = int(obj["lo"]), int(obj["hi"])
    dims = [int(d) for d in obj["dims"]]
    if len(dims) != hi - lo + 1:
        raise FormatError("dims length does not match the degree window")
    rho0 = []
    for jx, per in enumerate(obj["rho0"]):
        d = dims[jx]
        rho0.append(tuple(matrix_from_json(m, d, d) for m in per))
        if len(rho0[-1]) != alg.dim0:
            raise FormatError("need one even matrix per even basis element")
    fam = []
    for jx, per in enumerate(obj[key]):
        d = dims[jx]
        dnext = dims[jx + 1] if jx + 1 < len(dims) else 0
        fam.append(tuple(matrix_from_json(m, dnext, d) for m in per))
        if len(fam[-1]) != alg.dim1:
            raise FormatError(f"need one {key} matrix per odd basis element")
    return lo, hi, dims, rho0, fam


def module_from_json(obj) -> GradedModule:
    alg = algebra_from_json(obj["algebra"])
    lo, hi, dims, rho0, odd = _graded_families(obj, alg, "odd")
    return make_module(alg, lo, hi, dims, rho0, odd)


def complex_to_json(l: RigidComplex):
    return {
        "algebra": _algebra_ref(l.alg),
        "lo": l.lo,
        "hi": l.hi,
        "dims": list(l.dims),
        "rho0": [[matrix_to_json(m) for m in per] for per in l.rho0],
        "diff": [[matrix_to_json(m) for m in per] for per in l.diff],
    }


def complex_from_json(obj) -> RigidComplex:
    alg = algebra_from_json(obj["algebra"])
    lo, hi, dims, rho0, diff = _graded_families(obj, alg, "diff")
    return make_complex(alg, lo, hi, dims, rho0, diff)


def map_to_json(phi: GradedMap):
    return {
        "source": module_to_json(phi.source),
        "target": module_to_json(phi.target),
        "comps": {
            str(j): matrix_to_json(phi.comp_at(j))
            for j in sorted(set(phi.source.degrees()) | set(phi.target.degrees()))
            if phi.source.dim_at(j) and phi.target.dim_at(j)
        },
    }


def map_from_json(obj) -> GradedMap:
    src = module_from_json(obj["source"])
    tgt = module_from_json(obj["target"])
    comps = {
        int(j): matrix_from_json(m, tgt.dim_at(int(j)), src.dim_at(int(j)))
        for j, m in obj.get("comps", {}).items()
    }
    return make_map(src, tgt, comps)


# ---------------------------------------------------------------------------
# file helpers


def _read(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def load_algebra(ref: str) -> SuperAlgebra:
    """Accept a built-in name like "grassmann(2)" or a JSON file path."""
    try:
        return builtin_algebra(ref)
    except (KeyError, ValueError):
        pass
    return algebra_from_json(_read(ref))


def load_module(path: str) -> GradedModule:
    return module_from_json(_read(path))


def load_complex(path: str) -> RigidComplex:
    return complex_from_json(_read(path))


def load_map(path: str) -> GradedMap:
    return map_from_json(_read(path))


def load_rep(path: str, g0: LieAlgebraEven) -> Rep:
    return rep_from_json(_read(path), g0)


def dump(obj, path: str):
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")
