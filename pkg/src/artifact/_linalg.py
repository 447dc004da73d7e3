"""Sparse matrices over Scalar and exact elimination over the Laurent ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .scalar import ONE, ZERO, Scalar, as_scalar, gcd

__all__ = ["SparseMatrix", "lattice_echelon", "express", "Echelon", "bareiss_det"]


class SparseMatrix:
    """Square or rectangular matrix stored as ``{row: {col: Scalar}}``."""

    __slots__ = ("nrows", "ncols", "rows", "_cols")

    def __init__(self, nrows: int, ncols: int | None = None, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = nrows if ncols is None else ncols
        self.rows = {}
        if rows:
            for i, r in rows.items():
                r = {j: v for j, v in r.items() if v}
                if r:
                    self.rows[i] = r
        self._cols = None

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def diag(cls, entries: Iterable) -> "SparseMatrix":
        entries = list(entries)
        return cls(len(entries), len(entries), {i: {i: as_scalar(v)} for i, v in enumerate(entries)})

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "SparseMatrix":
        return cls(n, m)

    @classmethod
    def from_dense(cls, data) -> "SparseMatrix":
        n = len(data)
        m = len(data[0]) if n else 0
        return cls(n, m, {i: {j: as_scalar(v) for j, v in enumerate(row)} for i, row in enumerate(data)})

    def get(self, i: int, j: int) -> Scalar:
        return self.rows.get(i, {}).get(j, ZERO)

    def __getitem__(self, ij) -> Scalar:
        return self.get(*ij)

    def cols(self) -> dict:
        """Column view ``{col: {row: Scalar}}`` (cached)."""
        if self._cols is None:
            c: dict = {}
            for i, r in self.rows.items():
                for j, v in r.items():
                    c.setdefault(j, {})[i] = v
            self._cols = c
        return self._cols

    def to_dense(self) -> list:
        return [[self.get(i, j) for j in range(self.ncols)] for i in range(self.nrows)]

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, self.cols())

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = {}
        orows = other.rows
        for i, r in self.rows.items():
            acc: dict = {}
            for k, a in r.items():
                ok = orows.get(k)
                if ok:
                    for j, b in ok.items():
                        v = acc.get(j)
                        acc[j] = a * b if v is None else v + a * b
            if acc:
                out[i] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        out = {i: dict(r) for i, r in self.rows.items()}
        for i, r in other.rows.items():
            t = out.setdefault(i, {})
            for j, v in r.items():
                t[j] = t.get(j, ZERO) + v
        return SparseMatrix(self.nrows, self.ncols, out)

    def __neg__(self) -> "SparseMatrix":
        return SparseMatrix(self.nrows, self.ncols, {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def scale(self, c) -> "SparseMatrix":
        c = as_scalar(c)
        return SparseMatrix(self.nrows, self.ncols, {i: {j: c * v for j, v in r.items()} for i, r in self.rows.items()})

    def __mul__(self, c) -> "SparseMatrix":
        return self.scale(c)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(sorted((i, tuple(sorted(r.items()))) for i, r in self.rows.items()))))

    def trace(self) -> Scalar:
        return sum((r.get(i, ZERO) for i, r in self.rows.items()), ZERO)

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows.values())})"


# -- Laurent-ring row operations -------------------------------------------

def _axpy(r: dict, c: Scalar, p: dict) -> dict:
    """``r - c*p`` for sparse rows."""
    out = dict(r)
    for k, v in p.items():
        w = out.get(k, ZERO) - c * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _unit_inverse(u: Scalar) -> Scalar:
    (e, c), = u._t.items()
    return Scalar.monomial(-e, 1 / Fraction(c))


def lattice_echelon(rows: list, pivot_keys: Iterable) -> list:
    """Echelon basis of the Laurent-ring module spanned by ``rows``.

    Only keys listed in ``pivot_keys`` (in that order) are eliminated; any other
    keys are carried along by the row operations (useful for provenance tags).
    Returns ``[(key, row), ...]``; the rows are a basis of the row module over
    ``Q[q^(1/L), q^(-1/L)]`` and each pivot entry is monic with minimal exponent 0.
    """
    active = [r for r in rows if any(k in r for k in pivot_keys)]
    basis = []
    for key in pivot_keys:
        with_key = [r for r in active if key in r]
        rest = [r for r in active if key not in r]
        while len(with_key) > 1:
            with_key.sort(key=lambda r: (r[key].span(), len(r[key]._t), len(r)))
            p = with_key[0]
            keep = [p]
            for r in with_key[1:]:
                quo, rem = r[key].divmod(p[key])
                r2 = _axpy(r, quo, p)
                if rem:
                    keep.append(r2)
                elif r2:
                    rest.append(r2)
            with_key = keep
        if with_key:
            p = with_key[0]
            u, _ = p[key].unit_normal()
            if u != ONE:
                inv = _unit_inverse(u)
                p = {k: inv * v for k, v in p.items()}
            basis.append((key, p))
        active = [r for r in rest if any(k in r for k in pivot_keys)]
    return basis


def express(basis: list, row: dict, pivot_keys=None) -> list:
    """Coefficients of ``row`` over an echelon ``basis``; raises if not in the module."""
    r = dict(row)
    coeffs = []
    for key, p in basis:
        v = r.get(key)
        if v:
            c = v.divexact(p[key])
            r = _axpy(r, c, p)
            coeffs.append(c)
        else:
            coeffs.append(ZERO)
    if pivot_keys is not None:
        r = {k: v for k, v in r.items() if k in pivot_keys}
    if r:
        raise ArithmeticError("row is not in the span of the basis")
    return coeffs


def content(row: dict) -> Scalar:
    g = ZERO
    for v in row.values():
        g = v.unit_normal()[1] if not g else gcd(g, v)
        if g == ONE:
            return ONE
    return g


class Echelon:
    """Incremental echelon form over Q(q) kept inside the Laurent ring.

    Rows are reduced fraction-free and divided by their content, so entries stay
    Laurent polynomials of moderate size.  ``add`` returns whether the row was
    independent of the rows already present.
    """

    __slots__ = ("pivots", "rows")

    def __init__(self):
        self.pivots: list = []
        self.rows: list = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        r = row
        for key, p in zip(self.pivots, self.rows):
            v = r.get(key)
            if v:
                pv = p[key]
                if pv.divides(v):
                    r = _axpy(r, v.divexact(pv), p)
                else:
                    g = gcd(pv, v)
                    a = pv.divexact(g)
                    b = v.divexact(g)
                    out = {k: a * x for k, x in r.items()}
                    r = _axpy(out, b, p)
                if r:
                    c = content(r)
                    if c != ONE:
                        r = {k: x.divexact(c) for k, x in r.items()}
        return r

    def add(self, row: dict) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        key = min(r, key=lambda k: (r[k].span(), len(r[k]._t), k))
        u, _ = r[key].unit_normal()
        if u != ONE:
            inv = _unit_inverse(u)
            r = {k: inv * v for k, v in r.items()}
        self.pivots.append(key)
        self.rows.append(r)
        return True


def bareiss_det(mat: list) -> Scalar:
    """Fraction-free determinant of a square list-of-lists of Scalars."""
    a = [list(r) for r in mat]
    n = len(a)
    if n == 0:
        return ONE
    sign = ONE
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            p = next((r for r in range(k + 1, n) if a[r][k]), None)
            if p is None:
                return ZERO
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divexact(prev)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# -- modular specialization ------------------------------------------------------

PRIME = (1 << 61) - 1


def specialize(s: Scalar, x: int, p: int = PRIME) -> int:
    """Image of ``s`` under ``q -> x`` in ``F_p``; exponents must be integers."""
    acc = 0
    for e, c in s._t.items():
        if not isinstance(e, int):
            if e.denominator != 1:
                raise ValueError("fractional exponent cannot be specialized")
            e = int(e)
        if isinstance(c, int):
            cm = c % p
        else:
            cm = c.numerator * pow(c.denominator, -1, p) % p
        acc = (acc + cm * pow(x, e, p)) % p
    return acc


class ModEchelon:
    """Incremental row echelon over ``F_p`` for rank tests of specialized rows."""

    __slots__ = ("p", "pivots", "rows")

    def __init__(self, p: int = PRIME):
        self.p = p
        self.pivots: list = []
        self.rows: list = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        p = self.p
        r = {k: v % p for k, v in row.items() if v % p}
        for key, pr in zip(self.pivots, self.rows):
            v = r.get(key)
            if v:
                for k, w in pr.items():
                    nv = (r.get(k, 0) - v * w) % p
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
        return r

    def add(self, row: dict) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        key = min(r)
        inv = pow(r[key], -1, self.p)
        r = {k: v * inv % self.p for k, v in r.items()}
        self.pivots.append(key)
        self.rows.append(r)
        return True
