"""Matrix units ``M^n_m``, ``N^n_m`` and the projections ``P``, ``Q`` built from them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .cartan import Weight
from .coordring import CoordElement, Verdict, counit, decide, sigma_twist, u, ustar, DEFAULT_D
from .repbuild import Rep
from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "CoordMatrix",
    "CoeffMatrix",
    "unit_M",
    "unit_N",
    "build_P",
    "build_Q",
    "is_projection",
    "is_flag_supported",
    "qtrace",
    "theta_conjugation_check",
    "k2rho_diag",
    "conjugate_star",
    "antipode_relations",
    "matrix_unit_suite",
]


@dataclass(frozen=True, eq=False)
class CoordMatrix:
    rep: Rep
    entries: tuple  # tuple of rows of CoordElement

    def __post_init__(self):
        n = self.rep.dim
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("CoordMatrix must be dim x dim")

    @classmethod
    def build(cls, rep: Rep, fn) -> "CoordMatrix":
        n = rep.dim
        return cls(rep, tuple(tuple(CoordElement.coerce(fn(i, j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rep: Rep) -> "CoordMatrix":
        return cls.build(rep, lambda i, j: CoordElement())

    @classmethod
    def identity(cls, rep: Rep) -> "CoordMatrix":
        return cls.build(rep, lambda i, j: CoordElement.one() if i == j else CoordElement())

    @property
    def dim(self) -> int:
        return self.rep.dim

    def __getitem__(self, ij) -> CoordElement:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "CoordMatrix") -> "CoordMatrix":
        return CoordMatrix.build(self.rep, lambda i, j: self[i, j] + other[i, j])

    def __sub__(self, other: "CoordMatrix") -> "CoordMatrix":
        return CoordMatrix.build(self.rep, lambda i, j: self[i, j] - other[i, j])

    def scale(self, c) -> "CoordMatrix":
        c = as_scalar(c)
        return CoordMatrix.build(self.rep, lambda i, j: self[i, j] * c)

    def __matmul__(self, other: "CoordMatrix") -> "CoordMatrix":
        n = self.dim
        return CoordMatrix.build(
            self.rep, lambda i, j: sum((self[i, k] * other[k, j] for k in range(n)), CoordElement())
        )

    def diag_left(self, d: Sequence) -> "CoordMatrix":
        """``diag(d) @ self`` for a Scalar diagonal."""
        return CoordMatrix.build(self.rep, lambda i, j: self[i, j] * d[i])

    def diag_right(self, d: Sequence) -> "CoordMatrix":
        return CoordMatrix.build(self.rep, lambda i, j: self[i, j] * d[j])

    def map(self, fn) -> "CoordMatrix":
        return CoordMatrix.build(self.rep, lambda i, j: fn(self[i, j]))

    def counit(self) -> list:
        """Entrywise counit, a matrix of Scalars."""
        return [[counit(e) for e in row] for row in self.entries]

    def structurally_equal(self, other: "CoordMatrix") -> bool:
        return all(self[i, j] == other[i, j] for i in range(self.dim) for j in range(self.dim))

    def compare(self, other: "CoordMatrix", budget: int | None = None, D: int = DEFAULT_D) -> Verdict:
        """Entrywise semantic comparison; the weakest oracle used is reported."""
        oracle = "exact"
        for i in range(self.dim):
            for j in range(self.dim):
                a, b = self[i, j], other[i, j]
                if a == b:
                    continue
                v = decide(a, b, budget, D)
                if v.oracle != "exact":
                    oracle = v.oracle
                if not v.equal:
                    return Verdict(False, oracle)
        return Verdict(True, oracle)

    def __str__(self) -> str:
        return "\n".join(" | ".join(str(e) for e in row) for row in self.entries)


class CoeffMatrix:
    """Square matrix of Scalars ``c^m_n`` (row m, column n)."""

    __slots__ = ("c",)

    def __init__(self, rows):
        self.c = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        n = len(self.c)
        if any(len(r) != n for r in self.c):
            raise ValueError("coefficient matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.c)

    @classmethod
    def zeros(cls, n: int) -> "CoeffMatrix":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def diag(cls, entries) -> "CoeffMatrix":
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, m: int, k: int) -> "CoeffMatrix":
        """``e_{mk}``."""
        return cls([[ONE if (i, j) == (m, k) else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "CoeffMatrix":
        return cls.diag([ONE] * n)

    def __getitem__(self, ij) -> Scalar:
        return self.c[ij[0]][ij[1]]

    def __matmul__(self, other: "CoeffMatrix") -> "CoeffMatrix":
        n = self.dim
        return CoeffMatrix(
            [[sum((self.c[i][k] * other.c[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, CoeffMatrix) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def nonzero(self):
        for m, row in enumerate(self.c):
            for n, v in enumerate(row):
                if v:
                    yield m, n, v

    def is_diagonal(self) -> bool:
        return all(m == n for m, n, _ in self.nonzero())

    def __repr__(self) -> str:
        return f"CoeffMatrix({[[str(x) for x in r] for r in self.c]})"


def unit_M(rep: Rep, m: int, n: int) -> CoordMatrix:
    """``(M^n_m)^i_j = u[m,i]* u[n,j]``."""
    return CoordMatrix.build(rep, lambda i, j: ustar(rep, m, i) * u(rep, n, j))


def unit_N(rep: Rep, m: int, n: int) -> CoordMatrix:
    """``(N^n_m)^i_j = u[i,m] u[j,n]*``."""
    return CoordMatrix.build(rep, lambda i, j: u(rep, i, m) * ustar(rep, j, n))


def _combine(rep: Rep, c: CoeffMatrix, unit) -> CoordMatrix:
    if c.dim != rep.dim:
        raise ValueError("coefficient matrix size does not match the representation")

    def entry(i, j):
        terms = {}
        for m, k, v in c.nonzero():
            for w, x in unit(i, j, m, k).terms.items():
                terms[w] = terms.get(w, ZERO) + v * x
        return CoordElement(terms)

    return CoordMatrix.build(rep, entry)


def build_P(rep: Rep, c: CoeffMatrix) -> CoordMatrix:
    """``P = sum c^m_n M^n_m``."""
    return _combine(rep, c, lambda i, j, m, n: ustar(rep, m, i) * u(rep, n, j))


def build_Q(rep: Rep, c: CoeffMatrix) -> CoordMatrix:
    """``Q = sum c^m_n N^n_m``."""
    return _combine(rep, c, lambda i, j, m, n: u(rep, i, m) * ustar(rep, j, n))


def is_projection(c: CoeffMatrix) -> bool:
    return c @ c == c


def is_flag_supported(rep: Rep, c: CoeffMatrix) -> bool:
    w = rep.basis_weights
    return all(w[m] == w[n] for m, n, _ in c.nonzero())


def k2rho_diag(rep: Rep, power: int = 1) -> list:
    """Diagonal of ``pi(K_{2 rho})^power``."""
    return rep.K_diag(Weight((2,) * rep.rs.rank), power)


def qtrace(V, M: CoordMatrix) -> CoordElement:
    """``Tr(V M)`` for a diagonal ``V`` (a list of Scalars or a diagonal SparseMatrix)."""
    d = _diag_of(V, M.dim)
    return sum((M[i, i] * d[i] for i in range(M.dim) if d[i]), CoordElement())


def _diag_of(V, n: int) -> list:
    if hasattr(V, "rows"):
        if V.nrows != n or V.ncols != n:
            raise ValueError("dimension mismatch")
        for i, r in V.rows.items():
            if set(r) - {i}:
                raise ValueError("V must be diagonal")
        return [V.get(i, i) for i in range(n)]
    d = [as_scalar(x) for x in V]
    if len(d) != n:
        raise ValueError("dimension mismatch")
    return d


def theta_conjugation_check(rep: Rep, c: CoeffMatrix, strict: bool = True) -> bool:
    """``theta(P) = K^-1 P K`` and ``theta(Q) = K Q K^-1`` with ``K = pi(K_{2 rho})``.

    Both sides are compared structurally: ``theta`` rescales words and the
    conjugation rescales entries.  With ``strict`` the coefficient matrix must be
    flag-supported; ``strict=False`` allows probing the failure for other ``c``.
    """
    if strict and not is_flag_supported(rep, c):
        raise ValueError("theta_conjugation_check requires a flag-supported coefficient matrix")
    two_rho = Weight((2,) * rep.rs.rank)
    k = k2rho_diag(rep)
    kinv = k2rho_diag(rep, -1)
    P = build_P(rep, c)
    Q = build_Q(rep, c)
    th = lambda e: sigma_twist(two_rho, two_rho, e)  # noqa: E731
    okP = P.map(th).structurally_equal(P.diag_left(kinv).diag_right(k))
    okQ = Q.map(th).structurally_equal(Q.diag_left(k).diag_right(kinv))
    return okP and okQ


def conjugate_star(e: CoordElement) -> CoordElement:
    """The compact-form involution on an orthonormal basis (real ``q``).

    Reverses words and toggles stars; only meaningful for representations built
    in an orthonormal basis, such as ``fundamental_slN``.
    """
    out = {}
    for w, c in CoordElement.coerce(e).terms.items():
        for a in w:
            if not a.rep.orthonormal_flag:
                raise ValueError(f"{a.rep.label} is not orthonormal; the involution is not represented")
        out[tuple(a._replace(star=not a.star) for a in reversed(w))] = c
    return CoordElement(out)


def _worst(verdicts) -> Verdict:
    oracle = "exact"
    for v in verdicts:
        if v.oracle != "exact":
            oracle = v.oracle
        if not v.equal:
            return Verdict(False, oracle)
    return Verdict(True, oracle)


def antipode_relations(rep: Rep, budget: int | None = None) -> dict:
    """The four relations ``S(a_1) a_2 = eps(a) = a_1 S(a_2)`` and their ``S^2``-twisted forms.

    With ``u[i,j]* = S(u[j,i])`` and ``p_k = (2 rho, lambda_k)``:

    * ``sum_k u[k,a]* u[k,b] = delta_ab``
    * ``sum_k u[a,k] u[b,k]* = delta_ab``
    * ``sum_k q^(p_k - p_b) u[k,b] u[k,a]* = delta_ab``
    * ``sum_k q^(p_a - p_k) u[b,k]* u[a,k] = delta_ab``
    """
    n = rep.dim
    p = rep.weight_pairing(Weight((2,) * rep.rs.rank))
    q = Scalar.monomial
    forms = {
        "S(u1)u2": lambda a, b: sum((ustar(rep, k, a) * u(rep, k, b) for k in range(n)), CoordElement()),
        "u1S(u2)": lambda a, b: sum((u(rep, a, k) * ustar(rep, b, k) for k in range(n)), CoordElement()),
        "S2(u1)S(u2)": lambda a, b: sum((u(rep, k, b) * ustar(rep, k, a) * q(p[k] - p[b]) for k in range(n)), CoordElement()),
        "S(u1)S2(u2)": lambda a, b: sum((ustar(rep, b, k) * u(rep, a, k) * q(p[a] - p[k]) for k in range(n)), CoordElement()),
    }
    out = {}
    for name, f in forms.items():
        out[name] = _worst(
            decide(f(a, b), CoordElement.one() if a == b else CoordElement(), budget)
            for a in range(n) for b in range(n)
        )
    return out


def matrix_unit_suite(rep: Rep, budget: int | None = None, sample: int | None = None, seed: int = 0) -> dict:
    """Products, counit (linear independence) and q-traces of ``M^n_m`` and ``N^n_m``.

    With ``sample`` only that many ``(A, B)`` product pairs are checked, drawn
    with a seeded RNG; about half of them are composable (``k == o``).
    """
    n = rep.dim
    idx = range(n)
    if sample is None:
        quads = [(m, k, o, p) for m in idx for k in idx for o in idx for p in idx]
    else:
        rng = random.Random(seed)
        quads = []
        for t in range(sample):
            m, k, p = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            quads.append((m, k, k if t % 2 == 0 else rng.randrange(n), p))
    M = {(m, k): unit_M(rep, m, k) for m in idx for k in idx}
    N = {(m, k): unit_N(rep, m, k) for m in idx for k in idx}
    k_inv, k_pos = k2rho_diag(rep, -1), k2rho_diag(rep, 1)
    out = {}
    for tag, U, V in (("M", M, k_inv), ("N", N, k_pos)):
        out[f"{tag}:counit"] = Verdict(all(
            U[m, k].counit() == [[ONE if (i, j) == (m, k) else ZERO for j in idx] for i in idx]
            for m in idx for k in idx), "exact")

        def products():
            for m, k, o, p in quads:
                rhs = U[m, p] if k == o else CoordMatrix.zero(rep)
                yield (U[m, k] @ U[o, p]).compare(rhs, budget)

        out[f"{tag}:product"] = _worst(products())
        out[f"{tag}:qtrace"] = _worst(
            decide(qtrace(V, U[m, k]), CoordElement.const(V[m]) if m == k else CoordElement(), budget)
            for m in idx for k in idx
        )
    return out
