"""Root systems, weights and the invariant form.

Conventions: ``a_ij = <alpha_i^vee, alpha_j>`` (Bourbaki numbering), so that the
simple root ``alpha_j`` has fundamental-weight coordinates given by column ``j``
of the Cartan matrix, ``(alpha_i, alpha_j) = d_i a_ij`` and the short roots have
squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

__all__ = [
    "RootSystem",
    "Weight",
    "root_system",
    "bilinear",
    "two_rho",
    "weyl_dim",
    "simple_root",
    "positive_roots",
    "parse_weight",
]


@dataclass(frozen=True)
class Weight:
    """Integer vector in the fundamental-weight basis."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """``omega_i`` with 1-based ``i``; ``i = 0`` or ``rank + 1`` gives zero."""
        c = [0] * rank
        if 1 <= i <= rank:
            c[i - 1] = 1
        return cls(tuple(c))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def _same_rank(a: Weight, b: Weight) -> None:
    if len(a.coords) != len(b.coords):
        raise ValueError(f"rank mismatch: {a} vs {b}")


@dataclass(frozen=True)
class RootSystem:
    series: str
    rank: int
    cartan_matrix: tuple
    symmetrizers: tuple
    fundamental_gram: tuple = field(init=False, repr=False)

    def __post_init__(self):
        a = self.cartan_matrix
        r = self.rank
        d = self.symmetrizers
        for i in range(r):
            if a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(r):
                if i != j and a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise ValueError("symmetrizers do not symmetrize the Cartan matrix")
        inv = _inverse([[Fraction(x) for x in row] for row in a])
        # (omega_i, omega_j) = (A^{-1})_{ij} d_i
        gram = tuple(tuple(inv[i][j] * d[i] for j in range(r)) for i in range(r))
        for i in range(r):
            for j in range(r):
                assert gram[i][j] == gram[j][i]
        object.__setattr__(self, "fundamental_gram", gram)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self) -> str:
        return self.name

    def weight(self, coords: Sequence[int]) -> Weight:
        w = Weight(tuple(coords))
        if len(w) != self.rank:
            raise ValueError(f"{self.name} weights have {self.rank} coordinates, got {len(w)}")
        return w

    def omega(self, i: int) -> Weight:
        return Weight.fundamental(self.rank, i)

    def alpha(self, j: int) -> Weight:
        """Simple root ``alpha_j`` (1-based) in fundamental coordinates."""
        return Weight(tuple(self.cartan_matrix[i][j - 1] for i in range(self.rank)))

    def d(self, j: int) -> int:
        """Symmetrizer ``d_j`` (1-based), so that ``q_j = q^{d_j}``."""
        return self.symmetrizers[j - 1]

    @cached_property
    def positive_roots(self) -> tuple:
        return tuple(positive_roots(self))


def _inverse(m):
    n = len(m)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _from_symmetric(series: str, b: list) -> RootSystem:
    r = len(b)
    d = tuple(b[i][i] // 2 for i in range(r))
    a = tuple(tuple(2 * b[i][j] // b[i][i] for j in range(r)) for i in range(r))
    return RootSystem(series, r, a, d)


def _chain(r: int, lengths: list) -> list:
    """Symmetric form of a path-shaped Dynkin diagram with given squared lengths."""
    b = [[0] * r for _ in range(r)]
    for i in range(r):
        b[i][i] = lengths[i]
    for i in range(r - 1):
        b[i][i + 1] = b[i + 1][i] = -max(lengths[i], lengths[i + 1]) // 2
    return b


def root_system(name: str) -> RootSystem:
    """Parse names such as ``"A2"``, ``"B2"``, ``"G2"``, ``"D4"``, ``"E6"``."""
    m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", name)
    if not m:
        raise ValueError(f"bad root system name {name!r}")
    s, r = m.group(1).upper(), int(m.group(2))
    if s == "A" and r >= 1:
        return _from_symmetric(s, _chain(r, [2] * r))
    if s == "B" and r >= 2:
        return _from_symmetric(s, _chain(r, [4] * (r - 1) + [2]))
    if s == "C" and r >= 2:
        return _from_symmetric(s, _chain(r, [2] * (r - 1) + [4]))
    if s == "G" and r == 2:
        return _from_symmetric(s, [[2, -3], [-3, 6]])
    if s == "F" and r == 4:
        return _from_symmetric(s, _chain(4, [4, 4, 2, 2]))
    if s == "D" and r >= 4:
        b = _chain(r, [2] * r)
        b[r - 2][r - 1] = b[r - 1][r - 2] = 0
        b[r - 3][r - 1] = b[r - 1][r - 3] = -1
        return _from_symmetric(s, b)
    if s == "E" and r in (6, 7, 8):
        # Bourbaki: 1-3-4-5-6(-7-8) with 2 attached to 4
        b = [[0] * r for _ in range(r)]
        for i in range(r):
            b[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, r)]
        for i, j in edges:
            b[i - 1][j - 1] = b[j - 1][i - 1] = -1
        return _from_symmetric(s, b)
    raise ValueError(f"unsupported root system {name!r}")


def parse_weight(rs: RootSystem, text: str) -> Weight:
    try:
        coords = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad weight {text!r}") from exc
    return rs.weight(coords)


def bilinear(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """The invariant form ``(lam, mu)``."""
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise ValueError("rank mismatch")
    g = rs.fundamental_gram
    total = Fraction(0)
    for i, a in enumerate(lam.coords):
        if a:
            row = g[i]
            for j, b in enumerate(mu.coords):
                if b:
                    total += a * b * row[j]
    return total


def two_rho(rs: RootSystem) -> Weight:
    return Weight((2,) * rs.rank)


def simple_root(rs: RootSystem, j: int) -> Weight:
    return rs.alpha(j)


def positive_roots(rs: RootSystem) -> list:
    """Positive roots as Weights, by closure of the simple roots under simple reflections."""
    r = rs.rank
    a = rs.cartan_matrix
    simple = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                pairing = sum(a[i][j] * beta[j] for j in range(r))
                img = tuple(beta[j] - (pairing if j == i else 0) for j in range(r))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    pos = sorted((c for c in seen if all(x >= 0 for x in c)), key=lambda c: (sum(c), c))
    out = []
    for c in pos:
        w = Weight.zero(r)
        for j, k in enumerate(c):
            if k:
                w = w + k * rs.alpha(j + 1)
        out.append(w)
    return out


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula."""
    if not lam.is_dominant():
        raise ValueError(f"weight {lam} is not dominant")
    rho = Weight((1,) * rs.rank)
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= bilinear(rs, lam + rho, beta) / bilinear(rs, rho, beta)
    assert num.denominator == 1
    return int(num)
