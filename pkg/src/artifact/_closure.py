"""Span closure of vectors in tensor products of modules under the E/F generators.

This is the engine behind the semantic equality oracles.  A linear combination
of words of matrix coefficients is a functional ``X -> Lambda(rho(X) x)`` for a
vector ``x`` in a direct sum of tensor-product modules and a coordinate
functional ``Lambda``; it vanishes on ``U_q(g)`` iff ``Lambda`` vanishes on the
cyclic submodule ``U x``.  That submodule is the span of the weight components
of ``x`` closed under the ``E_a`` and ``F_a``.

Internally polynomials live in ``Z[t]`` with ``t = q^(1/L)`` (python-flint);
vectors are only ever needed up to a nonzero scalar, so every vector is stored
primitive with the lowest power of ``t`` divided out.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from flint import fmpz_poly

from .scalar import Scalar

__all__ = ["BudgetExceeded", "Leg", "Closure", "apply_gen", "apply_k", "vector_from_scalars", "to_poly", "from_poly", "exponent_lcm"]


class BudgetExceeded(RuntimeError):
    """The closure grew beyond the configured dimension budget."""


_X = fmpz_poly([0, 1])
_POW: list = [fmpz_poly([1])]


def _tpow(k: int) -> fmpz_poly:
    while len(_POW) <= k:
        _POW.append(_POW[-1] * _X)
    return _POW[k]


def exponent_lcm(scalars) -> int:
    den = 1
    for s in scalars:
        for e in s._t:
            if not isinstance(e, int):
                den = lcm(den, Fraction(e).denominator)
    return den


def to_poly(s: Scalar, L: int) -> tuple:
    """``s`` as ``(shift, poly, den)`` meaning ``t^shift * poly(t) / den``."""
    if not s._t:
        return 0, fmpz_poly(), 1
    den = 1
    for c in s._t.values():
        if not isinstance(c, int):
            den = lcm(den, c.denominator)
    exps = {int(e * L): c for e, c in s._t.items()}
    lo = min(exps)
    coeffs = [0] * (max(exps) - lo + 1)
    for e, c in exps.items():
        coeffs[e - lo] = int(c * den)
    return lo, fmpz_poly(coeffs), den


def from_poly(p: fmpz_poly, L: int, shift: int = 0) -> Scalar:
    terms = {}
    for k, c in enumerate(p.coeffs()):
        c = int(c)
        if c:
            terms[Fraction(k + shift, L)] = c
    return Scalar(terms)


def vector_from_scalars(vec: dict, L: int) -> dict:
    """A ``{key: Scalar}`` vector as a primitive ``{key: fmpz_poly}`` vector (up to scaling)."""
    parts = [(k,) + to_poly(v, L) for k, v in vec.items() if v]
    if not parts:
        return {}
    lo = min(x[1] for x in parts)
    den = 1
    for x in parts:
        den = lcm(den, x[3])
    return _normalize({k: p * (den // d) * _tpow(sh - lo) for k, sh, p, d in parts})


def _valuation(p: fmpz_poly) -> int:
    if p[0] != 0:
        return 0
    cs = p.coeffs()
    k = 0
    while cs[k] == 0:
        k += 1
    return k


def _is_unit(g: fmpz_poly) -> bool:
    return g.degree() == 0 and (g[0] == 1 or g[0] == -1)


def _normalize(vec: dict) -> dict:
    """Divide out the common power of ``t`` and the polynomial content; fix the sign."""
    if not vec:
        return vec
    g = None
    for p in vec.values():
        g = p if g is None else g.gcd(p)
        if _is_unit(g):
            break
    out = vec
    if not _is_unit(g):
        out = {k: p // g for k, p in out.items()}
    v = 0
    if all(p[0] == 0 for p in out.values()):
        v = min(_valuation(p) for p in out.values())
        out = {k: fmpz_poly(p.coeffs()[v:]) for k, p in out.items()}
    first = min(out)
    if out[first].coeffs()[-1] < 0:
        out = {k: -p for k, p in out.items()}
    return out


class Leg:
    """One tensor factor: a module with integerised E/F matrices and K exponents.

    ``cols[gen][j]`` lists ``(i, shift, poly)``: the generator maps basis vector j to
    ``sum_i t^shift poly / den[gen] e_i``.
    """

    __slots__ = ("dim", "weights", "kexp", "cols", "den")

    def __init__(self, dim: int, weights: list, kexp: dict, mats: dict, L: int):
        self.dim = dim
        self.weights = weights
        self.kexp = kexp
        self.cols = {}
        self.den = {}
        for g, m in mats.items():
            den = 1
            for row in m.rows.values():
                for v in row.values():
                    for c in v._t.values():
                        if not isinstance(c, int):
                            den = lcm(den, c.denominator)
            cols: dict = {}
            for i, row in m.rows.items():
                for j, v in row.items():
                    sh, p, d = to_poly(v, L)
                    cols.setdefault(j, []).append((i, sh, p * (den // d)))
            self.cols[g] = cols
            self.den[g] = den


class Closure:
    """Incremental closure of a set of start vectors in ``sum_copies (tensor of legs)``.

    Keys of a vector are ``(copy, J)`` with ``J`` a multi-index into the legs of
    ``copies[copy]``.  ``functional`` maps a copy to the component read by the
    coordinate functional, or ``None`` if no functional is attached.
    """

    def __init__(self, copies: list, gens: list, weight_of, start: list, budget: int, functional=None):
        self.copies = copies
        self.gens = gens
        self.weight_of = weight_of
        self.budget = budget
        self.functional = functional
        self.blocks: dict = {}
        self.basis: list = []
        self.queue: list = []
        self.violated = False
        self.done = False
        for v in start:
            for comp in self._split(v):
                self._offer(comp)
                if self.violated:
                    return

    def _split(self, vec: dict) -> list:
        parts: dict = {}
        for k, p in vec.items():
            parts.setdefault(self.weight_of(k), {})[k] = p
        return [_normalize(v) for v in parts.values() if v]

    def _value(self, vec: dict):
        total = fmpz_poly()
        for c, comp in enumerate(self.functional):
            if comp is None:
                continue
            p = vec.get((c, comp))
            if p is not None:
                total += p
        return total

    def _offer(self, vec: dict) -> None:
        if not vec:
            return
        w = self.weight_of(next(iter(vec)))
        blk = self.blocks.setdefault(w, _Echelon())
        if blk.add(vec):
            self.basis.append(vec)
            self.queue.append(vec)
            if self.functional is not None and self._value(vec) != 0:
                self.violated = True
            if len(self.basis) > self.budget:
                raise BudgetExceeded(f"closure dimension exceeded {self.budget}")

    def step(self) -> bool:
        """Process one queued vector; returns False once finished."""
        if self.violated or self.done:
            return False
        if not self.queue:
            self.done = True
            return False
        vec = self.queue.pop(0)
        for g in self.gens:
            img = apply_gen(self.copies, g, vec)
            if img:
                self._offer(_normalize(img))
                if self.violated:
                    return False
        return True

    def run(self) -> "Closure":
        while self.step():
            pass
        return self


def apply_gen(copies: list, g: tuple, vec: dict) -> dict:
    """Apply ``Delta^{(L-1)}`` of ``E_a`` or ``F_a`` (``g = (kind, a)``) to ``vec``."""
    kind, a = g
    contrib: list = []
    for (c, J), p in vec.items():
        legs = copies[c]
        n = len(legs)
        if not n:
            continue
        ks = [legs[t].kexp[a][J[t]] for t in range(n)]
        if kind == "E":
            # 1 (x) .. (x) E (x) K (x) .. (x) K
            suffix = 0
            for s in range(n - 1, -1, -1):
                col = legs[s].cols[g].get(J[s])
                if col:
                    for i, sh, m in col:
                        J2 = J[:s] + (i,) + J[s + 1:]
                        contrib.append(((c, J2), sh + suffix, m * p, legs[s].den[g]))
                suffix += ks[s]
        else:
            # K^-1 (x) .. (x) K^-1 (x) F (x) 1 (x) .. (x) 1
            prefix = 0
            for s in range(n):
                col = legs[s].cols[g].get(J[s])
                if col:
                    for i, sh, m in col:
                        J2 = J[:s] + (i,) + J[s + 1:]
                        contrib.append(((c, J2), sh - prefix, m * p, legs[s].den[g]))
                prefix += ks[s]
    if not contrib:
        return {}
    lo = min(x[1] for x in contrib)
    den = 1
    for x in contrib:
        den = lcm(den, x[3])
    out: dict = {}
    for key, sh, m, d in contrib:
        term = m * _tpow(sh - lo)
        if d != den:
            term = term * (den // d)
        prev = out.get(key)
        out[key] = term if prev is None else prev + term
    return {k: v for k, v in out.items() if v != 0}


def apply_k(copies: list, a: int, power: int, vec: dict) -> dict:
    """Apply ``K_a^power`` (diagonal) to ``vec``; the result is defined up to a power of ``t``."""
    shifts = {}
    for (c, J) in vec:
        legs = copies[c]
        shifts[(c, J)] = power * sum(legs[t].kexp[a][J[t]] for t in range(len(legs)))
    if not shifts:
        return {}
    lo = min(shifts.values())
    return {k: p * _tpow(shifts[k] - lo) for k, p in vec.items()}


class _Echelon:
    """Fraction-free echelon over ``Z[t]`` with content removal."""

    __slots__ = ("pivots", "rows")

    def __init__(self):
        self.pivots: list = []
        self.rows: list = []

    def reduce(self, row: dict) -> dict:
        r = row
        for key, b in zip(self.pivots, self.rows):
            v = r.get(key)
            if v is None:
                continue
            pb = b[key]
            g = pb.gcd(v)
            a = pb // g
            c = v // g
            out = {k: a * x for k, x in r.items()} if a != 1 else dict(r)
            for k, x in b.items():
                y = out.get(k)
                y = -c * x if y is None else y - c * x
                if y == 0:
                    out.pop(k, None)
                else:
                    out[k] = y
            r = _normalize(out) if out else out
            if not r:
                return r
        return r

    def add(self, row: dict) -> bool:
        r = self.reduce(row)
        if not r:
            return False
        key = None
        best = None
        for k, p in r.items():
            d = p.degree()
            if best is None or d < best or (d == best and k < key):
                key, best = k, d

        self.pivots.append(key)
        self.rows.append(r)
        return True

    def __len__(self) -> int:
        return len(self.rows)
