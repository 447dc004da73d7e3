"""Quantized coordinate ring elements as formal words of matrix coefficients.

An unstarred atom ``u[i,j]`` of a module ``V`` is the functional
``X -> pi(X)[i, j]``; a starred atom is ``u[i,j]* = S(u[j,i])``, the functional
``X -> pi(S(X))[j, i]``.  A word of atoms is a product in the coordinate ring,
evaluated through the iterated coproduct.  Indices are 0-based in the API and
rendered 1-based.

Equality is semantic.  :func:`equal_exact` decides it through a span closure
in the relevant tensor-product modules (see :mod:`artifact._closure`), and
:func:`equal_bounded` compares values on all generator words up to a given
length.  :func:`decide` tries the first and falls back to the second when the
closure exceeds its budget; the returned :class:`Verdict` records which oracle
answered.
"""

from __future__ import annotations

import itertools
import os
from math import lcm
from typing import NamedTuple

from .cartan import Weight
from .repbuild import E, F, Gen, K, Kinv, Rep, UqElement, antipode_expand, coproduct_iter, counit_word, pi
from .scalar import ONE, ZERO, Scalar, as_scalar, to_text
from ._closure import (
    BudgetExceeded,
    Closure,
    Leg,
    _Echelon,
    apply_gen,
    apply_k,
    exponent_lcm,
    from_poly,
    vector_from_scalars,
)
from ._linalg import SparseMatrix

__all__ = [
    "CoordAtom",
    "CoordElement",
    "BudgetExceeded",
    "Verdict",
    "u",
    "ustar",
    "counit",
    "act_left",
    "act_right",
    "sigma_twist",
    "theta",
    "evaluate",
    "left_weight",
    "right_weight",
    "equal_exact",
    "equal_bounded",
    "decide",
    "tensor_is_zero",
    "contract",
    "default_budget",
    "DEFAULT_D",
]

BUDGET_ENV = "ARTIFACT_EQ_BUDGET"
DEFAULT_BUDGET = 5000
DEFAULT_D = 4


def default_budget() -> int:
    """Closure-dimension budget; the environment variable overrides the default."""
    v = os.environ.get(BUDGET_ENV)
    return int(v) if v else DEFAULT_BUDGET


class CoordAtom(NamedTuple):
    rep: Rep
    i: int
    j: int
    star: bool = False

    def __str__(self) -> str:
        return f"u[{self.i + 1},{self.j + 1}]" + ("*" if self.star else "")

    def tagged(self) -> str:
        return f"{self.rep.label}:{self}"


def _check_atom(rep: Rep, i: int, j: int) -> None:
    if not (0 <= i < rep.dim and 0 <= j < rep.dim):
        raise IndexError(f"atom index ({i},{j}) out of range for {rep.label} (dim {rep.dim})")


class CoordElement:
    """Finite Scalar combination of words of atoms; the empty word is 1.

    ``==`` is structural (same words, same coefficients).  Use
    :func:`equal_exact` or :func:`decide` to compare functionals.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                c = as_scalar(c)
                if c:
                    w = tuple(w)
                    v = t.get(w, ZERO) + c
                    if v:
                        t[w] = v
                    else:
                        t.pop(w, None)
        self.terms = t

    @classmethod
    def one(cls) -> "CoordElement":
        return cls({(): ONE})

    @classmethod
    def const(cls, c) -> "CoordElement":
        return cls({(): as_scalar(c)})

    @classmethod
    def coerce(cls, x) -> "CoordElement":
        if isinstance(x, CoordElement):
            return x
        if isinstance(x, CoordAtom):
            return cls({(x,): ONE})
        return cls.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def scalar_part(self):
        """``c`` if the element is literally ``c * 1``, else ``None``."""
        if not self.terms:
            return ZERO
        if set(self.terms) == {()}:
            return self.terms[()]
        return None

    def reps(self) -> set:
        return {a.rep for w in self.terms for a in w}

    def __add__(self, other):
        other = CoordElement.coerce(other)
        return CoordElement(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return CoordElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-CoordElement.coerce(other))

    def __rsub__(self, other):
        return CoordElement.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (CoordElement, CoordAtom)):
            other = CoordElement.coerce(other)
            return CoordElement(
                [(w1 + w2, c1 * c2) for w1, c1 in self.terms.items() for w2, c2 in other.terms.items()]
            )
        c = as_scalar(other)
        return CoordElement({w: c * v for w, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, (CoordElement, CoordAtom)):
            return self.terms == CoordElement.coerce(other).terms
        try:
            return self.terms == CoordElement.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_text(self, tags: bool = False) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda kv: _word_key(kv[0])):
            body = "·".join(a.tagged() if tags else str(a) for a in w) or "1"
            if c == ONE:
                parts.append(body)
            elif c == -ONE:
                parts.append("-" + body)
            else:
                parts.append(f"{_paren(to_text(c))}·{body}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": to_text(c),
                    "word": [{"rep": a.rep.label, "i": a.i + 1, "j": a.j + 1, "star": a.star} for a in w],
                }
                for w, c in sorted(self.terms.items(), key=lambda kv: _word_key(kv[0]))
            ]
        }


def _paren(s: str) -> str:
    return f"({s})" if (" " in s or s.startswith("-")) else s


def _word_key(w) -> tuple:
    return (len(w), tuple((a.rep.label, a.star, a.i, a.j) for a in w))


def u(rep: Rep, i: int, j: int) -> CoordElement:
    _check_atom(rep, i, j)
    return CoordElement({(CoordAtom(rep, i, j, False),): ONE})


def ustar(rep: Rep, i: int, j: int) -> CoordElement:
    _check_atom(rep, i, j)
    return CoordElement({(CoordAtom(rep, i, j, True),): ONE})


# -- per-leg data ---------------------------------------------------------------

def _leg_gen(rep: Rep, star: bool, g: Gen) -> SparseMatrix:
    """Matrix of a generator on the leg: ``pi`` or ``pi*(X) = pi(S(X))^T``."""
    if not star:
        return rep.generator(g)
    key = ("star", g)
    m = rep._cache.get(key)
    if m is None:
        m = pi(rep, antipode_expand(g)).transpose()
        rep._cache[key] = m
    return m


def _leg_word(rep: Rep, star: bool, w: tuple) -> SparseMatrix:
    key = ("legword", star, w)
    m = rep._cache.get(key)
    if m is None:
        if not w:
            m = SparseMatrix.identity(rep.dim)
        elif len(w) == 1:
            m = _leg_gen(rep, star, w[0])
        else:
            m = _leg_word(rep, star, w[:-1]) @ _leg_gen(rep, star, w[-1])
        rep._cache[key] = m
    return m


def _leg_pairing(rep: Rep, star: bool, lam: Weight) -> tuple:
    p = rep.weight_pairing(lam)
    return tuple(-x for x in p) if star else p


def _signed_weight(rep: Rep, star: bool, i: int) -> tuple:
    w = rep.basis_weights[i].coords
    return tuple(-c for c in w) if star else w


# -- counit, actions, twists ------------------------------------------------------

def counit(e: CoordElement) -> Scalar:
    total = ZERO
    for w, c in CoordElement.coerce(e).terms.items():
        if all(a.i == a.j for a in w):
            total = total + c
    return total


def _act(X, e: CoordElement, side: str) -> CoordElement:
    x = UqElement.coerce(X)
    out: dict = {}
    for w, c in CoordElement.coerce(e).terms.items():
        L = len(w)
        if L == 0:
            s = sum((cx * counit_word(xw) for xw, cx in x.terms.items()), ZERO)
            if s:
                out[()] = out.get((), ZERO) + c * s
            continue
        for cx, legs in coproduct_iter(x, L):
            choices = []
            for a, lw in zip(w, legs):
                m = _leg_word(a.rep, a.star, lw)
                if side == "left":
                    # X |> u[i,j] = sum_k rho(X)[k,j] u[i,k]
                    col = m.cols().get(a.j, {})
                    choices.append([(v, CoordAtom(a.rep, a.i, k, a.star)) for k, v in col.items()])
                else:
                    # u[i,j] <| X = sum_k rho(X)[i,k] u[k,j]
                    row = m.rows.get(a.i, {})
                    choices.append([(v, CoordAtom(a.rep, k, a.j, a.star)) for k, v in row.items()])
            for combo in itertools.product(*choices):
                coef = c * cx
                for v, _ in combo:
                    coef = coef * v
                nw = tuple(at for _, at in combo)
                out[nw] = out.get(nw, ZERO) + coef
    return CoordElement(out)


def act_left(X, e: CoordElement) -> CoordElement:
    """``X |> e``, with ``(X |> phi)(Y) = phi(Y X)``."""
    return _act(X, e, "left")


def act_right(X, e: CoordElement) -> CoordElement:
    """``e <| X``, with ``(phi <| X)(Y) = phi(X Y)``."""
    return _act(X, e, "right")


def sigma_twist(lam: Weight, lam2: Weight, e: CoordElement) -> CoordElement:
    """``K_lam |> e <| K_lam2``; diagonal on words."""
    out = {}
    for w, c in CoordElement.coerce(e).terms.items():
        ex = 0
        for a in w:
            ex += _leg_pairing(a.rep, a.star, lam)[a.j] + _leg_pairing(a.rep, a.star, lam2)[a.i]
        out[w] = c * Scalar.monomial(ex) if ex else c
    return CoordElement(out)


def theta(e: CoordElement) -> CoordElement:
    rs = _root_system_of(e)
    if rs is None:
        return CoordElement.coerce(e)
    two_rho = Weight((2,) * rs.rank)
    return sigma_twist(two_rho, two_rho, e)


def _root_system_of(e: CoordElement):
    for w in e.terms:
        for a in w:
            return a.rep.rs
    return None


def left_weight(word: tuple) -> tuple:
    """Total left K-weight ``sum_t wt(j_t)`` of a word (fundamental coordinates)."""
    return _word_weight(word, lambda a: a.j)


def right_weight(word: tuple) -> tuple:
    return _word_weight(word, lambda a: a.i)


def _word_weight(word: tuple, idx) -> tuple:
    tot = None
    for a in word:
        w = _signed_weight(a.rep, a.star, idx(a))
        tot = w if tot is None else tuple(x + y for x, y in zip(tot, w))
    return tot if tot is not None else ()


# -- evaluation ---------------------------------------------------------------------

def evaluate(e: CoordElement, x) -> Scalar:
    """``e(x)`` for a generator, a word of generators or a UqElement."""
    x = UqElement.coerce(x)
    total = ZERO
    for w, c in CoordElement.coerce(e).terms.items():
        L = len(w)
        if L == 0:
            total = total + c * sum((cx * counit_word(xw) for xw, cx in x.terms.items()), ZERO)
            continue
        for cx, legs in coproduct_iter(x, L):
            v = c * cx
            for a, lw in zip(w, legs):
                v = v * _leg_word(a.rep, a.star, lw).get(a.i, a.j)
                if not v:
                    break
            total = total + v
    return total


def _alphabet(rank: int) -> list:
    out = []
    for a in range(1, rank + 1):
        out += [E(a), F(a), K(a), Kinv(a)]
    return out


def equal_bounded(a, b, D: int = DEFAULT_D) -> bool:
    """Do ``a`` and ``b`` agree on every generator word of length at most ``D``?

    A ``False`` answer is definitive; ``True`` is evidence only.
    """
    if D < 0:
        raise ValueError("D must be >= 0")
    d = CoordElement.coerce(a) - CoordElement.coerce(b)
    if d.is_zero():
        return True
    rs = _root_system_of(d)
    alphabet = _alphabet(rs.rank) if rs is not None else []
    for n in range(D + 1):
        for w in itertools.product(alphabet, repeat=n):
            if evaluate(d, w):
                return False
    return True


# -- the closure oracle ----------------------------------------------------------------

class Verdict(NamedTuple):
    equal: bool
    oracle: str  # "exact" or "bounded-D"

    def __bool__(self) -> bool:
        return self.equal


def _rep_L(rep: Rep) -> int:
    key = "exp_lcm"
    v = rep._cache.get(key)
    if v is None:
        vals = []
        for m in rep.E_mats + rep.F_mats:
            for r in m.rows.values():
                vals.extend(r.values())
        v = exponent_lcm(vals)
        for a in range(1, rep.rs.rank + 1):
            for e in rep.weight_pairing(rep.rs.alpha(a)):
                v = lcm(v, e.denominator)
        rep._cache[key] = v
    return v


def _flint_leg(rep: Rep, star: bool, transpose: bool, L: int) -> Leg:
    key = ("flintleg", star, transpose, L)
    leg = rep._cache.get(key)
    if leg is None:
        if rep.depth_limit is not None:
            raise ValueError(f"{rep.label} is a truncated slice, not a module; exact equality is unavailable")
        rank = rep.rs.rank
        mats = {}
        for a in range(1, rank + 1):
            for kind, g in (("E", E(a)), ("F", F(a))):
                m = _leg_gen(rep, star, g)
                mats[(kind, a)] = m.transpose() if transpose else m
        kexp = {a: [int(x * L) for x in _leg_pairing(rep, star, rep.rs.alpha(a))] for a in range(1, rank + 1)}
        weights = [_signed_weight(rep, star, i) for i in range(rep.dim)]
        leg = Leg(rep.dim, weights, kexp, mats, L)
        rep._cache[key] = leg
    return leg


class _Problem:
    """Direct sum of tensor-product modules indexed by copies, one per group of words."""

    def __init__(self, words: list, orientation: str, L: int, group_by_start: bool):
        # words: list of atom tuples
        self.orientation = orientation
        self.L = L
        self.copies: list = []
        self.copy_index: dict = {}
        self.rank = None
        for w in words:
            for a in w:
                self.rank = a.rep.rs.rank
                break
            if self.rank is not None:
                break
        self.rank = self.rank or 0
        self.group_by_start = group_by_start

    def split(self, w: tuple) -> tuple:
        """(start multi-index, read multi-index) for a word in this orientation."""
        I = tuple(a.i for a in w)
        J = tuple(a.j for a in w)
        return (J, I) if self.orientation == "C" else (I, J)

    def copy_for(self, w: tuple, group_key) -> int:
        sig = tuple((a.rep, a.star) for a in w)
        key = (sig, group_key)
        c = self.copy_index.get(key)
        if c is None:
            c = len(self.copies)
            self.copy_index[key] = c
            tr = self.orientation == "R"
            self.copies.append(tuple(_flint_leg(a.rep, a.star, tr, self.L) for a in w))
        return c

    def weight_of(self, key) -> tuple:
        c, J = key
        legs = self.copies[c]
        tot = [0] * self.rank
        for t, leg in enumerate(legs):
            for k, x in enumerate(leg.weights[J[t]]):
                tot[k] += x
        return tuple(tot)

    def gens(self) -> list:
        return [(k, a) for a in range(1, self.rank + 1) for k in ("E", "F")]


def _common_L(words, coeffs=()) -> int:
    L = exponent_lcm(coeffs)
    for w in words:
        for a in w:
            L = lcm(L, _rep_L(a.rep))
    return L


def _equality_closure(d: CoordElement, orientation: str, budget: int) -> Closure:
    L = _common_L(d.terms, d.terms.values())
    pb = _Problem(list(d.terms), orientation, L, group_by_start=False)
    start: dict = {}
    functional: list = []
    for w, c in d.terms.items():
        s, r = pb.split(w)
        cidx = pb.copy_for(w, r)
        if cidx == len(functional):
            functional.append(r)
        start[(cidx, s)] = start.get((cidx, s), ZERO) + c
    vec = vector_from_scalars(start, L)
    return Closure(pb.copies, pb.gens(), pb.weight_of, [vec], budget, functional=functional)


def _dovetail(factories: list):
    """Step several closures alternately; return the first that finishes."""
    active = []
    exceeded = None
    for f in factories:
        try:
            cl = f()
        except BudgetExceeded as exc:
            exceeded = exc
            continue
        if cl.violated:
            return cl
        active.append(cl)
    while active:
        for cl in list(active):
            try:
                more = cl.step()
            except BudgetExceeded as exc:
                exceeded = exc
                active.remove(cl)
                continue
            if not more:
                return cl
    raise exceeded or BudgetExceeded("no closure finished")


def equal_exact(a, b, budget: int | None = None, rewrite: bool = True) -> bool:
    """Decide ``a == b`` as functionals on ``U_q(g)``.

    With ``rewrite`` the difference is first reduced by :func:`contract`; the
    module closure then runs on what remains.  Raises :class:`BudgetExceeded`
    if every closure grows beyond ``budget`` vectors; callers then fall back
    to :func:`equal_bounded`.
    """
    d = CoordElement.coerce(a) - CoordElement.coerce(b)
    if d.is_zero():
        return True
    if rewrite:
        d = CoordElement({k[0]: c for k, c in contract({(w,): c for w, c in d.terms.items()}).items()})
        if d.is_zero():
            return True
    if set(d.terms) == {()}:
        return False
    budget = default_budget() if budget is None else budget
    cl = _dovetail([lambda: _equality_closure(d, "C", budget), lambda: _equality_closure(d, "R", budget)])
    return not cl.violated


def decide(a, b, budget: int | None = None, D: int = DEFAULT_D) -> Verdict:
    """:func:`equal_exact` with automatic fallback to :func:`equal_bounded`."""
    try:
        return Verdict(equal_exact(a, b, budget), "exact")
    except BudgetExceeded:
        return Verdict(equal_bounded(a, b, D), f"bounded-{D}")


# -- tensors of coordinate-ring elements -------------------------------------------------

def _expand(terms) -> dict:
    """Multilinear expansion of ``[(coeff, (e_0, .., e_n))]`` into word tuples."""
    out: dict = {}
    for c, slots in terms:
        c = as_scalar(c)
        if not c:
            continue
        acc = {(): c}
        for e in slots:
            e = CoordElement.coerce(e)
            acc = {k + (w,): v * x for k, v in acc.items() for w, x in e.terms.items()}
        for k, v in acc.items():
            nv = out.get(k, ZERO) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


def _separation_closure(words: list, orientation: str, budget: int, L: int):
    pb = _Problem(words, orientation, L, group_by_start=True)
    starts = {}
    read = {}
    for w in words:
        s, r = pb.split(w)
        cidx = pb.copy_for(w, s)
        read[w] = (cidx, r)
        starts[(cidx, s)] = None
    # one cyclic vector: word w is X -> Lambda_w(rho(X) x) with x the sum of all starts
    vecs = [vector_from_scalars(dict.fromkeys(starts, ONE), L)]
    cl = Closure(pb.copies, pb.gens(), pb.weight_of, vecs, budget)
    cl.read = read
    return cl


def _bounded_vectors(words: list, D: int, L: int):
    """Vectors ``rho(w) x`` for all generator words ``|w| <= D`` (column orientation)."""
    pb = _Problem(words, "C", L, group_by_start=True)
    read = {}
    start = {}
    for w in words:
        s, r = pb.split(w)
        cidx = pb.copy_for(w, s)
        read[w] = (cidx, r)
        start[(cidx, s)] = ONE
    x = vector_from_scalars(start, L)
    level = [x]
    out = [x]
    for _ in range(D):
        nxt = []
        for v in level:
            for a in range(1, pb.rank + 1):
                for kind in ("E", "F"):
                    img = apply_gen(pb.copies, (kind, a), v)
                    nxt.append(img)
                nxt.append(apply_k(pb.copies, a, 1, v))
                nxt.append(apply_k(pb.copies, a, -1, v))
        level = [v for v in nxt if v]
        out.extend(level)
    return out, read


def _separate(words: list, budget: int, D: int):
    """Module vectors whose coordinate readings span all readings; returns (vectors, read, L, oracle)."""
    L = _common_L(words)
    try:
        cl = _dovetail([
            lambda: _separation_closure(words, "C", budget, L),
            lambda: _separation_closure(words, "R", budget, L),
        ])
        return cl.basis, cl.read, L, "exact"
    except BudgetExceeded:
        vecs, read = _bounded_vectors(words, D, L)
        return vecs, read, L, f"bounded-{D}"


def tensor_is_zero(terms, budget: int | None = None, D: int = DEFAULT_D) -> Verdict:
    """Is ``sum c * e_0 (x) ... (x) e_n`` zero in the tensor power of the coordinate ring?"""
    budget = default_budget() if budget is None else budget
    terms = [(as_scalar(c), tuple(CoordElement.coerce(e) for e in s)) for c, s in terms]
    expanded = contract(_expand(terms))
    if not expanded:
        return Verdict(True, "exact")
    return _tensor_zero(expanded, budget, D)


def _contraction_sites(key: tuple):
    """Yield ``(site, summed index)`` for each adjacent atom pair of a contractible shape.

    The shapes are the antipode relations ``sum_l u[i,l] u[j,l]* = delta_ij`` and
    ``sum_l u[l,i]* u[l,j] = delta_ij``; ``site`` identifies the group of words
    that differ only in the summed index ``l``.
    """
    for s, w in enumerate(key):
        for p in range(len(w) - 1):
            a, b = w[p], w[p + 1]
            if a.rep is not b.rep or a.star == b.star:
                continue
            if not a.star and a.j == b.j:
                yield (s, p, a.rep, False, a.i, b.i), a.j
            elif a.star and a.i == b.i:
                yield (s, p, a.rep, True, a.j, b.j), a.i


def contract(expanded: dict) -> dict:
    """Rewrite a multilinear expansion with the antipode relations until none applies.

    Every rewrite is an identity in the coordinate ring, so an empty result
    proves the tensor is zero.  A nonempty result is merely reduced.
    """
    cur = dict(expanded)
    while True:
        groups: dict = {}
        for key, c in cur.items():
            for (s, p, rep, starred, x, y), l in _contraction_sites(key):
                rest = key[:s] + (key[s][:p] + key[s][p + 2:],) + key[s + 1:]
                groups.setdefault((s, p, rep, starred, x, y, rest), {})[l] = (key, c)
        used: set = set()
        changed = False
        for (s, p, rep, starred, x, y, rest), members in groups.items():
            if len(members) != rep.dim:
                continue
            keys = [k for k, _ in members.values()]
            coeffs = {c for _, c in members.values()}
            if len(coeffs) != 1 or any(k in used for k in keys) or rest in used:
                continue
            used.update(keys)
            used.add(rest)
            changed = True
            c = coeffs.pop()
            for k in keys:
                del cur[k]
            if x == y:
                v = cur.get(rest, ZERO) + c
                if v:
                    cur[rest] = v
                else:
                    cur.pop(rest, None)
        if not changed:
            return cur


def _tensor_zero(expanded: dict, budget: int, D: int) -> Verdict:
    """Contract the tensor, slot by slot from the right, against module-basis readings.

    For each slot position the words occurring there are coordinate functionals
    on one cyclic module; a basis of that module gives readings that separate
    the span of those words.  The tensor vanishes iff every full contraction does.
    """
    if not expanded:
        return Verdict(True, "exact")
    n = len(next(iter(expanded)))
    oracle = "exact"
    readings = []
    for pos in range(n):
        words = sorted({k[pos] for k in expanded}, key=_word_key)
        vecs, read, L, orc = _separate(words, budget, D)
        if orc != "exact":
            oracle = orc
        rows = []
        for y in vecs:
            r = {}
            for w in words:
                p = y.get(read[w])
                if p is not None:
                    r[w] = from_poly(p, L)
            if r:
                rows.append(r)
        readings.append(rows)
    chains = [expanded]
    for pos in range(n - 1, -1, -1):
        produced = []
        ech = _Echelon()
        keys: dict = {}
        for ch in chains:
            by_prefix: dict = {}
            for k, v in ch.items():
                by_prefix.setdefault(k[:-1], []).append((k[-1], v))
            for r in readings[pos]:
                red = {}
                for pre, items in by_prefix.items():
                    val = ZERO
                    for w, c in items:
                        x = r.get(w)
                        if x is not None:
                            val = val + c * x
                    if val:
                        red[pre] = val
                if not red:
                    continue
                if pos == 0:
                    return Verdict(False, oracle)
                idx = {keys.setdefault(pre, len(keys)): v for pre, v in red.items()}
                if ech.add(vector_from_scalars(idx, exponent_lcm(idx.values()))):
                    produced.append(red)
        chains = produced
        if not chains:
            break
    return Verdict(True, oracle)
