"""Finite-dimensional irreducible U_q(g)-modules and words in the generators.

Hopf structure used throughout::

    K_i E_j K_i^-1 = q_i^{a_ij} E_j        K_i F_j K_i^-1 = q_i^{-a_ij} F_j
    [E_i, F_j] = delta_ij (K_i - K_i^-1) / (q_i - q_i^-1)
    Delta(E_i) = E_i (x) K_i + 1 (x) E_i   Delta(F_i) = F_i (x) 1 + K_i^-1 (x) F_i
    S(E_i) = -E_i K_i^-1                   S(F_i) = -K_i F_i
    S^-1(E_i) = -K_i^-1 E_i                S^-1(F_i) = -F_i K_i

``K_lambda`` acts on a vector of weight ``mu`` by ``q^{(lambda, mu)}`` and
``K_i = K_{alpha_i}``.

The irreducible module ``V(Lambda)`` is realised on the lattice
``U^-_{Laurent} v_Lambda``: each weight space is spanned by vectors ``F_i b``
with ``b`` already constructed, and a basis is extracted by echelon reduction over
``Q[q, q^-1]`` of their images under the raising operators.  All generator
matrices therefore have Laurent-polynomial entries.  The basis is weight
homogeneous; the Shapovalov form is recorded per weight space.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence, Union

from ._linalg import ModEchelon, SparseMatrix, bareiss_det, express, lattice_echelon, specialize
from .cartan import RootSystem, Weight, bilinear, root_system, two_rho, weyl_dim
from .scalar import ONE, ZERO, Scalar, as_scalar, qnum, to_text

__all__ = [
    "Gen",
    "E",
    "F",
    "K",
    "Kinv",
    "Kw",
    "UqElement",
    "Rep",
    "RepBuildError",
    "build_irrep",
    "fundamental_slN",
    "pi",
    "antipode_expand",
    "antipode_inv_expand",
    "coproduct_iter",
    "counit_word",
    "relation_checks",
    "qbinom",
]


_log = logging.getLogger(__name__)


class RepBuildError(RuntimeError):
    """Raised when a constructed module fails an internal consistency check."""


# -- generators, words, elements ---------------------------------------------

class Gen(NamedTuple):
    """A generator letter: kind is ``"E"``, ``"F"``, ``"K"``, ``"Ki"`` (index a) or ``"Kw"`` (weight)."""

    kind: str
    index: object

    def __str__(self) -> str:
        if self.kind == "Ki":
            return f"K{self.index}^-1"
        if self.kind == "Kw":
            return f"K[{self.index}]"
        return f"{self.kind}{self.index}"


def E(a: int) -> Gen:
    return Gen("E", a)


def F(a: int) -> Gen:
    return Gen("F", a)


def K(a: int) -> Gen:
    return Gen("K", a)


def Kinv(a: int) -> Gen:
    return Gen("Ki", a)


def Kw(lam: Weight) -> Gen:
    """``K_lambda`` for an arbitrary weight."""
    return Gen("Kw", lam)


Word = tuple  # tuple of Gen


class UqElement:
    """Scalar-linear combination of words in the generators."""

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
    def coerce(cls, x) -> "UqElement":
        if isinstance(x, UqElement):
            return x
        if isinstance(x, Gen):
            return cls({(x,): ONE})
        if isinstance(x, tuple):
            return cls({x: ONE})
        return cls({(): as_scalar(x)})

    @classmethod
    def one(cls) -> "UqElement":
        return cls({(): ONE})

    def __add__(self, other):
        other = UqElement.coerce(other)
        return UqElement(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return UqElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-UqElement.coerce(other))

    def __rsub__(self, other):
        return UqElement.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (UqElement, Gen, tuple)):
            c = as_scalar(other)
            return UqElement({w: c * v for w, v in self.terms.items()})
        other = UqElement.coerce(other)
        out = []
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.append((w1 + w2, c1 * c2))
        return UqElement(out)

    def __rmul__(self, other):
        if isinstance(other, (Gen, tuple)):
            return UqElement.coerce(other) * self
        return self * other

    def __eq__(self, other):
        try:
            other = UqElement.coerce(other)
        except Exception:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.terms.items():
            body = "*".join(str(g) for g in w) or "1"
            parts.append(f"({to_text(c)})*{body}" if w else f"({to_text(c)})")
        return " + ".join(parts)

    __repr__ = __str__


def _lift(x) -> UqElement:
    return UqElement.coerce(x)


def _antipode_letter(g: Gen) -> list:
    k, a = g
    if k == "E":
        return [(-ONE, (E(a), Kinv(a)))]
    if k == "F":
        return [(-ONE, (K(a), F(a)))]
    if k == "K":
        return [(ONE, (Kinv(a),))]
    if k == "Ki":
        return [(ONE, (K(a),))]
    return [(ONE, (Kw(-a),))]


def _antipode_inv_letter(g: Gen) -> list:
    k, a = g
    if k == "E":
        return [(-ONE, (Kinv(a), E(a)))]
    if k == "F":
        return [(-ONE, (F(a), K(a)))]
    return _antipode_letter(g)


def _anti_expand(x, letter_rule) -> UqElement:
    out = UqElement()
    for w, c in _lift(x).terms.items():
        acc = [(c, ())]
        for g in reversed(w):
            acc = [(c1 * c2, w1 + w2) for c1, w1 in acc for c2, w2 in letter_rule(g)]
        out = out + UqElement([(w1, c1) for c1, w1 in acc])
    return out


def antipode_expand(x) -> UqElement:
    """``S(x)``: reverse each word and substitute the antipode of each letter."""
    return _anti_expand(x, _antipode_letter)


def antipode_inv_expand(x) -> UqElement:
    """``S^-1(x)``."""
    return _anti_expand(x, _antipode_inv_letter)


def counit_word(w: Sequence[Gen]) -> Scalar:
    return ZERO if any(g.kind in ("E", "F") for g in w) else ONE


def _coproduct_letter(g: Gen, k: int) -> list:
    kind, a = g
    if kind == "E":
        return [(ONE, tuple(() if t < s else ((E(a),) if t == s else (K(a),)) for t in range(k))) for s in range(k)]
    if kind == "F":
        return [(ONE, tuple((Kinv(a),) if t < s else ((F(a),) if t == s else ()) for t in range(k))) for s in range(k)]
    return [(ONE, tuple((g,) for _ in range(k)))]


def coproduct_iter(x, k: int) -> list:
    """The ``(k-1)``-fold coproduct as a merged list of ``(Scalar, k-tuple of words)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    total: dict = {}
    for w, c in _lift(x).terms.items():
        acc = {tuple(() for _ in range(k)): c}
        for g in w:
            nxt: dict = {}
            for legs, c1 in acc.items():
                for c2, add in _coproduct_letter(g, k):
                    key = tuple(l + m for l, m in zip(legs, add))
                    nxt[key] = nxt.get(key, ZERO) + c1 * c2
            acc = {key: v for key, v in nxt.items() if v}
        for key, v in acc.items():
            total[key] = total.get(key, ZERO) + v
    return [(v, key) for key, v in total.items() if v]


# -- representations ------------------------------------------------------------

@dataclass(eq=False)
class Rep:
    """A finite-dimensional weight module with generator matrices over ``Q[q^(+-1/L)]``."""

    rs: RootSystem
    highest_weight: Weight
    dim: int
    basis_weights: tuple
    E_mats: tuple
    F_mats: tuple
    norm_diag: tuple
    orthonormal_flag: bool
    label: str = ""
    gram: dict = field(default_factory=dict, repr=False)
    depths: tuple = ()
    depth_limit: int | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.label:
            self.label = f"{self.rs.name}({self.highest_weight})"

    def __repr__(self) -> str:
        return f"Rep({self.label}, dim={self.dim})"

    def weight_pairing(self, lam: Weight) -> tuple:
        """``((lam, lambda_i))_i`` as exact rationals."""
        key = ("pair", lam)
        v = self._cache.get(key)
        if v is None:
            v = tuple(bilinear(self.rs, lam, mu) for mu in self.basis_weights)
            self._cache[key] = v
        return v

    def K_diag(self, lam: Weight, power: int = 1) -> list:
        return [Scalar.monomial(power * e) for e in self.weight_pairing(lam)]

    def K_matrix(self, lam: Weight, power: int = 1) -> SparseMatrix:
        return SparseMatrix.diag(self.K_diag(lam, power))

    def generator(self, g: Gen) -> SparseMatrix:
        m = self._cache.get(g)
        if m is None:
            kind, a = g
            if kind == "E":
                m = self.E_mats[a - 1]
            elif kind == "F":
                m = self.F_mats[a - 1]
            elif kind == "K":
                m = self.K_matrix(self.rs.alpha(a))
            elif kind == "Ki":
                m = self.K_matrix(self.rs.alpha(a), -1)
            elif kind == "Kw":
                m = self.K_matrix(a)
            else:
                raise ValueError(f"unknown generator {g!r}")
            self._cache[g] = m
        return m

    def weight_multiplicities(self) -> dict:
        out: dict = {}
        for w in self.basis_weights:
            out[w] = out.get(w, 0) + 1
        return out

    def indices_of_weight(self, w: Weight) -> list:
        return [i for i, mu in enumerate(self.basis_weights) if mu == w]


def pi(rep: Rep, x) -> SparseMatrix:
    """Matrix of ``x`` (a Gen, a word or a UqElement) acting on ``rep``."""
    total = SparseMatrix.zero(rep.dim)
    for w, c in _lift(x).terms.items():
        m = SparseMatrix.identity(rep.dim)
        for g in w:
            m = m @ rep.generator(g)
        total = total + (m if c == ONE else m.scale(c))
    return total


def qbinom(n: int, k: int, d: int = 1) -> Scalar:
    """Gaussian binomial in ``q^d``."""
    if k < 0 or k > n:
        return ZERO
    num = ONE
    den = ONE
    for t in range(k):
        num = num * qnum(n - t, d)
        den = den * qnum(t + 1, d)
    return num.divexact(den)


def relation_checks(rep: Rep) -> dict:
    """Defining relations, Serre relations and ``S^2 = Ad(K_2rho)`` as exact matrix identities."""
    rs = rep.rs
    r = rs.rank
    a = rs.cartan_matrix
    ok = {"KE": True, "KF": True, "EF": True, "serre_E": True, "serre_F": True, "S2": True, "weights": True}
    for i in range(1, r + 1):
        Ki, Kii = pi(rep, K(i)), pi(rep, Kinv(i))
        if not (Ki @ Kii) == SparseMatrix.identity(rep.dim):
            ok["KE"] = False
        qi = rs.d(i)
        for j in range(1, r + 1):
            Ej, Fj = pi(rep, E(j)), pi(rep, F(j))
            e = a[i - 1][j - 1] * qi
            if not (Ki @ Ej @ Kii) == Ej.scale(Scalar.monomial(e)):
                ok["KE"] = False
            if not (Ki @ Fj @ Kii) == Fj.scale(Scalar.monomial(-e)):
                ok["KF"] = False
            comm = pi(rep, E(i)) @ Fj - Fj @ pi(rep, E(i))
            if i == j:
                rhs = Ki - Kii
                den = Scalar.monomial(qi) - Scalar.monomial(-qi)
                rhs = SparseMatrix(rep.dim, rep.dim, {x: {y: v.divexact(den) for y, v in row.items()} for x, row in rhs.rows.items()})
            else:
                rhs = SparseMatrix.zero(rep.dim)
            if comm != rhs:
                ok["EF"] = False
            if i != j:
                n = 1 - a[i - 1][j - 1]
                for kind, key in (("E", "serre_E"), ("F", "serre_F")):
                    Xi = pi(rep, Gen(kind, i))
                    Xj = pi(rep, Gen(kind, j))
                    total = SparseMatrix.zero(rep.dim)
                    for k in range(n + 1):
                        term = _mpow(Xi, n - k, rep.dim) @ Xj @ _mpow(Xi, k, rep.dim)
                        c = qbinom(n, k, qi) * (-1) ** k
                        total = total + term.scale(c)
                    if not total.is_zero():
                        ok[key] = False
        for g in (E(i), F(i), K(i)):
            lhs = pi(rep, antipode_expand(antipode_expand(g)))
            k2 = rep.K_matrix(two_rho(rs))
            k2i = rep.K_matrix(two_rho(rs), -1)
            if lhs != k2 @ pi(rep, g) @ k2i:
                ok["S2"] = False
            if pi(rep, antipode_expand(antipode_inv_expand(g))) != pi(rep, g):
                ok["S2"] = False
        for g, sh in ((E(i), rs.alpha(i)), (F(i), -rs.alpha(i))):
            for row, cols in pi(rep, g).rows.items():
                for col in cols:
                    if rep.basis_weights[row] != rep.basis_weights[col] + sh:
                        ok["weights"] = False
    return ok


def _mpow(m: SparseMatrix, k: int, n: int) -> SparseMatrix:
    out = SparseMatrix.identity(n)
    for _ in range(k):
        out = out @ m
    return out


# -- construction ---------------------------------------------------------------

def build_irrep(rs: Union[RootSystem, str], lam: Union[Weight, Sequence[int]], max_depth: int | None = None) -> Rep:
    """Construct ``V(lam)``; results are cached so equal inputs share one handle.

    With ``max_depth`` only the weight spaces ``lam - beta`` with ``height(beta) <= max_depth``
    are built.  Such a top slice is stable under every ``E_i`` but not under ``F_i``:
    a matrix entry of a word is exact as long as no path through the word leaves
    the slice.  ``Rep.depth_limit`` records the truncation.
    """
    if isinstance(rs, str):
        rs = root_system(rs)
    if not isinstance(lam, Weight):
        lam = rs.weight(lam)
    if len(lam) != rs.rank:
        raise ValueError("rank mismatch")
    if not lam.is_dominant():
        raise ValueError(f"highest weight {lam} is not dominant")
    if max_depth is not None and max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    return _build(rs, lam, max_depth)


@lru_cache(maxsize=None)
def _build(rs: RootSystem, lam: Weight, max_depth) -> Rep:
    r = rs.rank
    alphas = [rs.alpha(i) for i in range(1, r + 1)]
    coroot = lambda i, mu: mu.coords[i - 1]  # <alpha_i^vee, mu>

    weights: list = [lam]
    by_weight: dict = {lam: [0]}
    Ecol = [dict() for _ in range(r + 1)]  # Ecol[j][src] = {tgt: coeff}
    Fcol = [dict() for _ in range(r + 1)]
    gram: dict = {lam: {(0, 0): ONE}}

    depths = [0]
    level = [lam]
    depth = 0
    while level:
        depth += 1
        if max_depth is not None and depth > max_depth:
            break
        nxt = []
        seen = set()
        for nu in level:
            for i in range(1, r + 1):
                mu = nu - alphas[i - 1]
                if mu not in seen and mu not in by_weight:
                    seen.add(mu)
                    nxt.append(mu)
        level = []
        for mu in nxt:
            cands = []
            for i in range(1, r + 1):
                up = mu + alphas[i - 1]
                for b in by_weight.get(up, ()):
                    cands.append((i, b))
            if not cands:
                continue
            imgs = []
            for i, b in cands:
                img: dict = {}
                up = mu + alphas[i - 1]
                for j in range(1, r + 1):
                    for tgt, c in Ecol[j].get(b, {}).items():
                        for s, c2 in Fcol[i].get(tgt, {}).items():
                            key = (j, s)
                            img[key] = img.get(key, ZERO) + c * c2
                    if j == i:
                        key = (j, b)
                        img[key] = img.get(key, ZERO) + qnum(coroot(i, up), rs.d(i))
                imgs.append({k: v for k, v in img.items() if v})
            ech = ModEchelon()
            chosen = [t for t, img in enumerate(imgs) if ech.add({k: specialize(v, _SPEC_Q) for k, v in img.items()})]
            if not chosen:
                continue
            chosen, det, nums, laurent = _exchange_basis(imgs, chosen)
            if laurent:
                prov = [{t: ONE} for t in chosen]
                coords = [[x.divexact(det) for x in row] for row in nums]
            else:
                _log.info("lattice fallback at weight %s of %s(%s) det=%s nums=%s", mu, rs.name, lam, det, nums)
                m = len(chosen)
                ckeys = [("c", n) for n in range(m)]
                rows = []
                for t, row in enumerate(nums):
                    rr = {("c", n): x for n, x in enumerate(row) if x}
                    rr[("tag", t)] = ONE
                    rows.append(rr)
                hnf = lattice_echelon(rows, ckeys)
                if len(hnf) != m:
                    raise RepBuildError(f"lattice rank mismatch at weight {mu}")
                prov = []
                hb = []
                for key, row in hnf:
                    tags = {k[1]: v for k, v in row.items() if k[0] == "tag"}
                    crow = {k: v for k, v in row.items() if k[0] == "c"}
                    if len(tags) == 1:
                        (t0, v0), = tags.items()
                        if v0.is_monomial() and v0 != ONE:
                            inv = ONE / v0
                            tags = {t0: ONE}
                            crow = {k: inv * v for k, v in crow.items()}
                    prov.append(tags)
                    hb.append((key, crow))
                coords = [express(hb, {("c", n): x for n, x in enumerate(row) if x}) for row in nums]
            new_ids = []
            for p in prov:
                idx = len(weights)
                weights.append(mu)
                depths.append(depth)
                new_ids.append(idx)
                img: dict = {}
                for t, a in p.items():
                    for key, v in imgs[t].items():
                        img[key] = img.get(key, ZERO) + a * v
                for (j, s), v in img.items():
                    if v:
                        Ecol[j].setdefault(idx, {})[s] = v
            by_weight[mu] = new_ids
            for t, (i, b) in enumerate(cands):
                col = {new_ids[n]: c for n, c in enumerate(coords[t]) if c}
                if col:
                    Fcol[i][b] = col
            # contravariant form: <F_i b, y> = <b, E_i y>
            g: dict = {}
            for n1, p in enumerate(prov):
                for n2, y in enumerate(new_ids):
                    total = ZERO
                    for t, a in p.items():
                        i, b = cands[t]
                        up = mu + alphas[i - 1]
                        gup = gram[up]
                        pos = {v: n for n, v in enumerate(by_weight[up])}
                        for s_, c in Ecol[i].get(y, {}).items():
                            gv = gup.get((pos[b], pos[s_]))
                            if gv:
                                total = total + a * c * gv
                    if total:
                        g[(n1, n2)] = total
            gram[mu] = g
            level.append(mu)

    dim = len(weights)
    expected = weyl_dim(rs, lam)
    if max_depth is None and dim != expected:
        raise RepBuildError(f"built dimension {dim} != Weyl dimension {expected} for {rs.name}({lam})")
    E_mats = []
    F_mats = []
    for j in range(1, r + 1):
        E_mats.append(_from_cols(dim, Ecol[j]))
        F_mats.append(_from_cols(dim, Fcol[j]))
    norm_of = {}
    for mu, ids in by_weight.items():
        for n, idx in enumerate(ids):
            norm_of[idx] = gram[mu].get((n, n), ZERO)
    for mu, g in gram.items():
        m = len(by_weight[mu])
        for a_ in range(m):
            for b_ in range(m):
                if g.get((a_, b_), ZERO) != g.get((b_, a_), ZERO):
                    raise RepBuildError(f"contravariant form not symmetric at weight {mu}")
        if _det_at(g, m, Fraction(2)) == 0 and _det_at(g, m, Fraction(3)) == 0:
            raise RepBuildError(f"contravariant form degenerate at weight {mu}")
    return Rep(
        rs=rs,
        highest_weight=lam,
        dim=dim,
        basis_weights=tuple(weights),
        E_mats=tuple(E_mats),
        F_mats=tuple(F_mats),
        norm_diag=tuple(norm_of[i] for i in range(dim)),
        orthonormal_flag=False,
        gram={mu: dict(g) for mu, g in gram.items()},
        depths=tuple(depths),
        depth_limit=max_depth,
        label=f"{rs.name}({lam})" + (f"[depth<={max_depth}]" if max_depth is not None else ""),
    )


_SPEC_Q = 1234567891


def _cramer(imgs: list, chosen: list) -> tuple:
    keys = _pivot_columns([imgs[t] for t in chosen])
    amat = [[imgs[t].get(k, ZERO) for t in chosen] for k in keys]
    det = bareiss_det(amat)
    nums = []
    for t in range(len(imgs)):
        if t in chosen:
            nums.append([det if t == u else ZERO for u in chosen])
            continue
        rhs = [imgs[t].get(k, ZERO) for k in keys]
        nums.append([bareiss_det([a[:n] + [rhs[k]] + a[n + 1:] for k, a in enumerate(amat)]) for n in range(len(chosen))])
    return det, nums


def _exchange_basis(imgs: list, chosen: list) -> tuple:
    """Swap candidates into the basis while that shrinks the determinant.

    Replacing basis vector ``n`` by candidate ``t`` turns the determinant into the
    Cramer numerator ``nums[t][n]``.  When every coordinate is Laurent the chosen
    candidates span the Laurent lattice.
    """
    chosen = list(chosen)
    while True:
        det, nums = _cramer(imgs, chosen)
        if all(det.divides(x) for row in nums for x in row if x):
            return chosen, det, nums, True
        best = None
        for t, row in enumerate(nums):
            if t in chosen:
                continue
            for n, x in enumerate(row):
                if x and x.span() < det.span() and (best is None or x.span() < best[0]):
                    best = (x.span(), t, n)
        if best is None:
            return chosen, det, nums, False
        _, t, n = best
        chosen[n] = t
        chosen.sort()


def _pivot_columns(rows: list) -> list:
    """Keys on which the rows, specialized at a random point, are independent."""
    keys = sorted({k for r in rows for k in r})
    cols = ModEchelon()
    picked = []
    for k in keys:
        if cols.add({n: specialize(r.get(k, ZERO), _SPEC_Q) for n, r in enumerate(rows)}):
            picked.append(k)
            if len(picked) == len(rows):
                break
    return picked


def _from_cols(dim: int, cols: dict) -> SparseMatrix:
    rows: dict = {}
    for src, col in cols.items():
        for tgt, v in col.items():
            rows.setdefault(tgt, {})[src] = v
    return SparseMatrix(dim, dim, rows)


def _det_at(g: dict, m: int, x: Fraction) -> Fraction:
    a = [[g.get((i, j), ZERO).at(x) for j in range(m)] for i in range(m)]
    det = Fraction(1)
    for c in range(m):
        p = next((r for r in range(c, m) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, m):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [u - f * v for u, v in zip(a[r], a[c])]
    return det


@lru_cache(maxsize=None)
def fundamental_slN(N: int) -> Rep:
    """Orthonormal vector representation of ``U_q(sl_N)`` on ``C^N``.

    ``E_k v_i = delta_{i,k+1} q^{-1/2} v_{i-1}``, ``F_k v_i = delta_{i,k} q^{1/2} v_{i+1}``,
    ``K_k v_i = q^{delta_{ik} - delta_{i,k+1}} v_i``.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    rs = root_system(f"A{N - 1}")
    r = N - 1
    half = Fraction(1, 2)
    weights = tuple(Weight.fundamental(r, m) - Weight.fundamental(r, m - 1) for m in range(1, N + 1))
    E_mats = tuple(SparseMatrix(N, N, {k - 1: {k: Scalar.monomial(-half)}}) for k in range(1, N))
    F_mats = tuple(SparseMatrix(N, N, {k: {k - 1: Scalar.monomial(half)}}) for k in range(1, N))
    return Rep(
        rs=rs,
        highest_weight=weights[0],
        dim=N,
        basis_weights=weights,
        E_mats=E_mats,
        F_mats=F_mats,
        norm_diag=tuple(ONE for _ in range(N)),
        orthonormal_flag=True,
        label=f"slN({N})",
    )
