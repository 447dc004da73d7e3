"""Flag-manifold membership, Levi invariance and equivariance of matrix units."""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import Weight
from .coordring import CoordElement, Verdict, act_left, act_right, decide, left_weight, right_weight
from .matunits import CoeffMatrix, CoordMatrix, build_P, build_Q, is_flag_supported, is_projection, unit_M, unit_N
from .repbuild import E, F, Gen, K, Kinv, Kw, Rep, UqElement, antipode_expand, antipode_inv_expand, coproduct_iter, counit_word, fundamental_slN, pi
from .scalar import ONE, ZERO, Scalar
from ._linalg import SparseMatrix

__all__ = [
    "in_flag",
    "TensorVector",
    "LeviSubset",
    "levi_invariant",
    "invariant_diagonal",
    "ad_invariance",
    "equivariance_check",
    "gamma_consistency",
    "grassmannian_projection",
    "grassmannian_vector",
    "flag_entries_invariant",
    "generators",
]


def generators(rank: int, roots=None) -> list:
    roots = range(1, rank + 1) if roots is None else roots
    out = []
    for a in roots:
        out += [E(a), F(a)]
    out += [K(a) for a in range(1, rank + 1)] + [Kinv(a) for a in range(1, rank + 1)]
    return out


def in_flag(e: CoordElement, side: str) -> bool:
    """Zero total left (``side="left"``) or right K-weight on every word."""
    weight = {"left": left_weight, "right": right_weight}[side]
    return all(not any(weight(w)) for w in CoordElement.coerce(e).terms)


def _counit(x) -> Scalar:
    return sum((c * counit_word(w) for w, c in UqElement.coerce(x).terms.items()), ZERO)


@dataclass(frozen=True)
class LeviSubset:
    S: frozenset

    def __init__(self, S, rank: int | None = None):
        S = frozenset(S)
        if rank is not None and not S <= set(range(1, rank + 1)):
            raise ValueError(f"Levi subset {sorted(S)} not within 1..{rank}")
        object.__setattr__(self, "S", S)

    @classmethod
    def complement(cls, rank: int, drop) -> "LeviSubset":
        drop = {drop} if isinstance(drop, int) else set(drop)
        return cls(set(range(1, rank + 1)) - drop, rank)


@dataclass(frozen=True, eq=False)
class TensorVector:
    """``w = sum c^m_n v_m (x) f^n``; with ``dual_first`` the order is ``f^n (x) v_m``."""

    rep: Rep
    coeffs: SparseMatrix
    dual_first: bool = False

    @classmethod
    def from_coeffs(cls, rep: Rep, c, dual_first: bool = False) -> "TensorVector":
        if isinstance(c, CoeffMatrix):
            c = SparseMatrix.from_dense(c.c)
        elif not isinstance(c, SparseMatrix):
            c = SparseMatrix.from_dense(c)
        return cls(rep, c, dual_first)

    def act(self, X) -> "TensorVector":
        """Left action through the coproduct; the dual leg carries ``pi(S(.))^T``."""
        total = SparseMatrix.zero(self.rep.dim)
        for c, (x1, x2) in coproduct_iter(X, 2):
            if self.dual_first:
                # (B (x) A)(f^n (x) v_m): c -> pi(x2) c pi(S x1)
                m = pi(self.rep, x2) @ self.coeffs @ pi(self.rep, antipode_expand(x1))
            else:
                m = pi(self.rep, x1) @ self.coeffs @ pi(self.rep, antipode_expand(x2))
            total = total + m.scale(c)
        return TensorVector(self.rep, total, self.dual_first)

    def act_right(self, X) -> "TensorVector":
        """The action matching ``P <| X`` on ``P = sum c M``: ``c -> pi(S x1) c pi(x2)``."""
        total = SparseMatrix.zero(self.rep.dim)
        for c, (x1, x2) in coproduct_iter(X, 2):
            total = total + (pi(self.rep, antipode_expand(x1)) @ self.coeffs @ pi(self.rep, x2)).scale(c)
        return TensorVector(self.rep, total, self.dual_first)

    def is_eigen(self, X, side: str = "left") -> bool:
        img = self.act(X) if side == "left" else self.act_right(X)
        return img.coeffs == self.coeffs.scale(_counit(X))


def levi_invariant(w: TensorVector, S: LeviSubset, side: str = "left") -> bool:
    """``X |> w = eps(X) w`` for ``E_k, F_k`` (``k`` in S) and every ``K_a^{+-1}``."""
    rank = w.rep.rs.rank
    return all(w.is_eigen(X, side) for X in generators(rank, sorted(S.S)))


def invariant_diagonal(rep: Rep, dual_first: bool = False) -> list | None:
    """Solve for a diagonal ``c`` with ``w`` invariant under all of ``U_q(g)``.

    The equations from ``E_a`` couple pairs of diagonal entries; they are solved
    by propagation from ``c_0 = 1``.  Returns ``None`` if they are inconsistent.
    """
    n = rep.dim
    vals: list = [None] * n
    vals[0] = ONE
    rank = rep.rs.rank
    changed = True
    while changed:
        changed = False
        for a in range(1, rank + 1):
            Em = rep.generator(E(a))
            for i, row in Em.rows.items():
                for j in row:
                    # E[i, j] != 0 forces d_j = f d_i, with f = q^{(alpha_a, lambda_i - lambda_j)}
                    # when the dual leg comes first and f = 1 otherwise
                    if dual_first:
                        pa = rep.weight_pairing(rep.rs.alpha(a))
                        f = pa[i] - pa[j]
                    else:
                        f = 0
                    if vals[i] is not None and vals[j] is None:
                        vals[j] = vals[i] * Scalar.monomial(f)
                        changed = True
                    elif vals[j] is not None and vals[i] is None:
                        vals[i] = vals[j] * Scalar.monomial(-f)
                        changed = True
    if any(v is None for v in vals):
        return None
    w = TensorVector.from_coeffs(rep, SparseMatrix.diag(vals), dual_first)
    if not all(w.is_eigen(X) for X in generators(rank)):
        return None
    return vals


# -- matrices over the coordinate ring ------------------------------------------

def _left_mul(A: SparseMatrix, M: CoordMatrix) -> CoordMatrix:
    def entry(i, j):
        return sum((M[k, j] * v for k, v in A.rows.get(i, {}).items()), CoordElement())

    return CoordMatrix.build(M.rep, entry)


def _right_mul(M: CoordMatrix, A: SparseMatrix) -> CoordMatrix:
    cols = A.cols()

    def entry(i, j):
        return sum((M[i, k] * v for k, v in cols.get(j, {}).items()), CoordElement())

    return CoordMatrix.build(M.rep, entry)


def _k2rho(rep: Rep) -> Gen:
    return Kw(Weight((2,) * rep.rs.rank))


def _k2rho_inv(rep: Rep) -> Gen:
    return Kw(Weight((-2,) * rep.rs.rank))


def _rho_circ(rep: Rep, x, side: str) -> SparseMatrix:
    """``pi(K S^-1(x) K^-1)`` for side L, ``pi(K^-1 S(x) K)`` for side R (``K = K_{2 rho}``)."""
    k, ki = _k2rho(rep), _k2rho_inv(rep)
    if side == "left":
        return pi(rep, UqElement.coerce(k) * antipode_inv_expand(x) * ki)
    return pi(rep, UqElement.coerce(ki) * antipode_expand(x) * k)


def ad_image(M: CoordMatrix, X, side: str) -> CoordMatrix:
    """``ad°_L(X)(M)`` (side ``"left"``) or ``ad°_R(X)(M)`` (side ``"right"``)."""
    rep = M.rep
    total = CoordMatrix.zero(rep)
    for c, (x1, x2, x3) in coproduct_iter(X, 3):
        if side == "left":
            # rho(X1) (M <| X2) rho(S^-1 X3)
            inner = M.map(lambda e: act_right(x2, e))
            A = _rho_circ(rep, x1, side)
            B = _rho_circ(rep, antipode_inv_expand(x3), side)
        else:
            # rho(S^-1 X1) (S^-2 X2 |> M) rho(X3)
            s2 = antipode_inv_expand(antipode_inv_expand(x2))
            inner = M.map(lambda e: act_left(s2, e))
            A = _rho_circ(rep, antipode_inv_expand(x1), side)
            B = _rho_circ(rep, x3, side)
        total = total + _right_mul(_left_mul(A, inner), B).scale(c)
    return total


def ad_invariance(M: CoordMatrix, side: str, gens=None, budget: int | None = None) -> Verdict:
    """``ad°(X)(M) = eps(X) M`` for every generator, compared entrywise."""
    gens = generators(M.rep.rs.rank) if gens is None else gens
    oracle = "exact"
    for X in gens:
        v = ad_image(M, X, side).compare(M.scale(_counit(X)), budget)
        if v.oracle != "exact":
            oracle = v.oracle
        if not v.equal:
            return Verdict(False, oracle)
    return Verdict(True, oracle)


def equivariance_check(rep: Rep, m: int, n: int, X, budget: int | None = None) -> Verdict:
    """``X |> M^n_m = pi(S X1) M pi(X2)`` and ``N^n_m <| X = pi(X1) N pi(S X2)``."""
    Mm = unit_M(rep, m, n)
    Nm = unit_N(rep, m, n)
    rhsM = CoordMatrix.zero(rep)
    rhsN = CoordMatrix.zero(rep)
    for c, (x1, x2) in coproduct_iter(X, 2):
        rhsM = rhsM + _right_mul(_left_mul(pi(rep, antipode_expand(x1)), Mm), pi(rep, x2)).scale(c)
        rhsN = rhsN + _right_mul(_left_mul(pi(rep, x1), Nm), pi(rep, antipode_expand(x2))).scale(c)
    v1 = Mm.map(lambda e: act_left(X, e)).compare(rhsM, budget)
    if not v1.equal:
        return v1
    v2 = Nm.map(lambda e: act_right(X, e)).compare(rhsN, budget)
    return Verdict(v2.equal, v1.oracle if v1.oracle != "exact" else v2.oracle)


def gamma_consistency(rep: Rep, m: int, n: int, i: int, j: int, X, budget: int | None = None) -> Verdict:
    """``X |> gamma(v_m (x) f^n) = gamma(X . (v_m (x) f^n))`` with ``gamma(v_k (x) f^l) = (N^l_k)^i_j``."""
    img = TensorVector.from_coeffs(rep, SparseMatrix(rep.dim, rep.dim, {m: {n: ONE}})).act(X)
    rhs = CoordElement()
    for k, row in img.coeffs.rows.items():
        for l, v in row.items():
            rhs = rhs + unit_N(rep, k, l)[i, j] * v
    lhs = act_left(X, unit_N(rep, m, n)[i, j])
    return decide(lhs, rhs, budget)


def flag_entries_invariant(M: CoordMatrix, S: LeviSubset, side: str, budget: int | None = None) -> Verdict:
    """Every entry ``a`` satisfies ``X |> a = eps(X) a`` (side left) or ``a <| X = eps(X) a`` (side right)."""
    act = act_left if side == "left" else (lambda X, e: act_right(X, e))
    oracle = "exact"
    for X in generators(M.rep.rs.rank, sorted(S.S)):
        eps = _counit(X)
        for row in M.entries:
            for e in row:
                v = decide(act(X, e), e * eps, budget)
                if v.oracle != "exact":
                    oracle = v.oracle
                if not v.equal:
                    return Verdict(False, oracle)
    return Verdict(True, oracle)


# -- Grassmannians -----------------------------------------------------------------

def grassmannian_projection(r: int, N: int) -> tuple:
    """``(P, Q, c)`` with ``c = diag(1^r, 0^(N-r))`` on the fundamental module of ``sl_N``."""
    if not (1 <= r < N):
        raise ValueError(f"need 1 <= r < N, got r={r}, N={N}")
    rep = fundamental_slN(N)
    c = CoeffMatrix.diag([ONE] * r + [ZERO] * (N - r))
    assert is_projection(c) and is_flag_supported(rep, c)
    return build_P(rep, c), build_Q(rep, c), c


def grassmannian_vector(r: int, N: int) -> TensorVector:
    """``w = sum_{m <= r} v_m (x) f^m``."""
    rep = fundamental_slN(N)
    return TensorVector.from_coeffs(rep, SparseMatrix.diag([ONE] * r + [ZERO] * (N - r)))
