"""Pairings of the cocycles ``eta_a`` with the cycles ``C(P)`` and ``C(Q)``.

Three independent routes compute the same numbers:

* closed forms :func:`chi` and :func:`chi_tilde`, which use only weights;
* :func:`eta_lambda`, a finite matrix contraction in the representation;
* :func:`hochschild.eta_apply` on the chain ``C(P)``, which evaluates
  coordinate-ring elements.

:func:`independence_certificate` turns a table of pairings into pairwise
linear-independence verdicts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cartan import RootSystem, Weight, bilinear, root_system, two_rho
from .coordring import act_left, counit
from .hochschild import CocycleSpec, OutOfContract, eta_apply, two_cycle
from .matunits import CoeffMatrix, build_P, build_Q, is_flag_supported, k2rho_diag, unit_M, unit_N
from .repbuild import E, F, Gen, K, Kw, Rep, UqElement, antipode_expand, build_irrep, coproduct_iter, pi
from .scalar import ZERO, RationalScalar, Scalar, qnum
from ._linalg import SparseMatrix

__all__ = [
    "chi",
    "chi_tilde",
    "eta_lambda",
    "eta_lambda_closed",
    "xi",
    "ef_action_relation_check",
    "PairingReport",
    "pairing_report",
    "IndependenceCertificate",
    "certify",
    "independence_certificate",
    "CycleSpec",
    "family_certificate",
    "family_ratio",
]


def _root_factor(rep: Rep, a: int, i: int) -> Scalar:
    """``[d_a^-1 (alpha_a, lambda_i)]_{q_a}``."""
    rs = rep.rs
    n = bilinear(rs, rs.alpha(a), rep.basis_weights[i]) / rs.d(a)
    if n.denominator != 1:
        raise ValueError("weight pairing is not integral")
    return qnum(int(n), rs.d(a))


def _chi(rep: Rep, c: CoeffMatrix, a: int, sign: int) -> Scalar:
    rs = rep.rs
    if not 1 <= a <= rs.rank:
        raise ValueError(f"simple root index {a} outside 1..{rs.rank}")
    if c.dim != rep.dim:
        raise ValueError("coefficient matrix size does not match the representation")
    shift = rs.alpha(a) - two_rho(rs)
    total = ZERO
    for i in range(rep.dim):
        cii = c[i, i]
        if cii:
            e = bilinear(rs, shift, rep.basis_weights[i])
            total = total + cii * Scalar.monomial(sign * e) * _root_factor(rep, a, i)
    return total


def chi(rep: Rep, c: CoeffMatrix, a: int) -> Scalar:
    """``sum_i c^i_i q^{(alpha_a - 2 rho, lambda_i)} [d_a^-1 (alpha_a, lambda_i)]_{q_a}``."""
    return _chi(rep, c, a, 1)


def chi_tilde(rep: Rep, c: CoeffMatrix, a: int) -> Scalar:
    """As :func:`chi` with the opposite sign in the exponent."""
    return _chi(rep, c, a, -1)


# -- matrix contractions -------------------------------------------------------------------

def _mat(rep: Rep, x) -> SparseMatrix:
    return pi(rep, UqElement.coerce(x))


def _cmat(c: CoeffMatrix) -> SparseMatrix:
    return SparseMatrix.from_dense(c.c)


def xi(rep: Rep, c: CoeffMatrix, lam: Weight, X, Xp, Y, Yp) -> Scalar:
    """``Tr[(2C - 1) pi(X) C pi(X' Y) C pi(Y' K_lam)]`` with ``C = (c^i_j)``."""
    C = _cmat(c)
    two_c = C.scale(2) - SparseMatrix.identity(rep.dim)
    Xp, Y, Yp = (UqElement.coerce(v) for v in (Xp, Y, Yp))
    m = two_c @ _mat(rep, X) @ C @ _mat(rep, Xp * Y) @ C @ _mat(rep, Yp * UqElement.coerce(Kw(lam)))
    return m.trace()


def eta_lambda(rep: Rep, c: CoeffMatrix, X: Gen, Y: Gen, lam: Weight) -> Scalar:
    """``eta^lam_{X,Y}(P)`` as ``Xi^lam`` summed over ``S(X_1) (x) X_2 (x) S(Y_1) (x) Y_2``."""
    if c.dim != rep.dim:
        raise ValueError("coefficient matrix size does not match the representation")
    total = ZERO
    for cx, (x1, x2) in coproduct_iter(X, 2):
        sx1 = antipode_expand(x1)
        for cy, (y1, y2) in coproduct_iter(Y, 2):
            v = xi(rep, c, lam, sx1, x2, antipode_expand(y1), y2)
            if v:
                total = total + cx * cy * v
    return total


def eta_lambda_closed(rep: Rep, c: CoeffMatrix, a: int, lam: Weight) -> Scalar:
    """``sum c^i_j pi(E_a K_lam K_a F_a)^j_i - sum c^i_j pi(K_a F_a E_a K_lam)^j_i``."""
    C = _cmat(c)
    first = UqElement.coerce(E(a)) * UqElement.coerce(Kw(lam)) * UqElement.coerce(K(a)) * UqElement.coerce(F(a))
    second = UqElement.coerce(K(a)) * UqElement.coerce(F(a)) * UqElement.coerce(E(a)) * UqElement.coerce(Kw(lam))
    return (C @ _mat(rep, first)).trace() - (C @ _mat(rep, second)).trace()


def ef_action_relation_check(rep: Rep, m: int, n: int, i: int, j: int, a: int) -> bool:
    """``eps(E_a |> N) = -q^{-(alpha_a, lambda_j)} eps(E_a |> M)`` and the ``F_a`` analogue with ``lambda_i``.

    Here ``M = (M^n_m)^i_j`` and ``N = (N^n_m)^i_j``; requires ``lambda_m = lambda_n``.
    """
    w = rep.basis_weights
    if w[m] != w[n]:
        raise OutOfContract("the relation needs lambda_m == lambda_n")
    M = unit_M(rep, m, n)[i, j]
    N = unit_N(rep, m, n)[i, j]
    alpha = rep.rs.alpha(a)
    pe = rep.weight_pairing(alpha)
    okE = counit(act_left(E(a), N)) == -Scalar.monomial(-pe[j]) * counit(act_left(E(a), M))
    okF = counit(act_left(F(a), N)) == -Scalar.monomial(-pe[i]) * counit(act_left(F(a), M))
    return okE and okF


# -- reports ----------------------------------------------------------------------------------

@dataclass
class PairingReport:
    rep: str
    c: CoeffMatrix
    chi: dict
    chi_tilde: dict
    eta: dict = field(default_factory=dict)
    eta_tilde: dict = field(default_factory=dict)
    eta_lambda: dict = field(default_factory=dict)
    eta_lambda_tilde: dict = field(default_factory=dict)

    @property
    def agreement(self) -> dict:
        out = {}
        for a, v in self.chi.items():
            if a in self.eta:
                out[f"P{a}"] = v == self.eta[a]
            if a in self.eta_tilde:
                out[f"Q{a}"] = self.chi_tilde[a] == self.eta_tilde[a]
        return out

    def all_agree(self) -> bool:
        checks = list(self.agreement.values())
        checks += [self.chi[a] == v for a, v in self.eta_lambda.items()]
        checks += [self.chi_tilde[a] == v for a, v in self.eta_lambda_tilde.items()]
        return all(checks)

    def to_json(self) -> dict:
        s = lambda d: {str(k): str(v) for k, v in d.items()}  # noqa: E731
        return {
            "rep": self.rep,
            "c": [[str(x) for x in row] for row in self.c.c],
            "chi": s(self.chi),
            "chi_tilde": s(self.chi_tilde),
            "eta": s(self.eta),
            "eta_tilde": s(self.eta_tilde),
            "eta_lambda": s(self.eta_lambda),
            "eta_lambda_tilde": s(self.eta_lambda_tilde),
            "agreement": self.agreement,
            "all_agree": self.all_agree(),
        }

    def to_markdown(self) -> str:
        roots = sorted(self.chi)
        lines = ["| | " + " | ".join(f"a = {a}" for a in roots) + " |",
                 "|---|" + "---|" * len(roots)]
        rows = [("chi_a(P)", self.chi), ("eta_a(C(P))", self.eta),
                ("chi~_a(Q)", self.chi_tilde), ("eta_a(C(Q))", self.eta_tilde)]
        for name, d in rows:
            if d:
                lines.append(f"| {name} | " + " | ".join(str(d[a]) for a in roots) + " |")
        return "\n".join(lines)


def pairing_report(rep: Rep, c: CoeffMatrix, roots: Sequence[int] | None = None, pipeline: bool = True) -> PairingReport:
    """All three routes for ``P = sum c M`` and ``Q = sum c N``."""
    if not is_flag_supported(rep, c):
        raise OutOfContract("pairing formulas need c^m_n = 0 whenever lambda_m != lambda_n")
    rs = rep.rs
    roots = list(range(1, rs.rank + 1)) if roots is None else list(roots)
    rep_id = rep.label
    rpt = PairingReport(rep_id, c, {a: chi(rep, c, a) for a in roots}, {a: chi_tilde(rep, c, a) for a in roots})
    neg = -two_rho(rs)
    for a in roots:
        rpt.eta_lambda[a] = eta_lambda(rep, c, F(a), E(a), neg)
        rpt.eta_lambda_tilde[a] = eta_lambda(rep, c, F(a), E(a), two_rho(rs) - rs.alpha(a) * 2)
    if pipeline:
        chP = two_cycle(build_P(rep, c), k2rho_diag(rep, -1))
        chQ = two_cycle(build_Q(rep, c), k2rho_diag(rep, 1))
        for a in roots:
            rpt.eta[a] = eta_apply(CocycleSpec.eta(a), chP)
            rpt.eta_tilde[a] = eta_apply(CocycleSpec.eta(a), chQ)
    return rpt


# -- linear independence -----------------------------------------------------------------------

def _ratio(x: Scalar, y: Scalar):
    if not y:
        return None
    r = RationalScalar(x, y).reduced()
    return r.to_scalar() if r.is_laurent() else r


@dataclass
class IndependenceCertificate:
    cycles: list
    cocycles: list
    matrix: list
    verdicts: list

    def all_independent(self) -> bool:
        return all(v["verdict"] == "independent" for v in self.verdicts)

    def ratios(self, i: int = 0, j: int = 1) -> list:
        """``phi_i(C) / phi_j(C)`` per cycle (``None`` where undefined)."""
        return [_ratio(row[i], row[j]) for row in self.matrix]

    def to_json(self) -> dict:
        rat = self.ratios() if len(self.cocycles) >= 2 else []
        return {
            "cycles": list(self.cycles),
            "cocycles": list(self.cocycles),
            "matrix": [[str(x) for x in row] for row in self.matrix],
            "ratios": [None if r is None else str(r) for r in rat],
            "verdicts": self.verdicts,
            "all_independent": self.all_independent(),
        }


def _pair_verdict(rows: list, s: int, t: int, cocycles: list) -> dict:
    u, v = rows[s], rows[t]
    out = {"pair": [s, t], "verdict": "not certified", "criterion": None, "witness": None}
    if not any(u) or not any(v):
        out["verdict"] = "undetected"
        out["reason"] = "a cycle pairs to zero with every cocycle"
        return out
    for C, Cp, order in ((u, v, (s, t)), (v, u, (t, s))):
        for p, phi in enumerate(C):
            if phi and not Cp[p]:
                out.update(verdict="independent", criterion=1,
                           witness={"cycle": order[0], "phi": cocycles[p]})
                return out
    for p, phi in enumerate(u):
        if not phi:
            continue
        for r in range(len(cocycles)):
            if r != p and v[r] * phi != v[p] * u[r]:
                out.update(verdict="independent", criterion=2,
                           witness={"cycle": s, "phi": cocycles[p], "psi": cocycles[r]})
                return out
    return out


def certify(cycle_ids: Sequence, cocycle_ids: Sequence, matrix: Sequence[Sequence[Scalar]]) -> IndependenceCertificate:
    """Pairwise verdicts from a cycles-by-cocycles table of exact pairings.

    Criterion 1: some ``phi`` vanishes on one cycle and not on the other.
    Criterion 2: ``psi(C') phi(C) != phi(C') psi(C)`` with ``phi(C) != 0``.
    """
    cycle_ids, cocycle_ids = list(cycle_ids), list(cocycle_ids)
    if len(cycle_ids) < 2 or len(cocycle_ids) < 2:
        raise ValueError("need at least two cycles and two cocycles")
    rows = [list(r) for r in matrix]
    if len(rows) != len(cycle_ids) or any(len(r) != len(cocycle_ids) for r in rows):
        raise ValueError("pairing matrix shape does not match the ids")
    verdicts = []
    for s in range(len(rows)):
        for t in range(s + 1, len(rows)):
            v = _pair_verdict(rows, s, t, cocycle_ids)
            v["pair"] = [cycle_ids[s], cycle_ids[t]]
            if v["witness"]:
                v["witness"]["cycle"] = cycle_ids[v["witness"]["cycle"]]
            verdicts.append(v)
    return IndependenceCertificate(cycle_ids, cocycle_ids, rows, verdicts)


@dataclass(frozen=True)
class CycleSpec:
    """``C(P)`` (``side="P"``) or ``C(Q)`` (``side="Q"``) for coefficients ``c`` on ``rep``."""

    id: str
    rep: Rep
    c: CoeffMatrix
    side: str = "P"

    def pairing(self, a: int, pipeline: bool = False) -> Scalar:
        if pipeline:
            if self.side == "P":
                ch = two_cycle(build_P(self.rep, self.c), k2rho_diag(self.rep, -1))
            else:
                ch = two_cycle(build_Q(self.rep, self.c), k2rho_diag(self.rep, 1))
            return eta_apply(CocycleSpec.eta(a), ch)
        return (chi if self.side == "P" else chi_tilde)(self.rep, self.c, a)


def independence_certificate(cycles: Sequence[CycleSpec], cocycle_ids: Sequence[int], pipeline: bool = False) -> IndependenceCertificate:
    """Fill the ``eta_a`` pairing table and certify pairwise independence."""
    matrix = [[cy.pairing(a, pipeline) for a in cocycle_ids] for cy in cycles]
    return certify([cy.id for cy in cycles], [f"eta_{a}" for a in cocycle_ids], matrix)


# -- the family mu_n = n omega_1 + omega_2 ---------------------------------------------------

def family_ratio(rs: RootSystem, n: int, side: str = "P") -> Scalar:
    """``q^{+-(n d_1 - d_2)} [n]_{q_1}``: the predicted ``eta_1 / eta_2`` ratio."""
    e = n * rs.d(1) - rs.d(2)
    return Scalar.monomial(e if side == "P" else -e) * qnum(n, rs.d(1))


def family_certificate(rs, n_max: int, side: str = "P", pipeline_max: int = 0, depth: int = 2) -> tuple:
    """Certificate for ``C(M^0_0)`` on ``V(n omega_1 + omega_2)``, ``n = 1..n_max``.

    Only a top slice of depth ``depth`` of each module is built; ``M^0_0`` sits on
    the highest weight, and every quantity used here stays inside that slice.
    For ``n <= pipeline_max`` the chain pipeline is also run and compared.
    Returns ``(certificate, cross_checks)`` with ``cross_checks[n] = bool``.
    """
    rs = root_system(rs) if isinstance(rs, str) else rs
    if rs.rank < 2:
        raise ValueError("the family needs rank >= 2")
    cycles = []
    checks = {}
    for n in range(1, n_max + 1):
        lam = rs.omega(1) * n + rs.omega(2)
        rep = build_irrep(rs, lam, max_depth=depth)
        c = CoeffMatrix.unit(rep.dim, 0, 0)
        cy = CycleSpec(f"{side}_{n}", rep, c, side)
        cycles.append(cy)
        if n <= pipeline_max:
            checks[n] = all(cy.pairing(a, True) == cy.pairing(a) for a in (1, 2))
    return independence_certificate(cycles, [1, 2]), checks
