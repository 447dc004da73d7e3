import pytest
from hypothesis import given, strategies as st

from artifact._catalogue import catalogue
from artifact.cartan import Weight, root_system, two_rho
from artifact.hochschild import OutOfContract
from artifact.matunits import CoeffMatrix
from artifact.pairings import (
    CycleSpec,
    certify,
    chi,
    chi_tilde,
    ef_action_relation_check,
    eta_lambda,
    eta_lambda_closed,
    family_certificate,
    family_ratio,
    independence_certificate,
    pairing_report,
    xi,
)
from artifact.repbuild import E, F, K, Kinv, Kw, UqElement, pi
from artifact.scalar import ONE, ZERO, RationalScalar, Scalar, qnum
from conftest import irrep
import oracles

CATALOGUE = catalogue()
q = Scalar.monomial


def _dense(c):
    from fractions import Fraction

    return [[Fraction(x.at(oracles.Q)) for x in row] for row in c.c]


@pytest.mark.parametrize("inst", CATALOGUE, ids=lambda i: i.name)
def test_closed_forms_against_definition_oracle(inst):
    """chi and chi~ agree with eta evaluated from the definition at q = 4."""
    rep = inst.rep
    p = rep.weight_pairing(two_rho(rep.rs))
    for a in range(1, rep.rs.rank + 1):
        r = oracles.from_package(rep, a)
        assert chi(rep, inst.c, a).at(oracles.Q) == oracles.eta_of_cycle(r, _dense(inst.c), "M", p)
        assert chi_tilde(rep, inst.c, a).at(oracles.Q) == oracles.eta_of_cycle(r, _dense(inst.c), "N", p)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sl2_textbook_basis(n):
    """The oracle in its own basis reproduces [k] for every weight label k."""
    r = oracles.a1_irrep(n)
    for k in range(n + 1):
        c = oracles.diag([1 if i == k else 0 for i in range(n + 1)])
        assert oracles.eta_of_cycle(r, c) == oracles.qint(n - 2 * k)


@pytest.mark.parametrize("inst", [i for i in CATALOGUE if i.rep.dim <= 8][::3], ids=lambda i: i.name)
def test_xi_stage_identities(inst):
    rep, c = inst.rep, inst.c
    C = c.c
    lam = -two_rho(rep.rs)
    for a in range(1, rep.rs.rank + 1):
        Ka, Kai, Fa, Ea = (UqElement.coerce(g) for g in (K(a), Kinv(a), F(a), E(a)))
        one = UqElement.one()
        fourth = xi(rep, c, lam, Ka, Fa, one, Ea)
        first = xi(rep, c, lam, Ka * Fa, one, Ea * Kai, Ka)
        second = xi(rep, c, lam, Ka * Fa, one, one, Ea)
        third = xi(rep, c, lam, Ka, Fa, Ea * Kai, Ka)
        kl = UqElement.coerce(Kw(lam))
        mKF, mEK = pi(rep, Ka * Fa), pi(rep, Ea * kl)
        n = rep.dim
        direct = sum((C[i][j] * mKF.get(j, k) * C[k][l] * mEK.get(l, i)
                      for i in range(n) for j in range(n) for k in range(n) for l in range(n)
                      if C[i][j] and C[k][l]), ZERO)
        assert fourth == first == direct
        tr = lambda x: sum((C[i][j] * pi(rep, x).get(j, i) for i in range(n) for j in range(n) if C[i][j]), ZERO)  # noqa: E731
        assert second == fourth * 2 - tr(Ea * kl * Ka * Fa)
        assert third == tr(Ka * Fa * Ea * kl)


@given(st.sampled_from(range(len(CATALOGUE))), st.integers(-3, 3), st.integers(-3, 3))
def test_eta_lambda_closed_form(idx, x, y):
    inst = CATALOGUE[idx]
    rep = inst.rep
    coords = (x, y, 0)[: rep.rs.rank] if rep.rs.rank <= 3 else (x,) * rep.rs.rank
    lam = Weight(coords)
    for a in range(1, rep.rs.rank + 1):
        assert eta_lambda(rep, inst.c, F(a), E(a), lam) == eta_lambda_closed(rep, inst.c, a, lam)


def test_chi_linear_and_sl2_identity():
    rep = irrep("A2", (1, 1))
    c1, c2 = CoeffMatrix.unit(8, 0, 0), CoeffMatrix.unit(8, 5, 5)
    both = CoeffMatrix([[x + y * 3 for x, y in zip(r1, r2)] for r1, r2 in zip(c1.c, c2.c)])
    for a in (1, 2):
        assert chi(rep, both, a) == chi(rep, c1, a) + chi(rep, c2, a) * 3
    fund = irrep("A1", (1,))
    assert chi(fund, CoeffMatrix.identity(2), 1) == ZERO
    assert chi_tilde(fund, CoeffMatrix.identity(2), 1) == ZERO


def test_pairing_report_documents():
    rep = irrep("A2", (1, 1))
    k = rep.indices_of_weight(Weight((2, -1)))[0]
    r = pairing_report(rep, CoeffMatrix.unit(8, k, k))
    assert r.all_agree()
    assert r.chi == {1: qnum(2), 2: -q(-3)}
    assert r.chi_tilde == {1: qnum(2), 2: -q(3)}
    doc = r.to_json()
    assert doc["chi"] == {"1": "q + q^(-1)", "2": "-q^(-3)"} and doc["all_agree"]
    md = r.to_markdown().splitlines()
    assert md[0] == "| | a = 1 | a = 2 |"
    assert md[2] == "| chi_a(P) | q + q^(-1) | -q^(-3) |"
    with pytest.raises(OutOfContract):
        pairing_report(rep, CoeffMatrix.unit(8, 0, 1))


def test_certify_criteria():
    one, two = ONE, ONE * 2
    cert = certify(["A", "B"], ["p", "s"], [[one, ZERO], [one, one]])
    assert cert.verdicts[0]["criterion"] == 1
    assert cert.verdicts[0]["witness"] == {"cycle": "B", "phi": "s"}
    cert = certify(["A", "B"], ["p", "s"], [[one, two], [two, one]])
    assert cert.verdicts[0]["criterion"] == 2 and cert.all_independent()
    cert = certify(["A", "B"], ["p", "s"], [[one, two], [two, two * 2]])
    assert cert.verdicts[0]["verdict"] == "not certified" and not cert.all_independent()
    cert = certify(["A", "B"], ["p", "s"], [[ZERO, ZERO], [one, one]])
    assert cert.verdicts[0]["verdict"] == "undetected" and "reason" in cert.verdicts[0]
    with pytest.raises(ValueError):
        certify(["A"], ["p", "s"], [[one, one]])
    with pytest.raises(ValueError):
        certify(["A", "B"], ["p", "s"], [[one], [one]])


def test_adjoint_certificate():
    rep = irrep("A2", (1, 1))
    cycles = []
    for name, w in (("P1", (2, -1)), ("P2", (-1, 2)), ("Prho", (1, 1))):
        k = rep.indices_of_weight(Weight(w))[0]
        cycles.append(CycleSpec(name, rep, CoeffMatrix.unit(8, k, k)))
    cert = independence_certificate(cycles, [1, 2])
    pipe = independence_certificate(cycles, [1, 2], pipeline=True)
    assert cert.matrix == pipe.matrix and cert.all_independent()
    assert cert.ratios() == [-q(3) * qnum(2), RationalScalar(-ONE, q(3) * qnum(2)), ONE]
    assert cert.to_json()["ratios"] == ["-q^4 - q^2", "(-q^(-2))/(q^2 + 1)", "1"]


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
@pytest.mark.parametrize("side", ["P", "Q"])
def test_family(name, side):
    rs = root_system(name)
    cert, checks = family_certificate(rs, 5, side, pipeline_max=2)
    assert cert.all_independent() and all(checks.values()) and len(checks) == 2
    d1, d2 = rs.d(1), rs.d(2)
    for n, r in enumerate(cert.ratios(), start=1):
        assert r == family_ratio(rs, n, side)
        expected = oracles.family_ratio_sym(n, d1, d2, side)
        assert oracles.sympy.simplify(oracles.sympy.sympify(str(r).replace("^", "**"), locals={"q": oracles.q_sym}) - expected) == 0


def test_family_needs_rank_two():
    with pytest.raises(ValueError):
        family_certificate("A1", 3)


@pytest.mark.parametrize("key", [("A1", (1,)), ("A2", (1, 0)), ("A2", (1, 1))])
def test_ef_action_relation(key):
    rep = irrep(*key)
    n = rep.dim
    for m in range(n):
        for k in range(n):
            if rep.basis_weights[m] != rep.basis_weights[k]:
                with pytest.raises(OutOfContract):
                    ef_action_relation_check(rep, m, k, 0, 0, 1)
                continue
            for i in range(n):
                for j in range(n):
                    for a in range(1, rep.rs.rank + 1):
                        assert ef_action_relation_check(rep, m, k, i, j, a)
