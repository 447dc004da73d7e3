"""Randomized versions of the structural invariants across modules."""

from hypothesis import given
from hypothesis import strategies as st

from conftest import irrep
from artifact.cartan import Weight
from artifact.coordring import counit
from artifact.flags import in_flag
from artifact.hochschild import TwistSpec
from artifact.matunits import CoeffMatrix, build_P, build_Q, is_flag_supported, is_projection, unit_M, unit_N
from artifact.pairings import chi, chi_tilde, pairing_report
from artifact.scalar import ONE, ZERO, qnum

small = st.integers(-3, 3)
weights2 = st.tuples(small, small).map(Weight)


def _diag(bits):
    return CoeffMatrix.diag([ONE if b else ZERO for b in bits])


@given(st.lists(st.booleans(), min_size=3, max_size=3), st.integers(1, 2))
def test_three_paths_on_diagonal_projections(bits, a):
    rep = irrep("A2", (1, 0))
    c = _diag(bits)
    assert is_projection(c) and is_flag_supported(rep, c)
    r = pairing_report(rep, c, roots=[a])
    assert r.all_agree() and set(r.eta) == {a}


@given(st.lists(small, min_size=8, max_size=8), st.lists(small, min_size=8, max_size=8), st.integers(1, 2))
def test_chi_is_linear_in_c(xs, ys, a):
    rep = irrep("A2", (1, 1))
    cx = CoeffMatrix.diag([ONE * x for x in xs])
    cy = CoeffMatrix.diag([ONE * y for y in ys])
    cs = CoeffMatrix.diag([ONE * (x + y) for x, y in zip(xs, ys)])
    assert chi(rep, cs, a) == chi(rep, cx, a) + chi(rep, cy, a)
    assert chi_tilde(rep, cs, a) == chi_tilde(rep, cx, a) + chi_tilde(rep, cy, a)


@given(weights2, weights2, st.integers(0, 2), st.sampled_from([unit_M, unit_N]))
def test_counit_is_twist_invariant_on_flag_entries(lam, lam2, k, unit):
    rep = irrep("A2", (1, 0))
    sigma = TwistSpec(lam, lam2)
    U = unit(rep, k, k)
    entries = [U[i, j] for i in range(3) for j in range(3)]
    assert all(counit(sigma(e)) == counit(e) for e in entries)


@given(st.integers(-8, 8), st.integers(1, 3))
def test_qnum_specializes_to_integers(n, d):
    assert qnum(n, d).at(1) == n


@given(st.lists(st.booleans(), min_size=4, max_size=4))
def test_P_and_Q_have_flag_entries(bits):
    rep = irrep("A3", (1, 0, 0))
    c = _diag(bits)
    P, Q = build_P(rep, c), build_Q(rep, c)
    assert all(in_flag(P[i, j], "right") and in_flag(Q[i, j], "left") for i in range(4) for j in range(4))
