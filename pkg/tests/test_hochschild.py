import random

import pytest
from hypothesis import given, strategies as st

from artifact.cartan import Weight
from artifact.coordring import CoordElement, u, ustar
from artifact.hochschild import (
    MAX_DEGREE,
    Chain,
    CocycleSpec,
    OutOfContract,
    TwistSpec,
    boundary,
    boundary_identity,
    cocycle_check,
    counit_side_symmetry,
    counit_twist_invariant,
    eta_apply,
    leibniz_check,
    normalize,
    normalized_is_zero,
    random_chain,
    two_cycle,
)
from artifact.flags import generators
from artifact.matunits import CoeffMatrix, build_P, build_Q, k2rho_diag, unit_M, unit_N
from artifact.repbuild import E, F, Gen
from artifact.scalar import ONE, Scalar
from conftest import irrep


def atoms(rep):
    n = rep.dim
    return [u(rep, i, j) for i in range(n) for j in range(n)] + [ustar(rep, i, j) for i in range(n) for j in range(n)]


def flag_elements(rep, side):
    unit = unit_M if side == "right" else unit_N
    out = []
    for m in range(rep.dim):
        for k in range(rep.dim):
            if rep.basis_weights[m] == rep.basis_weights[k]:
                out += [e for row in unit(rep, m, k).entries for e in row if not e.is_zero()]
    return out


def test_chain_basics():
    rep = irrep("A1", (1,))
    a, b = u(rep, 0, 0), u(rep, 0, 1)
    ch = Chain.elementary(a, b) + Chain.elementary(a, b)
    assert len(ch) == 1 and ch.terms[0][0] == Scalar.const(2)
    assert (ch - ch).is_structurally_zero()
    assert ch.scale(0).is_structurally_zero()
    with pytest.raises(ValueError):
        Chain(MAX_DEGREE + 1)
    with pytest.raises(ValueError):
        Chain(1, [(ONE, (a,))])
    with pytest.raises(ValueError):
        ch + Chain.elementary(a, b, a)
    with pytest.raises(ValueError):
        boundary(Chain.elementary(a))


def test_boundary_degree_one():
    rep = irrep("A1", (1,))
    a, b = u(rep, 0, 0), u(rep, 1, 0)
    th = TwistSpec.theta(rep.rs)
    got = boundary(Chain.elementary(a, b), th)
    want = Chain(0, [(ONE, (a * b,)), (-ONE, (th(b) * a,))])
    assert (got - want).is_structurally_zero()


@given(st.integers(0, 10 ** 6), st.sampled_from([2, 3]), st.booleans())
def test_b_squared_is_zero(seed, degree, twisted):
    rep = irrep("A2", (1, 0))
    rng = random.Random(seed)
    ch = random_chain(rng, atoms(rep), degree)
    sigma = TwistSpec.theta(rep.rs) if twisted else None
    bb = boundary(boundary(ch, sigma), sigma)
    v = bb.is_zero()
    assert v.equal and v.oracle == "exact"


def test_twisted_b_squared_general_weights():
    rep = irrep("A1", (2,))
    rng = random.Random(7)
    sigma = TwistSpec(Weight((3,)), Weight((-1,)))
    for _ in range(5):
        ch = random_chain(rng, atoms(rep), 3, n_terms=2)
        assert boundary(boundary(ch, sigma), sigma).is_zero().equal


def test_normalize_drops_scalar_slots():
    rep = irrep("A1", (1,))
    a = u(rep, 0, 1)
    one = CoordElement.one()
    s = sum((u(rep, 0, l) * ustar(rep, 0, l) for l in range(2)), CoordElement())  # equals 1
    ch = Chain(2, [(ONE, (a, a, one)), (ONE, (a, s, a)), (ONE, (a, a, a))])
    kept = normalize(ch)
    assert len(kept) == 1 and kept.terms[0][1] == (a, a, a)
    assert not normalized_is_zero(ch).equal
    assert normalized_is_zero(Chain(2, [(ONE, (a, a, one)), (ONE, (a, s, a))])).equal


@pytest.mark.parametrize("key,k", [(("A1", (2,)), 0), (("A2", (1, 0)), 1), (("A2", (1, 1)), 3)])
def test_boundary_identity(key, k):
    rep = irrep(*key)
    c = CoeffMatrix.unit(rep.dim, k, k)
    th = TwistSpec.theta(rep.rs)
    for M, V in ((build_P(rep, c), k2rho_diag(rep, -1)), (build_Q(rep, c), k2rho_diag(rep, 1))):
        res = boundary_identity(M, V, th)
        assert all(v.equal and v.oracle == "exact" for v in res.values()), res


def test_boundary_identity_fails_without_twist():
    rep = irrep("A1", (1,))
    c = CoeffMatrix.unit(2, 0, 0)
    res = boundary_identity(build_P(rep, c), k2rho_diag(rep, -1), TwistSpec.identity(rep.rs))
    assert not res["identity"].equal


@given(st.integers(0, 10 ** 6))
def test_eta_is_additive(seed):
    rep = irrep("A1", (2,))
    rng = random.Random(seed)
    c1 = random_chain(rng, atoms(rep), 2, n_terms=2)
    c2 = random_chain(rng, atoms(rep), 2, n_terms=2)
    spec = CocycleSpec.eta(1)
    assert eta_apply(spec, c1 + c2) == eta_apply(spec, c1) + eta_apply(spec, c2)
    assert eta_apply(spec, c1.scale(3)) == eta_apply(spec, c1) * 3


def test_eta_and_cocycle_validation():
    rep = irrep("A1", (1,))
    with pytest.raises(ValueError):
        CocycleSpec(Gen("K", 1), E(1))
    with pytest.raises(ValueError):
        eta_apply(CocycleSpec.eta(1), Chain.elementary(u(rep, 0, 0), u(rep, 0, 0)))
    with pytest.raises(OutOfContract):
        cocycle_check(CocycleSpec.eta(1), TwistSpec.theta(rep.rs), [u(rep, 0, 1)] * 4)
    with pytest.raises(ValueError):
        two_cycle(build_P(rep, CoeffMatrix.unit(2, 0, 0)), [ONE, Scalar()])


@pytest.mark.parametrize("key", [("A1", (1,)), ("A2", (1, 0)), ("A2", (1, 1))])
@pytest.mark.parametrize("side", ["left", "right"])
def test_cocycle_on_flag_elements(key, side):
    rep = irrep(*key)
    rng = random.Random(11)
    elems = flag_elements(rep, side)
    th = TwistSpec.theta(rep.rs)
    for a in range(1, rep.rs.rank + 1):
        for spec in (CocycleSpec.eta(a), CocycleSpec(E(a), F(a))):
            for _ in range(4):
                assert cocycle_check(spec, th, [rng.choice(elems) for _ in range(4)])


@pytest.mark.parametrize("key", [("A1", (2,)), ("A2", (1, 0)), ("A2", (1, 1))])
@pytest.mark.parametrize("side", ["left", "right"])
def test_counit_lemmas(key, side):
    rep = irrep(*key)
    rs = rep.rs
    rng = random.Random(5)
    elems = flag_elements(rep, side)
    twists = [TwistSpec.theta(rs), TwistSpec(rs.omega(1), -rs.omega(rs.rank)), TwistSpec(rs.alpha(1), rs.omega(1))]
    for _ in range(10):
        a, b = rng.choice(elems), rng.choice(elems)
        assert all(counit_twist_invariant(s, a) for s in twists)
        for X in generators(rs.rank):
            assert counit_side_symmetry(X, a)
        for k in range(1, rs.rank + 1):
            assert leibniz_check(E(k), a, b) and leibniz_check(F(k), a, b)


def test_counit_lemmas_need_flag_elements():
    rep = irrep("A1", (1,))
    x = u(rep, 0, 1)
    with pytest.raises(OutOfContract):
        counit_twist_invariant(TwistSpec.theta(rep.rs), x)
    with pytest.raises(OutOfContract):
        leibniz_check(E(1), x, x)
    with pytest.raises(ValueError):
        leibniz_check(Gen("K", 1), u(rep, 0, 0), u(rep, 0, 0))
    # eps(X |> a) = eps(a <| X) holds without the flag condition
    assert counit_side_symmetry(E(1), x)
