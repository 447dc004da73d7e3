import itertools
import random

import pytest
from hypothesis import given, strategies as st

from artifact.cartan import Weight
from artifact.coordring import (
    BudgetExceeded,
    CoordElement,
    act_left,
    act_right,
    contract,
    counit,
    decide,
    default_budget,
    equal_bounded,
    equal_exact,
    evaluate,
    sigma_twist,
    tensor_is_zero,
    theta,
    u,
    ustar,
)
from artifact.coordring import _expand
from artifact.repbuild import E, F, K, Kinv, UqElement, antipode_expand, coproduct_iter, pi
from artifact.scalar import ONE, ZERO, Scalar
from conftest import irrep


def gens(rank):
    return [g for a in range(1, rank + 1) for g in (E(a), F(a), K(a), Kinv(a))]


def atoms(rep):
    n = rep.dim
    return [u(rep, i, j) for i in range(n) for j in range(n)] + [ustar(rep, i, j) for i in range(n) for j in range(n)]


@pytest.mark.parametrize("key", [("A1", (1,)), ("A2", (1, 0)), ("B2", (0, 1))])
def test_atoms_evaluate_to_matrix_entries(key):
    rep = irrep(*key)
    n = rep.dim
    for w in itertools.islice(itertools.product(gens(rep.rs.rank), repeat=2), 0, None, 5):
        m = pi(rep, w)
        s = pi(rep, antipode_expand(UqElement.coerce(w)))
        for i in range(n):
            for j in range(n):
                assert evaluate(u(rep, i, j), w) == m.get(i, j)
                assert evaluate(ustar(rep, i, j), w) == s.get(j, i)
    assert counit(u(rep, 0, 0)) == ONE and counit(ustar(rep, 0, 1)) == ZERO


@given(st.integers(0, 10 ** 6), st.integers(0, 3))
def test_evaluation_is_multiplicative(seed, length):
    rep = irrep("A2", (1, 0))
    rng = random.Random(seed)
    pool = atoms(rep)
    a = rng.choice(pool) * rng.choice(pool) + rng.choice(pool) * 2
    b = rng.choice(pool) - rng.choice(pool) * rng.choice(pool)
    w = tuple(rng.choice(gens(2)) for _ in range(length))
    rhs = sum((c * evaluate(a, x1) * evaluate(b, x2) for c, (x1, x2) in coproduct_iter(UqElement.coerce(w), 2)), ZERO)
    assert evaluate(a * b, w) == rhs


@given(st.integers(0, 10 ** 6))
def test_actions_against_evaluation(seed):
    rep = irrep("A1", (2,))
    rng = random.Random(seed)
    pool = atoms(rep)
    e = rng.choice(pool) * rng.choice(pool)
    X, Y = rng.choice(gens(1)), rng.choice(gens(1))
    # (X |> e)(Y) = e(Y X) and (e <| X)(Y) = e(X Y)
    assert evaluate(act_left(X, e), Y) == evaluate(e, (Y, X))
    assert evaluate(act_right(X, e), Y) == evaluate(e, (X, Y))


def test_left_and_right_actions_commute():
    rep = irrep("A2", (1, 0))
    rng = random.Random(1)
    pool = atoms(rep)
    for _ in range(6):
        e = rng.choice(pool) * rng.choice(pool)
        X, Y = rng.choice(gens(2)), rng.choice(gens(2))
        assert equal_exact(act_right(Y, act_left(X, e)), act_left(X, act_right(Y, e)))


def test_sigma_twist_group_law():
    rep = irrep("A2", (1, 1))
    rng = random.Random(2)
    pool = atoms(rep)
    ws = [Weight(c) for c in ((0, 0), (1, 0), (2, 2), (-1, 3))]
    for _ in range(10):
        e = rng.choice(pool) * rng.choice(pool) + rng.choice(pool)
        assert sigma_twist(Weight((0, 0)), Weight((0, 0)), e) == e
        l1, l2, m1, m2 = (rng.choice(ws) for _ in range(4))
        assert sigma_twist(l1, l2, sigma_twist(m1, m2, e)) == sigma_twist(l1 + m1, l2 + m2, e)
        assert theta(e) == sigma_twist(Weight((2, 2)), Weight((2, 2)), e)


@pytest.mark.parametrize("key", [("A1", (1,)), ("A2", (1, 0))])
def test_antipode_relations_exact(key):
    rep = irrep(key[0], key[1])
    n = rep.dim
    for a in range(n):
        for b in range(n):
            lhs = sum((ustar(rep, k, a) * u(rep, k, b) for k in range(n)), CoordElement())
            target = CoordElement.one() if a == b else CoordElement()
            assert equal_exact(lhs, target)
            assert equal_exact(lhs, target, rewrite=False)


def test_unequal_elements_are_detected():
    rep = irrep("A2", (1, 0))
    x = u(rep, 0, 0) * u(rep, 1, 1)
    y = u(rep, 1, 1) * u(rep, 0, 0)
    # quantum matrix entries do not commute
    assert not equal_exact(x, y)
    assert not equal_bounded(x, y, 3)
    assert not equal_exact(u(rep, 0, 0), CoordElement.one())
    assert equal_bounded(x, x)


def test_budget_fallback():
    rep = irrep("A2", (1, 1))
    a = u(rep, 0, 0) * u(rep, 3, 4) * ustar(rep, 2, 5)
    b = ustar(rep, 2, 5) * u(rep, 0, 0) * u(rep, 3, 4)
    with pytest.raises(BudgetExceeded):
        equal_exact(a, b, budget=2, rewrite=False)
    v = decide(a, b, budget=2, D=2)
    assert v.oracle == "bounded-2"


def test_budget_env(monkeypatch):
    monkeypatch.setenv("ARTIFACT_EQ_BUDGET", "123")
    assert default_budget() == 123
    monkeypatch.delenv("ARTIFACT_EQ_BUDGET")
    assert default_budget() == 5000


@given(st.integers(0, 10 ** 6))
def test_contract_is_sound(seed):
    """Every contraction result equals the input as a functional."""
    rep = irrep("A1", (1,))
    rng = random.Random(seed)
    n = rep.dim
    i, j = rng.randrange(n), rng.randrange(n)
    tail = rng.choice(atoms(rep))
    c = Scalar.monomial(rng.randint(-2, 2))
    if rng.random() < 0.5:
        body = sum((u(rep, i, l) * ustar(rep, j, l) for l in range(n)), CoordElement())
    else:
        body = sum((ustar(rep, l, i) * u(rep, l, j) for l in range(n)), CoordElement())
    e = (body * tail) * c + rng.choice(atoms(rep))
    expanded = _expand([(ONE, (e,))])
    reduced = contract(expanded)
    r = CoordElement({k[0]: v for k, v in reduced.items()})
    assert len(reduced) < len(expanded)
    assert equal_exact(r, e, rewrite=False)


def test_tensor_is_zero():
    rep = irrep("A1", (1,))
    a, b = u(rep, 0, 0), u(rep, 0, 1)
    assert tensor_is_zero([(ONE, (a, b)), (-ONE, (a, b))]).equal
    assert not tensor_is_zero([(ONE, (a, b)), (-ONE, (b, a))]).equal
    s = sum((u(rep, 0, l) * ustar(rep, 0, l) for l in range(2)), CoordElement())
    assert tensor_is_zero([(ONE, (s, b)), (-ONE, (CoordElement.one(), b))]).equal


def test_text_and_json():
    rep = irrep("A1", (1,))
    e = u(rep, 0, 1) * ustar(rep, 1, 0) * 2 + 1
    assert "u[1,2]" in e.to_text() and "u[2,1]*" in e.to_text()
    doc = e.to_json()
    assert {t["coeff"] for t in doc["terms"]} == {"1", "2"}
    assert e.scalar_part() is None and CoordElement.const(3).scalar_part() == Scalar.const(3)
    with pytest.raises(IndexError):
        u(rep, 0, 2)
