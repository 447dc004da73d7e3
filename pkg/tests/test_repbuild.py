import itertools

import pytest
from hypothesis import given, strategies as st

from artifact._linalg import SparseMatrix, bareiss_det
from artifact.cartan import root_system, weyl_dim
from artifact.repbuild import (
    E,
    F,
    K,
    Kinv,
    RepBuildError,
    UqElement,
    antipode_expand,
    antipode_inv_expand,
    build_irrep,
    coproduct_iter,
    counit_word,
    fundamental_slN,
    pi,
    qbinom,
    relation_checks,
)
from artifact.scalar import ONE, ZERO, Scalar
from conftest import irrep

REPS = [
    ("A1", (1,)), ("A1", (2,)), ("A1", (3,)), ("A1", (4,)),
    ("A2", (1, 0)), ("A2", (0, 1)), ("A2", (1, 1)), ("A2", (2, 0)),
    ("A3", (1, 0, 0)), ("B2", (1, 0)), ("B2", (0, 1)), ("C3", (1, 0, 0)), ("G2", (1, 0)),
]


@pytest.mark.parametrize("name,weight", REPS)
def test_relations_and_dimension(name, weight):
    rep = irrep(name, weight)
    assert rep.dim == weyl_dim(rep.rs, rep.highest_weight)
    assert all(relation_checks(rep).values())


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_fundamental_slN(N):
    rep = fundamental_slN(N)
    assert rep.orthonormal_flag
    assert all(relation_checks(rep).values())
    assert [w.coords for w in rep.basis_weights] == [w.coords for w in irrep(f"A{N - 1}", (1,) + (0,) * (N - 2)).basis_weights]


@pytest.mark.parametrize("name,weight", REPS)
def test_gram_symmetric_invertible(name, weight):
    rep = irrep(name, weight)
    for mu, g in rep.gram.items():
        n = len(rep.indices_of_weight(mu))
        dense = [[g.get((i, j), ZERO) for j in range(n)] for i in range(n)]
        assert all(dense[i][j] == dense[j][i] for i in range(n) for j in range(n))
        assert bareiss_det(dense)


def _words(rank, length):
    gens = [g for a in range(1, rank + 1) for g in (E(a), F(a), K(a), Kinv(a))]
    return list(itertools.product(gens, repeat=length))


@pytest.mark.parametrize("name,weight", [("A1", (2,)), ("A2", (1, 0)), ("B2", (0, 1))])
def test_pi_is_multiplicative(name, weight):
    rep = irrep(name, weight)
    words = _words(rep.rs.rank, 2)
    for w1, w2 in zip(words[::3], words[1::3]):
        assert pi(rep, w1 + w2) == pi(rep, w1) @ pi(rep, w2)


@pytest.mark.parametrize("name,weight", [("A1", (2,)), ("A2", (1, 1)), ("G2", (1, 0))])
def test_hopf_axioms_in_representation(name, weight):
    rep = irrep(name, weight)
    r = rep.rs.rank
    ident = SparseMatrix.identity(rep.dim)
    elems = [UqElement.coerce(x) for x in (E(1), F(r), K(1))] + [UqElement.coerce(E(1)) * F(r), UqElement.coerce(F(1)) * E(1)]
    for x in elems:
        eps = sum((c * counit_word(w) for w, c in x.terms.items()), ZERO)
        # (eps (x) id) Delta = id and m (S (x) id) Delta = eps 1
        left = SparseMatrix.zero(rep.dim)
        antip = SparseMatrix.zero(rep.dim)
        for c, (x1, x2) in coproduct_iter(x, 2):
            left = left + pi(rep, x2).scale(c * sum((d * counit_word(w) for w, d in UqElement.coerce(x1).terms.items()), ZERO))
            antip = antip + (pi(rep, antipode_expand(x1)) @ pi(rep, x2)).scale(c)
        assert left == pi(rep, x)
        assert antip == ident.scale(eps)
        assert pi(rep, antipode_inv_expand(antipode_expand(x))) == pi(rep, x)


def _kron(a, b):
    A, B = a.to_dense(), b.to_dense()
    n, m = len(A), len(B)
    return [[A[i // m][j // m] * B[i % m][j % m] for j in range(n * m)] for i in range(n * m)]


def _dense_add(x, y, c):
    return [[u + c * v for u, v in zip(r, t)] for r, t in zip(x, y)]


def test_coproduct_coassociative():
    rep = irrep("A1", (1,))
    x = UqElement.coerce(E(1)) * F(1) * K(1)
    n = rep.dim ** 3
    three = [[ZERO] * n for _ in range(n)]
    for c, (a, b, d) in coproduct_iter(x, 3):
        ab = SparseMatrix.from_dense(_kron(pi(rep, a), pi(rep, b)))
        three = _dense_add(three, _kron(ab, pi(rep, d)), c)
    nested = [[ZERO] * n for _ in range(n)]
    for c, (y1, y2) in coproduct_iter(x, 2):
        for d, (z1, z2) in coproduct_iter(y1, 2):
            zz = SparseMatrix.from_dense(_kron(pi(rep, z1), pi(rep, z2)))
            nested = _dense_add(nested, _kron(zz, pi(rep, y2)), c * d)
    assert three == nested


def test_truncated_slice():
    rep = build_irrep("A2", [3, 1], max_depth=2)
    full = build_irrep("A2", [3, 1])
    assert rep.depth_limit == 2 and rep.dim < full.dim
    assert max(rep.depths) <= 2
    # the top slice is E-stable
    for a in (1, 2):
        e_full = pi(full, E(a))
        e_cut = pi(rep, E(a))
        assert e_cut.to_dense()[0] == e_full.to_dense()[0][: rep.dim]


def test_qbinom():
    q = Scalar.monomial
    assert qbinom(2, 1) == q(1) + q(-1)
    assert qbinom(4, 0) == ONE and qbinom(4, 4) == ONE
    assert qbinom(3, 1, 2) == q(4) + 1 + q(-4)


@given(st.sampled_from(["A1", "A2", "B2"]), st.data())
def test_dimension_matches_weyl(name, data):
    rs = root_system(name)
    lam = data.draw(st.lists(st.integers(0, 2 if rs.rank > 1 else 5), min_size=rs.rank, max_size=rs.rank))
    rep = irrep(name, tuple(lam))
    assert rep.dim == weyl_dim(rs, rs.weight(lam))
    assert sum(rep.weight_multiplicities().values()) == rep.dim


def test_bad_inputs():
    with pytest.raises(ValueError):
        build_irrep("A2", [1, -1])
    with pytest.raises(ValueError):
        build_irrep("A2", [1])
    with pytest.raises(ValueError):
        build_irrep("A2", [1, 0], max_depth=-1)
    assert issubclass(RepBuildError, RuntimeError)
