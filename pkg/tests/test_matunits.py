import pytest
from hypothesis import given, strategies as st

from artifact._catalogue import catalogue, zero_block_idempotent
from artifact.coordring import CoordElement, counit, decide, equal_exact
from artifact.matunits import (
    CoeffMatrix,
    CoordMatrix,
    antipode_relations,
    build_P,
    build_Q,
    conjugate_star,
    is_flag_supported,
    is_projection,
    k2rho_diag,
    matrix_unit_suite,
    qtrace,
    theta_conjugation_check,
    unit_M,
    unit_N,
)
from artifact.repbuild import fundamental_slN
from artifact.scalar import ONE, ZERO, Scalar
from conftest import irrep


@pytest.mark.parametrize("key", [("A1", (1,)), ("A1", (2,)), ("A2", (1, 0))])
def test_matrix_unit_suite(key):
    rep = irrep(*key)
    suite = matrix_unit_suite(rep)
    assert all(v.equal and v.oracle == "exact" for v in suite.values()), suite
    rel = antipode_relations(rep)
    assert all(v.equal and v.oracle == "exact" for v in rel.values()), rel


def test_sampled_suite_is_deterministic():
    rep = irrep("A2", (1, 1))
    a = matrix_unit_suite(rep, sample=6, seed=3)
    b = matrix_unit_suite(rep, sample=6, seed=3)
    assert a == b and all(v.equal for v in a.values())


def test_counit_separates_units():
    """Linear independence of the M^n_m: eps applied entrywise recovers c."""
    rep = irrep("A2", (1, 0))
    n = rep.dim
    c = CoeffMatrix([[Scalar.monomial(i - j) if (i + j) % 2 else ZERO for j in range(n)] for i in range(n)])
    P = build_P(rep, c)
    assert P.counit() == [list(r) for r in c.c]
    Q = build_Q(rep, c)
    assert Q.counit() == [list(r) for r in c.c]


def test_projection_predicates():
    rep = irrep("A2", (1, 1))
    z = zero_block_idempotent(rep)
    assert is_projection(z) and is_flag_supported(rep, z) and not z.is_diagonal()
    assert not is_projection(CoeffMatrix.diag([ONE * 2] + [ZERO] * 7))
    assert not is_flag_supported(rep, CoeffMatrix.unit(8, 0, 1))


@pytest.mark.parametrize("key,c", [
    (("A1", (1,)), CoeffMatrix.diag([ONE, ZERO])),
    (("A2", (1, 0)), CoeffMatrix.diag([ZERO, ONE, ONE])),
])
def test_P_and_Q_are_idempotent(key, c):
    rep = irrep(*key)
    for X in (build_P(rep, c), build_Q(rep, c)):
        assert (X @ X).compare(X).equal


@pytest.mark.parametrize("inst", catalogue(include_grassmannians=True), ids=lambda i: i.name)
def test_flag_membership_and_theta(inst):
    from artifact.flags import in_flag

    P, Q = build_P(inst.rep, inst.c), build_Q(inst.rep, inst.c)
    assert all(in_flag(e, "right") for row in P.entries for e in row)
    assert all(in_flag(e, "left") for row in Q.entries for e in row)
    assert theta_conjugation_check(inst.rep, inst.c)


def test_theta_strictness():
    rep = irrep("A2", (1, 0))
    c = CoeffMatrix.unit(3, 0, 1)
    with pytest.raises(ValueError):
        theta_conjugation_check(rep, c)
    assert not theta_conjugation_check(rep, c, strict=False)


@pytest.mark.parametrize("key", [("A1", (2,)), ("A2", (1, 1))])
def test_qtrace_of_units(key):
    rep = irrep(*key)
    kinv, k = k2rho_diag(rep, -1), k2rho_diag(rep, 1)
    for m in range(rep.dim):
        assert decide(qtrace(kinv, unit_M(rep, m, m)), CoordElement.const(kinv[m])).equal
        assert decide(qtrace(k, unit_N(rep, m, m)), CoordElement.const(k[m])).equal


def test_star_relation_on_orthonormal_basis():
    rep = fundamental_slN(3)
    n = rep.dim
    for m in range(n):
        for k in range(n):
            A, B = unit_M(rep, m, k), unit_M(rep, k, m)
            for i in range(n):
                for j in range(n):
                    assert equal_exact(conjugate_star(A[i, j]), B[j, i])
    with pytest.raises(ValueError):
        conjugate_star(unit_M(irrep("A2", (1, 0)), 0, 0)[0, 0])


@given(st.lists(st.sampled_from([0, 1]), min_size=4, max_size=4))
def test_diagonal_projections(bits):
    rep = irrep("A1", (3,))
    c = CoeffMatrix.diag([ONE if b else ZERO for b in bits])
    assert is_projection(c) and is_flag_supported(rep, c)
    tr = qtrace(k2rho_diag(rep, -1), build_P(rep, c))
    expected = sum((Scalar.monomial(-(3 - 2 * k)) for k, b in enumerate(bits) if b), ZERO)
    assert counit(tr) == expected


def test_shape_errors():
    rep = irrep("A1", (1,))
    with pytest.raises(ValueError):
        build_P(rep, CoeffMatrix.identity(3))
    with pytest.raises(ValueError):
        CoeffMatrix([[ONE, ZERO]])
    assert CoordMatrix.identity(rep).counit() == [[ONE, ZERO], [ZERO, ONE]]
