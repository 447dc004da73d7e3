import pytest
from hypothesis import given, strategies as st

from artifact.cartan import Weight, bilinear, parse_weight, positive_roots, root_system, two_rho, weyl_dim
from oracles import weyl_dimension

NAMES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"]
N_POSITIVE = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "G2": 6, "F4": 24, "E6": 36}


@pytest.mark.parametrize("name", NAMES)
def test_simple_root_lengths(name):
    rs = root_system(name)
    for i in range(1, rs.rank + 1):
        a = rs.alpha(i)
        assert bilinear(rs, a, a) == 2 * rs.d(i)
        assert bilinear(rs, a, a) in (2, 4, 6)
        for j in range(1, rs.rank + 1):
            # (omega_i, alpha_j) = d_j delta_ij
            assert bilinear(rs, rs.omega(i), rs.alpha(j)) == (rs.d(j) if i == j else 0)


@pytest.mark.parametrize("name", NAMES)
def test_positive_roots(name):
    rs = root_system(name)
    roots = positive_roots(rs)
    assert len(roots) == N_POSITIVE[name]
    pos = set(roots)
    for beta in roots:
        for i in range(1, rs.rank + 1):
            a = rs.alpha(i)
            img = beta - a * int(2 * bilinear(rs, beta, a) / bilinear(rs, a, a))
            assert img in pos or img == -a


def test_bourbaki_conventions():
    assert root_system("B2").cartan_matrix == ((2, -1), (-2, 2))
    assert root_system("G2").cartan_matrix == ((2, -3), (-1, 2))
    assert root_system("B2").symmetrizers == (2, 1)
    assert root_system("G2").symmetrizers == (1, 3)
    assert two_rho(root_system("A2")) == Weight((2, 2))


rank_names = st.sampled_from(["A1", "A2", "A3", "A4", "B2", "B3", "C3", "G2", "D4", "F4"])


@given(rank_names, st.data())
def test_bilinear_symmetric_and_linear(name, data):
    rs = root_system(name)
    w = st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank).map(lambda c: Weight(tuple(c)))
    a, b, c = data.draw(w), data.draw(w), data.draw(w)
    k = data.draw(st.integers(-3, 3))
    assert bilinear(rs, a, b) == bilinear(rs, b, a)
    assert bilinear(rs, a + c * k, b) == bilinear(rs, a, b) + k * bilinear(rs, c, b)


@pytest.mark.parametrize(
    "name,weight",
    [("A1", [3]), ("A2", [1, 1]), ("A2", [2, 1]), ("A3", [1, 0, 1]), ("B2", [1, 0]), ("B2", [0, 1]),
     ("B2", [1, 1]), ("G2", [1, 0]), ("G2", [0, 1]), ("C3", [0, 1, 0]), ("D4", [0, 1, 0, 0]), ("F4", [0, 0, 0, 1])],
)
def test_weyl_dim_against_oracle(name, weight):
    rs = root_system(name)
    assert weyl_dim(rs, rs.weight(weight)) == weyl_dimension(rs.cartan_matrix, weight)


def test_parsing_errors():
    rs = root_system("A2")
    assert parse_weight(rs, "1,1") == Weight((1, 1))
    for bad in ("X3", "A0", "B1", "G3", "E5"):
        with pytest.raises(ValueError):
            root_system(bad)
    with pytest.raises(ValueError):
        parse_weight(rs, "1")
    with pytest.raises(ValueError):
        parse_weight(rs, "a,b")
    with pytest.raises(ValueError):
        weyl_dim(rs, Weight((1, -1)))
