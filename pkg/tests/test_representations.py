from fractions import Fraction

import pytest
from hypothesis import given, settings

from lubanski import representations as reps
from lubanski.exact_linalg import I, Matrix, rank
from lubanski.minkowski import GROUP_FIXTURES, METRIC, metric
from lubanski.outcome import all_passed

import oracle
from conftest import boost_halves, rotation_halves


@pytest.mark.parametrize("kind", reps.KINDS)
def test_structure_suite(kind):
    outcomes = reps.structure_check(reps.build_representation(kind))
    assert outcomes
    assert all_passed(outcomes), [o.label for o in outcomes if not o.passed]


def test_dimensions():
    dims = {k: reps.build_representation(k).dim for k in reps.KINDS}
    assert dims == {"dirac_bispinor": 4, "weyl_left": 2, "vector": 4, "so3c_vector": 3,
                    "slash_conjugation": 16, "spinor2_conjugation": 4, "sym_tensor": 10}


def test_unknown_kind():
    with pytest.raises(ValueError):
        reps.build_representation("spin_three_halves")


def test_gammas_match_oracle():
    for mine, ref in zip(reps.gamma_matrices(), oracle.gammas()):
        assert oracle.to_sympy(mine) == ref
    assert oracle.to_sympy(reps.gamma5()) == oracle.gamma5_upper()


def test_clifford_anticommutator():
    g = reps.gamma_matrices()
    for mu in range(4):
        for nu in range(4):
            assert g[mu].anticommutator(g[nu]) == Matrix.identity(4).scale(2 * metric(mu, nu))


def test_gamma5_properties():
    g5 = reps.gamma5()
    assert g5 @ g5 == Matrix.identity(4)
    assert reps.gamma5_lower() == g5.scale(-1)
    for g in reps.gamma_matrices():
        assert g5.anticommutator(g).is_zero()


def test_lorentz_algebra_of_every_rep():
    for kind in reps.KINDS:
        M = reps.build_representation(kind).generators
        for a in range(4):
            for b in range(4):
                for c in range(4):
                    for d in range(4):
                        assert M[a][b].commutator(M[c][d]) == reps.algebra_rhs(M, a, b, c, d)


def test_invariants():
    I1, I2 = reps.invariants_I1_I2()
    assert I1 == Matrix.identity(4).scale(-12)
    assert I2 == reps.gamma5_lower().scale(24 * I)


def test_spin_one_casimir():
    s = reps.spin_matrices()
    assert sum((x @ x for x in s), Matrix.zeros(3)) == Matrix.identity(3).scale(-2)


def test_so3c_self_duality_table():
    sig = reps.so3c_sigma_table()
    low = reps.lower_pair(sig)
    from lubanski.minkowski import levi_civita
    for m in range(4):
        for n in range(4):
            rhs = Matrix.zeros(3)
            for s in range(4):
                for t in range(4):
                    e = levi_civita(m, n, s, t, upper=True)
                    if e:
                        rhs = rhs + low[s][t].scale(e)
            assert sig[m][n].scale(2 * I) == rhs


def test_sym_embedding_roundtrip():
    P, E = reps.sym_projection(), reps.sym_embedding()
    assert P @ E == Matrix.identity(10)
    assert rank(E) == 10


def test_massless_block_transform():
    assert all_passed(reps.massless_block_transform())


def test_gamma_product_identities():
    assert all_passed(reps.gamma_product_identities())


# ----------------------------------------------------------------------
# group elements

CLOSED_FORMS = {
    "dirac_bispinor": (reps.dirac_boost, reps.dirac_rotation),
    "weyl_left": (reps.weyl_boost, reps.weyl_rotation),
    "so3c_vector": (reps.so3c_boost, reps.so3c_rotation),
}


@pytest.mark.parametrize("kind", sorted(CLOSED_FORMS))
@pytest.mark.parametrize("params", GROUP_FIXTURES, ids=lambda s: f"{s[0]}{s[1]}")
def test_closed_forms_match_spectral_exponential(kind, params):
    boost, rotation = CLOSED_FORMS[kind]
    g = reps.group_element(kind, *params)
    closed = (boost if params[0] == "boost" else rotation)(*params[1:])
    assert g.matrix == closed
    assert g.matrix @ g.inverse == Matrix.identity(g.rep.dim)


@pytest.mark.parametrize("kind", reps.KINDS)
def test_covariance_at_fixtures(kind):
    elems = [reps.group_element(kind, *params) for params in GROUP_FIXTURES[:3]]
    for g in elems + [elems[0] @ elems[1] @ elems[2]]:
        outcomes = reps.covariance_check(g)
        assert all_passed(outcomes), [o.label for o in outcomes if not o.passed]


def test_vector_rep_reproduces_the_fundamental():
    for params in GROUP_FIXTURES:
        g = reps.group_element("vector", *params)
        assert g.matrix == g.fundamental.entries


@settings(max_examples=10)
@given(boost_halves(), rotation_halves())
def test_random_dirac_elements(b, r):
    g = reps.group_element("dirac_bispinor", "boost", 2, *b) @ reps.group_element("dirac_bispinor", "rotation", "31", *r)
    assert all_passed(reps.covariance_check(g))


@settings(max_examples=10)
@given(boost_halves(), rotation_halves())
def test_random_so3c_elements(b, r):
    g = reps.group_element("so3c_vector", "boost", 1, *b) @ reps.group_element("so3c_vector", "rotation", "12", *r)
    # complex orthogonal: D^T D = I
    assert g.matrix.T @ g.matrix == Matrix.identity(3)
    assert all_passed(reps.covariance_check(g))


def test_group_element_errors():
    from lubanski.minkowski import FixtureError
    with pytest.raises(FixtureError):
        reps.group_element("vector", "boost", 4, Fraction(5, 4), Fraction(3, 4))
    with pytest.raises(FixtureError):
        reps.group_element("vector", "twist", 1, Fraction(5, 4), Fraction(3, 4))
    with pytest.raises(FixtureError):
        reps.group_element("vector", "boost", 1, Fraction(1), Fraction(1))


def test_dirac_operator_squares_to_shell():
    for p, m in [((3, 1, 2, 0), 2), ((1, 0, 0, 1), 0)]:
        D = reps.dirac_operator(p, m)
        Dp = reps.dirac_operator(p, -m)
        p2 = p[0] ** 2 - p[1] ** 2 - p[2] ** 2 - p[3] ** 2
        assert D @ Dp == Matrix.identity(4).scale(p2 - m * m)
    assert METRIC == (1, -1, -1, -1)
