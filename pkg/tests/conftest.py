from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lubanski.exact_linalg import Matrix, Scalar

settings.register_profile("exact", deadline=None, max_examples=25,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("exact")

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {title}")


@pytest.fixture
def acceptance():
    def record(n, ok, title):
        ACCEPTANCE[n] = (bool(ok), title)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {title}")
    return record


# ----------------------------------------------------------------------
# strategies

small_ints = st.integers(-4, 4)
rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussians = st.builds(Scalar, rationals, rationals)


def matrices(rows=st.integers(1, 4), cols=st.integers(1, 4), elements=gaussians):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(elements, min_size=rc[0] * rc[1], max_size=rc[0] * rc[1]).map(
            lambda xs: Matrix(rc[0], rc[1], xs)))


def square_matrices(n, elements=gaussians):
    return st.lists(elements, min_size=n * n, max_size=n * n).map(lambda xs: Matrix(n, n, xs))


_t = st.builds(Fraction, st.integers(-5, 5), st.integers(6, 9))


@st.composite
def unit_directions(draw):
    """Rational points on the unit sphere by inverse stereographic projection."""
    u, v = draw(rationals), draw(rationals)
    d = u * u + v * v + 1
    return (2 * u / d, 2 * v / d, (u * u + v * v - 1) / d)


@st.composite
def null_momenta(draw):
    k = draw(st.integers(1, 3))
    n = draw(unit_directions())
    return (Fraction(k), k * n[0], k * n[1], k * n[2])


@st.composite
def massive_momenta(draw, mass=Fraction(2)):
    t = draw(_t)
    n = draw(unit_directions())
    e = mass * (1 + t * t) / (1 - t * t)
    k = mass * 2 * t / (1 - t * t)
    return (e, k * n[0], k * n[1], k * n[2])


@st.composite
def boost_halves(draw):
    t = draw(_t)
    return ((1 + t * t) / (1 - t * t), 2 * t / (1 - t * t))


@st.composite
def rotation_halves(draw):
    t = draw(st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)))
    return ((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


four_vectors = st.tuples(rationals, rationals, rationals, rationals)
