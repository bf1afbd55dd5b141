from fractions import Fraction

import pytest
from hypothesis import given, settings

from lubanski import wave_systems as ws
from lubanski.exact_linalg import Matrix, Scalar, rank_and_kernel, same_subspace
from lubanski.minkowski import FourVector, lorentz_fixtures, mass_shell_fixtures, off_shell_fixtures
from lubanski.outcome import all_passed
from lubanski.representations import gamma_matrices, sym_index

import oracle
from conftest import massive_momenta, null_momenta

MASSIVE = [s for s in mass_shell_fixtures("massive")]
MASSLESS = [s for s in mass_shell_fixtures("massless")]
MAXWELL = ["maxwell_so3c", "maxwell_curl_div", "maxwell_spinor", "maxwell_laport", "maxwell_quaternion",
           "maxwell_tensor"]

# (massive, massless) kernel dimensions, frozen from exact elimination; None = not assembled
DIMS = {
    "dirac_gamma": (2, 2), "dirac_sigma": (2, 2), "dirac_pl": (2, 2),
    "weyl_sigma": (None, 1), "weyl_compact": (None, 1), "proca": (3, 3),
    **{name: (None, 1) for name in MAXWELL},
    "fierz_pauli_full": (5, 6), "fierz_pauli_final": (5, 5), "fierz_pauli_gauge": (5, 5),
    "einstein_linear": (None, 6), "einstein_gauge": (None, 6),
}


def _dim(family, p, m=0):
    return ws.kernel_of(ws.assemble(family, p, m)).kernel_dim


def test_registry_is_complete():
    assert set(ws.FAMILIES) == set(DIMS)


# ----------------------------------------------------------------------
# operators against literal differentiation


@pytest.mark.parametrize("p, m", [((3, 1, 2, 0), 2), ((2, 1, 1, 1), 1), ((1, 0, 0, 1), 0)])
def test_massive_operators_match_oracle(p, m):
    assert oracle.to_sympy(ws.assemble("dirac_gamma", p, m).total) == oracle.dirac_operator(p, m)
    assert oracle.to_sympy(ws.assemble("proca", p, m).total) == oracle.proca_operator(p, m)
    assert oracle.to_sympy(ws.fierz_pauli_a_operator(p, m)) == oracle.fierz_pauli_potential_operator(p, m)
    assert oracle.to_sympy(ws.fierz_pauli_fa_operator(p, m)) == oracle.fierz_pauli_field_operator(p, m)


@pytest.mark.parametrize("p", [(1, 0, 0, 1), (3, 2, 2, 1)])
def test_massless_operators_match_oracle(p):
    assert oracle.to_sympy(ws.einstein_operator(p)) == oracle.einstein_operator(p)
    assert oracle.to_sympy(ws.assemble("maxwell_curl_div", p).total) == oracle.maxwell_curl_div(p)


def test_kernel_dims_match_sympy():
    cases = [("dirac_sigma", (3, 1, 2, 0), 2), ("fierz_pauli_final", (3, 1, 2, 0), 2),
             ("maxwell_tensor", (3, 2, 2, 1), 0), ("einstein_gauge", (1, 0, 0, 1), 0)]
    for family, p, m in cases:
        total = ws.assemble(family, p, m).total
        assert _dim(family, p, m) == oracle.sympy_kernel_dim(oracle.to_sympy(total))


# ----------------------------------------------------------------------
# assembly


def test_spec_examples():
    s = ws.assemble("dirac_gamma", (2, 0, 0, 0), 2)
    assert s.total == (gamma_matrices()[0] - Matrix.identity(4)).scale(2)
    assert _dim("dirac_gamma", (2, 0, 0, 0), 2) == 2
    w = ws.assemble("weyl_sigma", (1, 0, 0, 1))
    assert w.shape == (8, 2) and _dim("weyl_sigma", (1, 0, 0, 1)) == 1
    assert _dim("maxwell_so3c", (3, 2, 2, 1)) == 1
    assert _dim("maxwell_so3c", (3, 1, 2, 0)) == 0
    assert _dim("fierz_pauli_final", (3, 1, 2, 0), 2) == 5


def test_convention_recorded():
    s = ws.assemble("proca", (3, 1, 2, 0), 2)
    assert s.convention == ws.PLANE_WAVE
    assert s.shape == s.total.shape


def test_assembly_errors():
    with pytest.raises(ws.FamilyError):
        ws.assemble("klein_gordon", (1, 0, 0, 0), 1)
    with pytest.raises(ws.FamilyError):
        ws.assemble("proca", (1, 0, 0, 0), -1)
    with pytest.raises(ws.FamilyError):
        ws.assemble("weyl_compact", (3, 1, 2, 0), 2)
    with pytest.raises(ws.FamilyError):
        ws.equivalence("dirac_gamma", "proca", (3, 1, 2, 0), 2)
    with pytest.raises(ws.FamilyError):
        ws.gauge_check("proca_massless", (2, 0, 0, 0))


@pytest.mark.parametrize("sample", MASSIVE, ids=lambda s: s.label())
@pytest.mark.parametrize("family", sorted(f for f, d in DIMS.items() if d[0] is not None))
def test_massive_kernel_dims(family, sample):
    assert _dim(family, sample.p, sample.mass) == DIMS[family][0]


@pytest.mark.parametrize("sample", MASSLESS, ids=lambda s: s.label())
@pytest.mark.parametrize("family", sorted(DIMS))
def test_massless_kernel_dims(family, sample):
    assert _dim(family, sample.p, 0) == DIMS[family][1]


@pytest.mark.parametrize("sample", MASSIVE, ids=lambda s: s.label())
@pytest.mark.parametrize("family", MAXWELL + ["weyl_sigma", "weyl_compact"])
def test_massless_families_have_no_massive_waves(family, sample):
    assert _dim(family, sample.p, 0) == 0


@settings(max_examples=8)
@given(massive_momenta())
def test_random_massive_dims(p):
    for family in ("dirac_sigma", "proca", "fierz_pauli_final"):
        assert _dim(family, p, 2) == DIMS[family][0]


@settings(max_examples=8)
@given(null_momenta())
def test_random_null_dims(p):
    for family in ("weyl_sigma", "maxwell_spinor", "maxwell_tensor", "fierz_pauli_gauge"):
        assert _dim(family, p, 0) == DIMS[family][1]


# ----------------------------------------------------------------------
# shell condition


def test_dalembert_spec_examples():
    assert ws.dalembert_check("dirac_gamma", (1, 1, 1, 0), 2).passed
    assert _dim("dirac_gamma", (1, 1, 1, 0), 2) == 0
    assert ws.dalembert_check("weyl_compact", (3, 1, 2, 0)).passed
    assert ws.dalembert_check("maxwell_quaternion", (2, 1, 0, 0)).passed


@pytest.mark.parametrize("p", off_shell_fixtures(), ids=str)
@pytest.mark.parametrize("family", sorted(DIMS))
def test_dalembert_every_family(family, p):
    m = 0 if ws.FAMILIES[family].massless_only else 2
    assert ws.dalembert_check(family, p, m).passed


def test_einstein_off_shell_kernel_is_pure_gauge():
    p = FourVector((2, 1, 0, 0))
    k = ws.kernel_of(ws.assemble("einstein_linear", p))
    assert k.kernel_dim == 4
    assert same_subspace(k.kernel_basis, ws.gauge_span(p))
    assert _dim("einstein_gauge", p) == 0


def test_lorentz_invariance_of_dims():
    Ls = lorentz_fixtures()
    for family, p, m in [("dirac_pl", (3, 1, 2, 0), 2), ("maxwell_laport", (1, 0, 0, 1), 0),
                         ("fierz_pauli_full", (1, 0, 0, 1), 0), ("fierz_pauli_final", (2, 0, 0, 0), 2)]:
        assert ws.lorentz_invariance_check(family, p, m, Ls).passed


# ----------------------------------------------------------------------
# equivalences and constraints


@pytest.mark.parametrize("sample", MASSIVE, ids=lambda s: s.label())
def test_dirac_equivalences(sample):
    for other in ("dirac_sigma", "dirac_pl"):
        r = ws.equivalence("dirac_gamma", other, sample.p, sample.mass)
        assert (r.verdict, r.dims) == ("equal_kernels", (2, 2))


@pytest.mark.parametrize("sample", MASSLESS, ids=lambda s: s.label())
def test_massless_equivalences(sample):
    r = ws.equivalence("weyl_sigma", "weyl_compact", sample.p)
    assert (r.verdict, r.dims) == ("equal_kernels", (1, 1))
    for other in MAXWELL[1:]:
        r = ws.equivalence("maxwell_so3c", other, sample.p)
        assert (r.verdict, r.dims) == ("equal_kernels", (1, 1)), other


def test_spinor_iso_spec_example():
    r = ws.equivalence("maxwell_so3c", "maxwell_spinor", (3, 2, 2, 1), 0)
    assert r.isomorphism.shape == (4, 3)
    assert (r.verdict, r.dims) == ("equal_kernels", (1, 1))


def test_equivalence_detects_strict_inclusion():
    # the unconstrained massless spin-2 system contains the gauge-fixed one
    r = ws.equivalence("fierz_pauli_gauge", "fierz_pauli_full", (1, 0, 0, 1), 0)
    assert r.verdict == "a_subset_b" and r.dims == (5, 6)
    assert ws.compare_spans([Matrix.unit(2, 0)], [Matrix.unit(2, 1)]) == "incomparable"


def test_fierz_pauli_full_restricted_equals_final():
    p, m = FourVector((3, 1, 2, 0)), 2
    full = ws.assemble("fierz_pauli_full", p, m).total
    restricted = Matrix.vstack([full, ws._sym_rows(p, "trace"), ws._sym_rows(p, "divergence")])
    k = rank_and_kernel(restricted)
    assert same_subspace(k.kernel_basis, ws.kernel_of(ws.assemble("fierz_pauli_final", p, m)).kernel_basis)


def test_fa_is_twice_a():
    for p, m in [((3, 1, 2, 0), 2), ((2, 1, 1, 1), 1), ((1, 0, 0, 1), 0), ((1, 1, 1, 0), 3)]:
        assert ws.fierz_pauli_fa_operator(p, m) == ws.fierz_pauli_a_operator(p, m).scale(2)


@pytest.mark.parametrize("sample", MASSIVE, ids=lambda s: s.label())
def test_constraints(sample):
    for family in ("proca", "fierz_pauli_final", "fierz_pauli_gauge"):
        outcomes = ws.constraint_check(family, sample.p, sample.mass)
        assert all_passed(outcomes), family


def test_proca_kernel_is_transverse():
    p = FourVector((3, 1, 2, 0))
    k = ws.kernel_of(ws.assemble("proca", p, 2))
    assert k.kernel_dim == 3
    for v in k.kernel_basis:
        assert sum((p.lower()[mu] * v[mu, 0] for mu in range(4)), Scalar(0)) == Scalar(0)


def test_constraint_functional_negative():
    e00 = Matrix.unit(10, sym_index(0, 0))
    assert not (ws._sym_rows(FourVector((3, 1, 2, 0)), "trace") @ e00).is_zero()


@pytest.mark.parametrize("sample", MASSLESS, ids=lambda s: s.label())
def test_gauge(sample):
    assert all_passed(ws.gauge_check("proca_massless", sample.p))
    outcomes = ws.gauge_check("fierz_pauli_massless", sample.p)
    assert all_passed(outcomes)
    assert outcomes[-1].witness["residual"] != 0


# ----------------------------------------------------------------------
# Einstein comparison

# (nonzero entries of E - FP, squared Frobenius norm), frozen from the exact computation
EINSTEIN_DIFF = {(1, 0, 0, 1): (26, Fraction(506, 9)), (3, 2, 2, 1): (94, Fraction(13934, 3))}


@pytest.mark.parametrize("p", sorted(EINSTEIN_DIFF))
def test_einstein_difference_frozen(p):
    diff = ws.einstein_operator(p) - ws.fierz_pauli_a_operator(p, 0)
    assert (diff.nonzero_count(), diff.frobenius2()) == EINSTEIN_DIFF[p]
    ref = oracle.einstein_operator(p) - oracle.fierz_pauli_potential_operator(p, 0)
    assert sum(1 for x in ref if x != 0) == EINSTEIN_DIFF[p][0]


@pytest.mark.parametrize("sample", MASSLESS, ids=lambda s: s.label())
def test_einstein_comparison(sample):
    outcomes = ws.einstein_vs_fierz_pauli(sample.p)
    assert len(outcomes) == 5
    assert all_passed(outcomes), [o.label for o in outcomes if not o.passed]
    assert outcomes[3].witness["dims"] == [5, 5, 5]


@settings(max_examples=5)
@given(null_momenta())
def test_einstein_comparison_random(p):
    assert all_passed(ws.einstein_vs_fierz_pauli(p))


# ----------------------------------------------------------------------
# structural identities


@pytest.mark.parametrize("p", [(1, 0, 0, 1), (3, 1, 2, 0), (1, 2, 3, 4)])
def test_self_duality_and_cyclic(p):
    assert all_passed(ws.self_duality_check(p))
    assert ws.cyclic_identity_check(p).passed


@pytest.mark.parametrize("sample", MASSIVE, ids=lambda s: s.label())
def test_conjugate_dirac_and_proca_joint(sample):
    assert ws.conjugate_dirac_check(sample.p, sample.mass).passed
    assert ws.proca_joint_check(sample.p, sample.mass).passed
