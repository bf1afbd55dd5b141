"""Pauli-Lubanski operators W_mu(p) = 1/2 e_{mu nu s t} p^nu S^{st}, S = -i M.

On a plane wave the orbital part x^b d^a - x^a d^b drops out: it enters W_mu
through e_{mu nu s t} p^nu p^s, which vanishes by antisymmetry.  W_mu(p) is
therefore a finite matrix on the representation space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_linalg import Matrix, Scalar, as_scalar, rank_and_kernel
from .minkowski import METRIC, FourVector, FixtureError, MomentumSample, levi_civita, nonzero_epsilon
from .outcome import Outcome, cases_equal, expect, matrices_equal
from .representations import (
    GroupElement,
    Representation,
    build_representation,
    dirac_operator,
    gamma5_lower,
    gamma_lower,
    lower_pair,
)

__all__ = [
    "PLVector",
    "SpinSpectrum",
    "DEFAULT_SPIN_CANDIDATES",
    "DEFAULT_HELICITY_CANDIDATES",
    "build_pl",
    "casimir_w2",
    "spin_spectrum",
    "helicity_scan",
    "dirac_pl_identity",
    "pl_invariants",
    "pl_covariance",
    "helicity_system",
    "dirac_w_form",
    "casimir_full_identity",
]

DEFAULT_SPIN_CANDIDATES = (Fraction(0), Fraction(-3, 4), Fraction(-2), Fraction(-6))
DEFAULT_HELICITY_CANDIDATES = tuple(Fraction(n, 2) for n in range(-4, 5))


def _as_vector(p) -> FourVector:
    if isinstance(p, MomentumSample):
        return p.p
    if isinstance(p, FourVector):
        return p.upper()
    return FourVector(tuple(p))


@dataclass(frozen=True)
class PLVector:
    """W_0..W_3 (lower index) for one representation at one momentum."""

    rep: Representation
    p: FourVector
    components: tuple

    def upper(self, mu: int) -> Matrix:
        return self.components[mu].scale(METRIC[mu])

    def __getitem__(self, mu: int) -> Matrix:
        return self.components[mu]


def build_pl(rep: Representation | str, p) -> PLVector:
    """W_mu = 1/2 e_{mu nu s t} p^nu S^{st} with S^{st} = -i M^{st}."""
    if isinstance(rep, str):
        rep = build_representation(rep)
    p = _as_vector(p)
    S = rep.spin_factor
    comps = [Matrix.zeros(rep.dim) for _ in range(4)]
    half = Fraction(1, 2)
    for (mu, nu, s, t), e in nonzero_epsilon():
        c = p[nu]
        if c:
            comps[mu] = comps[mu] + S[s][t].scale(c * e * half)
    return PLVector(rep, p, tuple(comps))


def casimir_w2(pl: PLVector) -> Matrix:
    """W^2 = g^{mu nu} W_mu W_nu."""
    out = Matrix.zeros(pl.rep.dim)
    for mu in range(4):
        out = out + (pl[mu] @ pl[mu]).scale(METRIC[mu])
    return out


@dataclass(frozen=True)
class SpinSpectrum:
    """Kernel dimension of W^2 - c m^2 I for each candidate c."""

    rep: str
    p: FourVector
    mass_squared: Fraction
    candidates: tuple
    multiplicities: tuple

    def as_dict(self) -> dict:
        return {c: k for c, k in zip(self.candidates, self.multiplicities)}

    def nonzero(self) -> dict:
        return {c: k for c, k in zip(self.candidates, self.multiplicities) if k}

    @property
    def exhaustive(self) -> bool:
        return sum(self.multiplicities) == build_representation(self.rep).dim


def spin_spectrum(rep, p, candidates: Sequence = DEFAULT_SPIN_CANDIDATES) -> SpinSpectrum:
    """Probe W^2 at rational multiples c of m^2 by exact kernel dimension."""
    if isinstance(rep, str):
        rep = build_representation(rep)
    sample = p if isinstance(p, MomentumSample) else MomentumSample.of(*_as_vector(p))
    if sample.mass_squared <= 0:
        raise FixtureError("spin spectra need a massive momentum")
    W2 = casimir_w2(build_pl(rep, sample))
    one = Matrix.identity(rep.dim)
    cands = tuple(Fraction(c) for c in candidates)
    mult = tuple(rank_and_kernel(W2 - one.scale(c * sample.mass_squared)).kernel_dim for c in cands)
    return SpinSpectrum(rep.name, sample.p, sample.mass_squared, cands, mult)


def helicity_system(pl: PLVector, lam) -> Matrix:
    """Stack of W_mu - lambda p_mu I for mu = 0..3."""
    lam = as_scalar(lam)
    pl_low = pl.p.lower()
    one = Matrix.identity(pl.rep.dim)
    return Matrix.vstack([pl[mu] - one.scale(lam * pl_low[mu]) for mu in range(4)])


def helicity_scan(rep, p, candidates: Sequence = DEFAULT_HELICITY_CANDIDATES) -> list[tuple]:
    """(lambda, kernel dim, kernel basis) of the stacked W_mu - lambda p_mu system."""
    if isinstance(rep, str):
        rep = build_representation(rep)
    v = _as_vector(p)
    if v.square() != 0 or all(c == 0 for c in v):
        raise FixtureError(f"helicity scan needs a nonzero null momentum, got {v}")
    pl = build_pl(rep, v)
    out = []
    for lam in candidates:
        rep_k = rank_and_kernel(helicity_system(pl, lam))
        out.append((Fraction(lam), rep_k.kernel_dim, rep_k.kernel_basis))
    return out


def dirac_pl_identity(p) -> list[Outcome]:
    """W_mu = 1/2 (p_mu + m gamma_mu) gamma_5 on solutions of (gamma.p - m) psi = 0."""
    sample = p if isinstance(p, MomentumSample) else MomentumSample.of(*_as_vector(p))
    m = sample.mass
    if m is None or m <= 0:
        raise FixtureError("the Dirac identity needs a massive momentum with rational mass")
    pl = build_pl("dirac_bispinor", sample)
    kernel = rank_and_kernel(dirac_operator(sample.p, m))
    pl_low = sample.p.lower()
    g5 = gamma5_lower()
    one = Matrix.identity(4)
    diffs = [pl[mu] - ((one.scale(pl_low[mu]) + gamma_lower(mu).scale(m)) @ g5).scale(Fraction(1, 2))
             for mu in range(4)]
    inputs = {"p": str(sample.p), "m": m}
    on_solutions = cases_equal(
        "W_mu = (p_mu + m gamma_mu) gamma_5 / 2 on Dirac solutions",
        (((mu, k), diffs[mu] @ v, Matrix.zeros(4, 1))
         for mu in range(4) for k, v in enumerate(kernel.kernel_basis)),
        inputs,
    )
    full = sum((d.frobenius2() for d in diffs), Fraction(0))
    return [
        expect("Dirac kernel is two-dimensional", kernel.kernel_dim == 2, inputs, kernel_dim=kernel.kernel_dim),
        on_solutions,
        expect("difference is nonzero on the full bispinor space", full != 0, inputs, residual=full),
    ]


def _commutes(label, A: Matrix, mats, inputs) -> Outcome:
    return cases_equal(label, ((k, A @ X, X @ A) for k, X in enumerate(mats)), inputs)


def pl_invariants(rep, p) -> list[Outcome]:
    """Transversality, W^2 commuting with W_mu, and the W-commutator algebra."""
    if isinstance(rep, str):
        rep = build_representation(rep)
    v = _as_vector(p)
    pl = build_pl(rep, v)
    W2 = casimir_w2(pl)
    inputs = {"rep": rep.name, "p": str(v)}
    trans = Matrix.zeros(rep.dim)
    for mu in range(4):
        if v[mu]:
            trans = trans + pl[mu].scale(v[mu])
    out = [
        matrices_equal("p^mu W_mu = 0", trans, Matrix.zeros(rep.dim), inputs),
        _commutes("[W^2, W_mu] = 0", W2, pl.components, inputs),
    ]
    # [W_mu, W_nu] = -i e_{mu nu s t} p^s W^t in the S = -iM convention
    cases = []
    for mu in range(4):
        for nu in range(4):
            rhs = Matrix.zeros(rep.dim)
            for s in range(4):
                for t in range(4):
                    e = levi_civita(mu, nu, s, t, upper=False)
                    if e and v[s]:
                        rhs = rhs + pl.upper(t).scale(Scalar(0, -1) * e * v[s])
            cases.append(((mu, nu), pl[mu].commutator(pl[nu]), rhs))
    out.append(cases_equal("[W_mu, W_nu] = -i e_{mu nu s t} p^s W^t", cases, inputs))
    if v.square() == 0:
        out.append(matrices_equal("W^2 = 0 on null momenta restricted to helicity eigenspaces",
                                  *_helicity_restricted(pl, W2), inputs))
    return out


def _helicity_restricted(pl: PLVector, W2: Matrix):
    vecs = []
    for lam in DEFAULT_HELICITY_CANDIDATES:
        vecs.extend(rank_and_kernel(helicity_system(pl, lam)).kernel_basis)
    if not vecs:
        return Matrix.zeros(1), Matrix.zeros(1)
    B = Matrix.hstack(vecs)
    trans = Matrix.zeros(pl.rep.dim)
    for mu in range(4):
        if pl.p[mu]:
            trans = trans + pl[mu].scale(pl.p[mu])
    return Matrix.vstack([W2 @ B, trans @ B]), Matrix.zeros(2 * pl.rep.dim, B.cols)


def pl_covariance(g: GroupElement, p) -> Outcome:
    """W^mu(Lambda p) = Lambda^mu_nu D W^nu(p) D^-1."""
    v = _as_vector(p)
    L = g.fundamental.entries
    pl = build_pl(g.rep, v)
    pl2 = build_pl(g.rep, v.transform(g.fundamental))
    cases = []
    for mu in range(4):
        rhs = Matrix.zeros(g.rep.dim)
        for nu in range(4):
            if L[mu, nu]:
                rhs = rhs + (g.matrix @ pl.upper(nu) @ g.inverse).scale(L[mu, nu])
        cases.append((mu, pl2.upper(mu), rhs))
    return cases_equal("W^mu(Lambda p) = Lambda^mu_nu D W^nu(p) D^-1", cases,
                       {"rep": g.rep.name, "p": str(v), "element": g.label})


def dirac_w_form(p) -> Outcome:
    """W_mu = -1/2 gamma_5 Sigma_{mu nu} p^nu for the bispinor."""
    v = _as_vector(p)
    pl = build_pl("dirac_bispinor", v)
    from .representations import dirac_sigma_table

    low = lower_pair(dirac_sigma_table())
    g5 = gamma5_lower()
    cases = []
    for mu in range(4):
        rhs = Matrix.zeros(4)
        for nu in range(4):
            if v[nu]:
                rhs = rhs + (g5 @ low[mu][nu]).scale(v[nu] * Fraction(-1, 2))
        cases.append((mu, pl[mu], rhs))
    return cases_equal("W_mu = -(1/2) gamma_5 Sigma_{mu nu} p^nu", cases, {"p": str(v)})


def casimir_full_identity(rep_name: str, p) -> Outcome:
    """W^2 = -(3/4) p^2 I, a matrix identity for the spin-1/2 representations."""
    v = _as_vector(p)
    W2 = casimir_w2(build_pl(rep_name, v))
    target = Matrix.identity(W2.rows).scale(Fraction(-3, 4) * v.square())
    return matrices_equal("W^2 = -(3/4) p^2 I", W2, target, {"rep": rep_name, "p": str(v), "p2": v.square()})
