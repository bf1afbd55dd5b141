"""Bilinear balance laws and energy-momentum identities on plane-wave solutions.

A solution at momentum p is ``psi = u exp(-i p.x)``; its Dirac conjugate
built from a solution v at momentum q is ``vbar exp(+i q.x)``.  Derivatives
therefore act as ``d psi -> -i p psi`` and ``d psibar -> +i q psibar``, and a
bilinear ``psibar G psi`` picks up ``d_mu -> i (q - p)_mu``.

Lemma used throughout: for a finite sum of such bilinears,
``d_mu X^mu = 0`` holds identically in x iff every plane-wave sector satisfies
``(q - p)_mu X^mu = 0``, because distinct exponentials are linearly
independent and a single sector is ``X^mu(p, q) exp(i (q - p).x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact_linalg import I, ZERO, Matrix, Scalar, rank_and_kernel
from .minkowski import FixtureError, FourVector, MomentumSample, metric, nonzero_epsilon
from .outcome import Outcome, cases_equal, expect, negated
from .representations import (
    dirac_alpha,
    dirac_operator,
    dirac_sigma_table,
    gamma5,
    gamma5_lower,
    gamma_matrices,
    gamma_product_identities,
    self_dual_field_map,
)
from .wave_systems import assemble, kernel_of, third_rank_self_dual_map

__all__ = [
    "SolutionPair",
    "dirac_pair",
    "current_conservation",
    "multi_index_balance",
    "energy_momentum_identities",
    "energy_balance",
    "gamma5_trace_identity",
    "selfdual_balance",
    "maxwell_balance",
    "fierz_pauli_maxwell_solutions",
    "dirac_negative_controls",
    "hamiltonian",
]

HALF = Fraction(1, 2)


def _sample(p) -> MomentumSample:
    if isinstance(p, MomentumSample):
        return p
    if isinstance(p, FourVector):
        return MomentumSample.of(*p.upper())
    return MomentumSample.of(*p)


@dataclass(frozen=True)
class SolutionPair:
    """Kernel bases at two momenta; ``u`` sits at p, ``v`` (conjugated) at q."""

    family: str
    p: MomentumSample
    q: MomentumSample
    u: tuple
    v: tuple

    def bar(self, v: Matrix) -> Matrix:
        return v.H @ gamma_matrices()[0]

    def pairings(self):
        for i, u in enumerate(self.u):
            for j, v in enumerate(self.v):
                yield (i, j), u, self.bar(v)


def dirac_pair(p, q, mass_p=None, mass_q=None, check_mass=True) -> SolutionPair:
    """Exact Dirac solutions at p and q.

    With ``check_mass`` the two samples must share a rational mass; the
    negative controls switch it off to build deliberately mismatched pairs.
    """
    sp, sq = _sample(p), _sample(q)
    mp = sp.mass if mass_p is None else Fraction(mass_p)
    mq = sq.mass if mass_q is None else Fraction(mass_q)
    if mp is None or mq is None:
        raise FixtureError("Dirac pairs need rational masses")
    if check_mass and (mp != mq or sp.mass_squared != mp * mp or sq.mass_squared != mq * mq):
        raise FixtureError(f"pair is not on a common mass shell: {sp.label()} / {sq.label()}")
    u = kernel_of(assemble("dirac_gamma", sp.p, mp)).kernel_basis
    v = kernel_of(assemble("dirac_gamma", sq.p, mq)).kernel_basis
    return SolutionPair("dirac_gamma", sp, sq, tuple(u), tuple(v))


def _s(M: Matrix) -> Scalar:
    return M[0, 0]


def _scalar_cases(label, rows: Iterable, inputs) -> Outcome:
    return cases_equal(label, ((k, Matrix(1, 1, [a]), Matrix(1, 1, [b])) for k, a, b in rows), inputs)


def _inputs(pair: SolutionPair) -> dict:
    return {"p": str(pair.p.p), "q": str(pair.q.p), "m2_p": pair.p.mass_squared, "m2_q": pair.q.mass_squared}


def current_conservation(pair: SolutionPair, label="(q - p)_mu vbar gamma^mu u = 0") -> Outcome:
    g = gamma_matrices()
    d = [a - b for a, b in zip(pair.q.p.lower(), pair.p.p.lower())]
    rows = []
    for k, u, vb in pair.pairings():
        rows.append((k, sum((d[mu] * _s(vb @ g[mu] @ u) for mu in range(4)), ZERO), ZERO))
    return _scalar_cases(label, rows, _inputs(pair))


def multi_index_balance(pair: SolutionPair, r=(1, 0, 0, 0), s=(0, 1, 0, 0)) -> list[Outcome]:
    """One multi-index instance: D^r on psibar and D^s on psi are scalar monomials.

    ``D^r`` differentiates in the contravariant coordinates x_mu, i.e. it is
    ``prod (d^mu)^{r_mu}`` and acts as ``prod (i q^mu)^{r_mu}`` on psibar.
    """
    def monomial(vec, sign, exps):
        out = Scalar(1)
        for mu, e in enumerate(exps):
            out = out * (sign * I * vec[mu]) ** e
        return out

    c = monomial(pair.q.p, 1, r) * monomial(pair.p.p, -1, s)
    g = gamma_matrices()
    d = [a - b for a, b in zip(pair.q.p.lower(), pair.p.p.lower())]
    rows = [(k, c * sum((d[mu] * _s(vb @ g[mu] @ u) for mu in range(4)), ZERO), ZERO) for k, u, vb in pair.pairings()]
    inputs = dict(_inputs(pair), r=list(r), s=list(s))
    return [
        expect("multi-index prefactor is nonzero", c != 0, inputs, prefactor=c),
        _scalar_cases("d_mu [(D^r psibar) gamma^mu (D^s psi)] = 0", rows, inputs),
    ]


def energy_momentum_identities(pair: SolutionPair) -> list[Outcome]:
    """Trace relations, the Sigma balance relations and both Sigma forms of T^{mu nu}."""
    g = gamma_matrices()
    sig = dirac_sigma_table()
    m = pair.p.mass
    p, q = pair.p.p, pair.q.p
    pl, ql = p.lower(), q.lower()
    inputs = _inputs(pair)
    tr1, tr2, bal, bal_em, em1, em2, diff = [], [], [], [], [], [], []
    for k, u, vb in pair.pairings():
        vu = _s(vb @ u)
        vg = [_s(vb @ g[mu] @ u) for mu in range(4)]
        # T1^mu_nu = i vbar gamma^mu (-i p_nu) u,  T2^mu_nu = (1/2)(p + q)_nu vbar gamma^mu u
        tr1.append((k, sum((pl[mu] * vg[mu] for mu in range(4)), ZERO), m * vu))
        tr2.append((k, sum((HALF * (pl[mu] + ql[mu]) * vg[mu] for mu in range(4)), ZERO), m * vu))
        for mu in range(4):
            lhs = sum(((pl[nu] - ql[nu]) * _s(vb @ sig[mu][nu] @ u) for nu in range(4)), ZERO)
            bal.append(((k, mu), lhs + (p[mu] + q[mu]) * vu, 2 * m * vg[mu]))
            for lam in range(4):
                lhs = sum(((pl[nu] - ql[nu]) * _s(vb @ sig[mu][nu] @ g[lam] @ u) for nu in range(4)), ZERO)
                bal_em.append(((k, mu, lam), lhs, 2 * p[lam] * vg[mu] - (p[mu] + q[mu]) * vg[lam]))
            for nu in range(4):
                rhs1 = m * metric(mu, nu) * vu + m * _s(vb @ sig[mu][nu] @ u)
                rhs1 -= sum((pl[la] * _s(vb @ g[mu] @ sig[nu][la] @ u) for la in range(4)), ZERO)
                em1.append(((k, mu, nu), p[nu] * vg[mu], rhs1))
                rhs2 = m * metric(mu, nu) * vu
                rhs2 -= HALF * sum((pl[la] * _s(vb @ g[mu] @ sig[nu][la] @ u)
                                    - ql[la] * _s(vb @ sig[nu][la] @ g[mu] @ u) for la in range(4)), ZERO)
                em2.append(((k, mu, nu), HALF * (p[nu] + q[nu]) * vg[mu], rhs2))
                # T1^{mu nu} - T2^{nu mu} is the divergence (1/2) d_l (psibar Sigma^{mu l} gamma^nu psi)
                t2_num = HALF * (p[mu] + q[mu]) * vg[nu]
                div = HALF * sum(((pl[la] - ql[la]) * _s(vb @ sig[mu][la] @ g[nu] @ u) for la in range(4)), ZERO)
                diff.append(((k, mu, nu), p[nu] * vg[mu] - t2_num, div))
    return [
        _scalar_cases("trace of T = i psibar gamma^mu d_nu psi equals m psibar psi", tr1, inputs),
        _scalar_cases("trace of the symmetrized T equals m psibar psi", tr2, inputs),
        _scalar_cases("Sigma balance relation", bal, inputs),
        _scalar_cases("Sigma-gamma balance relation", bal_em, inputs),
        _scalar_cases("T^{mu nu} = m g psibar psi + m psibar Sigma psi - i psibar gamma Sigma d psi", em1, inputs),
        _scalar_cases("symmetrized T^{mu nu} in Sigma form", em2, inputs),
        _scalar_cases("T1^{mu nu} - T2^{nu mu} is a total divergence", diff, inputs),
    ]


def hamiltonian(p, m) -> Matrix:
    """H = alpha.p + m beta, the momentum image of -i alpha.grad + m beta."""
    v = p.p if isinstance(p, MomentumSample) else p
    a = dirac_alpha()
    H = gamma_matrices()[0].scale(Fraction(m))
    for k in range(3):
        if v[k + 1]:
            H = H + a[k].scale(v[k + 1])
    return H


def energy_balance(pair: SolutionPair) -> list[Outcome]:
    """T^{00} = psi^dagger H psi and the energy balance d_0(psi^+ H psi) + div(psi^+ alpha H psi) = 0."""
    m = pair.p.mass
    H = hamiltonian(pair.p, m)
    a = dirac_alpha()
    p, q = pair.p.p, pair.q.p
    inputs = _inputs(pair)
    energy = []
    if p == q:
        for k, u, vb in pair.pairings():
            vdag = vb @ gamma_matrices()[0]
            energy.append((k, p[0] * _s(vdag @ u), _s(vdag @ H @ u)))
    d = [a_ - b_ for a_, b_ in zip(q.lower(), p.lower())]
    flux = []
    for k, u, vb in pair.pairings():
        vdag = vb @ gamma_matrices()[0]
        total = d[0] * _s(vdag @ H @ u) + sum((d[j] * _s(vdag @ a[j - 1] @ H @ u) for j in (1, 2, 3)), ZERO)
        flux.append((k, total, ZERO))
    out = [_scalar_cases("energy balance in momentum space", flux, inputs)]
    if energy:
        out.insert(0, _scalar_cases("T^{00} = psi^dagger H psi", energy, inputs))
    return out


def gamma5_trace_identity(p=(3, 1, 2, 0), m=2, index="lower") -> list[Outcome]:
    """Product formulas for gamma_5 and the contracted triple product on Dirac solutions.

    ``index`` selects gamma_5 (``lower``) or gamma^5 (``upper``) as the
    chirality matrix on the right-hand sides; see gamma_product_identities.
    """
    out = list(gamma_product_identities(index))
    v = FourVector(tuple(p))
    g = gamma_matrices()
    g5 = gamma5_lower() if index == "lower" else gamma5()
    name = "gamma_5" if index == "lower" else "gamma^5"
    lhs = Matrix.zeros(4)
    for (mu, nu, s, t), e in nonzero_epsilon():
        if v[nu]:
            lhs = lhs + (g[mu] @ g[s] @ g[t]).scale(Scalar(0, -1) * v[nu] * e * HALF)
    gp = sum((g[mu].scale(v.lower()[mu]) for mu in range(4)), Matrix.zeros(4))
    mid = (g5 @ gp).scale(3)
    inputs = {"p": str(v), "m": Fraction(m)}
    kernel = rank_and_kernel(dirac_operator(v, m)).kernel_basis
    out.append(cases_equal(f"1/2 e d^nu (gamma gamma gamma psi) = 3 i {name} gamma_nu d^nu psi",
                           ((k, lhs @ u, mid @ u) for k, u in enumerate(kernel)), inputs))
    out.append(cases_equal(f"3 i {name} gamma_nu d^nu psi = 3 m {name} psi",
                           ((k, mid @ u, g5.scale(3 * Fraction(m)) @ u) for k, u in enumerate(kernel)), inputs))
    out.append(expect(f"the contracted triple product equals 3 {name} gamma.p as a matrix", lhs == mid, inputs))
    return out


# ----------------------------------------------------------------------
# self-dual balance


def _lower_all(T: list, rank_: int) -> list:
    """Lower every index of a flattened rank-2 or rank-3 tensor."""
    sgn = lambda i: metric(i, i)
    out = []
    for idx in range(4 ** rank_):
        digits = [(idx // 4 ** (rank_ - 1 - k)) % 4 for k in range(rank_)]
        f = 1
        for d in digits:
            f *= sgn(d)
        out.append(T[idx] * f)
    return out


def _balance_rank2(p, q, Qa, Qb) -> list[Scalar]:
    """(p - q)_nu (Qa*_{mu l} Qb^{l nu} + Qb_{mu l} Qa*^{l nu}); Qa lives at p, Qb at q."""
    Qa_c = [x.conj() for x in Qa]
    Qa_cl, Qb_l = _lower_all(Qa_c, 2), _lower_all(Qb, 2)
    d = [a - b for a, b in zip(p.lower(), q.lower())]
    res = []
    for mu in range(4):
        tot = ZERO
        for nu in range(4):
            if not d[nu]:
                continue
            x = sum((Qa_cl[mu * 4 + l] * Qb[l * 4 + nu] + Qb_l[mu * 4 + l] * Qa_c[l * 4 + nu] for l in range(4)), ZERO)
            tot += d[nu] * x
        res.append(tot)
    return res


def _balance_rank3(p, q, Qa, Qb) -> list[Scalar]:
    """(p - q)_nu (Qa*_{mu l s} Qb^{l nu s} + Qb_{mu l s} Qa*^{l nu s})."""
    Qa_c = [x.conj() for x in Qa]
    Qa_cl, Qb_l = _lower_all(Qa_c, 3), _lower_all(Qb, 3)
    d = [a - b for a, b in zip(p.lower(), q.lower())]
    at = lambda T, i, j, k: T[i * 16 + j * 4 + k]
    res = []
    for mu in range(4):
        tot = ZERO
        for nu in range(4):
            if not d[nu]:
                continue
            x = ZERO
            for l in range(4):
                for s in range(4):
                    x += at(Qa_cl, mu, l, s) * at(Qb, l, nu, s) + at(Qb_l, mu, l, s) * at(Qa_c, l, nu, s)
            tot += d[nu] * x
        res.append(tot)
    return res


def _flat(M: Matrix) -> list:
    return [M[i, 0] for i in range(M.rows)]


def maxwell_balance(p, q) -> list[Outcome]:
    """Second-rank balance for Maxwell solutions F at null p and q, with a negative control."""
    vp, vq = _sample(p).p, _sample(q).p
    Qf = self_dual_field_map()
    Fa = kernel_of(assemble("maxwell_so3c", vp, 0)).kernel_basis
    Fb = kernel_of(assemble("maxwell_so3c", vq, 0)).kernel_basis
    inputs = {"p": str(vp), "q": str(vq)}
    cases = []
    for i, a in enumerate(Fa):
        for j, b in enumerate(Fb):
            r = _balance_rank2(vp, vq, _flat(Qf @ a), _flat(Qf @ b))
            cases.append(((i, j), Matrix.column(r), Matrix.zeros(4, 1)))
    out = [cases_equal("Maxwell self-dual balance on solution pairs", cases, inputs)]
    if vp == vq:
        # the contraction factor p - q vanishes, so no control can fail here
        return out
    bad = _non_solution(Fb, 3, assemble("maxwell_so3c", vq, 0).total)
    neg = []
    for i, a in enumerate(Fa):
        r = _balance_rank2(vp, vq, _flat(Qf @ a), _flat(Qf @ bad))
        neg.append(((i, "non-solution"), Matrix.column(r), Matrix.zeros(4, 1)))
    out.append(negated(cases_equal("", neg, inputs), "Maxwell balance fails for a non-solution field"))
    return out


def _non_solution(basis, dim, system: Matrix) -> Matrix:
    """First unit vector that the system does not annihilate."""
    for k in range(dim):
        e = Matrix.unit(dim, k)
        if not (system @ e).is_zero():
            return e
    raise FixtureError("every unit vector is a solution")


def _fp_maxwell_rows(p) -> Matrix:
    """A -> d_nu Q^{mu nu a}, a 16x10 map."""
    v = _sample(p).p if not isinstance(p, FourVector) else p
    Q = third_rank_self_dual_map(v)
    pl = v.lower()
    rows = []
    for mu in range(4):
        for a in range(4):
            row = [ZERO] * 10
            for nu in range(4):
                if pl[nu]:
                    r = Q.row(mu * 16 + nu * 4 + a)
                    row = [x + Scalar(0, -1) * pl[nu] * y for x, y in zip(row, r)]
            rows.append(row)
    return Matrix.from_rows(rows)


def fierz_pauli_maxwell_solutions(p) -> list[Matrix]:
    """Symmetric tensors A with d_nu Q^{mu nu a}(A) = 0 at a null momentum."""
    v = _sample(p).p
    if v.square() != 0:
        raise FixtureError("the Maxwell-like spin-2 form is considered at null momenta")
    return rank_and_kernel(_fp_maxwell_rows(v)).kernel_basis


def selfdual_balance(p, q) -> list[Outcome]:
    """Third-rank balance on massless spin-2 solution pairs, plus the Maxwell case."""
    vp, vq = _sample(p).p, _sample(q).p
    if vp.square() != 0 or vq.square() != 0:
        raise FixtureError("self-dual balance needs null momenta")
    Qp, Qq = third_rank_self_dual_map(vp), third_rank_self_dual_map(vq)
    Aa, Ab = fierz_pauli_maxwell_solutions(vp), fierz_pauli_maxwell_solutions(vq)
    inputs = {"p": str(vp), "q": str(vq)}
    cases = []
    for i, a in enumerate(Aa):
        for j, b in enumerate(Ab):
            r = _balance_rank3(vp, vq, _flat(Qp @ a), _flat(Qq @ b))
            cases.append(((i, j), Matrix.column(r), Matrix.zeros(4, 1)))
    out = [expect("spin-2 Maxwell-form kernel is nontrivial", bool(Aa) and bool(Ab), inputs,
                  dims=[len(Aa), len(Ab)]),
           cases_equal("third-rank self-dual balance on solution pairs", cases, inputs)]
    if vp == vq:
        return out + maxwell_balance(vp, vq)
    bad = _non_solution(Ab, 10, _fp_maxwell_rows(vq))
    neg = [((i, "non-solution"), Matrix.column(_balance_rank3(vp, vq, _flat(Qp @ a), _flat(Qq @ bad))),
            Matrix.zeros(4, 1)) for i, a in enumerate(Aa)]
    out.append(negated(cases_equal("", neg, inputs), "third-rank balance fails for a non-solution tensor"))
    out.extend(maxwell_balance(vp, vq))
    return out


def dirac_negative_controls(p=(3, 1, 2, 0), q=(3, 2, 2, 0)) -> list[Outcome]:
    """Mass-mismatched pairs and off-shell spinors must break the balance laws.

    ``p`` and ``q`` must lie on different mass shells with rational masses.
    """
    sp, sq = _sample(p), _sample(q)
    if sp.mass_squared == sq.mass_squared:
        raise FixtureError("negative controls need two different masses")
    mixed = dirac_pair(sp, sq, check_mass=False)
    out = [negated(current_conservation(mixed), "current conservation fails for mismatched masses")]
    ems = energy_momentum_identities(mixed)
    out.append(negated(ems[2], "Sigma balance relation fails for mismatched masses"))
    out.append(negated(ems[3], "Sigma-gamma balance relation fails for mismatched masses"))
    # both relations hold as soon as either slot solves the equation, so both slots are off shell
    m = sp.mass
    bad = _non_solution((), 4, dirac_operator(sp.p, m))
    off = SolutionPair("dirac_gamma", sp, sp, (bad,), (bad,))
    out.append(negated(energy_momentum_identities(off)[0], "trace relation fails off the mass shell"))
    out.append(negated(energy_balance(off)[0], "T^{00} = psi^dagger H psi fails off the mass shell"))
    return out
