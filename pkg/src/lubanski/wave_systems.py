"""Momentum-space wave equations and their overdetermined companions.

Every family is evaluated on a plane wave ``exp(-i p.x)``, so each derivative
``d_mu`` becomes ``-i p_mu``.  A system is a vertical stack of labelled blocks
acting on the field coordinates of its family; the solutions at momentum p
are the exact kernel of the stack.

Field spaces:

* ``bispinor`` (4), ``spinor2`` (2), ``vector`` (A^mu, 4);
* ``complex3`` (F = E + iH, 3);
* ``spinor_matrix`` (vec of a 2x2 matrix, column-major, 4);
* ``sym_tensor`` (A^{ab} upper indices, pairs (00,01,02,03,11,12,13,22,23,33)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact_linalg import I, ONE, ZERO, KernelReport, Matrix, Scalar, as_scalar, rank, rank_and_kernel, same_subspace, span_contains
from .minkowski import METRIC, FourVector, MomentumSample, levi_civita, metric, nonzero_epsilon
from .outcome import Outcome, cases_equal, expect, matrices_equal
from .representations import (
    SYM_PAIRS,
    dirac_operator,
    dirac_sigma_table,
    gamma5_lower,
    gamma_lower,
    gamma_matrices,
    lower_pair,
    pauli,
    quaternion_matrices,
    self_dual_field_map,
    so3c_sigma_table,
    sym_index,
    vec_spinor_field,
    weyl_sigma_table,
)

__all__ = [
    "PLANE_WAVE",
    "FAMILIES",
    "Family",
    "LinearSystem",
    "EquivalenceResult",
    "FamilyError",
    "assemble",
    "kernel_of",
    "equivalence",
    "default_iso",
    "constraint_check",
    "gauge_check",
    "einstein_vs_fierz_pauli",
    "dalembert_check",
    "field_strength_map",
    "self_dual_map",
    "third_rank_field_map",
    "third_rank_self_dual_map",
    "fierz_pauli_a_operator",
    "fierz_pauli_fa_operator",
    "einstein_operator",
    "self_duality_check",
    "cyclic_identity_check",
    "conjugate_dirac_rows",
    "conjugate_dirac_check",
    "proca_joint_check",
    "lorentz_invariance_check",
    "gauge_span",
    "field_vector_map",
]

PLANE_WAVE = "psi ~ exp(-i p.x), d_mu -> -i p_mu"
MINUS_I = Scalar(0, -1)
HALF = Fraction(1, 2)


class FamilyError(ValueError):
    """Unknown family or incompatible family/mass combination."""


def _vec(p) -> FourVector:
    if isinstance(p, MomentumSample):
        return p.p
    if isinstance(p, FourVector):
        return p.upper()
    return FourVector(tuple(p))


def _columns(fn: Callable, n: int) -> Matrix:
    """Matrix whose k-th column is the flat output of ``fn`` on basis vector k."""
    cols = []
    for k in range(n):
        x = [ZERO] * n
        x[k] = ONE
        cols.append(Matrix.column(fn(x)))
    return Matrix.hstack(cols)


def _sym(x) -> list[list[Scalar]]:
    """4x4 symmetric tensor A^{ab} from its 10 coordinates."""
    return [[x[sym_index(a, b)] for b in range(4)] for a in range(4)]


def _sym_flat(T) -> list[Scalar]:
    return [T[a][b] for a, b in SYM_PAIRS]


def _zeros4():
    return [[ZERO] * 4 for _ in range(4)]


# ----------------------------------------------------------------------
# tensor helpers on explicit components (upper indices unless noted)


def _lower_first(pl, A):
    """div^b = p_n A^{nb}."""
    return [sum((pl[n] * A[n][b] for n in range(4)), ZERO) for b in range(4)]


def _trace(A):
    return sum((A[a][a] * METRIC[a] for a in range(4)), ZERO)


def fierz_pauli_a_operator(p, m=0) -> Matrix:
    """Momentum image of the potential form plus m^2 A (10x10, upper indices).

    d^2 A - 2/3 (d^a d_n A^{nb} + d^b d_n A^{na}) + 1/3 d^a d^b A
    - 1/3 g^{ab} (d^2 A - d_m d_n A^{mn}) + m^2 A^{ab}.
    """
    pu = _vec(p)
    pl = pu.lower()
    p2 = pu.square()
    m2 = as_scalar(m) * as_scalar(m)

    def fn(x):
        A = _sym(x)
        div = _lower_first(pl, A)
        tr = _trace(A)
        pp = sum((pl[b] * div[b] for b in range(4)), ZERO)
        out = _zeros4()
        for a in range(4):
            for b in range(4):
                v = -p2 * A[a][b]
                v += Fraction(2, 3) * (pu[a] * div[b] + pu[b] * div[a])
                v -= Fraction(1, 3) * pu[a] * pu[b] * tr
                v += Fraction(1, 3) * metric(a, b) * (p2 * tr - pp)
                v += m2 * A[a][b]
                out[a][b] = v
        return _sym_flat(out)

    return _columns(fn, 10)


def third_rank_field(pu, A):
    """F^{n a b} = d^n A^{ab} - d^a A^{nb} -> -i (p^n A^{ab} - p^a A^{nb})."""
    return [[[MINUS_I * (pu[n] * A[a][b] - pu[a] * A[n][b]) for b in range(4)] for a in range(4)] for n in range(4)]


def third_rank_field_map(p) -> Matrix:
    """64x10 map A -> F^{nab} flattened as n*16 + a*4 + b."""
    pu = _vec(p)

    def fn(x):
        F = third_rank_field(pu, _sym(x))
        return [F[n][a][b] for n in range(4) for a in range(4) for b in range(4)]

    return _columns(fn, 10)


def fierz_pauli_fa_operator(p, m=0) -> Matrix:
    """Field-strength form, assembled through F^{nab}, plus 2 m^2 A (10x10).

    d_n F^{nab} + d_n F^{nba} - 2/3 g^{ab} d_n T^n + 1/3 d^a T^b + 1/3 d^b T^a + 2 m^2 A^{ab},
    with T^n = F^{n s t} g_{st}.
    """
    pu = _vec(p)
    pl = pu.lower()
    m2 = as_scalar(m) * as_scalar(m)

    def fn(x):
        A = _sym(x)
        F = third_rank_field(pu, A)
        T = [sum((F[n][s][s] * METRIC[s] for s in range(4)), ZERO) for n in range(4)]
        dT = sum((MINUS_I * pl[n] * T[n] for n in range(4)), ZERO)
        out = _zeros4()
        for a in range(4):
            for b in range(4):
                v = sum((MINUS_I * pl[n] * (F[n][a][b] + F[n][b][a]) for n in range(4)), ZERO)
                v -= Fraction(2, 3) * metric(a, b) * dT
                v += Fraction(1, 3) * (MINUS_I * pu[a] * T[b] + MINUS_I * pu[b] * T[a])
                v += 2 * m2 * A[a][b]
                out[a][b] = v
        return _sym_flat(out)

    return _columns(fn, 10)


def einstein_operator(p) -> Matrix:
    """Linearized Einstein operator with both indices raised, acting on h^{ab} (10x10).

    d^a d_s h^{sb} + d^b d_s h^{sa} - d^a d^b h - d^2 h^{ab} - g^{ab}(d_s d_t h^{st} - d^2 h).
    """
    pu = _vec(p)
    pl = pu.lower()
    p2 = pu.square()

    def fn(x):
        A = _sym(x)
        div = _lower_first(pl, A)
        tr = _trace(A)
        pp = sum((pl[b] * div[b] for b in range(4)), ZERO)
        out = _zeros4()
        for a in range(4):
            for b in range(4):
                v = pu[a] * div[b] + pu[b] * div[a] - pu[a] * pu[b] * tr - p2 * A[a][b]
                v -= metric(a, b) * (pp - p2 * tr)
                out[a][b] = -v
        return _sym_flat(out)

    return _columns(fn, 10)


def _sym_rows(p, kind) -> Matrix:
    """Constraint rows on symmetric tensors (momentum factors only, no -i)."""
    pu = _vec(p)
    pl = pu.lower()
    p2 = pu.square()

    def fn(x):
        A = _sym(x)
        div = _lower_first(pl, A)
        tr = _trace(A)
        if kind == "divergence":          # p_n A^{n mu}
            return div
        if kind == "trace":
            return [tr]
        if kind == "double_divergence":   # p_m p_n A^{mn}
            return [sum((pl[b] * div[b] for b in range(4)), ZERO)]
        if kind == "divergence_sym":      # p^a div^b + p^b div^a
            out = _zeros4()
            for a in range(4):
                for b in range(4):
                    out[a][b] = pu[a] * div[b] + pu[b] * div[a]
            return _sym_flat(out)
        if kind == "fp_gauge":            # 4 p_n A^{mu n} - p^mu A
            return [4 * div[mu] - pu[mu] * tr for mu in range(4)]
        if kind == "de_donder":           # 2 p_n h^{mu n} - p^mu h
            return [2 * div[mu] - pu[mu] * tr for mu in range(4)]
        if kind == "wave":                # -p^2 A
            return [-p2 * v for v in x]
        raise FamilyError(kind)

    return _columns(fn, 10)


# ----------------------------------------------------------------------
# second-rank field strengths


def field_strength_map(p) -> Matrix:
    """16x4 map A^mu -> F^{mn} = d^m A^n - d^n A^m (row-major (m, n))."""
    pu = _vec(p)

    def fn(x):
        return [MINUS_I * (pu[m] * x[n] - pu[n] * x[m]) for m in range(4) for n in range(4)]

    return _columns(fn, 4)


def _dual_rows(n_out: int, rows_of: Callable) -> Matrix:
    return Matrix.from_rows([rows_of(k) for k in range(n_out)])


def lower_two(M16: Matrix) -> Matrix:
    """Lower both indices of a row-major (m, n) tensor map."""
    return Matrix.diag([METRIC[m] * METRIC[n] for m in range(4) for n in range(4)]) @ M16


def epsilon_upper_16() -> Matrix:
    """16x16 matrix of X_{st} -> e^{mnst} X_{st}."""
    rows = []
    for m in range(4):
        for n in range(4):
            rows.append([levi_civita(m, n, s, t, upper=True) for s in range(4) for t in range(4)])
    return Matrix.from_rows(rows)


def self_dual_map(p) -> Matrix:
    """Q^{mn} = F^{mn} - (i/2) e^{mnst} F_{st}, as a 16x4 map of A."""
    F = field_strength_map(p)
    return F - (epsilon_upper_16() @ lower_two(F)).scale(I * HALF)


def third_rank_self_dual_map(p) -> Matrix:
    """Q^{mna} = F^{mna} - (i/2) e^{mnst} F_{st}^a as a 64x10 map of A."""
    F = third_rank_field_map(p)
    E = epsilon_upper_16()
    rows = [None] * 64
    for a in range(4):
        idx = [m * 16 + n * 4 + a for m in range(4) for n in range(4)]
        Fa = Matrix.vstack([Matrix(1, 10, F.row(i)) for i in idx])
        Qa = Fa - (E @ lower_two(Fa)).scale(I * HALF)
        for k, i in enumerate(idx):
            rows[i] = Qa.row(k)
    return Matrix(64, 10, [x for r in rows for x in r])


def field_vector_map(p) -> Matrix:
    """3x4 map A -> F_k = -Q^{0k}(A)."""
    Q = self_dual_map(p)
    return Matrix.vstack([Matrix(1, 4, Q.row(k)).scale(-1) for k in (1, 2, 3)])


# ----------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Family:
    name: str
    field_space: str
    dim: int
    massless_only: bool
    assumes_shell: bool
    builder: Callable
    description: str
    gauge_degenerate: bool = False


def _dirac_gamma(p, m):
    return [("gamma.p - m", dirac_operator(p, m))]


def _dirac_sigma(p, m):
    sig = dirac_sigma_table()
    g = gamma_matrices()
    pl = p.lower()
    blocks = []
    for mu in range(4):
        B = g[mu].scale(-as_scalar(m))
        for nu in range(4):
            if pl[nu]:
                B = B + (sig[mu][nu] + Matrix.identity(4).scale(metric(mu, nu))).scale(pl[nu])
        blocks.append((f"mu={mu}", B))
    return blocks


def _dirac_pl(p, m):
    g = gamma_matrices()
    g5 = gamma5_lower()
    pl = p.lower()
    blocks = []
    for mu in range(4):
        B = Matrix.zeros(4)
        for (a, nu, s, t), e in nonzero_epsilon():
            if a == mu and p[nu]:
                B = B + (g[s] @ g[t]).scale(MINUS_I * p[nu] * e * HALF)
        B = B - (Matrix.identity(4).scale(pl[mu]) + gamma_lower(mu).scale(m)) @ g5
        blocks.append((f"mu={mu}", B))
    return blocks


def _weyl_sigma(p, m):
    sig = weyl_sigma_table()
    pl = p.lower()
    blocks = []
    for mu in range(4):
        B = Matrix.identity(2).scale(-(MINUS_I * p[mu]))
        for nu in range(4):
            if pl[nu]:
                B = B + sig[mu][nu].scale(MINUS_I * pl[nu])
        blocks.append((f"mu={mu}", B))
    return blocks


def _weyl_compact(p, m):
    s = pauli()
    pl = p.lower()
    B = sum((s[mu].scale(MINUS_I * pl[mu]) for mu in range(4)), Matrix.zeros(2))
    return [("sigma^mu d_mu", B)]


def _proca(p, m):
    pl = p.lower()
    p2 = p.square()
    m2 = as_scalar(m) * as_scalar(m)
    B = Matrix(4, 4, [(-p2 + m2 if a == b else ZERO) + p[a] * pl[b] for a in range(4) for b in range(4)])
    return [("d_n F^{n mu} + m^2 A^mu", B)]


def _maxwell_so3c(p, m):
    sig = so3c_sigma_table()
    pl = p.lower()
    blocks = []
    for mu in range(4):
        B = Matrix.zeros(3)
        for nu in range(4):
            if pl[nu]:
                B = B + (sig[mu][nu] + Matrix.identity(3).scale(metric(mu, nu))).scale(MINUS_I * pl[nu])
        blocks.append((f"mu={mu}", B))
    return blocks


def _maxwell_curl_div(p, m):
    pl = p.lower()
    div = Matrix(1, 3, [MINUS_I * pl[k] for k in (1, 2, 3)])
    rows = []
    for a in (1, 2, 3):
        row = []
        for c in (1, 2, 3):
            v = sum((MINUS_I * levi_civita(0, a, b, c) * pl[b] for b in (1, 2, 3)), ZERO)
            if a == c:
                v -= pl[0]
            row.append(v)
        rows.append(row)
    return [("div F", div), ("curl F - i d_0 F", Matrix.from_rows(rows))]


def _maxwell_spinor(p, m):
    sig = lower_pair(weyl_sigma_table())
    one2 = Matrix.identity(2)
    pl = p.lower()
    blocks = []
    for mu in range(4):
        B = Matrix.identity(4).scale(-(MINUS_I * pl[mu]))
        for nu in range(4):
            if p[nu]:
                X = one2.kron(sig[mu][nu]) - sig[mu][nu].T.kron(one2)
                B = B + X.scale(MINUS_I * p[nu] * HALF)
        blocks.append((f"mu={mu}", B))
    return blocks


def _maxwell_laport(p, m):
    s = pauli()
    pl = p.lower()
    D = sum((s[mu].scale(MINUS_I * pl[mu]) for mu in range(4)), Matrix.zeros(2))
    return [("(d_0 + sigma.grad)(sigma.F)", Matrix.identity(2).kron(D) @ vec_spinor_field())]


def _maxwell_quaternion(p, m):
    J = quaternion_matrices()
    pl = p.lower()
    rows = [[sum((MINUS_I * pl[mu] * J[q][mu, nu] for mu in range(4)), ZERO) for q in range(3)]
            for nu in range(4)]
    return [("dQ", Matrix.from_rows(rows))]


def _maxwell_tensor(p, m):
    Qf = self_dual_field_map()
    pl = p.lower()
    rows = []
    for mu in range(4):
        row = [ZERO] * 3
        for nu in range(4):
            if pl[nu]:
                for k in range(3):
                    row[k] += MINUS_I * pl[nu] * Qf[mu * 4 + nu, k]
        rows.append(row)
    return [("d_n Q^{mu n}", Matrix.from_rows(rows))]


def _fp_full(p, m):
    return [("field-strength form + 2 m^2 A", fierz_pauli_fa_operator(p, m))]


def _fp_final(p, m):
    m2 = as_scalar(m) * as_scalar(m)
    shell = Matrix.identity(10).scale(-p.square() + m2)
    return [
        ("d^2 A + m^2 A", shell),
        ("d^a d_n A^{nb} + d^b d_n A^{na}", _sym_rows(p, "divergence_sym")),
        ("trace A", _sym_rows(p, "trace")),
        ("d_m d_n A^{mn}", _sym_rows(p, "double_divergence")),
    ]


def _fp_gauge(p, m):
    m2 = as_scalar(m) * as_scalar(m)
    return [
        ("d^2 A + m^2 A", Matrix.identity(10).scale(-p.square() + m2)),
        ("d_n A^{mu n}", _sym_rows(p, "divergence")),
        ("4 d_n A^{mu n} - d^mu A", _sym_rows(p, "fp_gauge")),
    ]


def _einstein(p, m):
    return [("linearized Einstein", einstein_operator(p))]


def _einstein_gauge(p, m):
    return [("linearized Einstein", einstein_operator(p)), ("2 d^n h_{mu n} - d_mu h", _sym_rows(p, "de_donder"))]


FAMILIES = {
    f.name: f
    for f in (
        Family("dirac_gamma", "bispinor", 4, False, False, _dirac_gamma, "gamma^mu p_mu - m"),
        Family("dirac_sigma", "bispinor", 4, False, True, _dirac_sigma,
               "(Sigma^{mu nu} + g^{mu nu}) p_nu - m gamma^mu, four 4x4 blocks"),
        Family("dirac_pl", "bispinor", 4, False, True, _dirac_pl,
               "1/2 e_{mu nu s t} d^nu gamma^s gamma^t - (i d_mu + m gamma_mu) gamma_5, four 4x4 blocks"),
        Family("weyl_sigma", "spinor2", 2, True, True, _weyl_sigma, "Sigma^{mu nu} d_nu - d^mu, four 2x2 blocks"),
        Family("weyl_compact", "spinor2", 2, True, False, _weyl_compact, "sigma^mu d_mu"),
        Family("proca", "vector", 4, False, False, _proca, "-p^2 I + p (x) p_flat + m^2 I"),
        Family("maxwell_so3c", "complex3", 3, True, True, _maxwell_so3c,
               "(Sigma^{mu nu} + g^{mu nu}) d_nu F, four 3x3 blocks"),
        Family("maxwell_curl_div", "complex3", 3, True, False, _maxwell_curl_div, "div F = 0, curl F = i d_0 F"),
        Family("maxwell_spinor", "spinor_matrix", 4, True, True, _maxwell_spinor,
               "1/2 (Sigma_{mu nu} d^nu Q - d^nu Q Sigma_{mu nu}) - d_mu Q on vec(Q)"),
        Family("maxwell_laport", "complex3", 3, True, False, _maxwell_laport, "(d_0 + sigma.grad)(sigma.F) = 0"),
        Family("maxwell_quaternion", "complex3", 3, True, False, _maxwell_quaternion,
               "row vector d times the 4x4 self-dual matrix Q(F)"),
        Family("maxwell_tensor", "complex3", 3, True, False, _maxwell_tensor, "d_n Q^{mu n} = 0 with Q = Q(F)"),
        Family("fierz_pauli_full", "sym_tensor", 10, False, True, _fp_full,
               "field-strength form of the spin-2 equation, 10x10"),
        Family("fierz_pauli_final", "sym_tensor", 10, False, True, _fp_final,
               "shell rows, symmetrized divergence rows, trace row, double-divergence row"),
        Family("fierz_pauli_gauge", "sym_tensor", 10, False, False, _fp_gauge,
               "shell rows, divergence rows, 4 d_n A^{mu n} - d^mu A rows"),
        Family("einstein_linear", "sym_tensor", 10, True, False, _einstein, "linearized Einstein operator",
               gauge_degenerate=True),
        Family("einstein_gauge", "sym_tensor", 10, True, False, _einstein_gauge,
               "linearized Einstein operator with de Donder rows"),
    )
}


@dataclass(frozen=True)
class LinearSystem:
    """Vertically stacked momentum-space operator."""

    family: str
    p: FourVector
    mass: Fraction
    blocks: tuple
    convention: str = PLANE_WAVE

    @property
    def total(self) -> Matrix:
        return Matrix.vstack([b for _, b in self.blocks])

    @property
    def shape(self) -> tuple:
        return (sum(b.rows for _, b in self.blocks), self.blocks[0][1].cols)

    @property
    def field_space(self) -> str:
        return FAMILIES[self.family].field_space


def assemble(family: str, p, m=0) -> LinearSystem:
    """Assemble ``family`` at momentum ``p`` and mass ``m``."""
    if family not in FAMILIES:
        raise FamilyError(f"unknown family {family!r}")
    fam = FAMILIES[family]
    m = Fraction(m)
    if m < 0:
        raise FamilyError("mass must be nonnegative")
    if fam.massless_only and m != 0:
        raise FamilyError(f"{family} describes massless fields; got m = {m}")
    v = _vec(p)
    blocks = tuple(fam.builder(v, m))
    for label, b in blocks:
        if b.cols != fam.dim:
            raise FamilyError(f"{family}: block {label} has {b.cols} columns, expected {fam.dim}")
    return LinearSystem(family, v, m, blocks)


def kernel_of(system: LinearSystem) -> KernelReport:
    return rank_and_kernel(system.total)


# ----------------------------------------------------------------------
# equivalences


def default_iso(space_a: str, space_b: str) -> Matrix:
    """Solution-space map between field spaces connected by a documented iso."""
    if space_a == space_b:
        return Matrix.identity({"bispinor": 4, "spinor2": 2, "vector": 4, "complex3": 3,
                                "spinor_matrix": 4, "sym_tensor": 10}[space_a])
    if (space_a, space_b) == ("complex3", "spinor_matrix"):
        return vec_spinor_field()
    raise FamilyError(f"no isomorphism from {space_a} to {space_b}")


@dataclass(frozen=True)
class EquivalenceResult:
    system_a: str
    system_b: str
    isomorphism: Matrix
    verdict: str
    dims: tuple


def compare_spans(A: Sequence[Matrix], B: Sequence[Matrix]) -> str:
    a, b = list(A), list(B)
    if same_subspace(a, b):
        return "equal_kernels"
    if span_contains(b, a):
        return "a_subset_b"
    if span_contains(a, b):
        return "b_subset_a"
    return "incomparable"


def equivalence(family_a: str, family_b: str, p, m=0, iso: Matrix | None = None) -> EquivalenceResult:
    sa, sb = assemble(family_a, p, m), assemble(family_b, p, m)
    if iso is None:
        iso = default_iso(sa.field_space, sb.field_space)
    if iso.cols != FAMILIES[family_a].dim or iso.rows != FAMILIES[family_b].dim:
        raise FamilyError(f"iso of shape {iso.shape} does not map {family_a} into {family_b}")
    ka, kb = kernel_of(sa), kernel_of(sb)
    mapped = [iso @ v for v in ka.kernel_basis]
    verdict = compare_spans(mapped, kb.kernel_basis)
    if rank(Matrix.hstack(mapped)) != ka.kernel_dim if mapped else False:
        verdict = "incomparable"
    return EquivalenceResult(family_a, family_b, iso, verdict, (ka.kernel_dim, kb.kernel_dim))


# ----------------------------------------------------------------------
# constraints and gauge


def _functionals(family: str, p) -> list[tuple[str, Matrix]]:
    v = _vec(p)
    if FAMILIES[family].field_space == "vector":
        return [("p.A", Matrix(1, 4, v.lower().components))]
    if FAMILIES[family].field_space == "sym_tensor":
        return [("trace A", _sym_rows(v, "trace")),
                ("p_m p_n A^{mn}", _sym_rows(v, "double_divergence")),
                ("p_n A^{n mu}", _sym_rows(v, "divergence"))]
    raise FamilyError(f"no constraints recorded for {family}")


def constraint_check(family: str, p, m) -> list[Outcome]:
    """Evaluate the constraint functionals on every kernel vector."""
    system = assemble(family, p, m)
    k = kernel_of(system)
    inputs = {"family": family, "p": str(system.p), "m": system.mass}
    out = [expect("kernel dimension", k.kernel_dim > 0, inputs, kernel_dim=k.kernel_dim)]
    for label, F in _functionals(family, p):
        cases = [((label, i), F @ vec, Matrix.zeros(F.rows, 1)) for i, vec in enumerate(k.kernel_basis)]
        out.append(cases_equal(f"{label} = 0 on the kernel", cases, inputs))
    return out


def _maxwell_f_solutions(p):
    """Null-p vectors f with p^2 f - p (p.f) = 0, i.e. p.f = 0 (3-dim)."""
    v = _vec(p)
    return rank_and_kernel(Matrix(1, 4, v.lower().components)).kernel_basis


def _gauge_direction(p, f: Matrix) -> Matrix:
    """Coordinates of d^a f^b + d^b f^a -> -i (p^a f^b + p^b f^a)."""
    v = _vec(p)
    return Matrix.column([MINUS_I * (v[a] * f[b, 0] + v[b] * f[a, 0]) for a, b in SYM_PAIRS])


def gauge_check(family: str, p) -> list[Outcome]:
    v = _vec(p)
    if v.square() != 0:
        raise FamilyError("gauge checks need a null momentum")
    inputs = {"family": family, "p": str(v)}
    if family == "proca_massless":
        pdir = Matrix.column(v.components)
        return [
            matrices_equal("F(A = p) = 0", field_strength_map(v) @ pdir, Matrix.zeros(16, 1), inputs),
            matrices_equal("p lies in the kernel of the m = 0 operator",
                           assemble("proca", v, 0).total @ pdir, Matrix.zeros(4, 1), inputs),
        ]
    if family == "fierz_pauli_massless":
        op = fierz_pauli_fa_operator(v, 0)
        fs = _maxwell_f_solutions(v)
        cases = [(k, op @ _gauge_direction(v, f), Matrix.zeros(10, 1)) for k, f in enumerate(fs)]
        out = [cases_equal("gauge directions with p.f = 0 are annihilated at m = 0", cases, inputs)]
        # p.f != 0 violates the vacuum Maxwell condition on f
        bad = next(Matrix.unit(4, k) for k in range(4) if v.lower()[k])
        res = (op @ _gauge_direction(v, bad)).frobenius2()
        out.append(expect("a gauge function off the Maxwell solution set leaves a residual", res != 0,
                          inputs, residual=res, f=list(bad.entries)))
        return out
    raise FamilyError(f"unknown gauge family {family!r}")


def einstein_vs_fierz_pauli(p) -> list[Outcome]:
    """Compare linearized Einstein with the massless spin-2 operator at a null p."""
    v = _vec(p)
    if v.square() != 0:
        raise FamilyError("the comparison is made at null momenta")
    inputs = {"p": str(v)}
    E = einstein_operator(v)
    FP = fierz_pauli_a_operator(v, 0)
    G = _sym_rows(v, "de_donder")
    T = _sym_rows(v, "trace")
    W = _sym_rows(v, "wave")
    fp_gauge = Matrix.vstack([W, _sym_rows(v, "divergence")])
    diff = E - FP
    kE, kF = rank_and_kernel(E), rank_and_kernel(FP)
    out = [
        expect("Einstein operator differs from the m = 0 spin-2 operator", not diff.is_zero(), inputs,
               nonzero_entries=diff.nonzero_count(), residual=diff.frobenius2()),
        expect("their kernels differ as subspaces", not same_subspace(kE.kernel_basis, kF.kernel_basis), inputs,
               einstein_kernel=kE.kernel_dim, spin2_kernel=kF.kernel_dim),
    ]
    kEG = rank_and_kernel(Matrix.vstack([E, G]))
    kWG = rank_and_kernel(Matrix.vstack([W, G]))
    out.append(expect("with the de Donder rows Einstein reduces to the wave equation",
                      same_subspace(kEG.kernel_basis, kWG.kernel_basis), inputs,
                      dims=[kEG.kernel_dim, kWG.kernel_dim]))
    kEt = rank_and_kernel(Matrix.vstack([E, G, T]))
    kFt = rank_and_kernel(Matrix.vstack([FP, G, T]))
    kGt = rank_and_kernel(Matrix.vstack([fp_gauge, T]))
    out.append(expect("gauge-restricted kernels coincide on traceless solutions",
                      same_subspace(kEt.kernel_basis, kFt.kernel_basis)
                      and same_subspace(kEt.kernel_basis, kGt.kernel_basis), inputs,
                      dims=[kEt.kernel_dim, kFt.kernel_dim, kGt.kernel_dim]))
    kFG = rank_and_kernel(Matrix.vstack([FP, G]))
    out.append(expect("without the trace condition the gauge-restricted kernels have dims 6 and 5",
                      kEG.kernel_dim == 6 and kFG.kernel_dim == 5
                      and not same_subspace(kEG.kernel_basis, kFG.kernel_basis), inputs,
                      dims=[kEG.kernel_dim, kFG.kernel_dim]))
    return out


def gauge_span(p) -> list[Matrix]:
    """Pure-gauge symmetric tensors p^a f^b + p^b f^a for f over the unit vectors."""
    v = _vec(p)
    return [_gauge_direction(v, Matrix.unit(4, k)) for k in range(4)]


def dalembert_check(family: str, p, m=0) -> Outcome:
    """Off the mass shell the assembled system has only the zero solution.

    The bare linearized Einstein operator is gauge invariant, so for it the
    statement is that nothing beyond the four pure-gauge modes survives.
    """
    system = assemble(family, p, m)
    k = kernel_of(system)
    p2 = system.p.square()
    inputs = {"family": family, "p": str(system.p), "m": system.mass}
    if FAMILIES[family].gauge_degenerate:
        ok = p2 != system.mass ** 2 and same_subspace(k.kernel_basis, gauge_span(system.p))
        return expect("off the mass shell only pure-gauge modes survive", ok, inputs, p2=p2, kernel_dim=k.kernel_dim)
    return expect("no plane-wave solution off the mass shell", p2 != system.mass ** 2 and k.kernel_dim == 0,
                  inputs, p2=p2, kernel_dim=k.kernel_dim)


# ----------------------------------------------------------------------
# structural properties of the assembled systems


def self_duality_check(p) -> list[Outcome]:
    """2i Q^{mn} = e^{mnst} Q_{st} and 2i Q^{mna} = e^{mnst} Q_{st}^a, identically in A."""
    v = _vec(p)
    E = epsilon_upper_16()
    Q2 = self_dual_map(v)
    out = [matrices_equal("2i Q^{mn} = e^{mnst} Q_{st}", Q2.scale(2 * I), E @ lower_two(Q2), {"p": str(v)})]
    Q3 = third_rank_self_dual_map(v)
    cases = []
    for a in range(4):
        idx = [m * 16 + n * 4 + a for m in range(4) for n in range(4)]
        Qa = Matrix.vstack([Matrix(1, 10, Q3.row(i)) for i in idx])
        cases.append((a, Qa.scale(2 * I), E @ lower_two(Qa)))
    out.append(cases_equal("2i Q^{mna} = e^{mnst} Q_{st}^a", cases, {"p": str(v)}))
    return out


def cyclic_identity_check(p) -> Outcome:
    """F^{abc} + F^{bca} + F^{cab} = 0 for every symmetric A."""
    F = third_rank_field_map(p)
    cases = []
    for a in range(4):
        for b in range(4):
            for c in range(4):
                s = F.row(a * 16 + b * 4 + c), F.row(b * 16 + c * 4 + a), F.row(c * 16 + a * 4 + b)
                cases.append(((a, b, c), Matrix(1, 10, [x + y + z for x, y, z in zip(*s)]), Matrix.zeros(1, 10)))
    return cases_equal("F^{abc} + F^{bca} + F^{cab} = 0", cases, {"p": str(_vec(p))})


def conjugate_dirac_rows(p, m) -> Matrix:
    """Row system for the barred spinor: w [(Sigma^{mn} - g^{mn}) p_n + m gamma^m] = 0 for all m."""
    v = _vec(p)
    pl = v.lower()
    sig = dirac_sigma_table()
    g = gamma_matrices()
    blocks = []
    for mu in range(4):
        B = g[mu].scale(as_scalar(m))
        for nu in range(4):
            if pl[nu]:
                B = B + (sig[mu][nu] - Matrix.identity(4).scale(metric(mu, nu))).scale(pl[nu])
        blocks.append(B)
    return Matrix.hstack(blocks)


def conjugate_dirac_check(p, m) -> Outcome:
    """Left kernel of the barred system matches the right kernel of dirac_sigma, and holds ubar = u^dagger gamma^0."""
    v = _vec(p)
    rows = conjugate_dirac_rows(v, m)
    left = rank_and_kernel(rows.T)
    right = kernel_of(assemble("dirac_sigma", v, m))
    g0 = gamma_matrices()[0]
    bars = [(u.H @ g0) for u in right.kernel_basis]
    bar_ok = all((b @ rows).is_zero() for b in bars)
    return expect("barred Dirac left kernel matches the Sigma-form kernel",
                  left.kernel_dim == right.kernel_dim and bar_ok,
                  {"p": str(v), "m": Fraction(m)}, left_kernel=left.kernel_dim, right_kernel=right.kernel_dim,
                  barred_solutions_annihilated=bar_ok)


def proca_joint_check(p, m) -> Outcome:
    """Proca kernel equals the joint kernel of (p^2 - m^2) I and p.A."""
    v = _vec(p)
    m2 = Fraction(m) ** 2
    joint = Matrix.vstack([Matrix.identity(4).scale(-v.square() + m2), Matrix(1, 4, v.lower().components)])
    k1, k2 = kernel_of(assemble("proca", v, m)), rank_and_kernel(joint)
    return expect("Proca kernel = joint shell and transversality kernel",
                  same_subspace(k1.kernel_basis, k2.kernel_basis) if k1.kernel_dim and k2.kernel_dim
                  else k1.kernel_dim == k2.kernel_dim,
                  {"p": str(v), "m": Fraction(m)}, dims=[k1.kernel_dim, k2.kernel_dim])


def lorentz_invariance_check(family: str, p, m, transforms) -> Outcome:
    """Kernel dimension at p equals the kernel dimension at Lambda p."""
    v = _vec(p)
    base = kernel_of(assemble(family, v, m)).kernel_dim
    dims = [kernel_of(assemble(family, v.transform(L), m)).kernel_dim for L in transforms]
    return expect("kernel dimension is Lorentz invariant", all(d == base for d in dims),
                  {"family": family, "p": str(v), "m": Fraction(m)}, base=base, transformed=dims)
