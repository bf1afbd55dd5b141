"""Finite-dimensional Lorentz representations, group elements and their identities.

Each representation stores the antisymmetric table ``M[a][b]`` of its action
on the field.  All tables close on the same algebra

    [M^{ab}, M^{cd}] = g^{bc} M^{ad} - g^{bd} M^{ac} + g^{ad} M^{bc} - g^{ac} M^{bd},

the relation obeyed by the vector generators
``(m^{ab})^mu_nu = g^{a mu} delta^b_nu - g^{b mu} delta^a_nu``.  Group elements
are ``D = exp(-theta M^{ab})`` covering ``Lambda = exp(-theta m^{ab})``.

Matrix-valued fields are flattened column-major: ``vec(X)[j*n + i] = X[i][j]``,
so ``vec(A X B) = (B^T kron A) vec(X)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .exact_linalg import I, ONE, ZERO, Matrix, as_scalar, rank_and_kernel
from .minkowski import (
    METRIC,
    PLANES,
    FixtureError,
    LorentzMatrix,
    boost_from_half,
    levi_civita,
    metric,
    nonzero_epsilon,
    rotation_from_half,
)
from .outcome import Outcome, cases_equal, expect, matrices_equal

__all__ = [
    "KINDS",
    "Representation",
    "GroupElement",
    "pauli",
    "gamma_matrices",
    "gamma5",
    "gamma5_lower",
    "dirac_sigma_table",
    "weyl_sigma_table",
    "spin_matrices",
    "so3c_sigma_table",
    "vector_generators",
    "quaternion_matrices",
    "SYM_PAIRS",
    "sym_embedding",
    "sym_projection",
    "vec_spinor_field",
    "build_representation",
    "structure_check",
    "invariants_I1_I2",
    "group_element",
    "covariance_check",
    "massless_block_transform",
    "lower_pair",
    "algebra_rhs",
    "gamma_lower",
    "dirac_alpha",
    "dirac_spin",
    "self_dual_field_map",
    "sym_index",
    "dirac_operator",
    "gamma_product_identities",
    "dirac_boost",
    "dirac_rotation",
    "weyl_boost",
    "weyl_rotation",
    "so3c_boost",
    "so3c_rotation",
]

KINDS = (
    "dirac_bispinor",
    "weyl_left",
    "vector",
    "so3c_vector",
    "slash_conjugation",
    "spinor2_conjugation",
    "sym_tensor",
)

HALF = Fraction(1, 2)


def _m(rows) -> Matrix:
    return Matrix.from_rows(rows)


def _block(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """2x2 block matrix [[a, b], [c, d]]."""
    top = Matrix.hstack([a, b])
    bottom = Matrix.hstack([c, d])
    return Matrix.vstack([top, bottom])


# ----------------------------------------------------------------------
# elementary matrices


@lru_cache(maxsize=None)
def pauli() -> tuple:
    """(sigma_0 = I, sigma_1, sigma_2, sigma_3)."""
    return (
        Matrix.identity(2),
        _m([[0, 1], [1, 0]]),
        _m([[0, -I], [I, 0]]),
        _m([[1, 0], [0, -1]]),
    )


@lru_cache(maxsize=None)
def gamma_matrices() -> tuple:
    """Dirac-representation gamma^mu (upper index)."""
    s = pauli()
    z, one = Matrix.zeros(2), Matrix.identity(2)
    g0 = _block(one, z, z, -one)
    return (g0,) + tuple(_block(z, s[k], -s[k], z) for k in (1, 2, 3))


@lru_cache(maxsize=None)
def gamma5() -> Matrix:
    """gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = [[0, I], [I, 0]]."""
    g = gamma_matrices()
    return (g[0] @ g[1] @ g[2] @ g[3]).scale(I)


@lru_cache(maxsize=None)
def gamma5_lower() -> Matrix:
    """gamma_5 = -gamma^5."""
    return -gamma5()


def gamma_lower(mu: int) -> Matrix:
    return gamma_matrices()[mu].scale(METRIC[mu])


@lru_cache(maxsize=None)
def dirac_alpha() -> tuple:
    """alpha_k = gamma^0 gamma^k, k = 1..3."""
    g = gamma_matrices()
    return tuple(g[0] @ g[k] for k in (1, 2, 3))


@lru_cache(maxsize=None)
def dirac_spin() -> tuple:
    """Sigma_k = diag(sigma_k, sigma_k), k = 1..3."""
    s = pauli()
    z = Matrix.zeros(2)
    return tuple(_block(s[k], z, z, s[k]) for k in (1, 2, 3))


def _table(fn) -> tuple:
    return tuple(tuple(fn(a, b) for b in range(4)) for a in range(4))


@lru_cache(maxsize=None)
def dirac_sigma_table() -> tuple:
    """Sigma^{mu nu} = (gamma^mu gamma^nu - gamma^nu gamma^mu) / 2."""
    g = gamma_matrices()
    return _table(lambda a, b: (g[a] @ g[b] - g[b] @ g[a]).scale(HALF))


@lru_cache(maxsize=None)
def weyl_sigma_table() -> tuple:
    """Two-spinor Sigma^{0q} = -sigma_q, Sigma^{pq} = i e_{pqr} sigma_r."""
    s = pauli()

    def entry(a, b):
        if a == b:
            return Matrix.zeros(2)
        if a == 0:
            return -s[b]
        if b == 0:
            return s[a]
        r = 6 - a - b
        return s[r].scale(I * levi_civita(0, a, b, r))

    return _table(entry)


@lru_cache(maxsize=None)
def spin_matrices() -> tuple:
    """Real spin-one matrices (s_k)_{ij} = -e_{kij}."""
    return tuple(
        Matrix(3, 3, [-levi_civita(0, k, i + 1, j + 1) for i in range(3) for j in range(3)])
        for k in (1, 2, 3)
    )


@lru_cache(maxsize=None)
def so3c_sigma_table() -> tuple:
    """Sigma^{0q} = i s_q, Sigma^{pq} = e_{pqr} s_r on complex three-vectors."""
    s = spin_matrices()

    def entry(a, b):
        if a == b:
            return Matrix.zeros(3)
        if a == 0:
            return s[b - 1].scale(I)
        if b == 0:
            return s[a - 1].scale(-I)
        r = 6 - a - b
        return s[r - 1].scale(levi_civita(0, a, b, r))

    return _table(entry)


@lru_cache(maxsize=None)
def vector_generators() -> tuple:
    """(m^{ab})^mu_nu = g^{a mu} delta^b_nu - g^{b mu} delta^a_nu."""

    def entry(a, b):
        return Matrix(4, 4, [
            metric(a, mu) * (1 if b == nu else 0) - metric(b, mu) * (1 if a == nu else 0)
            for mu in range(4) for nu in range(4)
        ])

    return _table(entry)


@lru_cache(maxsize=None)
def self_dual_field_map() -> Matrix:
    """16x3 map F -> vec_rowmajor(Q^{mu nu}): Q^{0k} = -F_k, Q^{ij} = i e_{ijk} F_k."""
    rows = []
    for mu in range(4):
        for nu in range(4):
            row = [ZERO] * 3
            for k in (1, 2, 3):
                if mu == 0 and nu == k:
                    row[k - 1] = -ONE
                elif nu == 0 and mu == k:
                    row[k - 1] = ONE
                elif mu and nu:
                    row[k - 1] = I * levi_civita(0, mu, nu, k)
            rows.append(row)
    return Matrix.from_rows(rows)


@lru_cache(maxsize=None)
def quaternion_matrices() -> tuple:
    """J_p with Q = F_1 J_1 + F_2 J_2 + F_3 J_3 (entries Q^{mu nu})."""
    Fm = self_dual_field_map()
    return tuple(Matrix(4, 4, Fm.col(p).entries) for p in range(3))


# symmetric tensors: pair ordering (00,01,02,03,11,12,13,22,23,33)
SYM_PAIRS = tuple((a, b) for a in range(4) for b in range(a, 4))


@lru_cache(maxsize=None)
def sym_embedding() -> Matrix:
    """E: 10 -> 16, writes coordinate (a,b) into entries a*4+b and b*4+a."""
    e = [[ZERO] * 10 for _ in range(16)]
    for k, (a, b) in enumerate(SYM_PAIRS):
        e[a * 4 + b][k] = ONE
        e[b * 4 + a][k] = ONE
    return Matrix.from_rows(e)


@lru_cache(maxsize=None)
def sym_projection() -> Matrix:
    """P: 16 -> 10, averages the (a,b) and (b,a) entries; P E = I."""
    p = [[ZERO] * 16 for _ in range(10)]
    for k, (a, b) in enumerate(SYM_PAIRS):
        if a == b:
            p[k][a * 4 + a] = ONE
        else:
            p[k][a * 4 + b] = as_scalar(HALF)
            p[k][b * 4 + a] = as_scalar(HALF)
    return Matrix.from_rows(p)


def sym_index(a: int, b: int) -> int:
    return SYM_PAIRS.index((min(a, b), max(a, b)))


@lru_cache(maxsize=None)
def vec_spinor_field() -> Matrix:
    """4x3 map F -> vec(sigma . F), column-major."""
    s = pauli()
    cols = [Matrix(4, 1, s[k].T.entries) for k in (1, 2, 3)]
    return Matrix.hstack(cols)


def lower_pair(table) -> tuple:
    """T_{mu nu} = g_{mu a} g_{nu b} T^{ab} for the diagonal metric."""
    return _table(lambda a, b: table[a][b].scale(METRIC[a] * METRIC[b]))


def algebra_rhs(M, a, b, c, d) -> Matrix:
    """g^{bc} M^{ad} - g^{bd} M^{ac} + g^{ad} M^{bc} - g^{ac} M^{bd}."""
    out = Matrix.zeros(M[0][0].rows)
    for coef, x in ((metric(b, c), M[a][d]), (-metric(b, d), M[a][c]),
                    (metric(a, d), M[b][c]), (-metric(a, c), M[b][d])):
        if coef:
            out = out + x.scale(coef)
    return out


# ----------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class Representation:
    """A named representation with its generator table and intertwiners."""

    name: str
    dim: int
    generators: tuple
    intertwiners: Mapping = field(default_factory=dict)
    field_space: str = ""

    @property
    def spin_factor(self) -> tuple:
        """S^{ab} = -i M^{ab}."""
        return _spin_factor(self.name)

    def M(self, a: int, b: int) -> Matrix:
        return self.generators[a][b]

    def __repr__(self):
        return f"Representation({self.name}, dim={self.dim})"


@lru_cache(maxsize=None)
def _spin_factor(name: str) -> tuple:
    rep = build_representation(name)
    return _table(lambda a, b: rep.generators[a][b].scale(-I))


def _ad(table, sign) -> tuple:
    """sign/2 (I kron X - X^T kron I) on vec(Q), i.e. Q -> sign/2 (X Q - Q X)."""
    n = table[0][0].rows
    one = Matrix.identity(n)
    return _table(lambda a, b: (one.kron(table[a][b]) - table[a][b].T.kron(one)).scale(HALF * sign))


@lru_cache(maxsize=None)
def build_representation(kind: str) -> Representation:
    """Build one of the representations listed in ``KINDS``."""
    if kind == "dirac_bispinor":
        sig = dirac_sigma_table()
        spin = dirac_spin()
        alpha = dirac_alpha()
        inter = {
            "gamma": gamma_matrices(),
            "gamma5": gamma5(),
            "gamma5_lower": gamma5_lower(),
            "sigma": sig,
            "alpha": alpha,
            "spin": spin,
            "beta": gamma_matrices()[0],
            # rotation and boost generators of the M +- iN computation
            "rotation_generators": tuple(x.scale(I * HALF) for x in spin),
            "boost_generators": tuple(x.scale(HALF) for x in alpha),
        }
        gens = _table(lambda a, b: sig[a][b].scale(HALF))
        return Representation(kind, 4, gens, MappingProxyType(inter), "bispinor")
    if kind == "weyl_left":
        sig = weyl_sigma_table()
        gens = _table(lambda a, b: sig[a][b].scale(-HALF))
        inter = {"sigma_four": pauli(), "sigma": sig}
        return Representation(kind, 2, gens, MappingProxyType(inter), "spinor2")
    if kind == "vector":
        inter = {"metric": Matrix.diag(METRIC)}
        return Representation(kind, 4, vector_generators(), MappingProxyType(inter), "vector")
    if kind == "so3c_vector":
        sig = so3c_sigma_table()
        inter = {"spin3": spin_matrices(), "sigma": sig, "quaternion": quaternion_matrices()}
        return Representation(kind, 3, sig, MappingProxyType(inter), "complex3")
    if kind == "slash_conjugation":
        inter = {"gamma": gamma_matrices(), "sigma": dirac_sigma_table()}
        return Representation(kind, 16, _ad(dirac_sigma_table(), 1), MappingProxyType(inter), "bispinor_matrix")
    if kind == "spinor2_conjugation":
        inter = {"sigma_four": pauli(), "sigma": weyl_sigma_table(), "field_iso": vec_spinor_field()}
        return Representation(kind, 4, _ad(weyl_sigma_table(), -1), MappingProxyType(inter), "spinor_matrix")
    if kind == "sym_tensor":
        m = vector_generators()
        one = Matrix.identity(4)
        P, E = sym_projection(), sym_embedding()
        gens = _table(lambda a, b: P @ (m[a][b].kron(one) + one.kron(m[a][b])) @ E)
        inter = {"projection": P, "embedding": E}
        return Representation(kind, 10, gens, MappingProxyType(inter), "sym_tensor")
    raise ValueError(f"unknown representation kind {kind!r}")


# ----------------------------------------------------------------------
# structural identities


def _pairs():
    return [(a, b) for a in range(4) for b in range(a + 1, 4)]


def _antisymmetry(rep) -> Outcome:
    M = rep.generators
    return cases_equal("generators antisymmetric",
                       (((a, b), M[a][b], -M[b][a]) for a in range(4) for b in range(4)))


def _closure(rep) -> Outcome:
    M = rep.generators
    cases = (((a, b, c, d), M[a][b].commutator(M[c][d]), algebra_rhs(M, a, b, c, d))
             for (a, b) in _pairs() for (c, d) in _pairs())
    return cases_equal("Lorentz algebra closure (36 generator pairs)", cases)


def _epsilon_contract(table, mu, nu, upper_eps: bool) -> Matrix:
    """e_{mu nu s t} T^{st} (or with e^{mu nu s t} when upper_eps)."""
    out = Matrix.zeros(table[0][0].rows)
    for s in range(4):
        for t in range(4):
            e = levi_civita(mu, nu, s, t, upper=upper_eps)
            if e:
                out = out + table[s][t].scale(e)
    return out


def _dirac_checks(rep) -> list[Outcome]:
    g = gamma_matrices()
    g5, g5l = gamma5(), gamma5_lower()
    sig = dirac_sigma_table()
    sig_low = lower_pair(sig)
    alpha, spin = dirac_alpha(), dirac_spin()
    one = Matrix.identity(4)
    out = []
    out.append(cases_equal("gamma anticommutator {g^mu, g^nu} = 2 g^{mu nu}", (
        ((a, b), g[a].anticommutator(g[b]), one.scale(2 * metric(a, b)))
        for a in range(4) for b in range(4))))
    out.append(cases_equal("gamma5 anticommutes with gamma^mu", (
        (a, g[a].anticommutator(g5), Matrix.zeros(4)) for a in range(4))))
    out.append(matrices_equal("gamma^5 squared is I", g5 @ g5, one))
    out.append(matrices_equal("gamma^5 = [[0,I],[I,0]]", g5, _block(Matrix.zeros(2), Matrix.identity(2),
                                                                  Matrix.identity(2), Matrix.zeros(2))))
    out.append(cases_equal("Sigma block form", [
        *(((0, q), sig[0][q], alpha[q - 1]) for q in (1, 2, 3)),
        *(((p, q), sig[p][q], spin[6 - p - q - 1].scale(-I * levi_civita(0, p, q, 6 - p - q)))
          for p in (1, 2, 3) for q in (1, 2, 3) if p != q),
    ]))
    out.append(cases_equal("[Sigma^{ab}, gamma^mu] = 2(g^{b mu} gamma^a - g^{a mu} gamma^b)", (
        ((a, b, mu), sig[a][b].commutator(g[mu]),
         (g[a].scale(metric(b, mu)) - g[b].scale(metric(a, mu))).scale(2))
        for a in range(4) for b in range(4) for mu in range(4))))
    out.append(cases_equal("[Sigma, Sigma] commutator (36 pairs)", (
        ((a, b, c, d), sig[a][b].commutator(sig[c][d]), algebra_rhs(sig, a, b, c, d).scale(2))
        for (a, b) in _pairs() for (c, d) in _pairs())))
    out.append(cases_equal("dual generators i e_{mnst} Sigma^{st} = 2 gamma_5 Sigma_{mn}", (
        ((m, n), _epsilon_contract(sig, m, n, False).scale(I), (g5l @ sig_low[m][n]).scale(2))
        for m in range(4) for n in range(4))))
    out.append(cases_equal("dual generators i e^{mnst} gamma_5 Sigma_{mn} = 2 Sigma^{st}", (
        ((s, t), _epsilon_contract(_table(lambda a, b: g5l @ sig_low[a][b]), s, t, True).scale(I),
         sig[s][t].scale(2))
        for s in range(4) for t in range(4))))
    out.append(cases_equal("Sigma^{mn} = (i/2) e^{mnst} gamma_5 Sigma_{st}", (
        ((m, n), _epsilon_contract(_table(lambda a, b: g5l @ sig_low[a][b]), m, n, True).scale(I * HALF),
         sig[m][n])
        for m in range(4) for n in range(4))))
    out.append(cases_equal("gamma_5 commutes with Sigma", (
        ((m, n), g5l @ sig[m][n], sig[m][n] @ g5l) for m in range(4) for n in range(4))))
    prods = []
    for p in (1, 2, 3):
        for q in (1, 2, 3):
            r = 6 - p - q if p != q else None
            eps = levi_civita(0, p, q, r) if r else 0
            d = 1 if p == q else 0
            rhs_s = (spin[r - 1].scale(I * eps) if r else Matrix.zeros(4)) + one.scale(d)
            rhs_a = (alpha[r - 1].scale(I * eps) if r else Matrix.zeros(4)) + g5.scale(d)
            prods += [((p, q, "SS"), spin[p - 1] @ spin[q - 1], rhs_s),
                      ((p, q, "aa"), alpha[p - 1] @ alpha[q - 1], rhs_s),
                      ((p, q, "aS"), alpha[p - 1] @ spin[q - 1], rhs_a),
                      ((p, q, "Sa"), spin[p - 1] @ alpha[q - 1], rhs_a)]
    out.append(cases_equal("alpha/Sigma product identities", prods))
    out.append(cases_equal("(n.Sigma)^2 = (n.alpha)^2 = I", [
        *((("Sigma", k), spin[k] @ spin[k], one) for k in range(3)),
        *((("alpha", k), alpha[k] @ alpha[k], one) for k in range(3)),
    ]))
    Mr = rep.intertwiners["rotation_generators"]
    Nb = rep.intertwiners["boost_generators"]
    M2 = sum((x @ x for x in Mr), Matrix.zeros(4))
    N2 = sum((x @ x for x in Nb), Matrix.zeros(4))
    MN = sum((x @ y for x, y in zip(Mr, Nb)), Matrix.zeros(4))
    q34 = Fraction(3, 4)
    out.append(matrices_equal("N^2 = 3/4 with N = alpha/2", N2, one.scale(q34)))
    out.append(matrices_equal("M^2 = -3/4 with M = (i/2) Sigma", M2, one.scale(-q34)))
    out.append(matrices_equal("M.N = i(3/4) gamma^5", MN, g5.scale(I * q34)))
    for sign, tag in ((1, "+"), (-1, "-")):
        comb = tuple(m + n.scale(I * sign) for m, n in zip(Mr, Nb))
        proj = one - g5l.scale(sign)
        out.append(cases_equal(f"M {tag} iN = (i/2)(1 {'-' if sign > 0 else '+'} gamma_5) Sigma", (
            (k, comb[k], (proj @ spin[k]).scale(I * HALF)) for k in range(3))))
        sq = sum((x @ x for x in comb), Matrix.zeros(4)).scale(Fraction(1, 4))
        out.append(matrices_equal(f"(M {tag} iN)^2 / 4 = -3(1 {'-' if sign > 0 else '+'} gamma_5)/8",
                                  sq, proj.scale(Fraction(-3, 8))))
    I1, I2 = invariants_I1_I2(rep)
    out.append(matrices_equal("I1 = Sigma_{mn} Sigma^{mn} = -12", I1, one.scale(-12)))
    out.append(matrices_equal("I1 = -2(alpha^2 + Sigma^2)", I1,
                              sum((a @ a + s @ s for a, s in zip(alpha, spin)), Matrix.zeros(4)).scale(-2)))
    out.append(matrices_equal("I2 = e_{mnst} Sigma^{mn} Sigma^{st} = 24 i gamma_5", I2, g5l.scale(24 * I)))
    out.append(matrices_equal("I2 = -8i alpha.Sigma", I2,
                              sum((a @ s for a, s in zip(alpha, spin)), Matrix.zeros(4)).scale(-8 * I)))
    out.append(matrices_equal("I2 = -2i I1 gamma_5", I2, (I1 @ g5l).scale(-2 * I)))
    out.extend(gamma_product_identities())
    return out


def gamma_product_identities(index: str = "lower") -> list[Outcome]:
    """gamma^5 as a quadruple product and gamma_5 gamma_mu as a triple product.

    ``index`` picks the chirality matrix on the left of the triple-product
    formula: ``lower`` is gamma_5 = -gamma^5, ``upper`` is gamma^5 itself.
    With e_{0123} = +1 only the lower choice is consistent with the
    quadruple-product formula.
    """
    if index not in ("lower", "upper"):
        raise ValueError(f"index must be lower or upper, got {index!r}")
    g5 = gamma5_lower() if index == "lower" else gamma5()
    name = "gamma_5" if index == "lower" else "gamma^5"
    g = gamma_matrices()
    quad = Matrix.zeros(4)
    for (a, b, c, d), e in nonzero_epsilon():
        quad = quad + (g[a] @ g[b] @ g[c] @ g[d]).scale(e)
    out = [matrices_equal("gamma^5 = (i/4!) e_{mnst} g^m g^n g^s g^t", quad.scale(I / 24), gamma5())]
    cases = []
    for mu in range(4):
        tri = Matrix.zeros(4)
        for (m, n, s, t), e in nonzero_epsilon():
            if m == mu:
                tri = tri + (g[n] @ g[s] @ g[t]).scale(e)
        cases.append((mu, tri.scale(I / 6), g5 @ gamma_lower(mu)))
    out.append(cases_equal(f"{name} gamma_mu = (i/3!) e_{{mnst}} g^n g^s g^t", cases))
    return out


def invariants_I1_I2(rep: Representation | None = None) -> tuple[Matrix, Matrix]:
    """I1 = Sigma_{mn} Sigma^{mn} and I2 = e_{mnst} Sigma^{mn} Sigma^{st} for the bispinor."""
    if rep is not None and rep.name != "dirac_bispinor":
        raise ValueError("invariants I1, I2 are defined for the Dirac bispinor")
    sig = dirac_sigma_table()
    low = lower_pair(sig)
    I1 = Matrix.zeros(4)
    for a in range(4):
        for b in range(4):
            I1 = I1 + low[a][b] @ sig[a][b]
    I2 = Matrix.zeros(4)
    for (a, b, c, d), e in nonzero_epsilon():
        I2 = I2 + (sig[a][b] @ sig[c][d]).scale(e)
    return I1, I2


def _self_duality(table, label) -> list[Outcome]:
    low = lower_pair(table)
    return [
        cases_equal(f"{label}: 2i Sigma^{{mn}} = e^{{mnst}} Sigma_{{st}}", (
            ((m, n), table[m][n].scale(2 * I), _epsilon_contract(low, m, n, True))
            for m in range(4) for n in range(4))),
        cases_equal(f"{label}: e_{{mnst}} Sigma^{{st}} = 2i Sigma_{{mn}}", (
            ((m, n), _epsilon_contract(table, m, n, False), low[m][n].scale(2 * I))
            for m in range(4) for n in range(4))),
    ]


def _weyl_checks(rep) -> list[Outcome]:
    s = pauli()
    sig = weyl_sigma_table()
    out = [expect("dimension 2", rep.dim == 2, dim=rep.dim)]
    out.extend(_self_duality(sig, "two-spinor"))
    out.append(cases_equal("(1/2)[Sigma^{ab}, Sigma^{cd}] two-spinor commutator (36 pairs)", (
        ((a, b, c, d), sig[a][b].commutator(sig[c][d]).scale(HALF), algebra_rhs(sig, a, b, c, d).scale(-1))
        for (a, b) in _pairs() for (c, d) in _pairs())))
    out.append(cases_equal("sigma_p sigma_q = i e_{pqr} sigma_r + delta_{pq}", (
        ((p, q), s[p] @ s[q],
         (s[6 - p - q].scale(I * levi_civita(0, p, q, 6 - p - q)) if p != q else Matrix.identity(2)))
        for p in (1, 2, 3) for q in (1, 2, 3))))
    out.append(cases_equal("(Sigma^{ab})^dagger sigma^mu + sigma^mu Sigma^{ab} = 2(g^{b mu} sigma^a - g^{a mu} sigma^b)", (
        ((a, b, mu), sig[a][b].H @ s[mu] + s[mu] @ sig[a][b],
         (s[a].scale(metric(b, mu)) - s[b].scale(metric(a, mu))).scale(2))
        for a in range(4) for b in range(4) for mu in range(4))))
    return out


def _so3c_checks(rep) -> list[Outcome]:
    s = spin_matrices()
    three = Matrix.identity(3)
    out = [
        matrices_equal("s1^2 + s2^2 + s3^2 = -2", s[0] @ s[0] + s[1] @ s[1] + s[2] @ s[2], three.scale(-2)),
        cases_equal("[s_p, s_q] = e_{pqr} s_r", (
            ((p, q), s[p - 1].commutator(s[q - 1]),
             s[6 - p - q - 1].scale(levi_civita(0, p, q, 6 - p - q)) if p != q else Matrix.zeros(3))
            for p in (1, 2, 3) for q in (1, 2, 3))),
        cases_equal("s^3 = -s for each spin matrix", ((k, x @ x @ x, -x) for k, x in enumerate(s))),
    ]
    out.extend(_self_duality(so3c_sigma_table(), "SO(3,C)"))
    J = quaternion_matrices()
    m = vector_generators()
    sig = so3c_sigma_table()
    cases = []
    for a, b in _pairs():
        for p in range(3):
            lhs = m[a][b] @ J[p] + J[p] @ m[a][b].T
            rhs = Matrix.zeros(4)
            for q in range(3):
                c = sig[a][b][q, p]
                if c:
                    rhs = rhs + J[q].scale(c)
            cases.append(((a, b, p), lhs, rhs))
    out.append(cases_equal("m J_p + J_p m^T = (Sigma^T J)_p", cases))
    return out


def _vector_checks(rep) -> list[Outcome]:
    m = rep.generators
    g = Matrix.diag(METRIC)
    return [cases_equal("m^{ab} g + g (m^{ab})^T = 0", (
        ((a, b), m[a][b] @ g + g @ m[a][b].T, Matrix.zeros(4)) for a in range(4) for b in range(4)))]


def _vec(X: Matrix) -> Matrix:
    return Matrix(X.rows * X.cols, 1, X.T.entries)


def _slash_checks(rep) -> list[Outcome]:
    g = gamma_matrices()
    M = rep.generators
    cases = []
    for a in range(4):
        for b in range(4):
            for lam in range(4):
                # Q = A_lambda gamma^lambda with A = unit lower vector e_lambda
                lhs = M[a][b] @ _vec(g[lam])
                rhs = (g[a].scale(metric(b, lam)) - g[b].scale(metric(a, lam)))
                cases.append(((a, b, lam), lhs, _vec(rhs)))
    return [cases_equal("M^{ab}(A.gamma) = (g^{b lam} gamma^a - g^{a lam} gamma^b) A_lam", cases)]


def _spinor2_checks(rep) -> list[Outcome]:
    V = vec_spinor_field()
    so3 = so3c_sigma_table()
    M = rep.generators
    return [
        expect("F -> vec(sigma.F) has rank 3", rank_and_kernel(V).rank == 3),
        cases_equal("M^{ab} vec(sigma.F) = vec(sigma.(Sigma_so3c^{ab} F))", (
            ((a, b), M[a][b] @ V, V @ so3[a][b]) for a in range(4) for b in range(4))),
    ]


def _sym_checks(rep) -> list[Outcome]:
    P, E = sym_projection(), sym_embedding()
    m = vector_generators()
    one = Matrix.identity(4)
    cases = []
    for a in range(4):
        for b in range(4):
            full = m[a][b].kron(one) + one.kron(m[a][b])
            cases.append(((a, b), full @ E, E @ rep.generators[a][b]))
    return [
        expect("dimension 10", rep.dim == 10, dim=rep.dim),
        matrices_equal("P E = I_10", P @ E, Matrix.identity(10)),
        expect("pair ordering", SYM_PAIRS == ((0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2),
                                              (1, 3), (2, 2), (2, 3), (3, 3))),
        cases_equal("symmetric subspace is invariant under m kron I + I kron m", cases),
    ]


_SPECIFIC = {
    "dirac_bispinor": _dirac_checks,
    "weyl_left": _weyl_checks,
    "vector": _vector_checks,
    "so3c_vector": _so3c_checks,
    "slash_conjugation": _slash_checks,
    "spinor2_conjugation": _spinor2_checks,
    "sym_tensor": _sym_checks,
}


def structure_check(rep: Representation) -> list[Outcome]:
    """Run the identities that apply to ``rep``; one outcome per identity."""
    return [_antisymmetry(rep), _closure(rep), *_SPECIFIC[rep.name](rep)]


# ----------------------------------------------------------------------
# group elements


@dataclass(frozen=True)
class GroupElement:
    """Matrix D(Lambda) of a representation together with the Lambda it covers."""

    rep: Representation
    matrix: Matrix
    fundamental: LorentzMatrix
    inverse: Matrix
    label: str = ""

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if self.rep.name != other.rep.name:
            raise ValueError("cannot compose elements of different representations")
        return GroupElement(self.rep, self.matrix @ other.matrix, self.fundamental @ other.fundamental,
                            other.inverse @ self.inverse, f"{self.label}*{other.label}")


def _generator_for(kind: str, where) -> tuple[int, int]:
    if kind == "boost":
        if where not in (1, 2, 3):
            raise FixtureError(f"boost axis must be 1..3, got {where}")
        return (0, where)
    if kind == "rotation":
        if str(where) not in PLANES:
            raise FixtureError(f"rotation plane must be 12, 23 or 31, got {where}")
        return PLANES[str(where)]
    raise FixtureError(f"unknown group element kind {kind!r}")


@lru_cache(maxsize=None)
def _spectral_data(name: str, a: int, b: int, rotation: bool):
    """Eigenvalues (as half-integers n: lambda = n/2 or i n/2) and projectors of M^{ab}."""
    X = build_representation(name).generators[a][b]
    d = X.rows
    unit = I if rotation else ONE
    roots = []
    for n in range(-8, 9):
        lam = unit * Fraction(n, 2)
        k = rank_and_kernel(X - Matrix.identity(d).scale(lam)).kernel_dim
        if k:
            roots.append((n, lam, k))
    if sum(k for _, _, k in roots) != d:
        raise ArithmeticError(f"generator M^{a}{b} of {name} is not diagonalizable over half-integers")
    projectors = []
    for n, lam, _ in roots:
        P = Matrix.identity(d)
        for n2, lam2, _ in roots:
            if n2 != n:
                P = (P @ (X - Matrix.identity(d).scale(lam2))).scale(ONE / (lam - lam2))
        projectors.append((n, P))
    return tuple(projectors)


def _exp_minus_theta(name: str, a: int, b: int, rotation: bool, half_c, half_s) -> Matrix:
    """exp(-theta M^{ab}) from the minimal polynomial of M^{ab} (Sylvester's formula)."""
    hc, hs = as_scalar(half_c), as_scalar(half_s)
    z = hc - (I * hs if rotation else hs)  # exp(-theta/2) or exp(-i theta/2)
    out = None
    for n, P in _spectral_data(name, a, b, rotation):
        term = P.scale(z ** n)
        out = term if out is None else out + term
    return out


def group_element(rep: Representation | str, kind: str, where, half_c, half_s) -> GroupElement:
    """Closed-form D = exp(-theta M^{ab}) for a boost along ``where`` or a rotation in plane ``where``.

    ``(half_c, half_s)`` is (cosh, sinh) or (cos, sin) of half the parameter.
    """
    if isinstance(rep, str):
        rep = build_representation(rep)
    a, b = _generator_for(kind, where)
    rotation = kind == "rotation"
    L = rotation_from_half(str(where), half_c, half_s) if rotation else boost_from_half(where, half_c, half_s)
    D = _exp_minus_theta(rep.name, a, b, rotation, half_c, half_s)
    Dinv = _exp_minus_theta(rep.name, a, b, rotation, half_c, -Fraction(half_s))
    return GroupElement(rep, D, L, Dinv, f"{kind}{where}({half_c},{half_s})")


def dirac_boost(axis: int, half_c, half_s) -> Matrix:
    """cosh(t/2) - (n.alpha) sinh(t/2)."""
    return Matrix.identity(4).scale(half_c) - dirac_alpha()[axis - 1].scale(half_s)


def dirac_rotation(plane: str, half_c, half_s) -> Matrix:
    """cos(t/2) + i (n.Sigma) sin(t/2), with n normal to the plane."""
    n = 6 - sum(PLANES[str(plane)])
    return Matrix.identity(4).scale(half_c) + dirac_spin()[n - 1].scale(I * as_scalar(half_s))


def weyl_boost(axis: int, half_c, half_s) -> Matrix:
    return Matrix.identity(2).scale(half_c) - pauli()[axis].scale(half_s)


def weyl_rotation(plane: str, half_c, half_s) -> Matrix:
    n = 6 - sum(PLANES[str(plane)])
    return Matrix.identity(2).scale(half_c) + pauli()[n].scale(I * as_scalar(half_s))


def so3c_boost(axis: int, half_c, half_s) -> Matrix:
    """exp(-i t (n.s)) = I - sinh t (i s_n) + (cosh t - 1)(i s_n)^2, using (i s)^3 = i s."""
    hc, hs = Fraction(half_c), Fraction(half_s)
    ch, sh = hc * hc + hs * hs, 2 * hc * hs
    X = spin_matrices()[axis - 1].scale(I)
    return Matrix.identity(3) - X.scale(sh) + (X @ X).scale(ch - 1)


def so3c_rotation(plane: str, half_c, half_s) -> Matrix:
    """exp(-t (n.s)) = I - sin t s_n + (1 - cos t) s_n^2, using s^3 = -s."""
    hc, hs = Fraction(half_c), Fraction(half_s)
    c, s = hc * hc - hs * hs, 2 * hc * hs
    n = 6 - sum(PLANES[str(plane)])
    X = spin_matrices()[n - 1]
    return Matrix.identity(3) - X.scale(s) + (X @ X).scale(1 - c)


def _conj_tensor_law(g: GroupElement) -> Outcome:
    M = g.rep.generators
    L = g.fundamental.entries
    cases = []
    for s in range(4):
        for t in range(s + 1, 4):
            rhs = Matrix.zeros(g.rep.dim)
            for m in range(4):
                for n in range(4):
                    c = L[s, m] * L[t, n]
                    if c and (m != n):
                        rhs = rhs + M[m][n].scale(c)
            cases.append(((s, t), g.inverse @ M[s][t] @ g.matrix, rhs))
    return cases_equal("D^-1 M^{st} D = Lambda^s_m Lambda^t_n M^{mn}", cases)


def _vector_law(label, mats, g: GroupElement, left: Matrix, right: Matrix) -> Outcome:
    L = g.fundamental.entries
    cases = []
    for mu in range(4):
        rhs = Matrix.zeros(mats[0].rows)
        for nu in range(4):
            if L[mu, nu]:
                rhs = rhs + mats[nu].scale(L[mu, nu])
        cases.append((mu, left @ mats[mu] @ right, rhs))
    return cases_equal(label, cases)


def _boost_axis(g: GroupElement):
    L = g.fundamental.entries
    if g.fundamental.kind != "boost":
        return None
    for a in (1, 2, 3):
        if L[0, a]:
            return a, L[0, 0], -L[0, a]
    return None


def _cross_unit(a: int, k: int, vecs):
    """k-th component (1-based) of e_a x V."""
    out = Matrix.zeros(vecs[0].rows)
    for m in (1, 2, 3):
        e = levi_civita(0, k, a, m)
        if e:
            out = out + vecs[m - 1].scale(e)
    return out


def _parallel_perp(label, g: GroupElement, first, second) -> list[Outcome]:
    ax = _boost_axis(g)
    if ax is None:
        return []
    a, c, s = ax
    cases = [(("parallel", a), g.inverse @ first[a - 1] @ g.matrix, first[a - 1])]
    for k in (1, 2, 3):
        if k != a:
            rhs = first[k - 1].scale(c) - _cross_unit(a, k, second).scale(I * s)
            cases.append((("perp", k), g.inverse @ first[k - 1] @ g.matrix, rhs))
    return [cases_equal(label, cases)]


def covariance_check(g: GroupElement) -> list[Outcome]:
    """Conjugation laws of the representation under the element ``g``."""
    rep = g.rep
    d = rep.dim
    out = [matrices_equal("D D^-1 = I", g.matrix @ g.inverse, Matrix.identity(d)), _conj_tensor_law(g)]
    if rep.name == "dirac_bispinor":
        gam = gamma_matrices()
        out.append(_vector_law("S^-1 gamma^mu S = Lambda^mu_nu gamma^nu", gam, g, g.inverse, g.matrix))
        sig = dirac_sigma_table()
        out.append(_conj_tensor_law_table("S^-1 Sigma^{mn} S = Lambda Lambda Sigma", sig, g))
        out.extend(_parallel_perp("boost laws for Sigma (parallel unchanged, perpendicular mixed with alpha)",
                                  g, dirac_spin(), dirac_alpha()))
        out.extend(_parallel_perp("boost laws for alpha (parallel unchanged, perpendicular mixed with Sigma)",
                                  g, dirac_alpha(), dirac_spin()))
    elif rep.name == "weyl_left":
        out.append(_vector_law("S^dagger sigma^mu S = Lambda^mu_nu sigma^nu", pauli(), g, g.matrix.H, g.matrix))
        out.append(_conj_tensor_law_table("S^-1 Sigma^{mn} S = Lambda Lambda Sigma", weyl_sigma_table(), g))
        s = pauli()[1:]
        out.extend(_parallel_perp("boost laws for sigma (parallel unchanged, perpendicular mixed)", g, s, s))
    elif rep.name == "so3c_vector":
        J = quaternion_matrices()
        L = g.fundamental.entries
        a = g.matrix
        cases = []
        for p in range(3):
            rhs = Matrix.zeros(4)
            for q in range(3):
                if a[q, p]:
                    rhs = rhs + J[q].scale(a[q, p])
            cases.append((p, L @ J[p] @ L.T, rhs))
        out.append(cases_equal("Lambda J_p Lambda^T = a_{qp} J_q", cases))
    elif rep.name == "vector":
        out.append(matrices_equal("D = Lambda", g.matrix, g.fundamental.entries))
    return out


def _conj_tensor_law_table(label, table, g: GroupElement) -> Outcome:
    L = g.fundamental.entries
    cases = []
    for s in range(4):
        for t in range(4):
            rhs = Matrix.zeros(table[0][0].rows)
            for m in range(4):
                for n in range(4):
                    c = L[s, m] * L[t, n]
                    if c and m != n:
                        rhs = rhs + table[m][n].scale(c)
            cases.append(((s, t), g.inverse @ table[s][t] @ g.matrix, rhs))
    return cases_equal(label, cases)


# ----------------------------------------------------------------------
# massless block form


def dirac_operator(p, m=0) -> Matrix:
    """gamma^mu p_mu - m for an upper-index momentum p."""
    g = gamma_matrices()
    out = Matrix.identity(4).scale(-as_scalar(m))
    for mu in range(4):
        c = as_scalar(p[mu]) * METRIC[mu]
        if c:
            out = out + g[mu].scale(c)
    return out


def _block_parts(X: Matrix):
    return X.block(0, 2, 0, 2), X.block(0, 2, 2, 4), X.block(2, 4, 0, 2), X.block(2, 4, 2, 4)


def massless_block_transform(momenta=None, masses=None) -> list[Outcome]:
    """Conjugate the Dirac operator by U = U'/sqrt(2), U' = [[I, I], [I, -I]].

    The sqrt(2) is tracked rationally: U X U = (U' X U') / 2.  In the new basis
    the operator has zero diagonal blocks times p and the mass on the diagonal;
    at m = 0 the off-diagonal blocks are p_0 + sigma.p and p_0 - sigma.p.
    """
    from .minkowski import FourVector

    one = Matrix.identity(2)
    Up = _block(one, one, one, -one)
    s = pauli()
    out = [matrices_equal("U'^2 = 2 I (so U = U^-1)", Up @ Up, Matrix.identity(4).scale(2))]
    pts = momenta or [((1, 0, 0, 1), 0), ((3, 2, 2, 1), 0), ((3, 1, 2, 0), 2)]
    for comps, m in pts:
        p = FourVector(comps)
        X = (Up @ dirac_operator(p, m) @ Up).scale(HALF)
        tl, tr, bl, br = _block_parts(X)
        sp = sum((s[k].scale(p[k]) for k in (1, 2, 3)), Matrix.zeros(2))
        p0 = one.scale(p[0])
        inputs = {"p": str(p), "m": m}
        out.append(matrices_equal("diagonal blocks are -m I", tl + br, one.scale(-2 * as_scalar(m)), inputs))
        out.append(matrices_equal("upper-right block = p_0 + sigma.p", tr, p0 + sp, inputs))
        out.append(matrices_equal("lower-left block = p_0 - sigma.p", bl, p0 - sp, inputs))
        if m == 0:
            ur, ll = rank_and_kernel(tr), rank_and_kernel(bl)
            out.append(expect("decoupled Weyl blocks each have a one-dimensional kernel",
                              ur.kernel_dim == 1 and ll.kernel_dim == 1, inputs,
                              upper_right_kernel=[list(v.entries) for v in ur.kernel_basis],
                              lower_left_kernel=[list(v.entries) for v in ll.kernel_basis]))
        else:
            out.append(expect("mass couples the two chiral blocks", not tl.is_zero() and not br.is_zero(),
                              inputs, coupling=str(-as_scalar(m))))
    return out
