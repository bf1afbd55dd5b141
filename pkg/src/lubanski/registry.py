"""Static table of verification checks grouped into suites.

Each descriptor names a check, the statement it verifies, the families whose
stacked matrices it assembles, and a runner that maps a fixture set to a list
of outcomes.  Adding a representation or family means adding rows here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import identities as ids
from . import pauli_lubanski as pl
from . import representations as reps
from . import wave_systems as ws
from .minkowski import GROUP_FIXTURES, lorentz_fixtures, mass_shell_fixtures, off_shell_fixtures
from .outcome import expect, negated

__all__ = ["Fixtures", "Check", "CHECKS", "SUITES", "checks_for", "default_fixtures", "CONVENTION"]

CONVENTION = {
    "metric": "diag(+1, -1, -1, -1)",
    "levi_civita": "e_{0123} = +1, e^{0123} = -1",
    "plane_wave": ws.PLANE_WAVE,
    "spin_factor": "S^{ab} = -i M^{ab}",
    "pauli_lubanski": "W_mu = 1/2 e_{mu nu s t} p^nu S^{st}",
}

SUITES = ("structure", "covariance", "pauli_lubanski", "spectra", "helicity", "systems",
          "equivalences", "gauge", "einstein", "identities")


@dataclass(frozen=True)
class Fixtures:
    massive: tuple
    massless: tuple
    off_shell: tuple
    helicity_candidates: tuple = pl.DEFAULT_HELICITY_CANDIDATES


def default_fixtures() -> Fixtures:
    return Fixtures(tuple(mass_shell_fixtures("massive")), tuple(mass_shell_fixtures("massless")),
                    tuple(off_shell_fixtures()))


@dataclass(frozen=True)
class Check:
    check_id: str
    suite: str
    anchor: str
    run: Callable[[Fixtures], list]
    families: tuple = ()


def _fmt(d: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(d.items())) + "}"


def _massive_with_mass(fx: Fixtures):
    return [s for s in fx.massive if s.mass is not None]


# ----------------------------------------------------------------------
# runners


def _structure(kind):
    return lambda fx: reps.structure_check(reps.build_representation(kind))


def _massless_block(fx):
    return reps.massless_block_transform()


def _covariance(kind):
    def run(fx):
        out = []
        elems = [reps.group_element(kind, *params) for params in GROUP_FIXTURES]
        for g in elems + [elems[0] @ elems[1] @ elems[2]]:
            out.extend(reps.covariance_check(g))
        return out
    return run


def _pl_invariants(kind):
    def run(fx):
        out = []
        for s in fx.massive + fx.massless:
            out.extend(pl.pl_invariants(kind, s.p))
        return out
    return run


def _pl_covariance(fx):
    out = []
    for kind in reps.KINDS:
        for params in GROUP_FIXTURES:
            g = reps.group_element(kind, *params)
            for s in fx.massive[:2] + fx.massless[:2]:
                out.append(pl.pl_covariance(g, s.p))
    return out


def _casimir_half(fx):
    pts = [s.p for s in fx.massive + fx.massless] + list(fx.off_shell)
    return [pl.casimir_full_identity(kind, p) for kind in ("dirac_bispinor", "weyl_left") for p in pts]


def _dirac_pl_identity(fx):
    out = []
    for s in _massive_with_mass(fx):
        out.extend(pl.dirac_pl_identity(s))
    return out


def _dirac_w_form(fx):
    return [pl.dirac_w_form(s.p) for s in fx.massive + fx.massless]


EXPECTED_SPECTRA = {
    "dirac_bispinor": {Fraction(-3, 4): 4},
    "weyl_left": {Fraction(-3, 4): 2},
    "vector": {Fraction(0): 1, Fraction(-2): 3},
    "so3c_vector": {Fraction(-2): 3},
    "slash_conjugation": {Fraction(0): 4, Fraction(-2): 12},
    "spinor2_conjugation": {Fraction(0): 1, Fraction(-2): 3},
    "sym_tensor": {Fraction(0): 2, Fraction(-2): 3, Fraction(-6): 5},
}


def _spectrum(kind):
    def run(fx):
        out = []
        want = EXPECTED_SPECTRA[kind]
        cands = sorted(set(pl.DEFAULT_SPIN_CANDIDATES) | set(want))
        for s in fx.massive:
            params = pl.spin_spectrum(kind, s, cands)
            got = params.nonzero()
            out.append(expect(f"W^2 spectrum in units of m^2 is {_fmt(want)}",
                              got == want and params.exhaustive,
                              {"rep": kind, "p": str(s.p), "m2": s.mass_squared},
                              multiplicities=got, exhaustive=params.exhaustive))
        return out
    return run


EXPECTED_HELICITY = {
    "weyl_left": {Fraction(-1, 2): 1},
    "so3c_vector": {Fraction(-1): 1},
    "dirac_bispinor": {Fraction(-1, 2): 1, Fraction(1, 2): 1},
    "vector": {Fraction(0): 1},
    "sym_tensor": {Fraction(0): 2},
    "spinor2_conjugation": {Fraction(-1): 1, Fraction(0): 1},
}


def _helicity(kind):
    def run(fx):
        out = []
        want = {lam: d for lam, d in EXPECTED_HELICITY[kind].items() if lam in fx.helicity_candidates}
        for s in fx.massless:
            scan = pl.helicity_scan(kind, s.p, fx.helicity_candidates)
            got = {lam: d for lam, d, _ in scan if d}
            out.append(expect(f"nontrivial helicity kernels are {_fmt(want)}", got == want,
                              {"rep": kind, "p": str(s.p), "candidates": list(fx.helicity_candidates)},
                              kernel_dims={lam: d for lam, d, _ in scan}))
        return out
    return run


EXPECTED_DIMS = {
    "dirac_gamma": (2, 2), "dirac_sigma": (2, 2), "dirac_pl": (2, 2),
    "weyl_sigma": (None, 1), "weyl_compact": (None, 1), "proca": (3, 3),
    "maxwell_so3c": (None, 1), "maxwell_curl_div": (None, 1), "maxwell_spinor": (None, 1),
    "maxwell_laport": (None, 1), "maxwell_quaternion": (None, 1), "maxwell_tensor": (None, 1),
    "fierz_pauli_full": (5, 6), "fierz_pauli_final": (5, 5), "fierz_pauli_gauge": (5, 5),
    "einstein_linear": (None, 6), "einstein_gauge": (None, 6),
}


def _kernel_dims(fx):
    out = []
    for fam, (massive, massless) in EXPECTED_DIMS.items():
        if massive is not None:
            for s in _massive_with_mass(fx):
                k = ws.kernel_of(ws.assemble(fam, s.p, s.mass))
                out.append(expect(f"kernel dimension {massive}", k.kernel_dim == massive,
                                  {"family": fam, "p": str(s.p), "m": s.mass}, kernel_dim=k.kernel_dim))
        for s in fx.massless:
            k = ws.kernel_of(ws.assemble(fam, s.p, 0))
            out.append(expect(f"kernel dimension {massless}", k.kernel_dim == massless,
                              {"family": fam, "p": str(s.p), "m": 0}, kernel_dim=k.kernel_dim))
    return out


def _dalembert(fx):
    out = []
    for fam, f in ws.FAMILIES.items():
        for q in fx.off_shell:
            out.append(ws.dalembert_check(fam, q, 0 if f.massless_only else 2))
        if f.massless_only:
            for s in fx.massive:
                out.append(ws.dalembert_check(fam, s.p, 0))
    return out


def _lorentz_dims(fx):
    Ls = lorentz_fixtures()
    out = []
    for fam, f in ws.FAMILIES.items():
        pts = [(s.p, 0) for s in fx.massless[:2]]
        if not f.massless_only:
            pts += [(s.p, s.mass) for s in _massive_with_mass(fx)[:2]]
        out.extend(ws.lorentz_invariance_check(fam, p, m, Ls) for p, m in pts)
    return out


def _self_duality(fx):
    out = []
    for s in fx.massless + fx.massive:
        out.extend(ws.self_duality_check(s.p))
    return out


def _cyclic(fx):
    return [ws.cyclic_identity_check(s.p) for s in fx.massless + fx.massive]


def _conjugate_dirac(fx):
    return [ws.conjugate_dirac_check(s.p, s.mass) for s in _massive_with_mass(fx)] + \
        [ws.conjugate_dirac_check(s.p, 0) for s in fx.massless]


def _proca_joint(fx):
    return [ws.proca_joint_check(s.p, s.mass) for s in _massive_with_mass(fx)]


def _equiv(fam_a, fam_b, massless=False):
    def run(fx):
        pts = [(s.p, 0) for s in fx.massless] if massless else [(s.p, s.mass) for s in _massive_with_mass(fx)]
        out = []
        for p, m in pts:
            r = ws.equivalence(fam_a, fam_b, p, m)
            out.append(expect(f"{fam_a} and {fam_b} have equal kernels", r.verdict == "equal_kernels",
                              {"p": str(p), "m": m}, verdict=r.verdict, dims=list(r.dims)))
        return out
    return run


MAXWELL = ("maxwell_so3c", "maxwell_curl_div", "maxwell_spinor", "maxwell_laport", "maxwell_quaternion",
           "maxwell_tensor")


def _maxwell_all(fx):
    out = []
    for b in MAXWELL[1:]:
        out.extend(_equiv("maxwell_so3c", b, massless=True)(fx))
    return out


def _maxwell_massive(fx):
    out = []
    for fam in MAXWELL:
        for s in fx.massive:
            k = ws.kernel_of(ws.assemble(fam, s.p, 0))
            out.append(expect("no solutions at massive momenta", k.kernel_dim == 0,
                              {"family": fam, "p": str(s.p)}, kernel_dim=k.kernel_dim))
    return out


def _fa_vs_a(fx):
    out = []
    for s, m in [(s, s.mass_squared) for s in fx.massive] + [(s, 0) for s in fx.massless]:
        mass = s.mass if s.mass is not None else None
        if mass is None and m:
            continue
        FA = ws.fierz_pauli_fa_operator(s.p, mass or 0)
        A = ws.fierz_pauli_a_operator(s.p, mass or 0)
        out.append(expect("field-strength operator = 2 x potential operator", FA == A.scale(2),
                          {"p": str(s.p), "m2": m}))
    return out


def _constraints(fam):
    def run(fx):
        out = []
        for s in _massive_with_mass(fx):
            out.extend(ws.constraint_check(fam, s.p, s.mass))
        return out
    return run


def _final_dim(fx):
    return [expect("fierz_pauli_final kernel dimension 5",
                   ws.kernel_of(ws.assemble("fierz_pauli_final", s.p, s.mass)).kernel_dim == 5,
                   {"p": str(s.p), "m": s.mass}) for s in _massive_with_mass(fx)]


def _gauge(fam):
    def run(fx):
        out = []
        for s in fx.massless:
            out.extend(ws.gauge_check(fam, s.p))
        return out
    return run


def _einstein(fx):
    out = []
    for s in fx.massless:
        out.extend(ws.einstein_vs_fierz_pauli(s.p))
    return out


def _dirac_pairs(fx):
    """Pairs (p, q) on a common shell: every ordered pair among massive fixtures of equal mass."""
    ms = _massive_with_mass(fx)
    return [(a, b) for a in ms for b in ms if a.mass_squared == b.mass_squared]


def _id_current(fx):
    out = [ids.current_conservation(ids.dirac_pair(a, b)) for a, b in _dirac_pairs(fx)]
    out.append(ids.current_conservation(ids.dirac_pair((3, 1, 2, 0), (3, -1, -2, 0))))
    return out


def _id_em(fx):
    out = []
    for a, b in _dirac_pairs(fx):
        out.extend(ids.energy_momentum_identities(ids.dirac_pair(a, b)))
    return out


def _id_energy(fx):
    out = []
    for a, b in _dirac_pairs(fx):
        out.extend(ids.energy_balance(ids.dirac_pair(a, b)))
    return out


def _id_multi(fx):
    return ids.multi_index_balance(ids.dirac_pair((3, 1, 2, 0), (3, -1, -2, 0)), (0, 1, 0, 0), (1, 0, 0, 0))


def _id_gamma5(fx):
    out = list(ids.gamma5_trace_identity())
    for s in _massive_with_mass(fx):
        out.extend(ids.gamma5_trace_identity(tuple(s.p), s.mass)[2:])
    # the same formulas with gamma^5 on the right are off by a sign; recorded, not hidden
    upper = ids.gamma5_trace_identity(index="upper")
    out.append(negated(upper[1], "with gamma^5 in place of gamma_5 the triple-product formula fails"))
    out.append(negated(upper[2], "with gamma^5 in place of gamma_5 the contracted triple product fails"))
    return out


def _id_selfdual(fx):
    out = []
    ml = list(fx.massless)
    for a, b in zip(ml, ml[1:] + ml[:1]):
        out.extend(ids.selfdual_balance(a, b))
    out.extend(ids.selfdual_balance(ml[0], ml[0]))
    return out


def _id_negative(fx):
    return ids.dirac_negative_controls((3, 1, 2, 0), (3, 2, 2, 0)) + ids.dirac_negative_controls((2, 0, 0, 0), (1, 0, 0, 0))


def _rep_rows(suite, prefix, runner, anchor_fmt, kinds=reps.KINDS):
    return [Check(f"{prefix}.{k}", suite, anchor_fmt.format(k), runner(k)) for k in kinds]


CHECKS: tuple = tuple(
    _rep_rows("structure", "structure", _structure,
              "generator tables, Lorentz algebra closure and the identities specific to {}")
    + [Check("structure.massless_block", "structure",
             "massless limit: block form of the transformed Dirac operator", _massless_block)]
    + _rep_rows("covariance", "covariance", _covariance,
                "closed-form group elements and the conjugation laws of {}")
    + _rep_rows("pauli_lubanski", "pl.invariants", _pl_invariants,
                "transversality and commutator algebra of W_mu for {}")
    + [
        Check("pl.covariance", "pauli_lubanski", "W^mu transforms as a four-vector", _pl_covariance),
        Check("pl.spin_half_casimir", "pauli_lubanski", "W^2 = -(3/4) p^2 for spin one-half", _casimir_half),
        Check("dirac.pl_identity", "pauli_lubanski", "Pauli-Lubanski form of the Dirac equation",
              _dirac_pl_identity, ("dirac_gamma",)),
        Check("dirac.w_form", "pauli_lubanski", "W_mu = -(1/2) gamma_5 Sigma_{mu nu} p^nu", _dirac_w_form),
    ]
    + _rep_rows("spectra", "spectra", _spectrum, "mass-spin relation W^2 = -m^2 s(s+1) for {}")
    + [Check("weyl.helicity_scan", "helicity",
             "helicity of the left-handed two-spinor: W_mu = lambda p_mu with lambda = -1/2",
             _helicity("weyl_left")),
       Check("so3c.helicity_scan", "helicity",
             "helicity of the complex three-vector field: lambda = -1", _helicity("so3c_vector"))]
    + _rep_rows("helicity", "helicity", _helicity, "massless little-group eigenspaces of {}",
                ("dirac_bispinor", "vector", "sym_tensor", "spinor2_conjugation"))
    + [
        Check("systems.kernel_dims", "systems", "solution counts of every assembled wave system",
              _kernel_dims, tuple(EXPECTED_DIMS)),
        Check("systems.dalembert", "systems", "solutions exist only on the mass shell", _dalembert),
        Check("systems.lorentz_invariance", "systems", "kernel dimensions are Lorentz invariant", _lorentz_dims),
        Check("systems.self_duality", "systems", "self-dual second- and third-rank tensors", _self_duality),
        Check("systems.cyclic_identity", "systems", "cyclic identity of the third-rank field strength", _cyclic),
        Check("dirac.conjugate_system", "systems", "Sigma form of the barred Dirac equation", _conjugate_dirac,
              ("dirac_sigma",)),
        Check("proca.joint_kernel", "systems", "Proca field: shell condition and transversality", _proca_joint,
              ("proca",)),
        Check("dirac.sigma_equivalence", "equivalences",
              "Sigma form of the Dirac equation and its reduction to the gamma form",
              _equiv("dirac_gamma", "dirac_sigma"), ("dirac_gamma", "dirac_sigma")),
        Check("dirac.pl_equivalence", "equivalences", "Pauli-Lubanski form of the Dirac equation",
              _equiv("dirac_gamma", "dirac_pl"), ("dirac_gamma", "dirac_pl")),
        Check("weyl.equivalence", "equivalences", "overdetermined Weyl system and its sigma^mu form",
              _equiv("weyl_sigma", "weyl_compact", True), ("weyl_sigma", "weyl_compact")),
        Check("maxwell.equivalence", "equivalences", "six forms of the vacuum Maxwell equations",
              _maxwell_all, MAXWELL),
        Check("maxwell.massive_empty", "equivalences", "Maxwell forms admit no massive plane waves",
              _maxwell_massive, MAXWELL),
        Check("fierz_pauli.final_equivalence", "equivalences",
              "spin-2 field-strength equation and its reduced form",
              _equiv("fierz_pauli_full", "fierz_pauli_final"), ("fierz_pauli_full", "fierz_pauli_final")),
        Check("fierz_pauli.gauge_equivalence", "equivalences",
              "spin-2 field-strength equation and its gauge-condition form",
              _equiv("fierz_pauli_full", "fierz_pauli_gauge"), ("fierz_pauli_full", "fierz_pauli_gauge")),
        Check("fierz_pauli.normalization", "equivalences",
              "field-strength and potential forms of the spin-2 operator", _fa_vs_a, ("fierz_pauli_full",)),
        Check("proca.constraints", "gauge", "Proca field is transverse", _constraints("proca"), ("proca",)),
        Check("fierz_pauli.constraints", "gauge", "spin-2 field is traceless and divergence free",
              _constraints("fierz_pauli_full"), ("fierz_pauli_full",)),
        Check("fierz_pauli.final_dimension", "gauge", "five polarizations of the massive spin-2 field",
              _final_dim, ("fierz_pauli_final",)),
        Check("proca.gauge", "gauge", "gauge invariance of the massless vector field", _gauge("proca_massless")),
        Check("fierz_pauli.gauge", "gauge", "gauge invariance of the massless spin-2 field",
              _gauge("fierz_pauli_massless")),
        Check("dirac.pl_constraint", "gauge", "Pauli-Lubanski identity on and off the Dirac solution space",
              _dirac_pl_identity, ("dirac_gamma",)),
        Check("einstein.comparison", "einstein",
              "linearized Einstein equations versus the massless spin-2 operator", _einstein,
              ("einstein_linear", "einstein_gauge")),
        Check("identities.current", "identities", "conservation of the Dirac four-current", _id_current),
        Check("identities.energy_momentum", "identities",
              "energy-momentum tensors of the Dirac field and their balance relations", _id_em),
        Check("identities.energy_balance", "identities", "Hamiltonian form and energy balance", _id_energy),
        Check("identities.multi_index", "identities", "master balance condition with derivative multi-indices",
              _id_multi),
        Check("identities.gamma5", "identities", "gamma_5 as a product of gamma matrices", _id_gamma5),
        Check("identities.selfdual_balance", "identities",
              "energy-momentum balance of the self-dual field tensors", _id_selfdual),
        Check("identities.negative_controls", "identities", "balance laws fail off the solution set",
              _id_negative),
    ]
)

_BY_ID = {c.check_id: c for c in CHECKS}
assert len(_BY_ID) == len(CHECKS), "duplicate check ids"


def get(check_id: str) -> Check:
    return _BY_ID[check_id]


def checks_for(suites) -> list[Check]:
    """Checks of the named suites sorted by (suite, check_id); ``all`` selects every suite."""
    names = set(SUITES) if "all" in suites else set(suites)
    return sorted((c for c in CHECKS if c.suite in names), key=lambda c: (c.suite, c.check_id))


def shapes(check: Check, fx: Fixtures) -> list[tuple[str, tuple]]:
    """Shapes of the stacked matrices the check assembles, at its first fixture."""
    out = []
    for fam in check.families:
        f = ws.FAMILIES[fam]
        if f.massless_only or not _massive_with_mass(fx):
            s = ws.assemble(fam, fx.massless[0].p, 0)
        else:
            m = _massive_with_mass(fx)[0]
            s = ws.assemble(fam, m.p, m.mass)
        out.append((fam, s.shape))
    return out
