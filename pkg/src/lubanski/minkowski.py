"""Minkowski conventions: metric (+,-,-,-), Levi-Civita symbol, fixtures.

Frozen conventions used across the package:

* ``g = diag(1, -1, -1, -1)``;
* ``e_{0123} = +1`` and therefore ``e^{0123} = -1``;
* plane waves ``exp(-i p.x)``, so a derivative ``d_mu`` acts as ``-i p_mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .exact_linalg import ONE, ZERO, Matrix, Scalar, as_scalar

__all__ = [
    "METRIC",
    "metric",
    "levi_civita",
    "FourVector",
    "MomentumSample",
    "LorentzMatrix",
    "FixtureError",
    "mass_shell_fixtures",
    "off_shell_fixtures",
    "fundamental_boost",
    "fundamental_rotation",
    "boost_from_half",
    "rotation_from_half",
    "lorentz_fixtures",
    "levi_civita_det_identity",
    "PLANES",
]

METRIC = (1, -1, -1, -1)
PLANES = {"12": (1, 2), "23": (2, 3), "31": (3, 1)}


class FixtureError(ValueError):
    """Invalid momentum, mass or Lorentz parameter."""


def metric(mu: int, nu: int) -> int:
    """g_{mu nu} = g^{mu nu}."""
    return METRIC[mu] if mu == nu else 0


@lru_cache(maxsize=None)
def _perm_sign() -> dict:
    table = {}
    for perm in permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        table[perm] = -1 if inversions % 2 else 1
    return table


def levi_civita(mu: int, nu: int, sigma: int, tau: int, upper: bool = False) -> int:
    """Totally antisymmetric symbol with e_{0123} = +1 (upper: e^{0123} = -1)."""
    idx = (mu, nu, sigma, tau)
    if any(not (isinstance(k, int) and 0 <= k <= 3) for k in idx):
        raise IndexError(f"Levi-Civita index out of range: {idx}")
    s = _perm_sign().get(idx, 0)
    return -s if upper else s


def nonzero_epsilon():
    """The 24 index tuples with nonzero symbol and their lower-index sign."""
    return sorted(_perm_sign().items())


@dataclass(frozen=True)
class FourVector:
    """Four exact components with an explicit index position."""

    components: tuple
    variance: str = "upper"

    def __post_init__(self):
        comps = tuple(as_scalar(c) for c in self.components)
        if len(comps) != 4:
            raise FixtureError("a four-vector needs four components")
        if self.variance not in ("upper", "lower"):
            raise FixtureError(f"unknown variance {self.variance!r}")
        object.__setattr__(self, "components", comps)

    def __getitem__(self, mu: int) -> Scalar:
        return self.components[mu]

    def __iter__(self):
        return iter(self.components)

    def lower(self) -> "FourVector":
        if self.variance == "lower":
            return self
        return FourVector(tuple(c * METRIC[i] for i, c in enumerate(self.components)), "lower")

    def raise_(self) -> "FourVector":
        if self.variance == "upper":
            return self
        return FourVector(tuple(c * METRIC[i] for i, c in enumerate(self.components)), "upper")

    def upper(self) -> "FourVector":
        return self.raise_()

    def square(self) -> Scalar:
        """p_mu p^mu."""
        u = self.upper()
        return sum((c * c * METRIC[i] for i, c in enumerate(u.components)), ZERO)

    def dot(self, other: "FourVector") -> Scalar:
        a, b = self.upper(), other.lower()
        return sum((x * y for x, y in zip(a.components, b.components)), ZERO)

    def transform(self, L: "LorentzMatrix") -> "FourVector":
        """Return Lambda p for an upper-index vector."""
        col = L.entries @ Matrix.column(self.upper().components)
        return FourVector(col.entries, "upper")

    def column(self) -> Matrix:
        return Matrix.column(self.components)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.components) + ")"


def minkowski_square(p: FourVector) -> Scalar:
    return p.square()


@dataclass(frozen=True)
class MomentumSample:
    """Upper-index momentum together with its exact mass squared."""

    p: FourVector
    mass_squared: Fraction

    def __post_init__(self):
        p = self.p if isinstance(self.p, FourVector) else FourVector(tuple(self.p))
        m2 = Fraction(self.mass_squared)
        if p.variance != "upper":
            p = p.upper()
        if p.square() != m2:
            raise FixtureError(f"p = {p} has p^2 = {p.square()}, not {m2}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "mass_squared", m2)

    @classmethod
    def of(cls, *components) -> "MomentumSample":
        """Sample whose mass squared is read off from the momentum itself."""
        p = FourVector(tuple(as_scalar(c) for c in components))
        sq = p.square()
        if not sq.is_real:
            raise FixtureError("complex momentum")
        return cls(p, sq.re)

    @property
    def is_massless(self) -> bool:
        return self.mass_squared == 0

    @property
    def mass(self) -> Fraction | None:
        """The rational mass, or None when m^2 is not a rational square."""
        return rational_sqrt(self.mass_squared)

    def label(self) -> str:
        return str(self.p)


def rational_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt

    x = Fraction(x)
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


_MASSIVE = {
    Fraction(4): [(2, 0, 0, 0), (3, 1, 2, 0), (5, 4, 2, 1)],
    Fraction(1): [(1, 0, 0, 0), (3, 2, 2, 0), (2, 1, 1, 1)],
}
_MASSLESS = [(1, 0, 0, 1), (3, 2, 2, 1), (1, 1, 0, 0), (7, 2, 3, 6), (3, -2, 1, 2)]
_OFF_SHELL = [(1, 1, 1, 0), (2, 1, 0, 0), (1, 2, 3, 4)]


def mass_shell_fixtures(kind: str = "massive", mass_squared=None) -> list[MomentumSample]:
    """Deterministic on-shell momenta.

    ``massive`` with m^2 = 4 or 1 returns a compiled-in list; any other positive
    rational m^2 gets the pair ((m^2+1)/2, k, 0, 0) and
    ((m^2+1)/2, 2k/3, 2k/3, k/3) with k = (m^2-1)/2, preceded by the rest frame
    when m is rational.  With ``mass_squared`` omitted, both built-in massive
    lists are returned (m^2 = 4 first).  ``massless`` returns null momenta.
    """
    if kind == "massless":
        return [MomentumSample(FourVector(p), 0) for p in _MASSLESS]
    if kind != "massive":
        raise FixtureError(f"unknown fixture kind {kind!r}")
    if mass_squared is None:
        return [MomentumSample(FourVector(p), m2) for m2 in _MASSIVE for p in _MASSIVE[m2]]
    m2 = Fraction(mass_squared)
    if m2 <= 0:
        raise FixtureError("massive fixtures need m^2 > 0")
    if m2 in _MASSIVE:
        return [MomentumSample(FourVector(p), m2) for p in _MASSIVE[m2]]
    out = []
    m = rational_sqrt(m2)
    if m is not None:
        out.append(MomentumSample(FourVector((m, 0, 0, 0)), m2))
    e, k = (m2 + 1) / 2, (m2 - 1) / 2
    out.append(MomentumSample(FourVector((e, k, 0, 0)), m2))
    out.append(MomentumSample(FourVector((e, 2 * k / 3, 2 * k / 3, k / 3)), m2))
    return out


def off_shell_fixtures() -> list[FourVector]:
    return [FourVector(p) for p in _OFF_SHELL]


@dataclass(frozen=True)
class LorentzMatrix:
    """Proper orthochronous Lorentz matrix Lambda^mu_nu with rational entries."""

    entries: Matrix
    kind: str = "product"

    def __post_init__(self):
        L = self.entries
        if L.shape != (4, 4):
            raise FixtureError("Lorentz matrix must be 4x4")
        if any(not x.is_real for x in L.entries):
            raise FixtureError("Lorentz matrix entries must be real")
        g = Matrix.diag(METRIC)
        if L.T @ g @ L != g:
            raise FixtureError("matrix does not preserve the metric")
        if L.det() != 1:
            raise FixtureError("matrix is not proper")
        if L[0, 0].re < 1:
            raise FixtureError("matrix is not orthochronous")
        if self.kind not in ("boost", "rotation", "product", "identity"):
            raise FixtureError(f"unknown kind {self.kind!r}")

    def __getitem__(self, ij) -> Scalar:
        return self.entries[ij]

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        return LorentzMatrix(self.entries @ other.entries, "product")

    def inverse(self) -> "LorentzMatrix":
        g = Matrix.diag(METRIC)
        return LorentzMatrix(g @ self.entries.T @ g, self.kind)

    @classmethod
    def identity(cls) -> "LorentzMatrix":
        return cls(Matrix.identity(4), "identity")


def _check_pair(c, s, hyperbolic: bool):
    c, s = Fraction(c), Fraction(s)
    if hyperbolic:
        if c * c - s * s != 1 or c < 1:
            raise FixtureError(f"({c}, {s}) is not on the unit hyperbola with c >= 1")
    elif c * c + s * s != 1:
        raise FixtureError(f"({c}, {s}) is not on the unit circle")
    return c, s


def fundamental_boost(axis: int, c, s) -> LorentzMatrix:
    """Boost mixing x^0 and x^axis with block (c, -s; -s, c)."""
    if axis not in (1, 2, 3):
        raise FixtureError(f"boost axis must be 1..3, got {axis}")
    c, s = _check_pair(c, s, True)
    rows = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    rows[0][0] = rows[axis][axis] = as_scalar(c)
    rows[0][axis] = rows[axis][0] = as_scalar(-s)
    kind = "identity" if s == 0 else "boost"
    return LorentzMatrix(Matrix.from_rows(rows), kind)


def fundamental_rotation(plane: str, c, s) -> LorentzMatrix:
    """Rotation with block (c, s; -s, c) in the ordered plane (a, b)."""
    plane = str(plane)
    if plane not in PLANES:
        raise FixtureError(f"rotation plane must be one of 12, 23, 31, got {plane}")
    c, s = _check_pair(c, s, False)
    a, b = PLANES[plane]
    rows = [[ONE if i == j else ZERO for j in range(4)] for i in range(4)]
    rows[a][a] = rows[b][b] = as_scalar(c)
    rows[a][b] = as_scalar(s)
    rows[b][a] = as_scalar(-s)
    kind = "identity" if s == 0 and c == 1 else "rotation"
    return LorentzMatrix(Matrix.from_rows(rows), kind)


def boost_from_half(axis: int, half_c, half_s) -> LorentzMatrix:
    """Boost whose rapidity is twice that of the half pair (cosh, sinh)."""
    hc, hs = _check_pair(half_c, half_s, True)
    return fundamental_boost(axis, hc * hc + hs * hs, 2 * hc * hs)


def rotation_from_half(plane: str, half_c, half_s) -> LorentzMatrix:
    """Rotation whose angle is twice that of the half pair (cos, sin)."""
    hc, hs = _check_pair(half_c, half_s, False)
    return fundamental_rotation(plane, hc * hc - hs * hs, 2 * hc * hs)


# (kind, axis or plane, half_c, half_s); the primitive inputs of the group fixtures
GROUP_FIXTURES = (
    ("boost", 1, Fraction(5, 4), Fraction(3, 4)),
    ("rotation", "12", Fraction(3, 5), Fraction(4, 5)),
    ("boost", 3, Fraction(13, 12), Fraction(5, 12)),
    ("rotation", "23", Fraction(5, 13), Fraction(12, 13)),
    ("boost", 2, Fraction(5, 3), Fraction(4, 3)),
    ("rotation", "31", Fraction(4, 5), Fraction(-3, 5)),
)


def lorentz_from_params(kind: str, where, half_c, half_s) -> LorentzMatrix:
    if kind == "boost":
        return boost_from_half(where, half_c, half_s)
    if kind == "rotation":
        return rotation_from_half(where, half_c, half_s)
    raise FixtureError(f"unknown one-parameter kind {kind!r}")


def lorentz_fixtures() -> list[LorentzMatrix]:
    """Identity, the one-parameter fixtures, and one mixed product."""
    singles = [lorentz_from_params(*f) for f in GROUP_FIXTURES]
    return [LorentzMatrix.identity(), *singles, singles[0] @ singles[1] @ singles[2]]


def levi_civita_det_identity(L: LorentzMatrix) -> bool:
    """Check e_{mnst} L^m_a L^n_b L^s_c L^t_d = det(L) e_{abcd} for all 256 tuples."""
    eps = nonzero_epsilon()
    d = L.entries.det()
    for a, b, c, e in product(range(4), repeat=4):
        total = ZERO
        for (m, n, s, t), sign in eps:
            x = L[m, a] * L[n, b] * L[s, c] * L[t, e]
            if x:
                total = total + x * sign
        if total != d * levi_civita(a, b, c, e):
            return False
    return True
