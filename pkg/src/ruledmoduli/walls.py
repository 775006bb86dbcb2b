"""Wall classes separating polarizations, and the balanced-splitting certificate.

A wall of type (c1, c2) is a class zeta congruent to c1 mod 2 with
c1^2 - 4*c2 <= zeta^2 < 0.  A wall *separates* the fibre class F from a
polarization L when zeta.F > 0 > zeta.L; a polarization is suitable for
(c1, c2) when no such wall exists, and then every stable bundle restricts to
a general fibre with balanced splitting.

Enumeration is finite because the lattice has signature (1, m+1): writing
zeta = a*C0 + b*F + sum(c_i Ei), L = p*C0 + q*F + sum(r_i Ei) with
p = L.F > 0 and L^2 > 0, the Hodge index theorem turns the defining
inequalities into

    a^2 * L^2 <= p^2 * disc,                      disc = 4*c2 - c1^2,
    sum((p*c_i - a*r_i)^2) <= p^2*disc - a^2*L^2,

and, for each (a, c), an explicit integer interval of admissible b.  Both
bounds are rederived in the test suite against a brute-force scan.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .errors import (
    ConfigMismatchError,
    InvalidPolarizationError,
    NotApplicableError,
    SearchBoundsError,
    checked_int,
)
from .invariants import ChernData, ceil_div, normalize_chern
from .lattice import DivisorClass, SurfaceConfig, intersect


def polarization_checks(cls: DivisorClass) -> dict[str, int]:
    """Necessary positivity values recorded for an ample class.

    These are pairings with the known curves plus the self-intersection; a
    class failing any of them cannot be ample.  Passing all of them is a
    filter, not an ampleness certificate.
    """
    config = cls.config
    checks = {
        "L.L": intersect(cls, cls),
        "L.F": intersect(cls, config.fiber()),
        "L.C0": intersect(cls, config.minimal_section()),
    }
    for i in range(1, config.num_points + 1):
        checks[f"L.E{i}"] = intersect(cls, config.exceptional(i))
        checks[f"L.(F-E{i})"] = intersect(cls, config.fiber_transform(i))
    return checks


@dataclass(frozen=True)
class Polarization:
    """An ample candidate; construction rejects classes failing the checks."""

    cls: DivisorClass
    checks: dict[str, int] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        checks = polarization_checks(self.cls)
        for name, value in checks.items():
            if value <= 0:
                raise InvalidPolarizationError(
                    f"{name} = {value} must be positive for an ample class"
                )
        object.__setattr__(self, "checks", checks)

    @property
    def config(self) -> SurfaceConfig:
        return self.cls.config


@dataclass(frozen=True)
class WallClass:
    """A wall zeta with its square, induced length, and signs against F and L."""

    zeta: DivisorClass
    zeta_sq: int
    ell: int
    zF: int
    zL: int

    def sort_key(self):
        return (self.zeta.a, self.zeta.b, self.zeta.exc)

    def to_json(self) -> dict:
        return {
            "zeta": self.zeta.to_json(),
            "zeta_sq": self.zeta_sq,
            "ell": self.ell,
            "zF": self.zF,
            "zL": self.zL,
        }


@dataclass(frozen=True)
class WallSearch:
    """Full outcome of a wall enumeration.

    ``walls`` strictly separate F from L (zeta.L < 0); ``boundary`` collects
    degenerate classes with zeta.L = 0, reported but never treated as
    harmless; ``excluded_negative_length`` counts candidates rejected only
    by the length filter.
    """

    walls: tuple[WallClass, ...]
    boundary: tuple[WallClass, ...]
    excluded_negative_length: int = 0


@dataclass(frozen=True)
class Suitability:
    suitable: bool
    witness: WallClass | None
    boundary: tuple[WallClass, ...]

    def __bool__(self) -> bool:
        return self.suitable


@dataclass(frozen=True)
class DvZeroCertificate:
    """Outcome of the balanced-splitting certificate.

    ``certified`` means every stable bundle with the given invariants has
    fibre degree zero; otherwise ``separating_wall`` is the counterexample
    shape the contrapositive produces.
    """

    certified: bool
    separating_wall: WallClass | None
    boundary: tuple[WallClass, ...]

    @property
    def d_value(self) -> int | None:
        return 0 if self.certified else None


def _exc_vectors(a, p, l_exc, parities, budget):
    """Yield (vector, sum of squares, sum of c_i * r_i) for all integer
    vectors with prescribed parities and sum((p*c_i - a*r_i)^2) <= budget."""
    if not l_exc:
        yield (), 0, 0
        return
    r0 = l_exc[0]
    t = isqrt(budget)
    lo = ceil_div(a * r0 - t, p)
    hi = (a * r0 + t) // p
    c = lo + ((parities[0] - lo) % 2)
    while c <= hi:
        used = (p * c - a * r0) ** 2
        if used <= budget:
            for rest, s2, scr in _exc_vectors(
                a, p, l_exc[1:], parities[1:], budget - used
            ):
                yield (c, *rest), c * c + s2, c * r0 + scr
        c += 2


def wall_search(
    config: SurfaceConfig,
    chern: ChernData,
    polarization: Polarization,
    *,
    max_candidates: int = 2_000_000,
) -> WallSearch:
    """Enumerate every wall zeta with zeta.F > 0 and zeta.L <= 0.

    Deterministic: results are sorted lexicographically on (a, b, exc).
    Raises SearchBoundsError with the offending budget if the candidate
    count explodes, so callers can fall back to the brute-force oracle.
    """
    if chern.config != config:
        raise ConfigMismatchError("Chern data does not live on the given surface")
    if polarization.config != config:
        raise ConfigMismatchError("polarization does not live on the given surface")

    disc = chern.discriminant
    if disc <= 0:
        return WallSearch((), ())

    c1 = chern.c1
    c1_sq = intersect(c1, c1)
    window_low = -disc  # c1^2 - 4*c2
    e = config.invariant_e
    L = polarization.cls
    p, lb, l_exc = L.a, L.b, L.exc
    l_sq = intersect(L, L)
    parities = tuple(g % 2 for g in c1.exc)

    walls: list[WallClass] = []
    boundary: list[WallClass] = []
    dropped = 0
    visited = 0

    a = 1 if c1.a % 2 else 2
    while a * a * l_sq <= p * p * disc:
        budget = p * p * disc - a * a * l_sq
        for exc, sum_c2, sum_cr in _exc_vectors(a, p, l_exc, parities, budget):
            x = e * a * a + sum_c2
            b_lo = ceil_div(window_low + x, 2 * a)  # zeta^2 >= c1^2 - 4c2
            b_hi = min(
                (x - 1) // (2 * a),  # zeta^2 < 0
                (e * a * p - a * lb + sum_cr) // p,  # zeta.L <= 0
            )
            b = b_lo + ((c1.b - b_lo) % 2)
            while b <= b_hi:
                visited += 1
                if visited > max_candidates:
                    raise SearchBoundsError(
                        max_candidates, f"stuck at leading coefficient a = {a}"
                    )
                z_sq = -e * a * a + 2 * a * b - sum_c2
                z_l = -e * a * p + a * lb + b * p - sum_cr
                if window_low <= z_sq < 0 and z_l <= 0:
                    ell = chern.c2 + (z_sq - c1_sq) // 4
                    if ell < 0:
                        dropped += 1
                    else:
                        wall = WallClass(
                            DivisorClass(a, b, exc, config),
                            checked_int(z_sq, "zeta^2"),
                            ell,
                            a,
                            checked_int(z_l, "zeta.L"),
                        )
                        (boundary if z_l == 0 else walls).append(wall)
                b += 2
        a += 2

    walls.sort(key=WallClass.sort_key)
    boundary.sort(key=WallClass.sort_key)
    return WallSearch(tuple(walls), tuple(boundary), dropped)


def enumerate_separating_walls(
    config: SurfaceConfig,
    chern: ChernData,
    polarization: Polarization,
    *,
    max_candidates: int = 2_000_000,
) -> list[WallClass]:
    """Walls strictly separating F from L, sorted lexicographically."""
    return list(
        wall_search(config, chern, polarization, max_candidates=max_candidates).walls
    )


def is_suitable(
    config: SurfaceConfig,
    chern: ChernData,
    polarization: Polarization,
    *,
    max_candidates: int = 2_000_000,
) -> Suitability:
    """Whether L sits in a chamber whose closure contains the fibre ray.

    True only when no wall separates F from L and no wall meets L exactly
    (boundary classes are reported, never silently resolved: deciding the
    chamber closure there would overclaim).
    """
    search = wall_search(config, chern, polarization, max_candidates=max_candidates)
    if search.walls:
        return Suitability(False, search.walls[0], search.boundary)
    if search.boundary:
        return Suitability(False, search.boundary[0], search.boundary)
    return Suitability(True, None, ())


def certify_dv_zero(
    config: SurfaceConfig,
    chern: ChernData,
    polarization: Polarization,
    *,
    max_candidates: int = 2_000_000,
) -> DvZeroCertificate:
    """Certify that stable bundles with these invariants split with degree 0
    on a general fibre.

    Only applies when the fibre degree of c1 is even (after twist
    normalization): a positive splitting degree d would produce the wall
    2d*C0 + ... with zeta.F > 0 and, by stability, zeta.L < 0; Hodge index
    puts zeta^2 in the wall window, so an empty wall list is a certificate.
    """
    if chern.c1.a % 2 != 0:
        raise NotApplicableError(
            "the fibre degree of c1 is odd; the splitting degree is determined "
            "by the structure classification instead"
        )
    normalized = normalize_chern(chern)
    search = wall_search(config, normalized, polarization, max_candidates=max_candidates)
    if search.walls:
        return DvZeroCertificate(False, search.walls[0], search.boundary)
    if search.boundary:
        return DvZeroCertificate(False, search.boundary[0], search.boundary)
    return DvZeroCertificate(True, None, ())


def hodge_xi(L: DivisorClass, zeta: DivisorClass) -> tuple[DivisorClass, int]:
    """The L-orthogonal combination xi = (L.F)*zeta - (L.zeta)*F and xi^2.

    xi.L = 0 by construction, so the Hodge index theorem gives xi^2 <= 0
    whenever L^2 > 0, with equality only for xi = 0; expanding,
    xi^2 = (L.F)^2 * zeta^2 - 2 (L.F)(zeta.L)(zeta.F).
    """
    config = L.config
    fiber = config.fiber()
    lf = intersect(L, fiber)
    lz = intersect(L, zeta)
    xi = lf * zeta - lz * fiber
    return xi, intersect(xi, xi)
