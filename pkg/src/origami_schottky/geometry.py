"""Circles on the sphere and certified circle pairings.

A Circle carries a designated interior: either the bounded disc or the
unbounded complement.  The combination certificate checks, numerically,
the disc configuration needed to adjoin a loxodromic stable letter to a
finite Moebius group: the orbit discs must be pairwise disjoint, the two
marked circles must be invariant under their elliptic stabilizers, and
the stable letter must carry the exterior of one marked circle onto the
interior of the other.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .moebius import (
    INF,
    MoebiusMap,
    SpherePoint,
    a4_generators,
    dn_generators,
    is_inf,
    projective_closure,
    to_zero_inf,
)

__all__ = [
    "Circle",
    "PairedCircles",
    "CombinationCertificate",
    "DegenerateCircleError",
    "PairingSearchError",
    "image_circle",
    "invariant_circle",
    "circle_residual",
    "invariance_residual",
    "disjointness_margin",
    "find_pairing_dihedral",
    "find_pairing_a4",
    "verify_combination",
    "default_dihedral_grid",
    "default_a4_grid",
]

RESIDUAL_TOL = 1e-9
MARGIN_TOL = 1e-6


class DegenerateCircleError(ValueError):
    """An image circle passes through infinity (a line), or nearly so."""


class PairingSearchError(RuntimeError):
    """No candidate in the scan grid produced a certified pairing."""

    def __init__(self, message: str, best_margin: float):
        super().__init__(f"{message} (best margin seen: {best_margin:.3g})")
        self.best_margin = best_margin


@dataclass(frozen=True)
class Circle:
    """A round circle with a designated interior side.

    ``bounded`` True means the interior is the bounded disc; False means
    the interior is the unbounded complement (a disc containing infinity).
    """

    center: complex
    radius: float
    bounded: bool = True

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise ValueError("radius must be positive and finite")
        if not cmath.isfinite(self.center):
            raise ValueError("center must be finite")

    def flipped(self) -> "Circle":
        return Circle(self.center, self.radius, not self.bounded)

    def interior_distance(self, p: SpherePoint) -> float:
        """Signed distance into the designated interior (positive = inside)."""
        if is_inf(p):
            return -math.inf if self.bounded else math.inf
        d = abs(p - self.center)
        return self.radius - d if self.bounded else d - self.radius

    def as_dict(self) -> dict:
        return {
            "center": [self.center.real, self.center.imag],
            "radius": self.radius,
            "interior": "bounded" if self.bounded else "unbounded",
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Circle":
        return cls(complex(d["center"][0], d["center"][1]), d["radius"],
                   d["interior"] == "bounded")


def _circumcircle(z1: complex, z2: complex, z3: complex) -> tuple[complex, float]:
    den = (z1.conjugate() * (z2 - z3)
           + z2.conjugate() * (z3 - z1)
           + z3.conjugate() * (z1 - z2))
    if abs(den) < 1e-14 * max(1.0, abs(z1), abs(z2), abs(z3)) ** 2:
        raise DegenerateCircleError("image points are collinear")
    num = (abs(z1) ** 2 * (z2 - z3)
           + abs(z2) ** 2 * (z3 - z1)
           + abs(z3) ** 2 * (z1 - z2))
    center = num / den
    radius = (abs(z1 - center) + abs(z2 - center) + abs(z3 - center)) / 3
    return center, radius


def image_circle(f: MoebiusMap, c: Circle, guard: float = 1e-9) -> Circle:
    """The image circle f(c), with the designated interior carried along.

    Moebius maps send circles to circles or lines; a line appears exactly
    when the pole of f lies on c.  Within ``guard`` (relative to the
    radius) of that configuration the call raises DegenerateCircleError.
    """
    pole_inside = False
    if f.c != 0:
        pole = -f.d / f.c
        pole_gap = abs(pole - c.center) - c.radius
        if abs(pole_gap) <= guard * c.radius:
            raise DegenerateCircleError("pole lies on the circle within guard")
        pole_inside = pole_gap < 0
    pts = [c.center + c.radius * cmath.exp(2j * cmath.pi * k / 3) for k in range(3)]
    images = []
    for z in pts:
        w = f(z)
        if is_inf(w):
            raise DegenerateCircleError("sample point mapped to infinity")
        images.append(w)
    center, radius = _circumcircle(*images)
    # the bounded disc maps across the pole: interior side flips exactly
    # when the pole sits inside the bounded disc
    return Circle(center, radius, c.bounded ^ pole_inside)


def circle_residual(c1: Circle, c2: Circle) -> float:
    """Center/radius mismatch; infinite when the interior sides disagree.

    This bounds the Hausdorff distance between the two circles.
    """
    if c1.bounded != c2.bounded:
        return math.inf
    return abs(c1.center - c2.center) + abs(c1.radius - c2.radius)


def invariance_residual(g: MoebiusMap, c: Circle) -> float:
    try:
        return circle_residual(image_circle(g, c), c)
    except DegenerateCircleError:
        return math.inf


def invariant_circle(g: MoebiusMap, p: SpherePoint, r: float,
                     tol: float = 1e-9) -> Circle:
    """A round circle invariant under the elliptic map g, around its fixed
    point p.

    The map is conjugated so its fixed points sit at 0 and infinity, where
    it is a rotation and every circle |w| = r is invariant; r is the radius
    in that coordinate.  Requires 0 < r < 1 so the pulled-back interior
    around p stays a bounded disc.
    """
    if not (0 < r < 1):
        raise ValueError("need 0 < r < 1")
    if g.classify(tol).kind != "elliptic":
        raise ValueError("invariant circles require an elliptic map")
    fp = g.fixed_points()
    if _points_close(p, fp[0]):
        p, q = fp[0], fp[1]
    elif _points_close(p, fp[1]):
        p, q = fp[1], fp[0]
    else:
        raise ValueError("p is not a fixed point of g")
    h = to_zero_inf(p, q)
    c = image_circle(h.inverse(), Circle(0j, r, True))
    if invariance_residual(g, c) > 1e-6:
        raise RuntimeError("self-check failed: circle not invariant")
    return c


def _points_close(p: SpherePoint, q: SpherePoint, tol: float = 1e-7) -> bool:
    if is_inf(p) or is_inf(q):
        return is_inf(p) and is_inf(q)
    return abs(p - q) <= tol


def disjointness_margin(c1: Circle, c2: Circle) -> float:
    """Positive exactly when the closed designated interiors are disjoint.

    The value is the Euclidean slack between the two closed discs: how far
    they clear each other (positive) or overrun each other (negative).
    """
    d = abs(c1.center - c2.center)
    if c1.bounded and c2.bounded:
        return d - c1.radius - c2.radius
    if c1.bounded and not c2.bounded:
        return c2.radius - d - c1.radius
    if not c1.bounded and c2.bounded:
        return c1.radius - d - c2.radius
    # two discs containing infinity always overlap near infinity
    return -(d + c1.radius + c2.radius)


@dataclass(frozen=True)
class PairedCircles:
    """A loxodromic map t pairing two circles: t carries the exterior of
    c1 onto the designated interior of c2, and conjugates the elliptic
    ``source`` (stabilizing c1) onto ``target`` (stabilizing c2).

    ``lam`` and ``form`` record which scan candidate produced t.
    """

    c1: Circle
    c2: Circle
    t: MoebiusMap
    source: MoebiusMap
    target: MoebiusMap
    lam: complex | None = None
    form: str | None = None

    def as_dict(self) -> dict:
        d = {
            "c1": self.c1.as_dict(),
            "c2": self.c2.as_dict(),
            "t": self.t.to_reals(),
            "source": self.source.to_reals(),
            "target": self.target.to_reals(),
        }
        if self.lam is not None:
            d["lam"] = [complex(self.lam).real, complex(self.lam).imag]
        if self.form is not None:
            d["form"] = self.form
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PairedCircles":
        lam = d.get("lam")
        return cls(
            Circle.from_dict(d["c1"]),
            Circle.from_dict(d["c2"]),
            MoebiusMap.from_reals(d["t"]),
            MoebiusMap.from_reals(d["source"]),
            MoebiusMap.from_reals(d["target"]),
            complex(lam[0], lam[1]) if lam is not None else None,
            d.get("form"),
        )


@dataclass(frozen=True)
class CombinationCertificate:
    """Numerical evidence for the disc configuration.

    ``circles`` is the full orbit of the two marked circles under the
    finite group, deduplicated; ``pairwise_margin`` the smallest
    disjointness margin over all pairs; ``stabilizer_checks`` one
    (circle, elliptic, residual) triple per marked circle;
    ``pairing_residual`` how far t(c1) is from c2 (with the interior taken
    as the image of the exterior); ``exterior_margin`` the smallest
    clearance of sampled exterior points of c1 mapped into the interior
    of c2.  ``verdict`` is the conjunction of all checks.
    """

    circles: tuple[Circle, ...]
    pairwise_margin: float
    stabilizer_checks: tuple[tuple[Circle, MoebiusMap, float], ...]
    pairing_residual: float
    exterior_margin: float
    degenerate_images: int
    verdict: bool

    def as_dict(self) -> dict:
        return {
            "circles": [c.as_dict() for c in self.circles],
            "pairwise_margin": self.pairwise_margin,
            "stabilizer_checks": [
                {"circle": c.as_dict(), "element": g.to_reals(), "residual": r}
                for c, g, r in self.stabilizer_checks
            ],
            "pairing_residual": self.pairing_residual,
            "exterior_margin": self.exterior_margin,
            "degenerate_images": self.degenerate_images,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CombinationCertificate":
        return cls(
            tuple(Circle.from_dict(c) for c in d["circles"]),
            d["pairwise_margin"],
            tuple(
                (Circle.from_dict(s["circle"]), MoebiusMap.from_reals(s["element"]),
                 s["residual"])
                for s in d["stabilizer_checks"]
            ),
            d["pairing_residual"],
            d["exterior_margin"],
            d["degenerate_images"],
            d["verdict"],
        )


def _orbit_circles(group: Sequence[MoebiusMap], bases: Sequence[Circle],
                   dedupe_tol: float = 1e-6) -> tuple[list[Circle], int]:
    circles: list[Circle] = []
    degenerate = 0
    for base in bases:
        orbit: list[Circle] = []
        for g in group:
            try:
                img = image_circle(g, base)
            except DegenerateCircleError:
                degenerate += 1
                continue
            if all(circle_residual(img, seen) > dedupe_tol for seen in orbit):
                orbit.append(img)
        circles.extend(orbit)
    return circles, degenerate


def _exterior_margin(pairing: PairedCircles) -> float:
    """Clearance of sampled exterior points of c1 mapped into c2's interior."""
    c1, c2, t = pairing.c1, pairing.c2, pairing.t
    pts: list[SpherePoint] = []
    if c1.bounded:
        pts.append(INF)
        ring = 1.25 * c1.radius
    else:
        ring = 0.8 * c1.radius
    pts.extend(c1.center + ring * cmath.exp(2j * cmath.pi * k / 8) for k in range(8))
    return min(c2.interior_distance(t(p)) for p in pts)


def verify_combination(group: Sequence[MoebiusMap], pairing: PairedCircles,
                       tol: float = RESIDUAL_TOL,
                       margin_tol: float = MARGIN_TOL) -> CombinationCertificate:
    """Check the full disc configuration for the finite group plus pairing.

    ``group`` must be the complete list of elements of the finite Moebius
    group (as produced by projective_closure).
    """
    circles, degenerate = _orbit_circles(group, (pairing.c1, pairing.c2))
    margins = [disjointness_margin(x, y)
               for x, y in itertools.combinations(circles, 2)]
    pairwise_margin = min(margins) if margins else math.inf

    checks = (
        (pairing.c1, pairing.source, invariance_residual(pairing.source, pairing.c1)),
        (pairing.c2, pairing.target, invariance_residual(pairing.target, pairing.c2)),
    )

    try:
        mapped = image_circle(pairing.t, pairing.c1)
        pairing_residual = circle_residual(mapped.flipped(), pairing.c2)
    except DegenerateCircleError:
        degenerate += 1
        pairing_residual = math.inf

    exterior_margin = _exterior_margin(pairing)

    verdict = (
        degenerate == 0
        and pairwise_margin > margin_tol
        and all(res < tol for _, _, res in checks)
        and pairing_residual < tol
        and exterior_margin > 0
    )
    return CombinationCertificate(
        tuple(circles), pairwise_margin, checks, pairing_residual,
        exterior_margin, degenerate, verdict,
    )


def default_dihedral_grid() -> tuple[float, ...]:
    """Real scan values +-2^k for k = 1..12."""
    out: list[float] = []
    for k in range(1, 13):
        out.extend((2.0 ** k, -(2.0 ** k)))
    return tuple(out)


def default_a4_grid() -> tuple[complex, ...]:
    """Complex scan values 2^k e^(i pi j / 6) for k = 1..12, j = 0..11."""
    return tuple(
        (2.0 ** k) * cmath.exp(1j * cmath.pi * j / 6)
        for k in range(1, 13)
        for j in range(12)
    )


def _candidate_pairing(group: Sequence[MoebiusMap], c1: Circle, t: MoebiusMap,
                       source: MoebiusMap, target: MoebiusMap,
                       lam: complex, form: str, tol: float, margin_tol: float,
                       ) -> tuple[PairedCircles | None, float]:
    """Try one stable-letter candidate; return (pairing, margin seen)."""
    if t.classify(tol).kind != "loxodromic":
        return None, -math.inf
    if (t * source * t.inverse()).proj_distance(target) > 1e-10:
        return None, -math.inf
    try:
        c2 = image_circle(t, c1).flipped()
    except DegenerateCircleError:
        return None, -math.inf
    if not c2.bounded:
        return None, -math.inf
    pairing = PairedCircles(c1, c2, t, source, target, lam, form)
    cert = verify_combination(group, pairing, tol, margin_tol)
    if cert.verdict:
        return pairing, cert.pairwise_margin
    return None, cert.pairwise_margin


def _default_radius(group: Sequence[MoebiusMap],
                    protos: Sequence[tuple[SpherePoint, SpherePoint]]) -> float:
    """Adaptive circle parameter for a family of marked fixed points.

    Chooses r so the orbit of round circles (radius r in the normalized
    coordinate of each proto pair) keeps pairwise margins at least 10% of
    the smallest fixed-point separation, then halves it for safety.
    """
    pts: list[complex] = []
    for p, _ in protos:
        for g in group:
            w = g(p)
            if is_inf(w):
                continue
            if all(abs(w - u) > 1e-9 for u in pts):
                pts.append(w)
    minsep = min(abs(u - v) for u, v in itertools.combinations(pts, 2))
    target = 0.1 * minsep

    def margin_at(r: float) -> float:
        bases = []
        for p, q in protos:
            h = to_zero_inf(p, q)
            try:
                bases.append(image_circle(h.inverse(), Circle(0j, r, True)))
            except DegenerateCircleError:
                return -math.inf
        circles, degenerate = _orbit_circles(group, bases)
        if degenerate or any(not c.bounded for c in circles):
            return -math.inf
        pair_margins = [disjointness_margin(x, y)
                        for x, y in itertools.combinations(circles, 2)]
        return min(pair_margins) if pair_margins else math.inf

    lo, hi = 1e-4, 0.9
    if margin_at(lo) < target:
        raise PairingSearchError("no workable circle radius", -math.inf)
    if margin_at(hi) >= target:
        return hi / 2
    for _ in range(48):
        mid = (lo + hi) / 2
        if margin_at(mid) >= target:
            lo = mid
        else:
            hi = mid
    return lo / 2


def find_pairing_dihedral(n: int, r: float | None = None,
                          lambda_grid: Sequence[float] | None = None,
                          tol: float = RESIDUAL_TOL,
                          margin_tol: float = MARGIN_TOL) -> PairedCircles:
    """Search a loxodromic t with t B t^-1 = AB for the dihedral pair of
    order n, together with certified paired circles.

    B is normalized so its fixed points sit at 0 and infinity; candidates
    are t = h2^-1 m h1 with m(w) = lam w or lam / w over the scan grid,
    either assignment of the fixed points of AB to 0 and infinity.  Every
    choice conjugates B onto AB exactly; the scan keeps the first candidate
    whose full disc configuration certifies.
    """
    a, b = dn_generators(n)
    target = a * b
    group = projective_closure([a, b])
    p1, q1 = b.fixed_points()
    h1 = to_zero_inf(p1, q1)
    fp2 = target.fixed_points()
    if r is None:
        r = _default_radius(group, [(p1, q1), (fp2[0], fp2[1])])
    if not (0 < r < 1):
        raise ValueError("need 0 < r < 1")
    c1 = image_circle(h1.inverse(), Circle(0j, r, True))
    grid = tuple(lambda_grid) if lambda_grid is not None else default_dihedral_grid()
    if not grid:
        raise ValueError("empty scan grid")

    best = -math.inf
    for lam in grid:
        if lam == 0:
            raise ValueError("scan values must be nonzero")
        for form in ("mul", "div"):
            m = MoebiusMap(lam, 0, 0, 1) if form == "mul" else MoebiusMap(0, lam, 1, 0)
            for orient in (0, 1):
                h2 = to_zero_inf(fp2[orient], fp2[1 - orient])
                t = h2.inverse() * m * h1
                pairing, margin = _candidate_pairing(
                    group, c1, t, b, target, lam, form, tol, margin_tol)
                if pairing is not None:
                    return pairing
                best = max(best, margin)
    raise PairingSearchError(f"no certified pairing for n={n}", best)


def find_pairing_a4(r: float | None = None,
                    lambda_grid: Sequence[complex] | None = None,
                    tol: float = RESIDUAL_TOL,
                    margin_tol: float = MARGIN_TOL) -> PairedCircles:
    """Search a loxodromic t commuting with the order-3 rotation A of the
    tetrahedral group, pairing invariant circles around A's two fixed points.

    Candidates share A's fixed points: t = h^-1 (lam w) h, which commutes
    with A for every lam; the scan keeps the first candidate whose full
    disc configuration certifies.
    """
    a, b = a4_generators()
    group = projective_closure([a, b])
    p, q = a.fixed_points()
    h = to_zero_inf(p, q)
    if r is None:
        r = _default_radius(group, [(p, q), (q, p)])
    if not (0 < r < 1):
        raise ValueError("need 0 < r < 1")
    c1 = image_circle(h.inverse(), Circle(0j, r, True))
    grid = tuple(lambda_grid) if lambda_grid is not None else default_a4_grid()
    if not grid:
        raise ValueError("empty scan grid")

    best = -math.inf
    for lam in grid:
        if lam == 0:
            raise ValueError("scan values must be nonzero")
        t = h.inverse() * MoebiusMap(lam, 0, 0, 1) * h
        pairing, margin = _candidate_pairing(
            group, c1, t, a, a, lam, "mul", tol, margin_tol)
        if pairing is not None:
            return pairing
        best = max(best, margin)
    raise PairingSearchError("no certified pairing for the tetrahedral case", best)
