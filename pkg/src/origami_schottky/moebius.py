"""Moebius transformations of the Riemann sphere.

A transformation z -> (a z + b) / (c z + d) is stored with its coefficient
matrix normalized to determinant 1, so two maps agree as transformations
exactly when their coefficient tuples agree up to one global sign.  All
equality tests below are projective in that sense.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "INF",
    "SpherePoint",
    "is_inf",
    "MapClass",
    "MoebiusMap",
    "eval_word",
    "projective_closure",
    "to_zero_inf",
    "dn_generators",
    "a4_generators",
    "fuchsian_punctured_torus",
]

ELLIPTIC_ORDER_CAP = 64


class _Infinity:
    """The point at infinity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"


INF = _Infinity()

SpherePoint = complex | _Infinity


def is_inf(p: SpherePoint) -> bool:
    return isinstance(p, _Infinity)


def _point_key(p: SpherePoint) -> tuple:
    # finite points sort by coordinates, INF sorts last
    if is_inf(p):
        return (1, 0.0, 0.0)
    return (0, p.real, p.imag)


def _ordered_pair(p: SpherePoint, q: SpherePoint) -> tuple[SpherePoint, SpherePoint]:
    return (p, q) if _point_key(p) <= _point_key(q) else (q, p)


@dataclass(frozen=True)
class MapClass:
    """Conjugacy type of a Moebius transformation.

    ``order`` is only set for elliptic maps: the smallest power equal to the
    identity, or None when no power up to ELLIPTIC_ORDER_CAP closes up.
    """

    kind: str  # "identity" | "elliptic" | "parabolic" | "loxodromic"
    order: int | None = None


class MoebiusMap:
    """z -> (a z + b) / (c z + d) with the matrix scaled to determinant 1."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: complex, b: complex, c: complex, d: complex):
        a, b, c, d = complex(a), complex(b), complex(c), complex(d)
        if not all(cmath.isfinite(x) for x in (a, b, c, d)):
            raise ValueError("coefficients must be finite")
        det = a * d - b * c
        if det == 0:
            raise ValueError("coefficient matrix is singular")
        s = cmath.sqrt(det)
        self.a: complex = a / s
        self.b: complex = b / s
        self.c: complex = c / s
        self.d: complex = d / s

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def coeffs(self) -> tuple[complex, complex, complex, complex]:
        return (self.a, self.b, self.c, self.d)

    def __repr__(self) -> str:
        a, b, c, d = self.coeffs
        return f"MoebiusMap({a:.6g}, {b:.6g}, {c:.6g}, {d:.6g})"

    def __mul__(self, other: "MoebiusMap") -> "MoebiusMap":
        # composition: (self * other)(z) = self(other(z))
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, k: int) -> "MoebiusMap":
        if k < 0:
            return self.inverse() ** (-k)
        out = MoebiusMap.identity()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def __call__(self, z: SpherePoint) -> SpherePoint:
        if is_inf(z):
            if self.c == 0:
                return INF
            return self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return INF
        w = (self.a * z + self.b) / den
        if not cmath.isfinite(w):
            return INF
        return w

    def proj_distance(self, other: "MoebiusMap") -> float:
        """Coefficient distance modulo the global sign ambiguity."""
        plus = max(abs(x + y) for x, y in zip(self.coeffs, other.coeffs))
        minus = max(abs(x - y) for x, y in zip(self.coeffs, other.coeffs))
        return min(plus, minus)

    def is_identity(self, tol: float = 1e-12) -> bool:
        return self.proj_distance(MoebiusMap.identity()) <= tol

    def classify(self, tol: float = 1e-9) -> MapClass:
        """Conjugation-invariant type from the squared trace.

        The squared trace is sign-independent, so it is well defined on the
        transformation.  Boundary cases resolve in this order: identity,
        parabolic (within tol of 4), elliptic (real in [0, 4)), loxodromic.
        """
        if self.is_identity(tol):
            return MapClass("identity")
        t2 = (self.a + self.d) ** 2
        if abs(t2 - 4) <= tol:
            return MapClass("parabolic")
        if abs(t2.imag) <= tol and 0 <= t2.real < 4:
            power = self
            for k in range(2, ELLIPTIC_ORDER_CAP + 1):
                power = power * self
                if power.is_identity(tol):
                    return MapClass("elliptic", k)
            return MapClass("elliptic", None)
        return MapClass("loxodromic")

    def fixed_points(self) -> tuple[SpherePoint, SpherePoint]:
        """Both fixed points, coincident for parabolics, in a sorted order."""
        if self.is_identity():
            raise ValueError("fixed points undefined for the identity")
        a, b, c, d = self.coeffs
        if c == 0:
            if a == d:
                return (INF, INF)
            return _ordered_pair(b / (d - a), INF)
        root = cmath.sqrt((d - a) ** 2 + 4 * b * c)
        z1 = (a - d + root) / (2 * c)
        z2 = (a - d - root) / (2 * c)
        return _ordered_pair(z1, z2)

    def to_reals(self) -> list[float]:
        """Eight reals: re/im of a, b, c, d, in that order."""
        return [
            self.a.real, self.a.imag,
            self.b.real, self.b.imag,
            self.c.real, self.c.imag,
            self.d.real, self.d.imag,
        ]

    @classmethod
    def from_reals(cls, vals: Sequence[float]) -> "MoebiusMap":
        if len(vals) != 8:
            raise ValueError("expected 8 reals")
        ar, ai, br, bi, cr, ci, dr, di = vals
        return cls(complex(ar, ai), complex(br, bi), complex(cr, ci), complex(dr, di))


def eval_word(word: Iterable[int], generators: Sequence[MoebiusMap]) -> MoebiusMap:
    """Evaluate a signed-letter word; letter k means generators[k-1], -k its inverse."""
    out = MoebiusMap.identity()
    for x in word:
        if x == 0 or abs(x) > len(generators):
            raise ValueError(f"letter {x} outside the generator range")
        g = generators[abs(x) - 1]
        out = out * (g if x > 0 else g.inverse())
    return out


def projective_closure(
    generators: Sequence[MoebiusMap], tol: float = 1e-9, cap: int = 10_000
) -> list[MoebiusMap]:
    """All distinct transformations generated, breadth-first, identity first.

    Raises if more than ``cap`` elements appear, which usually means the
    generated group is infinite.
    """
    elements = [MoebiusMap.identity()]
    frontier = list(elements)
    while frontier:
        fresh: list[MoebiusMap] = []
        for g in frontier:
            for h in generators:
                cand = g * h
                if all(cand.proj_distance(e) > tol for e in elements) and all(
                    cand.proj_distance(e) > tol for e in fresh
                ):
                    if len(elements) + len(fresh) >= cap:
                        raise ValueError(f"closure exceeded {cap} elements")
                    fresh.append(cand)
        elements.extend(fresh)
        frontier = fresh
    return elements


def to_zero_inf(p: SpherePoint, q: SpherePoint) -> MoebiusMap:
    """The normalized map sending p to 0 and q to infinity."""
    if is_inf(p) and is_inf(q):
        raise ValueError("points must be distinct")
    if is_inf(q):
        return MoebiusMap(1, -p, 0, 1)
    if is_inf(p):
        return MoebiusMap(0, 1, 1, -q)
    if p == q:
        raise ValueError("points must be distinct")
    return MoebiusMap(1, -p, 1, -q)


def _require_identity(maps: Iterable[MoebiusMap], tol: float, label: str) -> None:
    for m in maps:
        if not m.is_identity(tol):
            raise RuntimeError(f"self-check failed: {label}")


def dn_generators(n: int) -> tuple[MoebiusMap, MoebiusMap]:
    """The rotation z -> e^(2 pi i / n) z and the involution z -> 1/z.

    Together they generate a dihedral group of order 2n; the relations
    A^n = B^2 = (AB)^2 = identity are verified on construction.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rot = cmath.exp(2j * cmath.pi / n)
    a = MoebiusMap(rot, 0, 0, 1)
    b = MoebiusMap(0, 1, 1, 0)
    _require_identity([a ** n, b * b, (a * b) ** 2], 1e-12, "dihedral relations")
    return a, b


def a4_generators() -> tuple[MoebiusMap, MoebiusMap]:
    """An order-3 rotation A(z) = i(1 - z)/(z + 1) and B(z) = -z.

    They generate the orientation-preserving symmetries of a tetrahedron,
    a group with exactly 12 projective elements; the relations
    A^3 = B^2 = (AB)^3 = identity are verified on construction.
    """
    a = MoebiusMap(-1j, 1j, 1, 1)
    b = MoebiusMap(-1, 0, 0, 1)
    _require_identity([a ** 3, b * b, (a * b) ** 3], 1e-12, "tetrahedral relations")
    if len(projective_closure([a, b], cap=64)) != 12:
        raise RuntimeError("self-check failed: tetrahedral closure size")
    return a, b


def fuchsian_punctured_torus(r: float, alpha: float) -> tuple[MoebiusMap, MoebiusMap]:
    """A real two-generator family: A(z) = (rz + r)/(z + alpha) and
    B(z) = (r - z)/(z + beta) with beta = 1 - r - alpha.

    Requires r > 0 and alpha > 1, which keeps both determinants positive,
    so the normalized coefficients stay real.
    """
    if not (r > 0):
        raise ValueError("need r > 0")
    if not (alpha > 1):
        raise ValueError("need alpha > 1")
    beta = 1 - r - alpha
    a = MoebiusMap(r, r, 1, alpha)
    b = MoebiusMap(-1, r, 1, beta)
    for coeff in a.coeffs + b.coeffs:
        if abs(coeff.imag) > 1e-12:
            raise RuntimeError("self-check failed: expected real coefficients")
    return a, b
