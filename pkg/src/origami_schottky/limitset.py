"""Breadth-first orbit data for a certified group: elements by word
length, limit-point clouds, and image-circle nesting diagnostics.

Enumeration works over the alphabet A, B, T and their inverses (letters
1, 2, 3 and negatives), with free reduction plus projective
deduplication, so coincidences like B = B^-1 collapse.  All output
orders are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import Circle, DegenerateCircleError, image_circle
from .moebius import MoebiusMap, is_inf
from .presentation import Word

__all__ = [
    "ElementCapExceeded",
    "OrbitPoint",
    "NestingReport",
    "enumerate_elements",
    "limit_points",
    "points_contained",
    "nesting_report",
    "points_to_csv",
    "render_ppm",
]

DEDUPE_TOL = 1e-9
FAR_CUTOFF = 1e8


class ElementCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded {cap} elements")
        self.cap = cap


@dataclass(frozen=True)
class OrbitPoint:
    position: complex
    word_length: int


@dataclass(frozen=True)
class NestingReport:
    """Per-nesting-level statistics of the bounded image discs.

    The nesting level of a group element is the number of pairing-map
    factors (t or its inverse) in a shortest letter word for it.  Shortest
    words contain no pinch (t g t^-1 with g in the paired cyclic group
    shortens), so by Britton's lemma the count is well defined.  Elliptic
    letters permute discs rigidly and never change the level, while each
    pairing-map factor pushes discs one level deeper, so the maximal disc
    radius must shrink strictly level by level.  Stratifying by raw word
    length instead would tie adjacent rows exactly (a rotation prepended to
    a word copies its disc radius one length higher).

    Images whose designated side is unbounded carry no disc radius and are
    tallied separately, as are degenerate (through-infinity) images."""

    levels: tuple[int, ...]
    circle_counts: tuple[int, ...]
    max_radius: tuple[float, ...]
    rejected: tuple[int, ...]
    unbounded: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "levels": list(self.levels),
            "circle_counts": list(self.circle_counts),
            "max_radius": list(self.max_radius),
            "rejected": list(self.rejected),
            "unbounded": list(self.unbounded),
        }


def _coeff_row(m: MoebiusMap) -> np.ndarray:
    return np.array(m.to_reals(), dtype=float)


class _ProjectiveIndex:
    """Vectorized projective-distance dedupe over coefficient rows."""

    def __init__(self):
        self.rows = np.empty((0, 8), dtype=float)

    def seen(self, row: np.ndarray, tol: float) -> bool:
        if len(self.rows) == 0:
            return False
        minus = np.max(np.abs(self.rows - row), axis=1)
        plus = np.max(np.abs(self.rows + row), axis=1)
        return bool(np.min(np.minimum(minus, plus)) <= tol)

    def add(self, row: np.ndarray) -> None:
        self.rows = np.vstack([self.rows, row[None, :]])


def enumerate_elements(built, depth: int,
                       cap: int = 5_000_000) -> list[tuple[Word, MoebiusMap]]:
    """All distinct group elements of word length <= depth.

    Words are built breadth first over the letters A, A^-1, B, B^-1, T,
    T^-1 in that fixed order; an element already seen at a shorter length
    (or earlier in the same length) is dropped, so each element keeps its
    first word.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    gens = built.letter_generators
    letters = []
    for i, m in enumerate(gens, start=1):
        letters.append((i, m))
        letters.append((-i, m.inverse()))

    identity = MoebiusMap.identity()
    index = _ProjectiveIndex()
    index.add(_coeff_row(identity))
    out: list[tuple[Word, MoebiusMap]] = [((), identity)]
    frontier: list[tuple[Word, MoebiusMap]] = [((), identity)]
    for _ in range(depth):
        fresh: list[tuple[Word, MoebiusMap]] = []
        for word, acc in frontier:
            for letter, mat in letters:
                if word and word[-1] == -letter:
                    continue
                cand = acc * mat
                row = _coeff_row(cand)
                if index.seen(row, DEDUPE_TOL):
                    continue
                if len(out) + len(fresh) >= cap:
                    raise ElementCapExceeded(cap)
                index.add(row)
                fresh.append((word + (letter,), cand))
        out.extend(fresh)
        frontier = fresh
    return out


def _exact_depth(elements: Sequence[tuple[Word, MoebiusMap]],
                 depth: int) -> list[tuple[Word, MoebiusMap]]:
    return [(w, m) for w, m in elements if len(w) == depth]


def limit_points(built, depth: int, cap: int = 5_000_000) -> list[OrbitPoint]:
    """Centers of the image discs of the two marked circles under all
    elements of word length exactly ``depth``, spatially deduplicated and
    sorted by coordinates.

    Image circles whose designated disc side is unbounded are skipped: the
    element sent the marked interior over the point at infinity, so the
    image disc is a complement region with no representative center.  The
    bounded image discs always nest inside the certified orbit discs (group
    elements permute orbit circles or push them strictly inside), which
    gives the containment diagnostic its teeth.  Points past |z| = 1e8 are
    dropped as well."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    bases = (built.pairing.c1, built.pairing.c2)
    raw: list[complex] = []
    for _, m in _exact_depth(enumerate_elements(built, depth, cap), depth):
        for base in bases:
            try:
                img = image_circle(m, base)
            except DegenerateCircleError:
                continue
            if not img.bounded:
                continue
            z = img.center
            if is_inf(z) or abs(z) > FAR_CUTOFF:
                continue
            raw.append(z)
    raw.sort(key=lambda z: (z.real, z.imag))
    kept: list[complex] = []
    arr = np.empty(0, dtype=complex)
    for z in raw:
        if len(kept) == 0 or np.min(np.abs(arr - z)) > DEDUPE_TOL:
            kept.append(z)
            arr = np.append(arr, z)
    return [OrbitPoint(z, depth) for z in kept]


def points_contained(built, depth: int, slack: float = 1e-9) -> bool:
    """Whether every limit point through ``depth`` lies inside one of the
    certified orbit discs (with a little numerical slack)."""
    circles = built.certificate.circles
    for d in range(1, depth + 1):
        for pt in limit_points(built, d):
            if all(c.interior_distance(pt.position) < -slack for c in circles):
                return False
    return True


def _nesting_level(word: Word) -> int:
    # pairing-map letter is the last generator (index 3 for case a and b)
    return sum(1 for x in word if abs(x) == 3)


def nesting_report(built, depth: int, cap: int = 5_000_000) -> NestingReport:
    """Image circles of the two marked circles under all elements of word
    length up to ``depth``, grouped by nesting level: bounded-disc counts
    and maximal radius, plus how many images were rejected as degenerate or
    had an unbounded disc side."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    elements = enumerate_elements(built, depth, cap)
    bases = (built.pairing.c1, built.pairing.c2)
    levels = list(range(depth + 1))
    counts = [0] * (depth + 1)
    maxima = [0.0] * (depth + 1)
    rejected = [0] * (depth + 1)
    complement = [0] * (depth + 1)
    for word, m in elements:
        k = _nesting_level(word)
        for base in bases:
            try:
                img = image_circle(m, base)
            except DegenerateCircleError:
                rejected[k] += 1
                continue
            if img.bounded:
                counts[k] += 1
                maxima[k] = max(maxima[k], img.radius)
            else:
                complement[k] += 1
    return NestingReport(tuple(levels), tuple(counts), tuple(maxima),
                         tuple(rejected), tuple(complement))


def points_to_csv(points: Sequence[OrbitPoint]) -> str:
    """CSV with header re,im,depth; rows sorted by (depth, re, im)."""
    rows = sorted(points, key=lambda p: (p.word_length, p.position.real,
                                         p.position.imag))
    lines = ["re,im,depth"]
    lines.extend(f"{p.position.real!r},{p.position.imag!r},{p.word_length}"
                 for p in rows)
    return "\n".join(lines) + "\n"


def render_ppm(points: Sequence[OrbitPoint], resolution: int = 800,
               bbox: tuple[float, float, float, float] | None = None) -> bytes:
    """Binary grayscale PPM (P5): white points splatted (radius one pixel)
    on black.  ``bbox`` is (xmin, xmax, ymin, ymax); by default the point
    cloud's bounds padded by 5%."""
    if resolution < 1:
        raise ValueError("resolution must be positive")
    if bbox is None:
        if not points:
            bbox = (-1.0, 1.0, -1.0, 1.0)
        else:
            xs = [p.position.real for p in points]
            ys = [p.position.imag for p in points]
            xmin, xmax = min(xs), max(xs)
            ymin, ymax = min(ys), max(ys)
            pad_x = 0.05 * max(xmax - xmin, 1e-9)
            pad_y = 0.05 * max(ymax - ymin, 1e-9)
            bbox = (xmin - pad_x, xmax + pad_x, ymin - pad_y, ymax + pad_y)
    xmin, xmax, ymin, ymax = bbox
    if not (xmax > xmin and ymax > ymin):
        raise ValueError("bbox must have positive extent")
    width = height = resolution
    img = np.zeros((height, width), dtype=np.uint8)
    for p in points:
        x = (p.position.real - xmin) / (xmax - xmin) * (width - 1)
        y = (p.position.imag - ymin) / (ymax - ymin) * (height - 1)
        if not (math.isfinite(x) and math.isfinite(y)):
            continue
        col, row = round(x), height - 1 - round(y)
        for dc, dr in ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)):
            c, r = col + dc, row + dr
            if 0 <= c < width and 0 <= r < height:
                img[r, c] = 255
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + img.tobytes()
