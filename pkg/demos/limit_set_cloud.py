"""
Limit set point clouds
======================

Orbits of the marked circles under longer and longer words accumulate on
the limit set. Centers of the bounded image discs sample it: every image
disc nests inside the certified disc union, and the maximal disc radius
decays geometrically with the nesting level (the number of pairing-map
factors in the word), so the cloud converges fast.
"""

from pathlib import Path

from origami_schottky.builder import build_case_a
from origami_schottky.limitset import (
    limit_points,
    nesting_report,
    points_contained,
    points_to_csv,
    render_ppm,
)

OUT = Path(__file__).resolve().parent / "out"
OUT.mkdir(exist_ok=True)

built = build_case_a(3)
depth = 5

points = []
for d in range(1, depth + 1):
    pts = limit_points(built, d)
    points.extend(pts)
    print(f"depth {d}: {len(pts)} points")

# containment is the discreteness story made visible: nothing ever
# leaves the certified discs
print(f"all points inside the certified discs: "
      f"{points_contained(built, depth)}")

report = nesting_report(built, depth)
print("level  bounded discs  max radius")
for k, count, radius in zip(report.levels, report.circle_counts,
                            report.max_radius):
    print(f"{k:>5}  {count:>13}  {radius:.6f}")

csv_path = OUT / "limit_points_a3.csv"
csv_path.write_text(points_to_csv(points))
print(f"csv -> {csv_path}")

ppm_path = OUT / "limit_points_a3.ppm"
ppm_path.write_bytes(render_ppm(points, resolution=800))
print(f"ppm -> {ppm_path}")
