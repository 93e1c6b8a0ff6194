"""Command line interface.

Subcommands: ``build`` (construct and certify a group, JSON artifact),
``verify`` (subgroup index/normality/quotient/genus report), ``homs``
(exhaustive homomorphism scan), ``limitset`` (point cloud as CSV and an
optional PPM render).

Exit codes: 0 success / verified, 1 usage or configuration error,
2 computational failure (pairing search, enumeration overflow, a false
verdict, or a failed containment check).

Output files land next to the given path, or inside the directory named
by ORIGAMI_SCHOTTKY_OUTDIR when a path is relative (default: the current
directory).  Writes are atomic: a temp file in the target directory is
renamed into place.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .builder import (
    OrigamiSchottkyGroup,
    build_case_a,
    build_case_b,
    default_subgroup_words,
    realize_subgroup,
)
from .geometry import PairingSearchError
from .limitset import (
    ElementCapExceeded,
    limit_points,
    nesting_report,
    points_contained,
    points_to_csv,
    render_ppm,
)
from .presentation import (
    EnumerationOverflow,
    alternating_group_4,
    cyclic_group,
    dihedral_group,
    enumerate_homs,
    subgroup_words_a4,
    subgroup_words_even,
    subgroup_words_odd,
)

__all__ = ["main", "entrypoint"]

USAGE_ERROR = 1
COMPUTE_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; remap usage errors to 1."""

    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _out_dir() -> Path:
    return Path(os.environ.get("ORIGAMI_SCHOTTKY_OUTDIR", "."))


def _resolve(path: str) -> Path:
    p = Path(path)
    return p if p.is_absolute() else _out_dir() / p


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def _write_bytes(path: Path, blob: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(blob)
    os.replace(tmp, path)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _parse_grid(text: str, case: str):
    vals = [complex(tok) for tok in text.split(",") if tok.strip()]
    if case == "a":
        for v in vals:
            if v.imag != 0:
                raise ValueError("dihedral scan values must be real")
        return [v.real for v in vals]
    return vals


def _build_group(args) -> OrigamiSchottkyGroup:
    grid = _parse_grid(args.lambda_grid, args.case) if args.lambda_grid else None
    if args.case == "a":
        if args.n is None:
            raise ValueError("--n is required for case a")
        return build_case_a(args.n, args.r, grid)
    if args.n is not None and args.n != 2:
        raise ValueError("case b has no free n (its cone order is 2)")
    return build_case_b(args.r, grid)


def _load_or_build(args) -> OrigamiSchottkyGroup:
    if getattr(args, "from_json", None):
        payload = json.loads(Path(args.from_json).read_text())
        return OrigamiSchottkyGroup.from_dict(payload["group"])
    return _build_group(args)


def _config_echo(args, keys) -> dict:
    return {k: getattr(args, k) for k in keys}


def cmd_build(args) -> int:
    try:
        built = _build_group(args)
    except (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except PairingSearchError as exc:
        print(f"pairing search failed: {exc}", file=sys.stderr)
        return COMPUTE_ERROR
    payload = {
        "config": _config_echo(args, ("case", "n", "r", "lambda_grid")),
        "group": built.as_dict(),
    }
    name = f"build_case_{built.case}" + (f"{built.n}" if built.case == "a" else "")
    out = _resolve(args.out or f"{name}.json")
    _write_text(out, _json_text(payload))
    cert = built.certificate
    print(f"case {built.case} (n={built.n}): {len(cert.circles)} orbit circles, "
          f"min margin {cert.pairwise_margin:.6g}, verdict "
          f"{'PASS' if cert.verdict else 'FAIL'} -> {out}")
    return 0 if cert.verdict else COMPUTE_ERROR


def cmd_verify(args) -> int:
    try:
        built = _load_or_build(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except PairingSearchError as exc:
        print(f"pairing search failed: {exc}", file=sys.stderr)
        return COMPUTE_ERROR
    try:
        words = _subgroup_choice(built, args.subgroup, args.words)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        report = realize_subgroup(built, words, max_cosets=args.max_cosets)
    except EnumerationOverflow as exc:
        print(f"enumeration overflow: {exc}", file=sys.stderr)
        return COMPUTE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.coset_csv:
        from .presentation import todd_coxeter
        table = todd_coxeter(built.presentation, report.words,
                             max_cosets=args.max_cosets)
        _write_text(_resolve(args.coset_csv), table.to_csv())
    payload = {
        "config": _config_echo(args, ("case", "n", "subgroup", "max_cosets")),
        "report": report.as_dict(),
    }
    if args.out:
        _write_text(_resolve(args.out), _json_text(payload))
    ok = report.freeness.passed and report.loxodromy.passed
    quotient = report.quotient_tag or "-"
    hurwitz = "-" if report.hurwitz_equality is None else report.hurwitz_equality
    print(f"index {report.index}, normal {report.normal}, quotient {quotient}, "
          f"genus {report.genus}, hurwitz_equality {hurwitz}, "
          f"free/loxodromic {'PASS' if ok else 'FAIL'} "
          f"(depth {report.freeness.max_length})")
    return 0 if ok else COMPUTE_ERROR


def _subgroup_choice(built, choice: str, words_text: str | None):
    if choice == "custom":
        if not words_text:
            raise ValueError("--words is required with --subgroup custom")
        return tuple(built.presentation.parse_word(part)
                     for part in words_text.split(","))
    if choice == "default":
        return default_subgroup_words(built)
    if choice == "odd":
        return subgroup_words_odd(built.n)
    if choice == "even":
        return subgroup_words_even(built.n)
    if choice == "a4":
        if built.case != "b":
            raise ValueError("--subgroup a4 needs --case b")
        return subgroup_words_a4()
    raise ValueError(f"unknown subgroup choice {choice!r}")


def _target_group(name: str):
    if name == "A4":
        return alternating_group_4()
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        return dihedral_group(int(name[1:]))
    raise ValueError(f"unknown target group {name!r} (use Zm, Dm, or A4)")


def cmd_homs(args) -> int:
    try:
        target = _target_group(args.target)
        if args.case == "a":
            if args.n is None:
                raise ValueError("--n is required for case a")
            from .presentation import presentation_case_a
            pres = presentation_case_a(args.n)
            kind = ("a", args.n)
        else:
            from .presentation import presentation_case_b
            pres = presentation_case_b()
            kind = ("b",)
        homs = enumerate_homs(pres, target, kind)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    both = [h for h in homs if h.surjective and h.torsion_free]
    payload = {
        "config": _config_echo(args, ("case", "n", "target")),
        "total": len(homs),
        "surjective": sum(1 for h in homs if h.surjective),
        "torsion_free_kernel": sum(1 for h in homs if h.torsion_free),
        "surjective_and_torsion_free": len(both),
        "homomorphisms": [h.as_dict() for h in homs],
    }
    if args.out:
        _write_text(_resolve(args.out), _json_text(payload))
    print(f"{len(homs)} homomorphisms into {target.name}: "
          f"{payload['surjective']} surjective, "
          f"{payload['torsion_free_kernel']} torsion-free kernel, "
          f"{len(both)} both")
    return 0


def cmd_limitset(args) -> int:
    if args.depth < 1:
        print("error: --depth must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    try:
        built = _load_or_build(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except PairingSearchError as exc:
        print(f"pairing search failed: {exc}", file=sys.stderr)
        return COMPUTE_ERROR
    try:
        points = []
        for d in range(1, args.depth + 1):
            points.extend(limit_points(built, d))
        report = nesting_report(built, args.depth)
    except ElementCapExceeded as exc:
        print(f"element cap exceeded: {exc}", file=sys.stderr)
        return COMPUTE_ERROR
    if args.csv:
        _write_text(_resolve(args.csv), points_to_csv(points))
    if args.ppm:
        bbox = None
        if args.bbox:
            vals = [float(tok) for tok in args.bbox.split(",")]
            if len(vals) != 4:
                print("error: --bbox needs xmin,xmax,ymin,ymax", file=sys.stderr)
                return USAGE_ERROR
            bbox = (vals[0], vals[1], vals[2], vals[3])
        _write_bytes(_resolve(args.ppm),
                     render_ppm(points, args.resolution, bbox))
    print(f"{len(points)} points through depth {args.depth}; "
          f"max disc radius by nesting level: "
          + ", ".join(f"{r:.4g}" for r in report.max_radius))
    if args.check_containment:
        ok = points_contained(built, args.depth)
        print(f"containment: {'PASS' if ok else 'FAIL'}")
        if not ok:
            return COMPUTE_ERROR
    return 0


def _add_family_flags(sub, with_build_params: bool = True):
    sub.add_argument("--case", choices=("a", "b"), required=True)
    sub.add_argument("--n", type=int, default=None,
                     help="dihedral parameter (case a; n >= 2)")
    if with_build_params:
        sub.add_argument("--r", type=float, default=None,
                         help="circle radius in the normalized coordinate")
        sub.add_argument("--lambda-grid", dest="lambda_grid", default=None,
                         help="comma-separated scan values")
        sub.add_argument("--from", dest="from_json", default=None,
                         help="reuse a build artifact instead of rebuilding")


def main(argv=None) -> int:
    parser = _Parser(prog="origami-schottky",
                     description="certified HNN extensions of finite "
                                 "Moebius groups")
    subs = parser.add_subparsers(dest="command", required=True)

    p_build = subs.add_parser("build", parents=[], help="construct and certify")
    _add_family_flags(p_build)
    p_build.set_defaults(from_json=None)
    p_build.add_argument("--out", default=None, help="artifact path (JSON)")
    p_build.set_defaults(func=cmd_build)

    p_verify = subs.add_parser("verify", help="verify subgroup claims")
    _add_family_flags(p_verify)
    p_verify.add_argument("--subgroup", default="default",
                          choices=("default", "odd", "even", "a4", "custom"))
    p_verify.add_argument("--words", default=None,
                          help="comma-separated words for --subgroup custom, "
                               "e.g. 'T,B T B'")
    p_verify.add_argument("--max-cosets", dest="max_cosets", type=int,
                          default=1_000_000)
    p_verify.add_argument("--out", default=None, help="report path (JSON)")
    p_verify.add_argument("--coset-csv", dest="coset_csv", default=None,
                          help="write the closed coset table as CSV")
    p_verify.set_defaults(func=cmd_verify)

    p_homs = subs.add_parser("homs", help="exhaustive homomorphism scan")
    p_homs.add_argument("--case", choices=("a", "b"), required=True)
    p_homs.add_argument("--n", type=int, default=None)
    p_homs.add_argument("--target", required=True, help="Zm, Dm, or A4")
    p_homs.add_argument("--out", default=None, help="scan result path (JSON)")
    p_homs.set_defaults(func=cmd_homs)

    p_lim = subs.add_parser("limitset", help="limit-set point cloud")
    _add_family_flags(p_lim)
    p_lim.add_argument("--depth", type=int, default=5)
    p_lim.add_argument("--csv", default=None, help="point cloud path (CSV)")
    p_lim.add_argument("--ppm", default=None, help="render path (binary PPM)")
    p_lim.add_argument("--resolution", type=int, default=800)
    p_lim.add_argument("--bbox", default=None, help="xmin,xmax,ymin,ymax")
    p_lim.add_argument("--check-containment", action="store_true")
    p_lim.set_defaults(func=cmd_limitset)

    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
