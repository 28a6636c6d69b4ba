"""Command-line entry point wiring the census, fits, region studies,
classification queries and report rendering together.

Exit codes: 0 success, 2 usage error, 1 computational refusal (enumeration
budget exceeded, undecided irreducibility, unusable fit input).  Diagnostics
go to stderr; data goes to stdout or to --out files (written atomically).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field

from . import __version__
from .asymptotics import (
    count_lattice_in_U,
    fit_exponent,
    genus_threshold,
    geodesic_growth,
    normalize_class,
    ratio_bound,
    RegionEstimate,
    sample_region_U,
)
from .census import (
    BudgetExceededError,
    CensusSpec,
    enumerate_bi_perron_census,
    enumerate_perron_census,
    run_census,
)
from .classify import UndecidedIrreducibilityError, classify
from .poly import IntPolynomial
from .report import render_report
from .roots import RootFindingError, find_roots
from . import tables


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: everything a run needs, resolved before work starts."""

    subcommand: str
    parameters: dict = field(default_factory=dict)
    output_path: str | None = None
    format: str = "csv"
    shards: int = 1
    seed: int = 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perron-census")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="subcommand", required=True)

    c = sub.add_parser("census", help="enumerate a coefficient lattice and classify it")
    c.add_argument("--degree", type=int, required=True)
    c.add_argument("--radius", type=float, required=True)
    c.add_argument("--class", dest="poly_class", required=True, choices=["perron", "biperron", "all"])
    c.add_argument("--shards", type=int, default=1)
    c.add_argument("--out", default=None)
    c.add_argument("--format", choices=["csv", "json"], default="csv")

    f = sub.add_parser("fit", help="run a radius grid of censuses and fit the growth exponent")
    f.add_argument("--degree", type=int, required=True)
    f.add_argument("--class", dest="poly_class", required=True, choices=["perron", "biperron"])
    f.add_argument("--radii", required=True, help="comma-separated list, e.g. 8,16,32,64")
    f.add_argument("--out", default=None)

    r = sub.add_parser("rouche", help="Monte Carlo and lattice study of the certificate region")
    r.add_argument("--degree", type=int, required=True)
    r.add_argument("--samples", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--lattice-R", dest="lattice_r", type=float, default=None)

    k = sub.add_parser("classify", help="classify one polynomial at one radius")
    k.add_argument("--poly", required=True, help='comma-separated coefficients, e.g. "1,-3,1"')
    k.add_argument("--radius", type=float, required=True)

    m = sub.add_parser("formulas", help="closed-form growth comparisons at a genus and radius")
    m.add_argument("--genus", type=int, required=True)
    m.add_argument("--radius", type=float, required=True)

    g = sub.add_parser("report", help="render SVG plots and a manifest from saved tables")
    g.add_argument("--in", dest="in_dir", required=True)
    g.add_argument("--out", dest="out_dir", required=True)
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        tables.write_text_atomic(out, text)


def _cmd_census(args) -> int:
    target = normalize_class(args.poly_class)
    spec = CensusSpec(args.degree, args.radius, target, args.shards)
    rec = run_census(spec)
    if args.format == "csv":
        _emit(tables.render_csv(tables.CENSUS_COLUMNS, [tables.census_row(rec)]), args.out)
    else:
        _emit(tables.dumps_json(tables.census_json(rec)), args.out)
    return 0


def _cmd_fit(args) -> int:
    radii = [float(tok) for tok in args.radii.split(",") if tok.strip()]
    if len(radii) < 3:
        print("fit needs at least 3 radii", file=sys.stderr)
        return 2
    target = normalize_class(args.poly_class)
    records = []
    for R in radii:
        spec = CensusSpec(args.degree, R, target)
        if target == "bi_perron":
            records.append(enumerate_bi_perron_census(spec))
        else:
            records.append(enumerate_perron_census(spec))
    fit = fit_exponent(records, args.poly_class)
    _emit(tables.render_csv(tables.FIT_COLUMNS, [tables.fit_row(fit)]), args.out)
    return 0


def _cmd_rouche(args) -> int:
    est = sample_region_U(args.degree, args.samples, args.seed)
    if args.lattice_r is not None:
        lat = count_lattice_in_U(args.degree, args.lattice_r)
        est = RegionEstimate(
            degree=est.degree,
            samples=est.samples,
            hit_fraction=est.hit_fraction,
            volume_estimate=est.volume_estimate,
            lattice_R=lat.lattice_R,
            lattice_count=lat.lattice_count,
            ratio=lat.ratio,
        )
    _emit(tables.render_csv(tables.REGION_COLUMNS, [tables.region_row(est)]), None)
    return 0


def _cmd_classify(args) -> int:
    try:
        p = IntPolynomial.parse(args.poly)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    cls = classify(p, args.radius)
    payload = cls.to_json_dict()
    payload["poly"] = str(p)
    payload["radius"] = tables.round12(args.radius)
    payload["root_profile"] = find_roots(p).to_json_dict()
    _emit(tables.dumps_json(payload), None)
    return 0


def _cmd_formulas(args) -> int:
    n, R = args.genus, args.radius
    if n < 2:
        print("usage error: genus must be >= 2", file=sys.stderr)
        return 2
    if R <= 1:
        print("usage error: radius must be > 1", file=sys.stderr)
        return 2
    payload = {
        "genus": n,
        "radius": tables.round12(R),
        "genus_threshold_oriented": genus_threshold(True),
        "genus_threshold_general": genus_threshold(False),
        "ratio_bound_oriented": tables.round12(ratio_bound(n, n, R, True)),
        "ratio_bound_general": tables.round12(ratio_bound(n, n, R, False)),
        "geodesic_growth_abelian": tables.round12(geodesic_growth(n, R, "abelian")),
        "geodesic_growth_quadratic": tables.round12(geodesic_growth(n, R, "quadratic")),
    }
    _emit(tables.dumps_json(payload), None)
    return 0


def _cmd_report(args) -> int:
    import glob
    import os

    fits, census_rows = [], []
    for path in sorted(glob.glob(os.path.join(args.in_dir, "*.csv"))):
        with open(path) as fh:
            text = fh.read()
        try:
            fits.extend(tables.parse_fit_csv(text))
            continue
        except ValueError:
            pass
        try:
            census_rows.extend(tables.parse_census_csv(text))
        except ValueError:
            print(f"skipping unrecognized table {path}", file=sys.stderr)
    if not fits:
        print("usage error: no fit tables found in the input directory", file=sys.stderr)
        return 2
    config = {"in": args.in_dir, "out": args.out_dir}
    render_report(fits, census_rows, args.out_dir, config, __version__)
    return 0


_DISPATCH = {
    "census": _cmd_census,
    "fit": _cmd_fit,
    "rouche": _cmd_rouche,
    "classify": _cmd_classify,
    "formulas": _cmd_formulas,
    "report": _cmd_report,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.subcommand](args)
    except (BudgetExceededError, UndecidedIrreducibilityError, RootFindingError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
