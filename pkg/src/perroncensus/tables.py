"""CSV/JSON table serialization with 12-significant-digit floats and atomic
file writes (temp file + rename, so no partial outputs ever land)."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile

from .asymptotics import ExponentFit, RegionEstimate
from .census import CensusRecord

CENSUS_COLUMNS = [
    "degree", "radius", "total_enumerated", "within_radius", "perron_polys",
    "perron_numbers", "reducible_in_P", "bi_perron_units", "ambiguous", "elapsed_ms",
]
FIT_COLUMNS = [
    "degree", "class", "radii", "counts", "slope", "intercept",
    "predicted_exponent", "relative_gap",
]
REGION_COLUMNS = [
    "degree", "samples", "hit_fraction", "volume_estimate",
    "lattice_R", "lattice_count", "ratio",
]


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def round12(x: float) -> float:
    return float(fmt_float(x))


def render_csv(columns: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def census_row(r: CensusRecord) -> list[str]:
    return [
        str(r.degree), fmt_float(r.radius), str(r.total_enumerated),
        str(r.within_radius), str(r.perron_polys), str(r.perron_numbers),
        str(r.reducible_in_P), str(r.bi_perron_units), str(r.ambiguous),
        str(r.elapsed_ms),
    ]


def census_json(r: CensusRecord) -> dict:
    return {
        "degree": r.degree,
        "radius": round12(r.radius),
        "total_enumerated": r.total_enumerated,
        "within_radius": r.within_radius,
        "perron_polys": r.perron_polys,
        "perron_numbers": r.perron_numbers,
        "reducible_in_P": r.reducible_in_P,
        "bi_perron_units": r.bi_perron_units,
        "ambiguous": r.ambiguous,
        "elapsed_ms": r.elapsed_ms,
    }


def parse_census_csv(text: str) -> list[CensusRecord]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != CENSUS_COLUMNS:
        raise ValueError("not a census table")
    out = []
    for row in rows[1:]:
        vals = dict(zip(CENSUS_COLUMNS, row))
        out.append(CensusRecord(
            degree=int(vals["degree"]),
            radius=float(vals["radius"]),
            total_enumerated=int(vals["total_enumerated"]),
            within_radius=int(vals["within_radius"]),
            perron_polys=int(vals["perron_polys"]),
            perron_numbers=int(vals["perron_numbers"]),
            reducible_in_P=int(vals["reducible_in_P"]),
            bi_perron_units=int(vals["bi_perron_units"]),
            ambiguous=int(vals["ambiguous"]),
            elapsed_ms=int(vals["elapsed_ms"]),
        ))
    return out


def fit_row(f: ExponentFit) -> list[str]:
    return [
        str(f.degree), f.poly_class,
        ",".join(fmt_float(r) for r in f.radii),
        ",".join(str(c) for c in f.counts),
        fmt_float(f.slope), fmt_float(f.intercept),
        fmt_float(f.predicted_exponent), fmt_float(f.relative_gap),
    ]


def fit_json(f: ExponentFit) -> dict:
    return {
        "degree": f.degree,
        "class": f.poly_class,
        "radii": [round12(r) for r in f.radii],
        "counts": list(f.counts),
        "slope": round12(f.slope),
        "intercept": round12(f.intercept),
        "predicted_exponent": round12(f.predicted_exponent),
        "relative_gap": round12(f.relative_gap),
    }


def parse_fit_csv(text: str) -> list[ExponentFit]:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != FIT_COLUMNS:
        raise ValueError("not a fit table")
    out = []
    for row in rows[1:]:
        vals = dict(zip(FIT_COLUMNS, row))
        out.append(ExponentFit(
            degree=int(vals["degree"]),
            poly_class=vals["class"],
            radii=tuple(float(x) for x in vals["radii"].split(",")),
            counts=tuple(int(x) for x in vals["counts"].split(",")),
            slope=float(vals["slope"]),
            intercept=float(vals["intercept"]),
            predicted_exponent=float(vals["predicted_exponent"]),
            relative_gap=float(vals["relative_gap"]),
        ))
    return out


def region_row(e: RegionEstimate) -> list[str]:
    return [
        str(e.degree), str(e.samples), fmt_float(e.hit_fraction),
        fmt_float(e.volume_estimate),
        "" if e.lattice_R is None else fmt_float(e.lattice_R),
        "" if e.lattice_count is None else str(e.lattice_count),
        "" if e.ratio is None else fmt_float(e.ratio),
    ]


def region_json(e: RegionEstimate) -> dict:
    return {
        "degree": e.degree,
        "samples": e.samples,
        "hit_fraction": round12(e.hit_fraction),
        "volume_estimate": round12(e.volume_estimate),
        "lattice_R": None if e.lattice_R is None else round12(e.lattice_R),
        "lattice_count": e.lattice_count,
        "ratio": None if e.ratio is None else round12(e.ratio),
    }


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_text_atomic(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
