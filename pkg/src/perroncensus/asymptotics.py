"""Exponent estimation from census tables, Monte Carlo and lattice studies of
the certificate region, and the closed-form growth evaluators.

The certificate region U is the subset of [-1, 1]^n where the three dominance
inequalities hold after substituting the sample point for the scaled
coefficients (a_0/R^n, ..., a_{n-1}/R).  Its indicator is cheap, so volume is
estimated by counter-based Monte Carlo (reproducible for any chunking) and
cross-checked by exact lattice counts at accessible sizes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .census import BudgetExceededError, CensusRecord, resolve_budget


@dataclass(frozen=True)
class ExponentFit:
    """Least-squares exponent of count ~ R^slope on a log-log grid."""

    degree: int
    poly_class: str
    radii: tuple[float, ...]
    counts: tuple[int, ...]
    slope: float
    intercept: float
    predicted_exponent: float
    relative_gap: float


@dataclass(frozen=True)
class RegionEstimate:
    """Monte Carlo hit fraction of the certificate region, with an optional
    exact lattice count at a concrete radius for comparison."""

    degree: int
    samples: int
    hit_fraction: float
    volume_estimate: float
    lattice_R: float | None = None
    lattice_count: int | None = None
    ratio: float | None = None


def normalize_class(name: str) -> str:
    if name in ("perron", "all"):
        return name
    if name in ("biperron", "bi_perron"):
        return "bi_perron"
    raise ValueError(f"unknown class {name!r}")


def fit_exponent(records: list[CensusRecord], poly_class: str) -> ExponentFit:
    """Plain least squares of log(count) on log(radius).

    Requires at least three records of one degree with distinct radii and
    nonzero counts; a zero count is rejected with instructions to raise the
    minimum radius, since its logarithm would poison the fit.
    """
    cls = normalize_class(poly_class)
    if len(records) < 3:
        raise ValueError("need at least 3 census records to fit an exponent")
    degrees = {r.degree for r in records}
    if len(degrees) != 1:
        raise ValueError(f"records span several degrees: {sorted(degrees)}")
    n = degrees.pop()
    records = sorted(records, key=lambda r: r.radius)
    radii = tuple(r.radius for r in records)
    if len(set(radii)) != len(radii):
        raise ValueError("radii must be distinct")
    counts = tuple(
        r.bi_perron_units if cls == "bi_perron" else r.perron_polys for r in records
    )
    if any(c == 0 for c in counts):
        raise ValueError(
            "zero count in the grid; raise the minimum radius so every point is nonzero"
        )
    xs = [math.log(r) for r in radii]
    ys = [math.log(c) for c in counts]
    xm = sum(xs) / len(xs)
    ym = sum(ys) / len(ys)
    sxx = sum((x - xm) ** 2 for x in xs)
    slope = sum((x - xm) * (y - ym) for x, y in zip(xs, ys)) / sxx
    intercept = ym - slope * xm
    predicted = n * (n + 1) / 2
    return ExponentFit(
        degree=n,
        poly_class="biperron" if cls == "bi_perron" else cls,
        radii=radii,
        counts=counts,
        slope=slope,
        intercept=intercept,
        predicted_exponent=predicted,
        relative_gap=abs(slope - predicted) / predicted,
    )


# ---------------------------------------------------------------------------
# the certificate region


def region_contains(u) -> np.ndarray:
    """Vectorized membership of scaled points in the certificate region.

    u has shape (N, n); column k plays the role of a_k / R^(n-k).
    """
    u = np.asarray(u, dtype=np.float64)
    if u.ndim == 1:
        u = u[None, :]
    n = u.shape[1]
    a = np.abs(u)
    ok = a.sum(axis=1) < 1.0
    for base in (0.5, 1.0 / 3.0):
        lhs = base ** (n - 1) * a[:, n - 1]
        rhs = base**n + sum(a[:, k] * base**k for k in range(n - 1))
        ok &= lhs > rhs
    return ok


_MC_CHUNK = 1 << 15


def _uniform_block(seed: int, start: int, count: int, n: int) -> np.ndarray:
    """Counter-based uniforms: sample index s always owns the Philox counter
    blocks [s*b, (s+1)*b) with b = ceil(n/4) (each block is 4 raw words), so
    any chunking of the index range reproduces identical values."""
    bps = -(-n // 4)  # counter blocks per sample
    bg = np.random.Philox(key=seed, counter=[start * bps, 0, 0, 0])
    raw = bg.random_raw(count * bps * 4).reshape(count, bps * 4)[:, :n]
    u = (raw >> np.uint64(11)).astype(np.float64) * (2.0**-53)
    return u * 2.0 - 1.0


def sample_region_U(n: int, samples: int, seed: int, chunk: int = _MC_CHUNK) -> RegionEstimate:
    """Uniform sampling of [-1, 1]^n against the certificate region;
    deterministic given the seed, independent of chunking."""
    if n < 2:
        raise ValueError("need n >= 2")
    if samples < 1000:
        raise ValueError("need at least 1000 samples")
    hits = 0
    for start in range(0, samples, chunk):
        cnt = min(chunk, samples - start)
        u = _uniform_block(seed, start, cnt, n)
        hits += int(region_contains(u).sum())
    frac = hits / samples
    return RegionEstimate(degree=n, samples=samples, hit_fraction=frac, volume_estimate=frac * 2.0**n)


def _a0_span(t1: int, t2: int, t3: int, n: int) -> int:
    """Number of integers a0 with |a0| below all three scaled bounds.

    t1 bounds |a0| directly; t2 and t3 bound 2^n |a0| and 3^n |a0|.
    """
    if t1 <= 0 or t2 <= 0 or t3 <= 0:
        return 0
    m = t1 - 1
    m = min(m, -((-t2) // 2**n) - 1, -((-t3) // 3**n) - 1)  # ceil division
    return 2 * m + 1 if m >= 0 else 0


def count_lattice_in_U(n: int, R: float, budget: int | None = None) -> RegionEstimate:
    """Exact count of integer vectors (a_0, ..., a_{n-1}) whose scaled image
    lies in the certificate region; exact integer arithmetic throughout for
    integral R (the inequalities clear denominators), rational exact
    re-checks near boundaries otherwise."""
    if not 2 <= n <= 4:
        raise ValueError("lattice walk supported for n in [2, 4]")
    F = Fraction(R)
    if F <= 1:
        raise ValueError("radius must be above 1")
    powers = [F**k for k in range(n + 1)]
    # the middle inequality forces |a_{n-1}| > R/2; the first forces < R
    top_lo = math.floor(powers[1] / 2)
    top_hi = math.ceil(powers[1]) - 1
    volume = 1
    for k in range(1, n):
        volume *= 2 * math.ceil(powers[n - k]) - 1
    volume *= 2 * (top_hi - top_lo)
    cap = resolve_budget(budget)
    if volume > cap:
        raise BudgetExceededError(
            f"lattice walk would visit about {volume:.3e} points, over the budget {cap:.3e}"
        )
    if F.denominator != 1:
        count = _count_lattice_frac(n, F, top_lo, top_hi)
    else:
        count = _count_lattice_int(n, int(F), top_lo, top_hi)
    exponent = n * (n + 1) // 2
    return RegionEstimate(
        degree=n,
        samples=0,
        hit_fraction=0.0,
        volume_estimate=0.0,
        lattice_R=float(F),
        lattice_count=count,
        ratio=count / float(F**exponent),
    )


def _count_lattice_int(n: int, R: int, top_lo: int, top_hi: int) -> int:
    """Exact integer-arithmetic walk for integral R: a_1 is vectorized, a_0 is
    counted in closed form from the three linear bounds, and the top
    coefficient contributes a factor 2 by sign symmetry."""
    Rp = [R**k for k in range(n + 1)]
    count = 0
    if n >= 3:
        a1 = np.arange(-(Rp[n - 1] - 1), Rp[n - 1], dtype=np.int64)
        w1 = np.abs(a1) * Rp[1]
    for top in range(top_lo + 1, top_hi + 1):
        base1 = Rp[n] - top * Rp[n - 1]
        base2 = 2 * top * Rp[n - 1] - Rp[n]
        base3 = 3 * top * Rp[n - 1] - Rp[n]
        if n == 2:
            count += _a0_span(base1, base2, base3, n)
            continue
        mid_vals = (0,) if n == 3 else range(-(Rp[2] - 1), Rp[2])
        for amid in mid_vals:  # a_2 when n == 4
            c1, c2, c3 = base1, base2, base3
            if n == 4:
                c1 -= abs(amid) * Rp[2]
                c2 -= (2 ** (n - 2)) * abs(amid) * Rp[2]
                c3 -= (3 ** (n - 2)) * abs(amid) * Rp[2]
            t1 = c1 - w1
            t2 = c2 - (2 ** (n - 1)) * w1
            t3 = c3 - (3 ** (n - 1)) * w1
            m = np.minimum(t1 - 1, np.minimum(-((-t2) // 2**n) - 1, -((-t3) // 3**n) - 1))
            ok = (t1 > 0) & (t2 > 0) & (t3 > 0) & (m >= 0)
            count += int((2 * m[ok] + 1).sum())
    return 2 * count


def _count_lattice_frac(n: int, F: Fraction, top_lo: int, top_hi: int) -> int:
    """Exact rational walk for non-integral R (small grids only)."""
    import itertools

    powers = [F**k for k in range(n + 1)]
    mid_ranges = [
        range(-(math.ceil(powers[k]) - 1), math.ceil(powers[k]))
        for k in range(n - 2, 0, -1)  # coefficients a_{n-2} .. a_1
    ]
    count = 0
    for top in range(top_lo + 1, top_hi + 1):
        for mids in itertools.product(*mid_ranges):
            t1 = powers[n] - top * powers[n - 1]
            t2 = 2 * top * powers[n - 1] - powers[n]
            t3 = 3 * top * powers[n - 1] - powers[n]
            for j, a in enumerate(mids):
                k = n - 2 - j
                t1 -= abs(a) * powers[k]
                t2 -= (2 ** (n - k)) * abs(a) * powers[k]
                t3 -= (3 ** (n - k)) * abs(a) * powers[k]
            if t1 <= 0 or t2 <= 0 or t3 <= 0:
                continue
            m = min(math.ceil(t1) - 1, math.ceil(t2 / 2**n) - 1, math.ceil(t3 / 3**n) - 1)
            if m >= 0:
                count += 2 * m + 1
    return 2 * count


def iter_lattice_points_in_U(n: int, R: float):
    """Generator over the counted lattice points (exact rational membership);
    intended for tests and spot checks at small R."""
    F = Fraction(R)
    powers = [F**k for k in range(n + 1)]
    ranges = [range(-(math.ceil(powers[n - k]) - 1), math.ceil(powers[n - k])) for k in range(n)]

    def member(avec) -> bool:
        t = [Fraction(abs(avec[k])) / powers[n - k] for k in range(n)]
        if sum(t) >= 1:
            return False
        for base in (Fraction(1, 2), Fraction(1, 3)):
            lhs = base ** (n - 1) * t[n - 1]
            rhs = base**n + sum(t[k] * base**k for k in range(n - 1))
            if lhs <= rhs:
                return False
        return True

    import itertools

    for avec in itertools.product(*ranges):
        if member(avec):
            yield avec


# ---------------------------------------------------------------------------
# closed-form growth expressions


def log_ratio_bound(m: int, n: int, R: float, oriented: bool) -> float:
    """Natural log of :func:`ratio_bound`; finite even when the ratio overflows."""
    if R <= 1:
        raise ValueError("need R > 1")
    e = (4 * m - 3 if oriented else 6 * m - 6) - n * (n + 1) / 2
    return e * math.log(R) - math.log(math.log(R))


def ratio_bound(m: int, n: int, R: float, oriented: bool) -> float:
    """R^(4m-3) / (ln R * R^(n(n+1)/2)), or the 6m-6 variant; inf on overflow."""
    try:
        return math.exp(log_ratio_bound(m, n, R, oriented))
    except OverflowError:
        return math.inf


def genus_threshold(oriented: bool) -> int:
    """Smallest n >= 2 with 4n-3 <= n(n+1)/2 (oriented) or 6n-6 <= n(n+1)/2."""
    n = 2
    while True:
        lhs = 4 * n - 3 if oriented else 6 * n - 6
        if 2 * lhs <= n * (n + 1):
            return n
        n += 1


def geodesic_growth(n: int, R: float, kind: str) -> float:
    """R^(4n-3)/((4n-3) ln R) for 'abelian', R^(6n-6)/((6n-6) ln R) for 'quadratic'."""
    if n < 2:
        raise ValueError("need n >= 2")
    if R <= 1:
        raise ValueError("need R > 1")
    if kind == "abelian":
        d = 4 * n - 3
    elif kind == "quadratic":
        d = 6 * n - 6
    else:
        raise ValueError(f"unknown kind {kind!r}")
    try:
        return math.exp(d * math.log(R) - math.log(d * math.log(R)))
    except OverflowError:
        return math.inf
