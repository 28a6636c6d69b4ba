"""Exhaustive coefficient-lattice censuses with exact pruning, sharded over
the top coefficient, with schedule-independent totals.

Degrees 1-3 of the Perron census and layers m = 1, 2 of the bi-Perron census
run on vectorized kernels whose every boundary decision is exact integer or
rational arithmetic (float work only screens candidates that are then decided
exactly or routed to the escalating classifier).  Higher degrees fall back to
a generic enumerator that classifies each surviving lattice point.

``total_enumerated`` is the full Vieta-box cardinality: pruning only skips
subtrees that provably violate the root bound, so the box size is the
schedule-independent notion of work.  Ambiguous polynomials land in their own
bucket and are excluded from every other count.
"""
from __future__ import annotations

import math
import os
import sqlite3
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import (
    _max_mag_le,
    _real_root_vs_bound,
    factor_monic,
    is_bi_perron_unit,
)
from .poly import IntPolynomial, char_palindromic_poly, is_palindromic, trace_lift
from .roots import find_roots

DEFAULT_CANDIDATE_BUDGET = 10_000_000_000
BUDGET_ENV = "PERRON_CENSUS_BUDGET"
TARGET_CLASSES = ("perron", "bi_perron", "all")


class BudgetExceededError(RuntimeError):
    """Projected enumeration volume exceeds the configured budget."""


class CensusAuditError(RuntimeError):
    """An internal consistency check failed; counts would not be trustworthy."""


def resolve_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(float(env))
    return DEFAULT_CANDIDATE_BUDGET


@dataclass(frozen=True)
class CensusSpec:
    """Parameters of one census run."""

    degree: int
    radius: float
    target_class: str = "perron"
    shard_count: int = 1
    dedupe_store_path: str | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.degree <= 12:
            raise ValueError("degree must be in [1, 12]")
        if not self.radius >= 1:
            raise ValueError("radius must be >= 1")
        if self.target_class not in TARGET_CLASSES:
            raise ValueError(f"target_class must be one of {TARGET_CLASSES}")
        if self.shard_count < 1:
            raise ValueError("shard_count must be >= 1")


@dataclass(frozen=True)
class CensusRecord:
    """Per-(degree, radius) counts; the published unit of census output."""

    degree: int
    radius: float
    total_enumerated: int
    within_radius: int
    perron_polys: int
    perron_numbers: int
    reducible_in_P: int
    bi_perron_units: int
    ambiguous: int
    elapsed_ms: int

    def __post_init__(self) -> None:
        ok = (
            self.perron_numbers + self.reducible_in_P <= self.perron_polys
            and self.perron_polys <= self.within_radius
            and self.within_radius <= self.total_enumerated
        )
        if not ok:
            raise CensusAuditError(f"count containment chain violated: {self}")


def factor_pair_bound(n: int, R: float) -> float:
    """Sum over proper splits k of R^(k(k+1)/2) * R^((n-k)(n-k+1)/2), the
    envelope bounding how many reducible polynomials a census can contain."""
    if n < 2:
        raise ValueError("need n >= 2")
    return sum(float(R) ** ((k * (k + 1) + (n - k) * (n - k + 1)) // 2) for k in range(1, n))


def reducible_fraction(record: CensusRecord) -> float:
    """Reducible share of the Perron count; 0 on an empty census."""
    if record.perron_polys == 0:
        return 0.0
    return record.reducible_in_P / record.perron_polys


def vieta_bounds(n: int, F: Fraction) -> list[int]:
    """|c_i| <= binomial(n, i) * R^i for the i-th coefficient below the lead."""
    return [math.floor(math.comb(n, i) * F**i) for i in range(1, n + 1)]


def _box_volume(bounds: list[int]) -> int:
    v = 1
    for b in bounds:
        v *= 2 * b + 1
    return v


def _chunks(lo: int, hi: int, k: int) -> list[tuple[int, int]]:
    """Split the inclusive range [lo, hi] into at most k contiguous pieces."""
    n = hi - lo + 1
    k = max(1, min(k, n))
    out = []
    start = lo
    for i in range(k):
        size = n // k + (1 if i < n % k else 0)
        out.append((start, start + size - 1))
        start += size
    return out


def _ceil_frac(x: Fraction) -> int:
    return math.ceil(x)


def _floor_frac(x: Fraction) -> int:
    return math.floor(x)


# ---------------------------------------------------------------------------
# Perron census kernels
#
# Counts tuple: (within, perron, perron_irr, reducible_in_P, ambiguous)


def _tally_classified(p: IntPolynomial, R: float, acc: list[int]) -> None:
    # only the verdicts this census publishes decide the ambiguous bucket
    from .classify import is_irreducible, is_perron_poly, _max_mag_le as mag_le

    w = mag_le(p, Fraction(R))
    pv = is_perron_poly(p, R)
    if w is None or pv.ambiguous:
        acc[4] += 1
        return
    if w:
        acc[0] += 1
    if pv.value:
        acc[1] += 1
        if is_irreducible(p):
            acc[2] += 1
        else:
            acc[3] += 1


def _perron_deg1(F: Fraction, lo: int, hi: int) -> tuple[int, ...]:
    # p = x + a0, root -a0; the box already enforces |a0| <= R
    within = hi - lo + 1
    perron = sum(1 for a in range(lo, hi + 1) if a <= -2)
    return within, perron, perron, 0, 0


def _perron_deg2(F: Fraction, lo: int, hi: int) -> tuple[int, ...]:
    F2 = F * F
    cmax = _floor_frac(F2)
    c = np.arange(-cmax, cmax + 1, dtype=np.int64)
    acc = [0, 0, 0, 0, 0]
    for b in range(lo, hi + 1):
        disc = np.int64(b) * b - 4 * c
        real_m = disc > 0
        # within: complex pairs have |z|^2 = c <= R^2 (box); real cases need
        # p(+-R) >= 0 and |b| <= 2R, all exact
        w = int((disc < 0).sum())
        if abs(b) <= 2 * F:
            w += int((disc == 0).sum())
            lo_c = max(_ceil_frac(-(F2 + b * F)), _ceil_frac(b * F - F2))
            w += int((real_m & (c >= lo_c)).sum())
        acc[0] += w
        # Perron: two real roots, positive one dominant (b < 0), above 1, <= R
        if b <= -1:
            gt1 = real_m if b <= -2 else (disc >= 2)
            G = 2 * F + b
            if G >= 0:
                pm = real_m & gt1 & (disc <= _floor_frac(G * G))
                k = int(pm.sum())
                if k:
                    d = disc[pm]
                    s = np.sqrt(d.astype(np.float64)).astype(np.int64)
                    square = (s * s == d) | ((s + 1) * (s + 1) == d)
                    red = int(square.sum())  # integer roots <=> reducible
                    acc[1] += k
                    acc[2] += k - red
                    acc[3] += red
    return tuple(acc)


def _perron_deg3(F: Fraction, lo_top: int, hi_top: int) -> tuple[int, ...]:
    F2, F3 = F * F, F * F * F
    b2 = _floor_frac(3 * F2)
    b3 = _floor_frac(F3)
    s2cap = _floor_frac(3 * F2)
    s3cap = 3 * F3
    rmax = _floor_frac(F)
    Rf = float(F)
    tol = 1e-9 * max(1.0, Rf)
    acc = [0, 0, 0, 0, 0]
    two_pi = 2.0 * math.pi
    for d2 in range(lo_top, hi_top + 1):
        A = float(d2)
        for d1 in range(-b2, b2 + 1):
            if abs(d2 * d2 - 2 * d1) > s2cap:
                continue  # power sum s2 already forces a root beyond R
            K = -(d2**3) + 3 * d2 * d1
            lo = max(-b3, _ceil_frac((K - s3cap) / 3), _ceil_frac(-(F3 + d2 * F2 + d1 * F)))
            hi = min(b3, _floor_frac((K + s3cap) / 3), _floor_frac(F3 - d2 * F2 + d1 * F))
            if lo > hi:
                continue
            d0 = np.arange(lo, hi + 1, dtype=np.int64)
            t1 = 18 * d2 * d1 - 4 * d2**3
            t0 = d2 * d2 * d1 * d1 - 4 * d1**3
            disc3 = d0 * np.int64(t1) + np.int64(t0) - 27 * d0 * d0
            three = disc3 > 0
            one = disc3 < 0
            pend = disc3 == 0  # repeated roots: all rational, decided exactly later

            B = float(d1)
            C = d0.astype(np.float64)
            pp = B - A * A / 3.0
            with np.errstate(all="ignore"):
                qq = C + (2.0 * A**3 - 9.0 * A * B) / 27.0
                # three real roots: trig form (pp < 0 on this branch)
                h = math.sqrt(max(-pp, 0.0) / 3.0)
                if h > 0.0:
                    phi = np.arccos(np.clip(-qq / (2.0 * h**3), -1.0, 1.0))
                else:
                    phi = np.zeros_like(qq)
                m2h = 2.0 * h
                r_big = m2h * np.cos(phi / 3.0) - A / 3.0
                r_min = m2h * np.cos((phi + two_pi) / 3.0) - A / 3.0
                r_mid = m2h * np.cos((phi + 2.0 * two_pi) / 3.0) - A / 3.0
                # one real root: stable Cardano, complex pair via deflation
                s = np.sqrt(np.maximum(qq * qq / 4.0 + pp**3 / 27.0, 0.0))
                uarg = np.where(qq > 0, -qq / 2.0 - s, -qq / 2.0 + s)
                U = np.cbrt(uarg)
                t_real = np.where(U != 0, U - pp / (3.0 * np.where(U == 0, 1.0, U)), 0.0)
                x_real = t_real - A / 3.0
                gamma = B + x_real * (A + x_real)
                pair = np.sqrt(np.maximum(gamma, 0.0))

                maxmag = np.where(
                    three,
                    np.maximum(np.abs(r_big), np.abs(r_min)),
                    np.maximum(np.abs(x_real), pair),
                )
                lam = np.where(three, r_big, x_real)
                runner = np.where(three, np.maximum(np.abs(r_min), np.abs(r_mid)), pair)

                pend = pend | (np.abs(maxmag - Rf) <= tol)
                inwin = ~pend & (maxmag < Rf)
                gap = lam - runner
                pend = pend | (inwin & (np.abs(gap) <= tol))
                domin = ~pend & inwin & (gap > 0)
                pend = pend | (domin & (np.abs(lam - 1.0) <= tol))
                perron_m = ~pend & domin & (lam > 1.0)
                within_m = ~pend & (maxmag < Rf)

            # exact reducibility for cubics: an integer root is the only way
            marked = np.zeros(len(d0), dtype=bool)
            for r in range(-rmax, rmax + 1):
                v = -(r**3 + d2 * r * r + d1 * r)
                if lo <= v <= hi:
                    marked[v - lo] = True

            acc[0] += int(within_m.sum())
            k = int(perron_m.sum())
            if k:
                red = int((perron_m & marked).sum())
                acc[1] += k
                acc[2] += k - red
                acc[3] += red
            for idx in np.nonzero(pend)[0]:
                _tally_classified(IntPolynomial((1, d2, d1, int(d0[idx]))), Rf, acc)
    return tuple(acc)


def _power_sum_prune(prefix: list[int], caps: list[Fraction]) -> bool:
    """True when Newton power sums of the chosen top coefficients already
    force some root modulus beyond R."""
    k = len(prefix)
    e = [0] + [(-1) ** i * prefix[i - 1] for i in range(1, k + 1)]
    s: list[int] = [0] * (k + 1)
    for j in range(1, k + 1):
        acc = (-1) ** (j - 1) * j * e[j]
        for i in range(1, j):
            acc += (-1) ** (i - 1) * e[i] * s[j - i]
        s[j] = acc
        if abs(s[j]) > caps[j - 1]:
            return True
    return False


def _perron_generic(n: int, F: Fraction, lo_top: int, hi_top: int) -> tuple[int, ...]:
    bounds = vieta_bounds(n, F)
    caps = [n * F**k for k in range(1, n + 1)]
    Rf = float(F)
    acc = [0, 0, 0, 0, 0]

    def rec(prefix: list[int]) -> None:
        k = len(prefix)
        if _power_sum_prune(prefix, caps):
            return
        if k == n:
            _tally_classified(IntPolynomial((1, *prefix)), Rf, acc)
            return
        b = bounds[k]
        for v in range(-b, b + 1):
            rec(prefix + [v])

    for top in range(lo_top, hi_top + 1):
        rec([top])
    return tuple(acc)


def _perron_shard(args) -> tuple[int, ...]:
    n, radius, lo, hi, force_generic = args
    F = Fraction(radius)
    if force_generic or n >= 4:
        return _perron_generic(n, F, lo, hi)
    if n == 1:
        return _perron_deg1(F, lo, hi)
    if n == 2:
        return _perron_deg2(F, lo, hi)
    return _perron_deg3(F, lo, hi)


def enumerate_perron_census(
    spec: CensusSpec, budget: int | None = None, force_generic: bool = False
) -> CensusRecord:
    """Count Perron polynomials (and their irreducible/reducible split) over
    the full Vieta coefficient box at the spec's degree and radius."""
    if spec.target_class not in ("perron", "all"):
        raise ValueError("perron census needs target_class 'perron' or 'all'")
    F = Fraction(spec.radius)
    bounds = vieta_bounds(spec.degree, F)
    volume = _box_volume(bounds)
    cap = resolve_budget(budget)
    if volume > cap:
        raise BudgetExceededError(
            f"census would enumerate about {volume:.3e} candidates, over the budget {cap:.3e}"
        )
    t0 = time.perf_counter()
    pieces = _chunks(-bounds[0], bounds[0], spec.shard_count)
    payloads = [(spec.degree, spec.radius, lo, hi, force_generic) for lo, hi in pieces]
    if len(payloads) == 1:
        results = [_perron_shard(payloads[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(payloads)) as pool:
            results = list(pool.map(_perron_shard, payloads))
    within, perron, perron_irr, reducible, amb = (sum(r[i] for r in results) for i in range(5))
    return CensusRecord(
        degree=spec.degree,
        radius=float(spec.radius),
        total_enumerated=volume,
        within_radius=within,
        perron_polys=perron,
        perron_numbers=perron_irr,
        reducible_in_P=reducible,
        bi_perron_units=0,
        ambiguous=amb,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


# ---------------------------------------------------------------------------
# bi-Perron census
#
# Candidates are enumerated through the trace-lift parametrization: monic
# integer q of degree m <-> monic palindromic integer p of degree 2m, with
# every root pair of p collapsing to one root y = x + 1/x of q.  All x-roots
# lie in the closed annulus [1/R, R] exactly when all y-roots lie in the
# closed ellipse with semi-axes R + 1/R and R - 1/R, so the q-box bounded by
# |b_j| <= C(m, j) (R + 1/R)^j covers everything the palindromic box does,
# in a lattice smaller by large binomial factors.


class DedupeStore:
    """Set of coefficient keys with optional sqlite spill at a given path."""

    def __init__(self, path: str | None = None, max_in_memory: int = 5_000_000):
        self._mem: set[tuple[int, ...]] = set()
        self._path = path
        self._max = max_in_memory
        self._db: sqlite3.Connection | None = None
        self._db_count = 0

    def _spill(self) -> None:
        if self._path is None:
            raise BudgetExceededError(
                f"dedupe store exceeded {self._max} keys and no dedupe_store_path was given"
            )
        self._db = sqlite3.connect(self._path)
        self._db.execute("CREATE TABLE IF NOT EXISTS keys (k TEXT PRIMARY KEY)")
        with self._db:
            self._db.executemany(
                "INSERT OR IGNORE INTO keys VALUES (?)",
                ((",".join(map(str, k)),) for k in self._mem),
            )
        self._db_count = self._db.execute("SELECT COUNT(*) FROM keys").fetchone()[0]
        self._mem = set()

    def add(self, key: tuple[int, ...]) -> None:
        if self._db is None:
            self._mem.add(key)
            if len(self._mem) > self._max:
                self._spill()
        else:
            with self._db:
                cur = self._db.execute(
                    "INSERT OR IGNORE INTO keys VALUES (?)", (",".join(map(str, key)),)
                )
                self._db_count += cur.rowcount

    def update(self, keys) -> None:
        for k in keys:
            self.add(k)

    def __len__(self) -> int:
        return len(self._mem) if self._db is None else self._db_count

    def keys(self) -> frozenset[tuple[int, ...]]:
        if self._db is None:
            return frozenset(self._mem)
        rows = self._db.execute("SELECT k FROM keys").fetchall()
        return frozenset(tuple(int(t) for t in r[0].split(",")) for r in rows)


def _units_from_quadratic(b1: int, b0: int) -> list[tuple[int, ...]]:
    """Characteristic-polynomial keys certified by the survivor q = y^2+b1*y+b0.

    The survivor is known to have both y-roots in the closed ellipse and a
    real y-root above 2; everything else here is exact integer arithmetic.
    """
    disc = b1 * b1 - 4 * b0
    k = math.isqrt(disc)
    if k * k == disc:
        # q splits over Z; the leading y-root gives a degree-2 characteristic
        u = (-b1 + k) // 2
        if u <= 2:
            raise CensusAuditError(f"survivor q=y^2{b1:+d}y{b0:+d} lost its root above 2")
        return [(1, -u, 1)]
    if b1 == 0:
        w = -b0 - 4
        r = math.isqrt(w) if w >= 0 else 0
        if w >= 1 and r * r == w:
            # lift splits as (x^2+rx-1)(x^2-rx-1); the characteristic
            # polynomial of the leading root is their palindromic product
            return [(1, 0, b0 + 2, 0, 1)]
    # q irreducible and the lift irreducible: palindromic minimal polynomial.
    # The other y-root pair stays inside the outer wall iff |y2| <= y+, i.e.
    # y+ + y2 = -b1 >= 0 (closed annulus allows the exact tie at -y+).
    if b1 <= 0:
        return [(1, b1, b0 + 2, b1, 1)]
    return []


def _biperron_m1(F: Fraction, S: Fraction, lo: int, hi: int):
    units = set()
    for b0 in range(lo, hi + 1):
        if b0 <= -3:
            units.add((1, b0, 1))
    return hi - lo + 1, 0, units


def _biperron_m2(F: Fraction, S: Fraction, lo: int, hi: int):
    S2 = S * S
    Bsq = (F - 1 / F) ** 2  # squared semi-minor axis of the ellipse
    b0max = _floor_frac(S2)
    b0 = np.arange(-b0max, b0max + 1, dtype=np.int64)
    within = 0
    units: set[tuple[int, ...]] = set()
    for b1 in range(lo, hi + 1):
        disc = np.int64(b1) * b1 - 4 * b0
        real_m = disc >= 0
        if abs(b1) <= 2 * S:
            lo_c = max(_ceil_frac(-(S2 + b1 * S)), _ceil_frac(-(S2 - b1 * S)))
            real_in = real_m & (b0 >= lo_c)
        else:
            real_in = np.zeros_like(real_m)
        # complex y-pair inside the ellipse: b0 <= B^2 + b1^2 / S^2 exactly
        cplx_in = (~real_m) & (b0 <= _floor_frac(Bsq + Fraction(b1 * b1) / S2))
        in_ell = real_in | cplx_in
        within += int(in_ell.sum())
        # a real y-root above 2 is what makes a leading root above 1 possible
        q2 = 4 + 2 * b1 + b0
        has_lam = (q2 < 0) | ((b1 <= -4) & (disc > 0)) | ((b1 <= -5) & (disc == 0))
        surv = in_ell & has_lam
        for idx in np.nonzero(surv)[0]:
            for key in _units_from_quadratic(b1, int(b0[idx])):
                units.add(key)
    return within, 0, units


def _in_annulus(p: IntPolynomial, F: Fraction):
    """Tri-state: all roots of the palindromic p inside the closed annulus
    [1/R, R]?  Palindromy pairs every modulus with its reciprocal, so only the
    outer wall needs checking."""
    return _max_mag_le(p, F)


def _biperron_generic(m: int, F: Fraction, S: Fraction, lo_top: int, hi_top: int):
    bounds = vieta_bounds(m, S)
    caps = [m * S**k for k in range(1, m + 1)]
    Rf = float(F)
    within = 0
    amb = 0
    units: set[tuple[int, ...]] = set()

    def handle(q: IntPolynomial) -> None:
        nonlocal within, amb
        p = trace_lift(q).lifted
        w = _in_annulus(p, F)
        if w is None:
            amb += 1
            return
        if not w:
            return
        gt1 = _real_root_vs_bound(p, "max_real", Fraction(1), "gt")
        if gt1 is None:
            amb += 1  # leading root pinned to the lambda > 1 wall
            return
        if not gt1:
            within += 1  # inside the annulus but no unit above 1
            return
        prof = find_roots(p)
        reals = [z.real for z in prof.roots if abs(z.imag) <= prof.error_bound]
        lam = max(reals) if reals else 1.0
        factors = factor_monic(p)
        lead = min(factors, key=lambda f: abs(f(lam)))
        try:
            verdict = is_bi_perron_unit(lead, Rf)
        except ValueError as exc:  # pragma: no cover - factors are irreducible
            raise CensusAuditError(str(exc)) from exc
        if verdict.ambiguous:
            amb += 1
            return
        within += 1
        if verdict.value:
            char = char_palindromic_poly(lead)
            if not is_palindromic(char) or char.degree > p.degree:
                raise CensusAuditError(
                    f"characteristic polynomial audit failed for factor {lead} of {p}"
                )
            units.add(char.coeffs)

    def rec(prefix: list[int]) -> None:
        k = len(prefix)
        if _power_sum_prune(prefix, caps):
            return
        if k == m:
            handle(IntPolynomial((1, *prefix)))
            return
        b = bounds[k]
        for v in range(-b, b + 1):
            rec(prefix + [v])

    for top in range(lo_top, hi_top + 1):
        rec([top])
    return within, amb, units


def _biperron_shard(args):
    m, radius, lo, hi, force_generic = args
    F = Fraction(radius)
    S = F + 1 / F
    if force_generic or m >= 3:
        return _biperron_generic(m, F, S, lo, hi)
    if m == 1:
        return _biperron_m1(F, S, lo, hi)
    return _biperron_m2(F, S, lo, hi)


def _bi_perron_scan(spec: CensusSpec, budget: int | None, force_generic: bool):
    F = Fraction(spec.radius)
    S = F + 1 / F
    volume = 0
    layers = []
    for m in range(1, spec.degree + 1):
        bounds = vieta_bounds(m, S)
        volume += _box_volume(bounds)
        layers.append((m, bounds[0]))
    cap = resolve_budget(budget)
    if volume > cap:
        raise BudgetExceededError(
            f"census would enumerate about {volume:.3e} candidates, over the budget {cap:.3e}"
        )
    within = 0
    amb = 0
    store = DedupeStore(spec.dedupe_store_path)
    for m, top in layers:
        pieces = _chunks(-top, top, spec.shard_count)
        payloads = [(m, spec.radius, lo, hi, force_generic) for lo, hi in pieces]
        if len(payloads) == 1:
            results = [_biperron_shard(payloads[0])]
        else:
            with ProcessPoolExecutor(max_workers=len(payloads)) as pool:
                results = list(pool.map(_biperron_shard, payloads))
        for w, a, units in results:
            within += w
            amb += a
            store.update(units)
    return volume, within, amb, store


def enumerate_bi_perron_census(
    spec: CensusSpec, budget: int | None = None, force_generic: bool = False
) -> CensusRecord:
    """Count distinct bi-Perron algebraic units no larger than R whose
    characteristic polynomial has degree at most 2 * spec.degree.

    Each candidate palindromic polynomial is factored; the irreducible factor
    of its leading root yields the characteristic polynomial, which is the
    deduplication key, so every unit is counted exactly once across layers.
    """
    if spec.target_class != "bi_perron":
        raise ValueError("bi-Perron census needs target_class 'bi_perron'")
    t0 = time.perf_counter()
    volume, within, amb, store = _bi_perron_scan(spec, budget, force_generic)
    return CensusRecord(
        degree=spec.degree,
        radius=float(spec.radius),
        total_enumerated=volume,
        within_radius=within,
        perron_polys=0,
        perron_numbers=0,
        reducible_in_P=0,
        bi_perron_units=len(store),
        ambiguous=amb,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


def bi_perron_unit_set(
    spec: CensusSpec, budget: int | None = None, force_generic: bool = False
) -> frozenset[tuple[int, ...]]:
    """The deduplicated characteristic-polynomial keys behind the census count."""
    spec = CensusSpec(spec.degree, spec.radius, "bi_perron", spec.shard_count, spec.dedupe_store_path)
    return _bi_perron_scan(spec, budget, force_generic)[3].keys()


def run_census(spec: CensusSpec, budget: int | None = None) -> CensusRecord:
    """Dispatch on target_class; 'all' merges a Perron run with a bi-Perron run."""
    if spec.target_class == "perron":
        return enumerate_perron_census(spec, budget)
    if spec.target_class == "bi_perron":
        return enumerate_bi_perron_census(spec, budget)
    p = enumerate_perron_census(
        CensusSpec(spec.degree, spec.radius, "perron", spec.shard_count, spec.dedupe_store_path),
        budget,
    )
    b = enumerate_bi_perron_census(
        CensusSpec(spec.degree, spec.radius, "bi_perron", spec.shard_count, spec.dedupe_store_path),
        budget,
    )
    return CensusRecord(
        degree=spec.degree,
        radius=p.radius,
        total_enumerated=p.total_enumerated + b.total_enumerated,
        within_radius=p.within_radius,
        perron_polys=p.perron_polys,
        perron_numbers=p.perron_numbers,
        reducible_in_P=p.reducible_in_P,
        bi_perron_units=b.bi_perron_units,
        ambiguous=p.ambiguous + b.ambiguous,
        elapsed_ms=p.elapsed_ms + b.elapsed_ms,
    )
