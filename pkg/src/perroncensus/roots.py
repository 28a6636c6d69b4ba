"""Root profiles with certified displacement bounds, plus the coefficient
dominance certificate that pins the census root pattern.

The finder runs simultaneous Aberth-Ehrlich corrections from companion-matrix
eigenvalue seeds.  Convergence is declared on backward error: every reported
root z satisfies |p(z)| <= precision * scale, and the profile carries a
forward bound max_i deg * |p(z_i)| / |p'(z_i)|, which always covers the
distance from z_i to some true root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .poly import IntPolynomial

DEFAULT_PRECISION = 1e-10
_MAX_SWEEPS = 200
_MP_DPS_LADDER = (60, 200)


class RootFindingError(RuntimeError):
    """Raised instead of ever returning a silently wrong root set."""


@dataclass(frozen=True)
class RootProfile:
    """All complex roots of a monic polynomial, sorted by descending modulus.

    ``leading_root_index`` is set only when the max-modulus root is real,
    simple, and beats the runner-up modulus by more than twice the error
    bound; ties never elect a leading root.
    """

    roots: tuple[complex, ...]
    magnitudes: tuple[float, ...]
    error_bound: float
    leading_root_index: int | None

    @property
    def leading_root(self) -> float | None:
        if self.leading_root_index is None:
            return None
        return self.roots[self.leading_root_index].real

    def to_json_dict(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "magnitudes": list(self.magnitudes),
            "error_bound": self.error_bound,
        }


def find_roots(p: IntPolynomial, precision: float = DEFAULT_PRECISION) -> RootProfile:
    """Compute all degree-many roots with a certified displacement bound.

    Raises :class:`RootFindingError` (naming the polynomial) if the iteration
    budget runs out before every backward error drops below ``precision``.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if not p.is_monic:
        raise ValueError(f"root profiles are defined for monic input, got {p}")
    if not (precision > 0):
        raise ValueError("precision must be positive")
    n = p.degree
    if n == 1:
        r = float(-p.coeffs[1])
        return RootProfile((complex(r, 0.0),), (abs(r),), 0.0, 0)

    c = np.array(p.coeffs, dtype=np.float64)
    dc = np.polyder(c)
    z = np.roots(c).astype(np.complex128)
    scale = max(1.0, float(np.max(np.abs(z))))
    # separate exactly coincident seeds so the Aberth denominators stay finite
    if len({(w.real, w.imag) for w in z}) < n:
        z = z + (np.arange(n) + 1) * (1e-6 * scale) * (0.6 + 0.8j)

    converged = False
    for _ in range(_MAX_SWEEPS):
        pz = np.polyval(c, z)
        bscale = np.maximum(np.polyval(np.abs(c), np.abs(z)), 1.0)
        if np.all(np.abs(pz) <= precision * bscale):
            converged = True
            break
        dpz = np.polyval(dc, z)
        newton = np.where(dpz != 0, pz / np.where(dpz == 0, 1.0, dpz), 0.0)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        srec = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - newton * srec
        w = np.where(denom != 0, newton / np.where(denom == 0, 1.0, denom), newton)
        z = z - w
    if not converged:
        raise RootFindingError(f"root finder did not converge within {_MAX_SWEEPS} sweeps for {p}")

    pz = np.polyval(c, z)
    dpz = np.polyval(dc, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        disp = n * np.abs(pz) / np.abs(dpz)
    disp = np.where(np.abs(pz) == 0.0, 0.0, disp)
    if not np.all(np.isfinite(disp)):
        raise RootFindingError(f"stationary point hit while bounding root error for {p}")
    err = max(float(np.max(disp)), 8.0 * np.finfo(np.float64).eps * scale)

    mags = np.abs(z)
    order = np.lexsort((z.imag, z.real, -mags))
    z = z[order]
    mags = mags[order]
    leading = None
    if mags[0] - mags[1] > 2.0 * err and abs(z[0].imag) <= err:
        leading = 0
    return RootProfile(tuple(complex(w) for w in z), tuple(float(m) for m in mags), err, leading)


def spectral_radius(p: IntPolynomial) -> float:
    """Maximum root modulus."""
    return find_roots(p).magnitudes[0]


def refine_roots_mp(p: IntPolynomial, dps: int = 60):
    """High-precision refinement pass; returns (roots, magnitudes, error).

    Repeated roots would stall the simultaneous iteration, so the square-free
    part is refined instead and each root is repeated according to its exact
    multiplicity (read off the gcd chain), keeping degree-many entries.  The
    returned values are mpmath numbers so comparisons against rational bounds
    stay meaningful at the refined scale.
    """
    from .poly import gcd_chain, squarefree_part

    sf = squarefree_part(p)
    chain = gcd_chain(p) if sf.degree != p.degree else []
    with mpmath.workdps(dps):
        try:
            rts, err = mpmath.polyroots(
                [mpmath.mpf(c) for c in sf.coeffs], maxsteps=300, extraprec=2 * dps, error=True
            )
        except mpmath.libmp.NoConvergence as exc:
            raise RootFindingError(f"high-precision refinement failed for {p}") from exc
        rts = [mpmath.mpc(r) for r in rts]
        err = mpmath.mpf(err) + mpmath.mpf(10) ** (-(dps - 5))
        if chain:
            tiny = mpmath.mpf(10) ** (-(dps // 2))
            out = []
            for z in rts:
                mult = 1
                for g in chain:
                    scale = sum(abs(mpmath.mpf(c)) * max(1, abs(z)) ** (g.degree - i)
                                for i, c in enumerate(g.coeffs))
                    if abs(g(z)) <= tiny * scale:
                        mult += 1
                    else:
                        break
                out.extend([z] * mult)
            if len(out) != p.degree:
                raise RootFindingError(f"multiplicity accounting failed for {p}")
            rts = out
        mags = [abs(r) for r in rts]
    return rts, mags, err


@dataclass(frozen=True)
class RoucheCertificate:
    """Evaluation of the three dominance inequalities for p at radius R.

    ``scaled_point`` is (a_0/R^n, ..., a_{n-1}/R).  ``verified_root_pattern``
    can be true only when all three inequalities hold, and then asserts the
    pattern they guarantee: exactly one root with modulus in (R/2, R], real,
    with every other root below R/3 in modulus.
    """

    scaled_point: tuple[float, ...]
    ineq1_holds: bool
    ineq2_holds: bool
    ineq3_holds: bool
    verified_root_pattern: bool


def _dominance_inequalities(p: IntPolynomial, radius: Fraction) -> tuple[bool, bool, bool]:
    """Exact rational evaluation of the three coefficient inequalities."""
    n = p.degree
    t = [Fraction(abs(p.coeffs[n - k])) / radius ** (n - k) for k in range(n)]
    ineq1 = sum(t) < 1
    out = [ineq1]
    for base in (Fraction(1, 2), Fraction(1, 3)):
        lhs = base ** (n - 1) * t[n - 1]
        rhs = sum(t[k] * base**k for k in range(n - 1)) + base**n
        out.append(lhs > rhs)
    return out[0], out[1], out[2]


def _pattern_counts(mags, err, radius):
    """(#roots in (R/2, R], #roots < R/3, decided) with margin err around the walls."""
    mid = 0
    small = 0
    for m in mags:
        for wall in (radius, radius / 2, radius / 3):
            if abs(m - wall) <= 2 * err:
                return 0, 0, False
        if radius / 2 < m <= radius:
            mid += 1
        elif m < radius / 3:
            small += 1
    return mid, small, True


def rouche_certificate(p: IntPolynomial, R: float) -> RoucheCertificate:
    """Evaluate the dominance inequalities and, when they all hold, verify the
    root pattern they promise."""
    if p.degree < 2:
        raise ValueError("certificate needs degree >= 2")
    if not p.is_monic:
        raise ValueError("certificate needs monic input")
    F = Fraction(R)
    if F <= 0:
        raise ValueError("radius must be positive")
    n = p.degree
    i1, i2, i3 = _dominance_inequalities(p, F)
    scaled = tuple(float(Fraction(p.coeffs[n - k]) / F ** (n - k)) for k in range(n))

    verified = False
    if i1 and i2 and i3:
        prof = find_roots(p)
        rf = float(F)
        mid, small, decided = _pattern_counts(prof.magnitudes, prof.error_bound, rf)
        real_ok = decided and mid == 1 and abs(prof.roots[0].imag) <= prof.error_bound
        if not decided:
            # a modulus sat inside a wall margin: the strict inequalities forbid
            # roots exactly on the circles, so higher precision always decides
            for dps in _MP_DPS_LADDER:
                rts, mags, err = refine_roots_mp(p, dps)
                with mpmath.workdps(dps):
                    mid, small, decided = _pattern_counts(mags, err, mpmath.mpf(F.numerator) / F.denominator)
                    if decided:
                        big = max(range(len(mags)), key=lambda i: mags[i])
                        real_ok = mid == 1 and abs(rts[big].imag) <= err
                        break
        verified = bool(decided and mid == 1 and small == n - 1 and real_ok)
    return RoucheCertificate(scaled, i1, i2, i3, verified)
