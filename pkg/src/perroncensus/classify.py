"""Membership predicates: Perron polynomial, Perron number, bi-Perron unit,
plus exact integer irreducibility and factoring.

Boundary protocol: every verdict that hinges on comparing a root modulus with
a wall (the radius R, the lambda > 1 cut, the dominance gap, the annulus
walls) is first decided in floating point with a certified margin.  Cases
inside the margin escalate: exact integer tests (rational boundary roots,
integer root multiplicities, plus/minus pairing, complex pairs of exactly
boundary modulus) and then high-precision refinement.  Whatever survives all
of that is reported as ambiguous, never silently counted either way.

The annulus of a bi-Perron unit is read as closed on both walls, so Salem
configurations (conjugates on the unit circle, reciprocal root exactly on the
inner wall) qualify.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .poly import (
    IntPolynomial,
    X,
    divmod_monic,
    is_palindromic,
    negate_variable,
    rational_gcd,
)
from .roots import find_roots, refine_roots_mp

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13)
_MP_LADDER = (60, 200)
DEFAULT_FACTOR_BUDGET = 5_000_000  # trial divisions before refusing to decide

_TRUE, _FALSE, _OPEN = True, False, None


class UndecidedIrreducibilityError(RuntimeError):
    """Exact factor search would exceed its budget; no guess is returned."""


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus the ambiguity flag demanded by boundary cases."""

    value: bool
    ambiguous: bool = False
    note: str = ""

    def __bool__(self) -> bool:
        return self.value


@dataclass(frozen=True)
class Classification:
    """Full verdict bundle for one polynomial at one radius."""

    within_radius: bool
    is_perron_poly: bool
    is_perron_number: bool
    is_bi_perron_unit: bool
    is_unit: bool
    is_irreducible: bool
    leading_root: float | None
    ambiguous: bool
    notes: tuple[str, ...] = ()

    def to_json_dict(self) -> dict:
        return {
            "within_radius": self.within_radius,
            "is_perron_poly": self.is_perron_poly,
            "is_perron_number": self.is_perron_number,
            "is_bi_perron_unit": self.is_bi_perron_unit,
            "is_unit": self.is_unit,
            "is_irreducible": self.is_irreducible,
            "leading_root": self.leading_root,
            "ambiguous": self.ambiguous,
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------------------
# integer helpers


def _signed_divisors(n: int) -> list[int]:
    """Divisors of |n| in deterministic order 1, -1, 2, -2, ..."""
    n = abs(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    out = []
    for d in small + large[::-1]:
        out.extend((d, -d))
    return out


def _integer_roots(p: IntPolynomial) -> tuple[list[tuple[int, int]], IntPolynomial]:
    """All integer roots with multiplicity, and the stripped remainder."""
    work = p
    found: dict[int, int] = {}
    while work.degree >= 1 and work.constant == 0:
        found[0] = found.get(0, 0) + 1
        work = divmod_monic(work, X)[0]
    progress = True
    while progress and work.degree >= 1:
        progress = False
        for r in _signed_divisors(work.constant):
            if work(r) == 0:
                found[r] = found.get(r, 0) + 1
                work = divmod_monic(work, IntPolynomial((1, -r)))[0]
                progress = True
                break
    return sorted(found.items()), work


def _rational_gcd_roots(p: IntPolynomial, q: IntPolynomial) -> tuple[int, np.ndarray]:
    """Degree and float roots of gcd(p, q) over the rationals."""
    g = rational_gcd(p, q)
    if g.degree == 0:
        return 0, np.array([])
    return g.degree, np.roots(np.array(g.coeffs, dtype=np.float64))


def _even_part(p: IntPolynomial) -> IntPolynomial | None:
    """g with p(x) = g(x^2), or None when p is not even."""
    if p.degree % 2 != 0 or any(p.coeffs[i] for i in range(1, len(p.coeffs), 2)):
        return None
    return IntPolynomial(p.coeffs[::2])


def _certified_reals(rts, mags, err) -> list:
    """Real parts of roots certified real: imaginary part within err and no
    other computed root nearby (a complex root would carry its conjugate)."""
    out = []
    for i, z in enumerate(rts):
        if abs(z.imag) > err:
            continue
        isolated = all(abs(z - w) > 6 * err for j, w in enumerate(rts) if j != i)
        if isolated:
            out.append(z.real)
    return out


# ---------------------------------------------------------------------------
# exact irreducibility and factoring


def _gf_trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _gf_mulmod(a: list[int], b: list[int], f: list[int], q: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % q
    df = len(f) - 1
    for i in range(len(out) - 1, df - 1, -1):
        c = out[i]
        if c:
            for j in range(df + 1):
                out[i - df + j] = (out[i - df + j] - c * f[j]) % q
    return _gf_trim(out[:df] if len(out) > df else out)


def _gf_powmod(a: list[int], e: int, f: list[int], q: int) -> list[int]:
    result = [1]
    base = list(a)
    while e:
        if e & 1:
            result = _gf_mulmod(result, base, f, q)
        base = _gf_mulmod(base, base, f, q)
        e >>= 1
    return result


def _gf_gcd(a: list[int], b: list[int], q: int) -> list[int]:
    a, b = _gf_trim(list(a)), _gf_trim(list(b))
    while b != [0]:
        inv = pow(b[-1], -1, q)
        bm = [(c * inv) % q for c in b]
        r = list(a)
        while r != [0] and len(r) >= len(bm):
            c = r[-1]
            shift = len(r) - len(bm)
            for j in range(len(bm)):
                r[shift + j] = (r[shift + j] - c * bm[j]) % q
            r = _gf_trim(r[:-1] if len(r) > 1 else [0])
        a, b = bm, r
    if a == [0]:
        return [0]
    inv = pow(a[-1], -1, q)
    return [(c * inv) % q for c in a]


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _is_irreducible_mod(p: IntPolynomial, q: int) -> bool:
    """Rabin's criterion over GF(q); True certifies irreducibility over Z."""
    f = [c % q for c in reversed(p.coeffs)]
    n = len(f) - 1
    if n == 1:
        return True
    chain = {}
    h = [0, 1]
    for k in range(1, n + 1):
        h = _gf_powmod(h, q, f, q)
        chain[k] = list(h)

    def minus_x(g: list[int]) -> list[int]:
        g = list(g) + [0] * max(0, 2 - len(g))
        g[1] = (g[1] - 1) % q
        return _gf_trim(g)

    if minus_x(chain[n]) != [0]:
        return False
    for r in _prime_divisors(n):
        if len(_gf_gcd(minus_x(chain[n // r]), f, q)) > 1:
            return False
    return True


def _quartic_quadratic_split(p: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial] | None:
    """Factor a monic quartic with no rational roots into two monic quadratics,
    if possible.  Complete: any such factorization is 2+2."""
    _, a, b, c, d = p.coeffs
    for v in _signed_divisors(d):
        z = d // v
        prod = b - v - z
        disc = a * a - 4 * prod
        if disc < 0:
            continue
        k = math.isqrt(disc)
        if k * k != disc:
            continue
        for u2 in (a + k, a - k):
            if u2 % 2:
                continue
            u = u2 // 2
            w = a - u
            if u * z + w * v == c:
                return IntPolynomial((1, u, v)), IntPolynomial((1, w, z))
    return None


def _search_divisor(p: IntPolynomial, budget: int) -> IntPolynomial | None:
    """Smallest-degree monic integer divisor by bounded exhaustive search.

    Candidate coefficients obey |b_j| <= C(d, j) * rho^j with rho an upper
    bound on the parent's root moduli, and the constant term divides p's.
    """
    prof = find_roots(p)
    rho = prof.magnitudes[0] + prof.error_bound
    spent = 0
    n = p.degree
    for d in range(2, n // 2 + 1):
        ranges = [int(math.floor(math.comb(d, j) * rho**j)) + 1 for j in range(1, d)]
        consts = [v for v in _signed_divisors(p.constant) if abs(v) <= math.floor(rho**d) + 1]
        cost = len(consts)
        for b in ranges:
            cost *= 2 * b + 1
        spent += cost
        if spent > budget:
            raise UndecidedIrreducibilityError(
                f"exact factor search for {p} needs about {spent:.2e} trial divisions, "
                f"over the budget of {budget:.2e}"
            )
        mids = [-b for b in ranges]
        while True:
            for c0 in consts:
                cand = IntPolynomial((1, *mids, c0))
                _, rem = divmod_monic(p, cand)
                if rem is None:
                    return cand
            i = len(mids) - 1
            while i >= 0:
                mids[i] += 1
                if mids[i] <= ranges[i]:
                    break
                mids[i] = -ranges[i]
                i -= 1
            else:
                break
    return None


def is_irreducible(p: IntPolynomial, budget: int = DEFAULT_FACTOR_BUDGET) -> bool:
    """Exact irreducibility over the integers (monic input).

    Degrees up to 4 are fully handled by rational-root elimination and the
    quadratic-pair solve; higher degrees get a mod-q certificate first and a
    budgeted exhaustive divisor search after, raising
    :class:`UndecidedIrreducibilityError` rather than guessing.
    """
    if not p.is_monic:
        raise ValueError("irreducibility test defined for monic input")
    n = p.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    if n == 1:
        return True
    if p.constant == 0:
        return False
    if any(p(r) == 0 for r in _signed_divisors(p.constant)):
        return False
    if n <= 3:
        return True
    if n == 4:
        return _quartic_quadratic_split(p) is None
    for q in _SMALL_PRIMES:
        if _is_irreducible_mod(p, q):
            return True
    return _search_divisor(p, budget) is None


def _factor_nonlinear(p: IntPolynomial, budget: int) -> list[IntPolynomial]:
    # monic, no rational roots
    if p.degree <= 3:
        return [p]
    if p.degree == 4:
        sp = _quartic_quadratic_split(p)
        return [p] if sp is None else list(sp)
    for q in _SMALL_PRIMES:
        if _is_irreducible_mod(p, q):
            return [p]
    d = _search_divisor(p, budget)
    if d is None:
        return [p]
    quot = divmod_monic(p, d)[0]
    return [d] + _factor_nonlinear(quot, budget)


def factor_monic(p: IntPolynomial, budget: int = DEFAULT_FACTOR_BUDGET) -> list[IntPolynomial]:
    """Complete factorization into monic irreducible integer factors.

    The product of the returned factors reproduces the input exactly; the
    list is sorted by (degree, coefficients) and repeats factors according to
    multiplicity.
    """
    if not p.is_monic:
        raise ValueError("factorization defined for monic input")
    if p.degree == 0:
        return []
    factors: list[IntPolynomial] = []
    roots, rest = _integer_roots(p)
    for r, mult in roots:
        factors.extend([IntPolynomial((1, -r))] * mult)
    if rest.degree >= 1:
        factors.extend(_factor_nonlinear(rest, budget))
    return sorted(factors, key=lambda f: (f.degree, f.coeffs))


# ---------------------------------------------------------------------------
# boundary-aware comparisons


def _strip_boundary_roots(p: IntPolynomial, B: Fraction) -> IntPolynomial:
    """Divide out every root of modulus exactly B that has an exact
    certificate: integer roots +-B and complex pairs x^2 - t*x + B^2."""
    work = p
    if B.denominator == 1:
        b = B.numerator
        for r in (b, -b):
            while work.degree >= 1 and work(r) == 0:
                work = divmod_monic(work, IntPolynomial((1, -r)))[0]
    m2 = B * B
    if m2.denominator == 1 and m2 >= 1 and work.degree >= 2:
        m2i = m2.numerator
        tmax = math.isqrt(4 * m2i - 1)
        for t in range(-tmax, tmax + 1):
            cand = IntPolynomial((1, -t, m2i))
            while work.degree >= 2:
                quot, rem = divmod_monic(work, cand)
                if rem is None:
                    work = quot
                else:
                    break
    return work


def _max_mag_le(p: IntPolynomial, B: Fraction) -> bool | None:
    """Tri-state: is every root modulus <= B (closed)?"""
    if p.degree < 1:
        return _TRUE
    prof = find_roots(p)
    bf = float(B)
    slack = prof.error_bound + 1e-12 * max(1.0, bf)
    mx = prof.magnitudes[0]
    if mx <= bf - slack:
        return _TRUE
    if mx > bf + slack:
        return _FALSE
    work = _strip_boundary_roots(p, B)
    if work.degree == 0:
        return _TRUE
    for dps in _MP_LADDER:
        _, mags, err = refine_roots_mp(work, dps)
        with mpmath.workdps(dps):
            bmp = mpmath.mpf(B.numerator) / B.denominator
            mx = max(mags)
            if mx <= bmp - 2 * err:
                return _TRUE
            if mx > bmp + 2 * err:
                return _FALSE
    return _OPEN


@dataclass(frozen=True)
class _Dominance:
    state: bool | None  # True: certified dominant real simple root exists
    lam: float | None
    note: str = ""


def _dominant_real(p: IntPolynomial) -> _Dominance:
    """Certify (or refute) a simple real root strictly dominating in modulus.

    A certified complex top root refutes immediately (its conjugate shares the
    modulus); exact certificates cover integer-root ties, repeated integer
    roots, plus/minus pairs and complex pairs of exactly integer-square
    modulus.  Residual near-ties escalate and finally report unresolved.
    """
    if p.degree == 1:
        return _Dominance(_TRUE, float(-p.coeffs[1]))
    if _even_part(p) is not None:
        return _Dominance(_FALSE, None, "roots come in +- pairs")
    prof = find_roots(p)
    if prof.leading_root_index is not None:
        return _Dominance(_TRUE, prof.leading_root)
    err = prof.error_bound
    if prof.magnitudes[0] - prof.magnitudes[1] > 2 * err and abs(prof.roots[0].imag) > err:
        return _Dominance(_FALSE, None, "max-modulus root is complex")

    int_roots, rest = _integer_roots(p)
    gcd_deg, gcd_roots = _rational_gcd_roots(p, negate_variable(p))
    for dps in _MP_LADDER:
        # entries: (modulus, certified_real, value, multiplicity, exact?)
        entries = [(abs(mpmath.mpf(r)), True, mpmath.mpf(r), mult, True) for r, mult in int_roots]
        err = mpmath.mpf(0)
        if rest.degree >= 1:
            rts, mags, err = refine_roots_mp(rest, dps)
            counts: dict = {}
            for z in rts:
                counts[z] = counts.get(z, 0) + 1
            entries += [(abs(z), abs(z.imag) <= err, z, mult, False) for z, mult in counts.items()]
        entries.sort(key=lambda e: -e[0])
        m0 = entries[0][0]
        cluster = [e for e in entries if m0 - e[0] <= 2 * err]
        if len(cluster) == 1:
            mag, is_real, val, mult, exact = cluster[0]
            if not is_real:
                return _Dominance(_FALSE, None, "max-modulus root is complex")
            if mult > 1:
                return _Dominance(_FALSE, None, "dominant root is repeated")
            return _Dominance(_TRUE, float(val if exact else val.real))
        if all(not e[1] for e in cluster):
            return _Dominance(_FALSE, None, "max-modulus root is complex")
        for mag, is_real, val, mult, exact in cluster:
            if not exact:
                continue
            r = int(val)
            if mult > 1:
                return _Dominance(_FALSE, None, "dominant root is repeated")
            if any(r2 == -r for r2, _ in int_roots):
                return _Dominance(_FALSE, None, "max-modulus root tied with its negation")
            if rest.degree >= 2:
                # a complex pair of modulus exactly |r| divides off as x^2 - tx + r^2
                for t in range(-(2 * abs(r) - 1), 2 * abs(r)):
                    if divmod_monic(rest, IntPolynomial((1, -t, r * r)))[1] is None:
                        return _Dominance(_FALSE, None, "complex pair shares the max modulus exactly")
        if gcd_deg >= 1 and any(abs(abs(z) - float(m0)) <= max(float(4 * err), 1e-9) for z in gcd_roots):
            return _Dominance(_FALSE, None, "max-modulus root tied with its negation")
        if p.degree == 3 and p.constant != 0:
            # cubic radical tie: the top modulus equals |c|^(1/3) exactly iff the
            # whole root triple sits on that circle (the product of moduli is |c|)
            c = abs(p.constant)
            for sgn in (-c, c):
                g = rational_gcd(p, IntPolynomial((1, 0, 0, sgn)))
                if g.degree >= 1 and abs(m0 - mpmath.mpf(c) ** Fraction(1, 3)) <= 8 * err + mpmath.mpf("1e-12"):
                    return _Dominance(_FALSE, None, "all top roots share modulus exactly")
    return _Dominance(_OPEN, None, "dominance unresolved near the top modulus")


def _real_root_vs_bound(p: IntPolynomial, kind: str, B: Fraction, mode: str) -> bool | None:
    """Compare a selected real root against a rational bound.

    kind: 'dominant' (the certified max-modulus real root) or 'max_real'.
    mode: 'gt' means root > B (strict), 'le' means root <= B (closed).
    """
    prof = find_roots(p)
    err = prof.error_bound
    if kind == "dominant":
        lam = prof.roots[0].real
    else:
        reals = _certified_reals(prof.roots, prof.magnitudes, err)
        lam = max(reals) if reals else None
    bf = float(B)
    slack = err + 1e-12 * max(1.0, abs(bf))
    if lam is not None:
        if mode == "gt":
            if lam > bf + slack:
                return _TRUE
            if lam <= bf - slack and kind == "dominant":
                return _FALSE
        else:
            if lam <= bf - slack:
                return _TRUE
            if lam > bf + slack:
                return _FALSE
        if abs(lam - bf) <= slack and p(B) == 0:
            # the selected root sits exactly on the bound (for 'dominant' the
            # root near B is unique; for 'max_real' equality still decides 'le')
            if mode == "le":
                return _TRUE
            if kind == "dominant":
                return _FALSE
    for dps in _MP_LADDER:
        rts, mags, err = refine_roots_mp(p, dps)
        with mpmath.workdps(dps):
            bmp = mpmath.mpf(B.numerator) / B.denominator
            if kind == "dominant":
                lam_mp = max(rts, key=lambda z: abs(z)).real
            else:
                cand = _certified_reals(rts, mags, err)
                if not cand:
                    continue
                lam_mp = max(cand)
            if mode == "gt":
                if lam_mp > bmp + 2 * err:
                    return _TRUE
                if lam_mp <= bmp - 2 * err:
                    return _FALSE
            else:
                if lam_mp <= bmp - 2 * err:
                    return _TRUE
                if lam_mp > bmp + 2 * err:
                    return _FALSE
            if p(B) == 0 and abs(lam_mp - bmp) <= 2 * err:
                return _TRUE if mode == "le" else _FALSE
    # 'max_real' with no certified real root anywhere: there is none above B
    if kind == "max_real":
        return _FALSE if mode == "gt" else _TRUE
    return _OPEN


# ---------------------------------------------------------------------------
# degree <= 2 exact verdicts


def _within_exact_low(p: IntPolynomial, F: Fraction) -> bool:
    if p.degree == 1:
        return abs(p.coeffs[1]) <= F
    b, c = p.coeffs[1], p.coeffs[2]
    disc = b * b - 4 * c
    if disc < 0:
        return Fraction(c) <= F * F  # conjugate pair has |z|^2 = c
    if abs(b) > 2 * F:
        return False
    if disc == 0:
        return True
    return F * F + b * F + c >= 0 and F * F - b * F + c >= 0


def _perron_exact_low(p: IntPolynomial, F: Fraction) -> Verdict:
    if p.degree == 1:
        lam = -p.coeffs[1]
        ok = lam > 1 and Fraction(lam) <= F
        return Verdict(ok, note="" if ok else "root not in (1, R]")
    b, c = p.coeffs[1], p.coeffs[2]
    disc = b * b - 4 * c
    if disc <= 0:
        return Verdict(False, note="no simple real dominant root")
    if b >= 0:
        return Verdict(False, note="max-modulus root is not the positive one")
    gt1 = (b <= -2) or disc > (b + 2) ** 2
    G = 2 * F + b
    le_r = G >= 0 and disc <= G * G
    if gt1 and le_r:
        return Verdict(True)
    return Verdict(False, note="leading root not in (1, R]")


def _bi_perron_exact_quadratic(p: IntPolynomial, F: Fraction) -> Verdict:
    b, c = p.coeffs[1], p.coeffs[2]
    if c == -1:
        # moduli multiply to 1, so the annulus condition is automatic
        if b >= 0:
            return Verdict(False, note="no real root above 1")
        G = 2 * F + b
        ok = G >= 0 and b * b + 4 <= G * G
        return Verdict(ok, note="" if ok else "leading root exceeds R")
    # c == +1: palindromic; real pair iff |b| >= 3, lambda > 1 iff b <= -3
    if b > -3:
        return Verdict(False, note="no real root above 1")
    G = 2 * F + b
    ok = G >= 0 and b * b - 4 <= G * G
    return Verdict(ok, note="" if ok else "leading root exceeds R")


def _leading_root_low(p: IntPolynomial) -> float | None:
    if p.degree == 1:
        return float(-p.coeffs[1])
    b, c = p.coeffs[1], p.coeffs[2]
    disc = b * b - 4 * c
    if disc <= 0 or b == 0:
        return None
    root = math.sqrt(disc)
    return (-b + root) / 2.0 if b < 0 else (-b - root) / 2.0


# ---------------------------------------------------------------------------
# public predicates


def _perron_from_parts(dom: _Dominance, gt1: bool | None, within: bool | None) -> Verdict:
    if dom.state is _FALSE:
        return Verdict(False, note=dom.note)
    if gt1 is _FALSE:
        return Verdict(False, note="leading root not above 1")
    if within is _FALSE:
        return Verdict(False, note="root modulus exceeds radius")
    if dom.state is _TRUE and gt1 is _TRUE and within is _TRUE:
        return Verdict(True)
    notes = [s for s in (
        dom.note if dom.state is _OPEN else "",
        "boundary at 1 unresolved" if gt1 is _OPEN else "",
        "boundary at R unresolved" if within is _OPEN else "",
    ) if s]
    return Verdict(False, ambiguous=True, note="; ".join(notes))


def is_perron_poly(p: IntPolynomial, R: float) -> Verdict:
    """Does p have a simple real root lambda > 1 strictly dominating every
    other root in modulus, with every root modulus <= R?  Irreducibility is
    deliberately not required."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("Perron test needs a monic polynomial of degree >= 1")
    F = Fraction(R)
    if F <= 0:
        raise ValueError("radius must be positive")
    if p.degree <= 2:
        return _perron_exact_low(p, F)
    dom = _dominant_real(p)
    if dom.state is _FALSE:
        return Verdict(False, note=dom.note)
    gt1 = _real_root_vs_bound(p, "dominant", Fraction(1), "gt") if dom.state is _TRUE else _OPEN
    if gt1 is _FALSE:
        return Verdict(False, note="leading root not above 1")
    within = _max_mag_le(p, F)
    return _perron_from_parts(dom, gt1, within)


def _annulus_verdict(p: IntPolynomial, F: Fraction) -> Verdict:
    """All conjugates inside the closed annulus [1/lambda, lambda] with
    1 < lambda <= R, for monic irreducible unit p."""
    if p.degree == 1:
        return Verdict(False, note="root is +-1, not above 1")
    if p.degree == 2:
        return _bi_perron_exact_quadratic(p, F)
    g = _even_part(p)
    if g is not None:
        # p(x) = g(x^2): moduli take square roots, so test g against R^2
        return _annulus_verdict(g, F * F)

    gt1 = _real_root_vs_bound(p, "max_real", Fraction(1), "gt")
    if gt1 is _FALSE:
        return Verdict(False, note="no real root above 1")
    le_r = _real_root_vs_bound(p, "max_real", F, "le")
    if le_r is _FALSE:
        return Verdict(False, note="leading root exceeds R")
    if gt1 is _OPEN or le_r is _OPEN:
        return Verdict(False, ambiguous=True, note="leading-root boundary unresolved")

    palin = is_palindromic(p)
    gcd_deg, gcd_roots = _rational_gcd_roots(p, negate_variable(p))
    for stage in range(1 + len(_MP_LADDER)):
        if stage == 0:
            prof = find_roots(p)
            rts, mags, err = list(prof.roots), list(prof.magnitudes), prof.error_bound
        else:
            rts, mags, err = refine_roots_mp(p, _MP_LADDER[stage - 1])
        reals = _certified_reals(rts, mags, err)
        above = [x for x in reals if x > 1]
        if not above:
            continue  # leading root not pinned at this precision yet
        lam = max(above)
        inner = 1 / lam
        unresolved = False
        for z, m in zip(rts, mags):
            if m > lam + 2 * err:
                return Verdict(False, note="conjugate outside the outer wall")
            if m < inner - 4 * err:
                return Verdict(False, note="conjugate inside the inner wall")
            is_lam = abs(z.real - lam) <= 2 * err and abs(z.imag) <= err
            if not is_lam and abs(m - lam) <= 2 * err:
                # tie at the outer wall is fine only when exactly on it
                if gcd_deg >= 1 and any(abs(abs(w) - float(m)) <= max(float(4 * err), 1e-9) for w in gcd_roots):
                    continue  # paired with its negation: modulus exactly lambda
                unresolved = True
            elif abs(m - inner) <= 4 * err:
                if palin:
                    continue  # inversion pairing puts it exactly on the inner wall
                unresolved = True
        if not unresolved:
            return Verdict(True)
    return Verdict(False, ambiguous=True, note="annulus wall unresolved")


def is_bi_perron_unit(p: IntPolynomial, R: float) -> Verdict:
    """Is the leading root of the (irreducible, unit) minimal polynomial p a
    bi-Perron algebraic unit no larger than R?

    Reducible input is rejected: factor first and pass the minimal polynomial.
    """
    if not p.is_monic or p.degree < 1:
        raise ValueError("bi-Perron test needs a monic polynomial of degree >= 1")
    F = Fraction(R)
    if F <= 0:
        raise ValueError("radius must be positive")
    if not is_irreducible(p):
        raise ValueError(f"reducible input, factor first: {p}")
    if abs(p.constant) != 1:
        return Verdict(False, note=f"constant term {p.constant} is not +-1, not a unit")
    return _annulus_verdict(p, F)


def classify(p: IntPolynomial, R: float, budget: int = DEFAULT_FACTOR_BUDGET) -> Classification:
    """Full verdict bundle; ambiguity in any component is surfaced in notes."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("classification needs a monic polynomial of degree >= 1")
    F = Fraction(R)
    if F <= 0:
        raise ValueError("radius must be positive")
    unit = abs(p.constant) == 1
    irr = is_irreducible(p, budget)

    if p.degree <= 2:
        within_v = Verdict(_within_exact_low(p, F))
        perron_v = _perron_exact_low(p, F)
        lam = _leading_root_low(p)
    else:
        dom = _dominant_real(p)
        gt1 = _real_root_vs_bound(p, "dominant", Fraction(1), "gt") if dom.state is _TRUE else _OPEN
        w = _max_mag_le(p, F)
        within_v = Verdict(bool(w), ambiguous=w is _OPEN,
                           note="boundary at R unresolved" if w is _OPEN else "")
        perron_v = _perron_from_parts(dom, gt1, w)
        lam = dom.lam if dom.state is _TRUE else None

    if unit and irr:
        bp_v = _annulus_verdict(p, F)
    elif not unit:
        bp_v = Verdict(False, note="not a unit")
    else:
        bp_v = Verdict(False, note="reducible, not a minimal polynomial")

    notes = tuple(v.note for v in (within_v, perron_v, bp_v) if v.note)
    ambiguous = within_v.ambiguous or perron_v.ambiguous or bp_v.ambiguous
    return Classification(
        within_radius=within_v.value,
        is_perron_poly=perron_v.value,
        is_perron_number=perron_v.value and irr,
        is_bi_perron_unit=bp_v.value,
        is_unit=unit,
        is_irreducible=irr,
        leading_root=lam,
        ambiguous=ambiguous,
        notes=notes,
    )
