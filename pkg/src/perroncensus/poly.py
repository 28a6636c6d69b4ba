"""Exact integer polynomial arithmetic and palindromic transforms.

Polynomials are dense integer coefficient vectors, leading coefficient first:
``IntPolynomial((1, -3, 1))`` is x^2 - 3x + 1.  The census and the classifiers
only ever construct monic polynomials; non-monic values appear as transient
intermediates inside factoring.

The same comma-separated, leading-first format is used on the wire: CLI
arguments, CSV cells and JSON arrays all spell x^2 - 3x + 1 as ``"1,-3,1"``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, leading coefficient first.

    >>> p = IntPolynomial.parse("1,-3,1")
    >>> p.degree, p(3)
    (2, 1)
    >>> str(p)
    '1,-3,1'
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.coeffs)
        if not cs:
            raise ValueError("empty coefficient vector")
        if cs[0] == 0:
            # degree must equal len(coeffs) - 1; a zero lead would silently drop it
            raise ValueError("leading coefficient must be nonzero")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def parse(cls, text: str) -> "IntPolynomial":
        """Parse the comma-separated wire format, e.g. ``"1,-3,1"``."""
        try:
            return cls(tuple(int(tok.strip()) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad polynomial string {text!r}: {exc}") from None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    @property
    def constant(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0 * x + self.coeffs[0]
        for c in self.coeffs[1:]:
            acc = acc * x + c
        return acc

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return multiply(self, other)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)


X = IntPolynomial((1, 0))


@dataclass(frozen=True)
class TraceLiftPair:
    """A base polynomial q(y) together with its lift x^m q(x + 1/x).

    The lift is monic and palindromic of degree 2m, and each of its roots x
    satisfies: x + 1/x is a root of the base.
    """

    base: IntPolynomial
    lifted: IntPolynomial


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Exact coefficient convolution; degrees add."""
    out = [0] * (p.degree + q.degree + 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return IntPolynomial(tuple(out))


def divmod_monic(p: IntPolynomial, d: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial | None]:
    """Exact division by a monic divisor: p = q*d + r with deg r < deg d.

    Returns (q, r); r is None when the remainder is identically zero.
    """
    if not d.is_monic:
        raise ValueError("divisor must be monic")
    if d.degree > p.degree:
        raise ValueError("divisor degree exceeds dividend degree")
    rem = list(p.coeffs)
    n, m = p.degree, d.degree
    quot = [0] * (n - m + 1)
    for i in range(n - m + 1):
        c = rem[i]
        quot[i] = c
        if c:
            for j in range(1, m + 1):
                rem[i + j] -= c * d.coeffs[j]
    tail = rem[n - m + 1:]
    if any(tail):
        # normalize the remainder: strip leading zeros, keep at least one entry
        k = 0
        while k < len(tail) - 1 and tail[k] == 0:
            k += 1
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(tail[k:]))
    return IntPolynomial(tuple(quot)), None


def is_palindromic(p: IntPolynomial) -> bool:
    """True iff the coefficient vector reads the same in both directions.

    >>> is_palindromic(IntPolynomial((1, 0, -3, 0, 1)))
    True
    >>> is_palindromic(IntPolynomial((1, -1, -1)))
    False
    """
    if not p.is_monic:
        raise ValueError("palindromicity is defined here for monic input")
    return p.coeffs == p.coeffs[::-1]


def reciprocal(p: IntPolynomial) -> IntPolynomial:
    """x^deg(p) * p(1/x), sign-normalized back to a monic polynomial.

    The reversal is monic only when the constant term is +-1 (the reversed
    lead is the old constant), so inputs whose constant term is not a unit
    are rejected; a zero constant term has no degree-preserving reciprocal
    at all.
    """
    c0 = p.constant
    if c0 == 0:
        raise ValueError(f"reciprocal undefined for zero constant term: {p}")
    rev = p.coeffs[::-1]
    if rev[0] == 1:
        return IntPolynomial(rev)
    if rev[0] == -1:
        return IntPolynomial(tuple(-c for c in rev))
    raise ValueError(f"constant term {c0} is not a unit; reversal cannot be made monic: {p}")


def negate_variable(p: IntPolynomial) -> IntPolynomial:
    """The alternating-sign transform (-1)^n p(-x); roots are negated, monic stays monic."""
    return IntPolynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(p.coeffs)))


def trace_lift(q: IntPolynomial) -> TraceLiftPair:
    """Lift q(y) of degree m to the palindromic x^m q(x + 1/x) of degree 2m.

    Expansion is exact integer arithmetic: x^m (x + 1/x)^k contributes
    binomial(k, j) to the coefficient of x^(m+k-2j).  Each root y of q pulls
    back to the two roots of x^2 - yx + 1, which multiply to 1, so the lift's
    root multiset is closed under z -> 1/z.

    >>> trace_lift(IntPolynomial((1, -3))).lifted
    IntPolynomial(coeffs=(1, -3, 1))
    """
    if not q.is_monic:
        raise ValueError("trace lift requires a monic base")
    m = q.degree
    if m < 1:
        raise ValueError("trace lift requires degree >= 1")
    out = [0] * (2 * m + 1)
    for i, qc in enumerate(q.coeffs):
        if qc == 0:
            continue
        k = m - i  # power of y carried by this coefficient
        for j in range(k + 1):
            out[m - k + 2 * j] += qc * comb(k, j)
    return TraceLiftPair(base=q, lifted=IntPolynomial(tuple(out)))


def inverse_trace_lift(p: IntPolynomial) -> IntPolynomial:
    """Invert :func:`trace_lift`: recover q with x^m q(x + 1/x) = p.

    Defined exactly for monic palindromic polynomials of even degree 2m; the
    change of coefficients is triangular with unit diagonal, so the inverse is
    integral whenever it exists.
    """
    if not is_palindromic(p) or p.degree % 2 != 0:
        raise ValueError(f"not a monic palindromic polynomial of even degree: {p}")
    m = p.degree // 2
    work = list(p.coeffs)
    q = [0] * (m + 1)
    for k in range(m, -1, -1):
        qk = work[m - k]  # remaining coefficient of x^(m+k)
        q[m - k] = qk
        if qk:
            for j in range(k + 1):
                work[m - k + 2 * j] -= qk * comb(k, j)
    if any(work):
        raise ValueError(f"polynomial is not a trace lift: {p}")
    return IntPolynomial(tuple(q))


def derivative(p: IntPolynomial) -> IntPolynomial:
    """Formal derivative; defined for degree >= 1."""
    n = p.degree
    if n < 1:
        raise ValueError("derivative of a constant is not representable here")
    return IntPolynomial(tuple(c * (n - i) for i, c in enumerate(p.coeffs[:-1])))


def _frac_trim(v: list[Fraction]) -> list[Fraction]:
    k = 0
    while k < len(v) - 1 and v[k] == 0:
        k += 1
    return v[k:]


def _frac_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    db = len(b) - 1
    if db == 0:
        return [Fraction(0)]  # nonzero constant divides everything
    r = list(a)
    while True:
        r = _frac_trim(r)
        if len(r) - 1 < db or (len(r) == 1 and r[0] == 0):
            return r
        c = r[0] / b[0]
        for j in range(1, db + 1):
            r[j] -= c * b[j]
        r.pop(0)


def rational_gcd(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    """Monic gcd over the rationals; integral by Gauss's lemma whenever one
    argument is monic integral (the use here).  Returns the constant 1 when
    coprime."""
    a = [Fraction(c) for c in p.coeffs]
    b = [Fraction(c) for c in q.coeffs]
    a, b = _frac_trim(a), _frac_trim(b)
    while not (len(b) == 1 and b[0] == 0):
        a, b = b, _frac_mod(a, b)
    monic = [c / a[0] for c in a]
    if any(c.denominator != 1 for c in monic):
        # can only happen for non-monic inputs; callers never rely on this case
        raise ValueError("gcd is not integral")
    return IntPolynomial(tuple(int(c) for c in monic))


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """p divided by gcd(p, p'): same root set, every root simple."""
    if p.degree <= 1:
        return p
    g = rational_gcd(p, derivative(p))
    if g.degree == 0:
        return p
    return divmod_monic(p, g)[0]


def gcd_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """[g1, g2, ...] with g1 = gcd(p, p'), g_{k+1} = gcd(g_k, g_k'); a root
    has multiplicity >= k+1 in p exactly when it is a root of g_k."""
    out = []
    work = p
    while work.degree >= 1:
        g = rational_gcd(work, derivative(work))
        if g.degree == 0:
            break
        out.append(g)
        work = g
    return out


def char_palindromic_poly(minpoly: IntPolynomial) -> IntPolynomial:
    """Lowest-degree monic palindromic polynomial sharing the leading root.

    For an irreducible input p this is p itself when palindromic and
    p * reciprocal(p) otherwise; nothing lower can work: a palindromic
    polynomial with the same root is divisible by p, its root set is closed
    under inversion so it is divisible by reciprocal(p) too, and the two are
    coprime unless p is palindromic (an irreducible p equal to minus its
    reversal would have 1 or -1 as a root).  Irreducibility itself is the
    caller's contract; only monicity and unit-ness are checked here.
    """
    if not minpoly.is_monic:
        raise ValueError("minimal polynomial must be monic")
    if abs(minpoly.constant) != 1:
        raise ValueError(f"constant term {minpoly.constant} is not +-1: {minpoly} is not a unit's minimal polynomial")
    if is_palindromic(minpoly):
        return minpoly
    return multiply(minpoly, reciprocal(minpoly))
