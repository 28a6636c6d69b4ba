import math
import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from perroncensus.poly import IntPolynomial, multiply, negate_variable
from perroncensus.roots import (
    RootFindingError,
    find_roots,
    refine_roots_mp,
    rouche_certificate,
    spectral_radius,
)

P = IntPolynomial
LEHMER = P((1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))


def test_golden_square_profile():
    prof = find_roots(P((1, -3, 1)))
    assert prof.leading_root_index == 0
    assert abs(prof.leading_root - (3 + math.sqrt(5)) / 2) < 1e-10
    assert abs(prof.magnitudes[1] - (3 - math.sqrt(5)) / 2) < 1e-10


def test_conjugate_pair_has_no_leading_root():
    prof = find_roots(P((1, 0, 1)))
    assert prof.leading_root_index is None
    assert sorted(round(z.imag) for z in prof.roots) == [-1, 1]


def _newton_refine(coeffs, z, steps=60):
    # independent high-precision polish from a companion-matrix seed
    n = len(coeffs) - 1
    dcoeffs = [c * (n - i) for i, c in enumerate(coeffs[:-1])]
    with mpmath.workdps(60):
        z = mpmath.mpc(z)
        for _ in range(steps):
            z = z - mpmath.polyval(coeffs, z) / mpmath.polyval(dcoeffs, z)
        return z


def test_lehmer_profile_against_newton_oracle():
    seeds = np.roots(np.array(LEHMER.coeffs, dtype=float))
    oracle = sorted((abs(_newton_refine(list(LEHMER.coeffs), z)) for z in seeds), reverse=True)
    prof = find_roots(LEHMER)
    assert abs(prof.leading_root - 1.17628081825992) < 1e-8
    assert sum(1 for m in prof.magnitudes if abs(m - 1) < 1e-9) == 8
    assert abs(prof.magnitudes[-1] - 1 / prof.leading_root) < 1e-9
    for got, want in zip(prof.magnitudes, oracle):
        assert abs(got - float(want)) < 1e-9


def test_backward_error_and_residuals():
    rng = random.Random(3)
    for _ in range(50):
        deg = rng.randint(2, 8)
        p = P((1, *[rng.randint(-9, 9) for _ in range(deg)]))
        prof = find_roots(p)
        c = np.array(p.coeffs, dtype=float)
        for z, m in zip(prof.roots, prof.magnitudes):
            scale = np.polyval(np.abs(c), abs(z))
            assert abs(np.polyval(c, z)) <= 1e-9 * max(scale, 1.0)
            assert abs(abs(z) - m) < 1e-15 * max(1.0, m)
        assert list(prof.magnitudes) == sorted(prof.magnitudes, reverse=True)


def test_reconstruction_from_roots():
    rng = random.Random(5)
    for _ in range(60):
        deg = rng.randint(2, 8)
        p = P((1, *[rng.randint(-9, 9) for _ in range(deg)]))
        prof = find_roots(p)
        rebuilt = np.real(np.poly(np.array(prof.roots)))
        for got, want in zip(rebuilt, p.coeffs):
            assert abs(got - want) <= 1e-6 * max(1.0, abs(want))


def test_conjugate_closure():
    rng = random.Random(9)
    for _ in range(60):
        deg = rng.randint(2, 7)
        p = P((1, *[rng.randint(-6, 6) for _ in range(deg)]))
        prof = find_roots(p)
        for z in prof.roots:
            if abs(z.imag) > prof.error_bound:
                assert min(abs(w - z.conjugate()) for w in prof.roots) <= 2 * prof.error_bound


def test_sign_flip_moves_negative_leading_root():
    rng = random.Random(13)
    done = 0
    while done < 40:
        deg = rng.randint(2, 6)
        p = P((1, *[rng.randint(-6, 6) for _ in range(deg)]))
        prof = find_roots(p)
        if prof.leading_root_index is None or prof.leading_root >= 0:
            continue
        flipped = find_roots(negate_variable(p))
        assert flipped.leading_root_index is not None
        assert abs(flipped.leading_root + prof.leading_root) < 1e-8
        done += 1


def test_multiple_roots_still_converge():
    p = multiply(multiply(P((1, -1)), P((1, -1))), P((1, -5)))
    prof = find_roots(p)
    assert abs(prof.magnitudes[0] - 5) < 1e-8
    rts, mags, err = refine_roots_mp(multiply(P((1, 1)), P((1, 1))))
    assert len(rts) == 2 and abs(mags[0] - 1) < 1e-30


def test_spectral_radius_examples():
    assert spectral_radius(P((1, -2))) == 2.0
    assert abs(spectral_radius(P((1, 0, -1))) - 1.0) < 1e-12
    assert abs(spectral_radius(P((1, -3, 1))) - 2.618033988749895) < 1e-9


def test_nonconvergence_is_reported():
    with pytest.raises(ValueError):
        find_roots(P((2, 1)))  # non-monic rejected outright


def test_rouche_certificate_example():
    cert = rouche_certificate(P((1, -80, 3)), 100.0)
    assert cert.ineq1_holds and cert.ineq2_holds and cert.ineq3_holds
    assert cert.verified_root_pattern
    assert abs(cert.scaled_point[0] - 3e-4) < 1e-15
    assert abs(cert.scaled_point[1] + 0.8) < 1e-15


def test_rouche_certificate_zero_middle_coefficient_fails():
    cert = rouche_certificate(P((1, 0, 0)), 5.0)
    assert not cert.ineq2_holds
    assert not cert.verified_root_pattern


def test_rouche_certificate_is_sufficient_not_necessary():
    cert = rouche_certificate(P((1, -3, 1)), 2.0)
    assert not cert.ineq1_holds
    assert not cert.verified_root_pattern  # yet the polynomial is Perron


def test_certificate_soundness_smoke():
    # small version of the acceptance sweep: every certified vector shows the
    # promised root pattern
    rng = random.Random(2024)
    for n, R in ((2, 50), (3, 50)):
        accepted = 0
        while accepted < 1000:
            top = rng.randint(R // 2 + 1, R - 1) * rng.choice((1, -1))
            rest = [rng.randint(-(R ** (n - k)) // 3, (R ** (n - k)) // 3) for k in range(n - 1)]
            cert = rouche_certificate(P((1, top, *rest[::-1])), float(R))
            if cert.ineq1_holds and cert.ineq2_holds and cert.ineq3_holds:
                accepted += 1
                assert cert.verified_root_pattern


def test_scaled_point_in_unit_box_for_census_candidates():
    cert = rouche_certificate(P((1, -40, 7)), 50.0)
    assert all(-1 <= u <= 1 for u in cert.scaled_point)
