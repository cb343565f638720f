import math
import random
from fractions import Fraction

import numpy as np
import pytest

from ptspectrum.charpoly import RealPolynomial, char_poly
from ptspectrum.errors import ClassificationAmbiguous, NoConvergence, NotRealCharPoly
from ptspectrum.inertia import qualitative_spectrum
from ptspectrum.matrix import SquareMatrix, pt_well, random_pt_matrix
from ptspectrum.oracle import classify_roots, cross_validate, find_roots
from ptspectrum.scalars import I

from conftest import random_monic

R2 = math.sqrt(2)


def test_roots_real_cubic():
    r = find_roots(RealPolynomial([0, -2, 0, 1]))
    assert r == pytest.approx([-R2, 0, R2], abs=1e-10)


def test_roots_pt_well_xi2():
    r = sorted(find_roots(char_poly(pt_well(2))), key=lambda z: z.imag)
    assert r == pytest.approx([-1j * R2, 0, 1j * R2], abs=1e-10)


def test_roots_linear():
    assert find_roots(RealPolynomial([-5, 1])) == pytest.approx([5])


def test_residuals_and_conjugate_symmetry(rng):
    for _ in range(50):
        p = RealPolynomial(random_monic(rng, rng.randint(2, 10)))
        coeffs = [float(c) for c in p.coeffs]
        for r in find_roots(p):
            val = np.polyval(coeffs[::-1], r)
            scale = sum(abs(c) * max(1, abs(r)) ** n for n, c in enumerate(coeffs))
            assert abs(val) <= 1e-10 * scale
            assert abs(np.polyval(coeffs[::-1], np.conj(r))) == pytest.approx(abs(val), abs=1e-10 * scale)


def test_no_convergence_reported():
    with pytest.raises(NoConvergence):
        find_roots(RealPolynomial(random_monic(random.Random(3), 9)), max_iter=1)


def test_classify_examples():
    c = classify_roots([-R2, 0, R2])
    assert (c.real_count, c.complex_pair_count) == (3, 0)
    c = classify_roots([0, 1j * R2, -1j * R2])
    assert (c.real_count, c.complex_pair_count) == (1, 1)
    c = classify_roots([1e-12j, 2])
    assert (c.real_count, c.complex_pair_count) == (2, 0)


def test_classify_ambiguous():
    with pytest.raises(ClassificationAmbiguous):
        classify_roots([1 + 1j, 3])
    with pytest.raises(ClassificationAmbiguous):
        classify_roots([1 + 1j, 2 - 1j])


def test_classify_borderline_flag():
    assert classify_roots([1 + 1e-7j, 1 - 1e-7j]).borderline
    assert not classify_roots([1 + 1j, 1 - 1j]).borderline


def test_cross_validate_examples():
    a = cross_validate(pt_well(1))
    assert a.status == "match" and a.pipeline == (0, 3, 0) == a.oracle
    b = cross_validate(pt_well(2))
    assert b.status == "match" and b.pipeline == (1, 1, 1)
    z = cross_validate(SquareMatrix.zeros(3))
    assert z.status == "inconclusive"
    assert "vanishes" in z.reason


def test_cross_validate_not_real():
    with pytest.raises(NotRealCharPoly):
        cross_validate(SquareMatrix.diag([I, 0, 0]))


def test_inertia_root_structure(rng):
    # Hankel inertia {nu, 0, pi} <=> pi - nu distinct real roots and nu conjugate pairs
    for _ in range(40):
        M = random_pt_matrix(rng.randint(2, 7), rng)
        q = qualitative_spectrum(M)
        c = classify_roots(find_roots(q.polynomial))
        h = q.hankel_inertia
        assert c.real_count == h.pi - h.nu
        assert c.complex_pair_count == h.nu
