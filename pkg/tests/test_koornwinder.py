"""Tests for the Koornwinder q-difference operator and polynomial family."""

from fractions import Fraction as F

import pytest

from bcq.koornwinder import (
    KoornwinderParams,
    check_symmetries,
    dk_apply,
    dk_evaluate,
    eigenvalue,
    koornwinder_poly,
)
from bcq.polyring import LaurentPoly, expand_in_basis, is_invariant, orbit_sum_W
from bcq.weights import dominant_downset

PARAMS2 = KoornwinderParams(F(1, 5), F(-1, 7), F(1, 3), F(-2, 7), F(1, 4), 1)
PARAMS1 = KoornwinderParams(F(1, 5), F(-1, 7), F(1, 3), F(-2, 7), F(1, 4), 1)


def one_variable_params(p):
    return KoornwinderParams(p.t0, p.t1, p.t2, p.t3, p.q, p.k)


def test_params_validation():
    with pytest.raises(ValueError):
        KoornwinderParams(F(1, 5), F(-1, 7), F(1, 3), F(-2, 7), F(3, 2), 1)
    with pytest.raises(ValueError):
        KoornwinderParams(F(1, 5), F(-1, 7), F(1, 3), F(-2, 7), F(1, 4), 0)


def test_degree_one_matches_recurrence_oracle():
    # One variable: the monic polynomial of degree 1 in z + 1/z is
    # m_(1) - b_0 with b_0 = a + 1/a - A_0 and
    # A_0 = (1-ab)(1-ac)(1-ad) / (a (1-abcd)), independently known from the
    # three-term recurrence of the one-variable orthogonal family.
    p = PARAMS1
    a, b, c, d = p.t0, p.t1, p.t2, p.t3
    a0 = (1 - a * b) * (1 - a * c) * (1 - a * d) / (a * (1 - a * b * c * d))
    b0 = a + 1 / a - a0
    expected = orbit_sum_W((1,), 1) + LaurentPoly.const(1, -b0)
    assert koornwinder_poly((1,), p) == expected


def test_eigen_identity_exact_two_variables():
    for lam in ((1, 0), (1, 1), (2, 1)):
        poly = koornwinder_poly(lam, PARAMS2)
        image = dk_apply(poly, PARAMS2)
        assert image == poly.scale(eigenvalue(lam, PARAMS2))


def test_eigenvalue_frozen():
    assert eigenvalue((2, 1), PARAMS2) == F(17637, 1120)
    assert eigenvalue((0, 0), PARAMS2) == 0


def test_monic_and_triangular():
    lam = (2, 1)
    poly = koornwinder_poly(lam, PARAMS2)
    coeffs = expand_in_basis(poly, "W")
    assert coeffs[lam] == 1
    downset = set(dominant_downset(lam))
    assert set(coeffs) <= downset


def test_gram_mode_agrees_with_triangular():
    # the Gram route goes through quadrature, so compare numerically
    for lam in ((1, 0), (2, 0), (1, 1)):
        exact = koornwinder_poly(lam, PARAMS2)
        gram = koornwinder_poly(lam, PARAMS2, mode="gram")
        err = max(
            abs(complex(exact.coefficient(e)) - complex(gram.coefficient(e)))
            for e in set(exact.terms) | set(gram.terms)
        )
        assert err < 1e-10


def test_operator_preserves_invariants():
    p = orbit_sum_W((2, 0), 2)
    image = dk_apply(p, PARAMS2)
    assert is_invariant(image, "W")
    # the operator is triangular: the image stays in the downset of (2,0)
    downset = set(dominant_downset((2, 0)))
    assert set(expand_in_basis(image, "W")) <= downset


def test_dk_evaluate_matches_dk_apply():
    p = orbit_sum_W((1, 1), 2)
    image = dk_apply(p, PARAMS2)
    x = (F(3, 5), F(7, 11))
    assert dk_evaluate(p, x, PARAMS2) == image.evaluate(x)


def test_constant_is_eigenvector_with_zero_eigenvalue():
    one = LaurentPoly.const(2, F(1))
    assert dk_apply(one, PARAMS2).is_zero


def test_symmetry_checks_pass():
    report = check_symmetries((1, 1), PARAMS2)
    assert report.passed
    assert report.exact


def test_float_mode():
    p = KoornwinderParams(0.2, -0.15, 0.3, -0.25, 0.25, 1)
    poly = koornwinder_poly((1, 0), p)
    image = dk_apply(poly, p)
    target = poly.scale(eigenvalue((1, 0), p))
    err = max(
        abs(complex(image.coefficient(e)) - complex(target.coefficient(e)))
        for e in set(image.terms) | set(target.terms)
    )
    assert err < 1e-9
