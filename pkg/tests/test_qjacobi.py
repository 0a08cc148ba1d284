"""Tests for multivariable big and little q-Jacobi polynomials."""

from fractions import Fraction as F

import pytest

from bcq.polyring import LaurentPoly, expand_in_basis
from bcq.qjacobi import (
    BigJacobiParams,
    LittleJacobiParams,
    SumTruncation,
    big_inner,
    big_jacobi_poly,
    little_inner,
    little_jacobi_poly,
    little_weight_1d,
    norm_big,
    norm_little,
    normalization_check,
)

LITTLE = LittleJacobiParams(0.5, 1 / 3, 0.25, 1)
BIG = BigJacobiParams(0.05, 0.04, 1.0, 4.0, 0.25, 1)


def test_little_domain_validation():
    LittleJacobiParams(0.5, 1 / 3, 0.25, 1)
    LittleJacobiParams(1.5, -4.0, 0.5, 1)  # a < 1/q, b may be negative
    with pytest.raises(ValueError):
        LittleJacobiParams(5.0, 0.5, 0.25, 1)  # a >= 1/q
    with pytest.raises(ValueError):
        LittleJacobiParams(-0.5, 0.5, 0.25, 1)  # a <= 0


def test_big_domain_validation():
    BigJacobiParams(0.05, 0.04, 1.0, 4.0, 0.25, 1)
    with pytest.raises(ValueError):
        BigJacobiParams(5.0, 0.04, 1.0, 4.0, 0.25, 1)  # a >= 1/q
    # complex conjugate pair a = cz, b = -d conj(z) is admitted
    z = 0.1 + 0.2j
    BigJacobiParams(1.0 * z, -4.0 * z.conjugate(), 1.0, 4.0, 0.25, 1)


def test_normalization_closed_forms():
    for l in (1, 2):
        for k in (1, 2):
            rl = normalization_check(LittleJacobiParams(0.5, 1 / 3, 0.25, k), l)
            rb = normalization_check(
                BigJacobiParams(0.05, 0.04, 1.0, 4.0, 0.25, k), l
            )
            assert rl.passed and rl.residual < 1e-10
            assert rb.passed and rb.residual < 1e-10


def test_one_variable_gram_schmidt_oracle():
    # independent construction: monomial moments of the one-variable weight,
    # then a classical normal-equations solve for the monic degree-2 poly
    q, n_max = 0.25, 120
    nodes = [q**j for j in range(n_max)]
    weights = [little_weight_1d(x, LITTLE) * (1 - q) * x for x in nodes]
    moment = lambda m: sum(w * x**m for x, w in zip(nodes, weights))
    # monic x^2 + c1 x + c0 orthogonal to 1 and x
    m = [moment(i) for i in range(5)]
    det = m[0] * m[2] - m[1] * m[1]
    c1 = -(m[0] * m[3] - m[1] * m[2]) / det
    c0 = -(m[2] * m[2] - m[1] * m[3]) / det
    poly = little_jacobi_poly((2,), LITTLE, 1)
    assert abs(complex(poly.coefficient((2,))) - 1) < 1e-12
    assert abs(complex(poly.coefficient((1,))) - c1) < 1e-9
    assert abs(complex(poly.coefficient((0,))) - c0) < 1e-9


def test_orthogonality_two_variables():
    lams = ((0, 0), (1, 0), (1, 1), (2, 0))
    for family, inner, make in (
        ("little", little_inner, lambda lam: little_jacobi_poly(lam, LITTLE, 2)),
        ("big", big_inner, lambda lam: big_jacobi_poly(lam, BIG, 2)),
    ):
        params = LITTLE if family == "little" else BIG
        polys = {lam: make(lam) for lam in lams}
        norms = {lam: inner(p, p, params) for lam, p in polys.items()}
        for i, lam in enumerate(lams):
            for mu in lams[i + 1 :]:
                ip = inner(polys[lam], polys[mu], params)
                assert abs(ip) / (norms[lam] * norms[mu]) ** 0.5 < 1e-9


def test_monic_symmetric_triangular():
    for poly, lam in (
        (little_jacobi_poly((2, 1), LITTLE, 2), (2, 1)),
        (big_jacobi_poly((1, 1), BIG, 2), (1, 1)),
    ):
        coeffs = expand_in_basis(poly, "S")
        assert abs(complex(coeffs[lam]) - 1) < 1e-12
        assert all(sum(mu) <= sum(lam) for mu in coeffs)


def test_norms_positive():
    assert norm_little((1,), LITTLE) > 0
    assert norm_big((2,), BIG) > 0
    assert norm_little((0,), LITTLE) == pytest.approx(1.0)


def test_truncation_effective_n():
    trunc = SumTruncation(n_max=50, tail_tol=1e-12)
    # enough terms for the tail bound, capped at n_max
    assert trunc.effective_n(0.25) == 20
    assert trunc.effective_n(0.9) == 50
