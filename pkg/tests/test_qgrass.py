"""Tests for the R-matrix layer, reflection identities, q-exterior
intertwiners, branching and the Gelfand property."""

import random
from fractions import Fraction as F

import pytest

from bcq.linalg import mat_identity, mat_mul
from bcq.qgrass import (
    QExtVector,
    beta_map,
    branching_coeffs,
    casimir_eigenvalue,
    gelfand_check,
    intertwiner_check,
    j_infty,
    j_sigma,
    j_tilde_sigma,
    psi_constant,
    psi_hat_r,
    qsgn,
    qybe_check,
    r_matrix,
    r_minus,
    r_plus,
    refalt_check,
    reflection_check,
    spherical_multiplicity,
    tensor_power,
    theta_constant_check,
    u_vector,
    w_vectors,
    wedge,
    wedge_dual,
)
from bcq.weights import GrassmannShape

Q = F(1, 2)


def test_r_matrix_n2_frozen():
    # basis e1(x)e1, e1(x)e2, e2(x)e1, e2(x)e2
    r = r_matrix(2, Q)
    expected = [
        [Q, 0, 0, 0],
        [0, 1, 0, 0],
        [0, Q - 1 / Q, 1, 0],
        [0, 0, 0, Q],
    ]
    assert r == expected


def test_r_inverses():
    for n in (2, 3):
        assert mat_mul(r_matrix(n, Q), r_minus(n, Q)) == mat_identity(n * n)
        assert mat_mul(r_plus(n, Q), r_minus(n, Q)) != mat_identity(n * n)


def test_qybe_exact():
    for n in (2, 3):
        report = qybe_check(n, Q)
        assert report.passed and report.exact


def test_reflection_exact():
    for n in (2, 3, 4):
        for l in range(1, n // 2 + 1):
            for sigma in (0, 1):
                report = reflection_check(j_sigma(n, l, sigma, Q), n, Q)
                assert report.passed and report.exact
    report_inf = reflection_check(j_infty(4, 2), 4, Q)
    assert report_inf.passed


def test_reflection_fails_for_random_matrix():
    rng = random.Random(7)
    n = 3
    x = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
    report = reflection_check(x, n, Q)
    assert not report.passed


def test_refalt_exact():
    for n in (3, 4):
        for l in range(1, n // 2 + 1):
            for sigma in (0, 1):
                report = refalt_check(
                    j_tilde_sigma(n, l, sigma, Q), j_sigma(n, l, sigma, Q), n, Q
                )
                assert report.passed and report.exact


def test_qsgn_and_wedge():
    # disjoint, one decreasing pair
    assert qsgn((2,), (1,), Q) == -Q
    assert qsgn((1,), (2,), Q) == 1
    # overlap kills the product
    assert qsgn((1, 2), (2,), Q) == 0
    assert wedge((1,), (2,), Q) == (1, (1, 2))
    assert wedge((2,), (1,), Q) == (-Q, (1, 2))
    # dual convention reverses the roles
    assert wedge_dual((1,), (2,), Q) == (-Q, (1, 2))
    assert wedge_dual((2,), (1,), Q) == (1, (1, 2))


def test_beta_map():
    # beta(v*_i (x) v_j) = q^{-delta_ij} v_j (x) v*_i + correction on i = j
    diag = dict(beta_map((2, 2), Q))
    assert diag[(2, 2)] == 1 / Q
    assert diag[(1, 1)] == 1 / Q - Q
    off = dict(beta_map((1, 2), Q))
    assert off == {(2, 1): 1}


def test_intertwiner_small():
    shape = GrassmannShape(4, 2)
    for r in (1, 2):
        for sigma in (0, 1):
            for tilde in (False, True):
                report = intertwiner_check(shape, r, sigma, Q, tilde=tilde)
                assert report.passed and report.exact


def test_psi_image_of_u_like_vector_has_expected_weight():
    shape = GrassmannShape(4, 2)
    w, w_tilde, w_inf = w_vectors(shape, 0, Q)
    image = psi_hat_r(tensor_power(w, 2), shape, 2, Q)
    assert image.space == "Wedge.2"
    assert not image.is_zero


def test_psi_constant_values():
    # c_r(sigma) = (q^sigma/(q^2-1))^r (q^2; q^2)_r
    q = Q
    c2 = (q**0 / (q**2 - 1)) ** 2 * (1 - q**2) * (1 - q**4)
    assert psi_constant(2, 0, 2, q) == c2


def test_theta_constants():
    shape = GrassmannShape(6, 3)
    for r in (2, 3):
        for tilde in (False, True):
            report = theta_constant_check(shape, r, 0, Q, tilde=tilde)
            assert report.passed and report.exact


def test_casimir_frozen():
    assert casimir_eigenvalue((1, 0, 0, -1), 4, Q) == F(1105, 256)
    # chi_0 = sum_k q^{2(n-k)}
    assert casimir_eigenvalue((0, 0), 2, Q) == Q**2 + 1


def test_branching_frozen():
    shape = GrassmannShape(4, 2)
    coeffs = branching_coeffs((1, 0, 0, -1), shape)
    assert coeffs == {
        ((1, 0), (0, -1)): 1,
        ((1, -1), (0, 0)): 1,
        ((0, 0), (1, -1)): 1,
        ((0, 0), (0, 0)): 1,
        ((0, -1), (1, 0)): 1,
    }
    # trivial representation decomposes trivially
    assert branching_coeffs((0, 0, 0, 0), shape) == {((0, 0), (0, 0)): 1}


def test_spherical_multiplicity():
    shape = GrassmannShape(4, 2)
    assert spherical_multiplicity((1, 0, 0, -1), shape) == 1
    assert spherical_multiplicity((1, 0, 0, 0), shape) == 0
    assert spherical_multiplicity((0, 0, 0, 0), shape) == 1


def test_gelfand_small():
    for shape in (GrassmannShape(4, 2), GrassmannShape(5, 2)):
        report = gelfand_check(shape, 1)
        assert report.passed and report.exact
        assert report.detail["failures"] == []


def test_u_vector_support():
    shape = GrassmannShape(4, 2)
    u = u_vector(shape, 1)
    # index sets drawn from {1..l} union {n-l+1..n} avoiding mirrors
    for (i_set, j_set) in u.coeffs:
        assert len(i_set) == 1 and len(j_set) == 1
        i, j = i_set[0], j_set[0]
        assert j == shape.n + 1 - i


def test_j_matrices_shape():
    n, l = 5, 2
    js = j_sigma(n, l, 1, Q)
    jt = j_tilde_sigma(n, l, 1, Q)
    assert len(js) == n and len(jt) == n
    # middle block of J^sigma is the identity
    assert js[2][2] == 1
