"""Multivariable big and little q-Jacobi polynomials.

The inner products are l-fold truncated Jackson sums: little over [0,1]^l
(points q^j), big over [-d,c]^l (points c q^j and -d q^j).  The weight is
the Vandermonde times a one-variable weight per coordinate times the
coupling factors x_i^{2k-1} (q^{1-k} x_j / x_i; q)_{2k-1}.  Polynomials are
built by Gram-Schmidt over the dominance downset; q-difference operators
for these families are deliberately not implemented.

The grid (points and combined weight masses) is cached per parameter set so
that Gram matrices reuse one weight evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .linalg import solve_linear
from .polyring import LaurentPoly, monomial_symmetric, rebuild_from_basis
from .qseries import DEFAULT_POLICY, log_qgamma, qpochhammer
from .weights import dominant_downset


@dataclass(frozen=True)
class BigJacobiParams:
    """(a,b,c,d; q, t=q^k) with c,d > 0 and a in (-c/dq, 1/q),
    b in (-d/cq, 1/q), or the complex pair a = cz, b = -d conj(z)."""

    a: object
    b: object
    c: object
    d: object
    q: object
    k: int = 1

    def __post_init__(self) -> None:
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0,1)")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if not (self.c > 0 and self.d > 0):
            raise ValueError("c and d must be positive")
        a, b = self.a, self.b
        if isinstance(a, complex) or isinstance(b, complex):
            z = complex(a) / complex(self.c)
            if z.imag == 0:
                raise ValueError("complex branch needs a = cz with z not real")
            if abs(complex(b) + self.d * z.conjugate()) > 1e-12 * (1 + abs(b)):
                raise ValueError("complex branch needs b = -d conj(z)")
        else:
            if not -self.c / (self.d * self.q) < a < 1 / self.q:
                raise ValueError("a outside (-c/dq, 1/q)")
            if not -self.d / (self.c * self.q) < b < 1 / self.q:
                raise ValueError("b outside (-d/cq, 1/q)")


@dataclass(frozen=True)
class LittleJacobiParams:
    """(a,b; q, t=q^k) with a in (0, 1/q) and b < 1/q."""

    a: object
    b: object
    q: object
    k: int = 1

    def __post_init__(self) -> None:
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0,1)")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if not 0 < self.a < 1 / self.q:
            raise ValueError("a outside (0,1/q)")
        if not self.b < 1 / self.q:
            raise ValueError("b outside (-inf,1/q)")


@dataclass(frozen=True)
class SumTruncation:
    """Per-variable Jackson-sum truncation with a geometric tail bound."""

    n_max: int = 200
    tail_tol: float = 1e-14

    def effective_n(self, q: float) -> int:
        n = int(math.ceil(math.log(self.tail_tol) / math.log(q)))
        return min(self.n_max, max(n, 1))


DEFAULT_TRUNCATION = SumTruncation()


def big_weight_1d(x, params: BigJacobiParams, policy=DEFAULT_POLICY):
    """w_B(x) = (qx/c, -qx/d; q)_inf / (qax/c, -qbx/d; q)_inf."""
    q, a, b, c, d = (
        float(params.q),
        params.a,
        params.b,
        float(params.c),
        float(params.d),
    )
    num = qpochhammer(q * x / c, q, math.inf, policy) * qpochhammer(
        -q * x / d, q, math.inf, policy
    )
    den = qpochhammer(q * a * x / c, q, math.inf, policy) * qpochhammer(
        -q * b * x / d, q, math.inf, policy
    )
    return num / den


def little_weight_1d(x, params: LittleJacobiParams, policy=DEFAULT_POLICY):
    """w_L(x) = ((qx;q)_inf / (qbx;q)_inf) x^alpha, a = q^alpha."""
    q = float(params.q)
    alpha = math.log(float(params.a)) / math.log(q)
    num = qpochhammer(q * x, q, math.inf, policy)
    den = qpochhammer(q * float(params.b) * x, q, math.inf, policy)
    return num / den * x**alpha


def _cross_weight(xs, q: float, k: int):
    """Delta(x) * prod_{i<j} x_i^{2k-1} (q^{1-k} x_j/x_i; q)_{2k-1}."""
    val = 1.0
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            val *= xs[i] - xs[j]
            ratio = xs[j] / xs[i]
            term = q ** (1 - k) * ratio
            poch = 1.0
            for _ in range(2 * k - 1):
                poch *= 1 - term
                term *= q
            val *= xs[i] ** (2 * k - 1) * poch
    return val


def big_weight(xs, params: BigJacobiParams, policy=DEFAULT_POLICY):
    """Delta_B at a point of (R \\ {0})^l."""
    val = _cross_weight(xs, float(params.q), params.k)
    for x in xs:
        val *= big_weight_1d(x, params, policy)
    return val


def little_weight(xs, params: LittleJacobiParams, policy=DEFAULT_POLICY):
    """Delta_L at a point of (0,1]^l."""
    val = _cross_weight(xs, float(params.q), params.k)
    for x in xs:
        val *= little_weight_1d(x, params, policy)
    return val


@lru_cache(maxsize=32)
def _grid_1d(params, trunc: SumTruncation):
    """1-D Jackson points with masses (point, mass*w_1d) for one coordinate.

    Little: x = q^j with mass (1-q) q^j.  Big: x = c q^j with mass
    (1-q) c q^j plus x = -d q^j with mass (1-q) d q^j.
    """
    q = float(params.q)
    n = trunc.effective_n(q)
    out = []
    if isinstance(params, LittleJacobiParams):
        for j in range(n + 1):
            x = q**j
            mass = (1 - q) * q**j
            alpha_pow = float(params.a) ** j
            w = (
                qpochhammer(q * x, q, math.inf)
                / qpochhammer(q * float(params.b) * x, q, math.inf)
                * alpha_pow
            )
            out.append((x, mass * w))
    else:
        c, d = float(params.c), float(params.d)
        for j in range(n + 1):
            x = c * q**j
            out.append((x, (1 - q) * c * q**j * big_weight_1d(x, params)))
        for j in range(n + 1):
            x = -d * q**j
            out.append((x, (1 - q) * d * q**j * big_weight_1d(x, params)))
    return tuple(out)


def _gram_sums(polys, params, l: int, trunc: SumTruncation):
    """All pairwise <polys[i], polys[j]> by one pass over the product grid."""
    q = float(params.q)
    k = params.k
    pts = _grid_1d(params, trunc)
    n = len(polys)
    sums = [[0.0] * n for _ in range(n)]
    for combo in iproduct(pts, repeat=l):
        xs = [p[0] for p in combo]
        mass = 1.0
        for p in combo:
            mass *= p[1]
        if mass == 0.0:
            continue
        w = mass * _cross_weight(xs, q, k)
        vals = [complex(p.evaluate(xs)) for p in polys]
        for i in range(n):
            vi = vals[i]
            for j in range(i, n):
                sums[i][j] += (vi * vals[j].conjugate() * w).real
    for i in range(n):
        for j in range(i):
            sums[i][j] = sums[j][i]
    return sums


def _inner(P, Q, params, trunc: SumTruncation):
    g = _gram_sums([P, Q], params, P.nvars, trunc)
    return g[0][1]


def big_inner(P, Q, params: BigJacobiParams, trunc: SumTruncation = DEFAULT_TRUNCATION):
    """<P,Q>_B: the l-fold truncated Jackson sum over [-d,c]^l."""
    return _inner(P, Q, params, trunc)


def little_inner(
    P, Q, params: LittleJacobiParams, trunc: SumTruncation = DEFAULT_TRUNCATION
):
    """<P,Q>_L: the l-fold truncated Jackson sum over [0,1]^l."""
    return _inner(P, Q, params, trunc)


def _jacobi_poly(lam, params, l: int, trunc: SumTruncation) -> LaurentPoly:
    lam = tuple(lam)
    downset = dominant_downset(lam)
    lower = [mu for mu in downset if mu != lam]
    if not lower:
        return monomial_symmetric(lam, l)
    basis = [monomial_symmetric(mu, l) for mu in lower]
    top = monomial_symmetric(lam, l)
    sums = _gram_sums(basis + [top], params, l, trunc)
    n = len(basis)
    gram = [[sums[i][j] for j in range(n)] for i in range(n)]
    rhs = [-sums[i][n] for i in range(n)]
    sol = solve_linear(gram, rhs)
    coeffs = {lam: 1}
    for mu, c in zip(lower, sol):
        if c != 0:
            coeffs[mu] = c
    return rebuild_from_basis(coeffs, "S", l)


def big_jacobi_poly(
    lam, params: BigJacobiParams, l: int = None, trunc: SumTruncation = DEFAULT_TRUNCATION
) -> LaurentPoly:
    """Monic P^B_lambda, orthogonal to all m_mu with mu < lambda."""
    l = len(lam) if l is None else l
    return _jacobi_poly(lam, params, l, trunc)


def little_jacobi_poly(
    lam,
    params: LittleJacobiParams,
    l: int = None,
    trunc: SumTruncation = DEFAULT_TRUNCATION,
) -> LaurentPoly:
    """Monic P^L_lambda, orthogonal to all m_mu with mu < lambda."""
    l = len(lam) if l is None else l
    return _jacobi_poly(lam, params, l, trunc)


def _gamma_ratio_product(alpha: float, beta: float, k: int, l: int, q: float) -> float:
    """prod_i Gamma_q(alpha+1+(i-1)k) Gamma_q(beta+1+(i-1)k) Gamma_q(ik)
    / (Gamma_q(alpha+beta+2+(l+i-2)k) Gamma_q(k)), in log space."""
    total = 0.0
    for i in range(1, l + 1):
        total += log_qgamma(alpha + 1 + (i - 1) * k, q)
        total += log_qgamma(beta + 1 + (i - 1) * k, q)
        total += log_qgamma(i * k, q)
        total -= log_qgamma(alpha + beta + 2 + (l + i - 2) * k, q)
        total -= log_qgamma(k, q)
    return math.exp(total)


def closed_form_little_constant(params: LittleJacobiParams, l: int) -> float:
    """<1,1>_L = l! q^{k(alpha+1) C(l,2) + 2 k^2 C(l,3)} * Gamma_q product."""
    q = float(params.q)
    if not params.a > 0 or not params.b > 0:
        raise ValueError("closed form needs a = q^alpha, b = q^beta with a,b > 0")
    alpha = math.log(float(params.a)) / math.log(q)
    beta = math.log(float(params.b)) / math.log(q)
    k = params.k
    prefactor = q ** (k * (alpha + 1) * math.comb(l, 2) + 2 * k**2 * math.comb(l, 3))
    return math.factorial(l) * prefactor * _gamma_ratio_product(alpha, beta, k, l, q)


def closed_form_big_constant(params: BigJacobiParams, l: int) -> float:
    """<1,1>_B = l! q^{k^2 C(l,3) - C(k,2) C(l,2)} * Gamma_q product *
    prod_i (-d/c, -c/d; q)_inf (cd)^{1+(i-1)k} /
    ((-q^{alpha+1+(i-1)k} d/c, -q^{beta+1+(i-1)k} c/d; q)_inf (c+d))."""
    q = float(params.q)
    if not params.a > 0 or not params.b > 0:
        raise ValueError("closed form needs a = q^alpha, b = q^beta with a,b > 0")
    alpha = math.log(float(params.a)) / math.log(q)
    beta = math.log(float(params.b)) / math.log(q)
    c, d = float(params.c), float(params.d)
    k = params.k
    prefactor = q ** (k**2 * math.comb(l, 3) - math.comb(k, 2) * math.comb(l, 2))
    total = math.factorial(l) * prefactor * _gamma_ratio_product(alpha, beta, k, l, q)
    inf = math.inf
    for i in range(1, l + 1):
        num = (
            qpochhammer(-d / c, q, inf)
            * qpochhammer(-c / d, q, inf)
            * (c * d) ** (1 + (i - 1) * k)
        )
        den = (
            qpochhammer(-(q ** (alpha + 1 + (i - 1) * k)) * d / c, q, inf)
            * qpochhammer(-(q ** (beta + 1 + (i - 1) * k)) * c / d, q, inf)
            * (c + d)
        )
        total *= num / den
    return total


def normalization_check(
    params, l: int, trunc: SumTruncation = DEFAULT_TRUNCATION, rel_tol: float = 1e-10
):
    """Jackson-sum <1,1> against the closed-form constant (big or little)."""
    from .report import Timer, VerificationReport

    big = isinstance(params, BigJacobiParams)
    with Timer() as timer:
        one = LaurentPoly.const(l, 1)
        measured = _inner(one, one, params, trunc)
        if big:
            target = closed_form_big_constant(params, l)
        else:
            target = closed_form_little_constant(params, l)
        residual = abs(measured - target) / abs(target)
    return VerificationReport(
        identity="big-jacobi-normalization" if big else "little-jacobi-normalization",
        params={"l": l, "q": str(params.q), "k": params.k},
        exact=False,
        residual=residual,
        runtime_ms=timer.ms,
        passed=residual < rel_tol,
        detail={"measured": measured, "target": target},
    )


def norm_big(
    lam, params: BigJacobiParams, trunc: SumTruncation = DEFAULT_TRUNCATION
) -> float:
    """N_B(lambda) = <P_lambda, P_lambda>_B / <1,1>_B."""
    l = len(lam)
    poly = big_jacobi_poly(lam, params, l, trunc)
    one = LaurentPoly.const(l, 1)
    return _inner(poly, poly, params, trunc) / _inner(one, one, params, trunc)


def norm_little(
    lam, params: LittleJacobiParams, trunc: SumTruncation = DEFAULT_TRUNCATION
) -> float:
    """N_L(lambda) = <P_lambda, P_lambda>_L / <1,1>_L."""
    l = len(lam)
    poly = little_jacobi_poly(lam, params, l, trunc)
    one = LaurentPoly.const(l, 1)
    return _inner(poly, poly, params, trunc) / _inner(one, one, params, trunc)
