"""Scalar q-analysis primitives.

q-shifted factorials, the q-Gamma function, and Jackson q-integrals.  Two
scalar domains are supported throughout the package: exact rationals
(``fractions.Fraction``, available whenever the inputs are rational and the
product is finite) and complex doubles.  Infinite products are truncated once
the deviation of the remaining factors from 1 falls below a tolerance; the
decay is geometric in q, so this is both tight and cheap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

INFINITY = math.inf


class NonConvergenceError(ArithmeticError):
    """Raised when a truncated product or sum fails to meet its tolerance."""


@dataclass(frozen=True)
class QBase:
    """The base q, fixed in (0, 1).  Rational q keeps computations exact."""

    q: object

    def __post_init__(self) -> None:
        if not 0 < self.q < 1:
            raise ValueError(f"q must lie in (0,1), got {self.q!r}")

    @property
    def is_exact(self) -> bool:
        return isinstance(self.q, (Fraction, int))


@dataclass(frozen=True)
class TruncationPolicy:
    """Stopping rule for infinite products and sums."""

    abs_tol: float = 1e-16
    max_terms: int = 10_000

    def __post_init__(self) -> None:
        if self.abs_tol < 1e-16:
            raise ValueError("abs_tol below the double-precision floor")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")


DEFAULT_POLICY = TruncationPolicy()


def _as_qbase(q) -> QBase:
    return q if isinstance(q, QBase) else QBase(q)


def qpochhammer(a, q, i, policy: TruncationPolicy = DEFAULT_POLICY):
    """(a;q)_i = prod_{j<i} (1 - q^j a); i may be a nonnegative int or inf.

    The result is exact when a, q are rational and i is finite.
    """
    qb = _as_qbase(q)
    qv = qb.q
    if i is INFINITY:
        prod = 1.0
        term = complex(a) if isinstance(a, complex) else float(a)
        for _ in range(policy.max_terms):
            if abs(term) < policy.abs_tol:
                return prod
            prod *= 1 - term
            term *= qv
        raise NonConvergenceError("qpochhammer: max_terms hit before tolerance")
    if i < 0 or i != int(i):
        raise ValueError("finite order must be a nonnegative integer")
    prod = 1
    term = a
    for _ in range(int(i)):
        prod *= 1 - term
        term = term * qv
    return prod


def qpochhammer_multi(a_list, q, i, policy: TruncationPolicy = DEFAULT_POLICY):
    """Product of qpochhammer over a list of arguments."""
    prod = 1
    for a in a_list:
        prod *= qpochhammer(a, q, i, policy)
    return prod


def log_qpochhammer_inf(a, q, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """log (a;q)_infty for real a with all factors positive.

    Computed as a sum of log(1 - q^j a); used where the direct product would
    underflow (q close to 1).
    """
    total = 0.0
    term = float(a)
    qv = float(_as_qbase(q).q)
    for _ in range(policy.max_terms):
        if abs(term) < policy.abs_tol:
            return total
        f = 1 - term
        if f <= 0:
            raise ValueError("log_qpochhammer_inf needs positive factors")
        total += math.log(f)
        term *= qv
    raise NonConvergenceError("log_qpochhammer_inf: max_terms hit")


def log_qgamma(a, q, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """log Gamma_q(a) = (1-a) log(1-q) + sum_j log((1-q^{j+1})/(1-q^{j+a})).

    Pairing numerator and denominator factors keeps every summand O(q^j),
    so the sum converges even when the separate products underflow.
    """
    a = float(a)
    if a <= 0 and a == int(a):
        raise ValueError(f"qgamma pole at nonpositive integer a={a}")
    qv = float(_as_qbase(q).q)
    total = (1 - a) * math.log1p(-qv)
    qj1 = qv          # q^{j+1}
    qja = qv ** a     # q^{j+a}
    for _ in range(policy.max_terms):
        term = math.log1p(-qj1) - math.log1p(-qja)
        total += term
        if abs(term) < policy.abs_tol and qj1 < 0.5:
            return total
        qj1 *= qv
        qja *= qv
    raise NonConvergenceError("log_qgamma: max_terms hit before tolerance")


def qgamma(a, q, policy: TruncationPolicy = DEFAULT_POLICY) -> float:
    """Gamma_q(a) = (1-q)^{1-a} (q;q)_infty / (q^a;q)_infty."""
    return math.exp(log_qgamma(a, q, policy))


def jackson_sum_0_to_beta(f, beta, N, q, policy: TruncationPolicy = DEFAULT_POLICY):
    """int_0^beta f(x) d_{q,N} x = sum_{k<=N} f(beta q^k)(beta q^k - beta q^{k+1}).

    N may be a nonnegative int, inf, or negative (empty sum, returns 0).
    """
    qv = _as_qbase(q).q
    if beta == 0:
        return 0
    if N is INFINITY:
        total = 0.0
        x = beta
        for _ in range(policy.max_terms):
            term = f(x) * (x - x * qv)
            total += term
            x = x * qv
            if abs(term) < policy.abs_tol * (1 + abs(total)) and abs(x) < policy.abs_tol:
                return total
        raise NonConvergenceError("jackson integral: max_terms hit")
    if N < 0:
        return 0
    total = 0
    x = beta
    for _ in range(int(N) + 1):
        total += f(x) * (x - x * qv)
        x = x * qv
    return total


def jackson_integral(f, alpha, beta, N, q, policy: TruncationPolicy = DEFAULT_POLICY):
    """int_alpha^beta f d_{q,N} x, the difference of two one-endpoint sums."""
    return jackson_sum_0_to_beta(f, beta, N, q, policy) - jackson_sum_0_to_beta(
        f, alpha, N, q, policy
    )
