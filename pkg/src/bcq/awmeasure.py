"""The full Koornwinder orthogonality inner product.

For parameters inside the unit disc the measure is purely continuous: an
l-fold torus integral against the Askey-Wilson weight w_2 per coordinate and
the (x_i^e x_j^e'; q)_k coupling factors.  Parameters outside the unit disc
contribute residue-discrete Jackson parts: coordinate r is pinned to the
geometric sequence e q^i (|e q^i| > 1) with mass w_1(e q^i) = the residue of
w_2(x)/x there, computed by contour quadrature.  The m-th mixed term carries
the combinatorial prefactor 2^m binom(l,m).

Torus integrals use the trapezoid rule on uniform circle grids (periodic
analytic integrand, hence spectral accuracy) with doubling refinement.
Weight values on a grid are cached per (params, M) so that Gram matrices
reuse one weight evaluation across all polynomial pairs.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .polyring import LaurentPoly
from .qseries import DEFAULT_POLICY, TruncationPolicy, qpochhammer

_DEGENERACY_TOL = 1e-12
_N_E_CAP = 64


class DegenerateParameterError(ArithmeticError):
    """Colliding poles of the weight function; the measure is undefined."""


@dataclass(frozen=True)
class QuadratureGrid:
    """Uniform circle grids with doubling refinement."""

    m_start: int = 16
    rel_tol: float = 1e-10
    max_points: int = 2**14

    def __post_init__(self) -> None:
        if self.m_start < 8:
            raise ValueError("grid must start with at least 8 points")


DEFAULT_GRID = QuadratureGrid()


def _params_float(params):
    q = float(params.q)
    ts = []
    for t in params.tuple4:
        z = complex(t)
        ts.append(z.real if z.imag == 0 else z)
    return ts, q, float(params.t)


def check_degeneracy(params) -> None:
    """Reject t_i t_j q^m = 1 (colliding weight poles) within tolerance."""
    ts, q, _t = _params_float(params)
    for i in range(4):
        for j in range(i, 4):
            prod = ts[i] * ts[j]
            m = 0
            while m <= 200 and abs(prod) * q**m > _DEGENERACY_TOL:
                if abs(prod * q**m - 1) < _DEGENERACY_TOL:
                    raise DegenerateParameterError(
                        f"t_{i} t_{j} q^{m} = 1 within tolerance"
                    )
                m += 1


def truncation_index(e, q: float) -> int:
    """N_e: the largest integer with |e q^{N_e}| > 1, or -1 if |e| <= 1."""
    if abs(e) <= 1:
        return -1
    n = 0
    while abs(e) * q ** (n + 1) > 1 and n < _N_E_CAP:
        n += 1
    return n


def discrete_support(params) -> dict:
    """Map parameter index -> N_e for each of (t0..t3)."""
    ts, q, _ = _params_float(params)
    return {i: truncation_index(ts[i], q) for i in range(4)}


def w2_value(x, params, policy: TruncationPolicy = DEFAULT_POLICY):
    """w_2(x) = (x^2, x^-2; q)_inf / prod_a (t_a x, t_a / x; q)_inf."""
    ts, q, _ = _params_float(params)
    num = qpochhammer(x * x, q, math.inf, policy) * qpochhammer(
        1 / (x * x), q, math.inf, policy
    )
    den = 1.0
    for t in ts:
        den *= qpochhammer(t * x, q, math.inf, policy)
        den *= qpochhammer(t / x, q, math.inf, policy)
    return num / den


def _qpoch_finite(a, q: float, k: int):
    out = 1.0
    term = a
    for _ in range(k):
        out *= 1 - term
        term *= q
    return out


def _weight_poles(params):
    """All poles of w_2(x)/x away from 0: t_a q^j and 1/(t_a q^j)."""
    ts, q, _ = _params_float(params)
    poles = []
    for t in ts:
        if t == 0:
            continue
        for j in range(0, 2 * _N_E_CAP):
            p = t * q**j
            if abs(p) < 1e-6:
                break
            poles.append(p)
            poles.append(1 / p)
    return poles


def residue_weight(e, i: int, params, n_points: int = 64):
    """w_1(e q^i) = res_{x = e q^i} (w_2(x)/x) by contour quadrature.

    The circle radius is a quarter of the distance to the nearest other
    pole; two poles closer than the degeneracy tolerance are rejected.
    """
    _ts, q, _ = _params_float(params)
    center = complex(e) * q**i
    dists = [abs(p - center) for p in _weight_poles(params)]
    dists = [d for d in dists if d > _DEGENERACY_TOL]
    dists.append(abs(center))
    radius = 0.25 * min(dists)
    if radius < _DEGENERACY_TOL:
        raise DegenerateParameterError("pole collision at residue point")
    total = 0j
    for s in range(n_points):
        z = center + radius * cmath.exp(2j * cmath.pi * s / n_points)
        total += w2_value(z, params) / z * (z - center)
    return total / n_points


@lru_cache(maxsize=64)
def _roots_of_unity(m: int):
    return tuple(cmath.exp(2j * cmath.pi * s / m) for s in range(m))


@lru_cache(maxsize=256)
def _w2_on_roots(params, m: int):
    roots = _roots_of_unity(m)
    return tuple(w2_value(z, params) for z in roots)


def _poly_on_grid(p: LaurentPoly, roots, fixed, dim: int):
    """Values of p over the product grid: the first coordinates are pinned
    to ``fixed``, the last ``dim`` run over the root set.  Iteration order is
    row-major over root indices (deterministic)."""
    m = len(roots)
    terms = [(exp, complex(c)) for exp, c in sorted(p.terms.items())]
    nfixed = len(fixed)
    fixed_pows = []
    for exp, c in terms:
        val = c
        for x, e in zip(fixed, exp):
            val *= complex(x) ** e
        fixed_pows.append((exp[nfixed:], val))
    out = []
    for combo in iproduct(range(m), repeat=dim):
        total = 0j
        for tail, val in fixed_pows:
            idx_val = val
            for s, e in zip(combo, tail):
                idx_val *= roots[(s * e) % m]
            total += idx_val
        out.append(total)
    return out


def _weight_on_grid(params, l: int, roots, fixed, dim: int):
    """w_2 factors for the continuous coordinates times the full coupling
    factor prod_{i<j} (x_i^e x_j^e'; q)_k, over the same grid order."""
    m = len(roots)
    _ts, q, _ = _params_float(params)
    k = params.k
    w2v = _w2_on_roots(params, m)
    fixed = [complex(x) for x in fixed]
    out = []
    for combo in iproduct(range(m), repeat=dim):
        xs = fixed + [roots[s] for s in combo]
        val = 1.0 + 0j
        for s in combo:
            val *= w2v[s]
        for i in range(l):
            for j in range(i + 1, l):
                a = xs[i] * xs[j]
                b = xs[i] / xs[j]
                val *= (
                    _qpoch_finite(a, q, k)
                    * _qpoch_finite(b, q, k)
                    * _qpoch_finite(1 / b, q, k)
                    * _qpoch_finite(1 / a, q, k)
                )
        out.append(val)
    return out


def _mixed_term_at_m(polys_pairs, params, fixed, dim: int, grid: QuadratureGrid):
    """For each (P,Q) pair: mean over the torus grid of P Qbar * weight with
    the given pinned coordinates; refined by doubling."""
    l = len(fixed) + dim
    m_pts = grid.m_start
    prev = None
    while m_pts <= grid.max_points:
        roots = _roots_of_unity(m_pts)
        wvals = _weight_on_grid(params, l, roots, fixed, dim)
        values = []
        cache = {}
        for P, Q in polys_pairs:
            if id(P) not in cache:
                cache[id(P)] = _poly_on_grid(P, roots, fixed, dim)
            if id(Q) not in cache:
                cache[id(Q)] = _poly_on_grid(Q, roots, fixed, dim)
            pv = cache[id(P)]
            qv = cache[id(Q)]
            total = 0j
            for a, b, w in zip(pv, qv, wvals):
                total += a * b.conjugate() * w
            values.append(total / len(wvals))
        if prev is not None:
            scale = max(max(abs(v) for v in values), 1e-300)
            if all(
                abs(v - p) <= grid.rel_tol * (1 + scale)
                for v, p in zip(values, prev)
            ):
                return values
        prev = values
        m_pts *= 2
    raise ArithmeticError("torus quadrature refinement cap reached")


def continuous_gram(polys, params, grid: QuadratureGrid = DEFAULT_GRID):
    """All pairwise m=0 inner products <polys[i], polys[j]> in one pass."""
    pairs = [(p, q) for i, p in enumerate(polys) for q in polys[i:]]
    values = _mixed_term_at_m(pairs, params, (), polys[0].nvars, grid)
    n = len(polys)
    out = [[0j] * n for _ in range(n)]
    idx = 0
    for i in range(n):
        for j in range(i, n):
            out[i][j] = values[idx]
            out[j][i] = values[idx].conjugate()
            idx += 1
    return out


def continuous_inner(
    P: LaurentPoly, Q: LaurentPoly, params, grid: QuadratureGrid = DEFAULT_GRID
):
    """The m=0 (purely continuous) term of the inner product."""
    return _mixed_term_at_m([(P, Q)], params, (), P.nvars, grid)[0]


def full_inner(
    P: LaurentPoly,
    Q: LaurentPoly,
    params,
    grid: QuadratureGrid = DEFAULT_GRID,
):
    """<P,Q>_K = sum_{m=0}^{l} <P,Q>_m: continuous term plus all mixed
    residue-discrete terms (Jackson sums over e q^i with residue masses)."""
    if P.nvars != Q.nvars:
        raise ValueError("arity mismatch")
    check_degeneracy(params)
    l = P.nvars
    ts, q, _ = _params_float(params)
    n_e = discrete_support(params)
    active = [i for i in range(4) if n_e[i] >= 0]
    residue_cache = {}

    def w1(e_idx: int, i: int):
        key = (e_idx, i)
        if key not in residue_cache:
            residue_cache[key] = residue_weight(ts[e_idx], i, params)
        return residue_cache[key]

    total = continuous_inner(P, Q, params, grid)
    for m in range(1, l + 1):
        if not active:
            break
        prefactor = 2**m * math.comb(l, m)
        term = 0j
        for e_combo in iproduct(active, repeat=m):
            for i_combo in iproduct(*[range(n_e[e] + 1) for e in e_combo]):
                pts = tuple(ts[e] * q**i for e, i in zip(e_combo, i_combo))
                mass = 1.0 + 0j
                for e, i in zip(e_combo, i_combo):
                    mass *= w1(e, i)
                value = _mixed_term_at_m([(P, Q)], params, pts, l - m, grid)[0]
                term += mass * value
        total += prefactor * term
    return complex(total)


def gustafson_constant(l: int, params, policy: TruncationPolicy = DEFAULT_POLICY):
    """<1,1>_K in closed form:
    2^l l! prod_{j=1}^l (t, t^{l+j-2} t0t1t2t3; q)_inf /
    (t^j, q, t0t1 t^{j-1}, t0t2 t^{j-1}, t0t3 t^{j-1}, t1t2 t^{j-1},
    t1t3 t^{j-1}, t2t3 t^{j-1}; q)_inf."""
    ts, q, t = _params_float(params)
    t4 = ts[0] * ts[1] * ts[2] * ts[3]
    inf = math.inf
    total = (2**l) * math.factorial(l)
    for j in range(1, l + 1):
        num = qpochhammer(t, q, inf, policy) * qpochhammer(
            t ** (l + j - 2) * t4, q, inf, policy
        )
        den = qpochhammer(t**j, q, inf, policy) * qpochhammer(q, q, inf, policy)
        for i in range(4):
            for jj in range(i + 1, 4):
                den *= qpochhammer(ts[i] * ts[jj] * t ** (j - 1), q, inf, policy)
        total *= num / den
    if isinstance(total, complex):
        total = total.real
    return total


def normalization_check(
    l: int, params, grid: QuadratureGrid = DEFAULT_GRID, rel_tol: float = 1e-8
):
    """Quadrature <1,1>_K against the closed-form product constant."""
    from .report import Timer, VerificationReport

    with Timer() as timer:
        one = LaurentPoly.const(l, 1)
        measured = full_inner(one, one, params, grid).real
        target = gustafson_constant(l, params)
        residual = abs(measured - target) / abs(target)
    return VerificationReport(
        identity="koornwinder-normalization",
        params={"l": l, "q": str(params.q), "k": params.k},
        exact=False,
        residual=residual,
        runtime_ms=timer.ms,
        passed=residual < rel_tol,
        detail={"measured": measured, "target": target},
    )


def norm_K(lam, params, grid: QuadratureGrid = DEFAULT_GRID):
    """N_K(lambda) = <P_lambda, P_lambda>_K / <1,1>_K."""
    from .koornwinder import EigenvalueCollisionError, koornwinder_poly

    lam = tuple(lam)
    l = len(lam)
    try:
        poly = koornwinder_poly(lam, params)
    except EigenvalueCollisionError:
        poly = koornwinder_poly(lam, params, mode="gram")
    one = LaurentPoly.const(l, 1)
    num = full_inner(poly, poly, params, grid)
    den = full_inner(one, one, params, grid)
    return (num / den).real
