"""Koornwinder q-difference operator and monic Koornwinder polynomials.

The operator D_K acts on W-invariant Laurent polynomials by

    D_K = sum_j phi_j^+ (T_{q,j} - Id) + phi_j^- (T_{q^{-1},j} - Id)

with the rational coefficients phi_j^+- below.  D_K is triangular along BC
dominance in the orbit-sum basis, so the monic eigenpolynomial P_lambda is
obtained by a back-substitution over the dominance downset of lambda once
the eigenvalues E_mu along the downset are pairwise distinct; a
Gram-Schmidt fallback against the orthogonality measure covers collisions.

D_K itself is evaluated by interpolation: the image of an invariant
polynomial is known to be supported on the dominance downset of its leading
orbits, so evaluating at generic points and solving the square orbit-sum
collocation system recovers it.  With rational parameters and rational
points this is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_linear
from .polyring import LaurentPoly, expand_in_basis, orbit_sum_W, rebuild_from_basis
from .report import Timer, VerificationReport
from .weights import dominant_downset

_POLE_TOL = 1e-8
_COLLISION_TOL = 1e-10


class EigenvalueCollisionError(ArithmeticError):
    """Triangular solve is unavailable; caller should use the fallback mode."""


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


@dataclass(frozen=True)
class KoornwinderParams:
    """Parameters (t0,t1,t2,t3; q, t=q^k) with V_K membership enforced:
    the t_i are real or occur in complex-conjugate pairs, and t_i t_j is
    never a real number >= 1."""

    t0: object
    t1: object
    t2: object
    t3: object
    q: object
    k: int = 1

    def __post_init__(self) -> None:
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0,1)")
        if self.k < 1:
            raise ValueError("k must be a positive integer (t = q^k)")
        ts = self.tuple4
        complex_ts = [t for t in ts if isinstance(t, complex) and t.imag != 0]
        for t in complex_ts:
            if not any(abs(s - t.conjugate()) == 0 for s in complex_ts if s is not t):
                raise ValueError("complex parameters must occur in conjugate pairs")
        for i in range(4):
            for j in range(i + 1, 4):
                prod = ts[i] * ts[j]
                if isinstance(prod, complex):
                    if prod.imag == 0 and prod.real >= 1:
                        raise ValueError("t_i t_j in [1,inf) violates V_K")
                elif prod >= 1:
                    raise ValueError("t_i t_j in [1,inf) violates V_K")

    @property
    def tuple4(self):
        return (self.t0, self.t1, self.t2, self.t3)

    @property
    def t(self):
        return self.q**self.k

    @property
    def is_exact(self) -> bool:
        return _is_exact(self.q) and all(_is_exact(t) for t in self.tuple4)


def _phi_pair(x, j, params: KoornwinderParams):
    """(phi_j^+(x), phi_j^-(x)); raises ZeroDivisionError on a pole."""
    q = params.q
    t = params.t
    xj = x[j]
    xj2 = xj * xj
    num_p = 1
    num_m = 1
    for ti in params.tuple4:
        num_p *= 1 - ti * xj
        num_m *= ti - xj
    den_p = (1 - xj2) * (1 - q * xj2)
    den_m = (1 - xj2) * (q - xj2)
    for i in range(len(x)):
        if i == j:
            continue
        xi = x[i]
        a = xi * xj
        b = xj / xi
        num_p *= (1 - t * a) * (1 - t * b)
        num_m *= (t - a) * (t - b)
        den = (1 - a) * (1 - b)
        den_p *= den
        den_m *= den
    return num_p / den_p, num_m / den_m


def dk_evaluate(p: LaurentPoly, x, params: KoornwinderParams):
    """(D_K p)(x) by direct rational-function evaluation."""
    q = params.q
    base = p.evaluate(x)
    total = 0
    for j in range(p.nvars):
        plus, minus = _phi_pair(x, j, params)
        up = list(x)
        up[j] = x[j] * q
        down = list(x)
        down[j] = x[j] / q
        total += plus * (p.evaluate(up) - base) + minus * (p.evaluate(down) - base)
    return total


def _pole_free(x, params: KoornwinderParams) -> bool:
    q = params.q
    exact = params.is_exact and all(_is_exact(v) for v in x)
    tol = 0 if exact else _POLE_TOL

    def ok(v):
        return abs(v) > tol

    for j in range(len(x)):
        xj2 = x[j] * x[j]
        if not (ok(1 - xj2) and ok(1 - q * xj2) and ok(q - xj2)):
            return False
        for i in range(j):
            a = x[i] * x[j]
            b = x[j] / x[i]
            if not (ok(1 - a) and ok(1 - b)):
                return False
    return True


def _candidate_points(l: int, count: int, exact: bool, seed: int):
    """Deterministic generic evaluation points away from operator poles and
    from each other's W-orbits."""
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        if exact:
            x = tuple(
                Fraction(rng.randrange(23, 400), rng.choice([7, 11, 13, 17, 19]))
                for _ in range(l)
            )
        else:
            x = tuple(1.1 + 2.3 * rng.random() for _ in range(l))
        if len(set(abs(v) for v in x)) < l:
            continue
        pts.append(x)
    return pts


def dk_support(p: LaurentPoly) -> list:
    """Dominance downset bounding the support of D_K p in the m~ basis."""
    coeffs = expand_in_basis(p, "W")
    support = set()
    for rep in coeffs:
        support.update(dominant_downset(rep))
    return sorted(support, key=lambda v: (sum(v), v))


def dk_apply(p: LaurentPoly, params: KoornwinderParams) -> LaurentPoly:
    """D_K p as a W-invariant Laurent polynomial.

    Interpolates on the dominance downset of p's support; two held-out
    points verify the support bound (exactly in rational mode).
    """
    if p.is_zero:
        return p
    support = dk_support(p)
    l = p.nvars
    exact = params.is_exact and p.domain == "rational"
    n_pts = len(support) + 2
    for attempt in range(25):
        pts = [
            x
            for x in _candidate_points(l, 3 * n_pts, exact, seed=911 + attempt)
            if _pole_free(x, params)
        ][:n_pts]
        if len(pts) < n_pts:
            continue
        basis_polys = [orbit_sum_W(rep, l) for rep in support]
        rows = [[bp.evaluate(x) for bp in basis_polys] for x in pts]
        rhs = [dk_evaluate(p, x, params) for x in pts]
        try:
            sol = solve_linear(
                [row for row in rows[: len(support)]], rhs[: len(support)]
            )
        except ZeroDivisionError:
            continue
        ok = True
        for row, target in zip(rows[len(support) :], rhs[len(support) :]):
            fit = sum(c * v for c, v in zip(sol, row))
            err = abs(fit - target)
            scale = 1 + abs(target)
            if (err != 0) if exact else (err > 1e-7 * scale):
                ok = False
                break
        if ok:
            coeffs = {rep: c for rep, c in zip(support, sol) if c != 0}
            return rebuild_from_basis(coeffs, "W", l)
    raise ArithmeticError("dk_apply interpolation failed: inconsistent support")


def dk_matrix(downset: list, params: KoornwinderParams, l: int) -> dict:
    """M[nu][mu] = coefficient of m~_nu in D_K m~_mu, over a downset."""
    index = {rep: i for i, rep in enumerate(downset)}
    matrix = {}
    for mu in downset:
        image = dk_apply(orbit_sum_W(mu, l), params)
        col = expand_in_basis(image, "W") if not image.is_zero else {}
        for nu, c in col.items():
            if nu not in index:
                raise ArithmeticError("D_K image escaped the dominance downset")
        matrix[mu] = col
    return matrix


def eigenvalue(lam, params: KoornwinderParams):
    """E_lambda = sum_j ( q^{-1} t0 t1 t2 t3 t^{2l-j-1}(q^{lam_j}-1)
    + t^{j-1}(q^{-lam_j}-1) )."""
    lam = tuple(lam)
    l = len(lam)
    q = params.q
    t = params.t
    t4 = params.t0 * params.t1 * params.t2 * params.t3
    total = 0
    qinv = (Fraction(1, 1) / q) if _is_exact(q) else 1 / q
    for j in range(1, l + 1):
        lj = lam[j - 1]
        total += qinv * t4 * t ** (2 * l - j - 1) * (q**lj - 1)
        total += t ** (j - 1) * (qinv**lj - 1)
    return total


def koornwinder_poly(lam, params: KoornwinderParams, mode: str = "triangular") -> LaurentPoly:
    """Monic P_lambda = m~_lambda + sum_{mu<lambda} c_mu m~_mu.

    "triangular" solves (D_K - E_lambda) P = 0 by back-substitution along
    the dominance downset (requires distinct eigenvalues there);
    "gram" orthogonalizes against lower orbit sums with the full measure.
    """
    lam = tuple(lam)
    l = len(lam)
    if mode == "gram":
        return _koornwinder_gram(lam, params)
    if mode != "triangular":
        raise ValueError("mode must be 'triangular' or 'gram'")
    downset = dominant_downset(lam)
    exact = params.is_exact
    e_lam = eigenvalue(lam, params)
    for mu in downset:
        if mu == lam:
            continue
        e_mu = eigenvalue(mu, params)
        gap = abs(e_lam - e_mu)
        if gap == 0 or (not exact and gap < _COLLISION_TOL * (1 + abs(e_lam))):
            raise EigenvalueCollisionError(
                f"E_{lam} collides with E_{mu}; use mode='gram'"
            )
    matrix = dk_matrix(downset, params, l)
    coeffs = {lam: 1}
    for mu in reversed(downset):
        if mu == lam:
            continue
        acc = 0
        for larger, c_larger in coeffs.items():
            acc += matrix[larger].get(mu, 0) * c_larger
        e_mu = matrix[mu].get(mu, 0)
        c_mu = acc / (e_lam - e_mu)
        if c_mu != 0:
            coeffs[mu] = c_mu
    return rebuild_from_basis(coeffs, "W", l)


def _koornwinder_gram(lam, params: KoornwinderParams) -> LaurentPoly:
    from .awmeasure import full_inner

    l = len(lam)
    downset = [mu for mu in dominant_downset(lam) if mu != lam]
    if not downset:
        return orbit_sum_W(lam, l)
    basis = [orbit_sum_W(mu, l) for mu in downset]
    top = orbit_sum_W(lam, l)
    gram = [
        [full_inner(bi, bj, params) for bj in basis] for bi in basis
    ]
    rhs = [-full_inner(top, bi, params) for bi in basis]
    sol = solve_linear(gram, rhs)
    out = top
    for c, b in zip(sol, basis):
        out = out + b.scale(c)
    return out


def check_symmetries(lam, params: KoornwinderParams) -> VerificationReport:
    """Coefficient-level parameter symmetry of P_lambda: invariance under
    permuting (t0..t3), and P(x;-t) = (-1)^{|lambda|} P(-x;t)."""
    import itertools

    lam = tuple(lam)
    with Timer() as timer:
        base = koornwinder_poly(lam, params)
        failures = []
        for perm in itertools.permutations(range(4)):
            ts = params.tuple4
            permuted = KoornwinderParams(
                ts[perm[0]], ts[perm[1]], ts[perm[2]], ts[perm[3]], params.q, params.k
            )
            if koornwinder_poly(lam, permuted) != base:
                failures.append(("permutation", perm))
                break
        negated = KoornwinderParams(
            -params.t0, -params.t1, -params.t2, -params.t3, params.q, params.k
        )
        flip = koornwinder_poly(lam, negated)
        sign = -1 if sum(lam) % 2 else 1
        if flip != base.negate_variables().scale(sign):
            failures.append(("sign-flip", None))
    exact = params.is_exact
    return VerificationReport(
        identity="koornwinder-parameter-symmetry",
        params={"lambda": list(lam), "q": str(params.q), "k": params.k},
        exact=exact,
        residual=None if exact else (0.0 if not failures else 1.0),
        runtime_ms=timer.ms,
        passed=not failures,
        detail={"failures": failures},
    )
