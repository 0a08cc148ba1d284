"""Sparse multivariate Laurent polynomials and symmetric bases.

A polynomial is a map from dense exponent tuples (possibly negative entries)
to coefficients.  Coefficients are exact rationals (``Fraction``/``int``) or
complex floats; the two domains are not mixed inside one polynomial.  On top
of the ring live the symmetric bases used everywhere else: hyperoctahedral
orbit sums m~_lambda, monomial symmetric m_lambda, elementary symmetric e_r,
and Schur polynomials s_lambda, together with the triangular basis
conversions along dominance order.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from functools import lru_cache

from .weights import (
    WeightVector,
    dominant_representative,
    weyl_orbit_tuples,
)

MAX_VARS = 8


def _is_exact_scalar(c) -> bool:
    return isinstance(c, (int, Fraction))


class LaurentPoly:
    """Sparse Laurent polynomial: dict from exponent tuple to coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        if not 1 <= nvars <= MAX_VARS:
            raise ValueError(f"variable count must be in [1,{MAX_VARS}]")
        self.nvars = nvars
        clean = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError("exponent arity mismatch")
            if coef != 0:
                clean[tuple(int(e) for e in exp)] = coef
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp, coef=1) -> "LaurentPoly":
        return cls(len(exp), {tuple(exp): coef})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "LaurentPoly":
        exp = [0] * nvars
        exp[i] = 1
        return cls(nvars, {tuple(exp): 1})

    # -- basic queries ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def domain(self) -> str:
        return (
            "rational"
            if all(_is_exact_scalar(c) for c in self.terms.values())
            else "complex"
        )

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if self.is_zero:
            return "LaurentPoly(0)"
        parts = [
            f"{coef!r}*x^{exp}"
            for exp, coef in sorted(self.terms.items())
        ]
        return "LaurentPoly(" + " + ".join(parts) + ")"

    # -- arithmetic -------------------------------------------------------
    def _check_arity(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return self + LaurentPoly.const(self.nvars, other)
        self._check_arity(other)
        out = dict(self.terms)
        for exp, coef in other.terms.items():
            out[exp] = out.get(exp, 0) + coef
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        self._check_arity(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if c == 0:
            return LaurentPoly.zero(self.nvars)
        return LaurentPoly(self.nvars, {e: c * co for e, co in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- evaluation and transforms ---------------------------------------
    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        total = 0
        for exp, coef in self.terms.items():
            val = coef
            for x, e in zip(point, exp):
                if e >= 0:
                    val *= x**e
                else:
                    val *= (1 / x) ** (-e) if not _is_exact_scalar(x) else Fraction(1, 1) / x**(-e)
            total += val
        return total

    def substitute_scaling(self, factors):
        """x_i -> factors[i] * x_i applied to every monomial."""
        if len(factors) != self.nvars:
            raise ValueError("factor arity mismatch")
        out = {}
        for exp, coef in self.terms.items():
            c = coef
            for f, e in zip(factors, exp):
                if e >= 0:
                    c *= f**e
                else:
                    c *= (Fraction(1, 1) / f) ** (-e) if _is_exact_scalar(f) else (1 / f) ** (-e)
            out[exp] = out.get(exp, 0) + c
        return LaurentPoly(self.nvars, out)

    def negate_variables(self):
        """x_i -> -x_i for every variable."""
        out = {}
        for exp, coef in self.terms.items():
            sign = -1 if sum(exp) % 2 else 1
            out[exp] = sign * coef
        return LaurentPoly(self.nvars, out)

    def map_coefficients(self, fn):
        return LaurentPoly(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- serialization ----------------------------------------------------
    def to_json_dict(self) -> dict:
        domain = self.domain
        terms = []
        for exp, coef in sorted(self.terms.items()):
            if domain == "rational":
                encoded = str(Fraction(coef))
            else:
                z = complex(coef)
                encoded = [z.real, z.imag]
            terms.append({"exp": list(exp), "coef": encoded})
        return {"vars": self.nvars, "domain": domain, "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json_dict(cls, data: dict) -> "LaurentPoly":
        terms = {}
        for t in data["terms"]:
            coef = t["coef"]
            if isinstance(coef, str):
                value = Fraction(coef)
            else:
                value = complex(coef[0], coef[1])
            terms[tuple(t["exp"])] = value
        return cls(data["vars"], terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_dict(json.loads(text))


# -- symmetric bases ------------------------------------------------------

def orbit_sum_W(lam, l: int) -> LaurentPoly:
    """m~_lambda = sum of x^mu over the signed-permutation orbit of lambda."""
    lam = tuple(lam)
    if len(lam) != l:
        raise ValueError("weight length mismatch")
    if dominant_representative(lam) != lam:
        raise ValueError("orbit_sum_W requires a dominant BC weight")
    return LaurentPoly(l, {mu: 1 for mu in weyl_orbit_tuples(lam)})


def monomial_symmetric(lam, l: int) -> LaurentPoly:
    """m_lambda = sum of x^mu over the S_l-orbit of lambda (entries >= 0)."""
    lam = tuple(lam)
    if len(lam) != l:
        raise ValueError("weight length mismatch")
    if any(e < 0 for e in lam) or tuple(sorted(lam, reverse=True)) != lam:
        raise ValueError("monomial_symmetric requires a dominant partition")
    return LaurentPoly(l, {mu: 1 for mu in set(itertools.permutations(lam))})


def elementary_symmetric(r: int, l: int) -> LaurentPoly:
    """e_r = m_{(1^r)}."""
    if not 1 <= r <= l:
        raise ValueError("r must satisfy 1 <= r <= l")
    return monomial_symmetric((1,) * r + (0,) * (l - r), l)


@lru_cache(maxsize=None)
def _schur_partition(lam: tuple, n: int):
    """Schur polynomial of a partition (weakly decreasing, nonnegative) in n
    variables, as a plain dict of exponent tuples.

    Computed by the single-variable branching recursion
    s_lambda(z_1..z_n) = sum over interlacing mu of
    s_mu(z_1..z_{n-1}) z_n^{|lambda|-|mu|},
    which is division-free and exact over the integers.
    """
    if n == 0:
        return {(): 1}
    if len(lam) > n:
        raise ValueError("partition longer than variable count")
    lam = lam + (0,) * (n - len(lam))
    out = {}
    lam_total = sum(lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(n - 1)]
    for mu in itertools.product(*ranges):
        if any(mu[i] < mu[i + 1] for i in range(n - 2)):
            continue
        sub = _schur_partition(tuple(e for e in mu if e) or (), n - 1)
        deg = lam_total - sum(mu)
        for exp, coef in sub.items():
            full = exp + (deg,)
            out[full] = out.get(full, 0) + coef
    return out


def schur(lam, n: int) -> LaurentPoly:
    """Schur polynomial s_lambda(z_1..z_n); negative entries are handled by
    the twist s_lambda = z^{-m Lambda_n} s_{lambda + m Lambda_n}."""
    lam = tuple(int(e) for e in lam)
    if len(lam) != n:
        raise ValueError("weight length must equal the variable count")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError("schur requires a dominant weight")
    m = max(0, -lam[-1])
    shifted = tuple(e + m for e in lam)
    base = _schur_partition(tuple(e for e in shifted if e) or (), n)
    if m == 0:
        return LaurentPoly(n, dict(base))
    return LaurentPoly(
        n, {tuple(e - m for e in exp): coef for exp, coef in base.items()}
    )


def schur_dimension(lam, n: int) -> int:
    """dim of the GL_n irreducible with highest weight lam (Weyl formula)."""
    lam = tuple(lam)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


# -- triangular basis conversions ----------------------------------------

def _extension_key(rep: tuple):
    """Fixed linear extension of dominance: total degree, then lex."""
    return (sum(rep), rep)


def _leading_orbit(p: LaurentPoly, kind: str):
    """Dominant representative of the maximal orbit in the support."""
    best = None
    for exp in p.terms:
        rep = dominant_representative(exp) if kind == "W" else tuple(
            sorted(exp, reverse=True)
        )
        if best is None or _extension_key(rep) > _extension_key(best):
            best = rep
    return best


def _orbit_basis_element(rep: tuple, kind: str, l: int) -> LaurentPoly:
    return orbit_sum_W(rep, l) if kind == "W" else monomial_symmetric(rep, l)


def expand_in_basis(p: LaurentPoly, kind: str) -> dict:
    """Coefficients of p in the orbit-sum basis (kind "W": m~_lambda under
    signed permutations; kind "S": m_lambda under permutations).

    Triangular elimination along the fixed linear extension of dominance.
    Raises if p is not invariant under the stated group.
    """
    if kind not in ("W", "S"):
        raise ValueError("kind must be 'W' or 'S'")
    if kind == "S" and any(e < 0 for exp in p.terms for e in exp):
        raise ValueError("negative exponents in an S-symmetric expansion")
    l = p.nvars
    coeffs = {}
    rem = p
    guard = len(p.terms) + 1
    for _ in range(guard):
        if rem.is_zero:
            return coeffs
        rep = _leading_orbit(rem, kind)
        c = rem.terms.get(rep)
        basis = _orbit_basis_element(rep, kind, l)
        if c is None or any(rem.terms.get(e) != c for e in basis.terms):
            raise ValueError("polynomial is not invariant under the group")
        coeffs[rep] = c
        rem = rem - basis.scale(c)
    raise ValueError("polynomial is not invariant under the group")


def rebuild_from_basis(coeffs: dict, kind: str, l: int) -> LaurentPoly:
    out = LaurentPoly.zero(l)
    for rep, c in coeffs.items():
        out = out + _orbit_basis_element(tuple(rep), kind, l).scale(c)
    return out


def is_invariant(p: LaurentPoly, kind: str) -> bool:
    try:
        expand_in_basis(p, kind)
        return True
    except ValueError:
        return False


def to_generator_coords(p: LaurentPoly, kind: str) -> LaurentPoly:
    """The unique polynomial P^ in y_1..y_l with P^(g_1(x),..,g_l(x)) = p(x),
    where g_r = m~_{(1^r)} (kind "W") or e_r = m_{(1^r)} (kind "S").

    Iterated leading-term elimination: the leading dominant weight lambda
    determines the generator exponents a_r = lambda_r - lambda_{r+1}, whose
    generator monomial is again monic at lambda.
    """
    l = p.nvars
    generators = [
        _orbit_basis_element((1,) * r + (0,) * (l - r), kind, l)
        for r in range(1, l + 1)
    ]
    out = {}
    rem = p
    for _ in range(10_000):
        if rem.is_zero:
            return LaurentPoly(l, out)
        rep = _leading_orbit(rem, kind)
        if rep[-1] < 0:
            raise ValueError("leading weight not a partition; not invariant")
        c = rem.terms.get(rep)
        if c is None:
            raise ValueError("polynomial is not invariant under the group")
        a = tuple(
            rep[r] - (rep[r + 1] if r + 1 < l else 0) for r in range(l)
        )
        mono = LaurentPoly.const(l, c)
        for g, e in zip(generators, a):
            if e:
                mono = mono * g**e
        rem = rem - mono
        out[a] = out.get(a, 0) + c
    raise ValueError("generator-coordinate elimination failed to terminate")


def from_generator_coords(phat: LaurentPoly, kind: str) -> LaurentPoly:
    """Evaluate P^ at the generators, returning the symmetric polynomial."""
    l = phat.nvars
    generators = [
        _orbit_basis_element((1,) * r + (0,) * (l - r), kind, l)
        for r in range(1, l + 1)
    ]
    out = LaurentPoly.zero(l)
    for a, c in phat.terms.items():
        if any(e < 0 for e in a):
            raise ValueError("generator exponents must be nonnegative")
        mono = LaurentPoly.const(l, c)
        for g, e in zip(generators, a):
            if e:
                mono = mono * g**e
        out = out + mono
    return out
