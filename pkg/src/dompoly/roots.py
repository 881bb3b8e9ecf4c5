"""Root analysis: multiprecision complex roots with residual bounds, exact
real-root isolation by Sturm sequences over the rationals, and exact integer
root detection.

Exactness split: anything feeding a count ("how many real roots", "is -2 a
root") goes through integer/rational arithmetic and is certified; complex
root positions come from a simultaneous-iteration solver and carry a
normalized residual bound instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .polynomials import (
    DEFAULT_PRECISION,
    MIN_PRECISION,
    IntPolynomial,
    exact_div,
    poly_gcd,
    pseudo_rem,
)

DEFAULT_TOL = 1e-20
DEFAULT_INTERVAL_WIDTH = Fraction(1, 2 ** 40)

_TRIAL_DIVISION_LIMIT = 10 ** 12


class ConvergenceError(RuntimeError):
    """Aberth iteration failed to reach the residual tolerance.

    `best` holds the last iterates as (root, residual) pairs.
    """

    def __init__(self, message: str, best: list):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class ComplexRoot:
    value: mpmath.mpc
    residual: float
    multiplicity: int


@dataclass(frozen=True)
class RootSet:
    """All roots of an integer polynomial.

    complex_roots lists the distinct nonzero roots (numerical, with residual
    bounds and exact multiplicities).  real_intervals isolates the distinct
    nonzero real roots in disjoint rational intervals, collapsed to
    lo == hi for roots found exactly.  integer_roots is exact and includes
    0 whenever zero_multiplicity >= 1.
    """

    degree: int
    zero_multiplicity: int
    complex_roots: tuple[ComplexRoot, ...]
    real_intervals: tuple[tuple[Fraction, Fraction], ...]
    integer_roots: tuple[int, ...]

    @property
    def nonzero_root_count(self) -> int:
        """Number of nonzero roots counted with multiplicity."""
        return sum(r.multiplicity for r in self.complex_roots)


# -- square-free machinery ----------------------------------------------------


def _div_roots(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Exact quotient a/b up to a constant: primitive part of the rational
    quotient.  Content is discarded deliberately; only roots matter here."""
    q = _rational_exact_div(a, b)
    _, prim = q.content_and_primitive()
    return prim


def _rational_exact_div(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    try:
        return exact_div(a, b)
    except ValueError:
        # divisible over Q but not Z: clear the quotient's denominators
        from math import lcm

        rem = [Fraction(c) for c in a.coeffs]
        dq = b.degree
        out = [Fraction(0)] * (a.degree - dq + 1)
        for k in range(a.degree - dq, -1, -1):
            coef = rem[dq + k] / b.coeffs[-1]
            out[k] = coef
            if coef:
                for i, cb in enumerate(b.coeffs):
                    rem[i + k] -= coef * cb
        if any(rem):
            raise ValueError("not divisible") from None
        denom = lcm(*(c.denominator for c in out)) if out else 1
        return IntPolynomial(int(c * denom) for c in out)


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """Primitive polynomial with the same roots as p, all simple."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return IntPolynomial.one()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        _, prim = p.content_and_primitive()
        return prim
    return _div_roots(p, g)


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Distinct-root factors with multiplicities: p ~ prod f_k^k up to a
    constant.  Factors are primitive and pairwise coprime."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    _, c = p.content_and_primitive()
    if c.degree == 0:
        return []
    chain = [c]
    while chain[-1].degree >= 1:
        chain.append(poly_gcd(chain[-1], chain[-1].derivative()))
    w = [_div_roots(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    factors = []
    for k in range(len(w)):
        f = w[k] if k == len(w) - 1 else _div_roots(w[k], w[k + 1])
        if f.degree >= 1:
            factors.append((f, k + 1))
    return factors


# -- Sturm sequences ----------------------------------------------------------


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Canonical Sturm sequence of p over Z[x].

    Remainders are scaled by positive constants only (content-stripped
    positively-scaled pseudo-remainders), which preserves every sign
    evaluation exactly.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    _, first = p.content_and_primitive()
    chain = [first]
    d = first.derivative()
    if d.is_zero:
        return chain
    _, d = d.content_and_primitive()
    chain.append(d)
    while True:
        r = pseudo_rem(chain[-2], chain[-1])
        if r.is_zero:
            return chain
        _, r = r.content_and_primitive()
        chain.append(-r)


def _sign_at(p: IntPolynomial, point: Fraction) -> int:
    """Exact sign of p(point) via homogeneous integer Horner."""
    num, den = point.numerator, point.denominator
    acc = 0
    dpow = 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a * b < 0)


class _SturmContext:
    """Sturm chain of a square-free polynomial plus memoized variation counts."""

    def __init__(self, square_free: IntPolynomial):
        self.poly = square_free
        self.chain = sturm_chain(square_free)
        self._memo: dict[Fraction, int] = {}
        self._sign_memo: dict[Fraction, int] = {}

    def variations_at(self, point: Fraction) -> int:
        if point not in self._memo:
            self._memo[point] = _variations(
                [_sign_at(q, point) for q in self.chain])
        return self._memo[point]

    def sign_at(self, point: Fraction) -> int:
        if point not in self._sign_memo:
            self._sign_memo[point] = _sign_at(self.poly, point)
        return self._sign_memo[point]

    def count_half_open(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in (lo, hi]."""
        return self.variations_at(lo) - self.variations_at(hi)

    def count_open(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in the open interval (lo, hi)."""
        n = self.count_half_open(lo, hi)
        if self.sign_at(hi) == 0:
            n -= 1
        return n


def root_bound_pow2(p: IntPolynomial) -> int:
    """A power of two B with every root of p strictly inside |z| < B.

    Uses the Fujiwara-style bound 2*max_k |c_{d-k}/c_d|^(1/k), rounded up to
    a power of two by pure integer comparisons, then widened until +-B are
    verifiably not roots.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("root bound needs degree >= 1")
    d = p.degree
    lead = abs(p.coeffs[-1])
    e = 1
    while True:
        if all(abs(p.coeffs[d - k]) <= lead << (k * (e - 1)) for k in range(1, d + 1)):
            break
        e += 1
    b = 1 << e
    while p.eval_int(b) == 0 or p.eval_int(-b) == 0:
        b <<= 1
    return b


def real_roots_exact(p: IntPolynomial,
                     width: Fraction = DEFAULT_INTERVAL_WIDTH) -> list[tuple[Fraction, Fraction]]:
    """Isolate every distinct real root of p in disjoint rational intervals.

    Returned sorted ascending; an interval with lo == hi is an exact
    rational root (rational roots hit by a bisection midpoint collapse).
    Each open interval (lo, hi) contains exactly one real root, has
    p(lo) != 0 != p(hi), and width <= `width`.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has every point as a root")
    if p.degree < 1:
        return []
    ctx = _SturmContext(square_free_part(p))
    bound = Fraction(root_bound_pow2(ctx.poly))
    found: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, ctx.count_half_open(-bound, bound))]
    while stack:
        lo, hi, count = stack.pop()
        if count == 0:
            continue
        if count == 1 and ctx.sign_at(lo) != 0 and ctx.sign_at(hi) != 0:
            found.append(_refine(ctx, lo, hi, width))
            continue
        mid = (lo + hi) / 2
        if ctx.sign_at(mid) == 0:
            found.append((mid, mid))
            left = ctx.count_half_open(lo, mid) - 1
        else:
            left = ctx.count_half_open(lo, mid)
        stack.append((lo, mid, left))
        stack.append((mid, hi, count - left - (1 if ctx.sign_at(mid) == 0 else 0)))
    found.sort(key=lambda iv: iv[0])
    return found


def _refine(ctx: _SturmContext, lo: Fraction, hi: Fraction,
            width: Fraction) -> tuple[Fraction, Fraction]:
    sign_lo = ctx.sign_at(lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        s = ctx.sign_at(mid)
        if s == 0:
            return (mid, mid)
        if s * sign_lo < 0:
            hi = mid
        else:
            lo = mid
    return (lo, hi)


def count_real_roots_in(p: IntPolynomial, a, b) -> int:
    """Exact number of distinct real roots of p in the open interval (a, b).

    Endpoints that happen to be roots are excluded from the count, which
    resolves the endpoint ambiguity deterministically.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        if a == b:
            return 0
        raise ValueError("need a < b")
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree < 1:
        return 0
    ctx = _SturmContext(square_free_part(p))
    return ctx.count_open(a, b)


# -- integer roots -------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def integer_roots(p: IntPolynomial) -> list[int]:
    """All integer roots of p, each verified by exact evaluation.

    Candidates are the divisors of the least nonzero coefficient; 0 is
    included when x divides p.  If that coefficient is too large to scan by
    trial division, candidates come from the exact real-root isolating
    intervals instead (an integer root always lies in one).
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    k = p.valuation
    roots = [0] if k >= 1 else []
    q = IntPolynomial(p.coeffs[k:])
    if q.degree < 1:
        return roots
    trailing = q.coeffs[0]
    if abs(trailing) <= _TRIAL_DIVISION_LIMIT:
        candidates = set()
        for d in _divisors(trailing):
            candidates.add(d)
            candidates.add(-d)
    else:
        candidates = set()
        for lo, hi in real_roots_exact(q):
            candidates.update(
                r for r in {_ceil(lo), _floor(hi)} if lo <= r <= hi)
    for r in sorted(candidates):
        if q.eval_int(r) == 0:
            roots.append(r)
    return sorted(roots)


def _ceil(f: Fraction) -> int:
    return -((-f.numerator) // f.denominator)


def _floor(f: Fraction) -> int:
    return f.numerator // f.denominator


# -- complex roots (Aberth-Ehrlich) ---------------------------------------------


def all_roots(p: IntPolynomial, precision: int = DEFAULT_PRECISION,
              tol: float = DEFAULT_TOL) -> RootSet:
    """Every root of p: the x^k factor handled exactly, remaining roots by
    simultaneous iteration on each square-free factor, Newton-polished, with
    certified real data alongside.

    Residuals are |p(z)| / (max|coeff| * max(1,|z|)^deg).  Initialization is
    deterministic (fixed spiral of angles on a circle scaled by a power-of-two
    root bound), so repeated runs give identical output.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION}")
    k0 = p.valuation
    cofactor = IntPolynomial(p.coeffs[k0:])
    complex_roots: list[ComplexRoot] = []
    if cofactor.degree >= 1:
        for factor, mult in square_free_decomposition(cofactor):
            for z in _aberth_roots(factor, precision, tol):
                complex_roots.append(ComplexRoot(
                    value=z,
                    residual=_residual(p, z, precision),
                    multiplicity=mult,
                ))
    complex_roots.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    intervals = tuple((lo, hi) for lo, hi in real_roots_exact(p)
                      if not (lo == 0 == hi))
    return RootSet(
        degree=p.degree,
        zero_multiplicity=k0,
        complex_roots=tuple(complex_roots),
        real_intervals=intervals,
        integer_roots=tuple(integer_roots(p)),
    )


def _residual(p: IntPolynomial, z: mpmath.mpc, precision: int) -> float:
    norm = max(abs(c) for c in p.coeffs)
    with mpmath.workprec(precision + 32):
        value = abs(p.eval_complex(z, precision + 32))
        scale = mpmath.mpf(norm) * max(1.0, abs(z)) ** p.degree
        return float(value / scale)


def _aberth_roots(f: IntPolynomial, precision: int, tol: float,
                  max_iter: int = 400) -> list[mpmath.mpc]:
    """Roots of a square-free integer polynomial, all simple."""
    d = f.degree
    width = max(abs(c).bit_length() for c in f.coeffs)
    prec = max(precision, width + 32)
    with mpmath.workprec(prec):
        coeffs = [mpmath.mpf(c) for c in f.coeffs]
        dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]
        if d == 1:
            return [mpmath.mpc(-mpmath.mpf(f.coeffs[0]) / f.coeffs[1])]
        radius = mpmath.mpf(root_bound_pow2(f)) / 2
        roots = [
            radius * (1 + mpmath.mpf(3 * j) / (7 * d))
            * mpmath.expjpi(mpmath.mpf(2 * j) / d + mpmath.mpf("0.125"))
            for j in range(d)
        ]
        stop = mpmath.mpf(2) ** (-(prec * 3 // 5))
        tiny = mpmath.mpf(2) ** (-prec * 4)
        converged = False
        for _ in range(max_iter):
            max_step = mpmath.mpf(0)
            for j in range(d):
                z = roots[j]
                pz = _horner(coeffs, z)
                dpz = _horner(dcoeffs, z)
                if dpz == 0:
                    roots[j] = z + stop
                    max_step = max(max_step, abs(stop))
                    continue
                newton = pz / dpz
                repulsion = mpmath.mpc(0)
                for i in range(d):
                    if i != j:
                        delta = z - roots[i]
                        if abs(delta) < tiny:
                            delta += tiny
                        repulsion += 1 / delta
                denom = 1 - newton * repulsion
                step = newton if denom == 0 else newton / denom
                roots[j] = z - step
                max_step = max(max_step, abs(step) / max(1, abs(roots[j])))
            if max_step < stop:
                converged = True
                break
        # Newton polish at full precision
        for j in range(d):
            for _ in range(4):
                pz = _horner(coeffs, roots[j])
                dpz = _horner(dcoeffs, roots[j])
                if dpz == 0:
                    break
                roots[j] = roots[j] - pz / dpz
        norm = max(abs(c) for c in coeffs)
        residuals = [
            float(abs(_horner(coeffs, z)) / (norm * max(1.0, abs(z)) ** d))
            for z in roots
        ]
        if max(residuals) > tol:
            state = "stalled" if not converged else "converged but inaccurate"
            raise ConvergenceError(
                f"Aberth iteration {state} (max residual {max(residuals):.3e} "
                f"> tol {tol:.3e})",
                best=list(zip(roots, residuals)))
        return [mpmath.mpc(z) for z in roots]


def _horner(coeffs, z):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc
