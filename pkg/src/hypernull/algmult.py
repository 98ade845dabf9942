"""Exact nullity (algebraic multiplicity of zero) of k-uniform loose hyperpaths.

The characteristic polynomial of the n-edge k-path factors into a pure power
of the spectral variable, a power of the previous path's polynomial, and a
product of rational factors built by iterating

    x  ->  lam^k / (lam^k - x)

starting from 1.  Only zero-root multiplicities matter here, so the iterates
are carried as reduced integer rational functions and everything else is
bookkeeping: the s-th factor appears with a closed-form integer multiplicity,
summing the factors' zero-root contributions gives an additive recurrence for
the nullity D(n, k), and telescoping that recurrence yields a closed form in
u = (k-1)^(k-1) and v = k^(k-2).  All arithmetic is exact; the two exact
divisions in the closed forms must come out to integers, which doubles as a
correctness check.

Polynomials in the spectral variable are trimmed tuples of ints, index =
power; the zero polynomial is the empty tuple.  Reduction of a rational
function cancels the shared power of the variable plus integer content only
(never a full polynomial gcd): that normal form mirrors the way the iterates
are actually simplified and is enough to read off zero-root multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

IntPoly = tuple[int, ...]


def poly_trim(coeffs) -> IntPoly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_shift(p: IntPoly, k: int) -> IntPoly:
    return (0,) * k + tuple(p) if p else ()


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    size = max(len(a), len(b))
    return poly_trim(
        (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)
    )


def poly_content(p: IntPoly) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def poly_valuation(p: IntPoly) -> int:
    """Zero-root multiplicity: index of the first nonzero coefficient."""
    if not p:
        raise ValueError("the zero polynomial has no zero-root multiplicity")
    return next(i for i, c in enumerate(p) if c)


@dataclass(frozen=True)
class RationalFn:
    """Reduced ratio of integer polynomials in the spectral variable."""

    num: IntPoly
    den: IntPoly


def make_rational(num, den) -> RationalFn:
    """Normalize: cancel shared variable powers and integer content, and make
    the denominator's leading coefficient positive."""
    num, den = poly_trim(num), poly_trim(den)
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return RationalFn((), (1,))
    low = min(poly_valuation(num), poly_valuation(den))
    if low:
        num, den = num[low:], den[low:]
    g = gcd(poly_content(num), poly_content(den))
    if g > 1:
        num = tuple(c // g for c in num)
        den = tuple(c // g for c in den)
    if den[-1] < 0:
        num = tuple(-c for c in num)
        den = tuple(-c for c in den)
    return RationalFn(num, den)


def zero_multiplicity(r: RationalFn) -> int:
    """Zero-root multiplicity of num minus that of den (may be negative)."""
    if not r.num:
        raise ValueError("the zero function has no zero-root multiplicity")
    return poly_valuation(r.num) - poly_valuation(r.den)


def _check_k(k: int) -> None:
    if k < 3:
        raise ValueError(f"uniformity must be >= 3, got {k}")


def _apply_map(r: RationalFn, k: int) -> RationalFn:
    # x -> lam^k / (lam^k - x) on r = num/den
    lifted = poly_shift(r.den, k)
    return make_rational(lifted, poly_sub(lifted, r.num))


def mobius_iterate(s: int, k: int) -> RationalFn:
    """The s-th iterate of x -> lam^k/(lam^k - x) applied to 1, reduced.

    s = -1 gives the zero function and s = 0 gives 1; each further step is one
    application of the map with immediate renormalization.
    """
    _check_k(k)
    if s < -1:
        raise ValueError(f"iteration index must be >= -1, got {s}")
    if s == -1:
        return RationalFn((), (1,))
    r = RationalFn((1,), (1,))
    for _ in range(s):
        r = _apply_map(r, k)
    return r


def lambda_power_minus(r: RationalFn, k: int) -> RationalFn:
    """The reduced rational function lam^k - r."""
    _check_k(k)
    return make_rational(poly_sub(poly_shift(r.den, k), r.num), r.den)


def nullity_bases(k: int) -> tuple[int, int]:
    """(k-1)^(k-1) and k^(k-2), the bases of the closed nullity formulas."""
    _check_k(k)
    return (k - 1) ** (k - 1), k ** (k - 2)


def factor_multiplicity(n: int, k: int, s: int) -> int:
    """Exponent of the s-th rational factor in the n-edge product formula."""
    _check_k(k)
    if not 0 <= s <= n:
        raise ValueError(f"s must lie in [0, {n}], got {s}")
    u, v = nullity_bases(k)
    if s == n:
        return v**n
    return v**s * (u - v) * u ** (n - s - 1)


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q


def product_zero_multiplicity(n: int, k: int) -> int:
    """Zero-root multiplicity of the full rational product, in closed form."""
    _check_k(k)
    if n < 2:
        raise ValueError(f"product term is defined for n >= 2, got {n}")
    u, v = nullity_bases(k)
    return -(k - 1) * u**n + _exact_div(k * (u ** (n + 1) - (-v) ** (n + 1)), u + v)


def product_zero_multiplicity_by_factors(n: int, k: int) -> int:
    """Same quantity, summed factor by factor from the actual iterates.

    Each factor is lam^(1-k) * (lam^k - iterate(s-1)), so it contributes its
    exponent times (zero-mult of that difference minus k-1).
    """
    _check_k(k)
    if n < 2:
        raise ValueError(f"product term is defined for n >= 2, got {n}")
    total = 0
    r = mobius_iterate(-1, k)
    for s in range(n + 1):
        d = zero_multiplicity(lambda_power_minus(r, k))
        total += factor_multiplicity(n, k, s) * (d - (k - 1))
        r = _apply_map(r, k)
    return total


def nullity_recursive(n: int, k: int) -> int:
    """Nullity via the additive recurrence over path length."""
    _check_k(k)
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    u, v = nullity_bases(k)
    value = k * (u - v)
    for m in range(2, n + 1):
        value = (k - 2) * u**m + u * value + product_zero_multiplicity(m, k)
    return value


def nullity_closed_form(n: int, k: int) -> int:
    """Nullity in closed form; the division by (u+v)^2 must be exact."""
    _check_k(k)
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    u, v = nullity_bases(k)
    numerator = u**n * (
        (n * k - n + 1) * u * u
        + (n * k - 2 * n + 2) * u * v
        - (k + n - 1) * v * v
    ) + k * (-v) ** (n + 2)
    return _exact_div(numerator, (u + v) ** 2)


def asymptotic_ratio(n: int, k: int) -> Fraction:
    """The exact ratio of the nullity to n (k-1)^(n(k-1)+1)."""
    _check_k(k)
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    return Fraction(nullity_closed_form(n, k), n * (k - 1) ** (n * (k - 1) + 1))


def nullity_lower_bound_holds(n: int) -> bool:
    """Exact check of 7 * D(n, 3) >= 4^n (5n + 3), stated for n >= 12."""
    if n < 12:
        raise ValueError(f"the lower bound is stated for n >= 12, got {n}")
    return 7 * nullity_closed_form(n, 3) >= 4**n * (5 * n + 3)
