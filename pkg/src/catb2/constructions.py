"""Constructions for the candidate derivation basis of Cat(B2, m).

The family is indexed by (i, m) with p = 2m + i.  The integral polynomial

    f[i,m](x, y) = integral_0^x t^(2i) (t^2-x^2)^m (t^2-y^2)^m dt
                 = sum_{0<=k<=m} c[i,m,k] x^(2p-2k+1) y^(2k)

is deformed into its discrete analogue by replacing each monomial with
falling-factorial products of shifted variables:

    ft[i,m](x, y) = sum_{0<=k<=m} c[i,m,k] (x+p-k)_(2p-2k+1)
                                           (y+p-m)_k (y+m-p+k-1)_k.

The derivation ft[i,m](x,y)*dx + ft[i,m](y,x)*dy is the basis candidate;
everything else in this module is the expansion, recurrence, half-integer
evaluation, and determinant machinery that the checks in `checks` verify.

All functions are pure; the memo caches only short-circuit recomputation.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .poly import (
    BiPoly,
    LinearForm,
    UniPoly,
    UniRatFunc,
    XMY_FORM,
    XPY_FORM,
    ff_linear_poly,
    ff_poly,
    ff_unipoly,
    ff_unirat,
)
from .rational import FamilyIndex, beta_half, binomial, falling_factorial

_CACHES: list = []


def _cached(fn):
    wrapped = functools.lru_cache(maxsize=None)(fn)
    _CACHES.append(wrapped)
    return wrapped


def clear_caches() -> None:
    """Drop all memoized values (used by mutation/soundness tests)."""
    for fn in _CACHES:
        fn.cache_clear()


def _half(n: int) -> Fraction:
    """The half-integer n + 1/2."""
    return Fraction(2 * n + 1, 2)


@_cached
def integral_poly_coeff(i: int, m: int, k: int) -> Fraction:
    """Coefficient c[i,m,k] of x^(2p-2k+1) y^(2k) in the integral polynomial.

    Equals (1/2) binom(m, m-k) (-1)^(m-k) B(m-k+i+1/2, m+1).
    """
    if i < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if not 0 <= k <= m:
        raise ValueError("k must satisfy 0 <= k <= m")
    u = m - k
    sign = -1 if u % 2 else 1
    return Fraction(sign, 2) * binomial(m, u) * beta_half(u, i, m)


def integral_poly(i: int, m: int) -> BiPoly:
    """f[i,m] by direct term-wise integration (independent expansion route).

    Expands (t^2-x^2)^m (t^2-y^2)^m by two binomial theorems and integrates
    each t power via integral_0^x t^(2J) dt = x^(2J+1)/(2J+1).
    """
    idx = FamilyIndex(i, m)
    acc = BiPoly.zero()
    for a in range(m + 1):
        for b in range(m + 1):
            sign = -1 if (2 * m - a - b) % 2 else 1
            c = Fraction(sign * binomial(m, a) * binomial(m, b), 2 * (i + a + b) + 1)
            acc = acc + BiPoly.monomial(c, 2 * (m - a) + 2 * (i + a + b) + 1, 2 * (m - b))
    assert acc.degree() == 4 * idx.m + 2 * idx.i + 1
    return acc


def poly_from_coeffs(i: int, m: int) -> BiPoly:
    """f[i,m] assembled from its closed-form coefficients c[i,m,k]."""
    p = FamilyIndex(i, m).p
    acc = BiPoly.zero()
    for k in range(m + 1):
        acc = acc + BiPoly.monomial(integral_poly_coeff(i, m, k), 2 * p - 2 * k + 1, 2 * k)
    return acc


@_cached
def deformed_poly(i: int, m: int) -> BiPoly:
    """The falling-factorial deformation ft[i,m](x, y)."""
    p = FamilyIndex(i, m).p
    acc = BiPoly.zero()
    for k in range(m + 1):
        term = ff_poly("x", p - k, 2 * p - 2 * k + 1)
        term = term * ff_poly("y", p - m, k)
        term = term * ff_poly("y", m - p + k - 1, k)
        acc = acc + term * integral_poly_coeff(i, m, k)
    return acc


@_cached
def deformed_term(i: int, m: int, u: int) -> BiPoly:
    """Summand u of the expansion 2*ft[i,m] = sum_{0<=u<=m} of these.

    Equals binom(m,u) (-1)^u B(u+i+1/2, m+1) (x+m+i+u)_(2m+2i+2u+1)
    (y+m+i)_(m-u) (y-i-u-1)_(m-u).
    """
    if not 0 <= u <= m:
        raise ValueError("u must satisfy 0 <= u <= m")
    sign = -1 if u % 2 else 1
    scalar = sign * binomial(m, u) * beta_half(u, i, m)
    term = ff_poly("x", m + i + u, 2 * m + 2 * i + 2 * u + 1)
    term = term * ff_poly("y", m + i, m - u)
    term = term * ff_poly("y", -i - u - 1, m - u)
    return term * scalar


def deformed_tail(i: int, m: int, l: int) -> BiPoly:
    """Partial sum of expansion summands u = l..m (zero when l = m+1)."""
    if not 0 <= l <= m + 1:
        raise ValueError("l must satisfy 0 <= l <= m+1")
    acc = BiPoly.zero()
    for u in range(l, m + 1):
        acc = acc + deformed_term(i, m, u)
    return acc


def _recurrence_quad(const: int) -> BiPoly:
    return BiPoly({(2, 0): 1, (0, 2): 1, (0, 0): -const})


def tail_combo(i: int, m: int, l: int) -> BiPoly:
    """Three-tail combination whose closed form `tail_closed` gives.

    -2*S[i+1,m,l] + (x^2+y^2-(i+m+1)^2-i^2)*S[i,m,l]
    - (2i-1)/(2m+2)*S[i-1,m+1,l+1], defined for i >= 1.
    """
    if i < 1:
        raise ValueError("index i-1 undefined")
    quad = _recurrence_quad((i + m + 1) ** 2 + i * i)
    out = deformed_tail(i + 1, m, l) * -2
    out = out + quad * deformed_tail(i, m, l)
    out = out + deformed_tail(i - 1, m + 1, l + 1) * Fraction(-(2 * i - 1), 2 * m + 2)
    return out


def tail_closed(i: int, m: int, l: int) -> BiPoly:
    """Closed form of `tail_combo`; zero at l = m+1 because binom(m, m+1) = 0.

    binom(m,l) (-1)^l B(l+i+1/2, m+1) {y^2 + l(2m+2i+l+2) - i^2}
    (x+m+i+l)_(2m+2i+2l+1) (y+m+i)_(m-l) (y-i-l-1)_(m-l).
    """
    if not 0 <= l <= m + 1:
        raise ValueError("l must satisfy 0 <= l <= m+1")
    b = binomial(m, l)
    if b == 0:
        return BiPoly.zero()
    sign = -1 if l % 2 else 1
    scalar = sign * b * beta_half(l, i, m)
    quad = BiPoly({(0, 2): 1, (0, 0): l * (2 * m + 2 * i + l + 2) - i * i})
    term = ff_poly("x", m + i + l, 2 * m + 2 * i + 2 * l + 1)
    term = term * ff_poly("y", m + i, m - l)
    term = term * ff_poly("y", -i - l - 1, m - l)
    return quad * term * scalar


def telescope_cleared_sides(a: int, b: int) -> tuple[UniPoly, UniPoly]:
    """Both sides of sum_{t>=a} (b+t)_(2t)/(z+t)_(2t+2), cleared of denominators.

    The sum truncates at t = b since (b+t)_(2t) vanishes for t > b, and it
    equals (b+a)_(2a) / ((z+b)(z+a-1)_(2a)(z-b-1)).  Multiplying both sides
    by (z+b)_(2b+2) leaves polynomials of degree <= 2b+2:
    (z+b)_(2b+2)/(z+t)_(2t+2) = (z+b)_(b-t)(z-t-2)_(b-t) for t <= b, and the
    right side clears to (b+a)_(2a)(z+b-1)_(b-a)(z-a-1)_(b-a).
    For a > b both sides are identically zero.
    """
    if a < 0 or b < 0:
        raise ValueError("a, b must be nonnegative")
    if a > b:
        return UniPoly(), UniPoly()
    lhs = UniPoly()
    for t in range(a, b + 1):
        term = ff_unipoly(b, b - t) * ff_unipoly(-t - 2, b - t)
        lhs = lhs + term * falling_factorial(b + t, 2 * t)
    rhs = ff_unipoly(b - 1, b - a) * ff_unipoly(-a - 1, b - a)
    rhs = rhs * falling_factorial(b + a, 2 * a)
    return lhs, rhs


@_cached
def halfint_term(i: int, m: int, k: int, t: int) -> UniRatFunc:
    """Summand of the half-integer evaluation series, in the variable y.

    -(i-1/2)_(2i+m-k) (y+m-k-1/2)_(2m-2k) (m+t)_m (k+t)_(2t)
    (i+2m+t+1/2)_t (i+m+k+1/2)_(k-t) (y+m+k+1/2)_(k-t) (y-m-t-3/2)_(k-t).

    Negative-length falling factorials (k > m, or k > 2i+m) move to the
    denominator, so the value is a rational function of y in general.
    """
    if min(i, m, k, t) < 0 or t > k:
        raise ValueError("need i, m, k >= 0 and 0 <= t <= k")
    scalar = -falling_factorial(_half(i - 1), 2 * i + m - k)
    scalar *= falling_factorial(m + t, m)
    scalar *= falling_factorial(k + t, 2 * t)
    scalar *= falling_factorial(_half(i + 2 * m + t), t)
    scalar *= falling_factorial(_half(i + m + k), k - t)
    out = ff_unirat(_half(m - k - 1), 2 * m - 2 * k)
    out = out * ff_unipoly(_half(m + k), k - t)
    out = out * ff_unipoly(-_half(m + t + 1), k - t)
    return out * scalar


@_cached
def halfint_tail(i: int, m: int, k: int, l: int) -> UniRatFunc:
    """Partial sum of half-integer summands t = l..k (zero when l = k+1)."""
    if not 0 <= l <= k + 1:
        raise ValueError("l must satisfy 0 <= l <= k+1")
    acc = UniRatFunc.zero()
    for t in range(l, k + 1):
        acc = acc + halfint_term(i, m, k, t)
    return acc


def halfint_combo(i: int, m: int, k: int, l: int) -> UniRatFunc:
    """Three-tail combination of half-integer partial sums, for i >= 1.

    -2*U[i+1,m,k,l] + ((k+1/2)^2 + y^2 - (i+m+1)^2 - i^2)*U[i,m,k,l]
    - (2i-1)/(2m+2)*U[i-1,m+1,k,l].
    """
    if i < 1:
        raise ValueError("index i-1 undefined")
    quad = UniPoly({2: 1, 0: _half(k) ** 2 - (i + m + 1) ** 2 - i * i})
    out = halfint_tail(i + 1, m, k, l) * -2
    out = out + halfint_tail(i, m, k, l) * quad
    out = out + halfint_tail(i - 1, m + 1, k, l) * Fraction(-(2 * i - 1), 2 * m + 2)
    return out


def halfint_closed(i: int, m: int, k: int, l: int) -> UniRatFunc:
    """Closed form of `halfint_combo`; zero at l = 0 and for l > k.

    (m+l)_(m+1)/(m+1) (k+l)_(2l) (i-1/2)_(2i+m-k) (i+m+k+1/2)_(k-l)
    (i+2m+l+1/2)_(l-1) (y+m+k+1/2)_(k-l) (y+m-k-1/2)_(2m-2k)
    (y-m-l-3/2)_(k-l) {(y^2-i^2)(i+3m+l+5/2)
                       + (i+m+l+1/2)(i+m-k+1/2)(i+m+k+3/2)}.
    """
    if not 0 <= l <= k + 1:
        raise ValueError("l must satisfy 0 <= l <= k+1")
    scalar = falling_factorial(m + l, m + 1) / (m + 1)
    scalar *= falling_factorial(k + l, 2 * l)
    scalar *= falling_factorial(_half(i - 1), 2 * i + m - k)
    scalar *= falling_factorial(_half(i + m + k), k - l)
    scalar *= falling_factorial(_half(i + 2 * m + l), l - 1)
    if scalar == 0:
        # (m+l)_(m+1) = 0 at l = 0 and (k+l)_(2l) = 0 for l > k; stop before
        # the y factors, whose length k-l may be negative at l = k+1.
        return UniRatFunc.zero()
    slope = _half(i + 3 * m + l + 2)
    offset = _half(i + m + l) * _half(i + m - k) * _half(i + m + k + 1)
    brace = UniPoly({2: slope, 0: -i * i * slope + offset})
    out = ff_unirat(_half(m - k - 1), 2 * m - 2 * k)
    out = out * ff_unipoly(_half(m + k), k - l)
    out = out * ff_unipoly(-_half(m + l + 1), k - l)
    out = out * brace
    return out * scalar


@_cached
def defining_poly(m: int) -> BiPoly:
    """Defining polynomial of Cat(B2, m):

    (x+m)_(2m+1) (y+m)_(2m+1) (x+y+m)_(2m+1) (x-y+m)_(2m+1).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    out = ff_poly("x", m, 2 * m + 1) * ff_poly("y", m, 2 * m + 1)
    out = out * ff_linear_poly(XPY_FORM, m, 2 * m + 1)
    return out * ff_linear_poly(XMY_FORM, m, 2 * m + 1)


def saito_determinant(m: int) -> BiPoly:
    """ft[0,m](x,y)*ft[1,m](y,x) - ft[0,m](y,x)*ft[1,m](x,y)."""
    f0 = deformed_poly(0, m)
    f1 = deformed_poly(1, m)
    return f0 * f1.swap() - f0.swap() * f1


def saito_constant(m: int) -> Fraction:
    """The constant C with determinant = C * defining_poly(m):

    C = -c[0,m,m] * c[1,m,0].
    """
    return -integral_poly_coeff(0, m, m) * integral_poly_coeff(1, m, 0)


def saito_constant_integral(m: int) -> Fraction:
    """C evaluated through the two one-variable integrals:

    C = -(-1)^m integral_0^1 (s^2-1)^m ds * integral_0^1 s^(2m+2)(s^2-1)^m ds,
    both integrals expanded binomially and integrated term by term.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    first = Fraction(0)
    second = Fraction(0)
    for j in range(m + 1):
        sign = -1 if (m - j) % 2 else 1
        first += Fraction(sign * binomial(m, j), 2 * j + 1)
        second += Fraction(sign * binomial(m, j), 2 * j + 2 * m + 3)
    sign = -1 if m % 2 else 1
    return -sign * first * second


@dataclass(frozen=True)
class Derivation:
    """Vector field coeff_x * d/dx + coeff_y * d/dy with polynomial parts."""

    coeff_x: BiPoly
    coeff_y: BiPoly

    def apply_linear(self, form: LinearForm) -> BiPoly:
        """Apply to a linear form: theta(a*x + b*y + c) = a*theta(x) + b*theta(y)."""
        return self.coeff_x * form.a + self.coeff_y * form.b


def basis_derivation(i: int, m: int) -> Derivation:
    """The candidate basis member ft[i,m](x,y)*dx + ft[i,m](y,x)*dy."""
    f = deformed_poly(i, m)
    return Derivation(coeff_x=f, coeff_y=f.swap())
