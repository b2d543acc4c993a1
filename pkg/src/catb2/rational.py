"""Exact rational scalars and the combinatorial quantities built from them.

Everything here is arbitrary-precision and exact: rationals are
`fractions.Fraction`, never floats.  The falling factorial uses the
convention (a)_k = a*(a-1)*...*(a-k+1) and is extended to negative k by
(a)_{-n} = 1/(a+n)_n, the unique extension satisfying the shift law
(a)_{j+k} = (a)_j * (a-j)_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Canonical exact scalar type.  str() of a Fraction is "num/den" with the
# denominator omitted when it is 1, which is exactly the text form used by
# the serializer and the CLI.
Rat = Fraction

RatLike = Fraction | int


def rat_make(num: int, den: int = 1) -> Fraction:
    """Reduced rational num/den with positive denominator."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


def falling_factorial(alpha: RatLike, k: int) -> Fraction:
    """Falling factorial (alpha)_k.

    For k >= 0 this is the product alpha*(alpha-1)*...*(alpha-k+1), with the
    empty product equal to 1.  For k < 0 it is 1/(alpha+|k|)_{|k|}; that case
    raises if any of alpha+1, ..., alpha+|k| is zero.
    """
    alpha = Fraction(alpha)
    if k >= 0:
        out = Fraction(1)
        for j in range(k):
            out *= alpha - j
        return out
    rec = falling_factorial(alpha - k, -k)
    if rec == 0:
        raise ZeroDivisionError("falling factorial pole")
    return 1 / rec


def binomial(n: int, k: int) -> int:
    """Binomial coefficient for n >= 0, with value 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("unsupported binomial")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def beta_half(u: int, i: int, m: int) -> Fraction:
    """Exact value of the Beta integral B(u+i+1/2, m+1) for u, i, m >= 0.

    Equals m! / (m+i+u+1/2)_{m+1}; the falling factorial of a half-integer
    over an integer length never vanishes, so this is always defined.
    """
    if u < 0 or i < 0 or m < 0:
        raise ValueError("beta_half arguments must be nonnegative")
    return math.factorial(m) / falling_factorial(Fraction(2 * (m + i + u) + 1, 2), m + 1)


@dataclass(frozen=True)
class FamilyIndex:
    """Index (i, m) of one member of the polynomial family; p = 2m + i."""

    i: int
    m: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.m < 0:
            raise ValueError("family indices must be nonnegative")

    @property
    def p(self) -> int:
        return 2 * self.m + self.i
