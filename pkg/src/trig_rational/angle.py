"""Symbolic angle reduction and the double-angle algebra on tan^2.

Angles are rational multiples of pi.  tan has period 1 (in units of pi) and
is odd, so any r reduces to a representative d/n in [0, 1/2] plus a sign;
cos has period 2 and is even, so r reduces to d/n in [0, 1] with no sign.
Doubling an angle acts on T = tan^2 by T -> 4T/(1-T)^2, and inverting that
map is solving a quadratic whose discriminant decides rationality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact_core import gcd, rational_sqrt

__all__ = [
    "PoleError",
    "ReducedAngle",
    "DoublingChain",
    "reduce_for_tan",
    "reduce_for_cos",
    "odd_part",
    "double_angle_forward",
    "invert_double_angle",
    "integer_double_angle_preimages",
    "doubling_chain",
    "tan_squared_base_value",
    "cos_base_value",
]


class PoleError(ValueError):
    """Raised where tan (or the double-angle map) hits its pole."""


@dataclass(frozen=True)
class ReducedAngle:
    """Canonical angle representative d/n (lowest terms) with an orientation sign.

    The sign only matters for odd functions of the angle (tan); it is +1
    everywhere else.
    """

    d: int
    n: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.n < 1 or self.d < 0 or gcd(self.d, self.n) != 1:
            raise ValueError(f"not a reduced angle: {self.d}/{self.n}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.d, self.n)


@dataclass(frozen=True)
class DoublingChain:
    """Successive angle doublings, each folded back into [0, 1/2]."""

    angles: tuple[ReducedAngle, ...]


def reduce_for_tan(r: Fraction | int) -> ReducedAngle:
    """Fold r into [0, 1/2] using tan's period 1 and oddness.

    tan((1-x)pi) = -tan(x pi), so x in (1/2, 1) maps to 1-x with sign -1.
    The pole representative 1/2 is kept as is.
    """
    r = Fraction(r)
    num = r.numerator % r.denominator
    if num == 0:
        return ReducedAngle(0, 1)
    den = r.denominator
    if 2 * num > den:
        return ReducedAngle(den - num, den, -1)
    return ReducedAngle(num, den)


def reduce_for_cos(r: Fraction | int) -> ReducedAngle:
    """Fold r into [0, 1] using cos's period 2 and evenness."""
    r = Fraction(r)
    den = r.denominator
    num = r.numerator % (2 * den)
    if num > den:
        num = 2 * den - num
    if num == 0:
        return ReducedAngle(0, 1)
    if num == den:
        return ReducedAngle(1, 1)
    return ReducedAngle(num, den)


def odd_part(n: int) -> tuple[int, int]:
    """n = 2^a * q with q odd; returns (a, q)."""
    if n < 1:
        raise ValueError("odd_part requires n >= 1")
    a = 0
    while n % 2 == 0:
        n //= 2
        a += 1
    return a, n


def double_angle_forward(t: Fraction | int) -> Fraction:
    """The action of angle doubling on tan^2: T -> 4T/(1-T)^2.

    T = 1 means the doubled angle sits on the pole, which is an error here.
    """
    t = Fraction(t)
    if t == 1:
        raise PoleError("tan^2 = 1 doubles onto the pole")
    return 4 * t / (1 - t) ** 2


def invert_double_angle(d_value: Fraction | int) -> list[Fraction]:
    """All rational T with 4T/(1-T)^2 = d_value, ascending.

    For D > 0 the preimages solve D*x^2 - 2(D+2)*x + D = 0, i.e.
    x = (D + 2 +- 2*sqrt(D+1)) / D, so rational preimages exist exactly when
    D+1 is a rational square; the two roots multiply to 1.
    """
    d_value = Fraction(d_value)
    if d_value < 0:
        raise ValueError("tan^2 is never negative")
    if d_value == 0:
        return [Fraction(0)]
    root = rational_sqrt(d_value + 1)
    if root is None:
        return []
    lo = (d_value + 2 - 2 * root) / d_value
    hi = (d_value + 2 + 2 * root) / d_value
    return [lo, hi]


def integer_double_angle_preimages(u: int) -> list[Fraction]:
    """Integer preimages of an odd positive integer u under the doubling map.

    These are the integer roots of u*x^2 - 2(u+2)*x + u; the quadratic has
    rational roots only when u+1 is a perfect square, and integrality then
    filters the pair.
    """
    if u < 1 or u % 2 == 0:
        raise ValueError("expected an odd positive integer")
    return [x for x in invert_double_angle(u) if x.denominator == 1]


def doubling_chain(start: ReducedAngle, stop_den: int) -> DoublingChain:
    """Angle doublings from start down to denominator stop_den.

    Doubling d/n halves the denominator while it is even, so start.n must be
    stop_den times a power of two.  Every angle is folded into [0, 1/2].
    """
    if stop_den < 1 or start.n % stop_den != 0:
        raise ValueError(f"{stop_den} does not divide denominator {start.n}")
    ratio = start.n // stop_den
    if ratio & (ratio - 1):
        raise ValueError(f"{start.n}/{stop_den} is not a power of two")
    angles = [start]
    d, n = start.d, start.n
    while n > stop_den:
        n //= 2
        d %= n
        if 2 * d > n:
            d = n - d
        if d == 0:
            n = 1
        angles.append(ReducedAngle(d, n))
    return DoublingChain(tuple(angles))


_TAN2_BASE: dict[int, Fraction | None] = {
    1: Fraction(0),
    2: None,  # pole
    3: Fraction(3),
    4: Fraction(1),
    6: Fraction(1, 3),
}


def tan_squared_base_value(n: int) -> Fraction | None:
    """Exact tan^2 at the reduced denominators 1, 2, 3, 4, 6 (None marks the pole).

    At these denominators the reduced numerator is forced (0 for n = 1, else 1),
    so the value depends on n alone.
    """
    if n not in _TAN2_BASE:
        raise ValueError(f"no exact tan^2 value at denominator {n}")
    return _TAN2_BASE[n]


def cos_base_value(angle: ReducedAngle) -> Fraction:
    """Exact cos at the cos-reduced denominators 1, 2, 3.

    The magnitude depends on the denominator, the sign on which side of 1/2
    the representative lies.
    """
    if angle.n == 1:
        return Fraction(1) if angle.d == 0 else Fraction(-1)
    if angle.n == 2:
        return Fraction(0)
    if angle.n == 3:
        return Fraction(1, 2) if angle.d == 1 else Fraction(-1, 2)
    raise ValueError(f"no exact cos value at denominator {angle.n}")
