"""Integer polynomials for the multiple-angle machinery.

For odd n = 2m+1, expanding tan(n*theta) via the binomial theorem gives a
degree-2m integer polynomial whose roots are tan(k*pi/n), k = 1..n-1
(``tan_poly``), and since only even powers appear it collapses to a monic
degree-m polynomial in X = tan^2 (``tan_squared_poly``).  The constant
coefficient of the collapsed polynomial is (-1)^m * n, which is what makes
the rational root theorem bite: any rational root is an integer divisor
of n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact_core import binomial, divisors, gcd

__all__ = ["IntPolynomial", "tan_poly", "tan_squared_poly", "rational_roots"]


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with int coefficients, ascending degree; () is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def eval(self, x: Fraction | int) -> Fraction:
        """Exact value at a rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def tan_poly(n: int) -> IntPolynomial:
    """Degree n-1 polynomial with roots tan(k*pi/n), k = 1..n-1, for odd n >= 3.

    Only even powers occur: the coefficient of X^(2j) is (-1)^(m+j) * C(n, 2j+1)
    with m = (n-1)/2.
    """
    m = _check_odd(n)
    coeffs = [0] * (2 * m + 1)
    for j in range(m + 1):
        coeffs[2 * j] = (-1) ** (m + j) * binomial(n, 2 * j + 1)
    return IntPolynomial(tuple(coeffs))


@lru_cache(maxsize=None)
def tan_squared_poly(n: int) -> IntPolynomial:
    """Monic degree-m polynomial with roots tan^2(k*pi/n), k = 1..m, for odd n = 2m+1."""
    m = _check_odd(n)
    return IntPolynomial(
        tuple((-1) ** (m + j) * binomial(n, 2 * j + 1) for j in range(m + 1))
    )


def _check_odd(n: int) -> int:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd n >= 3, got {n}")
    return (n - 1) // 2


def rational_roots(p: IntPolynomial) -> list[Fraction]:
    """Every rational root of p, ascending, via the rational root theorem.

    Candidates a/b in lowest terms must have a | constant coefficient and
    b | leading coefficient; each candidate is then checked by exact
    evaluation.  The zero polynomial has no well-defined root set.
    """
    if p.is_zero:
        raise ValueError("rational_roots of the zero polynomial")
    # strip a power of X: 0 is a root iff the constant coefficient vanishes
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    roots: set[Fraction] = set() if k == 0 else {Fraction(0)}
    cs = p.coeffs[k:]
    if len(cs) > 1:
        c0, lead = abs(cs[0]), abs(cs[-1])
        deg = len(cs) - 1
        for a in divisors(c0):
            for b in divisors(lead):
                if gcd(a, b) != 1:
                    continue
                if _eval_scaled(cs, a, b, deg) == 0:
                    roots.add(Fraction(a, b))
                if _eval_scaled(cs, -a, b, deg) == 0:
                    roots.add(Fraction(-a, b))
    return sorted(roots)


def _eval_scaled(cs: tuple[int, ...], a: int, b: int, deg: int) -> int:
    # p(a/b) * b^deg, all integer arithmetic
    acc = 0
    bp = 1
    for c in reversed(cs):
        acc = acc * a + c * bp
        bp *= b
    return acc
