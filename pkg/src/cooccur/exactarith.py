"""Exact integer and rational arithmetic primitives.

Everything downstream (counting formulas, tail probabilities, discovery
scores) is computed over Python's native arbitrary-precision ``int`` and
``fractions.Fraction``; floating point enters only when a value is
rendered for display.  This matters: the probabilities this package
reports routinely sit far below ``2**-1074`` where any double-precision
pipeline would underflow to zero.

The binomial coefficient here follows the combinatorial convention
``binomial(a, b) == 0`` for ``b < 0`` or ``b > a``.  Terms of the
alternating sums in :mod:`cooccur.core` rely on that convention to vanish
silently at the boundaries.  A *negative upper argument* is a hard error
instead: no caller should ever produce one, and the generalized binomial
would hide bugs.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError

__all__ = [
    "binomial",
    "FactorialCache",
    "ExactProbability",
    "scientific",
    "int_str",
]


def binomial(a: int, b: int) -> int:
    """Binomial coefficient ``a`` choose ``b`` as an exact integer.

    Returns 0 when ``b < 0`` or ``b > a``; raises for ``a < 0``.
    """
    if a < 0:
        raise InvalidInputError(f"binomial upper argument must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


class FactorialCache:
    """Precomputed factorials ``0! .. limit!``.

    After construction, :meth:`binomial` with upper argument ``a <= limit``
    costs a constant number of big-integer multiplications and one
    division.  Arguments above the limit fall back to :func:`math.comb`.
    Instances are immutable once built and safe to share across threads.
    """

    def __init__(self, limit: int):
        if limit < 0:
            raise InvalidInputError(f"factorial cache limit must be >= 0, got {limit}")
        self.limit = limit
        facts = [1] * (limit + 1)
        acc = 1
        for t in range(1, limit + 1):
            acc *= t
            facts[t] = acc
        self._facts = facts

    def factorial(self, a: int) -> int:
        if a < 0:
            raise InvalidInputError(f"factorial argument must be >= 0, got {a}")
        if a <= self.limit:
            return self._facts[a]
        return math.factorial(a)

    def binomial(self, a: int, b: int) -> int:
        if a < 0:
            raise InvalidInputError(f"binomial upper argument must be >= 0, got {a}")
        if b < 0 or b > a:
            return 0
        if a <= self.limit:
            f = self._facts
            return f[a] // (f[b] * f[a - b])
        return math.comb(a, b)


def int_str(x: int) -> str:
    """Decimal string of an arbitrarily large integer.

    CPython caps ``str(int)`` at ``sys.get_int_max_str_digits()`` digits by
    default; exact numerators and denominators here can be far larger, so
    the cap is raised as needed before converting.
    """
    digits = x.bit_length() * 30103 // 100000 + 3  # ceil overestimate of log10
    if digits > sys.get_int_max_str_digits():
        sys.set_int_max_str_digits(digits)
    return str(x)


def _floor_log10(value: Fraction) -> int:
    """Largest ``e`` with ``10**e <= value``, exact, for ``value > 0``."""
    approx = math.log10(value.numerator) - math.log10(value.denominator)
    e = math.floor(approx)
    ten = Fraction(10)
    while value < ten**e:
        e -= 1
    while value >= ten ** (e + 1):
        e += 1
    return e


def scientific(value: Fraction, digits: int = 2) -> str:
    """Scientific-notation rendering of a non-negative rational.

    The mantissa keeps ``digits`` significant digits, *truncated* toward
    zero, so the rendered value never exceeds the true one and differs
    from it by less than one unit in the last rendered digit.  Zero
    renders as ``"0"``.

    >>> scientific(Fraction(1, 3))
    '3.3e-1'
    >>> scientific(Fraction(1))
    '1.0e0'
    """
    if digits < 1:
        raise InvalidInputError(f"need at least 1 significant digit, got {digits}")
    if value < 0:
        raise InvalidInputError(f"cannot render negative value {value}")
    if value == 0:
        return "0"
    e = _floor_log10(value)
    scaled = value * Fraction(10) ** (digits - 1 - e)
    mantissa = scaled.numerator // scaled.denominator
    s = str(mantissa)
    if digits == 1:
        return f"{s}e{e}"
    return f"{s[0]}.{s[1:]}e{e}"


@dataclass(frozen=True)
class ExactProbability:
    """A probability held as an exact rational in ``[0, 1]``.

    ``Fraction`` keeps the value in lowest terms with a positive
    denominator automatically; this wrapper adds the range check and the
    display conversions (scientific decimal string, ``log10``).
    """

    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if self.value < 0 or self.value > 1:
            raise InvalidInputError(f"probability out of range [0, 1]: {self.value}")

    @classmethod
    def from_ratio(cls, numerator: int, denominator: int) -> "ExactProbability":
        return cls(Fraction(numerator, denominator))

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def decimal(self, digits: int = 2) -> str:
        return scientific(self.value, digits)

    def log10(self) -> float:
        """Base-10 logarithm as a float; ``-inf`` for an exact zero."""
        if self.value == 0:
            return float("-inf")
        return math.log10(self.value.numerator) - math.log10(self.value.denominator)

    def __str__(self) -> str:
        return self.decimal()
