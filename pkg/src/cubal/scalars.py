"""Scalar layer: exact rationals by default, prime fields for oracle work.

Every algebraic routine in the package manipulates scalars only through
arithmetic operators and comparisons with the integers 0 and 1, so any field
element type with int interop plugs in.  Python ints are accepted as exact
rational values throughout.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError


def parse_scalar(text) -> Fraction:
    """Parse a reduced-fraction string such as "3" or "-1/2" (ints pass through)."""
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad scalar {text!r}: {exc}") from None
    raise FormatError(f"bad scalar {text!r}: expected string or integer")


def format_scalar(x) -> str:
    """Render an exact rational as its reduced-fraction string."""
    return str(Fraction(x))


class PrimeFieldElement:
    """An element of the field with p elements, p prime.

    Interoperates with Python ints so generic code can compare against 0 and
    1 and start sums at 0.
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed fields GF({self.p}) and GF({other.p})")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return PrimeFieldElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.value == o.value

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, {self.p})"


def prime_field(p: int) -> list[PrimeFieldElement]:
    """All elements of the field with p elements."""
    return [PrimeFieldElement(v, p) for v in range(p)]
