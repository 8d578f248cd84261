"""Exact integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from typing import Iterable, Sequence, Union


class InexactDivision(ArithmeticError):
    pass


class LaurentPoly:
    """
    ``sum(coeffs[k] * t**(low + k))`` with trimmed coefficients.

    The zero polynomial has no coefficients (and ``low == 0``).  Python ints
    are unbounded, so coefficient growth can never wrap.
    """

    __slots__ = ("coeffs", "low")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(c[start:end])
        self.low = low + start if self.coeffs else 0

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPoly":
        return cls((c,), e)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.low == other.low

    def __hash__(self) -> int:
        return hash((self.coeffs, self.low))

    def __repr__(self) -> str:
        return f"LaurentPoly({list(self.coeffs)!r}, low={self.low})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + k
            if e == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{mag}t" if e == 1 else f"{mag}t^{e}"
            terms.append(("-" if c < 0 else "+", body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __add__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - low + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - low + k] += c
        return LaurentPoly(out, low)

    __radd__ = __add__

    def __sub__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.const(other) - self

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by ``t**e``."""
        return LaurentPoly(self.coeffs, self.low + e) if self.coeffs else self

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises :class:`InexactDivision` if ``other`` does not divide ``self``."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return ZERO
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        qlen = len(num) - len(den) + 1
        if qlen <= 0:
            raise InexactDivision(f"{other} does not divide {self}")
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c, r = divmod(num[k + len(den) - 1], lead)
            if r:
                raise InexactDivision(f"{other} does not divide {self}")
            quot[k] = c
            if c:
                for j, d in enumerate(den):
                    num[k + j] -= c * d
        if any(num):
            raise InexactDivision(f"{other} does not divide {self}")
        return LaurentPoly(quot, self.low - other.low)

    def __call__(self, x: int):
        """Evaluate at a nonzero integer; exact (``Fraction``) for negative exponents."""
        from fractions import Fraction

        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            total += c * Fraction(x) ** (self.low + k)
        return int(total) if total.denominator == 1 else total

    def normalized(self) -> "LaurentPoly":
        """Representative up to units ``±t**k``: lowest exponent 0, positive leading coefficient."""
        if not self.coeffs:
            return self
        p = LaurentPoly(self.coeffs, 0)
        return -p if p.coeffs[-1] < 0 else p


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T = LaurentPoly.monomial(1, 1)
T_INV = LaurentPoly.monomial(1, -1)


def from_ascending(coeffs: Sequence[int]) -> LaurentPoly:
    """``from_ascending([1, -1, 1])`` is ``1 - t + t^2``."""
    return LaurentPoly(coeffs, 0)
