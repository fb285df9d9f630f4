"""Exact arithmetic in Q(sqrt 5): numbers ``p + q*sqrt(5)`` with rational p, q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


@dataclass(frozen=True)
class Surd:
    p: Fraction
    q: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))

    @classmethod
    def coerce(cls, x: Surd | Rational) -> Surd:
        return x if isinstance(x, Surd) else cls(Fraction(x))

    def __add__(self, other: Surd | Rational) -> Surd:
        o = Surd.coerce(other)
        return Surd(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self) -> Surd:
        return Surd(-self.p, -self.q)

    def __sub__(self, other: Surd | Rational) -> Surd:
        return self + -Surd.coerce(other)

    def __rsub__(self, other: Rational) -> Surd:
        return Surd.coerce(other) - self

    def __mul__(self, other: Surd | Rational) -> Surd:
        o = Surd.coerce(other)
        return Surd(self.p * o.p + 5 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def conjugate(self) -> Surd:
        return Surd(self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - 5 * self.q * self.q

    def __truediv__(self, other: Surd | Rational) -> Surd:
        o = Surd.coerce(other)
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        num = self * o.conjugate()
        return Surd(num.p / nrm, num.q / nrm)

    def __rtruediv__(self, other: Rational) -> Surd:
        return Surd.coerce(other) / self

    def __pow__(self, k: int) -> Surd:
        if k < 0:
            return Surd(1) / self ** -k
        result, base = Surd(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def sign(self) -> int:
        sp, sq = _sign(self.p), _sign(self.q)
        if sq == 0 or sp == sq:
            return sp or sq
        if sp == 0:
            return sq
        # mixed signs: compare p^2 with 5 q^2
        return sp * _sign(self.p * self.p - 5 * self.q * self.q)

    def _cmp(self, other: Surd | Rational) -> int:
        return (self - Surd.coerce(other)).sign()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Surd, int, Fraction)):
            return NotImplemented
        o = Surd.coerce(other)
        return self.p == o.p and self.q == o.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __lt__(self, other: Surd | Rational) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: Surd | Rational) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: Surd | Rational) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: Surd | Rational) -> bool:
        return self._cmp(other) >= 0

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * math.sqrt(5)

    def floor(self) -> int:
        approx = float(self)
        slack = int(abs(approx) * 1e-9) + 2
        lo, hi = math.floor(approx) - slack, math.floor(approx) + slack
        while self < lo:
            lo -= slack
        while self >= hi + 1:
            hi += slack
        # invariant: lo <= self < hi + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self >= mid:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def ceil(self) -> int:
        f = self.floor()
        return f if self == f else f + 1

    def to_json(self) -> dict[str, str]:
        return {"p": format_fraction(self.p), "q": format_fraction(self.q)}

    @classmethod
    def from_json(cls, data: dict[str, str]) -> Surd:
        return cls(parse_fraction(data["p"]), parse_fraction(data["q"]))

    def __repr__(self) -> str:
        return f"Surd({self.p} + {self.q}*sqrt5)"


ZERO = Surd(0)
ONE = Surd(1)
SQRT5 = Surd(0, 1)
SIGMA = Surd(Fraction(-1, 2), Fraction(1, 2))  # positive root of x^2 + x = 1
PHI = Surd(Fraction(1, 2), Fraction(1, 2))
