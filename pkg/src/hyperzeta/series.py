"""Exact truncated power series over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .errors import ExpNonzeroConstant, NonUnitInverse, NotIntegral, TruncationMismatch

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Series:
    """Coefficients of t^0 .. t^trunc; everything above t^trunc is unknown, not zero."""

    coeffs: tuple[Fraction, ...]
    trunc: int

    def __init__(self, coeffs: Iterable[Number], trunc: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if trunc is None:
            trunc = len(c) - 1
        if trunc < 0:
            raise ValueError("truncation must be nonnegative")
        c = (c + [Fraction(0)] * (trunc + 1 - len(c)))[: trunc + 1]
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "trunc", trunc)

    @classmethod
    def one(cls, trunc: int) -> Series:
        return cls([1], trunc)

    @classmethod
    def monomial(cls, k: int, c: Number, trunc: int) -> Series:
        out = [0] * (trunc + 1)
        if k <= trunc:
            out[k] = c
        return cls(out, trunc)

    @classmethod
    def geometric_power(cls, d: int, k: int, trunc: int) -> Series:
        """(1 - t^d)^(-k) for any integer k, by the binomial series."""
        out = [0] * (trunc + 1)
        for j in range(trunc // d + 1):
            if k >= 0:
                c = comb(k + j - 1, j) if k else int(j == 0)
            else:
                c = (-1) ** j * comb(-k, j)
            out[d * j] = c
        return cls(out, trunc)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"coefficient t^{n} outside truncation {self.trunc}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.trunc + 1

    def _check(self, other: Series) -> None:
        if self.trunc != other.trunc:
            raise TruncationMismatch(f"truncations differ: {self.trunc} vs {other.trunc}")

    def _lift(self, other) -> Series:
        if isinstance(other, Series):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Series([other], self.trunc)
        return NotImplemented

    def __add__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-a for a in self.coeffs], self.trunc)

    def __sub__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Series:
        return (-self) + other

    def __mul__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, n = self.coeffs, other.coeffs, self.trunc
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return Series(out, n)

    __rmul__ = __mul__

    def inverse(self) -> Series:
        a = self.coeffs
        if a[0] == 0:
            raise NonUnitInverse("constant term is zero")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.trunc + 1):
            out.append(-inv0 * sum(a[k] * out[n - k] for k in range(1, n + 1)))
        return Series(out, self.trunc)

    def __truediv__(self, other) -> Series:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, k: int) -> Series:
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Series.one(self.trunc), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exp(self) -> Series:
        # B = exp(A) satisfies n b_n = sum_k k a_k b_{n-k}
        a = self.coeffs
        if a[0] != 0:
            raise ExpNonzeroConstant("exp needs a zero constant term")
        b = [Fraction(1)]
        for n in range(1, self.trunc + 1):
            b.append(Fraction(sum(k * a[k] * b[n - k] for k in range(1, n + 1)), n))
        return Series(b, self.trunc)

    def log(self) -> Series:
        b = self.coeffs
        if b[0] != 1:
            raise NonUnitInverse("log needs constant term 1")
        a = [Fraction(0)]
        for n in range(1, self.trunc + 1):
            a.append(b[n] - Fraction(sum(k * a[k] * b[n - k] for k in range(1, n)), n))
        return Series(a, self.trunc)

    def truncate(self, n: int) -> Series:
        if n > self.trunc:
            raise TruncationMismatch("cannot extend a truncated series")
        return Series(self.coeffs[: n + 1], n)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise NotIntegral(f"non-integral coefficients: {self.coeffs}")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> dict:
        return {
            "coeffs": [int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}" for c in self.coeffs],
            "trunc": self.trunc,
        }

    @classmethod
    def from_json(cls, data: dict) -> Series:
        return cls([Fraction(c) for c in data["coeffs"]], data["trunc"])

    def __str__(self) -> str:
        out = ""
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else "t" if n == 1 else f"t^{n}"
            mag = abs(c)
            body = str(mag) if not mono or mag != 1 else ""
            body += mono
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return (out or "0") + f" + O(t^{self.trunc + 1})"


def poly_series(coeffs: Sequence[Number], trunc: int) -> Series:
    """A polynomial viewed as a series truncated at `trunc` (high terms dropped)."""
    return Series(list(coeffs)[: trunc + 1], trunc)
