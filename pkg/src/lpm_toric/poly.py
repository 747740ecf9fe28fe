"""Integer-coefficient Laurent polynomials in one variable.

A ``Poly`` stores a contiguous coefficient block starting at ``min_degree``;
ordinary polynomials are the ones with ``min_degree >= 0``.  Coefficients are
Python ints, so nothing ever overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _normalize(coeffs: Sequence[int], low: int) -> tuple[tuple[int, ...], int]:
    lo, hi = 0, len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return (), 0
    return tuple(int(c) for c in coeffs[lo:hi]), low + lo


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[int, ...] = ()
    min_degree: int = 0

    def __post_init__(self):
        coeffs, low = _normalize(self.coeffs, self.min_degree)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "min_degree", low)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], min_degree: int = 0) -> Poly:
        return cls(tuple(coeffs), min_degree)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Poly:
        return cls((coeff,), degree)

    @classmethod
    def constant(cls, c: int) -> Poly:
        return cls((c,), 0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ValueError("degree of the zero polynomial is undefined")
        return self.min_degree + len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        i = k - self.min_degree
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff_list(self) -> list[int]:
        """Coefficients of degrees ``0..deg``; only for ordinary polynomials."""
        if self.is_zero:
            return []
        if self.min_degree < 0:
            raise ValueError("Laurent polynomial has negative powers")
        return [0] * self.min_degree + list(self.coeffs)

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_degree + i, c

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.min_degree, other.min_degree)
        high = max(self.degree, other.degree)
        return Poly(tuple(self.coeff(k) + other.coeff(k) for k in range(low, high + 1)), low)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs), self.min_degree)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(tuple(c * other for c in self.coeffs), self.min_degree)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return Poly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(tuple(out), self.min_degree + other.min_degree)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> Poly:
        """Multiply by ``x**k``."""
        if self.is_zero:
            return self
        return Poly(self.coeffs, self.min_degree + k)

    def substitute_shift(self, c: int = 1) -> Poly:
        """Return ``p(x + c)``; ``p`` must be an ordinary polynomial."""
        result = Poly()
        step = Poly((c, 1))
        for k, a in self.terms():
            if k < 0:
                raise ValueError("cannot shift the variable of a Laurent polynomial")
            result = result + a * step**k
        return result

    def __call__(self, x):
        return sum(c * x**k for k, c in self.terms())

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "min_degree": self.min_degree}

    @classmethod
    def from_json(cls, data: dict) -> Poly:
        return cls(tuple(data["coeffs"]), data.get("min_degree", 0))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in self.terms():
            if k == 0:
                body = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                body = mag + ("x" if k == 1 else f"x^{k}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.constant(value)
    return NotImplemented


X = Poly.monomial(1)
