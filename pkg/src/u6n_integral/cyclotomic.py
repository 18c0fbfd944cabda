"""Exact arithmetic in Z[zeta_m], zeta_m = exp(2*pi*i/m).

Values are integer coefficient vectors of polynomials in zeta_m reduced modulo
the m-th cyclotomic polynomial, so equality is coefficient equality.  Over
U_6n the relevant root order is m = 2n (omega = exp(pi*i/n)).
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from typing import Iterable, Sequence

from .group import ParameterError

__all__ = [
    "cyclotomic_poly",
    "CycValue",
    "root_power",
    "from_exponent_counts",
]


def _divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact division of integer polynomials (coefficients low -> high, den monic)."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[k + dn]
        quot[k] = c
        if c:
            for t, d in enumerate(den):
                num[k + t] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("polynomial division is not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Phi_m as coefficients low -> high, via (x^m - 1) / prod_{d | m, d < m} Phi_d."""
    if m < 1:
        raise ParameterError(f"cyclotomic order must be >= 1, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_basis(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced coefficient vectors of zeta^e for e = 0 .. m-1."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x, then eliminate x^deg with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:-1])]
    return tuple(rows)


@lru_cache(maxsize=None)
def _high_powers(m: int) -> tuple[tuple[int, ...], ...]:
    """Reduced vectors of x^e for e = 0 .. 2*deg - 2 (products of two reduced values)."""
    basis = _power_basis(m)
    deg = len(basis[0])
    return tuple(basis[e % m] for e in range(max(2 * deg - 1, 1)))


class CycValue:
    """An element of Z[zeta_m] in canonical reduced form."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable[int]) -> None:
        self.m = m
        c = tuple(int(x) for x in coeffs)
        deg = len(cyclotomic_poly(m)) - 1
        if len(c) != deg:
            raise ValueError(f"expected {deg} coefficients for m={m}, got {len(c)}")
        self.coeffs = c

    @classmethod
    def zero(cls, m: int) -> CycValue:
        return cls(m, [0] * (len(cyclotomic_poly(m)) - 1))

    @classmethod
    def from_int(cls, m: int, value: int) -> CycValue:
        c = [0] * (len(cyclotomic_poly(m)) - 1)
        c[0] = int(value)
        return cls(m, c)

    def _coerce(self, other: CycValue | int) -> CycValue:
        if isinstance(other, CycValue):
            if other.m != self.m:
                raise ParameterError(f"root orders differ: {self.m} vs {other.m}")
            return other
        if isinstance(other, int):
            return CycValue.from_int(self.m, other)
        return NotImplemented

    def __add__(self, other: CycValue | int) -> CycValue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycValue(self.m, (x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycValue:
        return CycValue(self.m, (-x for x in self.coeffs))

    def __sub__(self, other: CycValue | int) -> CycValue:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return CycValue(self.m, (x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: int) -> CycValue:
        return (-self) + other

    def scale(self, k: int) -> CycValue:
        return CycValue(self.m, (k * x for x in self.coeffs))

    def __mul__(self, other: CycValue | int) -> CycValue:
        if isinstance(other, int):
            return self.scale(other)
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        deg = len(self.coeffs)
        prod = [0] * (2 * deg - 1)
        for s, x in enumerate(self.coeffs):
            if x:
                for t, y in enumerate(o.coeffs):
                    if y:
                        prod[s + t] += x * y
        out = list(prod[:deg])
        powers = _high_powers(self.m)
        for e in range(deg, len(prod)):
            c = prod[e]
            if c:
                for t, v in enumerate(powers[e]):
                    out[t] += c * v
        return CycValue(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CycValue:
        if k < 0:
            raise ValueError("negative powers are not supported")
        result, base = CycValue.from_int(self.m, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycValue:
        """Complex conjugate: zeta^t -> zeta^-t."""
        basis = _power_basis(self.m)
        out = [0] * len(self.coeffs)
        for t, c in enumerate(self.coeffs):
            if c:
                for s, v in enumerate(basis[-t % self.m]):
                    out[s] += c * v
        return CycValue(self.m, out)

    def as_integer(self) -> int | None:
        """The integer this value equals, or None if it is not a rational integer."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def numeric(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.as_integer() == other
        if not isinstance(other, CycValue):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def __repr__(self) -> str:
        return f"CycValue(m={self.m}, {list(self.coeffs)})"

    def __str__(self) -> str:
        k = self.as_integer()
        if k is not None:
            return str(k)
        terms = []
        for t, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if t == 0 else ("z" if t == 1 else f"z^{t}")
            if t == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def root_power(m: int, e: int) -> CycValue:
    """zeta_m^e in reduced form."""
    if m < 1:
        raise ParameterError(f"root order must be >= 1, got {m}")
    return CycValue(m, _power_basis(m)[e % m])


def from_exponent_counts(m: int, counts: Sequence[int]) -> CycValue:
    """sum_e counts[e] * zeta_m^e for a length-m count vector."""
    basis = _power_basis(m)
    out = [0] * len(basis[0])
    for e, c in enumerate(counts):
        if c:
            for t, v in enumerate(basis[e]):
                if v:
                    out[t] += int(c) * v
    return CycValue(m, out)
