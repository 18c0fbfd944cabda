"""Spectra of Cay(U_6n, S) computed three independent ways.

* ``babai_spectrum`` - from the character table: one eigenvalue chi_j(S) per
  linear character, and for each psi_k the two roots of
  x^2 - psi_k(S1) x + (psi_k(S1)^2 - (psi_k(S1^2) + psi_k(S2^2))) / 2,
  each with multiplicity 2.
* ``brute_spectrum`` - Jacobi eigenvalues of the adjacency matrix.
* ``exact_integer_spectrum`` - integer roots of the exact characteristic
  polynomial; empty when the polynomial does not split over Z.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .characters import char_sum, char_sum_product, chi, psi
from .cyclotomic import CycValue
from .group import ConnectionSet, ParameterError, cayley_adjacency
from .linalg import charpoly, integer_roots, jacobi_eigenvalues

__all__ = [
    "Spectrum",
    "Discriminant",
    "split_parity",
    "babai_spectrum",
    "discriminant",
    "degree_two_terms",
    "brute_spectrum",
    "exact_integer_spectrum",
    "group_eigenvalues",
    "GROUP_TOL",
]

GROUP_TOL = 1e-7

EXACT = "exact-integer"
NUMERIC = "numeric"


@dataclass(frozen=True)
class Spectrum:
    """Multiset of (eigenvalue, multiplicity), largest eigenvalue first."""

    entries: tuple[tuple[int | float, int], ...]
    kind: str
    n: int
    degree: int

    @classmethod
    def from_values(cls, values: Iterable[int | float], kind: str, n: int, degree: int) -> Spectrum:
        if kind == EXACT:
            counts = Counter(int(v) for v in values)
            entries = tuple(sorted(counts.items(), key=lambda e: -e[0]))
        else:
            entries = tuple(group_eigenvalues(values))
        return cls(entries, kind, n, degree)

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT

    def values(self) -> list[int | float]:
        """All eigenvalues with repetition, descending."""
        return [v for v, k in self.entries for _ in range(k)]

    def total_multiplicity(self) -> int:
        return sum(k for _, k in self.entries)

    def is_integral(self, tol: float = GROUP_TOL) -> bool:
        if self.is_exact:
            return True
        return all(abs(v - round(v)) <= tol for v, _ in self.entries)

    def moment(self, p: int) -> float:
        return sum(v**p * k for v, k in self.entries)

    def check_invariants(self, tol: float = GROUP_TOL) -> None:
        N = 6 * self.n
        if self.total_multiplicity() != N:
            raise AssertionError(f"multiplicities sum to {self.total_multiplicity()}, expected {N}")
        slack = 0 if self.is_exact else tol * N * max(self.degree, 1)
        if abs(self.moment(1)) > slack:
            raise AssertionError(f"trace {self.moment(1)} != 0")
        if abs(self.moment(2) - N * self.degree) > slack:
            raise AssertionError(f"second moment {self.moment(2)} != {N * self.degree}")

    def matches(self, other: Spectrum, tol: float = GROUP_TOL) -> bool:
        """Equal as sorted multisets (exactly when both are exact)."""
        a, b = self.values(), other.values()
        if len(a) != len(b):
            return False
        if self.is_exact and other.is_exact:
            return a == b
        return all(abs(x - y) <= tol for x, y in zip(a, b))

    def to_list(self) -> list[dict]:
        return [{"value": v, "multiplicity": k, "exact": self.is_exact} for v, k in self.entries]

    def __str__(self) -> str:
        def fmt(v: int | float) -> str:
            return str(v) if self.is_exact else f"{v:.6g}"

        parts = [fmt(v) if k == 1 else f"[{fmt(v)}]^{k}" for v, k in self.entries]
        return "{" + ", ".join(parts) + "}"


def group_eigenvalues(values: Iterable[float], tol: float = GROUP_TOL) -> list[tuple[float, int]]:
    """Cluster sorted eigenvalues whose consecutive gaps are within tol."""
    vals = sorted((float(v) for v in values), reverse=True)
    groups: list[list[float]] = []
    for v in vals:
        if groups and groups[-1][-1] - v <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [(sum(g) / len(g), len(g)) for g in groups]


@dataclass(frozen=True)
class Discriminant:
    k: int
    value: CycValue

    def as_integer(self) -> int | None:
        return self.value.as_integer()


def split_parity(S: ConnectionSet) -> tuple[list[int], list[int]]:
    """Indices of S with even (S1) and odd (S2) exponent of a."""
    s1, s2 = [], []
    for idx in S.indices:
        (s2 if (idx // 3) % 2 else s1).append(idx)
    return s1, s2


def degree_two_terms(S: ConnectionSet, k: int) -> tuple[CycValue, CycValue]:
    """(psi_k(S1), psi_k(S1^2) + psi_k(S2^2)): the sum and power sum of the psi_k pair."""
    ch = psi(S.n, k)
    s1, s2 = split_parity(S)
    return char_sum(ch, s1), char_sum_product(ch, s1, s1) + char_sum_product(ch, s2, s2)


def discriminant(S: ConnectionSet, k: int) -> Discriminant:
    """2 (psi_k(S1^2) + psi_k(S2^2)) - psi_k(S1)^2."""
    if not 0 <= k < S.n:
        raise ParameterError(f"k must lie in [0, {S.n}), got {k}")
    trace, square_sum = degree_two_terms(S, k)
    return Discriminant(k, square_sum.scale(2) - trace * trace)


def _exact_pair(trace: CycValue, disc: CycValue) -> tuple[int, int] | None:
    t, d = trace.as_integer(), disc.as_integer()
    if t is None or d is None or d < 0:
        return None
    r = math.isqrt(d)
    if r * r != d:
        return None
    if (t + r) % 2:
        raise ArithmeticError("rational eigenvalue pair is not integral")
    return (t + r) // 2, (t - r) // 2


def babai_spectrum(S: ConnectionSet) -> Spectrum:
    S.validate()
    n = S.n
    lambdas = [char_sum(chi(n, j), S.indices) for j in range(2 * n)]
    pairs = []
    for k in range(n):
        trace, square_sum = degree_two_terms(S, k)
        pairs.append((trace, square_sum.scale(2) - trace * trace))

    ints = [v.as_integer() for v in lambdas]
    exact_pairs = [_exact_pair(t, d) for t, d in pairs]
    if all(v is not None for v in ints) and all(p is not None for p in exact_pairs):
        values = list(ints)
        for mu1, mu2 in exact_pairs:
            values += [mu1, mu1, mu2, mu2]
        return Spectrum.from_values(values, EXACT, n, len(S))

    values = [v.numeric().real for v in lambdas]
    for trace, disc in pairs:
        t, d = trace.numeric().real, disc.numeric().real
        r = math.sqrt(max(d, 0.0))
        values += [(t + r) / 2] * 2 + [(t - r) / 2] * 2
    return Spectrum.from_values(values, NUMERIC, n, len(S))


def brute_spectrum(S: ConnectionSet) -> Spectrum:
    ev = jacobi_eigenvalues(cayley_adjacency(S))
    return Spectrum.from_values(ev, NUMERIC, S.n, len(S))


def exact_integer_spectrum(S: ConnectionSet) -> Spectrum | None:
    """Full integer spectrum if the characteristic polynomial splits over Z, else None."""
    A = cayley_adjacency(S)
    roots, rest = integer_roots(charpoly(A), len(S))
    if len(rest) > 1:
        return None
    values = [r for r, k in roots.items() for _ in range(k)]
    return Spectrum.from_values(values, EXACT, S.n, len(S))
