"""Character table of U_6n and characters of its cyclic subgroups.

With omega = exp(pi*i/n) every irreducible value has the form c * omega^e for
c in {0, 1, 2, -1}, so each character is stored as two integer arrays over the
element indices (coefficient and exponent) and sums are built by counting
exponents before a single reduction.

    linear chi_j (j < 2n):  chi_j(a^i b^t) = omega^(j*i)
    degree-two psi_k (k < n):
        psi_k(a^2r)              =  2 omega^(2kr)
        psi_k(a^2r b), (a^2r b^2) = -omega^(2kr)
        psi_k(a^(2r+1) b^t)       =  0
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CycValue, from_exponent_counts, root_power
from .group import Element, ParameterError, _check_n, _conjugacy_classes, mul_table

__all__ = [
    "Character",
    "CharacterTable",
    "CyclicCharacters",
    "char_table",
    "char_sum",
    "char_sum_product",
    "cyclic_chars",
    "chi",
    "psi",
]


@dataclass(frozen=True, eq=False)
class Character:
    """One irreducible character of U_6n, tabulated over all 6n elements."""

    n: int
    kind: str  # "chi" or "psi"
    index: int
    coef: np.ndarray = field(repr=False)
    expo: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return int(self.coef[0])

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.index}"

    @property
    def m(self) -> int:
        return 2 * self.n

    def __call__(self, x: Element) -> CycValue:
        return self.coef[x.index] * root_power(self.m, int(self.expo[x.index]))

    def sum_indices(self, idx: np.ndarray | Sequence[int]) -> CycValue:
        """Exact sum of the character over a multiset of element indices."""
        idx = np.asarray(idx, dtype=np.int64).ravel()
        counts = np.zeros(self.m, dtype=np.int64)
        if idx.size:
            np.add.at(counts, self.expo[idx], self.coef[idx])
        return from_exponent_counts(self.m, counts.tolist())


@lru_cache(maxsize=None)
def _chi(n: int, j: int) -> Character:
    i = np.repeat(np.arange(2 * n), 3)
    coef = np.ones(6 * n, dtype=np.int64)
    expo = (j * i) % (2 * n)
    coef.setflags(write=False)
    expo.setflags(write=False)
    return Character(n, "chi", j, coef, expo)


@lru_cache(maxsize=None)
def _psi(n: int, k: int) -> Character:
    i = np.repeat(np.arange(2 * n), 3)
    t = np.tile(np.arange(3), 2 * n)
    coef = np.where(i % 2 == 1, 0, np.where(t == 0, 2, -1)).astype(np.int64)
    expo = (k * i) % (2 * n)
    coef.setflags(write=False)
    expo.setflags(write=False)
    return Character(n, "psi", k, coef, expo)


def chi(n: int, j: int) -> Character:
    n = _check_n(n)
    if not 0 <= j < 2 * n:
        raise ParameterError(f"linear character index must lie in [0, {2 * n}), got {j}")
    return _chi(n, j)


def psi(n: int, k: int) -> Character:
    n = _check_n(n)
    if not 0 <= k < n:
        raise ParameterError(f"degree-two character index must lie in [0, {n}), got {k}")
    return _psi(n, k)


@dataclass(frozen=True)
class CharacterTable:
    n: int
    linear: tuple[Character, ...]
    degree2: tuple[Character, ...]
    classes: tuple[tuple[Element, ...], ...]
    values: tuple[tuple[CycValue, ...], ...]  # rows: linear then degree2; columns: classes

    @property
    def rows(self) -> tuple[Character, ...]:
        return self.linear + self.degree2

    def degrees(self) -> list[int]:
        return [c.degree for c in self.rows]

    def inner(self, p: int, q: int) -> CycValue:
        """sum_C |C| chi_p(C) conj(chi_q(C)); equals 6n [p == q]."""
        acc = CycValue.zero(2 * self.n)
        for cls, vp, vq in zip(self.classes, self.values[p], self.values[q]):
            acc = acc + (vp * vq.conjugate()).scale(len(cls))
        return acc


@lru_cache(maxsize=None)
def _char_table(n: int) -> CharacterTable:
    classes = _conjugacy_classes(n)
    linear = tuple(_chi(n, j) for j in range(2 * n))
    degree2 = tuple(_psi(n, k) for k in range(n))
    values = tuple(tuple(c(cls[0]) for cls in classes) for c in linear + degree2)
    return CharacterTable(n, linear, degree2, classes, values)


def char_table(n: int) -> CharacterTable:
    return _char_table(_check_n(n))


def _indices(items: Iterable[Element | int]) -> list[int]:
    return [x.index if isinstance(x, Element) else int(x) for x in items]


def char_sum(ch: Character, A: Iterable[Element | int]) -> CycValue:
    """chi(A) = sum of chi over A; the empty sum is 0."""
    return ch.sum_indices(_indices(A))


def char_sum_product(ch: Character, A: Iterable[Element | int], B: Iterable[Element | int]) -> CycValue:
    """chi(AB) = sum over ordered pairs (x, y) in A x B of chi(x*y)."""
    a, b = _indices(A), _indices(B)
    if not a or not b:
        return CycValue.zero(ch.m)
    table = mul_table(ch.n)
    return ch.sum_indices(table[np.ix_(a, b)])


@dataclass(frozen=True)
class CyclicCharacters:
    """Characters rho_j(g^r) = zeta^(j*r) of a cyclic group <g> of order m.

    Values are expressed with a root of order ``root_order`` (a multiple of m)
    so that <a^2> inside <a> can share omega: there g = a^2, m = n and
    rho_k(a^2r) = omega^(2kr).
    """

    m: int
    root_order: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.root_order % self.m:
            raise ParameterError(f"root order {self.root_order} is not a multiple of {self.m}")

    @property
    def step(self) -> int:
        return self.root_order // self.m

    def value(self, j: int, r: int) -> CycValue:
        return root_power(self.root_order, self.step * j * r)

    def sum(self, j: int, exponents: Iterable[int]) -> CycValue:
        """rho_j(T) for T = {g^r : r in exponents}."""
        counts = [0] * self.root_order
        for r in exponents:
            counts[(self.step * j * r) % self.root_order] += 1
        return from_exponent_counts(self.root_order, counts)

    def rows(self) -> list[list[CycValue]]:
        return [[self.value(j, r) for r in range(self.m)] for j in range(self.m)]


def cyclic_chars(m: int, root_order: int | None = None) -> CyclicCharacters:
    return CyclicCharacters(m, m if root_order is None else root_order)
