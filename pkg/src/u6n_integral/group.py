"""Arithmetic in U_6n = <a, b | a^(2n) = b^3 = 1, a^-1 b a = b^-1>.

Every element is stored in the canonical form a^i b^j with 0 <= i < 2n and
0 <= j < 3.  Moving b^j past a^i only flips the sign of j when i is odd, so
multiplication is O(1) without any rewriting.

Elements are indexed as ``3*i + j``; adjacency matrices, bitmasks and every
other array in the package use that layout.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "ParameterError",
    "InvalidConnectionSet",
    "Element",
    "ConnectionSet",
    "identity",
    "mul",
    "inv",
    "elements",
    "mul_table",
    "inv_table",
    "conjugacy_classes",
    "generates",
    "cayley_adjacency",
    "parse_element",
]


class ParameterError(ValueError):
    """Raised for a bad group parameter or a mismatch between parameters."""


class InvalidConnectionSet(ValueError):
    """The set contains the identity or is not closed under inversion."""


def _check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ParameterError(f"group parameter n must be a positive integer, got {n!r}")
    return int(n)


@dataclass(frozen=True, order=True)
class Element:
    """The element a^i b^j of U_6n."""

    n: int
    i: int
    j: int

    def __post_init__(self) -> None:
        n = _check_n(self.n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "i", int(self.i) % (2 * n))
        object.__setattr__(self, "j", int(self.j) % 3)

    @classmethod
    def from_index(cls, n: int, index: int) -> Element:
        if not 0 <= index < 6 * n:
            raise ParameterError(f"index {index} out of range for n={n}")
        return cls(n, index // 3, index % 3)

    @property
    def index(self) -> int:
        return 3 * self.i + self.j

    @property
    def is_identity(self) -> bool:
        return self.i == 0 and self.j == 0

    def __mul__(self, other: Element) -> Element:
        return mul(self, other)

    def inverse(self) -> Element:
        return inv(self)

    def order(self) -> int:
        x, k = self, 1
        while not x.is_identity:
            x = mul(x, self)
            k += 1
        return k

    def __str__(self) -> str:
        if self.i == 0 and self.j == 0:
            return "1"
        if self.j == 0:
            return f"a^{self.i}"
        if self.i == 0:
            return f"b^{self.j}"
        return f"a^{self.i}*b^{self.j}"


def identity(n: int) -> Element:
    return Element(n, 0, 0)


def mul(x: Element, y: Element) -> Element:
    """Product x*y using b^j a^i = a^i b^((-1)^i j)."""
    if x.n != y.n:
        raise ParameterError(f"cannot multiply elements of U_{6 * x.n} and U_{6 * y.n}")
    twist = x.j if y.i % 2 == 0 else -x.j
    return Element(x.n, x.i + y.i, twist + y.j)


def inv(x: Element) -> Element:
    # (a^i b^j)^-1 = b^-j a^-i = a^-i b^(-(-1)^i j)
    j = -x.j if x.i % 2 == 0 else x.j
    return Element(x.n, -x.i, j)


def elements(n: int) -> list[Element]:
    """All 6n elements in index order."""
    n = _check_n(n)
    return [Element(n, i, j) for i in range(2 * n) for j in range(3)]


@lru_cache(maxsize=None)
def _mul_table(n: int) -> np.ndarray:
    els = elements(n)
    table = np.empty((6 * n, 6 * n), dtype=np.int64)
    for x in els:
        for y in els:
            table[x.index, y.index] = mul(x, y).index
    table.setflags(write=False)
    return table


def mul_table(n: int) -> np.ndarray:
    """Read-only table T with T[x, y] = index of x*y."""
    return _mul_table(_check_n(n))


@lru_cache(maxsize=None)
def _inv_table(n: int) -> np.ndarray:
    table = np.array([inv(x).index for x in elements(n)], dtype=np.int64)
    table.setflags(write=False)
    return table


def inv_table(n: int) -> np.ndarray:
    return _inv_table(_check_n(n))


@lru_cache(maxsize=None)
def _conjugacy_classes(n: int) -> tuple[tuple[Element, ...], ...]:
    classes: list[tuple[Element, ...]] = []
    for r in range(n):
        classes.append((Element(n, 2 * r, 0),))
        classes.append((Element(n, 2 * r, 1), Element(n, 2 * r, 2)))
        classes.append(tuple(Element(n, 2 * r + 1, j) for j in range(3)))
    els = elements(n)
    for cls in classes:
        members = set(cls)
        for x in cls:
            for g in els:
                if mul(inv(g), mul(x, g)) not in members:
                    raise AssertionError(f"class of {x} is not closed under conjugation by {g}")
    if sum(len(c) for c in classes) != 6 * n or len(set().union(*map(set, classes))) != 6 * n:
        raise AssertionError("conjugacy classes do not partition the group")
    return tuple(classes)


def conjugacy_classes(n: int) -> list[list[Element]]:
    """The 3n classes, ordered {a^2r}, {a^2r b, a^2r b^2}, {a^2r+1 b^j} for r = 0..n-1."""
    return [list(c) for c in _conjugacy_classes(_check_n(n))]


@lru_cache(maxsize=None)
def class_index(n: int) -> tuple[int, ...]:
    """Map element index -> position of its conjugacy class."""
    out = [0] * (6 * n)
    for k, cls in enumerate(_conjugacy_classes(_check_n(n))):
        for x in cls:
            out[x.index] = k
    return tuple(out)


_TOKEN = re.compile(r"^(?:(?P<a>a(?:\^(?P<i>-?\d+))?)(?:\*(?P<b1>b(?:\^(?P<j1>-?\d+))?))?|(?P<b2>b(?:\^(?P<j2>-?\d+))?))$")


def parse_element(token: str, n: int) -> Element:
    """Parse ``1``, ``a^i``, ``b^j`` or ``a^i*b^j`` (exponents reduced mod 2n / 3)."""
    t = token.strip().replace(" ", "")
    if t == "1":
        return identity(n)
    m = _TOKEN.match(t)
    if not m:
        raise ParameterError(f"malformed element token {token!r}")
    i = j = 0
    if m.group("a"):
        i = int(m.group("i")) if m.group("i") is not None else 1
        if m.group("b1"):
            j = int(m.group("j1")) if m.group("j1") is not None else 1
    else:
        j = int(m.group("j2")) if m.group("j2") is not None else 1
    return Element(n, i, j)


class ConnectionSet:
    """An identity-free, inverse-closed subset S of U_6n.

    Membership is kept as an integer bitmask over element indices.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0, validate: bool = True) -> None:
        self.n = _check_n(n)
        if mask < 0 or mask >> (6 * self.n):
            raise ParameterError("bitmask has bits outside the group")
        self.mask = int(mask)
        if validate:
            self.validate()

    @classmethod
    def from_elements(cls, n: int, items: Iterable[Element | int], validate: bool = True) -> ConnectionSet:
        mask = 0
        for x in items:
            if isinstance(x, Element):
                if x.n != n:
                    raise ParameterError(f"element {x} belongs to n={x.n}, not n={n}")
                mask |= 1 << x.index
            else:
                mask |= 1 << int(x)
        return cls(n, mask, validate=validate)

    @classmethod
    def parse(cls, n: int, text: str, validate: bool = True) -> ConnectionSet:
        tokens = [t for t in text.split(",") if t.strip()]
        return cls.from_elements(n, (parse_element(t, n) for t in tokens), validate=validate)

    def validate(self) -> None:
        if self.mask & 1:
            raise InvalidConnectionSet("connection set contains the identity")
        itab = inv_table(self.n)
        for k in self.indices:
            if not self.mask >> int(itab[k]) & 1:
                x = Element.from_index(self.n, k)
                raise InvalidConnectionSet(f"{x} is in the set but its inverse {inv(x)} is not")

    @property
    def indices(self) -> list[int]:
        m, out, k = self.mask, [], 0
        while m:
            if m & 1:
                out.append(k)
            m >>= 1
            k += 1
        return out

    @property
    def elements(self) -> list[Element]:
        return [Element.from_index(self.n, k) for k in self.indices]

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x: Element) -> bool:
        return x.n == self.n and bool(self.mask >> x.index & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConnectionSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.elements)

    def __repr__(self) -> str:
        return f"ConnectionSet(n={self.n}, {{{self}}})"


def generates(S: ConnectionSet) -> bool:
    """True iff S generates U_6n, i.e. Cay(U_6n, S) is connected."""
    table = mul_table(S.n)
    gens = S.indices
    seen = {0}
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = int(table[g, s])
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return len(seen) == 6 * S.n


def cayley_adjacency(S: ConnectionSet) -> np.ndarray:
    """0/1 matrix with A[g, h] = 1 iff h = s*g for some s in S."""
    size = 6 * S.n
    table = mul_table(S.n)
    A = np.zeros((size, size), dtype=np.int64)
    rows = np.arange(size)
    for s in S.indices:
        A[rows, table[s, rows]] = 1
    return A
