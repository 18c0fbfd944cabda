"""Enumeration and census of connection sets of U_6n.

Sets are built by free choice over inversion orbits {x, x^-1} of the
non-identity elements, so every candidate is inverse-closed by construction.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Iterator

from .group import ConnectionSet, ParameterError, _check_n, generates, inv_table
from .integrality import ConsistencyError, decide
from .spectral import exact_integer_spectrum

__all__ = [
    "CensusRow",
    "DEFAULT_MAX_ORBITS",
    "inversion_orbits",
    "enumerate_connection_sets",
    "random_connection_set",
    "random_refined_set",
    "classify",
    "census",
]

DEFAULT_MAX_ORBITS = 24


@lru_cache(maxsize=None)
def _orbits(n: int) -> tuple[tuple[int, ...], ...]:
    itab = inv_table(n)
    seen, out = set(), []
    for k in range(1, 6 * n):
        if k in seen:
            continue
        orbit = tuple(sorted({k, int(itab[k])}))
        seen.update(orbit)
        out.append(orbit)
    return tuple(out)


def inversion_orbits(n: int) -> list[tuple[int, ...]]:
    """Orbits {x, x^-1} on non-identity element indices, ordered by smallest index."""
    return list(_orbits(_check_n(n)))


def _mask(orbits: tuple[tuple[int, ...], ...], choice: int) -> int:
    mask, t = 0, 0
    while choice:
        if choice & 1:
            for k in orbits[t]:
                mask |= 1 << k
        choice >>= 1
        t += 1
    return mask


def enumerate_connection_sets(
    n: int, connected_only: bool = False, max_orbits: int = DEFAULT_MAX_ORBITS
) -> Iterator[ConnectionSet]:
    """Yield every identity-free inverse-closed subset once; bit t of the
    counter selects orbit t."""
    orbits = _orbits(_check_n(n))
    c = len(orbits)
    if c > max_orbits:
        raise ParameterError(f"n={n} has {c} inversion orbits (2^{c} sets), above the cap of {max_orbits}")
    for choice in range(1 << c):
        S = ConnectionSet(n, _mask(orbits, choice), validate=False)
        if connected_only and not generates(S):
            continue
        yield S


def random_connection_set(n: int, rng: random.Random, p: float = 0.5) -> ConnectionSet:
    """Each inversion orbit included independently with probability p."""
    orbits = _orbits(_check_n(n))
    choice = sum(1 << t for t in range(len(orbits)) if rng.random() < p)
    return ConnectionSet(n, _mask(orbits, choice), validate=False)


def random_refined_set(n: int, rng: random.Random) -> ConnectionSet:
    """Random set with S1 = {a^2r : r in R} u {a^2l b, a^-2l b^2 : l in L}, L = -L."""
    n = _check_n(n)
    mask = 0
    for r in range(1, n):
        if r <= n - r and rng.random() < 0.5:
            for e in {r, (n - r) % n}:
                mask |= 1 << (6 * e)
    for l in range(n):
        if l <= (n - l) % n and rng.random() < 0.5:
            for e in {l, (n - l) % n}:
                mask |= 1 << (6 * e + 1)
                mask |= 1 << (6 * ((n - e) % n) + 2)
    for orbit in _orbits(n):
        if (orbit[0] // 3) % 2 and rng.random() < 0.5:
            for k in orbit:
                mask |= 1 << k
    return ConnectionSet(n, mask)


@dataclass(frozen=True)
class CensusRow:
    set: str
    size: int
    connected: bool
    integral: bool
    criterion: str
    spectrum: str | None

    def to_dict(self) -> dict:
        return asdict(self)


def classify(S: ConnectionSet) -> CensusRow:
    """Run the criterion cascade and the exact oracle; they must agree."""
    report = decide(S)
    exact = exact_integer_spectrum(S)
    if report.verdict != (exact is not None):
        raise ConsistencyError(
            f"{report.criterion} says {report.verdict} but the characteristic polynomial says {exact is not None} for {S!r}"
        )
    return CensusRow(
        set=str(S),
        size=len(S),
        connected=generates(S),
        integral=report.verdict,
        criterion=report.criterion,
        spectrum=None if exact is None else str(exact),
    )


def census(
    n: int,
    sample: int | None = None,
    seed: int = 0,
    connected_only: bool = False,
    workers: int = 1,
    max_orbits: int = DEFAULT_MAX_ORBITS,
) -> list[CensusRow]:
    """Classify all connection sets (``sample=None``) or ``sample`` seeded random ones.

    Rows come back in generation order regardless of ``workers``.
    """
    if sample is None:
        sets = list(enumerate_connection_sets(n, connected_only, max_orbits))
    else:
        if sample < 0:
            raise ParameterError("sample count must be non-negative")
        rng = random.Random(seed)
        sets = []
        while len(sets) < sample:
            S = random_connection_set(n, rng)
            if connected_only and not generates(S):
                continue
            sets.append(S)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(classify, sets, chunksize=16))
    return [classify(S) for S in sets]
