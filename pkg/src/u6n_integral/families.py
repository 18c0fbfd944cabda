"""Explicit infinite families of connected integral Cayley graphs over U_6n."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .group import ConnectionSet, Element, ParameterError, cayley_adjacency, generates
from .spectral import EXACT, Spectrum, babai_spectrum, exact_integer_spectrum

__all__ = ["FAMILIES", "FamilySpec", "family", "predicted_spectrum", "family_report", "verify_family", "srg_check"]

log = logging.getLogger(__name__)

FAMILIES = ("cor-3x", "4-first", "4-second", "4-third")


def _cor3x(p: int) -> tuple[int, list[Element], list[tuple[int, int]]]:
    if p <= 2:
        raise ParameterError(f"family cor-3x needs p > 2, got {p}")
    n = 2 * p
    S = [Element(n, 4 * r, 0) for r in range(1, p)]
    S += [Element(n, 2 * l, 1) for l in range(1, n)] + [Element(n, -2 * l, 2) for l in range(1, n)]
    S += [Element(n, 2 * r + 1, 1) for r in range(n)]
    spectrum = [(-3, 4 * p - 4), (0, 8 * p - 8), (p, 6), (p - 3, 2), (3 * p - 3, 1), (-3 * p, 2), (7 * p - 3, 1)]
    return n, S, spectrum


def _first(n: int) -> tuple[int, list[Element], list[tuple[int, int]]]:
    S = [Element(n, 2 * r, 0) for r in range(1, n)]
    S += [Element(n, 2 * r + 1, j) for r in range(n) for j in (0, 1)]
    return n, S, [(-n - 1, 1), (-1, 6 * n - 4), (2 * n - 1, 2), (3 * n - 1, 1)]


def _second(n: int) -> tuple[int, list[Element], list[tuple[int, int]]]:
    S = [Element(n, 2 * r, j) for r in range(1, n) for j in (1, 2)]
    S += [Element(n, 2 * r + 1, 1) for r in range(n)]
    return n, S, [(1 - 2 * n, 2), (-2, 2 * n - 2), (1, 4 * n - 2), (n - 2, 1), (3 * n - 2, 1)]


def _third(n: int) -> tuple[int, list[Element], list[tuple[int, int]]]:
    S = [Element(n, 2 * r, j) for r in range(1, n) for j in range(3)]
    S += [Element(n, 2 * h + 1, j) for h in range(n) for j in range(3)]
    return n, S, [(-3, 2 * n - 1), (0, 4 * n), (6 * n - 3, 1)]


_BUILDERS: dict[str, Callable[[int], tuple[int, list[Element], list[tuple[int, int]]]]] = {
    "cor-3x": _cor3x,
    "4-first": _first,
    "4-second": _second,
    "4-third": _third,
}


def _canonical_id(fid: str) -> str:
    # accept "cor-4-first" as an alias of "4-first"
    return fid[4:] if fid.startswith("cor-4-") else fid


@dataclass(frozen=True)
class FamilySpec:
    id: str
    param: int
    n: int
    S: ConnectionSet
    predicted: Spectrum


def predicted_spectrum(fid: str, param: int) -> Spectrum:
    return family(fid, param).predicted


def family(fid: str, param: int) -> FamilySpec:
    fid = _canonical_id(fid)
    if fid not in _BUILDERS:
        raise ParameterError(f"unknown family {fid!r}; choose from {', '.join(FAMILIES)}")
    if not isinstance(param, int) or (fid != "cor-3x" and param <= 1):
        raise ParameterError(f"family {fid} needs n > 1, got {param}")
    n, elems, formula = _BUILDERS[fid](param)
    S = ConnectionSet.from_elements(n, elems)  # validates identity-free, inverse-closed
    if len(S) != len(elems):
        raise AssertionError(f"family {fid} produced repeated elements")
    values = [v for v, k in formula for _ in range(k)]
    predicted = Spectrum.from_values(values, EXACT, n, len(S))
    return FamilySpec(fid, param, n, S, predicted)


def family_report(spec: FamilySpec) -> dict:
    babai = babai_spectrum(spec.S)
    exact = exact_integer_spectrum(spec.S)
    connected = generates(spec.S)
    ok = connected and exact is not None and babai.matches(spec.predicted) and exact.matches(spec.predicted)
    return {
        "id": spec.id,
        "param": spec.param,
        "n": spec.n,
        "size": len(spec.S),
        "connected": connected,
        "predicted": str(spec.predicted),
        "babai": str(babai),
        "exact": None if exact is None else str(exact),
        "ok": ok,
    }


def verify_family(spec: FamilySpec) -> bool:
    """Predicted, character-based and characteristic-polynomial spectra coincide and S generates."""
    rep = family_report(spec)
    if not rep["ok"]:
        log.warning(
            "family %s(%d) mismatch: predicted %s | babai %s | exact %s | connected=%s",
            spec.id, spec.param, rep["predicted"], rep["babai"], rep["exact"], rep["connected"],
        )
    return rep["ok"]


def srg_check(S: ConnectionSet, v: int, k: int, lam: int, mu: int) -> bool:
    """A^2 == k I + lam A + mu (J - I - A) entry-wise, with v = 6n vertices."""
    A = cayley_adjacency(S)
    N = A.shape[0]
    if v != N:
        return False
    I = np.eye(N, dtype=np.int64)
    J = np.ones((N, N), dtype=np.int64)
    return bool(np.array_equal(A @ A, k * I + lam * A + mu * (J - I - A)))
