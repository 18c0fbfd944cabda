"""Decision procedures for integrality of Cay(U_6n, S).

Criteria implemented, from most to least specialised:

* ``boolean-S1``: S1 inside <a^2>; S1 in B(<a^2>), chi_j(S2) integral,
  2 psi_k(S2^2) a perfect square.
* ``boolean-SL``: S1 = {a^2l b, a^-2l b^2 : l in L}, S_L = S_L^-1; S_L in
  B(<a^2>), chi_j(S2) integral, 2 psi_k(S2^2) a perfect square.
* ``boolean-RH``: S1 = {a^2r, a^2r b, a^-2r b^2 : r in R}, S2 a union of full
  cosets a^(2h+1)<b>; S_R u S_H in B(<a>), 2 psi_k(S2^2) a perfect square.
* ``refined``: S_L = S_L^-1; 3 rho_j(S_R) + chi_j(S2) and 3 rho_j(S_L) +
  chi_j(S2) integral, 2 psi_k(S2^2) a perfect square.
* ``general``: chi_j(S), psi_k(S1), psi_k(S1^2) + psi_k(S2^2) integral and
  every discriminant a perfect square.  Always applicable.

For a subset T of a cyclic group, membership in the Boolean algebra generated
by subgroups is tested through atoms (elements of equal order) and compared
with the character test; the two must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable

from .characters import char_sum, char_sum_product, chi, cyclic_chars, psi
from .cyclotomic import CycValue
from .group import ConnectionSet, ParameterError
from .spectral import degree_two_terms, discriminant, exact_integer_spectrum, split_parity

__all__ = [
    "ConsistencyError",
    "PartitionedSet",
    "IntegralityReport",
    "split",
    "is_perfect_square",
    "atoms",
    "atom_decomposition",
    "boolean_membership",
    "is_integral_set_cyclic",
    "is_integral_general",
    "is_integral_refined",
    "is_integral_boolean_S1",
    "is_integral_boolean_SL",
    "is_integral_boolean_RH",
    "specialised_reports",
    "decide",
    "CRITERIA",
]

CRITERIA = ("general", "refined", "boolean-S1", "boolean-SL", "boolean-RH", "oracle")


class ConsistencyError(RuntimeError):
    """Two procedures that must agree gave different answers."""


@dataclass(frozen=True)
class PartitionedSet:
    n: int
    S1: tuple[int, ...]
    S2: tuple[int, ...]
    R: frozenset[int]
    L: frozenset[int]
    L_mirror: frozenset[int]  # {l : a^(-2l) b^2 in S1}, read independently of L
    H: frozenset[int] | None  # set when S2 is a union of full cosets a^(2h+1)<b>

    @property
    def mirrored(self) -> bool:
        return self.L == self.L_mirror

    @property
    def L_symmetric(self) -> bool:
        return self.L == frozenset((-l) % self.n for l in self.L)

    @property
    def refined_shape(self) -> bool:
        return self.mirrored and self.L_symmetric

    @property
    def shape_S1(self) -> bool:
        return not self.L and not self.L_mirror

    @property
    def shape_SL(self) -> bool:
        return not self.R and self.refined_shape

    @property
    def shape_RH(self) -> bool:
        return self.mirrored and self.R == self.L and self.H is not None

    @property
    def SR_exponents(self) -> list[int]:
        """S_R as exponents of a."""
        return sorted(2 * r for r in self.R)

    @property
    def SL_exponents(self) -> list[int]:
        return sorted(2 * l for l in self.L)


def split(S: ConnectionSet) -> PartitionedSet:
    n = S.n
    s1, s2 = split_parity(S)
    R = frozenset(idx // 6 for idx in s1 if idx % 3 == 0)
    L = frozenset(idx // 6 for idx in s1 if idx % 3 == 1)
    L_mirror = frozenset((-(idx // 6)) % n for idx in s1 if idx % 3 == 2)
    odd = {}
    for idx in s2:
        odd.setdefault(idx // 3, set()).add(idx % 3)
    H = None
    if all(len(bs) == 3 for bs in odd.values()):
        H = frozenset((i - 1) // 2 for i in odd)
    return PartitionedSet(n, tuple(s1), tuple(s2), R, L, L_mirror, H)


@dataclass
class IntegralityReport:
    verdict: bool
    criterion: str
    diagnostics: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict, "criterion": self.criterion, "diagnostics": self.diagnostics}


def _show(v: CycValue) -> int | str:
    k = v.as_integer()
    return k if k is not None else str(v)


def is_perfect_square(v: CycValue | int) -> bool:
    k = v.as_integer() if isinstance(v, CycValue) else v
    if k is None or k < 0:
        return False
    r = math.isqrt(k)
    return r * r == k


# --- cyclic groups ---------------------------------------------------------


def atoms(m: int) -> dict[int, list[int]]:
    """Atom of B(Z_m) for each divisor d: exponents t with g^t of order exactly d."""
    if m < 1:
        raise ParameterError(f"cyclic order must be >= 1, got {m}")
    out: dict[int, list[int]] = {d: [] for d in range(1, m + 1) if m % d == 0}
    for t in range(m):
        out[m // math.gcd(t, m)].append(t)
    return out


def _normalise(T: Iterable[int], m: int) -> set[int]:
    out = set()
    for t in T:
        if not 0 <= t < m:
            raise ParameterError(f"exponent {t} outside cyclic group of order {m}")
        out.add(t)
    return out


def atom_decomposition(T: Iterable[int], m: int) -> list[int] | None:
    """Divisors d whose atoms union to T, or None if T is not such a union."""
    T = _normalise(T, m)
    used = []
    for d, atom in atoms(m).items():
        hit = T.intersection(atom)
        if hit and len(hit) != len(atom):
            return None
        if hit:
            used.append(d)
    return used


def boolean_membership(T: Iterable[int], m: int) -> bool:
    """True iff T (exponents of a generator) lies in the Boolean algebra of Z_m."""
    return atom_decomposition(T, m) is not None


def _cyclic_sums_integral(T: set[int], m: int) -> bool:
    rho = cyclic_chars(m)
    return all(rho.sum(j, T).as_integer() is not None for j in range(m))


def is_integral_set_cyclic(T: Iterable[int], m: int) -> bool:
    """True iff every rho_j(T) is an integer; cross-checked against atom membership."""
    T = _normalise(T, m)
    by_chars = _cyclic_sums_integral(T, m)
    by_atoms = boolean_membership(T, m)
    if by_chars != by_atoms:
        raise ConsistencyError(f"T={sorted(T)} in Z_{m}: characters say {by_chars}, atoms say {by_atoms}")
    return by_chars


# --- criteria --------------------------------------------------------------


def is_integral_general(S: ConnectionSet) -> IntegralityReport:
    S.validate()
    n = S.n
    failures: list[str] = []
    chi_vals = {}
    for j in range(2 * n):
        v = char_sum(chi(n, j), S.indices)
        chi_vals[j] = _show(v)
        if v.as_integer() is None:
            failures.append(f"chi_{j}(S) not an integer")
    traces, square_sums, discs = {}, {}, {}
    for k in range(n):
        trace, square_sum = degree_two_terms(S, k)
        disc = discriminant(S, k).value
        traces[k], square_sums[k], discs[k] = _show(trace), _show(square_sum), _show(disc)
        if trace.as_integer() is None:
            failures.append(f"psi_{k}(S1) not an integer")
        if square_sum.as_integer() is None:
            failures.append(f"psi_{k}(S1^2)+psi_{k}(S2^2) not an integer")
        if disc.as_integer() is None:
            failures.append(f"discriminant {k} not an integer")
        elif not is_perfect_square(disc):
            failures.append(f"discriminant {k} = {disc.as_integer()} not a perfect square")
    diag = {
        "chi_S": chi_vals,
        "psi_S1": traces,
        "psi_square_sum": square_sums,
        "discriminant": discs,
        "failures": failures,
    }
    return IntegralityReport(not failures, "general", diag)


def _twice_psi_S2_squared(S: ConnectionSet, s2: Iterable[int]) -> tuple[dict[int, int | str], list[str]]:
    s2 = list(s2)
    vals, failures = {}, []
    for k in range(S.n):
        v = char_sum_product(psi(S.n, k), s2, s2).scale(2)
        vals[k] = _show(v)
        if not is_perfect_square(v):
            failures.append(f"2 psi_{k}(S2^2) = {vals[k]} not a perfect square")
    return vals, failures


def _chi_S2_integral(S: ConnectionSet, s2: Iterable[int]) -> tuple[dict[int, int | str], list[str]]:
    s2 = list(s2)
    vals, failures = {}, []
    for j in range(2 * S.n):
        v = char_sum(chi(S.n, j), s2)
        vals[j] = _show(v)
        if v.as_integer() is None:
            failures.append(f"chi_{j}(S2) not an integer")
    return vals, failures


def is_integral_refined(S: ConnectionSet) -> IntegralityReport | None:
    """Cyclic-character criterion; None unless S_L = S_L^-1 and S1 has mirror shape."""
    S.validate()
    P = split(S)
    if not P.refined_shape:
        return None
    n = S.n
    rho = cyclic_chars(2 * n)
    failures: list[str] = []
    cond_R, cond_L = {}, {}
    for j in range(2 * n):
        c2 = char_sum(chi(n, j), P.S2)
        vr = rho.sum(j, P.SR_exponents).scale(3) + c2
        vl = rho.sum(j, P.SL_exponents).scale(3) + c2
        cond_R[j], cond_L[j] = _show(vr), _show(vl)
        if vr.as_integer() is None:
            failures.append(f"3 rho_{j}(S_R) + chi_{j}(S2) not an integer")
        if vl.as_integer() is None:
            failures.append(f"3 rho_{j}(S_L) + chi_{j}(S2) not an integer")
    squares, sq_fail = _twice_psi_S2_squared(S, P.S2)
    failures += sq_fail
    diag = {
        "R": sorted(P.R),
        "L": sorted(P.L),
        "3rho_SR_plus_chi_S2": cond_R,
        "3rho_SL_plus_chi_S2": cond_L,
        "2psi_S2_squared": squares,
        "failures": failures,
    }
    return IntegralityReport(not failures, "refined", diag)


def _boolean_report(S: ConnectionSet, name: str, T: list[int], m: int, need_chi: bool) -> IntegralityReport:
    P = split(S)
    failures: list[str] = []
    member = is_integral_set_cyclic(T, m)
    diag: dict[str, Any] = {
        "subset": T,
        "cyclic_order": m,
        "member": member,
        "atoms": atom_decomposition(T, m),
    }
    if not member:
        failures.append(f"exponent set {T} not in the Boolean algebra of Z_{m}")
    if need_chi:
        diag["chi_S2"], f = _chi_S2_integral(S, P.S2)
        failures += f
    diag["2psi_S2_squared"], f = _twice_psi_S2_squared(S, P.S2)
    failures += f
    diag["failures"] = failures
    return IntegralityReport(not failures, name, diag)


def is_integral_boolean_S1(S: ConnectionSet) -> IntegralityReport | None:
    S.validate()
    P = split(S)
    if not P.shape_S1:
        return None
    return _boolean_report(S, "boolean-S1", sorted(P.R), S.n, need_chi=True)


def is_integral_boolean_SL(S: ConnectionSet) -> IntegralityReport | None:
    S.validate()
    P = split(S)
    if not P.shape_SL:
        return None
    return _boolean_report(S, "boolean-SL", sorted(P.L), S.n, need_chi=True)


def is_integral_boolean_RH(S: ConnectionSet) -> IntegralityReport | None:
    S.validate()
    P = split(S)
    if not P.shape_RH:
        return None
    assert P.H is not None
    T = sorted(P.SR_exponents + [2 * h + 1 for h in P.H])
    return _boolean_report(S, "boolean-RH", T, 2 * S.n, need_chi=False)


_CASCADE = (is_integral_boolean_S1, is_integral_boolean_SL, is_integral_boolean_RH, is_integral_refined)


def specialised_reports(S: ConnectionSet) -> list[IntegralityReport]:
    """Reports of every specialised criterion whose hypothesis S satisfies."""
    return [r for r in (f(S) for f in _CASCADE) if r is not None]


def decide(S: ConnectionSet, method: str = "cascade", cross_check: bool = False) -> IntegralityReport:
    """Decide integrality.

    ``cascade`` tries the Boolean-algebra shapes, then the refined criterion,
    then the general one, reporting the first that applies.  ``oracle`` uses
    the exact characteristic polynomial.  With ``cross_check`` every
    applicable criterion and the exact oracle must agree.
    """
    if method == "oracle":
        spec = exact_integer_spectrum(S)
        return IntegralityReport(spec is not None, "oracle", {"spectrum": None if spec is None else str(spec)})
    if method != "cascade":
        raise ParameterError(f"unknown method {method!r}")
    report = None
    for f in _CASCADE:
        report = f(S)
        if report is not None:
            break
    if report is None:
        report = is_integral_general(S)
    if cross_check:
        verdicts = {report.criterion: report.verdict}
        verdicts["general"] = is_integral_general(S).verdict
        for r in specialised_reports(S):
            verdicts[r.criterion] = r.verdict
        verdicts["oracle"] = exact_integer_spectrum(S) is not None
        if len(set(verdicts.values())) != 1:
            raise ConsistencyError(f"criteria disagree on {S!r}: {verdicts}")
        report.diagnostics["cross_check"] = verdicts
    return report
