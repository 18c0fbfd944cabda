"""Dense symmetric eigenvalues and exact characteristic polynomials.

Both routines are deliberately generic (they know nothing about groups or
characters) because they serve as independent oracles for the character-based
spectrum.
"""

from __future__ import annotations

import numpy as np

__all__ = ["jacobi_eigenvalues", "round_robin_pairs", "charpoly", "integer_roots"]


def round_robin_pairs(size: int) -> list[list[tuple[int, int]]]:
    """Tournament schedule: size-1 (or size) rounds of disjoint index pairs
    covering every unordered pair exactly once."""
    players = list(range(size)) + ([-1] if size % 2 else [])
    P = len(players)
    rounds = []
    for _ in range(P - 1):
        pairs = []
        for k in range(P // 2):
            p, q = players[k], players[P - 1 - k]
            if p >= 0 and q >= 0:
                pairs.append((min(p, q), max(p, q)))
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(A: np.ndarray, tol: float | None = None, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps use the round-robin ordering: each round applies a block of
    disjoint plane rotations at once, as a single orthogonal similarity.
    Returned in descending order.
    """
    A = np.array(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(A, A.T):
        raise ValueError("matrix is not symmetric")
    N = A.shape[0]
    if N <= 1:
        return np.diag(A).copy()
    schedule = [np.array(r, dtype=np.intp) for r in round_robin_pairs(N)]
    scale = max(np.linalg.norm(A), 1.0)
    eps = np.finfo(float).eps
    # roundoff floor of the off-diagonal norm grows roughly like N * eps
    if tol is None:
        tol = 4.0 * N * eps
    skip = eps * scale
    for _ in range(max_sweeps):
        off = np.linalg.norm(A - np.diag(np.diag(A)))
        if off <= tol * scale:
            break
        for pairs in schedule:
            p, q = pairs[:, 0], pairs[:, 1]
            apq = A[p, q]
            active = np.abs(apq) > skip
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (A[q, q] - A[p, p]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            root = np.sqrt(1.0 + np.where(big, 0.0, theta * theta))
            t = np.where(big, 0.5 / np.where(big, theta, 1.0),
                         np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + root))
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            J = np.eye(N)
            J[p, p] = c
            J[q, q] = c
            J[p, q] = s
            J[q, p] = -s
            A = J.T @ A @ J
            A = 0.5 * (A + A.T)
    else:
        raise ArithmeticError("Jacobi iteration did not converge")
    return np.sort(np.diag(A))[::-1]


def charpoly(A: np.ndarray) -> list[int]:
    """Characteristic polynomial det(xI - A) of an integer matrix, exactly.

    Faddeev-LeVerrier over Python integers; coefficients high -> low degree,
    leading coefficient 1.
    """
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.issubdtype(A.dtype, np.integer) and not (A.dtype == object):
        if not np.all(A == np.round(A)):
            raise ValueError("matrix entries must be integers")
        A = A.astype(np.int64)
    N = A.shape[0]
    # A @ M as weighted sums of rows of M; adjacency matrices are sparse 0/1
    rows = []
    for i in range(N):
        nz = np.flatnonzero(A[i])
        w = [int(x) for x in A[i, nz]]
        rows.append((nz, None if all(x == 1 for x in w) else np.array(w, dtype=object)[:, None]))
    coeffs = [1]
    M = np.zeros((N, N), dtype=object)  # M_0 = 0
    c = 1
    for k in range(1, N + 1):
        M = M.copy()
        M[np.diag_indices(N)] += c  # M_k = A M_{k-1} + c_{N-k+1} I
        AM = np.empty((N, N), dtype=object)
        for i, (nz, w) in enumerate(rows):
            if nz.size == 0:
                AM[i] = 0
            elif w is None:
                AM[i] = M[nz].sum(axis=0)
            else:
                AM[i] = (M[nz] * w).sum(axis=0)
        tr = sum(AM[t, t] for t in range(N))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-integral Faddeev-LeVerrier coefficient")
        c = q
        coeffs.append(c)
        M = AM
    return coeffs


def _divide_linear(coeffs: list[int], r: int) -> tuple[list[int], int]:
    """Synthetic division by (x - r); returns (quotient, remainder)."""
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + r * out[-1])
    return out[:-1], out[-1]


def integer_roots(coeffs: list[int], bound: int) -> tuple[dict[int, int], list[int]]:
    """Strip integer roots in [-bound, bound] from a monic integer polynomial.

    Returns the root multiplicities and the leftover cofactor.
    """
    roots: dict[int, int] = {}
    poly = list(coeffs)
    for r in range(-bound, bound + 1):
        while len(poly) > 1:
            quot, rem = _divide_linear(poly, r)
            if rem:
                break
            roots[r] = roots.get(r, 0) + 1
            poly = quot
    return roots, poly
