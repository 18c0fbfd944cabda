import cmath
import random

import numpy as np
import pytest

from u6n_integral.group import ConnectionSet


def rep_matrices(n):
    """Explicit irreducible representations of U_6n as (name, rho(a), rho(b)).

    Linear: a -> w^j, b -> 1.  Degree two: b -> diag(z, z^-1) with z a primitive
    cube root, a -> [[0, w^2k], [1, 0]].  Independent of the package's table.
    """
    w = cmath.exp(1j * cmath.pi / n)
    z = cmath.exp(2j * cmath.pi / 3)
    reps = []
    for j in range(2 * n):
        reps.append((f"chi_{j}", np.array([[w**j]]), np.array([[1.0 + 0j]])))
    for k in range(n):
        A = np.array([[0, w ** (2 * k)], [1, 0]], dtype=complex)
        B = np.diag([z, 1 / z])
        reps.append((f"psi_{k}", A, B))
    return reps


def rep_trace(A, B, i, j):
    return np.trace(np.linalg.matrix_power(A, i) @ np.linalg.matrix_power(B, j))


def parse(n, text):
    return ConnectionSet.parse(n, text)


@pytest.fixture
def rng():
    return random.Random(20240515)
