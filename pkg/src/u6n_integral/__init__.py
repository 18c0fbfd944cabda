"""Integral Cayley graphs over U_6n = <a, b | a^2n = b^3 = 1, a^-1 b a = b^-1>."""

from .characters import char_sum, char_sum_product, char_table, chi, cyclic_chars, psi
from .cyclotomic import CycValue, cyclotomic_poly, root_power
from .families import family, srg_check, verify_family
from .group import (
    ConnectionSet,
    Element,
    InvalidConnectionSet,
    ParameterError,
    cayley_adjacency,
    conjugacy_classes,
    generates,
    inv,
    mul,
)
from .integrality import (
    ConsistencyError,
    boolean_membership,
    decide,
    is_integral_boolean_RH,
    is_integral_boolean_S1,
    is_integral_boolean_SL,
    is_integral_general,
    is_integral_refined,
    is_integral_set_cyclic,
    split,
)
from .search import census, enumerate_connection_sets
from .spectral import Spectrum, babai_spectrum, brute_spectrum, discriminant, exact_integer_spectrum

__version__ = "0.1.0"
