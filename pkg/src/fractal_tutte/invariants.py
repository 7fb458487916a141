"""Closed-form invariants of the lattice families and Potts specializations.

Everything here is exact until the final step: spanning-tree counts and
orientation counts are arbitrary-precision integers, Potts partition values
are rationals, and only the thermodynamic growth constants pass through
floating point, always via logarithms of the closed forms rather than by
taking the float of an astronomically large integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .bipoly import BiPoly
from .errors import CapExceeded, DomainError
from .lattices import LatticeFamily, Multigraph, lattice_counts
from .recursion import SYMBOLIC_GENERATION_CAP, tutte_eval

CLOSED_FORM_CAP = 10
POTTS_STATE_CAP = 2 ** 24

RationalLike = Union[int, Fraction]


def _check_generation(n: int, cap: int = CLOSED_FORM_CAP) -> None:
    if n < 0:
        raise ValueError("generation must be nonnegative")
    if n > cap:
        raise CapExceeded(f"generation {n} exceeds closed-form cap {cap}")


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{numerator} not divisible by {denominator}")
    return quotient


def spanning_tree_count(family: LatticeFamily, n: int) -> int:
    """Number of spanning trees of generation n, in closed form."""
    _check_generation(n)
    power = 4 ** n
    if family is LatticeFamily.FRACTAL:
        return 2 ** (power - 1)
    if family is LatticeFamily.FLOWER22:
        return 2 ** _exact_div(2 * (power - 1), 3)
    exp3 = _exact_div(power - 3 * n - 1, 9)
    exp4 = _exact_div(2 * power + 3 * n - 2, 9)
    return 3 ** exp3 * 4 ** exp4


def acyclic_root_connected_orientations(n: int) -> int:
    """Acyclic orientations of the fractal lattice with a unique fixed sink.

    Closed form: product over i of (i + 1) raised to 2 * 4^(n - i).
    """
    _check_generation(n)
    total = 1
    for i in range(n + 1):
        total *= (i + 1) ** (2 * 4 ** (n - i))
    return total


def strong_orientation_indegree_sequences(n: int) -> int:
    """Indegree-sequence count over strong orientations of the fractal lattice.

    Half of n times the sink-rooted acyclic count; defined for n >= 1.
    """
    _check_generation(n)
    if n < 1:
        raise DomainError("indegree-sequence count is defined for generations >= 1")
    doubled = n * acyclic_root_connected_orientations(n)
    return _exact_div(doubled, 2)


def bicycle_space_dimension(n: int) -> int:
    """Dimension of the bicycle space of the fractal lattice: (4^n - 1) / 3."""
    if n < 0:
        raise ValueError("generation must be nonnegative")
    return _exact_div(4 ** n - 1, 3)


def diagonal_closed_form(n: int, generation_cap: int = SYMBOLIC_GENERATION_CAP) -> BiPoly:
    """The diagonal T(x, x) of the fractal lattice as a closed-form power.

    Equals x * (x^2 + 5x + 2) ** ((4^n - 1) / 3), kept as a polynomial in x.
    """
    _check_generation(n, generation_cap)
    base = BiPoly({(2, 0): 1, (1, 0): 5, (0, 0): 2})
    exponent = _exact_div(4 ** n - 1, 3)
    return BiPoly.x() * base ** exponent


def diagonal_closed_value(n: int, x: RationalLike) -> Fraction:
    """The diagonal closed form evaluated exactly at a rational point."""
    _check_generation(n)
    x = Fraction(x)
    exponent = _exact_div(4 ** n - 1, 3)
    return x * (x * x + 5 * x + 2) ** exponent


# -- asymptotic growth ------------------------------------------------------


@dataclass(frozen=True)
class GrowthConstant:
    """Spanning-tree entropy: limit of ln(tree count) / vertex count."""

    exact_form: str
    decimal: float
    sequence: Tuple[Tuple[int, float], ...]


_LN2 = math.log(2.0)
_LN3 = math.log(3.0)


def _log_spanning_trees(family: LatticeFamily, n: int) -> float:
    """ln of the spanning-tree count, from closed-form exponents only."""
    power = 4 ** n
    if family is LatticeFamily.FRACTAL:
        return (power - 1) * _LN2
    if family is LatticeFamily.FLOWER22:
        return _exact_div(2 * (power - 1), 3) * _LN2
    exp3 = _exact_div(power - 3 * n - 1, 9)
    exp4 = _exact_div(2 * power + 3 * n - 2, 9)
    return exp3 * _LN3 + exp4 * 2 * _LN2


_GROWTH_LIMITS = {
    LatticeFamily.FRACTAL: ("(3/2)*ln(2)", 1.5 * _LN2),
    LatticeFamily.FLOWER22: ("ln(2)", _LN2),
    LatticeFamily.FLOWER13: ("(4*ln(2)+ln(3))/6", (4 * _LN2 + _LN3) / 6),
}


def growth_constant(family: LatticeFamily, n_max: int) -> GrowthConstant:
    """Growth limit plus the finite-generation sequence approaching it."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if n_max > CLOSED_FORM_CAP:
        raise CapExceeded(f"n_max {n_max} exceeds closed-form cap {CLOSED_FORM_CAP}")
    exact_form, decimal = _GROWTH_LIMITS[family]
    sequence = []
    for n in range(1, n_max + 1):
        vertices, _ = lattice_counts(family, n)
        sequence.append((n, _log_spanning_trees(family, n) / vertices))
    return GrowthConstant(exact_form, decimal, tuple(sequence))


# -- Potts model ------------------------------------------------------------


@dataclass(frozen=True)
class PottsParams:
    """State count q and edge coupling v of the q-state Potts model."""

    q: Fraction
    v: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "v", Fraction(self.v))


def tutte_arguments(params: PottsParams) -> Tuple[Fraction, Fraction]:
    """The Tutte-plane point ((q + v) / v, v + 1) matching the Potts weights."""
    if params.v == 0:
        raise DomainError("coupling v = 0 has no Tutte-plane image")
    return (params.q + params.v) / params.v, params.v + 1


def potts_partition(vertex_count: int, component_count: int,
                    tutte_value: Fraction, params: PottsParams) -> Fraction:
    """Partition function from a Tutte evaluation at the matching point.

    Z = q^k * v^(|V| - k) * T((q + v) / v, v + 1) for a graph with |V|
    vertices and k components.
    """
    if params.v == 0:
        raise DomainError("coupling v = 0 has no Tutte-plane image")
    q, v = params.q, params.v
    return q ** component_count * v ** (vertex_count - component_count) * tutte_value


def potts_direct(g: Multigraph, params: PottsParams) -> Fraction:
    """Partition function by summing over every q-coloring directly.

    Each edge whose endpoints share a color contributes a factor (1 + v);
    loops always do.  Requires a positive integer q and guards the number
    of colorings.
    """
    if params.q.denominator != 1 or params.q < 1:
        raise DomainError("direct Potts enumeration needs a positive integer q")
    q = int(params.q)
    states = q ** g.vertex_count
    if states > POTTS_STATE_CAP:
        raise CapExceeded(f"{states} colorings exceed enumeration cap {POTTS_STATE_CAP}")
    weight = [Fraction(1)]
    for _ in range(g.edge_count):
        weight.append(weight[-1] * (1 + params.v))
    total = Fraction(0)
    from itertools import product

    for coloring in product(range(q), repeat=g.vertex_count):
        same = 0
        for u, v in g.edges:
            if coloring[u] == coloring[v]:
                same += 1
        total += weight[same]
    return total


def potts_lattice(family: LatticeFamily, n: int, params: PottsParams) -> Fraction:
    """Partition function of a connected lattice generation via the recursion."""
    x, y = tutte_arguments(params)
    vertices, _ = lattice_counts(family, n)
    value = tutte_eval(family, n, x, y)
    return potts_partition(vertices, 1, value, params)
