"""Lattice points on the quadrics that describe cusps of a given width."""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import List, Sequence, Tuple, Union

from utils.errors import BadParams

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


@dataclass(frozen=True)
class QuadricInstance:
    """Integer quadric sum_{i<=j} q_ij w_i w_j = target in positive integers.

    ``form`` is the upper-triangular coefficient matrix flattened row by
    row. Rational coefficients are cleared by scaling both sides.
    """

    template: str
    form: Tuple[Tuple[int, ...], ...]
    target: int
    bounds: Tuple[int, ...]
    increasing: bool = False
    scale: int = 1

    @property
    def rank(self) -> int:
        return len(self.form)

    def value(self, ws: Sequence[int]) -> int:
        total = 0
        for i, row in enumerate(self.form):
            for j, coeff in enumerate(row):
                if coeff:
                    total += coeff * ws[i] * ws[i + j]
        return total


def _clear(coeffs: Sequence[Number], target: Number) -> Tuple[List[int], int, int]:
    fracs = [Fraction(c) for c in coeffs] + [Fraction(target)]
    scale = lcm(*(f.denominator for f in fracs))
    scaled = [int(f * scale) for f in fracs]
    return scaled[:-1], scaled[-1], scale


def _bounds(squares: Sequence[int], target: int) -> Tuple[int, ...]:
    if any(c <= 0 for c in squares):
        raise BadParams(f"square coefficients must be positive: {list(squares)}")
    return tuple(isqrt(target // c) for c in squares)


def ellipse(x: Number, y: Number, n: Number, increasing: bool = True) -> QuadricInstance:
    """x w1^2 + y w2^2 = n, by default with w1 < w2."""
    (cx, cy), target, scale = _clear([x, y], n)
    return QuadricInstance(
        template="ellipse",
        form=((cx, 0), (cy,)),
        target=target,
        bounds=_bounds([cx, cy], target),
        increasing=increasing,
        scale=scale,
    )


def three_cylinder_conic(x: Number, y: Number, z: Number, n: Number) -> QuadricInstance:
    """x w1^2 + y w2^2 + z w3^2 = n with w2 = w1 + w3 substituted."""
    (cx, cy, cz), target, scale = _clear([x, y, z], n)
    a, b, c = cx + cy, 2 * cy, cy + cz
    return QuadricInstance(
        template="three_cylinder_conic",
        form=((a, b), (c,)),
        target=target,
        bounds=_bounds([a, c], target),
        scale=scale,
    )


def diagonal_quadric(coeffs: Sequence[Number], n: Number) -> QuadricInstance:
    """sum x_i w_i^2 = n, one variable per cylinder."""
    scaled, target, scale = _clear(list(coeffs), n)
    k = len(scaled)
    form = tuple(tuple([scaled[i]] + [0] * (k - i - 1)) for i in range(k))
    return QuadricInstance(
        template="diagonal",
        form=form,
        target=target,
        bounds=_bounds(scaled, target),
        scale=scale,
    )


def quadric_solutions(q: QuadricInstance) -> List[Tuple[int, ...]]:
    """Every positive integer solution inside the bounds, in lexicographic order."""
    out = []
    ranges = [range(1, b + 1) for b in q.bounds]
    for ws in itertools.product(*ranges):
        if q.increasing and any(a >= b for a, b in zip(ws, ws[1:])):
            continue
        if q.value(ws) == q.target:
            out.append(ws)
    return out


def cusp_equation_shape(genus: int, zeros: int, cylinders: int) -> Tuple[int, int]:
    """Rank of the cusp quadric and number of free saddle-connection lengths.

    With c cylinders on a surface of genus g with s zeros there are
    2g + s - 1 saddle connections; each cylinder width is a sum of them.
    """
    total = 2 * genus + zeros - 1
    if not 1 <= cylinders <= genus + zeros - 1:
        raise BadParams(
            f"{cylinders} cylinders impossible in genus {genus} with {zeros} zeros"
        )
    rank = min(cylinders, total - cylinders)
    return rank, max(0, total - 2 * cylinders)
