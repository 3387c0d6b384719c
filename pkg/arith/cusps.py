"""Counting H(2) origamis in cusps of a given width by lattice points on ellipses.

A two-cylinder origami with widths w_i and heights h_i has cusp width
lcm(w_i / gcd(w_i, h_i)). Writing h_i / w_i = x_i / d_i in lowest terms,
the cusps of width k come from ellipses

    (x1 k / d1) w1^2 + (x2 k / d2) w2^2 = k n,   d_i | w_i,   lcm(d1, d2) = k,

and each lattice point gives w1 * w2 origamis through the twists.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Set, Tuple

from sympy import divisors

from arith.quadrics import ellipse, quadric_solutions
from orbits.classification import h2_label
from surfaces.origami import (
    CuspData,
    Key,
    Origami,
    canonical_key,
    cusp_data,
    from_h2_one_cylinder,
    from_h2_params,
    hlk_invariant,
    is_primitive,
    stratum_and_genus,
)
from utils.errors import BadParams

logger = logging.getLogger(__name__)

H2Params = Tuple[int, int, int, int, int, int]


@dataclass
class TFixedCount:
    n: int
    width: int
    witnesses: List[Origami] = field(default_factory=list)
    params: List[H2Params] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    cusps: List[CuspData] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.witnesses)

    @property
    def by_label(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for label in self.labels:
            out[label] = out.get(label, 0) + 1
        return out


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def two_cylinder_shapes(n: int, width: int) -> List[Tuple[int, int, int, int]]:
    """(w1, h1, w2, h2) with w1 < w2 whose cusp width is exactly ``width``."""
    shapes: Set[Tuple[int, int, int, int]] = set()
    k = width
    for d1 in divisors(k):
        for d2 in divisors(k):
            if _lcm(d1, d2) != k:
                continue
            for x1 in range(1, k * n + 1):
                if gcd(x1, d1) != 1 or x1 * k // d1 > k * n:
                    continue
                for x2 in range(1, k * n + 1):
                    if gcd(x2, d2) != 1 or x1 * k // d1 + x2 * k // d2 > k * n:
                        continue
                    q = ellipse(x1 * k // d1, x2 * k // d2, k * n)
                    for w1, w2 in quadric_solutions(q):
                        if w1 % d1 or w2 % d2:
                            continue
                        shapes.add((w1, x1 * w1 // d1, w2, x2 * w2 // d2))
    return sorted(shapes)


def _one_cylinder_h2(n: int) -> List[Origami]:
    seen: Dict[Key, Origami] = {}
    for a in range(1, n - 1):
        for b in range(1, n - a):
            for t in range(n):
                X = from_h2_one_cylinder(a, b, n - a - b, t)
                key = canonical_key(X)
                if key not in seen:
                    seen[key] = X
    return [seen[k] for k in sorted(seen)]


def t_fixed_count_h2(n: int, width: int) -> TFixedCount:
    """Primitive H(2) origamis on n squares lying in cusps of the given width."""
    if n < 3:
        raise BadParams(f"H(2) needs n >= 3, got {n}")
    if width < 1:
        raise BadParams(f"cusp width must be positive, got {width}")
    result = TFixedCount(n=n, width=width)
    seen: Set[Key] = set()
    cusp_keys: Set[Key] = set()

    def record(X: Origami, params) -> None:
        key = canonical_key(X)
        if key in seen or not is_primitive(X):
            return
        seen.add(key)
        result.witnesses.append(X)
        result.params.append(params)
        result.labels.append(h2_label(hlk_invariant(X), n) or "?")
        cusp = cusp_data(X)
        if cusp.width != width:
            logger.warning("origami %s has cusp width %d, expected %d", X, cusp.width, width)
        if cusp.representative.key not in cusp_keys:
            cusp_keys.add(cusp.representative.key)
            result.cusps.append(cusp)

    for w1, h1, w2, h2 in two_cylinder_shapes(n, width):
        for t1 in range(w1):
            for t2 in range(w2):
                record(from_h2_params(w1, h1, t1, w2, h2, t2), (w1, h1, t1, w2, h2, t2))

    one_cylinder_width = 1 if n == 3 else n
    if width == one_cylinder_width:
        for X in _one_cylinder_h2(n):
            if stratum_and_genus(X).zero_orders == (2,):
                record(X, None)

    logger.info(
        "n=%d width=%d: %d origamis in %d cusps", n, width, result.count, len(result.cusps)
    )
    return result
