"""Orbifold-point sets for Prym eigenform loci at square discriminants."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import FrozenSet, Tuple

from typing_extensions import Literal

from arith.class_numbers import conductor
from utils.errors import InvalidDiscriminant

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
OrbifoldKind = Literal["H3", "H2sq"]


@dataclass(frozen=True)
class OrbifoldSet:
    D: int
    kind: str
    triples: FrozenSet[Triple]

    @property
    def count(self) -> int:
        return len(self.triples)


def _h3_side_condition(a: int, b: int, c: int) -> bool:
    s = 4 * a - 3 * b - 3 * c
    return s < 0 or (s == 0 and c < 3 * b)


def h3_set(D: int) -> FrozenSet[Triple]:
    """(a,b,c) with 2a^2 - 3b^2 - c^2 = D, gcd(a,b,c,f) = 1,
    -3 sqrt(D) < a < -sqrt(D), c < b <= 0 and the side condition."""
    f = conductor(D)
    out = set()
    a = -1
    while a * a <= D:
        a -= 1
    # a runs over negative integers with D < a^2 < 9D
    while a * a < 9 * D:
        rest = 2 * a * a - D
        b = 0
        while 3 * b * b <= rest:
            c2 = rest - 3 * b * b
            c = -isqrt(c2)
            if c * c == c2 and c < b and _h3_side_condition(a, b, c):
                if gcd(gcd(gcd(a, b), c), f) == 1:
                    out.add((a, b, c))
            b -= 1
        a -= 1
    return frozenset(out)


def h2sq_set(n: int) -> FrozenSet[Triple]:
    """(a,b,c) with a^2 + b^2 + c^2 = n^2 and gcd(a,b,c,n) = 2."""
    target = n * n
    out = set()
    for a in range(-n, n + 1):
        for b in range(-n, n + 1):
            c2 = target - a * a - b * b
            if c2 < 0:
                continue
            c = isqrt(c2)
            if c * c != c2:
                continue
            for cc in {c, -c}:
                if gcd(gcd(gcd(a, b), cc), n) == 2:
                    out.add((a, b, cc))
    return frozenset(out)


def orbifold_sets(D: int, kind: OrbifoldKind) -> OrbifoldSet:
    if D <= 0:
        raise InvalidDiscriminant(f"orbifold sets need D > 0, got {D}")
    if kind == "H3":
        triples = h3_set(D)
    elif kind == "H2sq":
        n = isqrt(D)
        if n * n != D:
            raise InvalidDiscriminant(f"H2sq needs a square discriminant, got {D}")
        triples = h2sq_set(n)
    else:
        raise ValueError(f"unknown orbifold set {kind!r}")
    logger.debug("%s(%d) has %d triples", kind, D, len(triples))
    return OrbifoldSet(D=D, kind=kind, triples=triples)


def e2_square(n: int) -> Fraction:
    """Order-two orbifold points at discriminant n^2: |H2sq(n^2)|/24 for even n."""
    if n % 2:
        return Fraction(0)
    return Fraction(len(h2sq_set(n)), 24)
