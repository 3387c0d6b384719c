"""Closed formulas: orbit sizes, group orders and order-three orbifold counts."""

import logging
from fractions import Fraction
from typing import Dict

from sympy import primefactors
from typing_extensions import Literal

from arith.class_numbers import h_reduced
from utils.errors import BadParams, NonIntegral

logger = logging.getLogger(__name__)

Family = Literal[
    "H2_A", "H2_B", "Zmiaikou_Alt", "Zmiaikou_Sym", "Duryev", "KappesMoller"
]


def prime_product(n: int) -> Fraction:
    """prod over primes p | n of (1 - p^-2)."""
    out = Fraction(1)
    for p in primefactors(n):
        out *= 1 - Fraction(1, p * p)
    return out


def sl2_order(m: int) -> int:
    """|SL(2, Z/m)| = m^3 prod (1 - p^-2)."""
    if m < 1:
        raise BadParams(f"modulus must be positive: {m}")
    value = m ** 3 * prime_product(m)
    return int(value)


def psl2_order(d: int) -> int:
    """|PSL(2, Z/d)|; -I is trivial only for d <= 2."""
    if d <= 2:
        return sl2_order(d)
    return sl2_order(d) // 2


def _integral(value: Fraction, family: str, params: Dict[str, int]) -> int:
    if value.denominator != 1:
        raise NonIntegral(f"{family} with {params} evaluates to {value}")
    return int(value)


def _duryev(d: int, n: int, epsilon: int) -> Fraction:
    factor = Fraction(d - 1, 12 * n) if epsilon == 0 else Fraction(d - 1, 4 * n)
    return factor * psl2_order(d) * sl2_order(n)


def predicted_orbit_size(family: Family, **params: int) -> int:
    """Exact size predicted by a closed formula.

    H2_A/H2_B and the Zmiaikou formulas take ``n``; Duryev takes ``d``, ``n``
    and ``epsilon`` (for even n the two spin classes coincide and their sum
    is returned); KappesMoller takes an odd ``d`` >= 5 and ``epsilon``.
    """
    if family in ("H2_A", "H2_B", "Zmiaikou_Alt", "Zmiaikou_Sym"):
        n = params["n"]
        P = prime_product(n)
        if family == "H2_A":
            if n % 2 == 0 or n < 5:
                raise BadParams("H2_A needs odd n >= 5")
            value = Fraction(3, 16) * (n - 1) * n * n * P
        elif family == "H2_B":
            if n % 2 == 0 or n < 5:
                raise BadParams("H2_B needs odd n >= 5")
            value = Fraction(3, 16) * (n - 3) * n * n * P
        elif family == "Zmiaikou_Alt":
            if n % 2:
                value = Fraction(1, 24) * n * n * (n - 3) * (n - 5) * P
            else:
                value = Fraction(1, 24) * n ** 3 * (n - 2) * P
        else:
            if n % 2:
                value = Fraction(1, 8) * n * n * (n - 1) * (n - 3) * P
            else:
                value = Fraction(1, 8) * n * n * (n - 2) * (n - 4) * P
    elif family == "Duryev":
        d, n = params["d"], params["n"]
        if n % 2:
            value = _duryev(d, n, params.get("epsilon", 0))
        else:
            value = _duryev(d, n, 0) + _duryev(d, n, 1)
    elif family == "KappesMoller":
        d, epsilon = params["d"], params.get("epsilon", 0)
        if d % 2 == 0 or d < 5:
            raise BadParams("KappesMoller needs odd d >= 5")
        if epsilon == 0:
            value = Fraction((d - 3) * (d - 5), 12 * d) * psl2_order(d)
        else:
            value = Fraction((d - 1) * (d - 3), 4 * d) * psl2_order(d)
    else:
        raise BadParams(f"unknown family {family!r}")
    return _integral(value, family, params)


def e3_h11(d: int, n: int, epsilon: int) -> Fraction:
    """Order-three orbifold points on the H(1,1) eigenform locus of discriminant d^2
    with torsion n and spin epsilon."""
    if d < 2:
        raise BadParams(f"d must be at least 2: {d}")
    if n % 2 == 0:
        return Fraction(0)
    if epsilon != 0:
        return Fraction(0)
    if d % 3 == 0 and n == 3:
        return Fraction(1, 2) * (3 * h_reduced(-(d * d) // 3) + h_reduced(-3 * d * d))
    if d % 3 == 1 and n == 1:
        return Fraction(1, 2) * h_reduced(-3 * d * d)
    if d % 3 == 2 and n == 3:
        return Fraction(1, 2) * h_reduced(-3 * d * d)
    return Fraction(0)
