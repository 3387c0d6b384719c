"""Class numbers of negative discriminants by binary quadratic forms."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, List, Set, Tuple

from sympy import factorint

from utils.errors import InvalidDiscriminant

logger = logging.getLogger(__name__)

Form = Tuple[int, int, int]


@dataclass(frozen=True)
class ClassNumberResult:
    D: int
    h: int
    unit_count: int
    h_reduced: Fraction


def validate_negative(D: int) -> None:
    if not isinstance(D, int) or D >= 0 or D % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{D} is not a negative discriminant")


def unit_count(D: int) -> int:
    if D == -3:
        return 6
    if D == -4:
        return 4
    return 2


def reduced_forms(D: int) -> Iterator[Form]:
    """Primitive reduced forms (a, b, c) with b^2 - 4ac = D.

    Reduced means |b| <= a <= c, with b >= 0 when |b| = a or a = c.
    """
    validate_negative(D)
    a_max = isqrt(-D // 3)
    for a in range(1, a_max + 1):
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if a == c and b < 0:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            yield (a, b, c)


def class_numbers(D: int) -> ClassNumberResult:
    h = sum(1 for _ in reduced_forms(D))
    units = unit_count(D)
    return ClassNumberResult(D=D, h=h, unit_count=units, h_reduced=Fraction(2 * h, units))


@lru_cache(maxsize=None)
def h_reduced(D: int) -> Fraction:
    return class_numbers(D).h_reduced


def normalize(form: Form) -> Form:
    a, b, c = form
    r = (a - b) // (2 * a)
    return a, b + 2 * r * a, a * r * r + b * r + c


def reduce_form(form: Form) -> Form:
    """Reduce a positive definite form by repeated normalization and swaps."""
    a, b, c = normalize(form)
    while not (a < c or (a == c and b >= 0)):
        s = (c + b) // (2 * c)
        a, b, c = c, -b + 2 * s * c, c * s * s - b * s + a
    return a, b, c


def class_number_by_reduction(D: int) -> int:
    """Count distinct reductions of every primitive form in a box around the reduced region."""
    validate_negative(D)
    box = isqrt(-D) + 2
    classes: Set[Form] = set()
    for a in range(1, box + 1):
        for b in range(-box, box + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if gcd(gcd(a, b), c) != 1:
                continue
            classes.add(reduce_form((a, b, c)))
    return len(classes)


def _square_divisors(m: int) -> List[int]:
    """Every f with f^2 dividing m."""
    out = [1]
    for p, e in factorint(abs(m)).items():
        out = [f * p ** k for f in out for k in range(e // 2 + 1)]
    return sorted(out)


def conductor(D: int) -> int:
    """f with D = f^2 D0 and D0 fundamental; sqrt(D) for positive squares."""
    if D == 0 or D % 4 not in (0, 1):
        raise InvalidDiscriminant(f"{D} is not a discriminant")
    if D > 0 and isqrt(D) ** 2 == D:
        return isqrt(D)
    return max(f for f in _square_divisors(D) if (D // (f * f)) % 4 in (0, 1))


def class_number_table(limit: int) -> List[ClassNumberResult]:
    """Every negative discriminant D with -D <= limit."""
    return [class_numbers(D) for D in range(-3, -limit - 1, -1) if D % 4 in (0, 1)]
