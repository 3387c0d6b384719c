"""Text forms accepted by the CLI and the explorer: origamis, seeds, strata."""

import re
from dataclasses import dataclass
from typing import List, Optional

from surfaces.origami import Origami, StratumSignature, from_h2_params, make_origami
from surfaces.perm import parse_cycles
from utils.errors import ParseError

SIX_INTS_RE = re.compile(r"^\(?\s*(\d+(?:\s*,\s*\d+){5})\s*\)?$")
STRATUM_RE = re.compile(r"^H\(?\s*(\d+(?:\s*,\s*\d+)*)\s*\)?(prym|hyp)?$", re.IGNORECASE)


@dataclass(frozen=True)
class StratumChoice:
    signature: StratumSignature
    involution: Optional[str] = None

    def __str__(self) -> str:
        suffix = {"prym": " prym", "hyperelliptic": " hyp"}.get(self.involution or "", "")
        return f"{self.signature}{suffix}"


def _split_top_level(text: str) -> List[str]:
    """Split at commas that are not inside parentheses."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts.append(text[start:])
    return [p.strip() for p in parts]


def parse_origami(text: str, n: Optional[int] = None) -> Origami:
    """Parse ``((2,3),(1,2,3))`` or ``(2,3),(1,2,3)``; ``()`` is the identity.

    The degree is the largest symbol in either permutation unless ``n`` is given.
    """
    body = text.strip()
    parts = _split_top_level(body)
    if len(parts) == 1 and body.startswith("(") and body.endswith(")"):
        parts = _split_top_level(body[1:-1])
    if len(parts) != 2:
        raise ParseError(f"expected two permutations in {text!r}")
    h_raw = parse_cycles(parts[0])
    v_raw = parse_cycles(parts[1])
    degree = max(h_raw.n, v_raw.n, 1) if n is None else n
    h = parse_cycles(parts[0], degree)
    v = parse_cycles(parts[1], degree)
    return make_origami(h, v)


def parse_seed(text: str) -> Origami:
    """An origami in cycle notation or six H(2) surface parameters."""
    match = SIX_INTS_RE.match(text.strip())
    if match:
        values = [int(x) for x in match.group(1).split(",")]
        return from_h2_params(*values)
    return parse_origami(text)


def parse_stratum(text: str) -> StratumChoice:
    """``H2``, ``H11``, ``H(1,1)``, ``H4prym``, ``H6prym``, ``H4hyp``.

    Without commas each digit is one zero order and the orders must be
    non-increasing, so ``H10`` and ``H12`` are rejected.
    """
    match = STRATUM_RE.match(text.strip().replace(" ", ""))
    if not match:
        raise ParseError(f"unknown stratum {text!r}")
    digits = match.group(1)
    if "," in digits:
        orders = [int(x) for x in digits.split(",")]
    else:
        orders = [int(ch) for ch in digits]
        if any(a < b for a, b in zip(orders, orders[1:])):
            raise ParseError(f"ambiguous stratum {text!r}; separate zero orders with commas")
    if any(order < 1 for order in orders):
        raise ParseError(f"zero orders must be positive in {text!r}")
    suffix = (match.group(2) or "").lower()
    involution = {"prym": "prym", "hyp": "hyperelliptic"}.get(suffix)
    return StratumChoice(StratumSignature.from_zero_orders(orders), involution)
