"""Block systems of orbits and their induced quotient dynamics.

Each check assigns every member to a block, then verifies that the blocks
form a partition and that T and S move whole blocks exactly as predicted.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Tuple

from orbits.orbit import Orbit
from surfaces.origami import (
    cylinder_decomposition,
    from_images,
    hlk_invariant,
    minus_identity,
    monodromy_class,
)
from surfaces.perm import cycle_data
from utils.errors import AmbiguousInvolution, NoInvolution, OrigamiError

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not applicable"

# Quotient dynamics on three blocks shared by the distinct-value and parity systems.
THREE_BLOCK_DYNAMICS = {"T": {1: 2, 2: 1, 3: 3}, "S": {1: 1, 2: 3, 3: 2}}

# Six blocks labelled by the arrangement of three distinct values a, b, c.
SIX_BLOCK_ORDER = ("abc", "bac", "bca", "cba", "cab", "acb")
SIX_BLOCK_DYNAMICS = {
    "T": {1: 2, 2: 1, 3: 4, 4: 3, 5: 6, 6: 5},
    "S": {1: 6, 6: 1, 2: 3, 3: 2, 4: 5, 5: 4},
}

# Coarsenings: {1,6},{2,5},{3,4} and odd/even block numbers.
SIX_TO_PAIRED = {1: 1, 6: 1, 2: 2, 5: 2, 3: 3, 4: 3}
TWO_BLOCK_DYNAMICS = {"T": {1: 2, 2: 1}, "S": {1: 2, 2: 1}}


@dataclass
class BlockCheck:
    name: str
    status: str
    violations: List[str] = field(default_factory=list)
    blocks: Optional[Dict[Hashable, List[int]]] = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class BlockReport:
    label: Optional[str]
    size: int
    checks: List[BlockCheck]

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def by_name(self, name: str) -> BlockCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _verify(
    name: str,
    orbit: Orbit,
    block_of: List[Hashable],
    dynamics: Dict[str, Callable[[Hashable], Hashable]],
) -> BlockCheck:
    """Check that ``block_of`` is a partition respected by every generator."""
    violations = []
    blocks: Dict[Hashable, List[int]] = {}
    for i, b in enumerate(block_of):
        blocks.setdefault(b, []).append(i)
    if sum(len(v) for v in blocks.values()) != len(orbit):
        violations.append("blocks do not cover the orbit")
    for symbol, expected in dynamics.items():
        perm = orbit.action(symbol)
        for i, j in enumerate(perm):
            want = expected(block_of[i])
            if block_of[j] != want:
                violations.append(
                    f"{symbol} sends member {i} in block {block_of[i]} to block {block_of[j]}, expected {want}"
                )
    status = FAIL if violations else PASS
    if violations:
        logger.warning("%s: %d violations", name, len(violations))
    return BlockCheck(name=name, status=status, violations=violations[:20], blocks=blocks)


def _table_dynamics(tables: Dict[str, Dict[int, int]]) -> Dict[str, Callable[[Hashable], Hashable]]:
    return {g: (lambda b, table=table: table[b]) for g, table in tables.items()}


def _ordered_triples(orbit: Orbit) -> Tuple[Optional[List[tuple]], str]:
    triples = []
    for m in orbit.members:
        try:
            triples.append(hlk_invariant(m.origami).ordered_triple)
        except NoInvolution:
            return None, "orbit is not -I symmetric"
        except AmbiguousInvolution:
            return None, "the -I involution is not unique"
    return triples, ""


def six_block_checks(orbit: Orbit, triples: Optional[List[tuple]], reason: str = "") -> List[BlockCheck]:
    """Six blocks by ordered triple, plus the three- and two-block coarsenings."""
    names = ("six ordered-HLK blocks", "paired six-block coarsening", "alternating six-block coarsening")
    if triples is None:
        return [BlockCheck(name, NOT_APPLICABLE, note=reason) for name in names]
    if len(set(triples[0])) != 3:
        note = "no qualifying orbit found: triple has repeated values"
        return [BlockCheck(name, NOT_APPLICABLE, note=note) for name in names]
    a, b, c = triples[0]
    values = {"a": a, "b": b, "c": c}
    index = {tuple(values[ch] for ch in order): k + 1 for k, order in enumerate(SIX_BLOCK_ORDER)}
    block_of = []
    for t in triples:
        if t not in index:
            violation = f"ordered triple {t} is not a rearrangement of {(a, b, c)}"
            return [BlockCheck(name, FAIL, violations=[violation]) for name in names]
        block_of.append(index[t])
    checks = [_verify(names[0], orbit, block_of, _table_dynamics(SIX_BLOCK_DYNAMICS))]
    paired = [SIX_TO_PAIRED[k] for k in block_of]
    checks.append(_verify(names[1], orbit, paired, _table_dynamics(THREE_BLOCK_DYNAMICS)))
    alternating = [2 - k % 2 for k in block_of]
    checks.append(_verify(names[2], orbit, alternating, _table_dynamics(TWO_BLOCK_DYNAMICS)))
    return checks


def distinct_value_check(orbit: Orbit, triples: Optional[List[tuple]], reason: str = "") -> BlockCheck:
    """Three blocks by the position of the value that occurs once in the triple."""
    name = "three distinct-value blocks"
    if triples is None:
        return BlockCheck(name, NOT_APPLICABLE, note=reason)
    if len(set(triples[0])) != 2:
        return BlockCheck(name, NOT_APPLICABLE, note="triple does not have exactly two equal values")
    block_of = []
    for t in triples:
        lone = [k for k in range(3) if t.count(t[k]) == 1]
        if len(lone) != 1:
            return BlockCheck(name, FAIL, violations=[f"ordered triple {t} has no single distinct value"])
        block_of.append(lone[0] + 1)
    return _verify(name, orbit, block_of, _table_dynamics(THREE_BLOCK_DYNAMICS))


def _parity_block(member) -> Optional[int]:
    h_even = cycle_data(member.origami.h).is_even
    v_even = cycle_data(member.origami.v).is_even
    if not h_even and v_even:
        return 1
    if not h_even and not v_even:
        return 2
    if h_even and not v_even:
        return 3
    return None


def parity_check(orbit: Orbit) -> BlockCheck:
    name = "parity blocks"
    block_of = [_parity_block(m) for m in orbit.members]
    if any(b is None for b in block_of):
        return BlockCheck(name, NOT_APPLICABLE, note="some member has both generators even")
    return _verify(name, orbit, block_of, _table_dynamics(THREE_BLOCK_DYNAMICS))


def _vertical_cylinders(member) -> int:
    X = member.origami
    return len(cylinder_decomposition(from_images(X.v.images, X.h.images)))


def one_cylinder_bound_check(orbit: Orbit) -> BlockCheck:
    """At most half of the one-cylinder members also have one vertical cylinder."""
    name = "one-cylinder bound"
    if monodromy_class(orbit.origami(0)).kind != "Sym":
        return BlockCheck(name, NOT_APPLICABLE, note="monodromy is not symmetric")
    one = [i for i, m in enumerate(orbit.members) if len(cylinder_decomposition(m.origami)) == 1]
    if not one:
        return BlockCheck(name, NOT_APPLICABLE, note="no one-cylinder members")
    both = [i for i in one if _vertical_cylinders(orbit.members[i]) == 1]
    note = f"{len(both)} of {len(one)} one-cylinder members have one vertical cylinder"
    if 2 * len(both) > len(one):
        return BlockCheck(name, FAIL, violations=[note])
    return BlockCheck(name, PASS, note=note)


def minus_identity_pairs(orbit: Orbit) -> List[int]:
    """Index of -I(X) for every member X."""
    out = []
    for m in orbit.members:
        j = orbit.index_of(minus_identity(m.origami))
        if j is None:
            raise OrigamiError(f"-I image of member {m} is outside the orbit")
        out.append(j)
    return out


def minus_identity_pairing_check(orbit: Orbit) -> BlockCheck:
    name = "minus-identity pairing"
    pair_of = minus_identity_pairs(orbit)
    if pair_of[0] == 0:
        return BlockCheck(name, NOT_APPLICABLE, note="members are -I symmetric")
    violations = []
    for i, j in enumerate(pair_of):
        if j == i:
            violations.append(f"member {i} is fixed by -I")
        elif pair_of[j] != i:
            violations.append(f"pairing is not an involution at member {i}")
    for symbol in ("T", "S"):
        perm = orbit.action(symbol)
        for i in range(len(orbit)):
            if pair_of[perm[i]] != perm[pair_of[i]]:
                violations.append(f"{symbol} does not commute with the pairing at member {i}")
    blocks = {}
    for i, j in enumerate(pair_of):
        blocks.setdefault(min(i, j), []).append(i)
    return BlockCheck(
        name,
        FAIL if violations else PASS,
        violations=violations[:20],
        blocks=blocks,
        note=f"{len(blocks)} pairs",
    )


def check_block_systems(orbit: Orbit) -> BlockReport:
    """Run every block-system check that applies to the orbit."""
    if not orbit.members:
        raise OrigamiError("cannot check block systems of an empty orbit")
    triples, reason = _ordered_triples(orbit)
    checks = [
        *six_block_checks(orbit, triples, reason),
        distinct_value_check(orbit, triples, reason),
        parity_check(orbit),
        one_cylinder_bound_check(orbit),
        minus_identity_pairing_check(orbit),
    ]
    report = BlockReport(label=orbit.label, size=len(orbit), checks=checks)
    logger.info(
        "block systems for %s orbit of size %d: %s",
        orbit.label,
        len(orbit),
        ", ".join(f"{c.name}={c.status}" for c in checks),
    )
    return report
