"""Permutations on {1..n} and the group algorithms origamis need.

Permutations are stored 0-indexed as tuples of images; everything a user sees
(cycle notation, JSON) is 1-indexed. Composition is right-to-left:
``compose(p, q)`` applies ``q`` first, then ``p``.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from utils.errors import DegreeMismatch, ParseError

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Tuple-level arithmetic (hot paths in orbit enumeration use these directly)
# ---------------------------------------------------------------------------


def identity_images(n: int) -> Images:
    return tuple(range(n))


def compose_images(p: Sequence[int], q: Sequence[int]) -> Images:
    """Apply q first, then p."""
    return tuple(p[i] for i in q)


def inverse_images(p: Sequence[int]) -> Images:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def is_identity_images(p: Sequence[int]) -> bool:
    return all(i == j for i, j in enumerate(p))


def cycles_of(p: Sequence[int], include_fixed: bool = True) -> List[Tuple[int, ...]]:
    """Disjoint cycles of p, each starting at its smallest symbol (0-indexed)."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        if include_fixed or len(cycle) > 1:
            out.append(tuple(cycle))
    return out


def orbit_of(point: int, gens: Iterable[Sequence[int]]) -> List[int]:
    gens = list(gens)
    seen = {point}
    queue = [point]
    for a in queue:
        for g in gens:
            b = g[a]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return sorted(seen)


def _check_images(images: Sequence[int]) -> None:
    if sorted(images) != list(range(len(images))):
        raise ParseError(f"not a permutation: {list(images)}")


# ---------------------------------------------------------------------------
# Public value types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; ``images[i]`` is the (0-indexed) image of symbol i+1."""

    images: Images

    def __post_init__(self):
        _check_images(self.images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, symbol: int) -> int:
        """Image of a 1-indexed symbol."""
        return self.images[symbol - 1] + 1

    def __str__(self) -> str:
        return format_cycles(self)

    def to_list(self) -> List[int]:
        """1-indexed image list (the JSON form)."""
        return [i + 1 for i in self.images]

    def inverse(self) -> "Permutation":
        return Permutation(inverse_images(self.images))

    def is_identity(self) -> bool:
        return is_identity_images(self.images)


@dataclass(frozen=True)
class CycleData:
    cycle_type: Tuple[int, ...]
    parity: str

    @property
    def is_even(self) -> bool:
        return self.parity == "even"


@dataclass(frozen=True)
class GroupDescription:
    generators: Tuple[Permutation, ...]
    order: int
    transitive: bool
    primitive: bool
    minimal_blocks: Optional[Tuple[Tuple[int, ...], ...]] = None


def identity(n: int) -> Permutation:
    return Permutation(identity_images(n))


def from_list(images: Sequence[int]) -> Permutation:
    """Build from a 1-indexed image list such as ``[1, 3, 2]``."""
    if any(not isinstance(i, int) for i in images):
        raise ParseError(f"permutation images must be integers: {images!r}")
    return Permutation(tuple(i - 1 for i in images))


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Build from 1-indexed disjoint cycles on n symbols."""
    images = list(range(n))
    touched = set()
    for cycle in cycles:
        for a in cycle:
            if a < 1 or a > n:
                raise ParseError(f"symbol {a} outside 1..{n}")
            if a in touched:
                raise ParseError(f"symbol {a} appears twice in {list(cycles)}")
            touched.add(a)
        for a, b in zip(cycle, list(cycle[1:]) + list(cycle[:1])):
            images[a - 1] = b - 1
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-to-left product: the result maps i to p(q(i))."""
    if p.n != q.n:
        raise DegreeMismatch(f"cannot compose degree {p.n} with degree {q.n}")
    return Permutation(compose_images(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycle_data(p: Permutation) -> CycleData:
    cycles = cycles_of(p.images)
    cycle_type = tuple(sorted((len(c) for c in cycles), reverse=True))
    parity = "odd" if (p.n - len(cycles)) % 2 else "even"
    return CycleData(cycle_type=cycle_type, parity=parity)


def format_cycles(p: Permutation) -> str:
    """Disjoint cycle notation with fixed points omitted, e.g. ``(1,2)(3,4,5)``."""
    cycles = cycles_of(p.images, include_fixed=False)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(a + 1) for a in c) + ")" for c in cycles)


CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*[, ]\s*\d+)*)?\s*\)")


def parse_cycles(text: str, n: Optional[int] = None) -> Permutation:
    """Parse cycle notation such as ``(1,2)(3,4,5)`` or ``()``.

    The degree defaults to the largest symbol mentioned.
    """
    stripped = text.strip()
    pos = 0
    cycles: List[List[int]] = []
    for match in CYCLE_RE.finditer(stripped):
        if stripped[pos:match.start()].strip():
            raise ParseError(f"could not parse permutation {text!r}")
        pos = match.end()
        if match.group(1):
            cycles.append([int(a) for a in re.split(r"\s*[, ]\s*", match.group(1))])
    if stripped[pos:].strip() or (not stripped):
        raise ParseError(f"could not parse permutation {text!r}")
    largest = max((max(c) for c in cycles), default=0)
    degree = largest if n is None else n
    if degree < largest:
        raise ParseError(f"symbol {largest} exceeds degree {degree}")
    return from_cycles(cycles, degree)


# ---------------------------------------------------------------------------
# Stabilizer chain
# ---------------------------------------------------------------------------


class _StabilizerLevel:
    """One level of a stabilizer chain over the fixed base 0, 1, ..., n-1.

    Level k stabilizes 0..k-1 and its transversal is the orbit of k. A level
    with no generators of its own keeps the trivial transversal {k}.
    """

    def __init__(self, n: int, basepoint: int = 0):
        self.n = n
        self.basepoint = basepoint
        self.gens: List[Images] = []
        self.transversal: Dict[int, Images] = {basepoint: identity_images(n)}
        self.stab: Optional["_StabilizerLevel"] = None
        self._tested = set()

    def generators(self) -> List[Images]:
        if self.stab is None:
            return list(self.gens)
        return self.stab.generators() + self.gens

    def order(self) -> int:
        if self.stab is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def sift(self, p: Images) -> Images:
        """Strip p through the chain; identity iff p is a member."""
        if self.stab is None:
            return p
        a = p[self.basepoint]
        coset = self.transversal.get(a)
        if coset is None:
            return p
        return self.stab.sift(compose_images(inverse_images(coset), p))

    def add_gen(self, gen: Images) -> None:
        residue = self.sift(gen)
        if not is_identity_images(residue):
            self.add_nonmember_gen(residue)

    def add_nonmember_gen(self, gen: Images) -> None:
        # gen fixes every earlier basepoint, so it moves some point >= basepoint.
        if self.stab is None:
            self.stab = _StabilizerLevel(self.n, self.basepoint + 1)

        if gen[self.basepoint] == self.basepoint:
            self.stab.add_nonmember_gen(gen)
        else:
            self.gens.append(gen)

        self._extend_transversal()
        self._add_schreier_gens()

    def _extend_transversal(self) -> None:
        gens = self.generators()
        queue = sorted(self.transversal)
        for a in queue:
            for g in gens:
                b = g[a]
                if b not in self.transversal:
                    self.transversal[b] = compose_images(g, self.transversal[a])
                    queue.append(b)

    def _add_schreier_gens(self) -> None:
        # Transversal entries never change once set, so a (generator, point)
        # pair that sifted to the identity stays valid.
        while True:
            pending = [
                (g, a)
                for g in self.generators()
                for a in sorted(self.transversal)
                if (g, a) not in self._tested
            ]
            if not pending:
                return
            for g, a in pending:
                self._tested.add((g, a))
                image = g[a]
                schreier = compose_images(
                    inverse_images(self.transversal[image]),
                    compose_images(g, self.transversal[a]),
                )
                if not is_identity_images(schreier):
                    self.stab.add_gen(schreier)


class StabilizerChain:
    """Deterministic Schreier-Sims over a fixed generator list."""

    def __init__(self, gens: Sequence[Sequence[int]]):
        gens = [tuple(g) for g in gens]
        if not gens:
            raise DegreeMismatch("at least one generator is required")
        self.n = len(gens[0])
        if any(len(g) != self.n for g in gens):
            raise DegreeMismatch("generators have different degrees")
        self._root = _StabilizerLevel(self.n)
        for g in gens:
            self._root.add_gen(g)

    def order(self) -> int:
        return self._root.order()

    def contains(self, p: Sequence[int]) -> bool:
        return is_identity_images(self._root.sift(tuple(p)))

    def base(self) -> List[int]:
        """Basepoints 0..k-1 of the levels that carry generators."""
        out = []
        level = self._root
        while level.stab is not None:
            out.append(level.basepoint)
            level = level.stab
        return out


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def minimal_block_system(gens: Sequence[Sequence[int]], a: int, b: int) -> List[List[int]]:
    """Finest block system of a transitive group in which a and b share a block.

    Union-find refinement: every merge of two classes forces the merge of
    their images under each generator.
    """
    n = len(gens[0])
    uf = _UnionFind(n)
    uf.union(a, b)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            if uf.find(gx) != uf.find(gy):
                queue.append((gx, gy))
                uf.union(gx, gy)
    classes: Dict[int, List[int]] = {}
    for x in range(n):
        classes.setdefault(uf.find(x), []).append(x)
    return sorted(classes.values())


def find_blocks(gens: Sequence[Sequence[int]]) -> Optional[List[List[int]]]:
    """Nontrivial block system seeded by the first pair {0, k} that admits one."""
    n = len(gens[0])
    for k in range(1, n):
        blocks = minimal_block_system(gens, 0, k)
        if len(blocks) > 1:
            return blocks
    return None


def is_transitive_images(gens: Sequence[Sequence[int]]) -> bool:
    n = len(gens[0])
    return len(orbit_of(0, gens)) == n


def is_primitive_images(gens: Sequence[Sequence[int]]) -> bool:
    return is_transitive_images(gens) and find_blocks(gens) is None


def group_describe(gens: Sequence[Permutation]) -> GroupDescription:
    """Order, transitivity and primitivity of the group generated by gens."""
    if not gens:
        raise DegreeMismatch("group_describe needs at least one generator")
    raw = [p.images for p in gens]
    if any(len(g) != len(raw[0]) for g in raw):
        raise DegreeMismatch("generators have different degrees")
    order = StabilizerChain(raw).order()
    transitive = is_transitive_images(raw)
    blocks = find_blocks(raw) if transitive else None
    logger.debug("group of degree %d: order %d transitive=%s", len(raw[0]), order, transitive)
    return GroupDescription(
        generators=tuple(gens),
        order=order,
        transitive=transitive,
        primitive=transitive and blocks is None,
        minimal_blocks=(
            tuple(tuple(x + 1 for x in block) for block in blocks) if blocks else None
        ),
    )


# ---------------------------------------------------------------------------
# Simultaneous conjugation
# ---------------------------------------------------------------------------


def pair_conjugators_images(
    a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]
) -> List[Images]:
    """All sigma with sigma a_k sigma^-1 = b_k for every k (0-indexed tuples).

    Backtracking: fix sigma(s) for the smallest unassigned symbol s, then
    propagate sigma(g(x)) = g'(sigma(x)) along the action graph.
    """
    n = len(a[0])
    if any(len(p) != n for p in list(a) + list(b)):
        raise DegreeMismatch("pair_conjugators needs equal degrees")
    pairs = list(zip(a, b))
    results: List[Images] = []

    def propagate(sigma: List[int], used: List[bool], start: int, target: int) -> bool:
        sigma[start] = target
        used[target] = True
        queue = [start]
        for x in queue:
            for g, gb in pairs:
                gx, want = g[x], gb[sigma[x]]
                if sigma[gx] == -1:
                    if used[want]:
                        return False
                    sigma[gx] = want
                    used[want] = True
                    queue.append(gx)
                elif sigma[gx] != want:
                    return False
        return True

    def search(sigma: List[int], used: List[bool]) -> None:
        try:
            start = sigma.index(-1)
        except ValueError:
            results.append(tuple(sigma))
            return
        for target in range(n):
            if used[target]:
                continue
            s2, u2 = list(sigma), list(used)
            if propagate(s2, u2, start, target):
                search(s2, u2)

    search([-1] * n, [False] * n)
    return sorted(results)


def pair_conjugators(
    a: Tuple[Permutation, Permutation], b: Tuple[Permutation, Permutation]
) -> List[Permutation]:
    """Every sigma with sigma h sigma^-1 = h' and sigma v sigma^-1 = v'.

    Sorted by image sequence; empty iff the pairs are not simultaneously
    conjugate.
    """
    found = pair_conjugators_images([p.images for p in a], [p.images for p in b])
    return [Permutation(s) for s in found]
