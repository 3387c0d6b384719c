"""Origamis (square-tiled surfaces) as transitive permutation pairs (h, v).

Square i is glued on its right to square h(i) and on its top to square v(i).
"""

import hashlib
import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from surfaces.perm import (
    Images,
    Permutation,
    StabilizerChain,
    compose_images,
    cycle_data,
    cycles_of,
    format_cycles,
    inverse_images,
    is_primitive_images,
    is_transitive_images,
    pair_conjugators_images,
)
from utils.errors import (
    AmbiguousInvolution,
    BadParams,
    DegreeMismatch,
    NoInvolution,
    NotConnected,
    ParityError,
    StructureMismatch,
)

logger = logging.getLogger(__name__)

Key = Tuple[Images, Images]


@dataclass(frozen=True)
class Origami:
    h: Permutation
    v: Permutation

    @property
    def n(self) -> int:
        return self.h.n

    @property
    def key(self) -> Key:
        return (self.h.images, self.v.images)

    def __str__(self) -> str:
        return f"({format_cycles(self.h)},{format_cycles(self.v)})"

    def to_json(self) -> Dict[str, object]:
        return {"n": self.n, "h": self.h.to_list(), "v": self.v.to_list()}


@dataclass(frozen=True)
class CanonicalOrigami:
    origami: Origami
    digest: str

    @property
    def key(self) -> Key:
        return self.origami.key

    def __str__(self) -> str:
        return str(self.origami)


@dataclass(frozen=True)
class StratumSignature:
    zero_orders: Tuple[int, ...]
    genus: int

    def __post_init__(self):
        if self.genus >= 1 and sum(self.zero_orders) != 2 * self.genus - 2:
            raise ParityError(
                f"zero orders {self.zero_orders} do not match genus {self.genus}"
            )

    @classmethod
    def from_zero_orders(cls, zero_orders: Sequence[int]) -> "StratumSignature":
        orders = tuple(sorted(zero_orders, reverse=True))
        total = sum(orders)
        if total % 2:
            raise ParityError(f"zero orders {orders} have odd sum")
        return cls(zero_orders=orders, genus=total // 2 + 1)

    def __str__(self) -> str:
        if not self.zero_orders:
            return "H(0)"
        return "H(" + ",".join(str(k) for k in self.zero_orders) + ")"


@dataclass(frozen=True)
class MonodromyClass:
    kind: str
    order: int
    primitive: bool

    def __str__(self) -> str:
        if self.kind == "Other":
            return f"Other({self.order})"
        return self.kind


@dataclass(frozen=True)
class HLKInvariant:
    """Fixed points of the -I involution over the four 2-torsion points.

    ``l0`` counts fixed regular vertices; fixed zeros are kept apart in
    ``fixed_cone_points``. The ordered triple is
    (over (0,1/2), over (1/2,1/2), over (1/2,0)).
    """

    l0: int
    ordered_triple: Tuple[int, int, int]
    fixed_cone_points: int = 0

    @property
    def unordered_triple(self) -> Tuple[int, int, int]:
        return tuple(sorted(self.ordered_triple, reverse=True))

    @property
    def total_fixed(self) -> int:
        return self.l0 + self.fixed_cone_points + sum(self.ordered_triple)

    @property
    def label(self) -> str:
        return "(%d,[%s])" % (self.l0, ",".join(str(x) for x in self.unordered_triple))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Cylinder:
    width: int
    height: int
    twist: int


@dataclass(frozen=True)
class CylinderDecomposition:
    cylinders: Tuple[Cylinder, ...]

    @property
    def area(self) -> int:
        return sum(c.width * c.height for c in self.cylinders)

    def __len__(self) -> int:
        return len(self.cylinders)


@dataclass(frozen=True)
class InvolutionData:
    sigmas: Tuple[Images, ...]
    total_fixed: int
    kind: str


@dataclass(frozen=True)
class CuspData:
    width: int
    representative: CanonicalOrigami
    h2_params: Optional[Tuple[int, int, int, int, int, int]] = None
    twists_reduced: Optional[bool] = None


# ---------------------------------------------------------------------------
# Construction and relabeling
# ---------------------------------------------------------------------------


def make_origami(h: Permutation, v: Permutation) -> Origami:
    if h.n != v.n:
        raise DegreeMismatch(f"h has degree {h.n} but v has degree {v.n}")
    if not is_transitive_images([h.images, v.images]):
        raise NotConnected(f"<h, v> is not transitive on {h.n} squares: {h}, {v}")
    return Origami(h, v)


def from_images(h: Sequence[int], v: Sequence[int]) -> Origami:
    """Wrap 0-indexed image tuples that are already known to be valid."""
    return Origami(Permutation(tuple(h)), Permutation(tuple(v)))


def relabel(X: Origami, sigma: Permutation) -> Origami:
    """Conjugate both permutations: square i becomes square sigma(i)."""
    s, sinv = sigma.images, inverse_images(sigma.images)
    h = compose_images(s, compose_images(X.h.images, sinv))
    v = compose_images(s, compose_images(X.v.images, sinv))
    return from_images(h, v)


def minus_identity(X: Origami) -> Origami:
    return from_images(inverse_images(X.h.images), inverse_images(X.v.images))


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def canonical_images(h: Sequence[int], v: Sequence[int]) -> Key:
    """Lexicographically least relabeling over all breadth-first numberings.

    Each start square is numbered 0 and the rest in order of discovery along
    h, v, h^-1, v^-1. Requires a transitive pair.
    """
    n = len(h)
    hinv, vinv = inverse_images(h), inverse_images(v)
    moves = (h, v, hinv, vinv)
    best: Optional[Tuple[int, ...]] = None
    for start in range(n):
        label = [-1] * n
        label[start] = 0
        order = [start]
        for x in order:
            for g in moves:
                y = g[x]
                if label[y] < 0:
                    label[y] = len(order)
                    order.append(y)
        candidate = tuple(label[h[x]] for x in order) + tuple(label[v[x]] for x in order)
        if best is None or candidate < best:
            best = candidate
    return (best[:n], best[n:])


def digest_images(h: Sequence[int], v: Sequence[int]) -> str:
    payload = json.dumps(
        {"n": len(h), "h": [i + 1 for i in h], "v": [i + 1 for i in v]},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def canonical_form(X: Origami) -> CanonicalOrigami:
    h, v = canonical_images(X.h.images, X.v.images)
    return CanonicalOrigami(origami=from_images(h, v), digest=digest_images(h, v))


def canonical_key(X: Origami) -> Key:
    return canonical_images(X.h.images, X.v.images)


def is_isomorphic(X: Origami, Y: Origami) -> bool:
    return X.n == Y.n and canonical_key(X) == canonical_key(Y)


# ---------------------------------------------------------------------------
# Topology
# ---------------------------------------------------------------------------


def corner_images(h: Sequence[int], v: Sequence[int]) -> Images:
    """c = h v h^-1 v^-1; the c-cycle of i is the vertex at the bottom-left of square i."""
    return compose_images(
        h, compose_images(v, compose_images(inverse_images(h), inverse_images(v)))
    )


def stratum_and_genus(X: Origami) -> StratumSignature:
    c = corner_images(X.h.images, X.v.images)
    cycles = cycles_of(c)
    twice = 2 + X.n - len(cycles)
    if twice % 2:
        raise ParityError(f"odd Euler characteristic for {X}")
    orders = tuple(sorted((len(cyc) - 1 for cyc in cycles if len(cyc) > 1), reverse=True))
    return StratumSignature(zero_orders=orders, genus=twice // 2)


def is_primitive(X: Origami) -> bool:
    return is_primitive_images([X.h.images, X.v.images])


def monodromy_class(X: Origami) -> MonodromyClass:
    gens = [X.h.images, X.v.images]
    order = StabilizerChain(gens).order()
    primitive = is_primitive_images(gens)
    all_even = cycle_data(X.h).is_even and cycle_data(X.v).is_even
    full = factorial(X.n)
    if order == full:
        kind = "Sym"
    elif all_even and order * 2 == full:
        kind = "Alt"
    else:
        kind = "Other"
    return MonodromyClass(kind=kind, order=order, primitive=primitive)


# ---------------------------------------------------------------------------
# The -I involution
# ---------------------------------------------------------------------------


def involutions(X: Origami) -> List[Images]:
    """Square maps sigma realising -I: sigma h sigma^-1 = h^-1, sigma v sigma^-1 = v^-1, sigma^2 = 1."""
    h, v = X.h.images, X.v.images
    found = pair_conjugators_images([h, v], [inverse_images(h), inverse_images(v)])
    return [s for s in found if all(s[s[i]] == i for i in range(len(s)))]


def _hlk_for(X: Origami, sigma: Images) -> HLKInvariant:
    h, v = X.h.images, X.v.images
    hinv, vinv = inverse_images(h), inverse_images(v)
    n = X.n
    centers = sum(1 for i in range(n) if sigma[i] == i)
    bottom_mids = sum(1 for i in range(n) if sigma[i] == vinv[i])
    left_mids = sum(1 for i in range(n) if sigma[i] == hinv[i])

    cycles = cycles_of(corner_images(h, v))
    vertex_of = [0] * n
    for idx, cyc in enumerate(cycles):
        for i in cyc:
            vertex_of[i] = idx
    regular, cone = 0, 0
    for idx, cyc in enumerate(cycles):
        i = cyc[0]
        # bottom-left corner of i goes to the top-right corner of sigma(i)
        if vertex_of[v[h[sigma[i]]]] == idx:
            if len(cyc) == 1:
                regular += 1
            else:
                cone += 1
    return HLKInvariant(
        l0=regular,
        ordered_triple=(left_mids, centers, bottom_mids),
        fixed_cone_points=cone,
    )


def hlk_invariant(X: Origami) -> HLKInvariant:
    sigmas = involutions(X)
    if not sigmas:
        raise NoInvolution(f"-I does not fix {X}")
    found = [_hlk_for(X, s) for s in sigmas]
    if len(set(found)) > 1:
        raise AmbiguousInvolution(
            f"{len(sigmas)} involutions of {X} give different HLK invariants",
            invariants=found,
        )
    return found[0]


def involution_data(X: Origami) -> InvolutionData:
    sigmas = involutions(X)
    if not sigmas:
        raise NoInvolution(f"-I does not fix {X}")
    total = _hlk_for(X, sigmas[0]).total_fixed
    genus = stratum_and_genus(X).genus
    # Riemann-Hurwitz: 2g - 2 = 2(2g' - 2) + r
    quotient = Fraction(2 * genus + 2 - total, 4)
    if quotient == 0:
        kind = "hyperelliptic"
    elif quotient.denominator == 1 and genus - quotient == 2:
        kind = "prym"
    else:
        kind = "other"
    return InvolutionData(sigmas=tuple(sigmas), total_fixed=total, kind=kind)


# ---------------------------------------------------------------------------
# Cylinders
# ---------------------------------------------------------------------------


def _rows(h: Sequence[int]) -> List[List[int]]:
    return [list(c) for c in cycles_of(h)]


def cylinder_rows(X: Origami) -> List[List[List[int]]]:
    """Horizontal cylinders as lists of rows, bottom row first.

    Each row lists its squares in h-order starting under the bottom row's
    smallest square; columns line up across the rows of one cylinder.
    """
    h, v = X.h.images, X.v.images
    rows = _rows(h)
    row_of = {}
    for r, row in enumerate(rows):
        for i in row:
            row_of[i] = r

    # Row r continues into the row above when no cone point sits on its top edge.
    successor = {
        r: row_of[v[row[0]]]
        for r, row in enumerate(rows)
        if all(v[h[i]] == h[v[i]] for i in row)
    }
    has_pred = set(successor.values())
    by_label = sorted(range(len(rows)), key=lambda r: min(rows[r]))

    cylinders = []
    assigned = set()

    def build(start: int) -> None:
        bottom = [min(rows[start])]
        while len(bottom) < len(rows[start]):
            bottom.append(h[bottom[-1]])
        stack = [bottom]
        assigned.add(start)
        r = start
        while r in successor and successor[r] not in assigned:
            r = successor[r]
            assigned.add(r)
            stack.append([v[i] for i in stack[-1]])
        cylinders.append(stack)

    for r in by_label:
        if r not in has_pred:
            build(r)
    # Whatever is left closes up into cylinders without singular boundary.
    for r in by_label:
        if r not in assigned:
            build(r)
    return cylinders


def _twist(X: Origami, stack: List[List[int]], corner_len: Sequence[int]) -> int:
    v = X.v.images
    bottom, top = stack[0], stack[-1]
    w = len(bottom)
    col_in_bottom = {sq: j for j, sq in enumerate(bottom)}
    self_glued = [
        (col_in_bottom[v[sq]] - tau) % w for tau, sq in enumerate(top) if v[sq] in col_in_bottom
    ]
    if self_glued:
        return min(self_glued)
    bottom_singular = [b for b, sq in enumerate(bottom) if corner_len[sq] >= 2]
    top_singular = [tau for tau, sq in enumerate(top) if corner_len[v[sq]] >= 2]
    if not bottom_singular or not top_singular:
        return 0
    return min((b - tau) % w for b in bottom_singular for tau in top_singular)


def cylinder_decomposition(X: Origami) -> CylinderDecomposition:
    corner = corner_images(X.h.images, X.v.images)
    corner_len = [0] * X.n
    for cyc in cycles_of(corner):
        for i in cyc:
            corner_len[i] = len(cyc)
    cylinders = [
        Cylinder(width=len(stack[0]), height=len(stack), twist=_twist(X, stack, corner_len))
        for stack in cylinder_rows(X)
    ]
    return CylinderDecomposition(
        cylinders=tuple(sorted(cylinders, key=lambda c: (c.width, c.height, c.twist)))
    )


# ---------------------------------------------------------------------------
# H(2) builders
# ---------------------------------------------------------------------------


def from_h2_params(w1: int, h1: int, t1: int, w2: int, h2: int, t2: int) -> Origami:
    """Two-cylinder H(2) origami: a w1 x h1 cylinder on top of a w2 x h2 one.

    Squares are numbered row-major from the bottom cylinder (1..w2*h2), then
    the top cylinder. The top of the bottom cylinder carries the top cylinder
    on its first w1 columns; the exposed part and the top cylinder's top
    are glued to the bottom with twists t2 and t1. Widths must satisfy
    w1 < w2.
    """
    params = (w1, h1, t1, w2, h2, t2)
    if any(not isinstance(x, int) or x < 0 for x in params):
        raise BadParams(f"parameters must be non-negative integers: {params}")
    if w1 < 1 or h1 < 1 or h2 < 1:
        raise BadParams(f"widths and heights must be positive: {params}")
    if not w1 < w2:
        raise BadParams(f"need w1 < w2: {params}")
    if not (t1 < w1 and t2 < w2):
        raise BadParams(f"twists must satisfy 0 <= t_i < w_i: {params}")

    base = w2 * h2
    n = base + w1 * h1

    def bottom(r: int, j: int) -> int:
        return r * w2 + j

    def upper(r: int, j: int) -> int:
        return base + r * w1 + j

    h = [0] * n
    v = [0] * n
    for r in range(h2):
        for j in range(w2):
            sq = bottom(r, j)
            h[sq] = bottom(r, (j + 1) % w2)
            if r < h2 - 1:
                v[sq] = bottom(r + 1, j)
            elif j < w1:
                v[sq] = upper(0, j)
            else:
                v[sq] = bottom(0, (j + t2) % w2)
    for r in range(h1):
        for j in range(w1):
            sq = upper(r, j)
            h[sq] = upper(r, (j + 1) % w1)
            if r < h1 - 1:
                v[sq] = upper(r + 1, j)
            else:
                v[sq] = bottom(0, ((j + t1) % w1 + t2) % w2)
    return from_images(h, v)


def from_h2_one_cylinder(a: int, b: int, c: int, t: int) -> Origami:
    """One-cylinder H(2) origami with top saddle connections a, b, c.

    The bottom of the single row carries the same connections in the order
    c, b, a starting at column t.
    """
    if min(a, b, c) < 1:
        raise BadParams(f"segment lengths must be positive: {(a, b, c)}")
    n = a + b + c
    if not 0 <= t < n:
        raise BadParams(f"offset must satisfy 0 <= t < {n}: {t}")
    top_start = {"A": 0, "B": a, "C": a + b}
    lengths = {"A": a, "B": b, "C": c}
    bottom_start = {"C": t, "B": t + c, "A": t + c + b}
    h = [(j + 1) % n for j in range(n)]
    v = [0] * n
    for seg in "ABC":
        for offset in range(lengths[seg]):
            v[top_start[seg] + offset] = (bottom_start[seg] + offset) % n
    return from_images(h, v)


def h2_parameters(X: Origami) -> Tuple[int, int, int, int, int, int]:
    """Recover (w1,h1,t1,w2,h2,t2) for a two-cylinder H(2) origami."""
    if stratum_and_genus(X).zero_orders != (2,):
        raise BadParams(f"{X} is not in H(2)")
    cyls = cylinder_decomposition(X).cylinders
    if len(cyls) != 2:
        raise BadParams(f"{X} has {len(cyls)} cylinders, expected 2")
    narrow, wide = cyls
    if narrow.width >= wide.width:
        raise BadParams(f"{X} has two cylinders of width {narrow.width}")
    return (narrow.width, narrow.height, narrow.twist, wide.width, wide.height, wide.twist)


def h2_seeds(n: int) -> Iterator[Origami]:
    """Every two-cylinder parameter origami on n squares, then the one-cylinder ones."""
    for w2 in range(2, n + 1):
        for w1 in range(1, w2):
            for h2 in range(1, n // w2 + 1):
                rest = n - w2 * h2
                if rest <= 0 or rest % w1:
                    continue
                h1 = rest // w1
                for t2 in range(w2):
                    for t1 in range(w1):
                        yield from_h2_params(w1, h1, t1, w2, h2, t2)
    for a in range(1, n - 1):
        for b in range(1, n - a):
            c = n - a - b
            for t in range(n):
                yield from_h2_one_cylinder(a, b, c, t)


# ---------------------------------------------------------------------------
# Elementary SL(2,Z) moves on image tuples
# ---------------------------------------------------------------------------


def t_images(h: Images, v: Images) -> Key:
    """T(h, v) = (h, v h^-1)."""
    return h, compose_images(v, inverse_images(h))


def t_inv_images(h: Images, v: Images) -> Key:
    return h, compose_images(v, h)


def s_images(h: Images, v: Images) -> Key:
    """S(h, v) = (h v^-1, v)."""
    return compose_images(h, inverse_images(v)), v


def s_inv_images(h: Images, v: Images) -> Key:
    return compose_images(h, v), v


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def cusp_data(X: Origami) -> CuspData:
    """Width of the T-orbit of X and a deterministic representative."""
    start = canonical_key(X)
    members = [X.key]
    h, v = t_images(*X.key)
    while canonical_images(h, v) != start:
        members.append((h, v))
        h, v = t_images(h, v)
    width = len(members)

    params = None
    reduced = None
    try:
        h2 = [h2_parameters(from_images(*m)) for m in members]
    except BadParams:
        h2 = None
    if h2:
        w1, g1, _, w2, g2, _ = h2[0]
        expected = _lcm(w1 // gcd(w1, g1), w2 // gcd(w2, g2))
        if expected != width:
            raise StructureMismatch(
                f"cusp of {X} has width {width}, two-cylinder formula gives {expected}"
            )
        best = min(range(width), key=lambda j: (h2[j][2], h2[j][5]))
        params = h2[best]
        reduced = params[2] < gcd(w1, g1) and params[5] < gcd(w2, g2)
        if not reduced:
            logger.warning("cusp representative %s has unreduced twists", params)
        chosen = members[best]
    else:
        chosen = min(members, key=lambda m: canonical_images(*m))
    return CuspData(
        width=width,
        representative=canonical_form(from_images(*chosen)),
        h2_params=params,
        twists_reduced=reduced,
    )
