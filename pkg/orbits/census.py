"""Word, cusp and cycle censuses of orbits, genus lower bounds and curve invariants."""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from orbits.orbit import Orbit
from surfaces.origami import CanonicalOrigami, cusp_data, minus_identity
from surfaces.perm import cycles_of
from surfaces.sl2z import SL2Word, reduced_words, word_info, word_name
from utils.errors import NonIntegralGenus, NotMinusISymmetric, StructureMismatch

logger = logging.getLogger(__name__)

# Longest cusp face (RU)^k tracked by the face inventory.
MAX_CUSP_FACE_WIDTH = 6


@dataclass
class WordCount:
    word: SL2Word
    kind: str
    count: int
    witnesses: List[int]

    @property
    def text(self) -> str:
        return word_name(self.word)


@dataclass
class CuspRecord:
    width: int
    members: List[int]
    representative: CanonicalOrigami
    h2_params: Optional[Tuple[int, ...]] = None
    twists_reduced: Optional[bool] = None


@dataclass
class FaceCensus:
    words: List[WordCount] = field(default_factory=list)
    cycles: Dict[int, int] = field(default_factory=dict)
    cusps: List[CuspRecord] = field(default_factory=list)

    def count(self, text: str) -> int:
        for row in self.words:
            if row.text == text:
                return row.count
        raise KeyError(text)

    @property
    def cusp_widths(self) -> List[int]:
        return [c.width for c in self.cusps]


@dataclass
class CurveInvariants:
    V: int
    chi: Fraction
    e2: int
    e3: int
    cusps: int
    genus: int
    cusp_widths: List[int] = field(default_factory=list)
    faces: Dict[int, int] = field(default_factory=dict)

    def to_json(self) -> Dict[str, object]:
        return {
            "V": self.V,
            "chi": str(self.chi),
            "e2": self.e2,
            "e3": self.e3,
            "cusps": self.cusps,
            "genus": self.genus,
            "cusp_widths": sorted(self.cusp_widths),
            "faces": {str(k): v for k, v in sorted(self.faces.items())},
        }


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------


def fixed_members(orbit: Orbit, word: SL2Word) -> List[int]:
    """Members X with w(X) isomorphic to X."""
    return orbit.fixed_by(word)


def word_census(
    orbit: Orbit,
    max_len: int,
    alphabet: str = "parabolic",
    kinds: Optional[Sequence[str]] = None,
    words: Optional[Sequence[SL2Word]] = None,
) -> FaceCensus:
    """Fixed members per word, for the reduced classes or for ``words`` as written."""
    if words is None:
        pairs = reduced_words(max_len, alphabet)
    else:
        pairs = [(w, word_info(w)) for w in words]
    rows = []
    for word, info in pairs:
        if kinds is not None and info.kind not in kinds:
            continue
        fixed = fixed_members(orbit, word)
        rows.append(WordCount(word=word, kind=info.kind, count=len(fixed), witnesses=fixed))
    logger.debug("word census over %d words for orbit of size %d", len(rows), len(orbit))
    return FaceCensus(words=rows)


# ---------------------------------------------------------------------------
# Cusps
# ---------------------------------------------------------------------------


def cusp_census(orbit: Orbit) -> FaceCensus:
    """Partition the orbit into T-orbits, one record per cusp."""
    t_perm = orbit.action("T")
    records = []
    for cyc in cycles_of(t_perm):
        data = cusp_data(orbit.origami(min(cyc)))
        if data.width != len(cyc):
            raise StructureMismatch(f"cusp of width {data.width} has {len(cyc)} members in the orbit")
        records.append(
            CuspRecord(
                width=data.width,
                members=sorted(cyc),
                representative=data.representative,
                h2_params=data.h2_params,
                twists_reduced=data.twists_reduced,
            )
        )
    records.sort(key=lambda r: (r.width, r.representative.digest))
    return FaceCensus(cusps=records)


# ---------------------------------------------------------------------------
# Cycles and the Euler characteristic
# ---------------------------------------------------------------------------


def cycle_census(graph: nx.MultiGraph, max_len: int) -> Dict[int, int]:
    """Closed edge cycles of each length up to rotation and reflection.

    Loops count once, bigons are pairs of parallel edges and longer cycles are
    simple vertex cycles weighted by the edge multiplicities along them.
    """
    counts = {i: 0 for i in range(1, max_len + 1)}
    multiplicity: Dict[Tuple[int, int], int] = {}
    for u, v in graph.edges():
        if u == v:
            counts[1] += 1
        else:
            pair = (min(u, v), max(u, v))
            multiplicity[pair] = multiplicity.get(pair, 0) + 1
    if max_len < 2:
        return {1: counts[1]}
    counts[2] = sum(m * (m - 1) // 2 for m in multiplicity.values())
    if max_len >= 3:
        simple = nx.Graph()
        simple.add_nodes_from(graph.nodes())
        simple.add_edges_from(multiplicity)
        for cycle in nx.simple_cycles(simple, length_bound=max_len):
            if len(cycle) < 3:
                continue
            weight = 1
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                weight *= multiplicity[(min(a, b), max(a, b))]
            counts[len(cycle)] += weight
    return counts


def genus_lower_bound(V: int, counts: Mapping[int, int], girth_target: int = 5) -> int:
    """Genus bound from -t*chi >= (t-4)V - sum_{i<t} (t-i) c_i, rounded down."""
    t = girth_target
    short = sum((t - i) * counts.get(i, 0) for i in range(1, t))
    bound = 1 + Fraction((t - 4) * V - short, 2 * t)
    return max(0, math.floor(bound))


# ---------------------------------------------------------------------------
# Teichmüller curve invariants
# ---------------------------------------------------------------------------


def _check_minus_identity(orbit: Orbit) -> None:
    for i, member in enumerate(orbit.members):
        if orbit.index_of(minus_identity(member.origami)) != i:
            raise NotMinusISymmetric(f"member {member} is not fixed by -I")


def _check_cycle_lengths(orbit: Orbit, symbol: str, allowed: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    cycles = cycles_of(orbit.action(symbol))
    bad = sorted({len(c) for c in cycles} - set(allowed))
    if bad:
        raise StructureMismatch(f"{symbol} has cycles of length {bad}, expected only {allowed}")
    return cycles


def curve_invariants(orbit: Orbit, faces: bool = True) -> CurveInvariants:
    """V, chi, e2, e3, cusp count and genus of the Teichmüller curve of the orbit."""
    _check_minus_identity(orbit)
    r_cycles = _check_cycle_lengths(orbit, "R", (1, 2))
    u_cycles = _check_cycle_lengths(orbit, "U", (1, 3))
    V = len(orbit)
    e2 = sum(1 for c in r_cycles if len(c) == 1)
    e3 = sum(1 for c in u_cycles if len(c) == 1)
    widths = sorted(len(c) for c in cycles_of(orbit.action("T")))
    c = len(widths)
    genus = Fraction(V, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(c, 2) + 1
    if genus.denominator != 1 or genus < 0:
        raise NonIntegralGenus(f"V={V} e2={e2} e3={e3} c={c} give genus {genus}")
    curve = CurveInvariants(
        V=V,
        chi=Fraction(-V, 6),
        e2=e2,
        e3=e3,
        cusps=c,
        genus=int(genus),
        cusp_widths=widths,
    )
    if faces:
        curve.faces = face_inventory(curve, widths)
    logger.info("curve: V=%d e2=%d e3=%d c=%d genus=%d", V, e2, e3, c, curve.genus)
    return curve


def face_inventory(curve: CurveInvariants, cusp_widths: Sequence[int]) -> Dict[int, int]:
    """Faces of length 1..12 in the elliptic-generator embedding."""
    faces = {i: 0 for i in range(1, 13)}
    faces[1] = curve.e2 + curve.e3
    faces[2] = (curve.V - curve.e2) // 2
    faces[3] = (curve.V - curve.e3) // 3
    for width in cusp_widths:
        if 1 <= width <= MAX_CUSP_FACE_WIDTH:
            faces[2 * width] += 1
    return faces


def lower_bound_trend(orbits: Sequence[Orbit]) -> List[Tuple[int, int]]:
    """(n, girth-13 genus bound) per orbit, sorted by n."""
    trend = []
    for orbit in orbits:
        curve = curve_invariants(orbit)
        trend.append((orbit.n, genus_lower_bound(curve.V, curve.faces, girth_target=13)))
    return sorted(trend)
