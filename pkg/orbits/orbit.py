"""SL(2,Z)-orbits of origamis by breadth-first closure over canonical forms."""

import itertools
import logging
import multiprocessing
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.utilities.iterables import partitions
from tqdm import tqdm

from orbits.classification import h2_expected_orbits, h2_label
from surfaces.origami import (
    CanonicalOrigami,
    Key,
    Origami,
    StratumSignature,
    canonical_images,
    corner_images,
    digest_images,
    from_images,
    h2_seeds,
    hlk_invariant,
    involution_data,
    monodromy_class,
    stratum_and_genus,
)
from surfaces.perm import (
    cycles_of,
    is_primitive_images,
    is_transitive_images,
)
from surfaces.sl2z import ALPHABETS, SL2Word, apply_letters, elementary_letters
from utils.config import progress_enabled
from utils.errors import CapExceeded, EmptyOrbit, NoInvolution, OrigamiError

logger = logging.getLogger(__name__)

# Frontiers smaller than this are expanded in-process even with workers > 1.
PARALLEL_THRESHOLD = 64


@dataclass
class Orbit:
    """Members sorted by digest; ``edges[g][i]`` is the index of g(member i)."""

    members: List[CanonicalOrigami]
    edges: Dict[str, List[int]]
    generators: str
    stratum: StratumSignature
    label: Optional[str] = None
    _index: Dict[Key, int] = field(default_factory=dict, repr=False)
    _actions: Dict[Tuple[str, int], List[int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {m.key: i for i, m in enumerate(self.members)}

    def __len__(self) -> int:
        return len(self.members)

    @property
    def n(self) -> int:
        return self.members[0].origami.n

    @property
    def digests(self) -> List[str]:
        return [m.digest for m in self.members]

    def index_of(self, X: Origami) -> Optional[int]:
        return self._index.get(canonical_images(X.h.images, X.v.images))

    def index_of_key(self, key: Key) -> Optional[int]:
        return self._index.get(key)

    def origami(self, i: int) -> Origami:
        return self.members[i].origami

    def action(self, symbol: str, sign: int = 1) -> List[int]:
        """Permutation of member indices induced by a letter."""
        cache_key = (symbol, sign)
        if cache_key in self._actions:
            return self._actions[cache_key]
        if symbol in self.edges:
            forward = self.edges[symbol]
            if sign > 0:
                perm = list(forward)
            else:
                perm = [0] * len(forward)
                for i, j in enumerate(forward):
                    perm[j] = i
        else:
            letters = elementary_letters(SL2Word(((symbol, sign),)))
            perm = self._apply_by_edges(letters) if self._covers(letters) else None
            if perm is None:
                perm = [self._lookup(apply_letters(letters, m.key)) for m in self.members]
        self._actions[cache_key] = perm
        return perm

    def _covers(self, letters: Sequence[Tuple[str, int]]) -> bool:
        return all(s in self.edges for s, _ in letters)

    def _apply_by_edges(self, letters: Sequence[Tuple[str, int]]) -> List[int]:
        out = []
        for i in range(len(self.members)):
            idx = i
            for symbol, sign in reversed(letters):
                idx = self.action(symbol, sign)[idx]
            out.append(idx)
        return out

    def _lookup(self, key: Key) -> int:
        idx = self._index.get(canonical_images(*key))
        if idx is None:
            raise OrigamiError("orbit is not closed under the requested generator")
        return idx

    def word_action(self, word: SL2Word) -> List[int]:
        """Index permutation of a whole word; the leftmost letter acts last."""
        perms = [self.action(s, e) for s, e in reversed(word.letters)]
        out = []
        for i in range(len(self.members)):
            idx = i
            for p in perms:
                idx = p[idx]
            out.append(idx)
        return out

    def fixed_by(self, word: SL2Word) -> List[int]:
        perm = self.word_action(word)
        return [i for i, j in enumerate(perm) if i == j]


# ---------------------------------------------------------------------------
# Breadth-first closure
# ---------------------------------------------------------------------------


def _moves(generators: str) -> List[Tuple[Tuple[str, int], ...]]:
    """Forward generators first, then their inverses, as elementary letter strings."""
    x, y = ALPHABETS[generators]
    out = []
    for sign in (1, -1):
        for symbol in (x, y):
            out.append(elementary_letters(SL2Word(((symbol, sign),))))
    return out


def _expand(args: Tuple[Key, str]) -> List[Key]:
    key, generators = args
    return [canonical_images(*apply_letters(m, key)) for m in _moves(generators)]


def _expand_frontier(frontier: List[Key], generators: str, pool) -> List[List[Key]]:
    jobs = [(key, generators) for key in frontier]
    if pool is not None and len(frontier) >= PARALLEL_THRESHOLD:
        return pool.map(_expand, jobs, chunksize=max(1, len(jobs) // 64))
    return [_expand(job) for job in jobs]


def enumerate_orbit(
    seed: Origami,
    generators: str = "parabolic",
    workers: int = 1,
    progress: Optional[bool] = None,
    label: bool = True,
) -> Orbit:
    """Close ``seed`` under the generator set and its inverses.

    Each BFS level is expanded (possibly in parallel) and committed in digest
    order, so the result does not depend on the worker count.
    """
    if generators not in ALPHABETS:
        raise ValueError(f"unknown generator set {generators!r}")
    forward = ALPHABETS[generators]
    if not is_primitive_images([seed.h.images, seed.v.images]):
        logger.debug("enumerating the orbit of an imprimitive seed %s", seed)

    start = canonical_images(seed.h.images, seed.v.images)
    digests: Dict[Key, str] = {start: digest_images(*start)}
    images: Dict[Key, List[Key]] = {}
    frontier = [start]
    show = progress_enabled() if progress is None else progress

    pool = None
    if workers > 1:
        pool = multiprocessing.get_context().Pool(workers)
    try:
        with tqdm(desc=f"orbit n={seed.n}", unit="origami", disable=not show) as bar:
            level = 0
            while frontier:
                expanded = _expand_frontier(frontier, generators, pool)
                new = set()
                for key, targets in zip(frontier, expanded):
                    images[key] = targets[: len(forward)]
                    for target in targets:
                        if target not in digests:
                            new.add(target)
                for key in new:
                    digests[key] = digest_images(*key)
                frontier = sorted(new, key=lambda k: digests[k])
                bar.update(len(new) + (1 if level == 0 else 0))
                logger.debug("level %d: frontier %d, total %d", level, len(frontier), len(digests))
                level += 1
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    ordered = sorted(digests, key=lambda k: digests[k])
    index = {key: i for i, key in enumerate(ordered)}
    members = [CanonicalOrigami(from_images(*key), digests[key]) for key in ordered]
    edges = {
        symbol: [index[images[key][g]] for key in ordered] for g, symbol in enumerate(forward)
    }
    orbit = Orbit(
        members=members,
        edges=edges,
        generators=generators,
        stratum=stratum_and_genus(seed),
        _index=index,
    )
    if label:
        orbit.label = label_orbit(orbit)
    logger.info("orbit of %s in %s: %d members", seed, orbit.stratum, len(orbit))
    return orbit


def orbit_from_members(members: Sequence[CanonicalOrigami], generators: str = "parabolic") -> Orbit:
    """Rebuild an Orbit (edges included) from a stored member list."""
    if not members:
        raise EmptyOrbit("member list is empty")
    ordered = sorted(members, key=lambda m: m.digest)
    index = {m.key: i for i, m in enumerate(ordered)}
    forward = ALPHABETS[generators]
    edges: Dict[str, List[int]] = {}
    for symbol in forward:
        letters = elementary_letters(SL2Word(((symbol, 1),)))
        targets = []
        for m in ordered:
            j = index.get(canonical_images(*apply_letters(letters, m.key)))
            if j is None:
                raise OrigamiError(f"member list is not closed under {symbol}")
            targets.append(j)
        edges[symbol] = targets
    orbit = Orbit(
        members=list(ordered),
        edges=edges,
        generators=generators,
        stratum=stratum_and_genus(ordered[0].origami),
        _index=index,
    )
    orbit.label = label_orbit(orbit)
    return orbit


def label_orbit(orbit: Orbit) -> Optional[str]:
    """A/B/single in H(2), Alt/Sym in H(1,1), the involution kind elsewhere."""
    if not orbit.members:
        raise EmptyOrbit("cannot label an empty orbit")
    X = orbit.origami(0)
    orders = orbit.stratum.zero_orders
    if orders == (2,):
        try:
            return h2_label(hlk_invariant(X), X.n)
        except NoInvolution:
            return None
    if orders == (1, 1):
        kind = monodromy_class(X).kind
        return kind if kind in ("Alt", "Sym") else None
    try:
        return involution_data(X).kind
    except NoInvolution:
        return None


# ---------------------------------------------------------------------------
# Whole strata
# ---------------------------------------------------------------------------


def cycle_type_representatives(n: int) -> List[Tuple[int, ...]]:
    """One permutation per cycle type, cycles on consecutive symbols, longest first."""
    reps = []
    for part in partitions(n):
        lengths = sorted(
            itertools.chain.from_iterable([k] * m for k, m in part.items()), reverse=True
        )
        images = list(range(n))
        pos = 0
        for length in lengths:
            for j in range(length):
                images[pos + j] = pos + (j + 1) % length
            pos += length
        reps.append(tuple(images))
    return sorted(reps)


def _zero_orders(h: Sequence[int], v: Sequence[int]) -> Tuple[int, ...]:
    c = corner_images(h, v)
    return tuple(sorted((len(cyc) - 1 for cyc in cycles_of(c) if len(cyc) > 1), reverse=True))


def _matches(orbit: Orbit, involution: Optional[str]) -> bool:
    if involution is None:
        return True
    try:
        return involution_data(orbit.origami(0)).kind == involution
    except NoInvolution:
        return False


def _sort_orbits(orbits: List[Orbit]) -> List[Orbit]:
    return sorted(orbits, key=lambda o: (-len(o), o.members[0].digest))


def brute_force_primitive(n: int, stratum: StratumSignature, progress: Optional[bool] = None) -> Dict[Key, str]:
    """Canonical keys (with digests) of every primitive origami in the stratum."""
    show = progress_enabled() if progress is None else progress
    found = set()
    reps = cycle_type_representatives(n)
    for h in tqdm(reps, desc=f"brute n={n}", disable=not show):
        for v in itertools.permutations(range(n)):
            if _zero_orders(h, v) != stratum.zero_orders:
                continue
            if not is_transitive_images([h, v]):
                continue
            key = canonical_images(h, v)
            found.add(key)
    primitive = {}
    for key in found:
        if is_primitive_images(list(key)):
            primitive[key] = digest_images(*key)
    logger.debug("n=%d %s: %d origamis, %d primitive", n, stratum, len(found), len(primitive))
    return primitive


def enumerate_stratum(
    n: int,
    stratum: StratumSignature,
    mode: str = "brute",
    seeds: Optional[Iterable[Origami]] = None,
    brute_cap: int = 10,
    generators: str = "parabolic",
    workers: int = 1,
    expected_orbits: Optional[int] = None,
    involution: Optional[str] = None,
    progress: Optional[bool] = None,
) -> List[Orbit]:
    """All primitive orbits of n-square origamis in a stratum.

    ``involution`` keeps only orbits whose -I involution has that kind
    (``"prym"`` for the Prym loci). Seeded mode stops early once
    ``expected_orbits`` orbits are closed.
    """
    orbits: List[Orbit] = []
    covered = set()
    if mode == "brute":
        if n > brute_cap:
            raise CapExceeded(f"brute force is capped at n={brute_cap}, asked for n={n}")
        keys = brute_force_primitive(n, stratum, progress)
        for key in sorted(keys, key=lambda k: keys[k]):
            if key in covered:
                continue
            orbit = enumerate_orbit(from_images(*key), generators, workers, progress=False)
            covered.update(m.key for m in orbit.members)
            if _matches(orbit, involution):
                orbits.append(orbit)
    elif mode == "seeded":
        if seeds is None:
            if stratum.zero_orders != (2,):
                raise ValueError(f"no default seeds for {stratum}")
            seeds = h2_seeds(n)
        for seed in seeds:
            if expected_orbits is not None and len(orbits) >= expected_orbits:
                break
            key = canonical_images(seed.h.images, seed.v.images)
            if key in covered:
                continue
            if stratum_and_genus(seed).zero_orders != stratum.zero_orders:
                continue
            if not is_primitive_images(list(key)):
                continue
            orbit = enumerate_orbit(seed, generators, workers, progress=progress)
            covered.update(m.key for m in orbit.members)
            if _matches(orbit, involution):
                orbits.append(orbit)
        if expected_orbits is not None and len(orbits) < expected_orbits:
            logger.warning(
                "seeded enumeration found %d of %d expected orbits", len(orbits), expected_orbits
            )
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    return _sort_orbits(orbits)


def h2_orbits(n: int, generators: str = "parabolic", workers: int = 1) -> List[Orbit]:
    """Primitive H(2) orbits on n squares from two- and one-cylinder seeds."""
    return enumerate_stratum(
        n,
        StratumSignature.from_zero_orders((2,)),
        mode="seeded",
        generators=generators,
        workers=workers,
        expected_orbits=h2_expected_orbits(n),
    )


def coverage_against_brute(orbits: Sequence[Orbit], n: int, stratum: StratumSignature, brute_cap: int = 10) -> Dict[str, object]:
    """Compare seeded orbits with the brute-force member set."""
    brute = set(brute_force_primitive(n, stratum, progress=False)) if n <= brute_cap else None
    seeded = {m.key for o in orbits for m in o.members}
    if brute is None:
        return {"seeded": len(seeded), "brute": None, "missing": None, "equal": None}
    return {
        "seeded": len(seeded),
        "brute": len(brute),
        "missing": len(brute - seeded),
        "equal": brute == seeded,
    }
