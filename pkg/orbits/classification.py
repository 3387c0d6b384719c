"""Known HLK invariants and orbit labels per stratum."""

from typing import Dict, Optional, Set, Tuple

from surfaces.origami import HLKInvariant


def h2_label(hlk: HLKInvariant, n: int) -> Optional[str]:
    """A, B or single for a primitive H(2) origami on n squares."""
    label = hlk.label
    if label == "(0,[3,1,1])":
        return "single" if n == 3 else "A"
    if label == "(2,[1,1,1])":
        return "B"
    if label == "(1,[2,2,0])":
        return "single"
    return None


def h2_expected_orbits(n: int) -> int:
    if n < 3:
        return 0
    if n == 3 or n % 2 == 0:
        return 1
    return 2


def h2_expected_hlk(n: int) -> Set[str]:
    if n == 3 or n % 2:
        return {"(0,[3,1,1])", "(2,[1,1,1])"} if n >= 5 else {"(0,[3,1,1])"}
    return {"(1,[2,2,0])"}


def prym4_expected_hlk(n: int) -> Set[str]:
    """Prym eigenform orbits in H(4), n >= 5."""
    if n % 2:
        return {"(0,[1,1,1])"}
    if n % 4 == 0 or n == 6:
        return {"(1,[2,0,0])"}
    return {"(1,[2,0,0])", "(3,[0,0,0])"}


def prym6_expected_hlk(n: int) -> Set[str]:
    """Prym eigenform orbits in H(6); none for odd n."""
    if n % 2:
        return set()
    return {"(1,[0,0,0])"}


def h11_expected_hlk(d: int, n: int, epsilon: int) -> Set[str]:
    """Eigenform loci in H(1,1) by discriminant d^2, torsion n and spin epsilon."""
    if n % 2 == 0:
        return {"(0,[4,2,0])"}
    if d % 2:
        return {"(3,[1,1,1])"} if epsilon == 0 else {"(1,[3,1,1])"}
    return {"(0,[2,2,2])"} if epsilon == 0 else {"(2,[2,2,0])"}


def h4_hyperelliptic_expected_hlk(n: int) -> Set[str]:
    if n % 2:
        return {"(4,[1,1,1])", "(2,[3,1,1])", "(0,[5,1,1])", "(0,[3,3,1])"}
    return {"(3,[2,2,0])", "(1,[4,2,0])", "(1,[2,2,2])"}


# Every member of the orbit.
WHOLE_ORBIT = "*"

# Members of the primitive H(2) orbits fixed by the named hyperbolic words of
# length <= 4, keyed by word then (n, orbit label). Pairs absent here fix
# nothing; in particular every list is empty from n = 10 on.
H2_HYPERBOLIC_FIXED: Dict[str, Dict[Tuple[int, str], Tuple[str, ...]]] = {
    "ST": {
        (5, "B"): ("(1,2,3,4,5),(3,4,5)", "(3,4,5),(1,2,3,5,4)"),
    },
    "ST^2": {
        (4, "single"): ("(1,2,3,4),(2,3,4)",),
        (5, "A"): ("(1,2)(3,4,5),(1,3,2,4,5)",),
        (7, "A"): ("(4,5,6,7),(1,2,3,4,7,6,5)",),
    },
    "S^2T": {
        (4, "single"): ("(2,3,4),(1,2,4,3)",),
        (5, "A"): ("(1,2,3,4,5),(1,4,2)(3,5)",),
        (7, "A"): ("(1,2,3,4,5,6,7),(4,5,6,7)",),
    },
    "S^2T^2": {
        (3, "single"): (WHOLE_ORBIT,),
        (4, "single"): ("(2,3,4),(1,2,3,4)", "(1,2,3,4),(2,4,3)"),
        (5, "A"): ("(2,3,4,5),(1,2,5,4,3)", "(1,2,3,4,5),(2,3,4,5)"),
        (7, "A"): ("(1,2)(3,4)(5,6,7),(1,3,5,6)(2,4,7)", "(1,2,3)(4,5,6,7),(1,4)(2,5)(3,7,6)"),
    },
    "(TS)^-1ST": {
        (5, "B"): ("(3,4,5),(1,2,3)", "(1,2,3,4,5),(1,2,4,3,5)"),
    },
    "ST^3": {
        (7, "B"): ("(1,2,3,4,5,6,7),(3,6,4,7,5)",),
        (9, "B"): ("(5,6,7,8,9),(1,2,3,4,5,9,8,7,6)",),
    },
    "S^3T": {
        (7, "B"): ("(3,4,5,6,7),(1,2,3,6,4,7,5)",),
        (9, "B"): ("(1,2,3,4,5,6,7,8,9),(5,6,7,8,9)",),
    },
    "(ST)^2": {},
}


def h2_hyperbolic_fixed(word: str, n: int, label: Optional[str]) -> Tuple[str, ...]:
    """Origamis of the H(2) orbit (n, label) fixed by a named hyperbolic word."""
    if word not in H2_HYPERBOLIC_FIXED:
        raise KeyError(f"no fixed-point table for {word!r}")
    return H2_HYPERBOLIC_FIXED[word].get((n, label or ""), ())
