"""Words in SL(2,Z) and their action on origamis.

Letters are ``(symbol, sign)`` pairs with symbol in T, S, R, U. In a word the
leftmost letter acts last, so ``apply_word(w1 w2, X) = w1(w2(X))`` and the
matrix of a word is the ordered product of its letter matrices.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from typing_extensions import Literal

from surfaces.origami import (
    Key,
    Origami,
    from_images,
    s_images,
    s_inv_images,
    t_images,
    t_inv_images,
)
from utils.errors import ParseError

logger = logging.getLogger(__name__)

Letter = Tuple[str, int]
Matrix = Tuple[int, int, int, int]
Alphabet = Literal["parabolic", "elliptic"]

IDENTITY: Matrix = (1, 0, 0, 1)
MINUS_IDENTITY: Matrix = (-1, 0, 0, -1)

LETTER_MATRICES: Dict[str, Matrix] = {
    "T": (1, 1, 0, 1),
    "S": (1, 0, 1, 1),
    "R": (0, -1, 1, 0),
    "U": (0, 1, -1, 1),
}

ALPHABETS: Dict[str, Tuple[str, str]] = {
    "parabolic": ("T", "S"),
    "elliptic": ("R", "U"),
}

# R = T^-1 S T^-1 and U = T S^-1, written left to right.
EXPANSIONS: Dict[str, Tuple[Letter, ...]] = {
    "R": (("T", -1), ("S", 1), ("T", -1)),
    "U": (("T", 1), ("S", -1)),
}

# Customary representatives of the reduced T, S word classes of length <= 4.
NAMED_WORDS: Dict[str, Tuple[str, ...]] = {
    "hyperbolic": ("ST", "ST^2", "S^2T", "ST^3", "S^2T^2", "S^3T", "(ST)^2", "(TS)^-1ST"),
    "parabolic": ("T", "S", "T^2", "S^2", "T^3", "S^3", "T^4", "S^4", "ST^-2S"),
    "elliptic": ("S^-1T", "T^-1ST^-1", "ST^-1S", "S^-1T^3", "T^-1S^3", "S^-1TST", "T^-1STS", "(S^-1T)^2"),
}

ELEMENTARY: Dict[Letter, Callable] = {
    ("T", 1): t_images,
    ("T", -1): t_inv_images,
    ("S", 1): s_images,
    ("S", -1): s_inv_images,
}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def mat_inv(a: Matrix) -> Matrix:
    return (a[3], -a[1], -a[2], a[0])


def letter_matrix(letter: Letter) -> Matrix:
    m = LETTER_MATRICES[letter[0]]
    return m if letter[1] > 0 else mat_inv(m)


@dataclass(frozen=True)
class SL2Word:
    letters: Tuple[Letter, ...]

    @property
    def matrix(self) -> Matrix:
        m = IDENTITY
        for letter in self.letters:
            m = mat_mul(m, letter_matrix(letter))
        return m

    @property
    def trace(self) -> int:
        m = self.matrix
        return m[0] + m[3]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def inverse(self) -> "SL2Word":
        return SL2Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def __mul__(self, other: "SL2Word") -> "SL2Word":
        return SL2Word(self.letters + other.letters)


@dataclass(frozen=True)
class WordClass:
    kind: str
    order: Optional[int] = None


def word_info(w: SL2Word) -> WordClass:
    m = w.matrix
    if m == IDENTITY:
        return WordClass("central", 1)
    if m == MINUS_IDENTITY:
        return WordClass("central", 2)
    tr = abs(m[0] + m[3])
    if tr < 2:
        power = m
        for k in range(1, 7):
            if power == IDENTITY:
                return WordClass("elliptic", k)
            power = mat_mul(power, m)
        raise ValueError(f"elliptic matrix {m} without finite order")
    if tr == 2:
        return WordClass("parabolic")
    return WordClass("hyperbolic")


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def format_word(w: SL2Word) -> str:
    """Juxtaposed letters with ``^`` exponents, e.g. ``S^2T^-1``."""
    if not w.letters:
        return "1"
    out = []
    for symbol, group in itertools.groupby(w.letters):
        power = len(list(group)) * symbol[1]
        out.append(symbol[0] if power == 1 else f"{symbol[0]}^{power}")
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:([TSRU])|(\()|(\))|\^\s*(-?\d+)|⁻¹|(\S))")


def parse_word(text: str) -> SL2Word:
    """Parse ``S^2T^-1``, ``(TS)^-1ST``, ``(S^-1T)^2`` and the like.

    Letters are case-sensitive; ``⁻¹`` is accepted as ``^-1``.
    """
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        letter, lpar, rpar, power, junk = match.groups()
        if junk:
            raise ParseError(f"unexpected {junk!r} in word {text!r}")
        if letter:
            tokens.append(("letter", letter))
        elif lpar:
            tokens.append(("(", None))
        elif rpar:
            tokens.append((")", None))
        elif power is not None:
            tokens.append(("^", int(power)))
        elif match.group(0).strip() == "⁻¹":
            tokens.append(("^", -1))

    pos = 0

    def parse_sequence() -> Tuple[Letter, ...]:
        nonlocal pos
        out: List[Letter] = []
        while pos < len(tokens) and tokens[pos][0] != ")":
            kind, value = tokens[pos]
            pos += 1
            if kind == "letter":
                atom: Tuple[Letter, ...] = ((value, 1),)
            elif kind == "(":
                atom = parse_sequence()
                if pos >= len(tokens) or tokens[pos][0] != ")":
                    raise ParseError(f"unbalanced parentheses in {text!r}")
                pos += 1
            else:
                raise ParseError(f"exponent without a base in {text!r}")
            if pos < len(tokens) and tokens[pos][0] == "^":
                exponent = tokens[pos][1]
                pos += 1
                if exponent < 0:
                    atom = tuple((s, -e) for s, e in reversed(atom))
                atom = atom * abs(exponent)
            out.extend(atom)
        return tuple(out)

    letters = parse_sequence()
    if pos != len(tokens):
        raise ParseError(f"unbalanced parentheses in {text!r}")
    if not letters:
        raise ParseError(f"empty word {text!r}")
    return SL2Word(letters)


# ---------------------------------------------------------------------------
# Action on origamis
# ---------------------------------------------------------------------------


def elementary_letters(w: SL2Word) -> Tuple[Letter, ...]:
    """Rewrite R and U letters in terms of T and S."""
    out: List[Letter] = []
    for symbol, sign in w.letters:
        if symbol in EXPANSIONS:
            block = EXPANSIONS[symbol]
            if sign < 0:
                block = tuple((s, -e) for s, e in reversed(block))
            out.extend(block)
        else:
            out.append((symbol, sign))
    return tuple(out)


def apply_letters(letters: Sequence[Letter], key: Key) -> Key:
    h, v = key
    for letter in reversed(letters):
        h, v = ELEMENTARY[letter](h, v)
    return h, v


def apply_word(w: SL2Word, X: Origami) -> Origami:
    return from_images(*apply_letters(elementary_letters(w), X.key))


# ---------------------------------------------------------------------------
# Reduced words
# ---------------------------------------------------------------------------


def word_key(w: SL2Word) -> FrozenSet[Matrix]:
    """Matrices of every cyclic rotation of w and of w^-1."""
    out = set()
    for word in (w, w.inverse()):
        letters = word.letters
        for k in range(len(letters)):
            out.add(SL2Word(letters[k:] + letters[:k]).matrix)
    return frozenset(out)


def _cyclically_reduced(letters: Sequence[Letter]) -> bool:
    for a, b in zip(letters, letters[1:]):
        if a[0] == b[0] and a[1] == -b[1]:
            return False
    if len(letters) > 1:
        first, last = letters[0], letters[-1]
        if first[0] == last[0] and first[1] == -last[1]:
            return False
    return True


def _named_representatives(alphabet: Alphabet) -> Dict[FrozenSet[Matrix], SL2Word]:
    if alphabet != "parabolic":
        return {}
    return {word_key(w): w for texts in NAMED_WORDS.values() for w in parse_words(texts)}


def word_name(w: SL2Word) -> str:
    """The customary text of a named word, otherwise its formatted letters."""
    for texts in NAMED_WORDS.values():
        for text in texts:
            if parse_word(text) == w:
                return text
    return format_word(w)


def reduced_words(max_len: int, alphabet: Alphabet = "parabolic") -> List[Tuple[SL2Word, WordClass]]:
    """Cyclically reduced words up to rotation and inversion, classified.

    Words are generated by length, then in the letter order X, Y, X^-1, Y^-1.
    A class with a customary name in ``NAMED_WORDS`` is represented by that
    word, any other class by the first word reached. Conjugate words fix
    different members, so the representative matters to the witnesses.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    x, y = ALPHABETS[alphabet]
    letters = [(x, 1), (y, 1), (x, -1), (y, -1)]
    named = _named_representatives(alphabet)
    seen = set()
    out = []
    for length in range(1, max_len + 1):
        for combo in itertools.product(letters, repeat=length):
            if not _cyclically_reduced(combo):
                continue
            word = SL2Word(tuple(combo))
            key = word_key(word)
            if key in seen:
                continue
            seen.add(key)
            representative = named.get(key, word)
            if len(representative) != length:
                representative = word
            out.append((representative, word_info(representative)))
    logger.debug("%d reduced %s words of length <= %d", len(out), alphabet, max_len)
    return out


def words_of_kind(max_len: int, kind: str, alphabet: Alphabet = "parabolic") -> List[SL2Word]:
    return [w for w, info in reduced_words(max_len, alphabet) if info.kind == kind]


def parse_words(texts: Iterable[str]) -> List[SL2Word]:
    return [parse_word(t) for t in texts]
