from collections import Counter

import pytest

from surfaces.origami import is_isomorphic
from surfaces.sl2z import (
    NAMED_WORDS,
    SL2Word,
    apply_word,
    elementary_letters,
    format_word,
    parse_word,
    reduced_words,
    word_info,
    word_key,
    word_name,
)
from utils.errors import ParseError


def test_letter_matrices():
    assert parse_word("T").matrix == (1, 1, 0, 1)
    assert parse_word("S").matrix == (1, 0, 1, 1)
    # R = T^-1 S T^-1 and U = T S^-1
    assert parse_word("T^-1ST^-1").matrix == parse_word("R").matrix == (0, -1, 1, 0)
    assert parse_word("TS^-1").matrix == parse_word("U").matrix == (0, 1, -1, 1)


def test_word_classification():
    assert word_info(parse_word("R")).kind == "elliptic"
    assert word_info(parse_word("R")).order == 4
    assert word_info(parse_word("U")).order == 6
    assert word_info(parse_word("R^2")).kind == "central"
    assert word_info(parse_word("T^3")).kind == "parabolic"
    assert word_info(parse_word("TS")).kind == "hyperbolic"


def test_parse_and_format_words():
    w = parse_word("S^2T^-1")
    assert w.letters == (("S", 1), ("S", 1), ("T", -1))
    assert format_word(w) == "S^2T^-1"
    assert parse_word("(TS)^-1").letters == (("S", -1), ("T", -1))
    assert parse_word("(S^-1T)^2") == parse_word("S^-1TS^-1T")
    assert parse_word("T⁻¹") == parse_word("T^-1")
    for bad in ("", "X", "(TS", "^2"):
        with pytest.raises(ParseError):
            parse_word(bad)


def test_word_key_identifies_rotations_and_inverses():
    assert word_key(parse_word("TS^-1")) == word_key(parse_word("S^-1T"))
    assert word_key(parse_word("TS")) == word_key(parse_word("S^-1T^-1"))


def test_reduced_words():
    words = reduced_words(1)
    assert [str(w) for w, _ in words] == ["T", "S"]
    two = [str(w) for w, _ in reduced_words(2)]
    assert "T^2" in two and "ST" in two and "TS" not in two
    assert "TT^-1" not in two
    with pytest.raises(ValueError):
        reduced_words(0)


def test_elliptic_letters_expand():
    assert elementary_letters(parse_word("U^-1")) == (("S", 1), ("T", -1))


def test_action_composes_right_to_left(three_square):
    T, S = parse_word("T"), parse_word("S")
    X = three_square
    assert apply_word(T * S, X) == apply_word(T, apply_word(S, X))
    assert apply_word(parse_word("TT^-1"), X) == X
    # -I = R^2 acts trivially on the three-square surface
    assert is_isomorphic(apply_word(parse_word("R^2"), X), X)
    assert apply_word(SL2Word(()), X) == X


def test_reduced_word_classes_up_to_length_four():
    words = reduced_words(4)
    assert Counter(info.kind for _, info in words) == {"hyperbolic": 8, "parabolic": 9, "elliptic": 8}
    for kind, texts in NAMED_WORDS.items():
        assert sorted(word_name(w) for w, info in words if info.kind == kind) == sorted(texts)
    assert word_name(parse_word("(TS)^-1ST")) == "(TS)^-1ST"
    assert word_name(parse_word("TS")) == "TS"
    assert [str(w) for w, _ in reduced_words(2, "elliptic")][:2] == ["R", "U"]
