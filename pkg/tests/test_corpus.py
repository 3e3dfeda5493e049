import random
import string
from fractions import Fraction
from itertools import product

import pytest

import _golden as G
from wordgf.algebra import series_in_t
from wordgf.corpus import (
    SEPARATOR,
    CharModel,
    format_probability,
    ingest_word_list,
    model_to_problem,
    read_alphabet,
    read_corpus,
)
from wordgf.errors import DuplicateWord, EmptyCorpus, OneLetterForbiddenWord, UnknownSymbol
from wordgf.gj import generating_function
from wordgf.language import Alphabet
from wordgf.oracle import OracleRequest, brute_force_series

AB = Alphabet(("a", "b"))
LOWER = Alphabet(tuple(string.ascii_lowercase))


def synthetic_q_corpus():
    tails = ("".join(p) for n in range(1, 5) for p in product("aeiost", repeat=n))
    words = ["qu" + next(tails) for _ in range(341)]
    return words + ["iraq"]


def test_two_word_counts():
    m = ingest_word_list(["ab", "b"], AB)
    assert m.transition["a", "b"] == 1
    assert m.transition["a", SEPARATOR] == 0
    assert m.transition["b", SEPARATOR] == 1
    assert m.initial == {"a": Fraction(1, 2), "b": Fraction(1, 2)}
    assert m.transition[SEPARATOR, SEPARATOR] == 0


def test_q_followed_by_u():
    m = ingest_word_list(synthetic_q_corpus(), LOWER)
    assert m.occurrences["q"] == 342
    assert m.transition["q", "u"] == Fraction(341, 342)
    assert m.transition["q", SEPARATOR] == Fraction(1, 342)
    assert format_probability(m.transition["q", "u"]) == "0.99708"


def test_single_word():
    m = ingest_word_list(["a"], AB)
    assert m.initial["a"] == 1 and m.transition["a", SEPARATOR] == 1
    assert m.row("b") == {}


def test_row_sums_and_order_independence():
    words = synthetic_q_corpus()[:60] + ["iraq", "tea", "seat"]
    m = ingest_word_list(words, LOWER)
    for a in m.letters:
        if m.occurrences.get(a):
            assert m.row_sum(a) == 1
    assert m.row_sum(SEPARATOR) == 1
    shuffled = words[:]
    random.Random(3).shuffle(shuffled)
    assert ingest_word_list(shuffled, LOWER).to_json() == m.to_json()


def test_ingest_errors():
    with pytest.raises(EmptyCorpus):
        ingest_word_list([], AB)
    with pytest.raises(UnknownSymbol) as info:
        ingest_word_list(["ab", "ac"], AB)
    assert info.value.line == 2
    with pytest.raises(DuplicateWord):
        ingest_word_list(["ab", "ab"], AB)


def test_read_corpus(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("ab\n\nb\nabc\nab\n", encoding="utf-8")
    with pytest.raises(UnknownSymbol) as info:
        read_corpus(path, AB)
    assert info.value.line == 4
    words, skipped = read_corpus(path, AB, skip_invalid=True)
    assert words == ["ab", "b"] and skipped == 2


def test_read_alphabet(tmp_path):
    (tmp_path / "a.json").write_text('["a", "b"]')
    (tmp_path / "a.txt").write_text("a b\nc\n")
    assert read_alphabet(tmp_path / "a.json").symbols == ("a", "b")
    assert read_alphabet(tmp_path / "a.txt").symbols == ("a", "b", "c")


def test_model_round_trip(tmp_path):
    m = ingest_word_list(["ab", "ba", "abb"], AB)
    m.save(tmp_path / "m.json")
    back = CharModel.load(tmp_path / "m.json")
    assert back.transition == m.transition and back.initial == m.initial
    assert back.alphabet == m.alphabet


def hand_model():
    F = Fraction
    transition = {("a", "a"): F(1, 2), ("a", "b"): F(1, 2), ("b", "a"): F(7, 10), ("b", "b"): F(3, 10)}
    return CharModel(AB, transition, {"a": F(3, 4), "b": F(1, 4)})


def test_hand_model_example():
    p = model_to_problem(hand_model(), [["b", "b", "b"], ["a", "b"]])
    assert series_in_t(generating_function(p), 4) == G.PROB_SERIES


def test_one_letter_forbidden_string():
    with pytest.raises(OneLetterForbiddenWord):
        model_to_problem(hand_model(), [["a"]])


def test_pipeline_against_oracle():
    m = ingest_word_list(["ab", "ba", "aab"], AB)
    p = model_to_problem(m, [[SEPARATOR, "a"]])
    series = series_in_t(generating_function(p), 8)
    assert series == brute_force_series(OracleRequest(p, 8))
    # starting with "a" is not affected, only entering "SP a" later is
    coeffs = [c.constant_value() for c in series]
    assert coeffs[1] == 1
    assert all(a >= b for a, b in zip(coeffs, coeffs[1:])) and coeffs[8] < coeffs[2]
