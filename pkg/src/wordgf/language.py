"""Alphabets, words, forbidden sets and overlap combinatorics.

A word is a tuple of alphabet indices.  Symbols themselves are arbitrary
non-empty tokens, so a 27-symbol alphabet with a ``"SP"`` separator needs
no special treatment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotASuffix, NotReduced, OneLetterForbiddenWord, UnknownLetter, ValidationError

Word = tuple


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ValidationError("alphabet must contain at least one symbol")
        for s in symbols:
            if not isinstance(s, str) or not s:
                raise ValidationError(f"alphabet symbols must be non-empty strings, got {s!r}")
        if len(set(symbols)) != len(symbols):
            dup = next(s for s in symbols if symbols.count(s) > 1)
            raise ValidationError(f"duplicate alphabet symbol {dup!r}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def letters(self) -> range:
        return range(len(self.symbols))

    def index(self, symbol: str) -> int:
        try:
            return self.symbols.index(symbol)
        except ValueError:
            raise UnknownLetter(f"unknown letter {symbol!r}") from None

    def word(self, tokens: Iterable[str]) -> Word:
        """Word from a sequence of symbol tokens (or a plain string of
        one-character symbols)."""
        return tuple(self.index(tok) for tok in tokens)

    def spell(self, word: Word) -> list[str]:
        return [self.symbols[i] for i in word]

    def show(self, word: Word) -> str:
        if all(len(s) == 1 for s in self.symbols):
            return "".join(self.spell(word))
        return " ".join(self.spell(word))


@dataclass(frozen=True)
class ForbiddenSet:
    """A reduced set of forbidden factors, each of length at least 2."""

    words: tuple
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))
        _check(self.words, self.alphabet)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def starting_with(self, prefix: Word) -> list[Word]:
        k = len(prefix)
        return [w for w in self.words if w[:k] == tuple(prefix)]


def _check_letters(word, alphabet):
    for i in word:
        if not isinstance(i, int) or not 0 <= i < len(alphabet):
            raise UnknownLetter(f"letter index {i!r} is not in the alphabet")


def _check(words, alphabet):
    for w in words:
        _check_letters(w, alphabet)
        if len(w) < 2:
            raise OneLetterForbiddenWord(
                f"forbidden word {alphabet.show(w)!r} has length {len(w)}; "
                "remove that letter from the alphabet instead"
            )
    for i, v in enumerate(words):
        for j, u in enumerate(words):
            if i != j and is_factor(v, u):
                raise NotReduced(
                    f"forbidden word {alphabet.show(v)!r} is a factor of {alphabet.show(u)!r}"
                )


def is_factor(v: Word, w: Word) -> bool:
    """True iff v occurs as a contiguous block of w."""
    k = len(v)
    return any(w[i:i + k] == v for i in range(len(w) - k + 1))


def validate_or_reduce(candidates: Iterable[Sequence[int]], alphabet: Alphabet, auto_reduce: bool = False) -> ForbiddenSet:
    words = [tuple(w) for w in candidates]
    for w in words:
        _check_letters(w, alphabet)
        if len(w) < 2:
            raise OneLetterForbiddenWord(
                f"forbidden word {alphabet.show(w)!r} has length {len(w)}; "
                "remove that letter from the alphabet instead"
            )
    if auto_reduce:
        unique = list(dict.fromkeys(words))
        words = [
            w for w in unique
            if not any(u != w and is_factor(u, w) for u in unique)
        ]
    return ForbiddenSet(tuple(words), alphabet)


def overlaps(v: Word, u: Word) -> list[Word]:
    """Proper suffixes of v that are prefixes of u, shortest first."""
    out = []
    for k in range(1, min(len(v) - 1, len(u)) + 1):
        r = v[len(v) - k:]
        if u[:k] == r:
            out.append(r)
    return out


def chop(v: Word, r: Word) -> Word:
    """v with its suffix r removed."""
    k = len(r)
    if k >= len(v) or tuple(v[len(v) - k:]) != tuple(r):
        raise NotASuffix(f"{r!r} is not a proper suffix of {v!r}")
    return tuple(v[:len(v) - k])


def count_occurrences(w: Word, forbidden: Iterable[Word]) -> int:
    """Number of (position, forbidden word) occurrences in w, overlaps included."""
    w = tuple(w)
    total = 0
    for v in forbidden:
        k = len(v)
        total += sum(1 for i in range(len(w) - k + 1) if w[i:i + k] == v)
    return total
