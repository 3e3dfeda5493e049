"""Character models estimated from a word list.

Text is modelled as a string over the letters plus a separator ``SP``
that stands between words.  Transition probabilities are pair counts divided
by the occurrence count of the first character, where a word-final
occurrence counts as being followed by ``SP``; the ``SP`` row is the
distribution of first letters.  All values are exact rationals.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .algebra import pair, single
from .errors import DuplicateWord, EmptyCorpus, UnknownSymbol, ValidationError
from .language import Alphabet, validate_or_reduce
from .problem import Problem, Variant

SEPARATOR = "SP"


@dataclass(frozen=True)
class CharModel:
    alphabet: Alphabet
    transition: dict
    initial: dict
    word_count: int = 0
    occurrences: dict = field(default_factory=dict)
    separator: str = SEPARATOR

    @property
    def letters(self) -> list[str]:
        return [s for s in self.alphabet.symbols if s != self.separator]

    def row(self, symbol: str) -> dict:
        return {b: p for (a, b), p in self.transition.items() if a == symbol}

    def row_sum(self, symbol: str) -> Fraction:
        return sum(self.row(symbol).values(), Fraction(0))

    def to_json(self) -> dict:
        rows = {}
        for (a, b), p in self.transition.items():
            rows.setdefault(a, {})[b] = _ratstr(p)
        return {
            "alphabet": list(self.alphabet.symbols),
            "separator": self.separator,
            "initial": {a: _ratstr(p) for a, p in self.initial.items()},
            "transition": rows,
            "counts": {"words": self.word_count, "occurrences": dict(self.occurrences)},
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharModel":
        try:
            alphabet = Alphabet(tuple(data["alphabet"]))
            separator = data.get("separator", SEPARATOR)
            initial = {a: Fraction(p) for a, p in data["initial"].items()}
            transition = {
                (a, b): Fraction(p)
                for a, row in data["transition"].items()
                for b, p in row.items()
            }
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed model document: {exc}") from None
        counts = data.get("counts", {})
        for a, b in transition:
            alphabet.index(a)
            alphabet.index(b)
        for a in initial:
            alphabet.index(a)
        return cls(alphabet, transition, initial, counts.get("words", 0),
                   dict(counts.get("occurrences", {})), separator)

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path) -> "CharModel":
        return cls.from_json(json.loads(Path(path).read_text(encoding="utf-8")))


def _ratstr(p: Fraction) -> str:
    return str(p.numerator) if p.denominator == 1 else f"{p.numerator}/{p.denominator}"


def format_probability(p: Fraction, digits: int = 5) -> str:
    """Decimal rendering with ``digits`` significant figures."""
    if p == 0:
        return "0.0"
    d = Context(prec=digits).divide(Decimal(p.numerator), Decimal(p.denominator))
    return format(d, "f")


def ingest_word_list(words: Iterable, alphabet: Alphabet, separator: str = SEPARATOR) -> CharModel:
    """Exact initial and transition probabilities of a list of distinct words."""
    if separator in alphabet.symbols:
        raise ValidationError(f"the separator {separator!r} cannot also be a letter")
    known = set(alphabet.symbols)
    seen = set()
    occ, pairs, ends, starts = Counter(), Counter(), Counter(), Counter()
    for lineno, word in enumerate(words, start=1):
        toks = tuple(word)
        if not toks:
            raise ValidationError(f"word {lineno} is empty")
        for tok in toks:
            if tok not in known:
                raise UnknownSymbol(f"symbol {tok!r} is not in the alphabet", line=lineno)
        if toks in seen:
            raise DuplicateWord(f"word {''.join(toks)!r} appears more than once (word {lineno})")
        seen.add(toks)
        occ.update(toks)
        pairs.update(zip(toks, toks[1:]))
        ends[toks[-1]] += 1
        starts[toks[0]] += 1
    n = len(seen)
    if n == 0:
        raise EmptyCorpus("the corpus contains no words")

    symbols = tuple(alphabet.symbols) + (separator,)
    transition = {}
    for a in alphabet.symbols:
        if not occ[a]:
            continue
        for b in alphabet.symbols:
            transition[a, b] = Fraction(pairs[a, b], occ[a])
        transition[a, separator] = Fraction(ends[a], occ[a])
    initial = {a: Fraction(starts[a], n) for a in alphabet.symbols}
    for a in alphabet.symbols:
        transition[separator, a] = initial[a]
    transition[separator, separator] = Fraction(0)
    return CharModel(Alphabet(symbols), transition, initial, n, dict(occ), separator)


def read_corpus(path, alphabet: Alphabet, skip_invalid: bool = False) -> tuple[list, int]:
    """Words of a one-word-per-line UTF-8 file and the number of skipped lines.

    Every character of a line must be an alphabet symbol; blank lines are
    ignored.
    """
    known = set(alphabet.symbols)
    words, seen, skipped = [], set(), 0
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            word = line.strip()
            if not word:
                continue
            bad = next((ch for ch in word if ch not in known), None)
            problem = None
            if bad is not None:
                problem = UnknownSymbol(f"symbol {bad!r} is not in the alphabet", line=lineno)
            elif word in seen:
                problem = DuplicateWord(f"line {lineno}: duplicate word {word!r}")
            if problem is not None:
                if skip_invalid:
                    skipped += 1
                    continue
                raise problem
            seen.add(word)
            words.append(word)
    return words, skipped


def read_alphabet(path) -> Alphabet:
    """Alphabet file: a JSON array of symbols, or whitespace-separated symbols."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.strip()
    if stripped.startswith("["):
        symbols = json.loads(stripped)
    else:
        symbols = stripped.split()
    return Alphabet(tuple(symbols))


def model_to_problem(model: CharModel, forbidden_strings: Sequence[Sequence[str]], auto_reduce: bool = False) -> Problem:
    """Pair-weighted Markov problem whose weights are the model's
    probabilities; strings starting with the separator get weight 0."""
    alphabet = model.alphabet
    forbidden = validate_or_reduce([alphabet.word(s) for s in forbidden_strings], alphabet, auto_reduce)
    bindings = {}
    for i, a in enumerate(alphabet.symbols):
        bindings[single(i)] = model.initial.get(a, Fraction(0))
        for j, b in enumerate(alphabet.symbols):
            bindings[pair(i, j)] = model.transition.get((a, b), Fraction(0))
    return Problem(alphabet, forbidden, Variant.PROB_DOUBLE, bindings=bindings)
