"""Brute-force series by enumerating every word up to a given length.

Nothing here knows about clusters, overlaps or transition weights: each word
is weighted directly from its letters and its occurrence count is tracked
incrementally as the word grows.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import Polynomial, S, SeriesPrefix, final, pair, single, triple
from .errors import CapExceeded
from .language import Word
from .problem import MarkPolicy, Problem, Variant

DEFAULT_CAP = 12


@dataclass(frozen=True)
class OracleRequest:
    problem: Problem
    max_length: int
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.max_length < 0:
            raise ValueError("max_length must be nonnegative")
        if self.max_length > self.cap:
            raise CapExceeded(f"max_length {self.max_length} exceeds the enumeration cap {self.cap}")


def word_factors(word: Word, variant: Variant) -> list:
    """Weight variables of a word (t excluded), with multiplicity."""
    n = len(word)
    if n == 0 or variant == Variant.BASIC:
        return []
    singles = [single(a) for a in word]
    pairs = [pair(a, b) for a, b in zip(word, word[1:])]
    triples = [triple(a, b, c) for a, b, c in zip(word, word[1:], word[2:])]
    if variant == Variant.SINGLE:
        return singles
    if variant == Variant.DOUBLE:
        return singles + pairs
    if variant == Variant.TRIPLE:
        return singles + pairs + triples
    if variant == Variant.PROB_DOUBLE:
        return [single(word[0])] + pairs
    if variant == Variant.PROB_TRIPLE:
        if n == 1:
            return [single(word[0])]
        return [pair(word[0], word[1])] + triples
    if variant == Variant.DOUBLE_IF:
        return [single(word[0])] + pairs + [final(word[-1])]
    raise ValueError(f"unknown variant {variant!r}")


def brute_force_series(request: OracleRequest) -> SeriesPrefix:
    problem = request.problem
    N = request.max_length
    letters = range(len(problem.alphabet))
    forbidden = list(problem.forbidden.words)
    counting = problem.mark == MarkPolicy.S_MINUS_ONE
    buckets = [Counter() for _ in range(N + 1)]

    def visit(word, hits):
        factors = word_factors(word, problem.variant)
        if counting and hits:
            factors = factors + [S] * hits
        buckets[len(word)][frozenset(Counter(factors).items())] += 1
        if len(word) == N:
            return
        for a in letters:
            w = word + (a,)
            new = sum(1 for v in forbidden if w[-len(v):] == v)
            if new and not counting:
                continue
            visit(w, hits + new)

    visit((), 0)
    coeffs = []
    for bucket in buckets:
        p = Polynomial.from_terms((dict(k), c) for k, c in bucket.items())
        if problem.bindings:
            p = p.substitute(problem.bindings).compact()
        coeffs.append(p)
    return SeriesPrefix(tuple(coeffs))


def first_mismatch(expected: SeriesPrefix, actual: SeriesPrefix) -> int | None:
    """Index of the first differing coefficient, or None."""
    for n, (a, b) in enumerate(zip(expected, actual)):
        if a != b:
            return n
    if len(expected) != len(actual):
        return min(len(expected), len(actual))
    return None
