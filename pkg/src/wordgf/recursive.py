"""Prefix-constraint recursion, an independent route to the same functions.

A state ``(a, P)`` stands for the allowed words that start with letter ``a``
and do not start with any word in ``P``.  Peeling the first letter off such a
word leaves either nothing or a word in some successor state ``(b, Q)``;
taking weights turns these correspondences into one linear equation per
live state.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .algebra import Polynomial, RationalFunction, Ring, T, bareiss_solve, pair, single
from .errors import UnsupportedVariant
from .language import Alphabet, ForbiddenSet, Word
from .problem import MarkPolicy, Problem, Variant

SUPPORTED = (Variant.SINGLE, Variant.DOUBLE, Variant.PROB_DOUBLE)


@dataclass(frozen=True, order=True)
class PrefixState:
    first_letter: int
    banned_prefixes: frozenset = frozenset()

    @property
    def dead(self) -> bool:
        return (self.first_letter,) in self.banned_prefixes

    def describe(self, alphabet: Alphabet) -> str:
        banned = ", ".join(sorted(alphabet.show(w) for w in self.banned_prefixes))
        return f"[{alphabet.symbols[self.first_letter]}, {{{banned}}}]"


@dataclass
class StateGraph:
    alphabet: Alphabet
    states: list
    roots: list
    edges: dict = field(default_factory=dict)

    @property
    def dead(self) -> set:
        return {s for s in self.states if s.dead}

    @property
    def live(self) -> list:
        return [s for s in self.states if not s.dead]

    def to_json(self) -> dict:
        ids = {s: i for i, s in enumerate(self.states)}
        sym = self.alphabet.symbols
        return {
            "states": [
                {
                    "id": ids[s],
                    "letter": sym[s.first_letter],
                    "banned": sorted(self.alphabet.spell(w) for w in s.banned_prefixes),
                    "dead": s.dead,
                }
                for s in self.states
            ],
            "root": [ids[s] for s in self.roots],
            "edges": [
                [ids[s], sym[b], ids[target]]
                for s in self.states if not s.dead
                for b, target in sorted(self.edges[s].items())
            ],
        }


def _minimize(words: set) -> frozenset:
    return frozenset(
        w for w in words
        if not any(len(u) < len(w) and w[:len(u)] == u for u in words)
    )


def successor(state: PrefixState, b: int, forbidden: ForbiddenSet, minimize: bool = True) -> PrefixState:
    a = state.first_letter
    banned = set()
    for v in forbidden.words:
        if v[0] == a and v[1] == b:
            banned.add(v[1:])
    for p in state.banned_prefixes:
        if len(p) >= 2 and p[0] == a and p[1] == b:
            banned.add(p[1:])
    return PrefixState(b, _minimize(banned) if minimize else frozenset(banned))


def build_state_graph(alphabet: Alphabet, forbidden: ForbiddenSet, minimize: bool = True) -> StateGraph:
    roots = [PrefixState(a) for a in alphabet.letters]
    seen = {}
    queue = deque()
    for s in roots:
        if s not in seen:
            seen[s] = len(seen)
            queue.append(s)
    edges = {}
    while queue:
        s = queue.popleft()
        if s.dead:
            continue
        out = {}
        for b in alphabet.letters:
            nxt = successor(s, b, forbidden, minimize)
            out[b] = nxt
            if nxt not in seen:
                seen[nxt] = len(seen)
                queue.append(nxt)
        edges[s] = out
    return StateGraph(alphabet, list(seen), roots, edges)


class RecursiveEngine:
    def __init__(self, problem: Problem, minimize: bool = True):
        if problem.variant not in SUPPORTED:
            raise UnsupportedVariant(
                f"the recursive method covers single, double and prob_double, not {problem.variant.value}"
            )
        if problem.mark != MarkPolicy.NEGATIVE_ONE:
            raise UnsupportedVariant("the recursive method only counts avoiding words")
        self.problem = problem
        self.graph = build_state_graph(problem.alphabet, problem.forbidden, minimize)
        self._setup_weights()

    def _setup_weights(self):
        problem = self.problem
        bind = problem.bindings
        letters = problem.alphabet.letters
        gens = {T}
        gens.update(v for v in (single(a) for a in letters) if v not in bind)
        if problem.variant != Variant.SINGLE:
            gens.update(v for v in (pair(a, b) for a in letters for b in letters) if v not in bind)
        ring = self.ring = Ring(gens)

        def value(v):
            return Polynomial.constant(bind[v], ring) if v in bind else Polynomial.variable(v, ring)

        t = Polynomial.variable(T, ring)
        variant = problem.variant
        if variant == Variant.PROB_DOUBLE:
            self.standalone = {a: t for a in letters}
            self.initial = {a: value(single(a)) for a in letters}
        else:
            self.standalone = {a: t * value(single(a)) for a in letters}
            self.initial = {a: Polynomial.constant(1, ring) for a in letters}
        if variant == Variant.SINGLE:
            self.child = {(a, b): self.standalone[a] for a in letters for b in letters}
        else:
            self.child = {(a, b): self.standalone[a] * value(pair(a, b)) for a in letters for b in letters}

    def state_weights(self) -> dict:
        """Weight of every state's word set; dead states weigh 0."""
        graph = self.graph
        live = graph.live
        index = {s: i for i, s in enumerate(live)}
        zero = Polynomial(self.ring, {})
        one = Polynomial.constant(1, self.ring)
        n = len(live)
        matrix = [[zero] * n for _ in range(n)]
        rhs = []
        for i, s in enumerate(live):
            a = s.first_letter
            matrix[i][i] = one
            for b, nxt in graph.edges[s].items():
                if nxt.dead:
                    continue
                j = index[nxt]
                matrix[i][j] = matrix[i][j] - self.child[a, b]
            rhs.append(self.standalone[a])
        X, d = bareiss_solve(matrix, rhs)
        out = {s: RationalFunction(0) for s in graph.dead}
        for s, x in zip(live, X):
            out[s] = RationalFunction(x.compact(), d.compact())
        self._solution = (dict(zip(live, X)), d)
        return out

    def generating_function(self) -> RationalFunction:
        if not hasattr(self, "_solution"):
            self.state_weights()
        X, d = self._solution
        num = d
        for s in self.graph.roots:
            if s in X:
                num = num + self.initial[s.first_letter] * X[s]
        return RationalFunction(num.compact(), d.compact())


def recursive_gf(problem: Problem) -> RationalFunction:
    return RecursiveEngine(problem).generating_function()


def state_weights(problem: Problem) -> dict:
    return RecursiveEngine(problem).state_weights()
