"""Cluster-method engine for every weighting variant.

Each variant is described by a :class:`WeightModel`: the factor carried by
each letter, by each adjacent pair and triple, and the extra weights given
to the first letter(s) and the last letter of a word.  The engine solves the
cluster system (one unknown per forbidden word) and then, for context order
2 or 3, the system over words grouped by their first one or two letters.

Clusters remember their last one or two letters through End dummies; these
are replaced by the transition weight into whatever follows the cluster, or
by the final-letter weight when the cluster ends the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .algebra import (
    Polynomial,
    RationalFunction,
    Ring,
    S,
    T,
    VariableName,
    bareiss_solve,
    end_one,
    end_two,
    final,
    pair,
    single,
    triple,
)
from .algebra.variables import Role
from .language import Word, chop, overlaps
from .problem import MarkPolicy, Problem, Variant


@dataclass
class ClusterSystem:
    unknowns: list
    matrix: list
    rhs: list
    context_order: int


class WeightModel:
    """Per-letter, per-pair and per-triple factors of one problem.

    Numeric bindings are folded into the factors here, before any system is
    built, so solving never sees bound variables.
    """

    def __init__(self, problem: Problem, order: int | None = None):
        self.problem = problem
        self.variant = variant = problem.variant
        self.order = order or variant.order
        m = len(problem.alphabet)
        self.letters = range(m)
        bind = problem.bindings

        gens = {T}
        if problem.mark == MarkPolicy.S_MINUS_ONE and S not in bind:
            gens.add(S)
        roles = variant.weight_roles
        for role, arity, maker in (
            (Role.SINGLE, 1, single),
            (Role.PAIR, 2, pair),
            (Role.TRIPLE, 3, triple),
            (Role.FINAL, 1, final),
        ):
            if role in roles:
                gens.update(v for v in (maker(*k) for k in product(self.letters, repeat=arity)) if v not in bind)
        if self.order == 2:
            gens.update(end_one(a) for a in self.letters)
        elif self.order == 3:
            gens.update(end_two(a, b) for a in self.letters for b in self.letters)
        self.ring = ring = Ring(gens)

        def value(v):
            if v in bind:
                return Polynomial.constant(bind[v], ring)
            return Polynomial.variable(v, ring)

        one = Polynomial.constant(1, ring)
        self.one = one
        self.zero = Polynomial(ring, {})
        t = Polynomial.variable(T, ring)
        if problem.mark == MarkPolicy.S_MINUS_ONE:
            self.mark = value(S) - one
        else:
            self.mark = -one

        weighted_letters = variant in (Variant.SINGLE, Variant.DOUBLE, Variant.TRIPLE)
        self.letter = [t * value(single(a)) if weighted_letters else t for a in self.letters]
        pairs_used = variant in (Variant.DOUBLE, Variant.TRIPLE, Variant.PROB_DOUBLE, Variant.DOUBLE_IF)
        triples_used = variant in (Variant.TRIPLE, Variant.PROB_TRIPLE)
        self._pair = {
            (a, b): value(pair(a, b)) if pairs_used else one
            for a in self.letters for b in self.letters
        }
        self._triple = {
            k: value(triple(*k)) if triples_used else one
            for k in product(self.letters, repeat=3)
        }
        if variant in (Variant.PROB_DOUBLE, Variant.PROB_TRIPLE, Variant.DOUBLE_IF):
            self.init1 = [value(single(a)) for a in self.letters]
        else:
            self.init1 = [one] * m
        if variant == Variant.PROB_TRIPLE:
            self.init2 = {(a, b): value(pair(a, b)) for a in self.letters for b in self.letters}
        else:
            self.init2 = {(a, b): one for a in self.letters for b in self.letters}
        if variant == Variant.DOUBLE_IF:
            self.final = [value(final(a)) for a in self.letters]
        else:
            self.final = [one] * m
        if self.order < 2 and (pairs_used or triples_used):
            raise ValueError("pair or triple weights need a context order of at least 2")
        if self.order < 3 and triples_used:
            raise ValueError("triple weights need a context order of 3")

    def word_weight(self, w: Word) -> Polynomial:
        """Weight of a word's own letters, pairs and triples."""
        out = self.one
        for a in w:
            out = out * self.letter[a]
        for a, b in zip(w, w[1:]):
            out = out * self._pair[a, b]
        for k in zip(w, w[1:], w[2:]):
            out = out * self._triple[k]
        return out

    def link(self, left: Word, right: Word) -> Polynomial:
        """Transition weight gained when ``right`` is appended to ``left``;
        only the last two letters of left and first two of right matter."""
        a = right[0]
        out = self._pair[left[-1], a]
        if len(left) >= 2:
            out = out * self._triple[left[-2], left[-1], a]
        if len(right) >= 2:
            out = out * self._triple[left[-1], a, right[1]]
        return out

    def end_marker(self, v: Word) -> Polynomial:
        if self.order == 1:
            return self.one
        if self.order == 2:
            return Polynomial.variable(end_one(v[-1]), self.ring)
        return Polynomial.variable(end_two(v[-2], v[-1]), self.ring)

    def close_ends(self, following: Word | None):
        """Bindings for End dummies when a cluster is followed by a word
        starting with ``following`` (None: the cluster ends the word)."""
        if self.order == 2:
            tails = [(e,) for e in self.letters]
            make = end_one
        else:
            tails = [(e, f) for e in self.letters for f in self.letters]
            make = end_two
        if following is None:
            return {make(*tail): self.final[tail[-1]] for tail in tails}
        return {make(*tail): self.link(tail, following) for tail in tails}


class ClusterEngine:
    def __init__(self, problem: Problem, order: int | None = None):
        self.problem = problem
        self.model = WeightModel(problem, order)
        self.words = list(problem.forbidden.words)

    def cluster_system(self) -> ClusterSystem:
        model, words = self.model, self.words
        index = {v: i for i, v in enumerate(words)}
        n = len(words)
        matrix = [[model.zero] * n for _ in range(n)]
        rhs = []
        for i, v in enumerate(words):
            matrix[i][i] = model.one
            for u in words:
                for r in overlaps(v, u):
                    p = chop(v, r)
                    term = model.mark * model.word_weight(p) * model.link(p, u)
                    j = index[u]
                    matrix[i][j] = matrix[i][j] - term
            rhs.append(model.mark * model.word_weight(v) * model.end_marker(v))
        return ClusterSystem(words, matrix, rhs, model.order)

    @cached_property
    def _clusters(self) -> tuple[dict, Polynomial]:
        """Cluster weights as numerators over one common denominator."""
        if not self.words:
            return {}, self.model.one
        system = self.cluster_system()
        X, d = bareiss_solve(system.matrix, system.rhs)
        return dict(zip(self.words, X)), d

    def cluster_weights(self) -> dict:
        X, d = self._clusters
        return {v: RationalFunction(x.compact(), d.compact()) for v, x in X.items()}

    def generating_function(self) -> RationalFunction:
        order = self.model.order
        if order == 1:
            f = self._assemble_order1()
        elif order == 2:
            f = self._assemble_order2()
        else:
            f = self._assemble_order3()
        return RationalFunction(f.num.compact(), f.den.compact())

    def _assemble_order1(self) -> RationalFunction:
        model = self.model
        X, d = self._clusters
        letters = model.zero
        for a in model.letters:
            letters = letters + model.letter[a]
        total = model.zero
        for x in X.values():
            total = total + x
        return RationalFunction(d, d - d * letters - total)

    def _assemble_order2(self) -> RationalFunction:
        model = self.model
        X, d = self._clusters
        m = len(model.letters)
        by_first = {a: [x for v, x in X.items() if v[0] == a] for a in model.letters}
        after = {b: model.close_ends((b,)) for b in model.letters}
        at_end = model.close_ends(None)
        matrix, rhs = [], []
        for a in model.letters:
            row = []
            for b in model.letters:
                entry = -(d * model.letter[a] * model.link((a,), (b,)))
                for x in by_first[a]:
                    entry = entry - x.substitute(after[b])
                if a == b:
                    entry = entry + d
                row.append(entry)
            matrix.append(row)
            r = d * model.letter[a] * model.final[a]
            for x in by_first[a]:
                r = r + x.substitute(at_end)
            rhs.append(r)
        Y, d2 = bareiss_solve(matrix, rhs)
        num = d2
        for a in range(m):
            num = num + model.init1[a] * Y[a]
        return RationalFunction(num, d2)

    def _assemble_order3(self) -> RationalFunction:
        model = self.model
        X, d = self._clusters
        heads = [(a, b) for a in model.letters for b in model.letters]
        by_head = {h: [x for v, x in X.items() if v[:2] == h] for h in heads}
        after_pair = {h: model.close_ends(h) for h in heads}
        at_end = model.close_ends(None)
        matrix, rhs = [], []
        for a, b in heads:
            clusters = by_head[a, b]
            closed = {h: [x.substitute(after_pair[h]) for x in clusters] for h in heads}
            row = []
            for c, e in heads:
                entry = model.zero
                if c == b:
                    entry = -(d * model.letter[a] * model.link((a,), (b, e)))
                for x in closed[c, e]:
                    entry = entry - x
                if (a, b) == (c, e):
                    entry = entry + d
                row.append(entry)
            matrix.append(row)
            r = d * model.word_weight((a, b)) * model.final[b]
            for x in clusters:
                r = r + x.substitute(at_end)
                for c in model.letters:
                    tail = x.substitute(model.close_ends((c,)))
                    r = r + tail * model.letter[c] * model.final[c]
            rhs.append(r)
        Y, d2 = bareiss_solve(matrix, rhs)
        singles = model.zero
        for a in model.letters:
            singles = singles + model.init1[a] * model.letter[a] * model.final[a]
        num = d2 + d2 * singles
        for h, y in zip(heads, Y):
            num = num + model.init2[h] * y
        return RationalFunction(num, d2)


def cluster_weights(problem: Problem) -> dict:
    """Weight of the clusters starting with each forbidden word."""
    return ClusterEngine(problem).cluster_weights()


def generating_function(problem: Problem, order: int | None = None) -> RationalFunction:
    """Generating function of the problem by the cluster method.

    ``order`` overrides the context length implied by the variant; a larger
    order always gives the same function and is used for cross-checks.
    """
    return ClusterEngine(problem, order).generating_function()
