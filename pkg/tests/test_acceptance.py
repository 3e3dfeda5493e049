"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (also repeated in the pytest
terminal summary).  Run on its own with::

    pytest tests/test_acceptance.py -v -s
    python tests/test_acceptance.py
"""

from __future__ import annotations

import random
import sys
import time
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import _golden as G  # noqa: E402
from _support import (  # noqa: E402
    LETTERS,
    example1,
    make_problem,
    prob_example,
    random_problem,
    random_words,
    rf,
)
from wordgf.algebra import S, pair, ratfun_eq, series_in_t, single, substitute, triple  # noqa: E402
from wordgf.corpus import SEPARATOR, ingest_word_list, model_to_problem  # noqa: E402
from wordgf.gj import cluster_weights, generating_function  # noqa: E402
from wordgf.language import Alphabet  # noqa: E402
from wordgf.oracle import OracleRequest, brute_force_series, first_mismatch  # noqa: E402
from wordgf.problem import MarkPolicy, Variant  # noqa: E402
from wordgf.recursive import PrefixState, RecursiveEngine  # noqa: E402

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def report(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def test_criterion_01_single_golden():
    t0 = time.perf_counter()
    f = generating_function(example1())
    series = series_in_t(f, 4)
    elapsed = time.perf_counter() - t0
    ok = ratfun_eq(f, G.EX1_GF) and series == G.EX1_SERIES and elapsed < 1.0
    report(1, "single-weight generating function and series to t^4", ok, f"{elapsed:.3f}s < 1s")


def test_criterion_02_cluster_internals():
    C = cluster_weights(example1())
    ok = ratfun_eq(C[0, 1, 1], G.EX1_C_ABB) and ratfun_eq(C[1, 0], G.EX1_C_BA)
    report(2, "cluster weights C[abb] and C[ba]", ok)


def test_criterion_03_double_series():
    series = series_in_t(generating_function(example1(Variant.DOUBLE)), 5)
    matched = sum(a == b for a, b in zip(series, G.DOUBLE_SERIES))
    report(3, "pair-weight series to t^5", matched == 6, f"{matched}/6 coefficients")


def test_criterion_04_prob_double():
    f = generating_function(prob_example())
    ok = ratfun_eq(f, G.PROB_GF) and series_in_t(f, 4) == G.PROB_SERIES
    report(4, "Markov-weighted generating function and series", ok)


def test_criterion_05_occurrence_marking():
    p = example1(mark=MarkPolicy.S_MINUS_ONE, bindings={single(0): 1, single(1): 1})
    f = generating_function(p)
    t4 = series_in_t(f, 4)[4] == G.MARKED_T4
    at_one = series_in_t(substitute(f, {S: 1}), 8)
    ok = t4 and at_one == [2**n for n in range(9)]
    report(5, "t^4 coefficient 3+10s+3s^2 and 2^n at s=1", ok)


def test_criterion_06_recursive_golden():
    engine = RecursiveEngine(example1())
    weights = engine.state_weights()
    ok = (
        ratfun_eq(engine.generating_function(), G.EX1_GF)
        and ratfun_eq(weights[PrefixState(1)], G.EX1_STATE_B)
        and ratfun_eq(weights[PrefixState(0)], G.EX1_STATE_A)
    )
    report(6, "recursive engine function and per-state weights", ok)


def test_criterion_07_oracle_equivalence():
    rng = random.Random(20261014)
    combos = [(v, m) for v in Variant for m in MarkPolicy]
    t0 = time.perf_counter()
    failures = []
    for i in range(200):
        variant, mark = combos[i % len(combos)]
        p = random_problem(rng, variant, mark)
        got = series_in_t(generating_function(p), 8)
        expected = brute_force_series(OracleRequest(p, 8))
        k = first_mismatch(expected, got)
        if k is not None:
            failures.append((variant.value, mark.value, [p.alphabet.show(w) for w in p.forbidden], k))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    detail = f"{200 - len(failures)}/200 exact, {elapsed:.1f}s < 300s"
    if failures:
        detail += f", first failure {failures[0]}"
    report(7, "oracle equivalence to t^8 on 200 random problems", ok, detail)


def test_criterion_08_cross_method():
    rng = random.Random(8)
    variants = [Variant.SINGLE, Variant.DOUBLE, Variant.PROB_DOUBLE]
    agree = 0
    for i in range(100):
        p = random_problem(rng, variants[i % 3], MarkPolicy.NEGATIVE_ONE)
        agree += ratfun_eq(RecursiveEngine(p).generating_function(), generating_function(p))
    report(8, "cluster and recursive engines agree on 100 random problems", agree == 100, f"{agree}/100")


def test_criterion_09_specialization():
    rng = random.Random(9)
    agree = 0
    ones = lambda names: {n: 1 for n in names}  # noqa: E731
    for _ in range(50):
        m = rng.randint(1, 3)
        letters = range(m)
        unit_triples = ones(triple(*k) for k in product(letters, repeat=3))
        p = make_problem(LETTERS[:m], random_words(rng, m), Variant.TRIPLE, auto_reduce=True)
        f = {v: generating_function(p.with_(variant=v)) for v in (Variant.DOUBLE, Variant.SINGLE, Variant.BASIC)}
        if m < 3:
            collapsed = substitute(generating_function(p), unit_triples)
        else:
            # symbolic three-letter triple functions run to tens of thousands of
            # terms; fold the unit triple weights in before solving instead
            collapsed = generating_function(p.with_(bindings=unit_triples))
        agree += (
            ratfun_eq(collapsed, f[Variant.DOUBLE])
            and ratfun_eq(substitute(f[Variant.DOUBLE], ones(pair(a, b) for a in letters for b in letters)), f[Variant.SINGLE])
            and ratfun_eq(substitute(f[Variant.SINGLE], ones(single(a) for a in letters)), f[Variant.BASIC])
        )
    report(9, "triple to double to single to basic under unit substitutions", agree == 50, f"{agree}/50")


def test_criterion_10_corpus_invariants():
    rng = random.Random(10)
    good = 0
    for _ in range(20):
        m = rng.randint(1, 2)
        alphabet = Alphabet(tuple(LETTERS[:m]))
        words = sorted({"".join(rng.choice(LETTERS[:m]) for _ in range(rng.randint(1, 5))) for _ in range(rng.randint(1, 8))})
        model = ingest_word_list(words, alphabet)
        rows = all(model.row_sum(a) == 1 for a in model.alphabet.symbols if a == SEPARATOR or model.occurrences.get(a))
        symbols = list(model.alphabet.symbols)
        forbidden = [[rng.choice(symbols) for _ in range(rng.randint(2, 3))] for _ in range(rng.randint(1, 2))]
        p = model_to_problem(model, forbidden, auto_reduce=True)
        pipeline = series_in_t(generating_function(p), 8) == brute_force_series(OracleRequest(p, 8))
        good += rows and model.transition[SEPARATOR, SEPARATOR] == 0 and pipeline
    report(10, "corpus row sums, SP->SP = 0, ingest->avoid pipeline matches oracle to t^8", good == 20, f"{good}/20")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
