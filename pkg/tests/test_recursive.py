import random

import pytest

import _golden as G
from _support import LETTERS, example1, make_problem, prob_example, random_words, rf, t, x
from wordgf.algebra import ratfun_eq, series_in_t
from wordgf.errors import UnsupportedVariant
from wordgf.gj import generating_function
from wordgf.oracle import OracleRequest, brute_force_series
from wordgf.problem import MarkPolicy, Variant
from wordgf.recursive import PrefixState, RecursiveEngine, build_state_graph, recursive_gf, state_weights

xa, xb = x("a"), x("b")


def described(graph):
    return {s.describe(graph.alphabet): s.dead for s in graph.states}


def test_example1_states():
    p = example1()
    graph = build_state_graph(p.alphabet, p.forbidden)
    states = described(graph)
    assert states == {"[a, {}]": False, "[b, {}]": False, "[b, {bb}]": False, "[a, {a}]": True, "[b, {b}]": True}
    assert [s.describe(p.alphabet) for s in graph.roots] == ["[a, {}]", "[b, {}]"]


def test_example1_state_weights():
    weights = state_weights(example1())
    a0, b0 = PrefixState(0), PrefixState(1)
    assert ratfun_eq(weights[a0], G.EX1_STATE_A)
    assert ratfun_eq(weights[b0], G.EX1_STATE_B)
    assert ratfun_eq(rf(1) + weights[a0] + weights[b0], G.EX1_GF)
    assert ratfun_eq(recursive_gf(example1()), G.EX1_GF)


def test_empty_forbidden_graph():
    p = make_problem("ab", [])
    graph = build_state_graph(p.alphabet, p.forbidden)
    assert graph.states == [PrefixState(0), PrefixState(1)]
    assert not graph.dead
    assert ratfun_eq(recursive_gf(p), rf(1, 1 - t * (xa + xb)))


def test_single_letter_aa():
    p = make_problem("a", ["aa"])
    graph = build_state_graph(p.alphabet, p.forbidden)
    assert described(graph) == {"[a, {}]": False, "[a, {a}]": True}
    assert series_in_t(recursive_gf(p), 4) == [1, xa, 0, 0, 0]


def test_prob_double_example_cross_method():
    assert ratfun_eq(recursive_gf(prob_example()), G.PROB_GF)


@pytest.mark.parametrize("variant", [Variant.BASIC, Variant.TRIPLE, Variant.PROB_TRIPLE, Variant.DOUBLE_IF])
def test_unsupported_variants(variant):
    with pytest.raises(UnsupportedVariant):
        RecursiveEngine(example1(variant))


def test_marking_unsupported():
    with pytest.raises(UnsupportedVariant):
        RecursiveEngine(example1(mark=MarkPolicy.S_MINUS_ONE))


def test_state_graph_json():
    p = example1()
    doc = build_state_graph(p.alphabet, p.forbidden).to_json()
    assert doc["root"] == [0, 1]
    assert {"id": 2, "letter": "b", "banned": [["b", "b"]], "dead": False} in doc["states"]
    assert all(len(e) == 3 for e in doc["edges"])


def _bound(p):
    chops = {v[i:] for v in p.forbidden.words for i in range(1, len(v))}
    return len(p.alphabet) * 2 ** len(chops)


def test_minimization_and_bounds():
    rng = random.Random(5)
    for _ in range(40):
        m = rng.randint(1, 3)
        variant = rng.choice([Variant.SINGLE, Variant.DOUBLE, Variant.PROB_DOUBLE])
        p = make_problem(LETTERS[:m], random_words(rng, m), variant, auto_reduce=True)
        small = RecursiveEngine(p)
        large = RecursiveEngine(p, minimize=False)
        assert len(small.graph.states) <= len(large.graph.states) <= _bound(p)
        assert ratfun_eq(small.generating_function(), large.generating_function())
        f = small.generating_function()
        assert series_in_t(f, 6) == brute_force_series(OracleRequest(p, 6))
        assert ratfun_eq(f, generating_function(p))
