import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ddcalc.combinat import (
    IndexedForest,
    Permutation,
    all_permutations,
    compatible_sequences,
    forest_from_code,
    forests_of_size,
    longest,
    reduced_words,
    trimming_sequences,
    winc_bar,
    winc_words,
    word_to_forest,
)
from ddcalc.families import (
    ArityMismatch,
    BoundExceeded,
    Expansion,
    forest_polynomial,
    forest_slide_expansion,
    monomial_to_slide,
    pipe_dream_polynomial,
    pipe_dreams,
    schubert,
    schubert_slide_expansion,
    schubert_via_staircase,
    slide,
    slide_expand,
    slide_product_expand,
    slide_via_creators,
    trace_pipes,
)
from ddcalc.operators import INF, bs_map, forest_creator, schubert_creator
from ddcalc.polyring import ONE, ZERO, Polynomial, parse, x

W = Permutation((1, 4, 2, 5, 3))
S_W = parse("x1*x2*x4 + x1^2*x4 + x1^2*x3 + x2^2*x4 + x1*x2^2 + x1*x2*x3 + x2^2*x3 + x1^2*x2")
S_21534 = parse("x1*x3^2 + x1*x2*x3 + x1^2*x3 + x1*x2^2 + x1^2*x2 + x1^3")


def word_sum(words, creator):
    total = ZERO
    for word in words:
        f = ONE
        for i in word:
            f = creator(i, f)
        total = total + f
    return total


# -- Schubert -------------------------------------------------------------

def test_schubert_golden():
    assert schubert(W) == S_W
    assert len(S_W) == 8
    assert schubert(Permutation()) == ONE
    assert schubert(Permutation((3, 2, 1))) == x(1) ** 2 * x(2)


def test_schubert_of_21534():
    assert schubert(Permutation((2, 1, 5, 3, 4))) == S_21534


def test_staircase_examples():
    assert schubert_via_staircase(W) == S_W
    assert schubert_via_staircase(longest(4)) == x(1) ** 3 * x(2) ** 2 * x(3)
    assert schubert_via_staircase(Permutation((2, 1))) == x(1)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_schubert_recursion_equals_reduced_word_sum(n):
    for w in all_permutations(n):
        s = schubert(w)
        assert s == word_sum(reduced_words(w), schubert_creator)
        assert s == schubert_via_staircase(w)
        assert s.is_homogeneous() and (not s or s.degree() == w.length())
        assert all(c > 0 for _, c in s.items())


# -- forests --------------------------------------------------------------

def test_forest_golden():
    assert forest_polynomial(forest_from_code((0, 2, 0, 1))) == S_W
    three_node = word_to_forest((1, 1, 3))
    assert forest_polynomial(three_node) == x(1) ** 2 * x(2) + x(1) ** 2 * x(3)
    assert forest_polynomial(IndexedForest(())) == ONE
    assert forest_polynomial(forest_from_code((0, 0, 1)), 1) == x(1) + x(2) + x(3)


def test_forest_arity_mismatch():
    with pytest.raises(ArityMismatch):
        forest_polynomial(forest_from_code((1,), m=2), 1)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_forest_recursion_equals_trimming_sum(m):
    for k in range(4):
        for F in forests_of_size(k, m, max_index=3):
            p = forest_polynomial(F)
            assert p == word_sum(trimming_sequences(F), lambda i, f: forest_creator(i, m, f))
            assert p.is_homogeneous() and p.degree() == k
            assert all(c > 0 for _, c in p.items())


def test_forest_recursion_identity():
    for k in range(5):
        for F in forests_of_size(k, 1, max_index=4):
            rhs = bs_map(1, 1, forest_polynomial(F))
            for i in F.qdes():
                rhs = rhs + x(i) * forest_polynomial(F.trim(i))
            assert rhs == forest_polynomial(F)


# -- slides ---------------------------------------------------------------

def test_slide_golden():
    assert slide((1, 4, 3)) == x(1) * x(2) ** 2 + x(1) * x(2) * x(3) + x(1) * x(3) ** 2
    assert slide((), 2) == ONE and slide((), INF) == ONE
    assert slide((1, 2), INF) == x(1) * x(2)
    assert slide((2, 1), INF) == ZERO


@pytest.mark.parametrize("m", [1, 2, 3, INF])
def test_slide_equals_creator_route(m):
    for a in (w for k in range(4) for w in product(range(1, 5), repeat=k)):
        assert slide_via_creators(a, m) == slide(a, m)


def test_slide_of_word_equals_slide_of_bar():
    for a in (w for k in range(5) for w in product(range(1, 5), repeat=k)):
        bar = winc_bar(a)
        assert slide(a) == (ZERO if bar is None else slide(bar))


# -- pipe dreams ----------------------------------------------------------

def test_pipe_dream_examples():
    dreams = pipe_dreams(W)
    assert len(dreams) == 8
    assert pipe_dream_polynomial(W) == S_W
    assert [d.crosses for d in pipe_dreams(Permutation())] == [frozenset()]
    assert [d.crosses for d in pipe_dreams(Permutation((2, 1)))] == [frozenset({(1, 1)})]
    assert pipe_dream_polynomial(Permutation()) == ONE
    assert pipe_dream_polynomial(Permutation((2, 1))) == x(1)


def test_tracer_detects_double_crossing():
    # both crosses sit on antidiagonal 2, so the same pair of pipes meets twice
    exits, reduced = trace_pipes(3, {(1, 2), (2, 1)})
    assert not reduced
    exits, reduced = trace_pipes(3, {(1, 1), (2, 1)})
    assert reduced and exits == (2, 3, 1)
    exits, reduced = trace_pipes(2, {(1, 1)})
    assert reduced and exits == (2, 1)


def test_render():
    (d,) = pipe_dreams(Permutation((2, 1)))
    assert d.render() == "+.\n."


@pytest.mark.parametrize("n", [3, 4, 5])
def test_word_construction_matches_brute_force(n):
    for w in all_permutations(n):
        brute = pipe_dreams(w, method="brute")
        words = pipe_dreams(w, method="words")
        assert [d.crosses for d in brute] == [d.crosses for d in words]


def test_triple_agreement_s4_and_random_s5():
    rng = random.Random(20240611)
    perms = list(all_permutations(4)) + rng.sample(list(all_permutations(5)), 50)
    for w in perms:
        for d in pipe_dreams(w):
            exits, reduced = trace_pipes(d.n, d.crosses)
            assert reduced and exits == w.extended(d.n) and len(d.crosses) == w.length()
        s = schubert(w)
        assert s == schubert_via_staircase(w) == pipe_dream_polynomial(w)
        assert schubert_slide_expansion(w).evaluate() == s


def test_pipe_dreams_on_s7_use_fast_path():
    w = Permutation((1, 3, 2, 7, 4, 6, 5))
    assert pipe_dream_polynomial(w) == schubert(w)


def test_staircase_bound(monkeypatch):
    w = Permutation((1, 2, 3, 4, 5, 7, 6))
    with pytest.raises(BoundExceeded):
        pipe_dreams(w, bound=6)
    monkeypatch.setenv("DDCALC_MAX_STAIRCASE", "6")
    with pytest.raises(BoundExceeded):
        pipe_dreams(w)
    monkeypatch.setenv("DDCALC_MAX_STAIRCASE", "7")
    assert len(pipe_dreams(w)) == len(schubert(w))


# -- expansions -----------------------------------------------------------

def test_slide_expand_golden():
    exp = slide_expand(S_21534, 1)
    assert exp == {(1, 3, 3): 1, (1, 1, 3): 1, (1, 1, 1): 1}
    assert slide_expand(S_21534, INF).coeffs[(1, 2, 2)] == 1
    assert slide_expand(ZERO).coeffs == {}


def test_slide_expand_of_a_slide_is_an_indicator():
    for a in winc_words(4, 3):
        for m in (1, 2, INF):
            assert slide_expand(slide(a, m), m) == {a: 1}


def test_bjs_expansions():
    assert schubert_slide_expansion(W) == {(2, 2, 4): 1, (1, 2, 2): 1}
    assert schubert_slide_expansion(Permutation((2, 1, 5, 3, 4))) == {(1, 3, 3): 1, (1, 1, 3): 1, (1, 1, 1): 1}
    assert forest_slide_expansion(IndexedForest((), 2)) == {(): 1}
    for m in (1, 2):
        for k in range(4):
            for F in forests_of_size(k, m, max_index=3):
                assert forest_slide_expansion(F).evaluate() == forest_polynomial(F)


def test_monomial_to_slide():
    exp = monomial_to_slide((2, 4, 4))
    assert exp == {(2, 4, 4): 1, (1, 4, 4): -1, (2, 3, 4): -1, (1, 3, 4): 1, (2, 3, 3): -1, (1, 3, 3): 1}
    assert exp.evaluate() == x(2) * x(4) ** 2
    assert monomial_to_slide((1,)) == {(1,): 1}
    assert monomial_to_slide((1, 1)) == {(1, 1): 1}
    for a in winc_words(5, 4, min_len=1):
        assert monomial_to_slide(a) == slide_expand(Polynomial.from_word(a)).coeffs


def test_slide_products():
    assert slide_product_expand((1,), (1,)) == {(1, 1): 1}
    assert slide_product_expand((1,), (2,)) == {(1, 1): 1, (1, 2): 1}
    assert slide_product_expand((1, 3), ()) == {(1, 3): 1}
    words = list(winc_words(3, 3))
    for a in words:
        for b in words:
            exp = slide_product_expand(a, b)
            assert all(c > 0 for c in exp.coeffs.values())
            assert exp.evaluate() == slide(a) * slide(b)


def test_slide_images_under_bs_map():
    for a in winc_words(4, 4):
        for j in range(1, 6):
            exp = slide_expand(bs_map(j, 1, slide(a)))
            assert exp.coeffs == {} or list(exp.coeffs.values()) == [1]


@settings(max_examples=80, deadline=None)
@given(
    st.dictionaries(st.lists(st.integers(0, 3), max_size=4).map(tuple), st.integers(-9, 9), max_size=5),
    st.sampled_from([1, 2, 3, INF]),
)
def test_round_trip_property(terms, m):
    f = Polynomial(terms)
    exp = slide_expand(f, m)
    assert exp.evaluate() == f
    assert all(max(k, default=0) <= f.support_bound() for k in exp.coeffs)
    for k in exp.coeffs:
        assert list(k) == sorted(k)


def test_expansion_json_round_trip():
    for exp in (
        slide_expand(S_21534, 1),
        slide_expand(S_21534, 2),
        slide_expand(S_21534, INF),
        Expansion("schubert", None, {W: 2}),
        Expansion("forest", 2, {forest_from_code((0, 1), 2): -1}),
    ):
        data = json.loads(json.dumps(exp.to_json()))
        assert Expansion.from_json(data) == exp
    assert slide_expand(S_21534).to_json() == {
        "basis": "slide", "m": 1,
        "coeffs": [{"index": [1, 1, 1], "coeff": 1}, {"index": [1, 1, 3], "coeff": 1}, {"index": [1, 3, 3], "coeff": 1}],
    }
    assert slide_expand(x(1), INF).to_json()["m"] == "inf"


def test_compatible_sequences_generate_slide():
    for a in winc_words(4, 3):
        assert len(slide(a)) == len(compatible_sequences(a))
