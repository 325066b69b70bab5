from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semihopf.automata import (
    LinearAutomaton,
    check_automaton,
    from_dfa,
    run_language,
    tensor_automata,
    trivial_automaton,
    verify_language_convolution,
    words_upto,
)
from semihopf.errors import ParameterError, SemiringMismatch
from semihopf.gallery import example
from semihopf.semimodule import Atom, Functional, LinearMap, Vector, Word

from dfa_oracle import CONTAINS_X, ENDS_Y, accepts, product_accepts, split_accepts


def build(dfa, b, name):
    return from_dfa(dfa["states"], dfa["delta"], sorted(dfa["accepting"]), dfa["initial"], b, name)


GL = example("words_grouplike")
UN = example("words_unshuffle")


def test_word_counts():
    assert len(words_upto(["x", "y"], 5)) == 63
    assert len([w for w in words_upto(["x", "y"], 5) if w.letters]) == 62


@given(st.lists(st.sampled_from(["x", "y"]), max_size=8))
def test_dfa_languages_match_the_oracle(letters):
    for dfa in (CONTAINS_X, ENDS_Y):
        aut = build(dfa, GL, "A")
        value = run_language(aut, Vector.basis(GL.semiring, Word(tuple(letters))))
        assert value == int(accepts(dfa, letters))


def test_dfa_automata_are_modules():
    assert check_automaton(build(CONTAINS_X, GL, "A"), 3).passed


def test_grouplike_convolution_is_intersection():
    a1, a2 = build(CONTAINS_X, GL, "contains x"), build(ENDS_Y, GL, "ends y")
    assert verify_language_convolution(a1, a2, 5).passed
    t = tensor_automata(a1, a2)
    for w in words_upto(["x", "y"], 5):
        got = run_language(t, Vector.basis(GL.semiring, w))
        assert got == int(product_accepts(CONTAINS_X, ENDS_Y, w.letters))


def test_unshuffle_convolution_is_a_split():
    a1, a2 = build(CONTAINS_X, UN, "contains x"), build(ENDS_Y, UN, "ends y")
    assert verify_language_convolution(a1, a2, 4).passed
    t = tensor_automata(a1, a2)
    for w in words_upto(["x", "y"], 4):
        got = run_language(t, Vector.basis(UN.semiring, w))
        assert got == int(split_accepts(CONTAINS_X, ENDS_Y, w.letters))


def test_trivial_automaton_recognises_the_counit():
    aut = trivial_automaton(UN)
    for w in words_upto(["x", "y"], 3):
        assert run_language(aut, Vector.basis(UN.semiring, w)) == UN.epsilon.on_basis(w)


def test_length_two_reset_is_not_a_module():
    # q·[x,x] = r, yet (q·[x])·[x] = q.
    S = GL.semiring
    q, r = Atom("q"), Atom("r")

    def act(p):
        w = p.right
        if len(w.letters) == 2:
            return Vector.basis(S, r)
        return Vector.basis(S, p.left)

    aut = LinearAutomaton(GL, [q, r], LinearMap(S, act, "δ"), Vector.basis(S, q),
                          Functional(S, {r: 1}, "Ω", default_zero=True), "bad")
    report = check_automaton(aut, 2)
    assert not report.passed
    assert report.witnesses[0].law == "(m·b)·b' = m·(bb')"


def test_from_dfa_validation():
    with pytest.raises(ParameterError, match="unknown letter"):
        from_dfa(["p"], {("p", "z"): "p"}, [], "p", GL)
    with pytest.raises(ParameterError):
        from_dfa(["p"], {("p", "x"): "s"}, [], "p", GL)
    with pytest.raises(ParameterError):
        from_dfa(["p"], {}, [], "s", GL)
    with pytest.raises(ParameterError):
        from_dfa(["p"], {}, [], "p", example("poly_grouplike"))


def test_missing_transitions_reject():
    aut = from_dfa(["p"], {("p", "x"): "p"}, ["p"], "p", GL)
    S = GL.semiring
    assert run_language(aut, Vector.basis(S, Word(("x", "x")))) == 1
    assert run_language(aut, Vector.basis(S, Word(("x", "y")))) == 0


def test_tensor_requires_a_common_semiring():
    a1 = build(CONTAINS_X, GL, "a")
    other = example("words_grouplike", semiring="naturals")
    a2 = build(CONTAINS_X, other, "b")
    with pytest.raises(SemiringMismatch):
        tensor_automata(a1, a2)
