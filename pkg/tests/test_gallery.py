from __future__ import annotations

import itertools
from math import comb

import pytest

from semihopf.errors import ParameterError, UnsupportedError
from semihopf.gallery import EXAMPLES, POSITIVE_GALLERY, example, resolve_semiring
from semihopf.semimodule import EMPTY_WORD, Atom, Pair, Power, Vector, Word
from semihopf.semiring import naturals
from semihopf.structures import check_bisemialgebra, check_semicoalgebra, full_check

N = naturals()


def unshuffle_oracle(S, w: Word) -> Vector:
    """Σ over position subsets P of w: w|P ⊗ w|complement."""
    n = len(w.letters)
    terms = []
    for mask in itertools.product((0, 1), repeat=n):
        left = tuple(a for a, m in zip(w.letters, mask) if m)
        right = tuple(a for a, m in zip(w.letters, mask) if not m)
        terms.append((Pair(Word(left), Word(right)), S.one))
    return Vector(S, terms)


@pytest.mark.parametrize("name,params", POSITIVE_GALLERY, ids=lambda p: str(p))
def test_positive_gallery_at_degree_three(name, params):
    report = full_check(example(name, **params), 3)
    assert report.passed, report.render()


def test_every_gallery_entry_is_registered():
    assert {name for name, _ in POSITIVE_GALLERY} <= set(EXAMPLES)
    assert {info.expected for info in EXAMPLES.values()} == {"pass", "fail"}


def test_binomial_coproduct_matches_binomial_coefficients():
    b = example("poly_binomial", semiring="naturals")
    for n in range(6):
        expected = Vector(N, [(Pair(Power("x", j), Power("x", n - j)), comb(n, j)) for j in range(n + 1)])
        assert b.delta.on_basis(Power("x", n)) == expected


def test_laurent_antipode_inverts_exponents():
    h = example("laurent")
    for k in range(-3, 4):
        assert h.antipode.on_basis(Power("x", k)) == Vector.basis(h.semiring, Power("x", -k))


def test_unshuffle_matches_position_subsets():
    w = example("words_unshuffle", semiring="naturals")
    for word in w.basis.elements(4):
        assert w.delta.on_basis(word) == unshuffle_oracle(N, word)


def test_grouplike_words():
    w = example("words_grouplike")
    for word in w.basis.elements(3):
        assert w.delta.on_basis(word) == Vector.basis(w.semiring, Pair(word, word))
        assert w.epsilon.on_basis(word) == 1


def test_quadratic_quotient_relation():
    h = example("hopf_quotient")
    x2 = Vector.basis(N, Power("x", 2))
    two_x = Vector(N, [(Power("x", 1), 2)])
    assert h.quotient.equal(x2 + two_x, Vector.zero(N))
    assert not h.quotient.equal(x2, Vector.zero(N))
    assert full_check(example("hopf_quotient", a=2, b=1), 3).passed
    with pytest.raises(ParameterError):
        example("hopf_quotient", a=1, b=1)


def test_haz_words_fail_with_the_displayed_sums():
    report = check_bisemialgebra(example("haz_words"), 2)
    assert not report.passed
    w = next(w for w in report.witnesses if w.inputs == (Word((2,)), Word((3,))))
    lhs = Vector.sum_of(N, [Pair(EMPTY_WORD, Word((2, 3))), Pair(Word((2,)), Word((3,))),
                            Pair(Word((3,)), Word((2,))), Pair(Word((2, 3)), EMPTY_WORD)])
    rhs = Vector.sum_of(N, [Pair(EMPTY_WORD, Word((2, 3))), Pair(Word((2,)), Word((3,))),
                            Pair(Word((2, 3)), EMPTY_WORD)])
    assert (w.lhs, w.rhs) == (lhs, rhs)


def test_primitive_group_algebra_fails_at_g_g():
    report = full_check(example("group_primitive"))
    assert not report.passed
    assert report.witnesses[0].inputs == (Atom("g"), Atom("g"))


def test_direct_sum_with_pointwise_product_fails_on_the_unit():
    report = full_check(example("direct_sum_bialgebra"))
    assert "Δ(1) = 1⊗1" in {w.law for w in report.witnesses}


def test_direct_sum_coalgebra():
    c = example("direct_sum_coalgebra", generators=["m", "n"])
    assert check_semicoalgebra(c).passed


def test_parameter_validation():
    with pytest.raises(ParameterError):
        example("divided_powers", semiring="naturals")
    with pytest.raises(ParameterError):
        example("taft", semiring="naturals")
    with pytest.raises(ParameterError):
        example("taft", q=1)
    with pytest.raises(ParameterError):
        example("taft", n=2, q=4, semiring="Z7")  # 4² = 2 in Z/7
    with pytest.raises(UnsupportedError):
        example("sweedler", semiring="boolean")
    with pytest.raises(ParameterError):
        example("tensor_semialgebra", truncation=-1)
    with pytest.raises(ParameterError):
        example("nope")
    with pytest.raises(ParameterError):
        example("group_hopf", colour=3)
    with pytest.raises(ParameterError):
        resolve_semiring("reals")
