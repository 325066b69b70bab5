from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semihopf.errors import ConfigurationError
from semihopf.gallery import example, group_element, group_hopf
from semihopf.semimodule import Atom, FiniteBasis, Functional, LinearMap, Pair, Vector, identity_map
from semihopf.semiring import boolean, naturals, xn
from semihopf.structures import (
    SemialgebraDesc,
    check_bialgebra_compat,
    check_cocommutativity,
    check_commutativity,
    check_maps_equal,
    check_morphism,
    check_semialgebra,
    check_semicoalgebra,
    classify_quantum_monoid,
    convolve,
    convolve_functionals,
    full_check,
    make_hopf,
    unit_map,
)

N, B = naturals(), boolean()
e, g = group_element(2, 0), group_element(2, 1)


def test_group_element_names():
    assert [group_element(3, k).name for k in range(3)] == ["e", "g", "g2"]


def test_non_associative_table_is_caught():
    # a·a = b, a·b = a, b·a = b, b·b = b, unit u: (a·b)·a = b but a·(b·a) = a.
    u, a, b = Atom("u"), Atom("a"), Atom("b")
    table = {(a, a): b, (a, b): a, (b, a): b, (b, b): b}

    def mu(p):
        if p.left == u:
            return Vector.basis(N, p.right)
        if p.right == u:
            return Vector.basis(N, p.left)
        return Vector.basis(N, table[(p.left, p.right)])

    alg = SemialgebraDesc("bad", N, FiniteBasis([u, a, b]), LinearMap(N, mu, "μ"), Vector.basis(N, u))
    report = check_semialgebra(alg)
    assert not report.passed
    assert (a, b, a) in [w.inputs for w in report.witnesses]
    w = next(w for w in report.witnesses if w.inputs == (a, b, a))
    assert (w.lhs, w.rhs) == (Vector.basis(N, b), Vector.basis(N, a))


def test_wrong_counit_is_caught():
    h = group_hopf(2, B)
    bad_eps = Functional(B, {e: 1, g: 0}, "ε")
    broken = make_hopf("broken", B, h.basis, h.mu, h.eta, h.delta, bad_eps, h.antipode)
    report = check_semicoalgebra(broken.coalgebra)
    assert not report.passed
    assert {w.law for w in report.witnesses} >= {"(id⊗ε)Δ = id"}


def test_group_like_algebra_is_a_bialgebra():
    report = check_bialgebra_compat(group_hopf(3, xn(2)))
    assert report.passed and report.checked["Δ(u)·Δ(v) = Δ(uv)"] == 9


def test_witnesses_are_reproducible():
    r1 = full_check(example("group_primitive"))
    r2 = full_check(example("group_primitive"))
    assert r1.to_json() == r2.to_json()
    assert [w.describe() for w in r1.witnesses] == [w.describe() for w in r2.witnesses]


def test_report_json_shape():
    report = full_check(group_hopf(2, B), 2)
    data = report.to_json()
    assert set(data) == {"name", "verdict", "checked_bound", "checked", "witnesses", "seed", "notes"}
    assert data["verdict"] == "pass" and data["checked_bound"] == 2


def test_antipode_is_the_convolution_inverse_of_the_identity():
    for name, params in [("group_hopf", {"order": 3}), ("laurent", {}), ("sweedler", {}), ("taft", {})]:
        h = example(name, **params)
        elems = h.basis.elements(3) if not h.basis.finite else h.basis.elements()
        left = convolve(h.antipode, identity_map(h.semiring), h, h)
        right = convolve(identity_map(h.semiring), h.antipode, h, h)
        assert check_maps_equal(left, unit_map(h), elems, h.quotient).passed, name
        assert check_maps_equal(right, unit_map(h), elems, h.quotient).passed, name


H2 = group_hopf(2, B)
ELEMS = H2.basis.elements()
VALUES = [Vector(B, zip(ELEMS, cs)) for cs in itertools.product((0, 1), repeat=2)]
maps = st.tuples(st.sampled_from(VALUES), st.sampled_from(VALUES)).map(
    lambda vs: LinearMap(B, dict(zip(ELEMS, vs)), "f"))


@given(maps, maps, maps)
def test_convolution_is_associative_with_unit(f, g_, h):
    lhs = convolve(convolve(f, g_, H2, H2), h, H2, H2)
    rhs = convolve(f, convolve(g_, h, H2, H2), H2, H2)
    assert check_maps_equal(lhs, rhs, ELEMS).passed
    u = unit_map(H2)
    assert check_maps_equal(convolve(u, f, H2, H2), f, ELEMS).passed
    assert check_maps_equal(convolve(f, u, H2, H2), f, ELEMS).passed


def test_convolution_of_functionals_on_words():
    w = example("words_unshuffle")
    eps = w.epsilon
    ones = Functional(B, lambda b: 1, "1")
    prod = convolve_functionals(ones, eps, w)
    for word in w.basis.elements(3):
        assert prod.on_basis(word) == 1


def test_commutativity_flags():
    assert check_commutativity(group_hopf(3, B)).passed
    assert check_cocommutativity(group_hopf(3, B)).passed
    assert check_cocommutativity(example("words_grouplike"), 3).passed
    assert not check_commutativity(example("words_unshuffle"), 2).passed


@pytest.mark.parametrize("name", ["sweedler", "taft", "pareigis"])
def test_quantum_monoids(name):
    report = classify_quantum_monoid(example(name), 3)
    assert report.is_quantum_monoid, report.render()


def test_commutative_group_algebra_is_not_a_quantum_monoid():
    assert not classify_quantum_monoid(group_hopf(2, B)).is_quantum_monoid


def test_identity_is_a_hopf_morphism():
    h = group_hopf(3, B)
    assert check_morphism("hopf", identity_map(B), h, h).passed


def test_morphism_kind_validation():
    h = group_hopf(2, B)
    with pytest.raises(ConfigurationError):
        check_morphism("ring", identity_map(B), h, h)
    with pytest.raises(ConfigurationError):
        check_morphism("hopf", identity_map(N), example("poly_grouplike", semiring="naturals"),
                       example("poly_grouplike", semiring="naturals"))


def test_swap_is_not_an_algebra_morphism_of_z3():
    h = group_hopf(3, B)
    g1, g2 = group_element(3, 1), group_element(3, 2)
    e3 = group_element(3, 0)
    f = LinearMap(B, {e3: Vector.basis(B, e3), g1: Vector.basis(B, g1), g2: Vector.basis(B, g1)}, "f")
    report = check_morphism("algebra", f, h, h)
    assert not report.passed
    assert Pair(g1, g1) not in [w.inputs for w in report.witnesses]
