from __future__ import annotations

import pytest

from semihopf.doi_koppinen import (
    DKModule,
    check_action_coaction,
    check_datum,
    check_dk_module,
    check_entwining_equivalence,
    check_hom_product,
    check_smash_embedding,
    dk_module_from_hopf_module,
    entwining_map,
    hopf_datum,
    regular_dk_module,
    smash_product,
    trivial_datum,
)
from semihopf.errors import ConfigurationError
from semihopf.gallery import example, group_element, group_hopf
from semihopf.hopf_analysis import diagonal_hopf_module, regular_hopf_module
from semihopf.semimodule import Dual, LinearMap, Pair, Vector, tensor_vec
from semihopf.semiring import boolean, naturals
from semihopf.structures import check_semialgebra

B = boolean()
e, g = group_element(2, 0), group_element(2, 1)
H = group_hopf(2, B)


def test_regular_datum_satisfies_its_compatibilities():
    assert check_datum(hopf_datum(H)).passed
    assert check_datum(hopf_datum(example("poly_binomial")), 3).passed


def test_counit_action_makes_a_module_semialgebra():
    act = LinearMap(B, lambda p: Vector.basis(B, p.left, H.epsilon.on_basis(p.right)), "ε-action")
    assert check_action_coaction("rma", H, act, H).passed


def test_regular_action_is_not_a_module_semialgebra():
    report = check_action_coaction("rma", H, H.mu, H)
    assert not report.passed


def test_comodule_coalgebra_laws():
    trivial_coaction = LinearMap(B, lambda c: tensor_vec(Vector.basis(B, c), H.eta), "c ↦ c⊗1")
    assert check_action_coaction("com_coal", H, trivial_coaction, H).passed
    # Δ as a coaction gives Σ ε(c0)c1 = c, not ε(c)1.
    report = check_action_coaction("com_coal", H, H.delta, H)
    w = next(w for w in report.witnesses if w.law == "Σ ε(c0)c1 = ε(c)1")
    assert (w.inputs, w.lhs, w.rhs) == ((g,), Vector.basis(B, g), Vector.basis(B, e))


def test_corrupted_module_coalgebra_action_fails():
    b = example("poly_binomial", semiring="naturals")
    frozen = LinearMap(naturals(), lambda p: Vector.basis(naturals(), p.left), "c·h = c")
    report = check_action_coaction("rmc", b, frozen, b, 2)
    assert not report.passed


def test_kind_validation():
    with pytest.raises(ConfigurationError):
        check_action_coaction("lma", H, H.mu, H)
    with pytest.raises(ConfigurationError):
        check_action_coaction("rma", example("direct_sum_coalgebra"), H.mu, H)


def test_smash_product_over_the_group_algebra():
    datum = hopf_datum(H)
    smash = smash_product(datum)
    assert len(smash.basis.elements()) == 4
    report = check_semialgebra(smash)
    assert report.passed and report.checked["μ(μ⊗id) = μ(id⊗μ)"] == 64
    assert smash.eta == tensor_vec(H.eta, Vector.basis(B, Dual(e)) + Vector.basis(B, Dual(g)))
    assert check_smash_embedding(datum).passed


def test_smash_product_with_a_trivial_datum_is_a_tensor_product():
    datum = trivial_datum(H, H)
    smash = smash_product(datum)
    assert check_semialgebra(smash).passed
    x, y = Pair(g, Dual(e)), Pair(g, Dual(g))
    assert smash.mu.on_basis(Pair(x, y)) == Vector.zero(B)
    assert smash.mu.on_basis(Pair(x, x)) == Vector.basis(B, Pair(e, Dual(e)))


def test_hom_product_is_associative_and_unital():
    report = check_hom_product(hopf_datum(H))
    assert report.passed
    assert report.checked["(f·g)·h = f·(g·h)"] == 64


def test_entwining_map_value():
    psi = entwining_map(hopf_datum(H))
    assert psi.on_basis(Pair(g, g)) == Vector.basis(B, Pair(g, e))


@pytest.mark.parametrize("make", [lambda: regular_dk_module(hopf_datum(H)),
                                  lambda: dk_module_from_hopf_module(regular_hopf_module(H)),
                                  lambda: dk_module_from_hopf_module(diagonal_hopf_module(H))],
                         ids=["regular", "hopf-regular", "hopf-diagonal"])
def test_dk_modules_and_the_entwining_equivalence(make):
    m = make()
    datum = hopf_datum(H)
    assert check_dk_module(m, datum).passed
    assert check_entwining_equivalence(m, datum).passed


def test_equivalence_also_holds_where_the_dk_law_fails():
    datum = hopf_datum(H)
    m = DKModule("trivial coaction", H.basis, H.mu,
                 LinearMap(B, lambda x: tensor_vec(Vector.basis(B, x), H.eta), "ρ"))
    assert not check_dk_module(m, datum).passed
    assert check_entwining_equivalence(m, datum).passed
