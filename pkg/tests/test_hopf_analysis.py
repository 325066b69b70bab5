from __future__ import annotations

import pytest

from semihopf.errors import ConfigurationError, SizeError, UnsupportedError
from semihopf.gallery import example, group_element, group_hopf
from semihopf.hopf_analysis import (
    coinvariants,
    diagonal_hopf_module,
    double_dual_map,
    dual_hopf,
    enumerate_vectors,
    free_on_representatives,
    gamma_image_certificate,
    invariants,
    regular_hopf_module,
    search_antipode,
    search_coseparability_form,
    search_integrals_in,
    search_integrals_on,
    search_separability_idempotent,
    span_closure,
    trivial_coaction_module,
    check_hopf_module,
    verify_fundamental,
    verify_gamma_iso,
    verify_integral_ideal_property,
    verify_integral_on,
)
from semihopf.semimodule import Atom, Dual, Functional, Pair, Power, Vector
from semihopf.semiring import boolean, naturals, xn
from semihopf.structures import check_cocommutativity, check_commutativity, check_hopf, check_morphism, full_check

B = boolean()
e, g = group_element(2, 0), group_element(2, 1)


def values(ts, elems):
    return [{x: t.on_basis(x) for x in elems if t.on_basis(x) != 0} for t in ts]


def test_enumeration_order_and_budget():
    vs = list(enumerate_vectors(B, [e, g]))
    assert [v.pretty() for v in vs] == ["0", "g", "e", "e + g"]
    with pytest.raises(SizeError):
        list(enumerate_vectors(B, [Atom(str(i)) for i in range(30)], budget=1000))
    with pytest.raises(UnsupportedError):
        list(enumerate_vectors(naturals(), [e]))


def test_span_closure():
    assert len(span_closure(xn(1), [Vector.basis(xn(1), e)])) == 3


def test_integrals_on_grouplike_polynomials():
    b = example("poly_grouplike")
    found = search_integrals_on(b, "left", 5)
    elems = b.basis.elements(5)
    assert values(found, elems) == [{}, {Power("x", 0): 1}]
    assert verify_integral_on(found[1], b, "left", 5).total


def test_right_integrals_agree_for_cocommutative_structures():
    b = group_hopf(2, B)
    assert values(search_integrals_on(b, "right"), [e, g]) == values(search_integrals_on(b, "left"), [e, g])


def test_truncation_artefact_is_rejected_by_the_extra_probe():
    # With probes only up to the support degree, δ at the top degree would look integral.
    b = example("poly_binomial")
    assert len(search_integrals_on(b, "left", 2, probe=2)) > len(search_integrals_on(b, "left", 2))
    assert len(search_integrals_on(b, "left", 2)) == 1


def test_side_validation():
    with pytest.raises(ConfigurationError):
        search_integrals_on(group_hopf(2, B), "up")


def test_integral_ideal_property_and_a_non_integral():
    b = group_hopf(2, B)
    t = Functional(B, {e: 1}, "t", default_zero=True)
    assert verify_integral_ideal_property(t, b, seed=11).passed
    not_t = Functional(B, {g: 1}, "s", default_zero=True)
    report = verify_integral_on(not_t, b)
    assert not report.is_integral and not report.total


def test_integrals_in_group_algebra_over_x2():
    found = search_integrals_in(group_hopf(2, xn(1)))
    assert Vector.sum_of(xn(1), [e, g]) in found


def test_invariants_and_coinvariants_of_the_regular_module():
    b = group_hopf(3, B)
    m = regular_hopf_module(b)
    coinv = coinvariants(m)
    assert [v.pretty() for v in coinv.elements] == ["0", "e"]
    inv = invariants(m)
    assert [v.pretty() for v in inv.elements] == ["0", "e + g + g2"]


def test_regular_and_diagonal_modules_are_hopf_modules():
    b = group_hopf(2, B)
    assert check_hopf_module(regular_hopf_module(b)).passed
    assert check_hopf_module(diagonal_hopf_module(b)).passed


def test_trivial_coaction_on_the_regular_action_is_not_a_hopf_module():
    b = group_hopf(2, B)
    m = trivial_coaction_module(b, b.basis, b.mu)
    assert not check_hopf_module(m).passed


def test_fundamental_theorem_requires_an_antipode():
    with pytest.raises(ConfigurationError):
        verify_fundamental(regular_hopf_module(example("poly_grouplike")), example("poly_grouplike"))


def test_fundamental_theorem_over_x2():
    h = group_hopf(2, xn(1))
    assert verify_fundamental(regular_hopf_module(h), h).passed


def test_gamma_iso_and_certificate():
    assert verify_gamma_iso(group_hopf(3, xn(2))).passed
    b = example("poly_binomial")
    target = Vector.basis(B, Pair(Power("x", 0), Power("x", 1)))
    cert = gamma_image_certificate(b, target, 1)
    assert not cert.in_image and cert.searched == 2 ** 3
    hit = gamma_image_certificate(b, Vector.basis(B, Pair(Power("x", 0), Power("x", 0))), 1)
    assert hit.in_image and "γ(" in hit.describe()


def test_dual_of_a_group_algebra():
    h = group_hopf(3, B)
    d = dual_hopf(h)
    assert check_hopf(d).passed
    assert d.eta == Vector.sum_of(B, [Dual(x) for x in h.basis.elements()])
    dd = dual_hopf(d)
    assert check_morphism("hopf", double_dual_map(h), h, dd).passed


def test_dual_of_a_quotient_goes_through_representatives():
    t = example("taft")
    free = free_on_representatives(t)
    assert len(free.basis) == 4 and full_check(free).passed
    d = dual_hopf(t)
    assert check_hopf(d).passed
    assert check_commutativity(d).passed == check_cocommutativity(free).passed
    with pytest.raises(UnsupportedError):
        dual_hopf(example("sweedler"))
    with pytest.raises(UnsupportedError):
        dual_hopf(example("laurent"))


def test_antipode_search():
    found = search_antipode(group_hopf(2, B))
    assert len(found) == 1 and found[0].on_basis(g) == Vector.basis(B, g)
    assert search_antipode(example("poly_binomial"), 2) == []
    assert len(search_antipode(example("trivial"))) == 1


def test_separability_and_coseparability():
    h = group_hopf(2, B)
    idem = search_separability_idempotent(h)
    assert Vector.sum_of(B, [Pair(e, e), Pair(g, g)]) in idem
    forms = search_coseparability_form(h)
    pairs = [Pair(x, y) for x in (e, g) for y in (e, g)]
    by_product = {p: h.mu.on_basis(p).coeff(e) for p in pairs}  # δ(a⊗b) = δ_e(ab)
    assert any(all(f.on_basis(p) == by_product[p] for p in pairs) for f in forms)
