from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semihopf.errors import SizeError, UnsupportedError
from semihopf.quotient import (
    FREE,
    NormalizerQuotient,
    check_normalizer,
    check_quotient_compat,
    congruence_closure,
    idempotent_collapse,
    null_pairs,
)
from semihopf.semimodule import Atom, LinearMap, Vector
from semihopf.semiring import boolean, integers_mod, naturals, xn

N, B = naturals(), boolean()
x, y, z = Atom("x"), Atom("y"), Atom("z")


def vec(S, **coeffs):
    return Vector(S, [(Atom(k), v) for k, v in coeffs.items()])


def test_free_quotient_is_equality():
    assert FREE.equal(vec(N, x=1), vec(N, x=1))
    assert not FREE.equal(vec(N, x=1), vec(N, x=2))


def test_null_pairs_cancel_over_the_naturals():
    q = null_pairs(N, [(x, y)])
    assert q.equal(vec(N, x=3, y=1), vec(N, x=2))
    assert q.equal(vec(N, x=1, y=1), Vector.zero(N))
    assert not q.equal(vec(N, x=1), vec(N, y=1))
    assert q.normalize(vec(N, x=1, y=3, z=2)) == vec(N, y=2, z=2)
    assert q.mode == "normalizer"


def test_null_pair_normal_form_satisfies_its_laws():
    q = null_pairs(N, [(x, y)])
    report = check_normalizer(q, samples=64, seed=3)
    assert report.passed, report.render()


def test_null_relations_over_idempotent_semirings_are_refused():
    with pytest.raises(UnsupportedError, match="a \\+ a = a"):
        null_pairs(B, [(x, y)])
    diag = idempotent_collapse(B, [(vec(B, x=1, y=1), Vector.zero(B))])
    assert diag == ["x ~ 0 (since x + y ~ 0 and a + a = a)", "y ~ 0 (since x + y ~ 0 and a + a = a)"]
    assert idempotent_collapse(N, [(vec(N, x=1, y=1), Vector.zero(N))]) == []


def test_null_relations_over_a_ring_use_its_negatives():
    Z3 = integers_mod(3)
    q = null_pairs(Z3, [(x, y)])
    assert q.equal(vec(Z3, y=1), vec(Z3, x=2))


def test_null_pairs_must_be_disjoint():
    with pytest.raises(ValueError):
        null_pairs(N, [(x, y), (y, z)])


def test_congruence_identifying_two_atoms():
    q = congruence_closure([x, y], B, [(vec(B, x=1), vec(B, y=1))])
    classes = sorted(sorted(v.pretty() for v in cls) for cls in q.classes())
    assert classes == [["0"], ["x", "x + y", "y"]]


def test_congruence_killing_an_atom():
    q = congruence_closure([x, y], B, [(vec(B, x=1), Vector.zero(B))])
    classes = sorted(sorted(v.pretty() for v in cls) for cls in q.classes())
    assert classes == [["0", "x"], ["x + y", "y"]]


CARRIER = [x, y, z]
X2 = xn(2)


def _all_vectors(S, basis):
    return [Vector(S, zip(basis, cs)) for cs in itertools.product(S.enumeration, repeat=len(basis))]


@given(st.lists(st.tuples(st.sampled_from(_all_vectors(B, CARRIER)), st.sampled_from(_all_vectors(B, CARRIER))),
                min_size=1, max_size=2))
def test_congruence_is_a_translation_and_scalar_closed_equivalence(gens):
    q = congruence_closure(CARRIER, B, gens)
    every = _all_vectors(B, CARRIER)
    for u, v in gens:
        assert q.equal(u, v)
    for u, v in itertools.product(every, repeat=2):
        if q.equal(u, v):
            assert q.equal(v, u)
            for w in every:
                assert q.equal(u + w, v + w)
            for s in B.enumeration:
                assert q.equal(u.scale(s), v.scale(s))


def test_congruence_guard():
    with pytest.raises(SizeError):
        congruence_closure([Atom(str(i)) for i in range(12)], X2, [], guard=1000)


def test_normalizer_quotient():
    def drop_z(v):
        return Vector(v.semiring, {b: c for b, c in v.terms.items() if b != z})

    q = NormalizerQuotient(drop_z, N, [x, y, z], [(vec(N, z=1), Vector.zero(N))])
    assert q.equal(vec(N, x=1, z=5), vec(N, x=1))
    assert check_normalizer(q).passed


def test_map_compatibility_with_a_quotient():
    q = null_pairs(N, [(x, y)])
    swap = LinearMap(N, {x: vec(N, y=1), y: vec(N, x=1), z: vec(N, z=1)}, "swap")
    assert check_quotient_compat(swap, q, [x, y, z]).passed
    bad = LinearMap(N, {x: vec(N, z=1), y: Vector.zero(N), z: vec(N, z=1)}, "bad")
    report = check_quotient_compat(bad, q, [x, y, z])
    assert not report.passed and report.witnesses[0].law == "f(u) ~ f(v)"


def test_congruence_extends_to_tensor_powers():
    from semihopf.semimodule import Pair

    q = congruence_closure([x, y], B, [(vec(B, x=1), vec(B, y=1))])
    assert q.handles_tensors()
    p = lambda a, b: Vector.basis(B, Pair(a, b))  # noqa: E731
    assert q.equal(p(x, y), p(y, x))
    assert q.equal(p(x, x) + p(y, y), p(x, y))
    assert not q.equal(p(x, x), Vector.zero(B))
    left = Vector.basis(B, Pair(Pair(x, y), x))
    right = Vector.basis(B, Pair(y, Pair(y, y)))
    assert q.equal(left, right)


def test_killing_a_generator_kills_its_tensors():
    from semihopf.semimodule import Pair

    q = congruence_closure([x, y], B, [(vec(B, x=1), Vector.zero(B))])
    assert q.equal(Vector.basis(B, Pair(y, x)), Vector.zero(B))
    assert not q.equal(Vector.basis(B, Pair(y, y)), Vector.zero(B))
