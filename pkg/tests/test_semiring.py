from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semihopf.errors import ParameterError, UnsupportedError
from semihopf.semiring import (
    NEG_INF,
    Semiring,
    boolean,
    finite_semiring,
    integers_mod,
    make_builtin_semiring,
    naturals,
    semiring_axiom_check,
    subset_lattice,
    xn,
)

from strategies import elements, semirings


@pytest.mark.parametrize(
    "S",
    [naturals(), boolean(), xn(1), xn(2), xn(5), subset_lattice(1), subset_lattice(3),
     integers_mod(2), integers_mod(6)],
    ids=lambda s: s.name,
)
def test_builtin_semirings_satisfy_axioms(S):
    report = semiring_axiom_check(S)
    assert report.passed, report.render()


def test_small_carriers_are_checked_exhaustively():
    report = semiring_axiom_check(xn(2))
    assert any("exhaustive over 64 triples" in n for n in report.notes)
    assert report.seed is None


def test_naturals_are_sampled_with_the_seed():
    report = semiring_axiom_check(naturals(), budget=200, seed=7)
    assert report.seed == 7
    assert report.checked["distributive"] == 200


@given(semirings.flatmap(lambda S: st.tuples(st.just(S), elements(S), elements(S), elements(S))))
def test_axioms_hold_pointwise(data):
    S, a, b, c = data
    assert S.add(S.add(a, b), c) == S.add(a, S.add(b, c))
    assert S.mul(a, S.add(b, c)) == S.add(S.mul(a, b), S.mul(a, c))
    assert S.mul(a, S.zero) == S.zero
    assert S.mul(a, S.one) == a


def test_xn_truncates_and_absorbs():
    X = xn(2)
    assert X.mul(2, 1) == 2
    assert X.mul(1, 1) == 2
    assert X.mul(NEG_INF, 2) == NEG_INF
    assert X.add(NEG_INF, 1) == 1
    assert X.zero == -math.inf and X.one == 0
    assert X.additively_idempotent


def test_boolean_one_plus_one_is_one():
    B = boolean()
    assert B.add(1, 1) == 1
    assert B.natural(5) == 1


def test_subset_lattice_operations():
    L = subset_lattice(2)
    a, b = frozenset({0}), frozenset({1})
    assert L.add(a, b) == L.one
    assert L.mul(a, b) == L.zero
    assert len(L.enumeration) == 4


def test_idempotency_flags():
    assert boolean().additively_idempotent
    assert not naturals().additively_idempotent
    assert not integers_mod(3).additively_idempotent


def test_negatives_exist_only_in_rings():
    assert integers_mod(5).is_ring
    assert integers_mod(5).from_int(-1) == 4
    assert not boolean().is_ring
    with pytest.raises(UnsupportedError):
        naturals().from_int(-2)


def test_parse_rejects_tokens_outside_the_carrier():
    with pytest.raises(ParameterError, match="'2'"):
        boolean().parse("2")
    with pytest.raises(ParameterError):
        naturals().parse("-1")
    assert xn(2).parse("-inf") == NEG_INF
    assert subset_lattice(2).parse("{0,1}") == frozenset({0, 1})


def test_zero_equal_to_one_is_rejected():
    with pytest.raises(ParameterError):
        Semiring("bad", add=max, mul=min, zero=0, one=0)


def test_table_semiring_validation():
    with pytest.raises(ParameterError):
        finite_semiring("rep", [0, 0], [[0, 0], [0, 0]], [[0, 0], [0, 0]], 0, 0)
    with pytest.raises(ParameterError):
        finite_semiring("shape", [0, 1], [[0, 1]], [[0, 0], [0, 1]], 0, 1)
    with pytest.raises(ParameterError):
        finite_semiring("zero", [0, 1], [[0, 1], [1, 1]], [[0, 0], [0, 1]], 5, 1)


def test_broken_tables_yield_witnesses():
    # 1 + 1 = 0 with multiplication of a lattice: distributivity fails.
    S = finite_semiring("broken", ["0", "a", "1"],
                        [["0", "a", "1"], ["a", "a", "1"], ["1", "1", "0"]],
                        [["0", "0", "0"], ["0", "a", "a"], ["0", "a", "1"]], "0", "1")
    report = semiring_axiom_check(S)
    assert not report.passed
    assert report.witnesses


def test_make_builtin_semiring():
    assert make_builtin_semiring("xn", 3).name == "X3"
    with pytest.raises(ParameterError):
        make_builtin_semiring("xn")
    with pytest.raises(ParameterError):
        make_builtin_semiring("reals")
