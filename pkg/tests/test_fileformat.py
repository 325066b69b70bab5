from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semihopf.automata import LinearAutomaton
from semihopf.doi_koppinen import DKDatum
from semihopf.errors import FormatError, ParameterError
from semihopf.fileformat import (
    decode_label,
    dumps,
    emit_example,
    emit_structure,
    encode_label,
    parse_document,
    parse_structure_file,
)
from semihopf.gallery import POSITIVE_GALLERY, example
from semihopf.semimodule import Atom, Dual, Pair, Power, Word
from semihopf.structures import HopfDesc, check_hopf, full_check

NEGATIVES = [("haz_words", {}), ("group_primitive", {}), ("direct_sum_bialgebra", {})]


def group_doc():
    return emit_example("group_hopf")


labels = st.recursive(
    st.one_of(
        st.builds(Atom, st.sampled_from(["e", "g", "x1"]), st.integers(0, 3)),
        st.builds(Word, st.lists(st.sampled_from(["x", "y", 2, 3]), max_size=3).map(tuple)),
        st.builds(Power, st.just("x"), st.integers(-3, 3)),
    ),
    lambda inner: st.one_of(st.builds(Pair, inner, inner), st.builds(Dual, inner)),
    max_leaves=4,
)


@given(labels)
def test_labels_round_trip(label):
    assert decode_label(json.loads(json.dumps(encode_label(label)))) == label


@pytest.mark.parametrize("name,params", POSITIVE_GALLERY + NEGATIVES, ids=lambda p: str(p))
def test_emit_and_reparse_preserves_every_report(name, params):
    original = example(name, **params)
    reparsed = parse_structure_file(dumps(emit_example(name, **params)))
    assert full_check(reparsed, 3).to_json() == full_check(original, 3).to_json()


def test_finite_examples_are_emitted_as_tables():
    doc = group_doc()
    assert doc["kind"] == "hopf" and doc["basis"] == ["e", "g"]
    assert {"mu", "eta", "delta", "epsilon", "antipode"} <= set(doc["maps"])
    assert "example" in emit_example("laurent")


def test_builtin_reference_with_a_group_name():
    desc = parse_document({"format_version": 1, "example": "group_hopf", "group": "Z2", "semiring": "boolean"})
    assert isinstance(desc, HopfDesc)
    assert check_hopf(desc).passed


def test_coefficient_outside_the_carrier_is_named():
    doc = group_doc()
    doc["maps"]["mu"][0]["terms"][0]["coeff"] = "2"
    with pytest.raises(ParameterError, match="'2'"):
        parse_document(doc)


def test_missing_counit_is_reported():
    doc = group_doc()
    del doc["maps"]["epsilon"]
    with pytest.raises(FormatError, match="missing map 'epsilon'"):
        parse_document(doc)


def test_undeclared_label_is_reported():
    doc = group_doc()
    doc["maps"]["delta"][0]["terms"][0]["basis"] = {"pair": ["e", "h"]}
    with pytest.raises(FormatError, match="undeclared basis label 'h'"):
        parse_document(doc)


def test_syntax_errors_carry_line_and_column():
    with pytest.raises(FormatError) as err:
        parse_structure_file('{\n  "format_version": 1,\n  "kind": }')
    assert (err.value.line, err.value.column) == (3, 11)


def test_version_is_required():
    with pytest.raises(FormatError, match="format_version"):
        parse_structure_file('{"kind": "hopf"}')


def test_custom_finite_semiring_and_congruence_quotient():
    # Two-element max-min lattice; basis {1, a} with a·a = a, quotient a ~ 1.
    doc = {
        "format_version": 1, "kind": "bisemialgebra", "name": "collapsed",
        "semiring": {"name": "L2", "carrier": ["bot", "top"],
                     "add": [["bot", "top"], ["top", "top"]],
                     "mul": [["bot", "bot"], ["bot", "top"]], "zero": "bot", "one": "top"},
        "basis": ["1", "a"],
        "maps": {
            "mu": [{"on": {"pair": [l, r]}, "terms": [{"coeff": "top", "basis": "a" if "a" in (l, r) else "1"}]}
                   for l in ("1", "a") for r in ("1", "a")],
            "eta": [{"coeff": "top", "basis": "1"}],
            "delta": [{"on": b, "terms": [{"coeff": "top", "basis": {"pair": [b, b]}}]} for b in ("1", "a")],
            "epsilon": [{"on": "1", "value": "top"}, {"on": "a", "value": "top"}],
        },
        "quotient": {"mode": "congruence",
                     "relations": [[[{"coeff": "top", "basis": "a"}], [{"coeff": "top", "basis": "1"}]]]},
    }
    desc = parse_document(doc)
    assert desc.semiring.name == "L2"
    q = desc.quotient
    S = desc.semiring
    from semihopf.semimodule import Vector
    assert q.equal(Vector.basis(S, Atom("a")), Vector.basis(S, Atom("1")))
    assert full_check(desc).passed


def test_automaton_and_datum_documents():
    aut = parse_document({
        "format_version": 1, "kind": "automaton",
        "dfa": {"states": ["p"], "alphabet": ["x", "y"], "initial": "p", "accepting": ["p"],
                "transitions": [["p", "x", "p"]]},
    })
    assert isinstance(aut, LinearAutomaton)
    datum = parse_document({"format_version": 1, "kind": "datum", "over": {"example": "group_hopf"}})
    assert isinstance(datum, DKDatum)


def test_alphabet_mismatch_is_rejected():
    with pytest.raises(ParameterError):
        parse_document({
            "format_version": 1, "kind": "automaton",
            "dfa": {"states": ["p"], "alphabet": ["x"], "initial": "p", "accepting": [],
                    "transitions": []},
            "over": {"example": "words_grouplike"},
        })


def test_infinite_structures_need_a_reference_name():
    with pytest.raises(FormatError):
        emit_structure(example("laurent"))
