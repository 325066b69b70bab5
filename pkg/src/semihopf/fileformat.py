"""JSON structure files (``format_version`` 1).

Basis labels: a string is an atom, ``{"atom": name, "deg": n}`` an atom with a
degree, an array a word, ``{"pow": [var, n]}`` a power, ``{"pair": [l, r]}`` a
tensor and ``{"dual": l}`` a dual basis functional.  Term lists are arrays of
``{"coeff": c, "basis": label}`` records.
"""
from __future__ import annotations

import json
from typing import Any

from .automata import LinearAutomaton, from_dfa
from .doi_koppinen import DKDatum, hopf_datum
from .errors import FormatError, ParameterError, SemihopfError
from .gallery import EXAMPLES, example, resolve_semiring, words_grouplike
from .quotient import FREE, CongruenceQuotient, LatticeQuotient, QuotientSpec, _DefaultPartner
from .semimodule import (
    Atom,
    Dual,
    FiniteBasis,
    Functional,
    LinearMap,
    Pair,
    Power,
    PowerBasis,
    Vector,
    Word,
    WordBasis,
    sort_key,
)
from .semiring import NEG_INF, Semiring, finite_semiring, make_builtin_semiring
from .structures import (
    BisemialgebraDesc,
    HopfDesc,
    SemialgebraDesc,
    SemicoalgebraDesc,
    make_bisemialgebra,
    make_hopf,
)

FORMAT_VERSION = 1
BUILTIN_KINDS = ("naturals", "boolean", "xn", "subset_lattice")


# -- labels and scalars ------------------------------------------------------------


def encode_label(b) -> Any:
    if isinstance(b, Atom):
        return b.name if b.deg == 0 else {"atom": b.name, "deg": b.deg}
    if isinstance(b, Word):
        return list(b.letters)
    if isinstance(b, Power):
        return {"pow": [b.var, b.exp]}
    if isinstance(b, Pair):
        return {"pair": [encode_label(b.left), encode_label(b.right)]}
    if isinstance(b, Dual):
        return {"dual": encode_label(b.of)}
    raise FormatError(f"cannot encode basis element {b!r}")


def decode_label(x) -> Any:
    if isinstance(x, str):
        return Atom(x)
    if isinstance(x, list):
        if not all(isinstance(a, (str, int)) and not isinstance(a, bool) for a in x):
            raise FormatError(f"word letters must be strings or integers: {x!r}")
        return Word(tuple(x))
    if isinstance(x, dict) and len(x) >= 1:
        if "atom" in x:
            return Atom(str(x["atom"]), int(x.get("deg", 0)))
        if "pow" in x:
            var, n = x["pow"]
            return Power(str(var), int(n))
        if "pair" in x:
            left, right = x["pair"]
            return Pair(decode_label(left), decode_label(right))
        if "dual" in x:
            return Dual(decode_label(x["dual"]))
    raise FormatError(f"unrecognised basis label {x!r}")


def encode_scalar(S: Semiring, v) -> Any:
    if v == NEG_INF:
        return "-inf"
    if isinstance(v, frozenset):
        return sorted(v)
    return v


def decode_scalar(S: Semiring, x):
    if isinstance(x, bool):
        raise ParameterError(f"coefficient {x!r} is not an element of {S.name}")
    if isinstance(x, list) and S.kind == "subset_lattice":
        v = frozenset(x)
        if v not in S.enumeration:
            raise ParameterError(f"coefficient {x!r} is not an element of {S.name}")
        return v
    return S.parse(x)


def encode_terms(v: Vector) -> list:
    return [{"coeff": encode_scalar(v.semiring, c), "basis": encode_label(b)} for b, c in v.items()]


def _decode_terms(S: Semiring, terms, check_label=None) -> Vector:
    if not isinstance(terms, list):
        raise FormatError(f"term list expected, got {terms!r}")
    out = []
    for t in terms:
        if not isinstance(t, dict) or "basis" not in t:
            raise FormatError(f"term record needs 'basis' (and 'coeff'): {t!r}")
        b = decode_label(t["basis"])
        if check_label is not None:
            check_label(b)
        out.append((b, decode_scalar(S, t.get("coeff", 1 if S.kind == "naturals" else S.fmt(S.one)))))
    return Vector(S, out)


# -- semiring -----------------------------------------------------------------------


def encode_semiring(S: Semiring) -> dict:
    if S.kind in BUILTIN_KINDS:
        out = {"builtin": S.kind}
        if S.param is not None:
            out["param"] = S.param
        return out
    if S.tables is None:
        raise FormatError(f"semiring {S.name} cannot be serialized")
    carrier = list(S.enumeration)
    return {
        "name": S.name,
        "carrier": [encode_scalar(S, c) for c in carrier],
        "add": [[encode_scalar(S, S.add(a, b)) for b in carrier] for a in carrier],
        "mul": [[encode_scalar(S, S.mul(a, b)) for b in carrier] for a in carrier],
        "zero": encode_scalar(S, S.zero),
        "one": encode_scalar(S, S.one),
    }


def decode_semiring(x) -> Semiring:
    if isinstance(x, str):
        return resolve_semiring(x)
    if not isinstance(x, dict):
        raise FormatError(f"semiring section must be a name or an object, got {x!r}")
    if "builtin" in x:
        return make_builtin_semiring(x["builtin"], x.get("param"))
    for key in ("carrier", "add", "mul", "zero", "one"):
        if key not in x:
            raise FormatError(f"finite semiring needs '{key}'")
    carrier = [tuple(c) if isinstance(c, list) else c for c in x["carrier"]]
    try:
        return finite_semiring(x.get("name", "custom"), carrier, x["add"], x["mul"], x["zero"], x["one"])
    except TypeError as exc:
        raise FormatError(f"bad semiring table: {exc}") from None


# -- documents --------------------------------------------------------------------


def load_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise FormatError("top level must be an object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise FormatError(f"format_version must be {FORMAT_VERSION}, got {version!r}")
    return doc


def parse_structure_file(text: str):
    return parse_document(load_json(text))


def parse_document(doc: dict):
    if "example" in doc:
        return _parse_example(doc)
    kind = doc.get("kind")
    if kind == "automaton":
        return _parse_automaton(doc)
    if kind == "datum":
        return _parse_datum(doc)
    if kind not in ("semialgebra", "semicoalgebra", "bisemialgebra", "hopf"):
        raise FormatError(f"unknown kind {kind!r}")
    return _parse_structure(doc, kind)


def _parse_example(doc: dict):
    ref = doc["example"]
    if isinstance(ref, dict):
        name, params = ref.get("name"), dict(ref.get("params", {}))
    else:
        name = ref
        params = {k: v for k, v in doc.items() if k not in ("format_version", "example", "kind", "degree")}
        params.update(doc.get("params", {}))
        params.pop("params", None)
    if "group" in params:
        group = str(params.pop("group"))
        if not group.upper().startswith("Z"):
            raise ParameterError(f"only cyclic groups Z<n> are built in, not {group!r}")
        params["order"] = int(group[1:].lstrip("/"))
    if name not in EXAMPLES:
        raise FormatError(f"unknown example {name!r}")
    return example(name, **params)


def _parse_basis(x):
    if isinstance(x, list):
        return FiniteBasis([decode_label(b) for b in x])
    if isinstance(x, dict) and "words" in x:
        return WordBasis(x["words"])
    if isinstance(x, dict) and "powers" in x:
        return PowerBasis(str(x["powers"]), bool(x.get("laurent", False)))
    raise FormatError(f"unrecognised basis section {x!r}")


def _label_checker(basis):
    def check(b):
        if isinstance(b, Pair):
            check(b.left)
            check(b.right)
            return
        if b not in basis:
            raise FormatError(f"undeclared basis label {encode_label(b)!r}")

    return check


def _map_table(S, entries, name, check) -> dict:
    if not isinstance(entries, list):
        raise FormatError(f"map {name} must be a list of {{on, terms}} records")
    table = {}
    for e in entries:
        if not isinstance(e, dict) or "on" not in e:
            raise FormatError(f"map {name}: record needs 'on': {e!r}")
        key = decode_label(e["on"])
        check(key)
        table[key] = _decode_terms(S, e.get("terms", []), check)
    return table


def _need(maps: dict, key: str, kind: str):
    if key not in maps:
        raise FormatError(f"missing map {key!r} for a {kind}")
    return maps[key]


def _parse_quotient(S, x, basis, check) -> QuotientSpec:
    if x is None or x.get("mode", "free") == "free":
        return FREE
    mode = x["mode"]
    relations = [(_decode_terms(S, u, check), _decode_terms(S, v, check)) for u, v in x.get("relations", [])]
    if mode == "lattice":
        image = {}
        for rec in x.get("image", []):
            b = decode_label(rec["basis"])
            check(b)
            image[b] = {decode_label(t["basis"]): int(t["coeff"]) for t in rec["terms"]}
        partner = None
        if "partner" in x:
            partner = _DefaultPartner({decode_label(r): decode_label(p) for r, p in x["partner"]})
        return LatticeQuotient(S, lambda b: image.get(b, {b: 1}), relations, partner, x.get("name", "lattice"))
    if mode == "congruence":
        if not basis.finite:
            raise FormatError("congruence quotients need a finite basis")
        return CongruenceQuotient(basis.elements(), S, relations, int(x.get("guard", 65536)))
    raise FormatError(f"unknown quotient mode {mode!r}")


def _parse_structure(doc: dict, kind: str):
    if "semiring" not in doc or "basis" not in doc:
        raise FormatError("structure needs 'semiring' and 'basis' sections")
    S = decode_semiring(doc["semiring"])
    basis = _parse_basis(doc["basis"])
    check = _label_checker(basis)
    maps = doc.get("maps", {})
    name = doc.get("name", kind)
    q = _parse_quotient(S, doc.get("quotient"), basis, check)

    def lin(key):
        table = _map_table(S, _need(maps, key, kind), key, check)
        return LinearMap(S, table, {"mu": "μ", "delta": "Δ", "antipode": "𝔞"}.get(key, key))

    parts: dict = {}
    if kind in ("semialgebra", "bisemialgebra", "hopf"):
        parts["mu"] = lin("mu")
        parts["eta"] = _decode_terms(S, _need(maps, "eta", kind), check)
    if kind in ("semicoalgebra", "bisemialgebra", "hopf"):
        parts["delta"] = lin("delta")
        eps = {}
        for rec in _need(maps, "epsilon", kind):
            b = decode_label(rec["on"])
            check(b)
            eps[b] = decode_scalar(S, rec["value"])
        parts["epsilon"] = Functional(S, eps, "ε", default_zero=True)
    if kind == "semialgebra":
        return SemialgebraDesc(name, S, basis, parts["mu"], parts["eta"], q)
    if kind == "semicoalgebra":
        return SemicoalgebraDesc(name, S, basis, parts["delta"], parts["epsilon"], q)
    if kind == "bisemialgebra":
        return make_bisemialgebra(name, S, basis, quotient=q, **parts)
    return make_hopf(name, S, basis, antipode=lin("antipode"), quotient=q, **parts)


def _parse_datum(doc: dict) -> DKDatum:
    """``{"kind": "datum", "over": <structure>}``: the regular datum B = A = C."""
    if "over" not in doc:
        raise FormatError("datum needs an 'over' section naming the bisemialgebra")
    b = parse_document({"format_version": FORMAT_VERSION, **doc["over"]})
    if not isinstance(b, BisemialgebraDesc | HopfDesc):
        raise FormatError("datum 'over' must be a bisemialgebra")
    return hopf_datum(b)


def _parse_automaton(doc: dict) -> LinearAutomaton:
    name = doc.get("name", "automaton")
    if "dfa" not in doc:
        raise FormatError("automaton needs a 'dfa' section")
    dfa = doc["dfa"]
    for key in ("states", "alphabet", "transitions", "initial", "accepting"):
        if key not in dfa:
            raise FormatError(f"dfa needs '{key}'")
    if "over" in doc:
        over = parse_document({"format_version": FORMAT_VERSION, **doc["over"]})
    else:
        over = words_grouplike(tuple(dfa["alphabet"]), doc.get("semiring", "boolean"))
    alphabet = getattr(over.basis, "alphabet", None)
    if alphabet is None or list(alphabet) != list(dfa["alphabet"]):
        raise ParameterError(f"dfa alphabet {dfa['alphabet']} does not match the structure's generators")
    transitions = {}
    for rec in dfa["transitions"]:
        if len(rec) != 3:
            raise FormatError(f"transition must be [state, letter, state]: {rec!r}")
        q, a, r = rec
        transitions[(q, a)] = r
    return from_dfa(dfa["states"], transitions, dfa["accepting"], dfa["initial"], over, name)


# -- emission ------------------------------------------------------------------------


def _emit_map(f: LinearMap, keys) -> list:
    return [{"on": encode_label(k), "terms": encode_terms(f.on_basis(k))} for k in keys]


def emit_structure(desc, name: str | None = None, params: dict | None = None) -> dict:
    """Explicit tables for finite carriers; an example reference otherwise."""
    if not desc.basis.finite:
        if name is None:
            raise FormatError(f"{desc.name} has an infinite basis; emit it as an example reference")
        return {"format_version": FORMAT_VERSION, "example": {"name": name, "params": params or {}}}
    S = desc.semiring
    elems = desc.basis.elements()
    pairs = [Pair(a, b) for a in elems for b in elems]
    if isinstance(desc, HopfDesc):
        kind = "hopf"
    elif isinstance(desc, BisemialgebraDesc):
        kind = "bisemialgebra"
    elif isinstance(desc, SemialgebraDesc):
        kind = "semialgebra"
    else:
        kind = "semicoalgebra"
    maps: dict = {}
    if kind != "semicoalgebra":
        maps["mu"] = _emit_map(desc.mu, pairs)
        maps["eta"] = encode_terms(desc.eta)
    if kind != "semialgebra":
        maps["delta"] = _emit_map(desc.delta, elems)
        maps["epsilon"] = [{"on": encode_label(b), "value": encode_scalar(S, desc.epsilon.on_basis(b))}
                           for b in elems]
    if kind == "hopf":
        maps["antipode"] = _emit_map(desc.antipode, elems)
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "name": desc.name,
        "semiring": encode_semiring(S),
        "basis": [encode_label(b) for b in elems],
        "maps": maps,
    }
    q = desc.quotient
    if isinstance(q, LatticeQuotient):
        doc["quotient"] = {
            "mode": "lattice",
            "name": q.name,
            "image": [{"basis": encode_label(b),
                       "terms": [{"coeff": k, "basis": encode_label(r)}
                                 for r, k in sorted(q.basis_image(b).items(), key=lambda t: sort_key(t[0]))]}
                      for b in elems],
            "relations": [[encode_terms(u), encode_terms(v)] for u, v in q.relations()],
        }
        if q.partner is not None:
            reps = {r for b in elems for r in q.basis_image(b)}
            rows = []
            for r in sorted(reps, key=sort_key):
                try:
                    rows.append([encode_label(r), encode_label(q.partner[r])])
                except (KeyError, SemihopfError):
                    continue
            doc["quotient"]["partner"] = rows
    elif isinstance(q, CongruenceQuotient):
        doc["quotient"] = {"mode": "congruence",
                           "relations": [[encode_terms(u), encode_terms(v)] for u, v in q.relations()]}
    return doc


def _closed(doc: dict) -> bool:
    """True when every label a map produces is declared in the basis."""
    declared = {json.dumps(b, sort_keys=True) for b in doc["basis"]}

    def labels(x):
        b = decode_label(x)
        if isinstance(b, Pair):
            return labels(x["pair"][0]) and labels(x["pair"][1])
        return json.dumps(x, sort_keys=True) in declared

    for key, entries in doc["maps"].items():
        terms = entries if key == "eta" else [t for e in entries for t in e.get("terms", [])]
        if key == "epsilon":
            continue
        if not all(labels(t["basis"]) for t in terms):
            return False
    return True


def emit_example(name: str, **params) -> dict:
    """Explicit tables when the example closes up on a finite basis, a reference otherwise."""
    desc = example(name, **params)
    if desc.basis.finite:
        doc = emit_structure(desc)
        if _closed(doc):
            return doc
    return {"format_version": FORMAT_VERSION, "example": {"name": name, "params": params}}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
