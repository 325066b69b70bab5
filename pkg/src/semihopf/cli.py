"""Command-line interface: ``semihopf <command> --file STRUCTURE.json``.

Exit status is 0 when every requested check passes, 1 when a check fails and 2
for usage, file-format or configuration errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automata import LinearAutomaton, check_automaton, run_language, tensor_automata, verify_language_convolution
from .doi_koppinen import DKDatum, check_datum, check_smash_embedding, hopf_datum, smash_product
from .errors import SemihopfError
from .fileformat import dumps, emit_example, emit_structure, encode_scalar, parse_structure_file
from .gallery import EXAMPLES
from .hopf_analysis import (
    DEFAULT_BUDGET,
    dual_hopf,
    search_antipode,
    search_coseparability_form,
    search_integrals_in,
    search_integrals_on,
    search_separability_idempotent,
    verify_integral_ideal_property,
    verify_integral_on,
)
from .semimodule import Pair, Vector, Word, identity_map
from .semiring import DEFAULT_SEED
from .structures import (
    DEFAULT_DEGREE,
    HopfDesc,
    basis_upto,
    check_semialgebra,
    convolve,
    full_check,
    unit_map,
)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_structure_file(text)


class _UsageError(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False) if args.json else text)


def _report_exit(args, reports) -> int:
    if args.json:
        out = [r.to_json() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, indent=2, ensure_ascii=False))
    else:
        print("\n".join(r.render() for r in reports))
    return EXIT_PASS if all(r.passed for r in reports) else EXIT_FAIL


def _need_bi(desc, what: str):
    if not (hasattr(desc, "mu") and hasattr(desc, "delta")):
        raise _UsageError(f"{what} needs a bisemialgebra, got {desc.name}")
    return desc


# -- commands ------------------------------------------------------------------------


def cmd_check(args) -> int:
    desc = _load(args.file)
    if isinstance(desc, LinearAutomaton):
        return _report_exit(args, [check_automaton(desc, args.degree)])
    if isinstance(desc, DKDatum):
        return _report_exit(args, [check_datum(desc, args.degree)])
    return _report_exit(args, [full_check(desc, args.degree)])


def cmd_search_integrals(args) -> int:
    b = _need_bi(_load(args.file), "integral search")
    found = search_integrals_on(b, args.side, args.degree, args.budget)
    elems = basis_upto(b, args.degree)
    rows = []
    for t in found:
        total = verify_integral_on(t, b, args.side, args.degree).total
        ideal = verify_integral_ideal_property(t, b, args.degree, seed=args.seed, side=args.side)
        rows.append({"functional": t.pretty(elems), "total": total, "ideal_property": ideal.verdict})
    lines = [f"{len(found)} {args.side} integral(s) on {b.name} supported on degree <= {args.degree}"]
    lines += [f"  {r['functional']}{'  [total]' if r['total'] else ''}  ideal property: {r['ideal_property']}"
              for r in rows]
    _emit(args, "\n".join(lines), {"structure": b.name, "side": args.side, "degree": args.degree,
                                   "seed": args.seed, "integrals": rows})
    return EXIT_PASS if all(r["ideal_property"] == "pass" for r in rows) else EXIT_FAIL


def cmd_search_integrals_in(args) -> int:
    b = _need_bi(_load(args.file), "integral search")
    found = search_integrals_in(b, args.side, args.degree, args.budget)
    S = b.semiring
    rows = [{"element": w.pretty(), "normalized": b.epsilon(w) == S.one} for w in found]
    lines = [f"{len(found)} {args.side} integral(s) in {b.name} supported on degree <= {args.degree}"]
    lines += [f"  {r['element']}{'  [normalized]' if r['normalized'] else ''}" for r in rows]
    _emit(args, "\n".join(lines), {"structure": b.name, "side": args.side, "degree": args.degree,
                                   "integrals": rows})
    return EXIT_PASS


def cmd_search_antipode(args) -> int:
    b = _need_bi(_load(args.file), "antipode search")
    found = search_antipode(b, args.degree, args.budget)
    elems = basis_upto(b, args.degree)
    rows = [{e.pretty(): f.on_basis(e).pretty() for e in elems} for f in found]
    lines = [f"{len(found)} antipode(s) on {b.name} (degree <= {args.degree})"]
    for i, r in enumerate(rows):
        lines.append(f"  antipode {i + 1}: " + ", ".join(f"{k} -> {v}" for k, v in r.items()))
    _emit(args, "\n".join(lines), {"structure": b.name, "degree": args.degree, "antipodes": rows})
    return EXIT_PASS


def cmd_search_separability(args) -> int:
    h = _need_bi(_load(args.file), "separability search")
    elems = basis_upto(h, args.degree)
    pairs = [Pair(x, y) for x in elems for y in elems]
    idem = search_separability_idempotent(h, args.degree, args.budget)
    forms = search_coseparability_form(h, args.degree, args.budget)
    payload = {"structure": h.name, "degree": args.degree,
               "separability_idempotents": [e.pretty() for e in idem],
               "coseparability_forms": [f.pretty(pairs) for f in forms]}
    lines = [f"{len(idem)} separability idempotent(s) in {h.name}⊗{h.name}"]
    lines += [f"  {e}" for e in payload["separability_idempotents"]]
    lines.append(f"{len(forms)} coseparability form(s) on {h.name}⊗{h.name}")
    lines += [f"  {f}" for f in payload["coseparability_forms"]]
    _emit(args, "\n".join(lines), payload)
    return EXIT_PASS


def cmd_dual(args) -> int:
    h = _need_bi(_load(args.file), "dual")
    dual = dual_hopf(h)
    report = full_check(dual, args.degree)
    if args.json:
        print(dumps({"structure": emit_structure(dual), "check": report.to_json()}))
    else:
        print(dumps(emit_structure(dual)))
        print(report.summary(), file=sys.stderr)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _canonical(b, v: Vector) -> Vector:
    """Normal form when the quotient has one, the vector itself otherwise."""
    try:
        return b.quotient.normalize(v)
    except (AttributeError, SemihopfError):
        return v


def _named_map(b, name: str):
    if name == "id":
        return identity_map(b.semiring)
    if name == "unit":
        return unit_map(b)
    if name == "antipode":
        if not isinstance(b, HopfDesc):
            raise _UsageError(f"{b.name} has no antipode")
        return b.antipode
    raise _UsageError(f"unknown map {name!r}; use id, unit or antipode")


def cmd_convolve(args) -> int:
    b = _need_bi(_load(args.file), "convolution")
    f, g = _named_map(b, args.f), _named_map(b, args.g)
    h = convolve(f, g, b, b)
    elems = basis_upto(b, args.degree)
    table = {x.pretty(): _canonical(b, h.on_basis(x)).pretty() for x in elems}
    lines = [f"({args.f} ∗ {args.g}) on {b.name}, degree <= {args.degree}"]
    lines += [f"  {k} -> {v}" for k, v in table.items()]
    _emit(args, "\n".join(lines), {"structure": b.name, "f": args.f, "g": args.g, "values": table})
    return EXIT_PASS


def cmd_smash(args) -> int:
    loaded = _load(args.file)
    datum = loaded if isinstance(loaded, DKDatum) else hopf_datum(_need_bi(loaded, "smash product"))
    smash = smash_product(datum, args.degree)
    reports = [check_semialgebra(smash, args.degree), check_smash_embedding(datum, args.degree)]
    if not args.json:
        print(f"{smash.name}: {len(smash.basis.elements())} basis elements")
    return _report_exit(args, reports)


def _parse_word(text: str, alphabet) -> Word:
    if text in ("", "ε", "empty"):
        return Word(())
    tokens = text.split(",") if "," in text else list(text)
    letters = []
    for tok in tokens:
        tok = tok.strip()
        match = [a for a in alphabet if str(a) == tok]
        if not match:
            raise _UsageError(f"unknown letter {tok!r}; alphabet is {list(alphabet)}")
        letters.append(match[0])
    return Word(tuple(letters))


def cmd_automaton_run(args) -> int:
    aut = _load(args.file)
    if not isinstance(aut, LinearAutomaton):
        raise _UsageError(f"{args.file} is not an automaton file")
    S = aut.semiring
    alphabet = aut.over.basis.alphabet
    words = [_parse_word(w, alphabet) for w in args.word] if args.word else basis_upto(aut.over, args.maxlen)
    values = {w.pretty(): encode_scalar(S, run_language(aut, Vector.basis(S, w))) for w in words}
    _emit(args, "\n".join(f"  ρ({k}) = {v}" for k, v in values.items()),
          {"automaton": aut.name, "values": values})
    return EXIT_PASS


def cmd_automaton_product(args) -> int:
    a1, a2 = _load(args.a1), _load(args.a2)
    for a, path in ((a1, args.a1), (a2, args.a2)):
        if not isinstance(a, LinearAutomaton):
            raise _UsageError(f"{path} is not an automaton file")
    if a1.over.name != a2.over.name or a1.semiring.name != a2.semiring.name:
        raise _UsageError(f"automata act on different structures: {a1.over.name} and {a2.over.name}")
    if not args.verify:
        t = tensor_automata(a1, a2)
        S = a1.semiring
        values = {w.pretty(): encode_scalar(S, run_language(t, Vector.basis(S, w)))
                  for w in basis_upto(a1.over, args.maxlen)}
        _emit(args, "\n".join(f"  ρ({k}) = {v}" for k, v in values.items()),
              {"automaton": t.name, "values": values})
        return EXIT_PASS
    return _report_exit(args, [verify_language_convolution(a1, a2, args.maxlen)])


def _coerce(value: str):
    try:
        return json.loads(value)
    except json.JSONDecodeError:
        return value


def cmd_examples_list(args) -> int:
    rows = [{"name": i.name, "kind": i.kind, "expected": i.expected, "summary": i.summary,
             "defaults": i.defaults} for i in EXAMPLES.values()]
    text = "\n".join(f"  {r['name']:<22} {r['kind']:<14} {r['expected']:<5} {r['summary']}" for r in rows)
    _emit(args, text, rows)
    return EXIT_PASS


def cmd_examples_emit(args) -> int:
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise _UsageError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k] = _coerce(v)
    print(dumps(emit_example(args.name, **params)))
    return EXIT_PASS


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="semihopf", description="Exact checks for semialgebras, semicoalgebras and "
                                             "Hopf semialgebras over commutative semirings.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, file=True):
        if file:
            sp.add_argument("--file", required=True, help="structure file (JSON, format_version 1)")
        sp.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="degree bound for checks")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    common(sub.add_parser("check", help="run every law check")).set_defaults(fn=cmd_check)
    for name, fn in (("search-integrals", cmd_search_integrals), ("search-integrals-in", cmd_search_integrals_in)):
        sp = common(sub.add_parser(name))
        sp.add_argument("--side", choices=("left", "right"), default="left")
        sp.set_defaults(fn=fn)
    common(sub.add_parser("search-antipode")).set_defaults(fn=cmd_search_antipode)
    common(sub.add_parser("search-separability")).set_defaults(fn=cmd_search_separability)
    common(sub.add_parser("dual", help="emit the dual structure")).set_defaults(fn=cmd_dual)
    sp = common(sub.add_parser("convolve"))
    sp.add_argument("--f", default="id")
    sp.add_argument("--g", default="antipode")
    sp.set_defaults(fn=cmd_convolve)
    common(sub.add_parser("smash", help="smash product of the regular datum")).set_defaults(fn=cmd_smash)

    auto = sub.add_parser("automaton").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = common(auto.add_parser("run"))
    sp.add_argument("--word", action="append", help="word as letters, or comma-separated letters")
    sp.add_argument("--maxlen", type=int, default=5)
    sp.set_defaults(fn=cmd_automaton_run)
    sp = common(auto.add_parser("product"), file=False)
    sp.add_argument("--a1", required=True)
    sp.add_argument("--a2", required=True)
    sp.add_argument("--maxlen", type=int, default=5)
    sp.add_argument("--verify", action="store_true", help="check ρ⊗ = ρ∗ρ' instead of printing ρ⊗")
    sp.set_defaults(fn=cmd_automaton_product)

    ex = sub.add_parser("examples").add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = ex.add_parser("list")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_examples_list)
    sp = ex.add_parser("emit")
    sp.add_argument("name", choices=sorted(EXAMPLES))
    sp.add_argument("--param", action="append", help="builder parameter key=value (JSON values)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=cmd_examples_emit)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemihopfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
