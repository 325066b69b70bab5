"""Commutative semirings with exact arithmetic.

Elements are plain Python values: ``int`` for the naturals, ``0``/``1`` for the
Boolean semifield, ``int`` or ``NEG_INF`` for ``X_n``, ``frozenset`` for subset
lattices and arbitrary hashable labels for table-defined semirings.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Sequence

from .errors import ParameterError, UnsupportedError
from .report import CheckReport

NEG_INF = -math.inf
DEFAULT_SEED = 20240601

Element = Hashable


@dataclass(frozen=True, eq=False)
class Semiring:
    name: str
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any
    enumeration: tuple | None = None
    additively_idempotent: bool = False
    kind: str = "custom"
    param: int | None = None
    parse_token: Callable[[str], Any] | None = field(default=None, repr=False)
    format_value: Callable[[Any], str] | None = field(default=None, repr=False)
    sampler: Callable[[random.Random], Any] | None = field(default=None, repr=False)
    tables: dict | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.zero == self.one:
            raise ParameterError(f"semiring {self.name}: zero and one coincide")

    def __repr__(self) -> str:
        return f"Semiring({self.name})"

    @property
    def finite(self) -> bool:
        return self.enumeration is not None

    def elements(self) -> list:
        return enumerate_elements(self)

    def sum(self, xs: Iterable) -> Any:
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def prod(self, xs: Iterable) -> Any:
        acc = self.one
        for x in xs:
            acc = self.mul(acc, x)
        return acc

    def times(self, n: int, a) -> Any:
        """n-fold sum a + ... + a for a natural number n."""
        if n < 0:
            raise ParameterError("negative multiplicity")
        if self.kind == "naturals":
            return n * a
        if n == 0:
            return self.zero
        if self.additively_idempotent:
            return a
        result, base = self.zero, a
        while n:
            if n & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            n >>= 1
        return result

    def natural(self, n: int) -> Any:
        return self.times(n, self.one)

    def power(self, a, n: int) -> Any:
        result = self.one
        for _ in range(n):
            result = self.mul(result, a)
        return result

    def neg(self, a):
        """Additive inverse, or ``None`` if ``a`` has none."""
        if a == self.zero:
            return self.zero
        if self.kind == "naturals" or self.enumeration is None:
            return None
        for b in self.enumeration:
            if self.add(a, b) == self.zero:
                return b
        return None

    @property
    def is_ring(self) -> bool:
        if self.enumeration is None:
            return False
        return all(self.neg(a) is not None for a in self.enumeration)

    def from_int(self, k: int):
        """Image of an integer; negative values need additive inverses."""
        if k >= 0:
            return self.natural(k)
        v = self.neg(self.natural(-k))
        if v is None:
            raise UnsupportedError(f"{self.name} has no additive inverse for {-k}")
        return v

    def parse(self, token) -> Any:
        if self.parse_token is not None:
            return self.parse_token(token)
        return token

    def fmt(self, value) -> str:
        if self.format_value is not None:
            return self.format_value(value)
        return str(value)

    def contains(self, value) -> bool:
        if self.enumeration is None:
            return True
        return value in self.enumeration


# -- builtins ----------------------------------------------------------------


def _parse_natural(token) -> int:
    if isinstance(token, bool):
        raise ParameterError(f"not a natural number: {token!r}")
    if isinstance(token, int):
        v = token
    else:
        try:
            v = int(str(token).strip())
        except ValueError:
            raise ParameterError(f"not a natural number: {token!r}") from None
    if v < 0:
        raise ParameterError(f"not a natural number: {token!r}")
    return v


def naturals() -> Semiring:
    return Semiring(
        "naturals",
        add=lambda a, b: a + b,
        mul=lambda a, b: a * b,
        zero=0,
        one=1,
        kind="naturals",
        parse_token=_parse_natural,
        sampler=lambda rng: rng.choice([rng.randrange(0, 6), rng.randrange(0, 10**30)]),
    )


def _parse_from(carrier: Sequence, show: Callable[[Any], str], name: str):
    lookup = {show(v): v for v in carrier}

    def parse(token):
        if not isinstance(token, str) and token in carrier and not isinstance(token, bool):
            return token
        key = str(token).strip()
        if key not in lookup:
            raise ParameterError(f"coefficient {token!r} is not an element of {name}")
        return lookup[key]

    return parse


def boolean() -> Semiring:
    carrier = (0, 1)
    return Semiring(
        "boolean",
        add=lambda a, b: a | b,
        mul=lambda a, b: a & b,
        zero=0,
        one=1,
        enumeration=carrier,
        additively_idempotent=True,
        kind="boolean",
        parse_token=_parse_from(carrier, str, "boolean"),
    )


def _show_xn(v) -> str:
    return "-inf" if v == NEG_INF else str(v)


def xn(n: int) -> Semiring:
    if not isinstance(n, int) or n < 1:
        raise ParameterError("X_n needs n >= 1")
    carrier = (NEG_INF,) + tuple(range(n + 1))
    name = f"X{n}"
    return Semiring(
        name,
        add=max,
        mul=lambda a, b: min(a + b, n),
        zero=NEG_INF,
        one=0,
        enumeration=carrier,
        additively_idempotent=True,
        kind="xn",
        param=n,
        parse_token=_parse_from(carrier, _show_xn, name),
        format_value=_show_xn,
    )


def _show_set(v: frozenset) -> str:
    return "{" + ",".join(str(i) for i in sorted(v)) + "}"


def subset_lattice(size: int) -> Semiring:
    if not isinstance(size, int) or size < 1:
        raise ParameterError("subset lattice needs a ground set of size >= 1")
    ground = tuple(range(size))
    carrier = tuple(
        frozenset(c) for r in range(size + 1) for c in itertools.combinations(ground, r)
    )
    name = f"subsets{size}"
    return Semiring(
        name,
        add=lambda a, b: a | b,
        mul=lambda a, b: a & b,
        zero=frozenset(),
        one=frozenset(ground),
        enumeration=carrier,
        additively_idempotent=True,
        kind="subset_lattice",
        param=size,
        parse_token=_parse_from(carrier, _show_set, name),
        format_value=_show_set,
    )


def make_builtin_semiring(kind: str, param: int | None = None) -> Semiring:
    if kind == "naturals":
        return naturals()
    if kind == "boolean":
        return boolean()
    if kind == "xn":
        if param is None:
            raise ParameterError("xn needs a parameter n >= 1")
        return xn(param)
    if kind == "subset_lattice":
        if param is None:
            raise ParameterError("subset_lattice needs the ground set size")
        return subset_lattice(param)
    raise ParameterError(f"unknown builtin semiring {kind!r}")


def finite_semiring(
    name: str,
    carrier: Sequence,
    add_table,
    mul_table,
    zero,
    one,
) -> Semiring:
    """Semiring given by explicit operation tables over a finite carrier.

    Tables are either ``dict[(a, b)] -> c`` or row-major nested lists indexed by
    carrier position.  No axioms are assumed; run :func:`semiring_axiom_check`.
    """
    carrier = tuple(carrier)
    if len(set(carrier)) != len(carrier):
        raise ParameterError("carrier has repeated elements")
    add = _table_op(carrier, add_table, "add")
    mul = _table_op(carrier, mul_table, "mul")
    if zero not in carrier or one not in carrier:
        raise ParameterError("zero and one must belong to the carrier")
    idem = all(add[(a, a)] == a for a in carrier if (a, a) in add)
    return Semiring(
        name,
        add=lambda a, b: add[(a, b)],
        mul=lambda a, b: mul[(a, b)],
        zero=zero,
        one=one,
        enumeration=carrier,
        additively_idempotent=idem and add.get((one, one)) == one,
        kind="custom",
        parse_token=_parse_from(carrier, str, name),
        tables={"add": add, "mul": mul},
    )


def _table_op(carrier, table, what) -> dict:
    if isinstance(table, dict):
        return dict(table)
    n = len(carrier)
    if len(table) != n or any(len(row) != n for row in table):
        raise ParameterError(f"{what} table must be {n}x{n}")
    return {(carrier[i], carrier[j]): table[i][j] for i in range(n) for j in range(n)}


def integers_mod(m: int) -> Semiring:
    """The ring Z/m as a table-defined finite semiring."""
    if m < 2:
        raise ParameterError("Z/m needs m >= 2")
    carrier = tuple(range(m))
    add = [[(a + b) % m for b in carrier] for a in carrier]
    mul = [[(a * b) % m for b in carrier] for a in carrier]
    s = finite_semiring(f"Z{m}", carrier, add, mul, 0, 1)
    return s


def enumerate_elements(s: Semiring) -> list:
    if s.enumeration is None:
        raise UnsupportedError(f"{s.name} is infinite; no enumeration")
    return list(s.enumeration)


# -- axiom self-check --------------------------------------------------------


def semiring_axiom_check(s: Semiring, budget: int = 4096, seed: int = DEFAULT_SEED) -> CheckReport:
    if budget < 1:
        raise ParameterError("budget must be >= 1")
    report = CheckReport(f"semiring axioms for {s.name}")
    report.expect("zero != one", (), s.zero != s.one, True)

    if s.enumeration is not None:
        carrier = set(s.enumeration)
        for a in (s.zero, s.one):
            report.expect("zero/one in carrier", (s.fmt(a),), a in carrier, True)
        for a, b in itertools.product(s.enumeration, repeat=2):
            for law, op in (("add closed", s.add), ("mul closed", s.mul)):
                v = op(a, b)
                if v not in carrier:
                    report.fail(law, (s.fmt(a), s.fmt(b)), v, "carrier element")
        if not report.passed:
            return report

    if s.enumeration is not None and len(s.enumeration) ** 3 <= budget:
        triples: Iterable = itertools.product(s.enumeration, repeat=3)
        report.notes.append(f"exhaustive over {len(s.enumeration) ** 3} triples")
    else:
        rng = random.Random(seed)
        report.seed = seed
        if s.enumeration is not None:
            pool = s.enumeration
            draw = lambda: rng.choice(pool)  # noqa: E731
        elif s.sampler is not None:
            draw = lambda: s.sampler(rng)  # noqa: E731
        else:
            raise UnsupportedError(f"{s.name} has neither enumeration nor sampler")
        triples = [(draw(), draw(), draw()) for _ in range(budget)]

    add, mul, zero, one = s.add, s.mul, s.zero, s.one
    for a, b, c in triples:
        args = (s.fmt(a), s.fmt(b), s.fmt(c))
        report.expect("add associative", args, add(add(a, b), c), add(a, add(b, c)))
        report.expect("add commutative", args, add(a, b), add(b, a))
        report.expect("mul associative", args, mul(mul(a, b), c), mul(a, mul(b, c)))
        report.expect("mul commutative", args, mul(a, b), mul(b, a))
        report.expect("distributive", args, mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
        report.expect("zero absorbing", args, mul(a, zero), zero)
        report.expect("one unit", args, mul(a, one), a)
        report.expect("zero unit", args, add(a, zero), a)
    if s.additively_idempotent:
        report.expect("1 + 1 = 1", (), add(one, one), one)
    return report
