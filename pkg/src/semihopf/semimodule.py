"""Finitely supported vectors over symbolic graded bases, linear maps, tensors.

Basis elements are small frozen dataclasses; tensor bases are nested
:class:`Pair` values.  A :class:`Vector` keeps its terms in canonical sparse
form (no zero coefficients), so structural equality is term-by-term equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from .errors import BasisKindError, DomainError, SemiringMismatch
from .semiring import Semiring


# -- basis elements ----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Atom:
    name: str
    deg: int = field(default=0, compare=False)

    @property
    def degree(self) -> int:
        return self.deg

    def pretty(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Power:
    var: str
    exp: int

    @property
    def degree(self) -> int:
        return abs(self.exp)

    def pretty(self) -> str:
        return f"{self.var}^{self.exp}"


@dataclass(frozen=True, slots=True)
class Word:
    letters: tuple

    @property
    def degree(self) -> int:
        return len(self.letters)

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)

    def pretty(self) -> str:
        return "[" + ",".join(str(a) for a in self.letters) + "]"


@dataclass(frozen=True, slots=True)
class Pair:
    left: Any
    right: Any

    @property
    def degree(self) -> int:
        return self.left.degree + self.right.degree

    def pretty(self) -> str:
        return f"{_wrap(self.left)}⊗{_wrap(self.right)}"


@dataclass(frozen=True, slots=True)
class Dual:
    """Dual basis functional b*."""

    of: Any

    @property
    def degree(self) -> int:
        return self.of.degree

    def pretty(self) -> str:
        return f"{_wrap(self.of)}*"


def _wrap(b) -> str:
    s = b.pretty()
    return f"({s})" if isinstance(b, Pair) else s


EMPTY_WORD = Word(())


def word(*letters) -> Word:
    return Word(tuple(letters))


def degree(b) -> int:
    return b.degree


def _letter_key(a):
    return (0, a, "") if isinstance(a, int) else (1, 0, str(a))


def sort_key(b) -> tuple:
    if isinstance(b, Atom):
        return (0, b.deg, b.name)
    if isinstance(b, Power):
        return (1, b.var, abs(b.exp), b.exp)
    if isinstance(b, Word):
        return (2, len(b.letters), tuple(_letter_key(a) for a in b.letters))
    if isinstance(b, Pair):
        return (3, sort_key(b.left), sort_key(b.right))
    if isinstance(b, Dual):
        return (4, sort_key(b.of))
    return (9, repr(b))


# -- carriers ----------------------------------------------------------------


class Basis:
    """A (possibly infinite) graded basis with deterministic enumeration."""

    finite = False

    def elements(self, max_degree: int | None = None) -> list:
        raise NotImplementedError

    def __contains__(self, b) -> bool:
        return b in set(self.elements(b.degree))


class FiniteBasis(Basis):
    finite = True

    def __init__(self, elements: Iterable):
        self._elements = list(elements)
        self._set = set(self._elements)
        if len(self._set) != len(self._elements):
            raise BasisKindError("repeated basis element")

    def elements(self, max_degree: int | None = None) -> list:
        if max_degree is None:
            return list(self._elements)
        return [b for b in self._elements if b.degree <= max_degree]

    def __contains__(self, b) -> bool:
        return b in self._set

    def __len__(self) -> int:
        return len(self._elements)

    def __repr__(self) -> str:
        return "FiniteBasis(" + ", ".join(b.pretty() for b in self._elements) + ")"


class PowerBasis(Basis):
    """x^0, x^1, ... (or all integer powers when ``laurent``)."""

    def __init__(self, var: str = "x", laurent: bool = False):
        self.var = var
        self.laurent = laurent

    def elements(self, max_degree: int | None = None) -> list:
        if max_degree is None:
            raise BasisKindError("infinite basis needs a degree bound")
        out = [Power(self.var, 0)]
        for n in range(1, max_degree + 1):
            out.append(Power(self.var, n))
            if self.laurent:
                out.append(Power(self.var, -n))
        return out

    def __contains__(self, b) -> bool:
        return isinstance(b, Power) and b.var == self.var and (self.laurent or b.exp >= 0)


class WordBasis(Basis):
    """Words over an ordered alphabet, enumerated length-lexicographically."""

    def __init__(self, alphabet: Sequence):
        self.alphabet = tuple(alphabet)

    def elements(self, max_degree: int | None = None) -> list:
        if max_degree is None:
            raise BasisKindError("infinite basis needs a degree bound")
        out = []
        for n in range(max_degree + 1):
            out.extend(Word(p) for p in itertools.product(self.alphabet, repeat=n))
        return out

    def __contains__(self, b) -> bool:
        return isinstance(b, Word) and all(a in self.alphabet for a in b.letters)


class GeneratedBasis(Basis):
    """Infinite basis described by a degree-bounded enumeration function."""

    def __init__(self, enumerate_upto: Callable[[int], list], member: Callable[[Any], bool]):
        self._enum = enumerate_upto
        self._member = member

    def elements(self, max_degree: int | None = None) -> list:
        if max_degree is None:
            raise BasisKindError("infinite basis needs a degree bound")
        return self._enum(max_degree)

    def __contains__(self, b) -> bool:
        return self._member(b)


def pair_elements(left: Sequence, right: Sequence) -> list:
    return [Pair(a, b) for a in left for b in right]


# -- vectors -----------------------------------------------------------------


def same_semiring(a: Semiring, b: Semiring) -> bool:
    return a is b or a.name == b.name


class Vector:
    """Finitely supported S-linear combination of basis elements."""

    __slots__ = ("semiring", "terms")

    def __init__(self, semiring: Semiring, terms: Mapping | Iterable = (), *, canonical: bool = False):
        self.semiring = semiring
        if canonical:
            self.terms = terms
        else:
            zero = semiring.zero
            acc: dict = {}
            items = terms.items() if isinstance(terms, Mapping) else terms
            add = semiring.add
            for b, c in items:
                acc[b] = add(acc[b], c) if b in acc else c
            self.terms = {b: c for b, c in acc.items() if c != zero}

    @classmethod
    def zero(cls, semiring: Semiring) -> Vector:
        return cls(semiring, {}, canonical=True)

    @classmethod
    def basis(cls, semiring: Semiring, b, coeff=None) -> Vector:
        c = semiring.one if coeff is None else coeff
        if c == semiring.zero:
            return cls.zero(semiring)
        return cls(semiring, {b: c}, canonical=True)

    @classmethod
    def sum_of(cls, semiring: Semiring, basis_elements: Iterable) -> Vector:
        return cls(semiring, [(b, semiring.one) for b in basis_elements])

    def _check(self, other: Vector) -> None:
        if not same_semiring(self.semiring, other.semiring):
            raise SemiringMismatch(f"{self.semiring.name} vs {other.semiring.name}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        s = self.semiring
        acc = dict(self.terms)
        zero, add = s.zero, s.add
        for b, c in other.terms.items():
            if b in acc:
                v = add(acc[b], c)
                if v == zero:
                    del acc[b]
                else:
                    acc[b] = v
            else:
                acc[b] = c
        return Vector(s, acc, canonical=True)

    def scale(self, s) -> Vector:
        S = self.semiring
        if s == S.one:
            return self
        zero, mul = S.zero, S.mul
        acc = {}
        for b, c in self.terms.items():
            v = mul(s, c)
            if v != zero:
                acc[b] = v
        return Vector(S, acc, canonical=True)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return same_semiring(self.semiring, other.semiring) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def items(self) -> list:
        return sorted(self.terms.items(), key=lambda t: sort_key(t[0]))

    def coeff(self, b):
        return self.terms.get(b, self.semiring.zero)

    def support(self) -> list:
        return sorted(self.terms, key=sort_key)

    def is_zero(self) -> bool:
        return not self.terms

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        S = self.semiring
        parts = []
        for b, c in self.items():
            label = _wrap(b) if isinstance(b, Pair) and len(self.terms) > 1 else b.pretty()
            parts.append(label if c == S.one else f"{S.fmt(c)}·{label}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Vector({self.pretty()})"


def vec_add(u: Vector, v: Vector) -> Vector:
    return u + v


def scalar_mul(s, v: Vector) -> Vector:
    return v.scale(s)


def vsum(semiring: Semiring, vectors: Iterable[Vector]) -> Vector:
    acc: dict = {}
    zero, add = semiring.zero, semiring.add
    for v in vectors:
        if not same_semiring(v.semiring, semiring):
            raise SemiringMismatch(f"{semiring.name} vs {v.semiring.name}")
        for b, c in v.terms.items():
            acc[b] = add(acc[b], c) if b in acc else c
    return Vector(semiring, {b: c for b, c in acc.items() if c != zero}, canonical=True)


def tensor_vec(u: Vector, v: Vector) -> Vector:
    u._check(v)
    S = u.semiring
    mul, zero = S.mul, S.zero
    acc = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            x = mul(c, d)
            if x != zero:
                acc[Pair(a, b)] = x
    return Vector(S, acc, canonical=True)


def tensor_all(vectors: Sequence[Vector]) -> Vector:
    """Right-nested tensor v1 ⊗ (v2 ⊗ (...))."""
    out = vectors[-1]
    for v in reversed(vectors[:-1]):
        out = tensor_vec(v, out)
    return out


def _need_pair(b) -> Pair:
    if not isinstance(b, Pair):
        raise BasisKindError(f"expected a tensor basis element, got {b!r}")
    return b


def twist(v: Vector) -> Vector:
    acc = {}
    for b, c in v.terms.items():
        p = _need_pair(b)
        acc[Pair(p.right, p.left)] = c
    return Vector(v.semiring, acc, canonical=True)


def assoc_right(v: Vector) -> Vector:
    """((a⊗b)⊗c) -> (a⊗(b⊗c))."""
    acc = {}
    for b, c in v.terms.items():
        left = _need_pair(_need_pair(b).left)
        acc[Pair(left.left, Pair(left.right, b.right))] = c
    return Vector(v.semiring, acc, canonical=True)


def assoc_left(v: Vector) -> Vector:
    """(a⊗(b⊗c)) -> ((a⊗b)⊗c)."""
    acc = {}
    for b, c in v.terms.items():
        right = _need_pair(_need_pair(b).right)
        acc[Pair(Pair(b.left, right.left), right.right)] = c
    return Vector(v.semiring, acc, canonical=True)


# -- linear maps -------------------------------------------------------------


class LinearMap:
    """Linear extension of a basis assignment ``b -> Vector``.

    ``assign`` may be a mapping or a callable; callables may raise
    :class:`KeyError` (or return ``None``) to signal an undefined value.
    """

    def __init__(self, semiring: Semiring, assign, name: str = "map", cache: bool = True):
        self.semiring = semiring
        self.name = name
        self._assign = assign
        self._cache: dict | None = {} if cache else None

    def on_basis(self, b) -> Vector:
        cache = self._cache
        if cache is not None and b in cache:
            return cache[b]
        try:
            if isinstance(self._assign, Mapping):
                out = self._assign[b]
            else:
                out = self._assign(b)
        except DomainError:
            raise
        except KeyError:
            raise DomainError(b, self.name) from None
        if out is None:
            raise DomainError(b, self.name)
        if cache is not None:
            cache[b] = out
        return out

    def __call__(self, v: Vector) -> Vector:
        return lin_apply(self, v)

    def __repr__(self) -> str:
        return f"LinearMap({self.name})"


def lin_apply(f: LinearMap, v: Vector) -> Vector:
    S = v.semiring
    if not same_semiring(S, f.semiring):
        raise SemiringMismatch(f"{f.name} is over {f.semiring.name}, vector over {S.name}")
    acc: dict = {}
    zero, add, mul, one = S.zero, S.add, S.mul, S.one
    for b, c in v.terms.items():
        img = f.on_basis(b)
        for t, d in img.terms.items():
            x = d if c == one else mul(c, d)
            acc[t] = add(acc[t], x) if t in acc else x
    return Vector(S, {b: c for b, c in acc.items() if c != zero}, canonical=True)


def compose(f: LinearMap, g: LinearMap, name: str | None = None) -> LinearMap:
    return LinearMap(f.semiring, lambda b: lin_apply(f, g.on_basis(b)), name or f"{f.name}∘{g.name}")


def identity_map(semiring: Semiring, name: str = "id") -> LinearMap:
    return LinearMap(semiring, lambda b: Vector.basis(semiring, b), name, cache=False)


def tensor_map(f: LinearMap, g: LinearMap, name: str | None = None) -> LinearMap:
    def assign(b):
        p = _need_pair(b)
        return tensor_vec(f.on_basis(p.left), g.on_basis(p.right))

    return LinearMap(f.semiring, assign, name or f"{f.name}⊗{g.name}")


def map_left(f: LinearMap, v: Vector) -> Vector:
    """(f ⊗ id)(v) on a pair-basis vector."""
    S = v.semiring
    parts = []
    for b, c in v.terms.items():
        p = _need_pair(b)
        img = f.on_basis(p.left)
        parts.append(Vector(S, {Pair(t, p.right): S.mul(c, d) for t, d in img.terms.items()}))
    return vsum(S, parts)


def map_right(f: LinearMap, v: Vector) -> Vector:
    """(id ⊗ f)(v) on a pair-basis vector."""
    S = v.semiring
    parts = []
    for b, c in v.terms.items():
        p = _need_pair(b)
        img = f.on_basis(p.right)
        parts.append(Vector(S, {Pair(p.left, t): S.mul(c, d) for t, d in img.terms.items()}))
    return vsum(S, parts)


class Functional:
    """S-linear map to the base semiring, given on basis elements."""

    def __init__(self, semiring: Semiring, assign, name: str = "f", default_zero: bool = False):
        self.semiring = semiring
        self.name = name
        self._assign = assign
        self.default_zero = default_zero

    def on_basis(self, b):
        try:
            if isinstance(self._assign, Mapping):
                return self._assign[b]
            out = self._assign(b)
        except KeyError:
            if self.default_zero:
                return self.semiring.zero
            raise DomainError(b, self.name) from None
        if out is None:
            if self.default_zero:
                return self.semiring.zero
            raise DomainError(b, self.name)
        return out

    def __call__(self, v: Vector):
        S = self.semiring
        if not same_semiring(S, v.semiring):
            raise SemiringMismatch(f"{self.name} is over {S.name}")
        acc = S.zero
        for b, c in v.terms.items():
            acc = S.add(acc, S.mul(c, self.on_basis(b)))
        return acc

    def as_dict(self, basis: Iterable) -> dict:
        return {b: self.on_basis(b) for b in basis}

    def pretty(self, basis: Iterable | None = None) -> str:
        S = self.semiring
        if basis is None and isinstance(self._assign, Mapping):
            basis = self._assign.keys()
        if basis is None:
            return self.name
        vals = [(b, self.on_basis(b)) for b in sorted(basis, key=sort_key)]
        parts = [
            f"{_wrap(b)}*" if c == S.one else f"{S.fmt(c)}·{_wrap(b)}*"
            for b, c in vals
            if c != S.zero
        ]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"Functional({self.name})"


def functional_from_dict(semiring: Semiring, values: Mapping, name: str = "f") -> Functional:
    """Finitely supported functional; zero off the given support."""
    return Functional(semiring, dict(values), name, default_zero=True)


def apply_left_functional(t: Functional, v: Vector) -> Vector:
    """(t ⊗ id)(v): Σ c·t(a)·b over terms c·(a⊗b)."""
    S = v.semiring
    return Vector(S, [(_need_pair(b).right, S.mul(c, t.on_basis(b.left))) for b, c in v.terms.items()])


def apply_right_functional(t: Functional, v: Vector) -> Vector:
    """(id ⊗ t)(v): Σ c·t(b)·a over terms c·(a⊗b)."""
    S = v.semiring
    return Vector(S, [(_need_pair(b).left, S.mul(c, t.on_basis(b.right))) for b, c in v.terms.items()])
