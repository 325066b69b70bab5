"""Quotient carriers: equality oracles for presented semimodules.

Four modes are supported:

``free``
    structural equality.
``normalizer``
    equality of normal forms under an idempotent normalizer.
``lattice``
    relations ``r ~ 0`` over the naturals or a finite ring.  Two vectors are
    identified iff their difference lies in the subgroup spanned by the
    relations, decided through an integer image of each basis element.  Tensor
    powers are handled by multiplying images factorwise.
``finite_congruence``
    union-find saturation of the full finite carrier.
"""
from __future__ import annotations

import itertools
import random
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ConfigurationError, ParameterError, SizeError, UnsupportedError
from .report import CheckReport
from .semimodule import LinearMap, Pair, Vector, lin_apply, sort_key, tensor_vec
from .semiring import DEFAULT_SEED, Semiring

DEFAULT_GUARD = 65536


class QuotientSpec:
    mode = "free"
    generators: list = []

    def equal(self, u: Vector, v: Vector) -> bool:
        return u == v

    def handles_tensors(self) -> bool:
        return True

    def relations(self, d: int | None = None) -> list:
        """Generator pairs, enumerated up to degree ``d`` when given lazily."""
        g = self.generators
        return list(g(4 if d is None else d)) if callable(g) else list(g)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.mode})"


FREE = QuotientSpec()


class NormalizerQuotient(QuotientSpec):
    """Equality through a user-supplied normal form."""

    mode = "normalizer"

    def __init__(self, normalizer: Callable[[Vector], Vector], semiring: Semiring,
                 basis: Sequence = (), generators: Sequence = (), name: str = "normalizer"):
        self.normalize = normalizer
        self.semiring = semiring
        self.basis = list(basis)
        self.generators = list(generators)
        self.name = name

    def equal(self, u: Vector, v: Vector) -> bool:
        return self.normalize(u) == self.normalize(v)

    def handles_tensors(self) -> bool:
        return False


def _int_terms_add(acc: dict, key, value) -> None:
    v = acc.get(key, 0) + value
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class LatticeQuotient(QuotientSpec):
    """Quotient by null relations, decided in the group completion.

    ``image(b)`` returns ``{representative: integer}``: the class of ``b``
    written over a set of representatives, as in the ring obtained by adding
    negatives.  Over the naturals the congruence generated by relations
    ``r ~ 0`` identifies ``u`` and ``v`` exactly when ``u - v`` is an integer
    combination of relations, so comparing images is a complete test.  Over a
    finite ring the same holds with the ring's own integers.

    When every image is ``±1`` times a representative and ``partner`` names a
    basis element of sign ``-1`` for each representative, :meth:`normalize`
    returns the canonical form (min-subtraction on disjoint pairs).
    """

    def __init__(self, semiring: Semiring, image: Callable[[object], Mapping],
                 generators: Sequence = (), partner: Mapping | None = None,
                 name: str = "lattice"):
        if semiring.kind != "naturals" and not semiring.is_ring:
            raise UnsupportedError(
                f"null relations over {semiring.name} need the naturals or a ring; "
                + "; ".join(idempotent_collapse(semiring, generators if not callable(generators) else generators(1)))
            )
        self.semiring = semiring
        self._image = image
        self._cache: dict = {}
        self.generators = generators if callable(generators) else list(generators)
        self.partner = partner
        self.name = name
        self.mode = "normalizer" if partner is not None else "lattice"

    def basis_image(self, b) -> dict:
        cache = self._cache
        if b in cache:
            return cache[b]
        if isinstance(b, Pair):
            left, right = self.basis_image(b.left), self.basis_image(b.right)
            out: dict = {}
            for a, m in left.items():
                for c, n in right.items():
                    _int_terms_add(out, Pair(a, c), m * n)
        else:
            out = {k: v for k, v in self._image(b).items() if v}
        cache[b] = out
        return out

    def image(self, v: Vector) -> dict:
        S = self.semiring
        if S.kind == "naturals":
            acc: dict = {}
            for b, c in v.terms.items():
                for r, k in self.basis_image(b).items():
                    _int_terms_add(acc, r, c * k)
            return acc
        acc = {}
        zero, add, mul = S.zero, S.add, S.mul
        for b, c in v.terms.items():
            for r, k in self.basis_image(b).items():
                x = mul(c, S.from_int(k))
                acc[r] = add(acc[r], x) if r in acc else x
        return {r: c for r, c in acc.items() if c != zero}

    def equal(self, u: Vector, v: Vector) -> bool:
        return self.image(u) == self.image(v)

    def _partner(self, r):
        if isinstance(r, Pair):
            try:
                return Pair(self._partner(r.left), r.right)
            except (KeyError, UnsupportedError):
                return Pair(r.left, self._partner(r.right))
        return self.partner[r]

    def normalize(self, v: Vector) -> Vector:
        if self.partner is None:
            raise UnsupportedError("this quotient has no canonical normal form")
        S = self.semiring
        img = self.image(v)
        if S.kind != "naturals":
            return Vector(S, img, canonical=True)
        terms = {}
        for r, k in img.items():
            if k > 0:
                terms[r] = k
            else:
                terms[self._partner(r)] = -k
        return Vector(S, terms, canonical=True)


def null_pairs(semiring: Semiring, pairs: Sequence[tuple], name: str = "null pairs") -> LatticeQuotient:
    """Relations ``x + y ~ 0`` on disjoint basis coordinates (y counts as -x)."""
    sign = {}
    partner = {}
    for x, y in pairs:
        if x in sign or y in sign or x == y:
            raise ParameterError("null pairs must be disjoint")
        sign[x] = (x, 1)
        sign[y] = (x, -1)
        partner[x] = y
    gens = [(Vector.sum_of(semiring, [x, y]), Vector.zero(semiring)) for x, y in pairs]

    def image(b):
        r, s = sign.get(b, (b, 1))
        return {r: s}

    full_partner = _DefaultPartner(partner)
    return LatticeQuotient(semiring, image, gens, full_partner, name)


class _DefaultPartner(dict):
    def __missing__(self, key):
        raise UnsupportedError(f"no negative partner for {key.pretty()}")


def signed_quotient(semiring: Semiring, sign_of: Callable[[object], tuple],
                    partner_of: Callable[[object], object], generators: Sequence = (),
                    name: str = "signed") -> LatticeQuotient:
    """Lattice quotient where each basis element is ``±`` a representative."""

    def image(b):
        r, s = sign_of(b)
        return {r: s} if s else {}

    class _Partner(dict):
        def __missing__(self, key):
            return partner_of(key)

    return LatticeQuotient(semiring, image, generators, _Partner(), name)


def idempotent_collapse(semiring: Semiring, generators: Iterable) -> list[str]:
    """Diagnose relations ``u ~ 0`` that kill every term over idempotent bases."""
    if not semiring.additively_idempotent:
        return []
    out = []
    for u, v in generators:
        if v.is_zero():
            for b in u.support():
                out.append(f"{b.pretty()} ~ 0 (since {u.pretty()} ~ 0 and a + a = a)")
    return out


# -- finite congruence closure -----------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb


class CongruenceQuotient(QuotientSpec):
    """Smallest translation- and scalar-closed equivalence containing the generators."""

    mode = "finite_congruence"

    def __init__(self, basis: Sequence, semiring: Semiring, generators: Sequence, guard: int = DEFAULT_GUARD):
        if semiring.enumeration is None:
            raise UnsupportedError("finite congruence needs a finite semiring")
        self.basis = list(basis)
        self.semiring = semiring
        self.generators = list(generators)
        elems = semiring.enumeration
        required = len(elems) ** len(self.basis)
        if required > guard:
            raise SizeError(required, guard, "congruence closure")
        self._pos = {b: i for i, b in enumerate(self.basis)}
        self._elems = elems
        self._eidx = {e: i for i, e in enumerate(elems)}
        self.carrier = [tuple(c) for c in itertools.product(elems, repeat=len(self.basis))]
        self._index = {c: i for i, c in enumerate(self.carrier)}
        self._uf = _UnionFind(len(self.carrier))
        self.guard = guard
        self._powers: dict[int, CongruenceQuotient] = {}
        self._saturate()

    def _coords(self, v: Vector) -> tuple:
        zero = self.semiring.zero
        coords = [zero] * len(self.basis)
        for b, c in v.terms.items():
            if b not in self._pos:
                raise ConfigurationError(f"{b.pretty()} is outside the finite carrier")
            coords[self._pos[b]] = c
        return tuple(coords)

    def vector(self, coords: tuple) -> Vector:
        return Vector(self.semiring, zip(self.basis, coords))

    def _saturate(self) -> None:
        S = self.semiring
        add, mul = S.add, S.mul
        index, uf = self._index, self._uf
        for u, v in self.generators:
            cu, cv = self._coords(u), self._coords(v)
            for s in self._elems:
                su = tuple(mul(s, x) for x in cu)
                sv = tuple(mul(s, x) for x in cv)
                for w in self.carrier:
                    a = tuple(add(x, y) for x, y in zip(su, w))
                    b = tuple(add(x, y) for x, y in zip(sv, w))
                    uf.union(index[a], index[b])

    def class_id(self, v: Vector) -> int:
        return self._uf.find(self._index[self._coords(v)])

    def equal(self, u: Vector, v: Vector) -> bool:
        base = self._pos
        k = max((len(_leaves(b, base)) for b in list(u.terms) + list(v.terms)), default=1)
        if k == 1:
            return self.class_id(u) == self.class_id(v)
        power = self.tensor_power(k)
        return power.equal(_right_nested(u, base), _right_nested(v, base))

    def handles_tensors(self) -> bool:
        return len(self._elems) ** (len(self.basis) ** 3) <= self.guard

    def tensor_power(self, k: int) -> CongruenceQuotient:
        """The induced congruence on the k-fold tensor power (right-nested pairs).

        Generated by placing each relation in every tensor slot, with basis
        elements in the remaining slots.
        """
        if k in self._powers:
            return self._powers[k]
        S = self.semiring
        slots = list(itertools.product(self.basis, repeat=k - 1))
        gens = []
        for u, v in self.generators:
            for i in range(k):
                for rest in slots:
                    before = [Vector.basis(S, b) for b in rest[:i]]
                    after = [Vector.basis(S, b) for b in rest[i:]]
                    gens.append((_nest(before + [u] + after), _nest(before + [v] + after)))
        carrier = [_nest_labels(t) for t in itertools.product(self.basis, repeat=k)]
        power = CongruenceQuotient(carrier, S, gens, self.guard)
        self._powers[k] = power
        return power

    def classes(self) -> list[list[Vector]]:
        groups: dict = {}
        for i, c in enumerate(self.carrier):
            groups.setdefault(self._uf.find(i), []).append(self.vector(c))
        return [groups[k] for k in sorted(groups)]


def _leaves(b, base) -> list:
    if b in base or not isinstance(b, Pair):
        return [b]
    return _leaves(b.left, base) + _leaves(b.right, base)


def _nest_labels(labels) -> object:
    out = labels[-1]
    for b in reversed(labels[:-1]):
        out = Pair(b, out)
    return out


def _nest(vectors: list[Vector]) -> Vector:
    out = vectors[-1]
    for v in reversed(vectors[:-1]):
        out = tensor_vec(v, out)
    return out


def _right_nested(v: Vector, base) -> Vector:
    return Vector(v.semiring, [(_nest_labels(_leaves(b, base)), c) for b, c in v.terms.items()])


def congruence_closure(basis: Sequence, s: Semiring, generators: Sequence,
                       guard: int = DEFAULT_GUARD) -> CongruenceQuotient:
    return CongruenceQuotient(basis, s, generators, guard)


# -- checks ------------------------------------------------------------------


def _sample_coeff(S: Semiring, rng: random.Random):
    if S.enumeration is not None:
        return rng.choice(S.enumeration)
    if S.kind == "naturals":
        return rng.randrange(0, 6)
    return S.sampler(rng)


def sample_vectors(S: Semiring, basis: Sequence, count: int, seed: int = DEFAULT_SEED) -> list[Vector]:
    rng = random.Random(seed)
    out = [Vector.zero(S)]
    out.extend(Vector.basis(S, b, S.natural(2)) for b in basis)
    while len(out) < count:
        out.append(Vector(S, [(b, _sample_coeff(S, rng)) for b in basis]))
    return out[:count]


def check_normalizer(q: NormalizerQuotient | LatticeQuotient, samples: int = 64,
                     seed: int = DEFAULT_SEED) -> CheckReport:
    report = CheckReport(f"normalizer laws ({getattr(q, 'name', q.mode)})", seed=seed)
    n = q.normalize
    S = q.semiring
    basis = getattr(q, "basis", None) or sorted(
        {b for u, v in q.relations() for b in list(u.terms) + list(v.terms)}, key=sort_key
    )
    vecs = sample_vectors(S, basis, samples, seed)
    rng = random.Random(seed + 1)
    report.expect("n(0) = 0", (), n(Vector.zero(S)), Vector.zero(S))
    for v in vecs:
        report.expect("n(n(v)) = n(v)", (v,), n(n(v)), n(v))
    for _ in range(samples):
        u, v = rng.choice(vecs), rng.choice(vecs)
        report.expect("n(u+v) = n(n(u)+n(v))", (u, v), n(u + v), n(n(u) + n(v)))
        s = _sample_coeff(S, rng)
        report.expect("n(s·v) = n(s·n(v))", (S.fmt(s), v), n(v.scale(s)), n(n(v).scale(s)))
    return report


def check_quotient_compat(map_: LinearMap, q: QuotientSpec, probe_basis: Sequence,
                          binary: bool = False, target: QuotientSpec | None = None,
                          functional=None) -> CheckReport:
    """Well-definedness of a structure map on a quotient.

    ``map_`` is a :class:`LinearMap` (or ``None`` with ``functional`` given for
    maps into the base semiring).  ``target`` decides equality of outputs and
    defaults to ``q``.
    """
    if q.mode == "free":
        report = CheckReport(f"quotient compatibility of {getattr(map_, 'name', 'map')}")
        report.notes.append("free quotient: nothing to check")
        return report
    name = functional.name if functional is not None else map_.name
    report = CheckReport(f"quotient compatibility of {name}")
    tgt = q if target is None else target
    S = q.semiring

    if functional is not None:
        evaluate = functional
        equal = lambda a, b: a == b  # noqa: E731
    else:
        evaluate = lambda v: lin_apply(map_, v)  # noqa: E731
        equal = tgt.equal

    def guarded_equal(a, b):
        try:
            return equal(a, b)
        except (ConfigurationError, KeyError):
            raise ConfigurationError(f"target of {name} lacks a usable quotient equality") from None

    depth = max((b.degree for b in probe_basis), default=0)
    for u, v in q.relations(depth):
        if not binary:
            report.expect("f(u) ~ f(v)", (u, v), evaluate(u), evaluate(v), guarded_equal)
            continue
        for b in probe_basis:
            w = Vector.basis(S, b)
            report.expect("f(u⊗w) ~ f(v⊗w)", (u, v, b), evaluate(tensor_vec(u, w)),
                          evaluate(tensor_vec(v, w)), guarded_equal)
            report.expect("f(w⊗u) ~ f(w⊗v)", (b, u, v), evaluate(tensor_vec(w, u)),
                          evaluate(tensor_vec(w, v)), guarded_equal)
    return report
