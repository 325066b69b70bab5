"""Builtin example structures.

Each builder returns a fully populated descriptor.  Quotient examples carry a
:class:`~semihopf.quotient.LatticeQuotient` so that relations such as
``x + y = 0`` are decided exactly over the naturals or a finite ring.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb, factorial
from typing import Any, Callable

from .errors import ParameterError, UnsupportedError
from .quotient import LatticeQuotient, signed_quotient
from .semimodule import (
    EMPTY_WORD,
    Atom,
    FiniteBasis,
    Functional,
    GeneratedBasis,
    LinearMap,
    Pair,
    Power,
    PowerBasis,
    Vector,
    Word,
    WordBasis,
)
from .semiring import (
    Semiring,
    boolean,
    integers_mod,
    naturals,
    subset_lattice,
    xn,
)
from .structures import (
    BisemialgebraDesc,
    HopfDesc,
    SemicoalgebraDesc,
    make_bisemialgebra,
    make_hopf,
)


def resolve_semiring(spec) -> Semiring:
    """Accept a :class:`Semiring` or a short name such as ``X2``, ``Z3``, ``subsets2``."""
    if isinstance(spec, Semiring):
        return spec
    name = str(spec).strip()
    low = name.lower()
    if low in ("naturals", "n", "nat"):
        return naturals()
    if low in ("boolean", "b", "bool"):
        return boolean()
    m = re.fullmatch(r"(?:x|xn:?)(\d+)", low)
    if m:
        return xn(int(m.group(1)))
    m = re.fullmatch(r"(?:subsets|subset_lattice:?)(\d+)", low)
    if m:
        return subset_lattice(int(m.group(1)))
    m = re.fullmatch(r"z(?:/)?(\d+)", low)
    if m:
        return integers_mod(int(m.group(1)))
    raise ParameterError(f"unknown semiring {spec!r}")


def _vec(S: Semiring, pairs) -> Vector:
    return Vector(S, [(b, S.one) for b in pairs])


def _int_vector(S: Semiring, terms: dict, rep: Callable, partner: Callable) -> Vector:
    """Vector from integer coefficients on representatives.

    Over a ring a coefficient ``k`` becomes ``from_int(k)``; over the naturals a
    negative coefficient moves to the negative partner of the representative
    (for tensor keys, of the first factor that has one).
    """
    out = []
    for key, k in terms.items():
        if k == 0:
            continue
        if S.kind != "naturals":
            out.append((_rep_of(key, rep), S.from_int(k)))
        elif k > 0:
            out.append((_rep_of(key, rep), k))
        else:
            out.append((_partner_of(key, rep, partner), -k))
    return Vector(S, out)


def _rep_of(key, rep):
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[0], tuple):
        return Pair(rep(key[0]), rep(key[1]))
    return rep(key)


def _partner_of(key, rep, partner):
    if isinstance(key, tuple) and len(key) == 2 and isinstance(key[0], tuple):
        left = partner(key[0])
        if left is not None:
            return Pair(left, rep(key[1]))
        right = partner(key[1])
        if right is None:
            raise UnsupportedError(f"no negative partner for {key!r}")
        return Pair(rep(key[0]), right)
    p = partner(key)
    if p is None:
        raise UnsupportedError(f"no negative partner for {key!r}")
    return p


# -- S itself and group semialgebras ------------------------------------------


ONE = Atom("1")


def trivial(semiring="boolean") -> HopfDesc:
    """The base semiring as a one-dimensional Hopf semialgebra."""
    S = resolve_semiring(semiring)
    e = Vector.basis(S, ONE)
    return make_hopf(
        "S", S, FiniteBasis([ONE]),
        mu=LinearMap(S, {Pair(ONE, ONE): e}, "μ"),
        eta=e,
        delta=LinearMap(S, {ONE: Vector.basis(S, Pair(ONE, ONE))}, "Δ"),
        epsilon=Functional(S, {ONE: S.one}, "ε"),
        antipode=LinearMap(S, {ONE: e}, "𝔞"),
    )


def group_element(n: int, k: int) -> Atom:
    k %= n
    return Atom("e" if k == 0 else ("g" if k == 1 else f"g{k}"))


def _group_parts(order: int, S: Semiring):
    if not isinstance(order, int) or order < 1:
        raise ParameterError("group order must be >= 1")
    elems = [group_element(order, k) for k in range(order)]
    index = {b: k for k, b in enumerate(elems)}

    def mu(p):
        return Vector.basis(S, group_element(order, index[p.left] + index[p.right]))

    return elems, index, mu


def group_hopf(order: int = 2, semiring="boolean") -> HopfDesc:
    """S[Z/n] with group-like comultiplication and antipode g -> g⁻¹."""
    S = resolve_semiring(semiring)
    elems, index, mu = _group_parts(order, S)
    return make_hopf(
        f"S[Z/{order}]", S, FiniteBasis(elems),
        mu=LinearMap(S, mu, "μ"),
        eta=Vector.basis(S, elems[0]),
        delta=LinearMap(S, lambda b: Vector.basis(S, Pair(b, b)), "Δ"),
        epsilon=Functional(S, lambda b: S.one, "ε"),
        antipode=LinearMap(S, lambda b: Vector.basis(S, group_element(order, -index[b])), "𝔞"),
    )


def group_primitive(order: int = 2, semiring="naturals") -> BisemialgebraDesc:
    """S[Z/n] with g -> g⊗e + e⊗g on non-identity elements (not a bisemialgebra)."""
    S = resolve_semiring(semiring)
    elems, index, mu = _group_parts(order, S)
    e = elems[0]

    def delta(b):
        if b == e:
            return Vector.basis(S, Pair(e, e))
        return _vec(S, [Pair(b, e), Pair(e, b)])

    return make_bisemialgebra(
        f"S[Z/{order}] primitive", S, FiniteBasis(elems),
        mu=LinearMap(S, mu, "μ"),
        eta=Vector.basis(S, e),
        delta=LinearMap(S, delta, "Δ"),
        epsilon=Functional(S, lambda b: S.one if b == e else S.zero, "ε"),
        notes=["expected to fail: the coproduct is not multiplicative on a finite group"],
    )


# -- polynomials -------------------------------------------------------------


def _poly_mu(S: Semiring):
    return LinearMap(S, lambda p: Vector.basis(S, Power(p.left.var, p.left.exp + p.right.exp)), "μ")


def poly_grouplike(semiring="boolean", var: str = "x") -> BisemialgebraDesc:
    S = resolve_semiring(semiring)
    return make_bisemialgebra(
        f"S[{var}] group-like", S, PowerBasis(var),
        mu=_poly_mu(S),
        eta=Vector.basis(S, Power(var, 0)),
        delta=LinearMap(S, lambda b: Vector.basis(S, Pair(b, b)), "Δ"),
        epsilon=Functional(S, lambda b: S.one, "ε"),
    )


def poly_binomial(semiring="boolean", var: str = "x") -> BisemialgebraDesc:
    """S[x] with x primitive: Δ(xⁱ) = Σ C(i,j) xʲ⊗x^(i-j), ε(xⁱ) = δ_{i,0}."""
    S = resolve_semiring(semiring)

    def delta(b):
        i = b.exp
        return Vector(S, [(Pair(Power(var, j), Power(var, i - j)), S.natural(comb(i, j)))
                          for j in range(i + 1)])

    return make_bisemialgebra(
        f"S[{var}] binomial", S, PowerBasis(var),
        mu=_poly_mu(S),
        eta=Vector.basis(S, Power(var, 0)),
        delta=LinearMap(S, delta, "Δ"),
        epsilon=Functional(S, lambda b: S.one if b.exp == 0 else S.zero, "ε"),
    )


def laurent(semiring="boolean", var: str = "x") -> HopfDesc:
    S = resolve_semiring(semiring)
    return make_hopf(
        f"S[{var},{var}⁻¹]", S, PowerBasis(var, laurent=True),
        mu=_poly_mu(S),
        eta=Vector.basis(S, Power(var, 0)),
        delta=LinearMap(S, lambda b: Vector.basis(S, Pair(b, b)), "Δ"),
        epsilon=Functional(S, lambda b: S.one, "ε"),
        antipode=LinearMap(S, lambda b: Vector.basis(S, Power(var, -b.exp)), "𝔞"),
    )


def hopf_quotient(a: int = 1, b: int = 2, semiring="naturals") -> HopfDesc:
    """S[x]/(bx + x²) with Δ(x) = x⊗1 + 1⊗x + a·x⊗x and 𝔞(x) = x; needs ab = 2."""
    S = resolve_semiring(semiring)
    if S.mul(S.from_int(a), S.from_int(b)) != S.natural(2):
        raise ParameterError("S[x]/(bx+x²) needs a·b = 1 + 1")
    var = "x"

    def image(p):
        k = p.exp
        if k == 0:
            return {p: 1}
        return {Power(var, 1): (-b) ** (k - 1)}

    def relations(d):
        return [
            (Vector(S, [(Power(var, k + 1), S.from_int(b)), (Power(var, k + 2), S.one)]), Vector.zero(S))
            for k in range(max(d - 1, 1))
        ]

    q = LatticeQuotient(S, image, relations, name=f"(bx+x²), b={b}")

    def delta(p):
        k = p.exp
        terms = []
        for i in range(k + 1):
            for j in range(k - i + 1):
                m = k - i - j
                c = factorial(k) // (factorial(i) * factorial(j) * factorial(m)) * a**m
                terms.append((Pair(Power(var, i + m), Power(var, j + m)), S.from_int(c)))
        return Vector(S, terms)

    return make_hopf(
        f"S[x]/({b}x+x²)", S, PowerBasis(var),
        mu=_poly_mu(S),
        eta=Vector.basis(S, Power(var, 0)),
        delta=LinearMap(S, delta, "Δ"),
        epsilon=Functional(S, lambda p: S.one if p.exp == 0 else S.zero, "ε"),
        antipode=LinearMap(S, lambda p: Vector.basis(S, p), "𝔞"),
        quotient=q,
        notes=[f"a = {a}, b = {b}"],
    )


# -- words -------------------------------------------------------------------


def _concat(S: Semiring):
    return LinearMap(S, lambda p: Vector.basis(S, p.left + p.right), "μ")


def _unshuffle(S: Semiring, w: Word) -> Vector:
    n = len(w.letters)
    terms = []
    for mask in range(1 << n):
        left = tuple(a for i, a in enumerate(w.letters) if mask >> i & 1)
        right = tuple(a for i, a in enumerate(w.letters) if not mask >> i & 1)
        terms.append((Pair(Word(left), Word(right)), S.one))
    return Vector(S, terms)


def _deconcat(S: Semiring, w: Word) -> Vector:
    n = len(w.letters)
    return Vector(S, [(Pair(Word(w.letters[:i]), Word(w.letters[i:])), S.one) for i in range(n + 1)])


def _empty_indicator(S: Semiring) -> Functional:
    return Functional(S, lambda w: S.one if not w.letters else S.zero, "ε")


def words_grouplike(alphabet=("x", "y"), semiring="boolean") -> BisemialgebraDesc:
    S = resolve_semiring(semiring)
    return make_bisemialgebra(
        "words group-like", S, WordBasis(alphabet),
        mu=_concat(S),
        eta=Vector.basis(S, EMPTY_WORD),
        delta=LinearMap(S, lambda w: Vector.basis(S, Pair(w, w)), "Δ"),
        epsilon=Functional(S, lambda w: S.one, "ε"),
    )


def words_unshuffle(alphabet=("x", "y"), semiring="boolean") -> BisemialgebraDesc:
    S = resolve_semiring(semiring)
    return make_bisemialgebra(
        "words unshuffle", S, WordBasis(alphabet),
        mu=_concat(S),
        eta=Vector.basis(S, EMPTY_WORD),
        delta=LinearMap(S, lambda w: _unshuffle(S, w), "Δ"),
        epsilon=_empty_indicator(S),
    )


def haz_words(alphabet=(2, 3), semiring="naturals") -> BisemialgebraDesc:
    """Concatenation with deconcatenation; expected to fail compatibility."""
    S = resolve_semiring(semiring)
    return make_bisemialgebra(
        "words concatenation/deconcatenation", S, WordBasis(alphabet),
        mu=_concat(S),
        eta=Vector.basis(S, EMPTY_WORD),
        delta=LinearMap(S, lambda w: _deconcat(S, w), "Δ"),
        epsilon=_empty_indicator(S),
        notes=["expected to fail: Δ is not multiplicative"],
    )


def tensor_semialgebra(generators=("m1", "m2"), truncation: int = 4, semiring="naturals") -> BisemialgebraDesc:
    """Tensor semialgebra on a free semimodule, generators primitive.

    The basis is cut at word length ``truncation``; products and coproducts are
    computed on full words.
    """
    S = resolve_semiring(semiring)
    if truncation < 0:
        raise ParameterError("truncation degree must be >= 0")
    basis = FiniteBasis(WordBasis(generators).elements(truncation))
    return make_bisemialgebra(
        f"T(M) up to degree {truncation}", S, basis,
        mu=_concat(S),
        eta=Vector.basis(S, EMPTY_WORD),
        delta=LinearMap(S, lambda w: _unshuffle(S, w), "Δ"),
        epsilon=_empty_indicator(S),
    )


# -- Example E and direct sums ------------------------------------------------


def divided_powers(semiring="boolean") -> BisemialgebraDesc:
    """Basis e_n; e_p e_q = e_{p+q}, Δ(e_n) = Σ_{p+q=n} e_p⊗e_q; needs 1+1 = 1."""
    S = resolve_semiring(semiring)
    if not S.additively_idempotent:
        raise ParameterError(f"this structure needs an additively idempotent semiring, not {S.name}")

    def e(n):
        return Atom(f"e{n}", n)

    def num(b):
        return int(b.name[1:])

    def member(b):
        return isinstance(b, Atom) and re.fullmatch(r"e\d+", b.name) is not None

    basis = GeneratedBasis(lambda d: [e(n) for n in range(d + 1)], member)
    return make_bisemialgebra(
        "E", S, basis,
        mu=LinearMap(S, lambda p: Vector.basis(S, e(num(p.left) + num(p.right))), "μ"),
        eta=Vector.basis(S, e(0)),
        delta=LinearMap(S, lambda b: _vec(S, [Pair(e(p), e(num(b) - p)) for p in range(num(b) + 1)]), "Δ"),
        epsilon=Functional(S, lambda b: S.one if num(b) == 0 else S.zero, "ε"),
    )


def direct_sum_coalgebra(generators=("m",), semiring="naturals") -> SemicoalgebraDesc:
    """S⊕M for free M: Δ(1) = 1⊗1, Δ(m) = 1⊗m + m⊗1, ε(s, m) = s."""
    S = resolve_semiring(semiring)
    gens = [Atom(str(g), 1) for g in generators]
    if ONE in gens:
        raise ParameterError("generator name clashes with the unit")

    def delta(b):
        if b == ONE:
            return Vector.basis(S, Pair(ONE, ONE))
        return _vec(S, [Pair(ONE, b), Pair(b, ONE)])

    return SemicoalgebraDesc(
        "S⊕M", S, FiniteBasis([ONE] + gens), LinearMap(S, delta, "Δ"),
        Functional(S, lambda b: S.one if b == ONE else S.zero, "ε"),
    )


def direct_sum_bialgebra(order: int = 1, semiring="naturals") -> BisemialgebraDesc:
    """S⊕A with A = S[Z/n], pointwise product; Δ(1) ≠ 1⊗1, so expected to fail."""
    S = resolve_semiring(semiring)
    A = group_hopf(order, S)
    s_part = Atom("(1,0)")
    inj = {b: Atom(f"(0,{b.name})") for b in A.basis.elements()}
    back = {v: k for k, v in inj.items()}

    def mu(p):
        x, y = p.left, p.right
        if x == s_part and y == s_part:
            return Vector.basis(S, s_part)
        if x in back and y in back:
            prod = A.mu.on_basis(Pair(back[x], back[y]))
            return Vector(S, [(inj[b], c) for b, c in prod.terms.items()])
        return Vector.zero(S)

    def delta(b):
        if b == s_part:
            return Vector.basis(S, Pair(s_part, s_part))
        return _vec(S, [Pair(s_part, b), Pair(b, s_part)])

    eta = _vec(S, [s_part] + [inj[b] for b in A.eta.terms])
    return make_bisemialgebra(
        "S⊕A", S, FiniteBasis([s_part] + list(inj.values())),
        mu=LinearMap(S, mu, "μ"),
        eta=eta,
        delta=LinearMap(S, delta, "Δ"),
        epsilon=Functional(S, lambda b: S.one if b == s_part else S.zero, "ε"),
        notes=["expected to fail: Δ(1) lacks the (0,1)⊗(0,1) term"],
    )


# -- quantum monoids ---------------------------------------------------------


class _PointedModel:
    """g of order n, x nilpotent of order n, x g = q g x, y = -x; integer coefficients."""

    def __init__(self, n: int, q: int):
        self.n, self.q = n, q

    def mul(self, s: tuple, t: tuple):
        (i, j), (k, l) = s, t
        if j + l >= self.n:
            return None
        return self.q ** (j * k), ((i + k) % self.n, j + l)

    def mul_terms(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for s, c in u.items():
            for t, d in v.items():
                r = self.mul(s, t)
                if r is not None:
                    out[r[1]] = out.get(r[1], 0) + c * d * r[0]
        return out

    def mul_pair_terms(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for (s1, s2), c in u.items():
            for (t1, t2), d in v.items():
                a, b = self.mul(s1, t1), self.mul(s2, t2)
                if a is not None and b is not None:
                    key = (a[1], b[1])
                    out[key] = out.get(key, 0) + c * d * a[0] * b[0]
        return out


def _pointed_monoid(name: str, S: Semiring, n: int, q: int) -> HopfDesc:
    model = _PointedModel(n, q)

    def gpart(i):
        return "" if i == 0 else ("g" if i == 1 else f"g{i}")

    def label(i, w: str) -> Atom:
        return Atom((gpart(i) + w) or "1", len(w))

    labels = {}
    for i in range(n):
        for j in range(n):
            for w in itertools.product("xy", repeat=j):
                word_ = "".join(w)
                labels[label(i, word_)] = (i, j, (-1) ** word_.count("y"))
    order = list(labels)

    def rep(key):
        i, j = key
        return label(i, "x" * j)

    def partner(key):
        i, j = key
        return label(i, "y" + "x" * (j - 1)) if j >= 1 else None

    def decode(b):
        i, j, s = labels[b]
        return (i, j), s

    def mu(p):
        (s, a), (t, c) = decode(p.left), decode(p.right)
        r = model.mul(s, t)
        if r is None:
            return Vector.zero(S)
        return _int_vector(S, {r[1]: a * c * r[0]}, rep, partner)

    gen_g = {((1 % n, 0), (1 % n, 0)): 1}
    gen_x = {((0, 1), (0, 0)): 1, ((1 % n, 0), (0, 1)): 1}
    unit2 = {((0, 0), (0, 0)): 1}

    def delta(b):
        (i, j), s = decode(b)
        acc = dict(unit2)
        for _ in range(i):
            acc = model.mul_pair_terms(acc, gen_g)
        for _ in range(j):
            acc = model.mul_pair_terms(acc, gen_x)
        return _int_vector(S, {k: s * v for k, v in acc.items()}, rep, partner)

    inv_g = {((n - 1) % n, 0): 1}
    anti_x = {((n - 1) % n, 1): -1}

    def antipode(b):
        (i, j), s = decode(b)
        acc = {(0, 0): 1}
        for _ in range(j):
            acc = model.mul_terms(acc, anti_x)
        for _ in range(i):
            acc = model.mul_terms(acc, inv_g)
        return _int_vector(S, {k: s * v for k, v in acc.items()}, rep, partner)

    def epsilon(b):
        (i, j), s = decode(b)
        return S.one if j == 0 else S.zero

    def sign_of(b):
        key, s = decode(b)
        return rep(key), s

    def partner_of(r):
        key, _ = decode(r)
        p = partner(key)
        if p is None:
            raise UnsupportedError(f"no negative partner for {r.pretty()}")
        return p

    gens = []
    for b in order:
        key, s = decode(b)
        if b != rep(key):
            if s < 0:
                gens.append((_vec(S, [b, rep(key)]), Vector.zero(S)))
            else:
                gens.append((Vector.basis(S, b), Vector.basis(S, rep(key))))
    q_spec = signed_quotient(S, sign_of, partner_of, gens, name="x + y = 0")
    return make_hopf(
        name, S, FiniteBasis(order),
        mu=LinearMap(S, mu, "μ"),
        eta=Vector.basis(S, label(0, "")),
        delta=LinearMap(S, delta, "Δ"),
        epsilon=Functional(S, epsilon, "ε"),
        antipode=LinearMap(S, antipode, "𝔞"),
        quotient=q_spec,
    )


def sweedler(semiring="naturals") -> HopfDesc:
    """Basis 1, g, x, y, gx, gy with g² = 1, xg = gy, yg = gx, x + y = 0."""
    S = resolve_semiring(semiring)
    if S.kind != "naturals" and not S.is_ring:
        raise UnsupportedError(
            f"x + y = 0 collapses x and y over {S.name}; use the naturals or a finite ring"
        )
    return _pointed_monoid("Sweedler", S, 2, -1)


def taft(n: int = 2, q: int = 2, semiring="Z3") -> HopfDesc:
    """Order-n pointed quantum monoid with xg = q·gx; q must be a primitive n-th root of 1."""
    S = resolve_semiring(semiring)
    if not isinstance(n, int) or n < 2:
        raise ParameterError("Taft structure needs n >= 2")
    if S.kind == "naturals":
        raise ParameterError("over the naturals only q = 1 has qⁿ = 1, and it is not primitive")
    if not S.is_ring:
        raise UnsupportedError(f"x + y = 0 collapses x and y over {S.name}; use a finite ring")
    qs = S.from_int(q)
    powers = [S.power(qs, i) for i in range(1, n + 1)]
    if powers[-1] != S.one:
        raise ParameterError(f"q = {q} does not satisfy qⁿ = 1 in {S.name}")
    if any(p == S.one for p in powers[:-1]):
        raise ParameterError(f"q = {q} is not a primitive {n}-th root of 1 in {S.name}")
    return _pointed_monoid(f"Taft(n={n}, q={q})", S, n, q)


_PAREIGIS_X = re.compile(r"y\^(-?\d+)xy\^(-?\d+)")


def pareigis_x(a: int, b: int) -> Atom:
    """The basis element y^a x y^b."""
    return Atom(f"y^{a}xy^{b}", abs(a) + abs(b) + 1)


def pareigis(semiring="naturals") -> HopfDesc:
    """S[x, y, y⁻¹]/(xy + yx, x²) with Δ(x) = x⊗1 + y⁻¹⊗x and Δ(y) = y⊗y."""
    S = resolve_semiring(semiring)
    if S.kind != "naturals" and not S.is_ring:
        raise UnsupportedError(
            f"xy + yx = 0 collapses xy and yx over {S.name}; use the naturals or a finite ring"
        )

    def xab(b):
        m = _PAREIGIS_X.fullmatch(b.name) if isinstance(b, Atom) else None
        return (int(m.group(1)), int(m.group(2))) if m else None

    def y(k):
        return Power("y", k)

    def enumerate_upto(d):
        out = [y(0)]
        for k in range(1, d + 1):
            out += [y(k), y(-k)]
        for total in range(d):
            for a in range(-total, total + 1):
                r = total - abs(a)
                for bb in sorted({r, -r}):
                    out.append(pareigis_x(a, bb))
        return out

    def member(b):
        return (isinstance(b, Power) and b.var == "y") or xab(b) is not None

    def mu(p):
        u, v = p.left, p.right
        xu, xv = xab(u), xab(v)
        if xu is not None and xv is not None:
            return Vector.zero(S)
        if xu is None and xv is None:
            return Vector.basis(S, y(u.exp + v.exp))
        if xu is not None:
            return Vector.basis(S, pareigis_x(xu[0], xu[1] + v.exp))
        return Vector.basis(S, pareigis_x(u.exp + xv[0], xv[1]))

    def delta(b):
        ab = xab(b)
        if ab is None:
            return Vector.basis(S, Pair(b, b))
        a, bb = ab
        return _vec(S, [Pair(b, y(a + bb)), Pair(y(a + bb - 1), b)])

    def antipode(b):
        ab = xab(b)
        if ab is None:
            return Vector.basis(S, y(-b.exp))
        a, bb = ab
        return Vector.basis(S, pareigis_x(-bb, 1 - a))

    def sign_of(b):
        ab = xab(b)
        if ab is None:
            return b, 1
        a, bb = ab
        return pareigis_x(0, a + bb), (-1) ** a

    def partner_of(r):
        _, c = xab(r)
        return pareigis_x(1, c - 1)

    def relations(d):
        gens = []
        for b in enumerate_upto(d):
            ab = xab(b)
            if ab is None or ab[0] == 0:
                continue
            r, s = sign_of(b)
            if s < 0:
                gens.append((_vec(S, [b, r]), Vector.zero(S)))
            else:
                gens.append((Vector.basis(S, b), Vector.basis(S, r)))
        return gens

    q_spec = signed_quotient(S, sign_of, partner_of, relations, name="xy + yx = 0")
    return make_hopf(
        "Pareigis", S, GeneratedBasis(enumerate_upto, member),
        mu=LinearMap(S, mu, "μ"),
        eta=Vector.basis(S, y(0)),
        delta=LinearMap(S, delta, "Δ"),
        epsilon=Functional(S, lambda b: S.zero if xab(b) else S.one, "ε"),
        antipode=LinearMap(S, antipode, "𝔞"),
        quotient=q_spec,
    )


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class ExampleInfo:
    name: str
    builder: Callable[..., Any]
    kind: str
    expected: str
    summary: str
    defaults: dict


EXAMPLES: dict[str, ExampleInfo] = {
    info.name: info
    for info in [
        ExampleInfo("trivial", trivial, "hopf", "pass", "the base semiring itself", {"semiring": "boolean"}),
        ExampleInfo("group_hopf", group_hopf, "hopf", "pass", "S[Z/n], group-like",
                    {"order": 2, "semiring": "boolean"}),
        ExampleInfo("group_primitive", group_primitive, "bisemialgebra", "fail",
                    "S[Z/n] with primitive coproduct", {"order": 2, "semiring": "naturals"}),
        ExampleInfo("poly_grouplike", poly_grouplike, "bisemialgebra", "pass", "S[x], xⁿ group-like",
                    {"semiring": "boolean"}),
        ExampleInfo("poly_binomial", poly_binomial, "bisemialgebra", "pass", "S[x], x primitive",
                    {"semiring": "boolean"}),
        ExampleInfo("laurent", laurent, "hopf", "pass", "S[x,x⁻¹], group-like", {"semiring": "boolean"}),
        ExampleInfo("hopf_quotient", hopf_quotient, "hopf", "pass", "S[x]/(bx+x²), ab = 2",
                    {"a": 1, "b": 2, "semiring": "naturals"}),
        ExampleInfo("words_grouplike", words_grouplike, "bisemialgebra", "pass",
                    "words, concatenation, w -> w⊗w", {"alphabet": ["x", "y"], "semiring": "boolean"}),
        ExampleInfo("words_unshuffle", words_unshuffle, "bisemialgebra", "pass",
                    "words, concatenation, letters primitive", {"alphabet": ["x", "y"], "semiring": "boolean"}),
        ExampleInfo("haz_words", haz_words, "bisemialgebra", "fail",
                    "words, concatenation and deconcatenation", {"alphabet": [2, 3], "semiring": "naturals"}),
        ExampleInfo("divided_powers", divided_powers, "bisemialgebra", "pass",
                    "e_p e_q = e_{p+q}, Δ(e_n) = Σ e_p⊗e_q", {"semiring": "boolean"}),
        ExampleInfo("tensor_semialgebra", tensor_semialgebra, "bisemialgebra", "pass",
                    "tensor semialgebra, generators primitive",
                    {"generators": ["m1", "m2"], "truncation": 4, "semiring": "naturals"}),
        ExampleInfo("direct_sum_coalgebra", direct_sum_coalgebra, "semicoalgebra", "pass", "S⊕M",
                    {"generators": ["m"], "semiring": "naturals"}),
        ExampleInfo("direct_sum_bialgebra", direct_sum_bialgebra, "bisemialgebra", "fail",
                    "S⊕A with pointwise product", {"order": 1, "semiring": "naturals"}),
        ExampleInfo("sweedler", sweedler, "hopf", "pass", "Sweedler-type quantum monoid",
                    {"semiring": "naturals"}),
        ExampleInfo("taft", taft, "hopf", "pass", "Taft-type quantum monoid", {"n": 2, "q": 2, "semiring": "Z3"}),
        ExampleInfo("pareigis", pareigis, "hopf", "pass", "Pareigis-type quantum monoid",
                    {"semiring": "naturals"}),
    ]
}


def example(name: str, **params):
    if name not in EXAMPLES:
        raise ParameterError(f"unknown example {name!r}; known: {', '.join(EXAMPLES)}")
    info = EXAMPLES[name]
    args = dict(info.defaults)
    unknown = set(params) - set(args)
    if unknown:
        raise ParameterError(f"{name} has no parameter(s) {', '.join(sorted(unknown))}")
    args.update(params)
    for key in ("alphabet", "generators"):
        if key in args:
            args[key] = tuple(args[key])
    return info.builder(**args)


# (name, params) pairs whose full check suite must pass at degree 4.
POSITIVE_GALLERY: list[tuple[str, dict]] = [
    ("trivial", {"semiring": "boolean"}),
    ("trivial", {"semiring": "naturals"}),
    ("group_hopf", {"order": 2, "semiring": "boolean"}),
    ("group_hopf", {"order": 3, "semiring": "boolean"}),
    ("group_hopf", {"order": 2, "semiring": "X2"}),
    ("group_hopf", {"order": 3, "semiring": "X2"}),
    ("poly_grouplike", {"semiring": "boolean"}),
    ("poly_grouplike", {"semiring": "naturals"}),
    ("poly_binomial", {"semiring": "boolean"}),
    ("poly_binomial", {"semiring": "naturals"}),
    ("laurent", {"semiring": "boolean"}),
    ("laurent", {"semiring": "naturals"}),
    ("hopf_quotient", {"a": 1, "b": 2, "semiring": "naturals"}),
    ("hopf_quotient", {"a": 2, "b": 1, "semiring": "naturals"}),
    ("words_grouplike", {"semiring": "boolean"}),
    ("words_unshuffle", {"semiring": "boolean"}),
    ("divided_powers", {"semiring": "boolean"}),
    ("tensor_semialgebra", {"semiring": "naturals"}),
    ("direct_sum_coalgebra", {"semiring": "naturals"}),
    ("sweedler", {"semiring": "naturals"}),
    ("taft", {"n": 2, "q": 2, "semiring": "Z3"}),
    ("taft", {"n": 3, "q": 2, "semiring": "Z7"}),
    ("pareigis", {"semiring": "naturals"}),
]
