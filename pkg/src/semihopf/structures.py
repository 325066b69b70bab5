"""Structure-constant descriptors and their law checkers.

Every check walks the basis elements of degree at most ``d`` (all of them for
finite bases) and compares both sides of each defining identity under the
descriptor's quotient equality.  All laws are multilinear, so verifying them
on basis tuples is exact for the quantified range.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import BasisKindError, ConfigurationError, SemiringMismatch
from .quotient import FREE, QuotientSpec, check_quotient_compat
from .report import CheckReport
from .semimodule import (
    Basis,
    Functional,
    LinearMap,
    Pair,
    Vector,
    apply_left_functional,
    apply_right_functional,
    assoc_right,
    lin_apply,
    map_left,
    map_right,
    same_semiring,
    tensor_vec,
    twist,
    vsum,
)
from .semiring import Semiring

DEFAULT_DEGREE = 4


# -- descriptors -------------------------------------------------------------


@dataclass
class SemialgebraDesc:
    name: str
    semiring: Semiring
    basis: Basis
    mu: LinearMap
    eta: Vector
    quotient: QuotientSpec = FREE

    def product(self, u: Vector, v: Vector) -> Vector:
        return lin_apply(self.mu, tensor_vec(u, v))

    def mul_basis(self, a, b) -> Vector:
        return self.mu.on_basis(Pair(a, b))

    @property
    def one(self) -> Vector:
        return self.eta


@dataclass
class SemicoalgebraDesc:
    name: str
    semiring: Semiring
    basis: Basis
    delta: LinearMap
    epsilon: Functional
    quotient: QuotientSpec = FREE

    def coproduct(self, v: Vector) -> Vector:
        return lin_apply(self.delta, v)

    def counit(self, v: Vector):
        return self.epsilon(v)


@dataclass
class BisemialgebraDesc:
    algebra: SemialgebraDesc
    coalgebra: SemicoalgebraDesc
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not same_semiring(self.algebra.semiring, self.coalgebra.semiring):
            raise SemiringMismatch("algebra and coalgebra use different semirings")

    name = property(lambda self: self.algebra.name)
    semiring = property(lambda self: self.algebra.semiring)
    basis = property(lambda self: self.algebra.basis)
    quotient = property(lambda self: self.algebra.quotient)
    mu = property(lambda self: self.algebra.mu)
    eta = property(lambda self: self.algebra.eta)
    delta = property(lambda self: self.coalgebra.delta)
    epsilon = property(lambda self: self.coalgebra.epsilon)
    one = property(lambda self: self.algebra.eta)

    def product(self, u: Vector, v: Vector) -> Vector:
        return self.algebra.product(u, v)

    def coproduct(self, v: Vector) -> Vector:
        return self.coalgebra.coproduct(v)

    def counit(self, v: Vector):
        return self.coalgebra.counit(v)

    @property
    def bi(self) -> BisemialgebraDesc:
        return self


@dataclass
class HopfDesc:
    bi: BisemialgebraDesc
    antipode: LinearMap

    name = property(lambda self: self.bi.name)
    semiring = property(lambda self: self.bi.semiring)
    basis = property(lambda self: self.bi.basis)
    quotient = property(lambda self: self.bi.quotient)
    algebra = property(lambda self: self.bi.algebra)
    coalgebra = property(lambda self: self.bi.coalgebra)
    mu = property(lambda self: self.bi.mu)
    eta = property(lambda self: self.bi.eta)
    delta = property(lambda self: self.bi.delta)
    epsilon = property(lambda self: self.bi.epsilon)
    one = property(lambda self: self.bi.eta)
    notes = property(lambda self: self.bi.notes)

    def product(self, u: Vector, v: Vector) -> Vector:
        return self.bi.product(u, v)

    def coproduct(self, v: Vector) -> Vector:
        return self.bi.coproduct(v)

    def counit(self, v: Vector):
        return self.bi.counit(v)


def make_bisemialgebra(name, semiring, basis, mu, eta, delta, epsilon, quotient=FREE, notes=()):
    alg = SemialgebraDesc(name, semiring, basis, mu, eta, quotient)
    coalg = SemicoalgebraDesc(name, semiring, basis, delta, epsilon, quotient)
    return BisemialgebraDesc(alg, coalg, list(notes))


def make_hopf(name, semiring, basis, mu, eta, delta, epsilon, antipode, quotient=FREE, notes=()):
    return HopfDesc(make_bisemialgebra(name, semiring, basis, mu, eta, delta, epsilon, quotient, notes), antipode)


# -- helpers -----------------------------------------------------------------


def basis_upto(desc, d: int) -> list:
    return desc.basis.elements(d)


def equal_fn(q: QuotientSpec) -> Callable[[Vector, Vector], bool]:
    return q.equal


def tensor_equal_fn(q: QuotientSpec, report: CheckReport | None = None) -> Callable[[Vector, Vector], bool]:
    """Equality on tensor vectors; quotients without tensor support compare structurally."""
    if q.handles_tensors():
        return q.equal
    if report is not None:
        report.notes.append(f"{q.mode} quotient: tensor comparisons are structural")
    return lambda u, v: u == v


def pair_product(mu: LinearMap, u: Vector, v: Vector) -> Vector:
    """Product on A⊗A with the middle swap: (a⊗b)(a'⊗b') = aa' ⊗ bb'."""
    S = u.semiring
    parts = []
    for p, c in u.terms.items():
        for r, e in v.terms.items():
            left = mu.on_basis(Pair(p.left, r.left))
            right = mu.on_basis(Pair(p.right, r.right))
            parts.append(tensor_vec(left, right).scale(S.mul(c, e)))
    return vsum(S, parts)


def counit_vector(desc, b) -> Vector:
    """ε(b)·1 as a vector."""
    return desc.eta.scale(desc.epsilon.on_basis(b))


def _compat_reports(desc, probe: Sequence, report: CheckReport, maps: str) -> None:
    q = desc.quotient
    if q.mode == "free":
        return
    if "mu" in maps:
        report.merge(check_quotient_compat(desc.mu, q, probe, binary=True))
    if "delta" in maps:
        report.merge(check_quotient_compat(desc.delta, q, probe))
    if "epsilon" in maps:
        report.merge(check_quotient_compat(None, q, probe, functional=desc.epsilon))
    if "antipode" in maps:
        report.merge(check_quotient_compat(desc.antipode, q, probe))


# -- checks ------------------------------------------------------------------


def check_semialgebra(a, d: int = DEFAULT_DEGREE) -> CheckReport:
    a = getattr(a, "algebra", a)
    S = a.semiring
    report = CheckReport(f"semialgebra {a.name}", bound=d)
    eq = equal_fn(a.quotient)
    elems = basis_upto(a, d)
    mu = a.mu
    prods = {(x, y): mu.on_basis(Pair(x, y)) for x in elems for y in elems}
    for x, y, z in itertools.product(elems, repeat=3):
        lhs = lin_apply(mu, tensor_vec(prods[(x, y)], Vector.basis(S, z)))
        rhs = lin_apply(mu, tensor_vec(Vector.basis(S, x), prods[(y, z)]))
        report.expect("μ(μ⊗id) = μ(id⊗μ)", (x, y, z), lhs, rhs, eq)
    for x in elems:
        bx = Vector.basis(S, x)
        report.expect("μ(η⊗id) = id", (x,), a.product(a.eta, bx), bx, eq)
        report.expect("μ(id⊗η) = id", (x,), a.product(bx, a.eta), bx, eq)
    _compat_reports(a, elems, report, "mu")
    return report


def check_semicoalgebra(c, d: int = DEFAULT_DEGREE) -> CheckReport:
    c = getattr(c, "coalgebra", c)
    S = c.semiring
    report = CheckReport(f"semicoalgebra {c.name}", bound=d)
    eq = equal_fn(c.quotient)
    teq = tensor_equal_fn(c.quotient, report)
    delta = c.delta
    for x in basis_upto(c, d):
        bx = Vector.basis(S, x)
        dx = delta.on_basis(x)
        lhs = assoc_right(map_left(delta, dx))
        rhs = map_right(delta, dx)
        report.expect("(Δ⊗id)Δ = (id⊗Δ)Δ", (x,), lhs, rhs, teq)
        report.expect("(ε⊗id)Δ = id", (x,), apply_left_functional(c.epsilon, dx), bx, eq)
        report.expect("(id⊗ε)Δ = id", (x,), apply_right_functional(c.epsilon, dx), bx, eq)
    _compat_reports(c, basis_upto(c, d), report, "delta epsilon")
    return report


def check_bialgebra_compat(b, d: int = DEFAULT_DEGREE) -> CheckReport:
    """Δ and ε are semialgebra morphisms."""
    b = b.bi
    S = b.semiring
    report = CheckReport(f"bisemialgebra compatibility {b.name}", bound=d)
    teq = tensor_equal_fn(b.quotient, report)
    elems = basis_upto(b, d)
    delta, eps = b.delta, b.epsilon
    for x, y in itertools.product(elems, repeat=2):
        lhs = pair_product(b.mu, delta.on_basis(x), delta.on_basis(y))
        rhs = lin_apply(delta, b.mu.on_basis(Pair(x, y)))
        report.expect("Δ(u)·Δ(v) = Δ(uv)", (x, y), lhs, rhs, teq)
        report.expect("ε(u)ε(v) = ε(uv)", (x, y), S.mul(eps.on_basis(x), eps.on_basis(y)),
                      eps(b.mu.on_basis(Pair(x, y))))
    report.expect("Δ(1) = 1⊗1", (), lin_apply(delta, b.eta), tensor_vec(b.eta, b.eta), teq)
    report.expect("ε(1) = 1", (), eps(b.eta), S.one)
    return report


def check_bisemialgebra(b, d: int = DEFAULT_DEGREE, include_parts: bool = True) -> CheckReport:
    b = b.bi
    report = CheckReport(f"bisemialgebra {b.name}", bound=d)
    if include_parts:
        report.merge(check_semialgebra(b.algebra, d))
        report.merge(check_semicoalgebra(b.coalgebra, d))
    report.merge(check_bialgebra_compat(b, d))
    return report


def antipode_sides(h: HopfDesc, x) -> tuple[Vector, Vector]:
    """(Σ 𝔞(x1)x2, Σ x1𝔞(x2)) for a basis element x."""
    S = h.semiring
    dx = h.delta.on_basis(x)
    left, right = [], []
    for p, c in dx.terms.items():
        left.append(h.product(h.antipode.on_basis(p.left), Vector.basis(S, p.right)).scale(c))
        right.append(h.product(Vector.basis(S, p.left), h.antipode.on_basis(p.right)).scale(c))
    return vsum(S, left), vsum(S, right)


def check_hopf(h: HopfDesc, d: int = DEFAULT_DEGREE, include_parts: bool = False) -> CheckReport:
    if not isinstance(h, HopfDesc):
        raise ConfigurationError(f"{h.name} has no antipode")
    report = CheckReport(f"Hopf semialgebra {h.name}", bound=d)
    if include_parts:
        report.merge(check_bisemialgebra(h.bi, d))
    eq = equal_fn(h.quotient)
    elems = basis_upto(h, d)
    for x in elems:
        left, right = antipode_sides(h, x)
        target = counit_vector(h, x)
        report.expect("Σ 𝔞(b1)b2 = ε(b)1", (x,), left, target, eq)
        report.expect("Σ b1𝔞(b2) = ε(b)1", (x,), right, target, eq)
    _compat_reports(h, elems, report, "antipode")
    return report


def full_check(desc, d: int = DEFAULT_DEGREE) -> CheckReport:
    """Every law the descriptor's kind carries."""
    if isinstance(desc, HopfDesc):
        return check_hopf(desc, d, include_parts=True)
    if isinstance(desc, BisemialgebraDesc):
        return check_bisemialgebra(desc, d)
    if isinstance(desc, SemialgebraDesc):
        return check_semialgebra(desc, d)
    if isinstance(desc, SemicoalgebraDesc):
        return check_semicoalgebra(desc, d)
    raise ConfigurationError(f"cannot check {type(desc).__name__}")


def check_commutativity(b, d: int = DEFAULT_DEGREE) -> CheckReport:
    a = getattr(b, "algebra", b)
    report = CheckReport(f"commutativity {a.name}", bound=d)
    eq = equal_fn(a.quotient)
    elems = basis_upto(a, d)
    for x, y in itertools.combinations_with_replacement(elems, 2):
        report.expect("μ∘τ = μ", (x, y), a.mul_basis(x, y), a.mul_basis(y, x), eq)
    return report


def check_cocommutativity(b, d: int = DEFAULT_DEGREE) -> CheckReport:
    c = getattr(b, "coalgebra", b)
    report = CheckReport(f"cocommutativity {c.name}", bound=d)
    teq = tensor_equal_fn(c.quotient, report)
    for x in basis_upto(c, d):
        dx = c.delta.on_basis(x)
        report.expect("τ∘Δ = Δ", (x,), twist(dx), dx, teq)
    return report


@dataclass
class QuantumMonoidReport:
    hopf: CheckReport
    commutative: CheckReport
    cocommutative: CheckReport

    @property
    def is_quantum_monoid(self) -> bool:
        return self.hopf.passed and not self.commutative.passed and not self.cocommutative.passed

    def render(self) -> str:
        verdict = "quantum monoid" if self.is_quantum_monoid else "not a quantum monoid"
        return "\n".join(
            [verdict, self.hopf.summary(), self.commutative.render(), self.cocommutative.render()]
        )


def classify_quantum_monoid(h: HopfDesc, d: int = DEFAULT_DEGREE) -> QuantumMonoidReport:
    return QuantumMonoidReport(check_hopf(h, d), check_commutativity(h, d), check_cocommutativity(h, d))


# -- convolution -------------------------------------------------------------


def convolve(f: LinearMap, g: LinearMap, c, a, name: str | None = None) -> LinearMap:
    """(f∗g)(b) = Σ μ_A(f(b1) ⊗ g(b2))."""
    c = getattr(c, "coalgebra", c)
    a = getattr(a, "algebra", a)
    if not (same_semiring(f.semiring, c.semiring) and same_semiring(g.semiring, a.semiring)):
        raise SemiringMismatch("convolution operands over different semirings")
    S = a.semiring

    def assign(b):
        parts = []
        for p, k in c.delta.on_basis(b).terms.items():
            parts.append(a.product(f.on_basis(p.left), g.on_basis(p.right)).scale(k))
        return vsum(S, parts)

    return LinearMap(S, assign, name or f"{f.name}∗{g.name}")


def convolve_functionals(f: Functional, g: Functional, c, name: str | None = None) -> Functional:
    """(f∗g)(b) = Σ f(b1)g(b2), the product of the dual semialgebra."""
    c = getattr(c, "coalgebra", c)
    S = c.semiring

    def assign(b):
        acc = S.zero
        for p, k in c.delta.on_basis(b).terms.items():
            acc = S.add(acc, S.mul(k, S.mul(f.on_basis(p.left), g.on_basis(p.right))))
        return acc

    return Functional(S, assign, name or f"{f.name}∗{g.name}")


def unit_map(b) -> LinearMap:
    """η∘ε, the convolution unit."""
    return LinearMap(b.semiring, lambda x: counit_vector(b, x), "η∘ε")


def check_maps_equal(f: LinearMap, g: LinearMap, elems: Sequence, q: QuotientSpec = FREE,
                     law: str = "f = g", d: int | None = None) -> CheckReport:
    report = CheckReport(law, bound=d)
    for x in elems:
        report.expect(law, (x,), f.on_basis(x), g.on_basis(x), q.equal)
    return report


# -- morphisms ---------------------------------------------------------------


def check_morphism(kind: str, f: LinearMap, src, tgt, d: int = DEFAULT_DEGREE) -> CheckReport:
    if kind not in ("algebra", "coalgebra", "bialgebra", "hopf"):
        raise ConfigurationError(f"unknown morphism kind {kind!r}")
    needs_alg = kind in ("algebra", "bialgebra", "hopf")
    needs_coalg = kind in ("coalgebra", "bialgebra", "hopf")
    for desc in (src, tgt):
        if needs_alg and not hasattr(desc, "mu"):
            raise ConfigurationError(f"{desc.name} is not a semialgebra")
        if needs_coalg and not hasattr(desc, "delta"):
            raise ConfigurationError(f"{desc.name} is not a semicoalgebra")
        if kind == "hopf" and not isinstance(desc, HopfDesc):
            raise ConfigurationError(f"{desc.name} has no antipode")
    S = src.semiring
    report = CheckReport(f"{kind} morphism {f.name}: {src.name} -> {tgt.name}", bound=d)
    eq = equal_fn(tgt.quotient)
    teq = tensor_equal_fn(tgt.quotient, report)
    elems = basis_upto(src, d)
    if needs_alg:
        for x, y in itertools.product(elems, repeat=2):
            lhs = lin_apply(f, src.mu.on_basis(Pair(x, y)))
            rhs = tgt.product(f.on_basis(x), f.on_basis(y))
            report.expect("f(uv) = f(u)f(v)", (x, y), lhs, rhs, eq)
        report.expect("f(1) = 1", (), lin_apply(f, src.eta), tgt.eta, eq)
    if needs_coalg:
        for x in elems:
            fx = f.on_basis(x)
            lhs = lin_apply(tgt.delta, fx)
            dx = src.delta.on_basis(x)
            rhs = vsum(S, [tensor_vec(f.on_basis(p.left), f.on_basis(p.right)).scale(c)
                           for p, c in dx.terms.items()])
            report.expect("Δ'f = (f⊗f)Δ", (x,), lhs, rhs, teq)
            report.expect("ε'f = ε", (x,), tgt.epsilon(fx), src.epsilon.on_basis(x))
    if kind == "hopf":
        for x in elems:
            lhs = lin_apply(tgt.antipode, f.on_basis(x))
            rhs = lin_apply(f, src.antipode.on_basis(x))
            report.expect("𝔞'f = f𝔞", (x,), lhs, rhs, eq)
    return report


def functional_as_map(t: Functional, unit) -> LinearMap:
    """View a functional B -> S as a map into a one-dimensional structure with basis ``unit``."""
    S = t.semiring
    return LinearMap(S, lambda b: Vector.basis(S, unit, t.on_basis(b)), t.name)


def require_pair(b) -> Pair:
    if not isinstance(b, Pair):
        raise BasisKindError(f"expected a tensor basis element, got {b!r}")
    return b
