"""Integrals, (co)invariants, the γ/ω maps, Hopf modules, duals and searches.

Searches enumerate candidates lexicographically over the semiring's element
order and the basis order, so their results are reproducible.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .errors import ConfigurationError, SizeError, UnsupportedError
from .quotient import LatticeQuotient
from .report import CheckReport
from .semimodule import (
    Basis,
    Dual,
    FiniteBasis,
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
    sort_key,
    tensor_vec,
    vsum,
)
from .semiring import DEFAULT_SEED, Semiring
from .structures import (
    DEFAULT_DEGREE,
    HopfDesc,
    basis_upto,
    convolve_functionals,
    counit_vector,
    make_bisemialgebra,
    make_hopf,
    tensor_equal_fn,
)

DEFAULT_BUDGET = 2**20


# -- enumeration helpers -------------------------------------------------------


def _guard(S: Semiring, slots: int, budget: int, what: str) -> tuple:
    elems = S.enumeration
    if elems is None:
        raise UnsupportedError(f"{what} enumerates coefficients; {S.name} is infinite")
    required = len(elems) ** slots
    if required > budget:
        raise SizeError(required, budget, what)
    return elems


def enumerate_vectors(S: Semiring, basis: Sequence, budget: int = DEFAULT_BUDGET,
                      what: str = "vector enumeration") -> Iterator[Vector]:
    """All vectors supported on ``basis``, lexicographic in (basis order, element order)."""
    elems = _guard(S, len(basis), budget, what)
    for coeffs in itertools.product(elems, repeat=len(basis)):
        yield Vector(S, zip(basis, coeffs))


def enumerate_functionals(S: Semiring, basis: Sequence, budget: int = DEFAULT_BUDGET,
                          what: str = "functional enumeration") -> Iterator[Functional]:
    elems = _guard(S, len(basis), budget, what)
    for values in itertools.product(elems, repeat=len(basis)):
        yield Functional(S, {b: v for b, v in zip(basis, values) if v != S.zero}, "t", default_zero=True)


def span_closure(S: Semiring, vectors: Sequence[Vector], limit: int = DEFAULT_BUDGET) -> set:
    """The S-span of finitely many vectors over a finite semiring."""
    elems = _guard(S, 0, limit, "span")
    span = {Vector.zero(S)}
    for v in vectors:
        multiples = {v.scale(s) for s in elems}
        span = {u + w for u in span for w in multiples}
        if len(span) > limit:
            raise SizeError(len(span), limit, "span closure")
    return span


# -- integrals on B ------------------------------------------------------------


@dataclass
class IntegralReport:
    check: CheckReport
    total: bool

    @property
    def is_integral(self) -> bool:
        return self.check.passed

    # ``normalized`` reads better for integrals in B.
    @property
    def normalized(self) -> bool:
        return self.total

    def summary(self) -> str:
        return f"{self.check.summary()}; {'total' if self.total else 'not total'}"


def _integral_on_sides(b, t: Functional, x) -> tuple[Vector, Vector, Vector]:
    dx = b.delta.on_basis(x)
    left = apply_right_functional(t, dx)
    right = apply_left_functional(t, dx)
    return left, right, b.eta.scale(t.on_basis(x))


def verify_integral_on(t: Functional, b, side: str = "left", d: int = DEFAULT_DEGREE,
                       probe: int | None = None) -> IntegralReport:
    """Left: Σ b1·t(b2) = t(b)·1; right: Σ t(b1)·b2 = t(b)·1; total: t(1) = 1."""
    _side(side)
    report = CheckReport(f"{side} integral on {b.name}", bound=d if probe is None else probe)
    eq = b.quotient.equal
    for x in basis_upto(b, d if probe is None else probe):
        left, right, target = _integral_on_sides(b, t, x)
        lhs = left if side == "left" else right
        report.expect(f"{side} integral condition", (x,), lhs, target, eq)
    return IntegralReport(report, t(b.eta) == b.semiring.one)


def _side(side: str) -> None:
    if side not in ("left", "right"):
        raise ConfigurationError(f"side must be left or right, not {side!r}")


def _respects_quotient(b, t: Functional, d: int) -> bool:
    q = b.quotient
    if q.mode == "free":
        return True
    return all(t(u) == t(v) for u, v in q.relations(d))


def search_integrals_on(b, side: str = "left", d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET,
                        probe: int | None = None) -> list[Functional]:
    """All functionals supported on basis ≤ d satisfying the integral condition.

    Candidates vanish above degree ``d``; the condition is probed on basis
    elements up to degree ``d + 1`` (``probe``), so a candidate whose top
    coordinate only looks integral because higher terms were cut off is
    rejected.  Finite bases are probed in full.
    """
    _side(side)
    S = b.semiring
    elems = basis_upto(b, d)
    if probe is None:
        probe = d if b.basis.finite else d + 1
    probes = basis_upto(b, probe)
    coproducts = [(x, b.delta.on_basis(x)) for x in probes]
    eq = b.quotient.equal
    found = []
    for t in enumerate_functionals(S, elems, budget, f"{side} integral search"):
        ok = True
        for x, dx in coproducts:
            lhs = apply_right_functional(t, dx) if side == "left" else apply_left_functional(t, dx)
            if not eq(lhs, b.eta.scale(t.on_basis(x))):
                ok = False
                break
        if ok and _respects_quotient(b, t, probe):
            t.name = f"{side} integral"
            found.append(t)
    return found


def verify_integral_ideal_property(t: Functional, b, d: int = DEFAULT_DEGREE, samples: int = 64,
                                   seed: int = DEFAULT_SEED, side: str = "left") -> CheckReport:
    """f∗t = f(1)·t (left integrals) or t∗f = f(1)·t (right) for sampled f."""
    _side(side)
    S = b.semiring
    elems = basis_upto(b, d)
    report = CheckReport(f"integral ideal property on {b.name}", bound=d, seed=seed)
    for f in sample_functionals(S, elems, samples, seed, b):
        prod = convolve_functionals(f, t, b) if side == "left" else convolve_functionals(t, f, b)
        f1 = f(b.eta)
        for x in elems:
            report.expect("f∗t = f(1)t" if side == "left" else "t∗f = f(1)t",
                          (f.pretty(elems), x), prod.on_basis(x), S.mul(f1, t.on_basis(x)))
    return report


def sample_functionals(S: Semiring, elems: Sequence, count: int, seed: int = DEFAULT_SEED,
                       b=None) -> list[Functional]:
    """ε (when ``b`` is given), coordinate functionals, then seeded random ones."""
    rng = random.Random(seed)
    out: list[Functional] = []
    if b is not None:
        out.append(Functional(S, lambda x: b.epsilon.on_basis(x), "ε"))
    out.extend(Functional(S, {x: S.one}, f"{x.pretty()}*", default_zero=True) for x in elems)
    while len(out) < count:
        if S.enumeration is not None:
            vals = {x: rng.choice(S.enumeration) for x in elems}
        elif S.kind == "naturals":
            vals = {x: rng.randrange(0, 5) for x in elems}
        else:
            vals = {x: S.sampler(rng) for x in elems}
        out.append(Functional(S, vals, f"f{len(out)}", default_zero=True))
    return out[:count]


# -- integrals in B ------------------------------------------------------------


def verify_integral_in(w: Vector, b, side: str = "left", d: int = DEFAULT_DEGREE) -> IntegralReport:
    """Left: x·w = ε(x)w for basis x ≤ d; normalized: ε(w) = 1."""
    _side(side)
    S = b.semiring
    report = CheckReport(f"{side} integral in {b.name}", bound=d)
    eq = b.quotient.equal
    for x in basis_upto(b, d):
        bx = Vector.basis(S, x)
        lhs = b.product(bx, w) if side == "left" else b.product(w, bx)
        report.expect(f"{side} integral condition", (x,), lhs, w.scale(b.epsilon.on_basis(x)), eq)
    return IntegralReport(report, b.epsilon(w) == S.one)


def search_integrals_in(b, side: str = "left", d: int = DEFAULT_DEGREE,
                        budget: int = DEFAULT_BUDGET) -> list[Vector]:
    _side(side)
    S = b.semiring
    elems = basis_upto(b, d)
    found = []
    for w in enumerate_vectors(S, elems, budget, f"{side} integral-in search"):
        if verify_integral_in(w, b, side, d).is_integral:
            found.append(w)
    return found


# -- modules, comodules, (co)invariants ----------------------------------------


@dataclass
class HopfModuleDesc:
    """Right B-module and right B-comodule on a common carrier."""

    name: str
    basis: Basis
    action: LinearMap  # Pair(m, b) -> M
    coaction: LinearMap  # m -> Σ m0 ⊗ m1
    over: object
    notes: list[str] = field(default_factory=list)

    @property
    def semiring(self) -> Semiring:
        return self.over.semiring

    def act(self, m: Vector, b: Vector) -> Vector:
        return lin_apply(self.action, tensor_vec(m, b))

    def coact(self, m: Vector) -> Vector:
        return lin_apply(self.coaction, m)


def regular_hopf_module(b) -> HopfModuleDesc:
    """B over itself: action μ, coaction Δ."""
    return HopfModuleDesc(f"{b.name} (regular)", b.basis, b.mu, b.delta, b)


def diagonal_hopf_module(b) -> HopfModuleDesc:
    """B⊗B with the diagonal action through Δ and the coaction of the second factor."""
    S = b.semiring
    elems = b.basis.elements() if b.basis.finite else None
    basis = FiniteBasis([Pair(x, y) for x in elems for y in elems]) if elems is not None else None
    if basis is None:
        raise UnsupportedError("the diagonal module is built on finite bases only")

    def action(p):
        m, c = p.left, p.right
        parts = []
        for q, k in b.delta.on_basis(c).terms.items():
            parts.append(tensor_vec(b.mu.on_basis(Pair(m.left, q.left)),
                                    b.mu.on_basis(Pair(m.right, q.right))).scale(k))
        return vsum(S, parts)

    def coaction(m):
        dx = b.delta.on_basis(m.right)
        return Vector(S, [(Pair(Pair(m.left, q.left), q.right), k) for q, k in dx.terms.items()])

    return HopfModuleDesc(f"{b.name}⊗ᵃ{b.name}", basis, LinearMap(S, action, "ρ_M"),
                          LinearMap(S, coaction, "ρ^M"), b)


def trivial_coaction_module(b, basis: Basis, action: LinearMap, name: str = "M") -> HopfModuleDesc:
    S = b.semiring
    unit = b.eta

    return HopfModuleDesc(name, basis, action,
                          LinearMap(S, lambda m: tensor_vec(Vector.basis(S, m), unit), "ρ^M"), b)


def check_module(m: HopfModuleDesc, d: int = DEFAULT_DEGREE) -> CheckReport:
    b = m.over
    S = m.semiring
    report = CheckReport(f"module and comodule laws of {m.name}", bound=d)
    eq = b.quotient.equal
    teq = tensor_equal_fn(b.quotient, report)
    ms = m.basis.elements(d) if not m.basis.finite else m.basis.elements()
    bs = basis_upto(b, d)
    for x in ms:
        vx = Vector.basis(S, x)
        report.expect("m·1 = m", (x,), m.act(vx, b.eta), vx, eq)
        rx = m.coaction.on_basis(x)
        report.expect("(id⊗ε)ρ = id", (x,), apply_right_functional(b.epsilon, rx), vx, eq)
        lhs = assoc_right(map_left(m.coaction, rx))
        report.expect("(ρ⊗id)ρ = (id⊗Δ)ρ", (x,), lhs, map_right(b.delta, rx), teq)
        for y, z in itertools.product(bs, repeat=2):
            lhs = m.act(m.action.on_basis(Pair(x, y)), Vector.basis(S, z))
            rhs = m.act(vx, b.mu.on_basis(Pair(y, z)))
            report.expect("(m·b)·b' = m·(bb')", (x, y, z), lhs, rhs, eq)
    return report


def check_hopf_module(m: HopfModuleDesc, d: int = DEFAULT_DEGREE, include_parts: bool = True) -> CheckReport:
    """ρ(m·b) = Σ m0·b1 ⊗ m1·b2 on basis pairs."""
    b = m.over
    S = m.semiring
    report = CheckReport(f"Hopf module {m.name}", bound=d)
    if include_parts:
        report.merge(check_module(m, d))
    teq = tensor_equal_fn(b.quotient, report)
    ms = m.basis.elements(d) if not m.basis.finite else m.basis.elements()
    for x in ms:
        rx = m.coaction.on_basis(x)
        for y in basis_upto(b, d):
            lhs = m.coact(m.action.on_basis(Pair(x, y)))
            rhs = vsum(S, [
                tensor_vec(m.action.on_basis(Pair(p.left, q.left)), b.mu.on_basis(Pair(p.right, q.right)))
                .scale(S.mul(c, k))
                for p, c in rx.terms.items()
                for q, k in b.delta.on_basis(y).terms.items()
            ])
            report.expect("ρ(m·b) = Σ m0b1 ⊗ m1b2", (x, y), lhs, rhs, teq)
    return report


@dataclass
class InvariantSet:
    """Elements of a carrier satisfying a defining condition.

    ``elements`` and ``generators`` are ``None`` when only the membership
    predicate is available.
    """

    name: str
    predicate: Callable[[Vector], bool]
    elements: list[Vector] | None = None
    generators: list[Vector] | None = None

    def __contains__(self, v: Vector) -> bool:
        return self.predicate(v)


def _minimal_generators(S: Semiring, elements: list[Vector]) -> list[Vector]:
    gens: list[Vector] = []
    span = {Vector.zero(S)}
    for v in sorted(elements, key=lambda v: (len(v), [sort_key(b) for b in v.support()])):
        if v not in span:
            gens.append(v)
            span = span_closure(S, gens)
    return gens


def _invariant_set(name: str, S: Semiring, carrier: Sequence, pred, d_budget: int, enumerate_: bool) -> InvariantSet:
    if not enumerate_ or S.enumeration is None:
        return InvariantSet(name, pred)
    els = [v for v in enumerate_vectors(S, list(carrier), d_budget, name) if pred(v)]
    return InvariantSet(name, pred, els, _minimal_generators(S, els))


def invariants(m: HopfModuleDesc, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET) -> InvariantSet:
    """{v : v·b = ε(b)v for basis b ≤ d}."""
    b = m.over
    bs = basis_upto(b, d)
    eq = b.quotient.equal

    def pred(v: Vector) -> bool:
        return all(eq(m.act(v, Vector.basis(v.semiring, y)), v.scale(b.epsilon.on_basis(y))) for y in bs)

    carrier = m.basis.elements() if m.basis.finite else None
    return _invariant_set(f"invariants of {m.name}", m.semiring, carrier or [], pred, budget, carrier is not None)


def coinvariants(m: HopfModuleDesc, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET) -> InvariantSet:
    """{v : ρ(v) = v⊗1}."""
    b = m.over
    teq = tensor_equal_fn(b.quotient)

    def pred(v: Vector) -> bool:
        return teq(m.coact(v), tensor_vec(v, b.eta))

    carrier = m.basis.elements() if m.basis.finite else None
    return _invariant_set(f"coinvariants of {m.name}", m.semiring, carrier or [], pred, budget, carrier is not None)


# -- γ, ω and the fundamental theorem ------------------------------------------


def gamma_map(b) -> LinearMap:
    """a⊗c ↦ Σ a·c1 ⊗ c2."""
    S = b.semiring

    def assign(p):
        return vsum(S, [tensor_vec(b.mu.on_basis(Pair(p.left, q.left)), Vector.basis(S, q.right)).scale(k)
                        for q, k in b.delta.on_basis(p.right).terms.items()])

    return LinearMap(S, assign, "γ")


def omega_map(h: HopfDesc) -> LinearMap:
    """a⊗c ↦ Σ a·𝔞(c1) ⊗ c2."""
    S = h.semiring

    def assign(p):
        parts = []
        for q, k in h.delta.on_basis(p.right).terms.items():
            left = h.product(Vector.basis(S, p.left), h.antipode.on_basis(q.left))
            parts.append(tensor_vec(left, Vector.basis(S, q.right)).scale(k))
        return vsum(S, parts)

    return LinearMap(S, assign, "ω")


def verify_gamma_iso(h: HopfDesc, d: int = DEFAULT_DEGREE) -> CheckReport:
    S = h.semiring
    report = CheckReport(f"γ/ω inverse pair on {h.name}", bound=d)
    teq = tensor_equal_fn(h.quotient, report)
    g, w = gamma_map(h), omega_map(h)
    elems = basis_upto(h, d)
    for x, y in itertools.product(elems, repeat=2):
        p = Vector.basis(S, Pair(x, y))
        report.expect("ω∘γ = id", (x, y), lin_apply(w, g.on_basis(Pair(x, y))), p, teq)
        report.expect("γ∘ω = id", (x, y), lin_apply(g, w.on_basis(Pair(x, y))), p, teq)
    return report


@dataclass
class ImageCertificate:
    target: Vector
    in_image: bool
    preimage: Vector | None
    searched: int

    def describe(self) -> str:
        if self.in_image:
            return f"{self.target.pretty()} = γ({self.preimage.pretty()})"
        return f"{self.target.pretty()} is outside the image of γ ({self.searched} combinations searched)"


def gamma_image_certificate(b, target: Vector, d: int = 1, budget: int = DEFAULT_BUDGET) -> ImageCertificate:
    """Decide whether ``target`` is γ of some combination of basis pairs of total degree ≤ d."""
    S = b.semiring
    elems = basis_upto(b, d)
    pairs = [Pair(x, y) for x in elems for y in elems if x.degree + y.degree <= d]
    g = gamma_map(b)
    teq = tensor_equal_fn(b.quotient)
    n = 0
    for v in enumerate_vectors(S, pairs, budget, "γ image search"):
        n += 1
        if teq(lin_apply(g, v), target):
            return ImageCertificate(target, True, v, n)
    return ImageCertificate(target, False, None, n)


def psi_map(m: HopfModuleDesc) -> LinearMap:
    """m⊗b ↦ m·b, restricted in use to coinvariants ⊗ B."""
    return LinearMap(m.semiring, lambda p: m.action.on_basis(p), "ψ")


def psi_inverse(m: HopfModuleDesc, h: HopfDesc) -> LinearMap:
    """m ↦ Σ m0·𝔞(m1) ⊗ m2 via the iterated coaction."""
    S = m.semiring

    def assign(x):
        rx = m.coaction.on_basis(x)
        parts = []
        for p, c in rx.terms.items():
            for q, k in h.delta.on_basis(p.right).terms.items():
                left = m.act(Vector.basis(S, p.left), h.antipode.on_basis(q.left))
                parts.append(tensor_vec(left, Vector.basis(S, q.right)).scale(S.mul(c, k)))
        return vsum(S, parts)

    return LinearMap(S, assign, "ψ⁻¹")


def verify_fundamental(m: HopfModuleDesc, h: HopfDesc, d: int = DEFAULT_DEGREE,
                       budget: int = DEFAULT_BUDGET) -> CheckReport:
    """ψ and its candidate inverse are mutually inverse between coinvariants⊗B and M."""
    if not isinstance(h, HopfDesc):
        raise ConfigurationError(f"{h.name} has no antipode")
    S = m.semiring
    if S.enumeration is None or not m.basis.finite:
        raise UnsupportedError("the fundamental-theorem check enumerates a finite carrier over a finite semiring")
    report = CheckReport(f"fundamental theorem for {m.name}", bound=d)
    coinv = coinvariants(m, d, budget)
    report.notes.append(f"{len(coinv.elements)} coinvariants, generators: "
                        + ", ".join(v.pretty() for v in coinv.generators))
    psi, inv = psi_map(m), psi_inverse(m, h)
    eq = h.quotient.equal
    teq = tensor_equal_fn(h.quotient, report)
    carrier = m.basis.elements()
    for v in enumerate_vectors(S, carrier, budget, "carrier enumeration"):
        w = lin_apply(inv, v)
        report.expect("ψ∘ψ⁻¹ = id", (v,), lin_apply(psi, w), v, eq)
        lifted = vsum(S, [tensor_vec(m.coaction.on_basis(p.left), Vector.basis(S, p.right)).scale(c)
                          for p, c in w.terms.items()])
        expected = vsum(S, [tensor_vec(tensor_vec(Vector.basis(S, p.left), h.eta), Vector.basis(S, p.right))
                            .scale(c) for p, c in w.terms.items()])
        report.expect("ψ⁻¹ lands in coinvariants⊗B", (v,), lifted, expected, teq)
    for g in coinv.generators:
        for y in basis_upto(h, d):
            gy = tensor_vec(g, Vector.basis(S, y))
            report.expect("ψ⁻¹∘ψ = id", (g, y), lin_apply(inv, lin_apply(psi, gy)), gy, teq)
    return report


# -- duals ---------------------------------------------------------------------


def free_on_representatives(h):
    """The same structure on the free semimodule spanned by quotient representatives.

    A lattice quotient over a ring, with every basis element a multiple of
    representatives that are themselves basis elements, is free on those
    representatives; structure maps are pushed through the quotient image.
    """
    q = h.quotient
    S = h.semiring
    if not isinstance(q, LatticeQuotient) or not S.is_ring:
        raise UnsupportedError(f"{h.name}: only lattice quotients over a ring reduce to a free carrier")
    elems = h.basis.elements()
    reps = sorted({r for x in elems for r in q.basis_image(x)}, key=sort_key)
    stray = [r for r in reps if r not in h.basis]
    if stray:
        raise UnsupportedError(f"{h.name}: representative {stray[0].pretty()} is not a basis element")

    def down(v: Vector) -> Vector:
        return Vector(S, q.image(v).items())

    args = dict(
        mu=LinearMap(S, lambda p: down(h.mu.on_basis(p)), "μ"),
        eta=down(h.eta),
        delta=LinearMap(S, lambda x: down(h.delta.on_basis(x)), "Δ"),
        epsilon=Functional(S, lambda x: h.epsilon.on_basis(x), "ε"),
    )
    if isinstance(h, HopfDesc):
        anti = LinearMap(S, lambda x: down(h.antipode.on_basis(x)), "𝔞")
        return make_hopf(h.name, S, FiniteBasis(reps), antipode=anti, **args)
    return make_bisemialgebra(h.name, S, FiniteBasis(reps), **args)


def dual_hopf(h):
    """Transpose every structure map over the dual basis of a finite free carrier.

    Quotients over a ring are first rewritten on their representatives.
    """
    if not h.basis.finite:
        raise UnsupportedError(f"{h.name} has an infinite basis; no finite dual")
    if h.quotient.mode != "free":
        h = free_on_representatives(h)
    S = h.semiring
    elems = h.basis.elements()
    duals = [Dual(x) for x in elems]
    mu_t: dict = {}
    for x, y in itertools.product(elems, repeat=2):
        for z, c in h.mu.on_basis(Pair(x, y)).terms.items():
            mu_t.setdefault(Dual(z), []).append((Pair(Dual(x), Dual(y)), c))
    delta_t: dict = {}
    for z in elems:
        for p, c in h.delta.on_basis(z).terms.items():
            delta_t.setdefault(Pair(Dual(p.left), Dual(p.right)), []).append((Dual(z), c))

    def mu(p):
        return Vector(S, delta_t.get(p, []))

    def delta(f):
        return Vector(S, mu_t.get(f, []))

    eta = Vector(S, [(Dual(x), h.epsilon.on_basis(x)) for x in elems])
    epsilon = Functional(S, lambda f: h.eta.coeff(f.of), "ε")
    name = f"{h.name}*"
    args = dict(mu=LinearMap(S, mu, "μ"), eta=eta, delta=LinearMap(S, delta, "Δ"), epsilon=epsilon)
    if isinstance(h, HopfDesc):
        anti: dict = {}
        for x in elems:
            for z, c in h.antipode.on_basis(x).terms.items():
                anti.setdefault(Dual(z), []).append((Dual(x), c))
        antipode = LinearMap(S, lambda f: Vector(S, anti.get(f, [])), "𝔞")
        return make_hopf(name, S, FiniteBasis(duals), antipode=antipode, **args)
    return make_bisemialgebra(name, S, FiniteBasis(duals), **args)


def double_dual_map(h) -> LinearMap:
    """b ↦ b** (the canonical basis map)."""
    S = h.semiring
    return LinearMap(S, lambda x: Vector.basis(S, Dual(Dual(x))), "b ↦ b**")


# -- searches ------------------------------------------------------------------


def search_antipode(b, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET) -> list[LinearMap]:
    """All maps on basis ≤ d (values supported on basis ≤ d) satisfying both antipode laws."""
    S = b.semiring
    elems = basis_upto(b, d)
    n = len(elems)
    values = list(enumerate_vectors(S, elems, budget, "antipode value enumeration"))
    _guard(S, n * n, budget, "antipode search")
    eq = b.quotient.equal
    coproducts = [(x, b.delta.on_basis(x), counit_vector(b, x)) for x in elems]
    found = []
    for choice in itertools.product(values, repeat=n):
        assign = dict(zip(elems, choice))
        ok = True
        for x, dx, target in coproducts:
            left, right = [], []
            for p, c in dx.terms.items():
                left.append(b.product(assign[p.left], Vector.basis(S, p.right)).scale(c))
                right.append(b.product(Vector.basis(S, p.left), assign[p.right]).scale(c))
            if not (eq(vsum(S, left), target) and eq(vsum(S, right), target)):
                ok = False
                break
        if ok:
            found.append(LinearMap(S, assign, "𝔞"))
    return found


def search_separability_idempotent(h, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET) -> list[Vector]:
    """e ∈ H⊗H with h·e = e·h for basis h and μ(e) = 1."""
    S = h.semiring
    elems = basis_upto(h, d)
    pairs = [Pair(x, y) for x in elems for y in elems]
    eq = h.quotient.equal
    teq = tensor_equal_fn(h.quotient)
    found = []
    for e in enumerate_vectors(S, pairs, budget, "separability search"):
        if not eq(lin_apply(h.mu, e), h.eta):
            continue
        ok = True
        for x in elems:
            left = vsum(S, [tensor_vec(h.mu.on_basis(Pair(x, p.left)), Vector.basis(S, p.right)).scale(c)
                            for p, c in e.terms.items()])
            right = vsum(S, [tensor_vec(Vector.basis(S, p.left), h.mu.on_basis(Pair(p.right, x))).scale(c)
                             for p, c in e.terms.items()])
            if not teq(left, right):
                ok = False
                break
        if ok:
            found.append(e)
    return found


def search_coseparability_form(h, d: int = DEFAULT_DEGREE, budget: int = DEFAULT_BUDGET) -> list[Functional]:
    """δ: H⊗H → S with δ∘Δ = ε and (id⊗δ)(Δ⊗id) = (δ⊗id)(id⊗Δ)."""
    S = h.semiring
    elems = basis_upto(h, d)
    pairs = [Pair(x, y) for x in elems for y in elems]
    eq = h.quotient.equal
    found = []
    for delta in enumerate_functionals(S, pairs, budget, "coseparability search"):
        if any(delta(h.delta.on_basis(x)) != h.epsilon.on_basis(x) for x in elems):
            continue
        ok = True
        for x, y in itertools.product(elems, repeat=2):
            lhs = vsum(S, [Vector.basis(S, p.left, S.mul(c, delta.on_basis(Pair(p.right, y))))
                           for p, c in h.delta.on_basis(x).terms.items()])
            rhs = vsum(S, [Vector.basis(S, p.right, S.mul(c, delta.on_basis(Pair(x, p.left))))
                           for p, c in h.delta.on_basis(y).terms.items()])
            if not eq(lhs, rhs):
                ok = False
                break
        if ok:
            delta.name = "δ"
            found.append(delta)
    return found
