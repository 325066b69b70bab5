"""Module/comodule (co)algebra compatibilities, DK semimodules and smash products.

A datum consists of a bisemialgebra ``B``, a semialgebra ``A`` with a right
``B``-coaction and a semicoalgebra ``C`` with a right ``B``-action.  The
transposed action on ``C*`` is ``(h·g)(c) = g(c·h)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ConfigurationError, UnsupportedError
from .gallery import trivial
from .report import CheckReport
from .semimodule import (
    Basis,
    Dual,
    FiniteBasis,
    LinearMap,
    Pair,
    Vector,
    apply_right_functional,
    lin_apply,
    tensor_vec,
    vsum,
)
from .structures import (
    DEFAULT_DEGREE,
    SemialgebraDesc,
    basis_upto,
    check_morphism,
    tensor_equal_fn,
)

KINDS = ("rma", "rmc", "rca", "com_coal")


@dataclass
class DKDatum:
    b: object
    a: object  # semialgebra (needs mu, eta)
    a_coaction: LinearMap  # a -> Σ a0 ⊗ a1, a1 in B
    c: object  # semicoalgebra (needs delta, epsilon)
    c_action: LinearMap  # Pair(c, h) -> C
    name: str = "datum"

    @property
    def semiring(self):
        return self.b.semiring

    def c_basis(self, d: int) -> list:
        return basis_upto(self.c, d)

    def a_basis(self, d: int) -> list:
        return basis_upto(self.a, d)


def hopf_datum(b) -> DKDatum:
    """A = B coacting by Δ, C = B acting by μ."""
    return DKDatum(b, b, b.delta, b, b.mu, f"({b.name}, {b.name}, {b.name})")


def trivial_datum(a, c) -> DKDatum:
    """B = S with the trivial coaction on A and trivial action on C."""
    S = a.semiring
    b = trivial(S)
    one = b.eta
    coaction = LinearMap(S, lambda x: tensor_vec(Vector.basis(S, x), one), "ρ_A")
    action = LinearMap(S, lambda p: Vector.basis(S, p.left), "ρ_C")
    return DKDatum(b, a, coaction, c, action, f"(S, {a.name}, {c.name})")


def _act(action: LinearMap, u: Vector, h: Vector) -> Vector:
    return lin_apply(action, tensor_vec(u, h))


def check_action_coaction(kind: str, structure, map_: LinearMap, b, d: int = DEFAULT_DEGREE) -> CheckReport:
    """Module/comodule (co)algebra laws.

    ``rma``: A right B-module semialgebra, (aã)h = Σ (a h1)(ã h2), 1·h = ε(h)1.
    ``rmc``: C right B-module semicoalgebra, Δ(c h) = Σ c1h1 ⊗ c2h2, ε(ch) = ε(c)ε(h).
    ``rca``: A right B-comodule semialgebra, ρ(aã) = Σ a0ã0 ⊗ a1ã1, ρ(1) = 1⊗1.
    ``com_coal``: C right B-comodule semicoalgebra, Σ c0,1 ⊗ c0,2 ⊗ c1 = Σ c1,0 ⊗ c2,0 ⊗ c1,1 c2,1
    and Σ ε(c0) c1 = ε(c)1.
    """
    if kind not in KINDS:
        raise ConfigurationError(f"unknown compatibility kind {kind!r}")
    needs = "mu" if kind in ("rma", "rca") else "delta"
    if not hasattr(structure, needs):
        raise ConfigurationError(f"{kind} needs a {'semialgebra' if needs == 'mu' else 'semicoalgebra'}")
    S = b.semiring
    report = CheckReport(f"{kind} for {structure.name} over {b.name}", bound=d)
    q = getattr(structure, "quotient", b.quotient)
    eq = q.equal
    teq = tensor_equal_fn(q, report)
    xs = basis_upto(structure, d)
    hs = basis_upto(b, d)

    def vb(x):
        return Vector.basis(S, x)

    if kind == "rma":
        for x, y, h in itertools.product(xs, xs, hs):
            lhs = _act(map_, structure.mu.on_basis(Pair(x, y)), vb(h))
            rhs = vsum(S, [structure.product(map_.on_basis(Pair(x, p.left)), map_.on_basis(Pair(y, p.right))).scale(k)
                           for p, k in b.delta.on_basis(h).terms.items()])
            report.expect("(aã)h = Σ (ah1)(ãh2)", (x, y, h), lhs, rhs, eq)
        for h in hs:
            report.expect("1·h = ε(h)1", (h,), _act(map_, structure.eta, vb(h)),
                          structure.eta.scale(b.epsilon.on_basis(h)), eq)
    elif kind == "rmc":
        for x, h in itertools.product(xs, hs):
            ch = map_.on_basis(Pair(x, h))
            lhs = lin_apply(structure.delta, ch)
            rhs = vsum(S, [tensor_vec(map_.on_basis(Pair(p.left, r.left)), map_.on_basis(Pair(p.right, r.right)))
                           .scale(S.mul(k, m))
                           for p, k in structure.delta.on_basis(x).terms.items()
                           for r, m in b.delta.on_basis(h).terms.items()])
            report.expect("Δ(ch) = Σ c1h1 ⊗ c2h2", (x, h), lhs, rhs, teq)
            report.expect("ε(ch) = ε(c)ε(h)", (x, h), structure.epsilon(ch),
                          S.mul(structure.epsilon.on_basis(x), b.epsilon.on_basis(h)))
    elif kind == "rca":
        for x, y in itertools.product(xs, repeat=2):
            lhs = lin_apply(map_, structure.mu.on_basis(Pair(x, y)))
            rhs = vsum(S, [tensor_vec(structure.mu.on_basis(Pair(p.left, r.left)), b.mu.on_basis(Pair(p.right, r.right)))
                           .scale(S.mul(k, m))
                           for p, k in map_.on_basis(x).terms.items()
                           for r, m in map_.on_basis(y).terms.items()])
            report.expect("ρ(aã) = Σ a0ã0 ⊗ a1ã1", (x, y), lhs, rhs, teq)
        report.expect("ρ(1) = 1⊗1", (), lin_apply(map_, structure.eta), tensor_vec(structure.eta, b.eta), teq)
    else:
        for x in xs:
            rx = map_.on_basis(x)
            lhs = vsum(S, [Vector(S, [(Pair(r.left, Pair(r.right, p.right)), S.mul(k, m))
                                      for r, m in structure.delta.on_basis(p.left).terms.items()])
                           for p, k in rx.terms.items()])
            rhs = vsum(S, [Vector(S, [(Pair(u.left, Pair(w.left, bb)), S.mul(S.mul(k, m1), S.mul(m2, m3)))
                                      for u, m1 in map_.on_basis(p.left).terms.items()
                                      for w, m2 in map_.on_basis(p.right).terms.items()
                                      for bb, m3 in b.mu.on_basis(Pair(u.right, w.right)).terms.items()])
                           for p, k in structure.delta.on_basis(x).terms.items()])
            report.expect("Σ c0,1⊗c0,2⊗c1 = Σ c1,0⊗c2,0⊗c1,1c2,1", (x,), lhs, rhs, teq)
            counit = vsum(S, [Vector.basis(S, p.right, S.mul(k, structure.epsilon.on_basis(p.left)))
                              for p, k in rx.terms.items()])
            report.expect("Σ ε(c0)c1 = ε(c)1", (x,), counit, b.eta.scale(structure.epsilon.on_basis(x)), eq)
    return report


def check_datum(datum: DKDatum, d: int = DEFAULT_DEGREE) -> CheckReport:
    report = CheckReport(f"datum {datum.name}", bound=d)
    report.merge(check_action_coaction("rca", datum.a, datum.a_coaction, datum.b, d))
    report.merge(check_action_coaction("rmc", datum.c, datum.c_action, datum.b, d))
    return report


# -- DK semimodules --------------------------------------------------------------


@dataclass
class DKModule:
    """Right A-module and right C-comodule on a common carrier."""

    name: str
    basis: Basis
    action: LinearMap  # Pair(m, a) -> M
    coaction: LinearMap  # m -> Σ m0 ⊗ m1, m1 in C
    notes: list[str] = field(default_factory=list)

    def elements(self, d: int) -> list:
        return self.basis.elements() if self.basis.finite else self.basis.elements(d)


def regular_dk_module(datum: DKDatum) -> DKModule:
    """M = A with its multiplication and, when C = B, the coaction of A."""
    return DKModule(f"{datum.a.name} (regular)", datum.a.basis, datum.a.mu, datum.a_coaction)


def dk_module_from_hopf_module(m) -> DKModule:
    return DKModule(m.name, m.basis, m.action, m.coaction)


def _dk_sides(m: DKModule, datum: DKDatum, x, a) -> tuple[Vector, Vector]:
    S = datum.semiring
    lhs = lin_apply(m.coaction, m.action.on_basis(Pair(x, a)))
    parts = []
    for p, k in m.coaction.on_basis(x).terms.items():
        for r, j in datum.a_coaction.on_basis(a).terms.items():
            parts.append(tensor_vec(m.action.on_basis(Pair(p.left, r.left)),
                                    datum.c_action.on_basis(Pair(p.right, r.right))).scale(S.mul(k, j)))
    return lhs, vsum(S, parts)


def check_dk_module(m: DKModule, datum: DKDatum, d: int = DEFAULT_DEGREE) -> CheckReport:
    """ρ(m·a) = Σ m0·a0 ⊗ m1·a1, plus the unit and counit laws."""
    S = datum.semiring
    report = CheckReport(f"DK module {m.name}", bound=d)
    q = datum.b.quotient
    eq, teq = q.equal, tensor_equal_fn(q, report)
    for x in m.elements(d):
        vx = Vector.basis(S, x)
        report.expect("m·1 = m", (x,), lin_apply(m.action, tensor_vec(vx, datum.a.eta)), vx, eq)
        report.expect("(id⊗ε)ρ = id", (x,), apply_right_functional(datum.c.epsilon, m.coaction.on_basis(x)), vx, eq)
        for a in datum.a_basis(d):
            lhs, rhs = _dk_sides(m, datum, x, a)
            report.expect("ρ(ma) = Σ m0a0 ⊗ m1a1", (x, a), lhs, rhs, teq)
    return report


def entwining_map(datum: DKDatum) -> LinearMap:
    """c⊗a ↦ Σ a0 ⊗ c·a1."""
    S = datum.semiring

    def assign(p):
        return vsum(S, [tensor_vec(Vector.basis(S, r.left), datum.c_action.on_basis(Pair(p.left, r.right))).scale(k)
                        for r, k in datum.a_coaction.on_basis(p.right).terms.items()])

    return LinearMap(S, assign, "ψ")


def check_entwining_equivalence(m: DKModule, datum: DKDatum, d: int = DEFAULT_DEGREE) -> CheckReport:
    """On each basis pair, the DK law holds iff ρ(m·a) = Σ m0·ψ(m1⊗a)."""
    S = datum.semiring
    psi = entwining_map(datum)
    report = CheckReport(f"DK law vs ψ-intertwining on {m.name}", bound=d)
    teq = tensor_equal_fn(datum.b.quotient, report)
    for x in m.elements(d):
        for a in datum.a_basis(d):
            lhs, rhs = _dk_sides(m, datum, x, a)
            dk = teq(lhs, rhs)
            via_psi = vsum(S, [
                tensor_vec(m.action.on_basis(Pair(p.left, r.left)), Vector.basis(S, r.right)).scale(S.mul(k, j))
                for p, k in m.coaction.on_basis(x).terms.items()
                for r, j in psi.on_basis(Pair(p.right, a)).terms.items()
            ])
            report.expect("DK law ⇔ ψ-intertwining", (x, a), dk, teq(lhs, via_psi))
    return report


# -- smash product and Hom product ----------------------------------------------


def _finite_c_basis(datum: DKDatum, d: int | None) -> list:
    if datum.c.basis.finite:
        return datum.c.basis.elements()
    if d is None:
        raise UnsupportedError("C has an infinite basis; pass a truncation degree")
    return datum.c.basis.elements(d)


def smash_product(datum: DKDatum, d: int | None = None) -> SemialgebraDesc:
    """A ⊗ C* with (a#f)(ã#g) = Σ a0ã # (a1·g)∗f and unit 1#ε."""
    S = datum.semiring
    cs = _finite_c_basis(datum, d)
    a_elems = datum.a.basis.elements() if datum.a.basis.finite else basis_upto(datum.a, d)
    c_delta = {c: datum.c.delta.on_basis(c) for c in cs}

    def transported(g_of, f_of, h) -> list:
        # coefficients of (h·g)∗f on the dual basis
        out = []
        for ck in cs:
            acc = S.zero
            for p, k in c_delta[ck].terms.items():
                if p.right != f_of:
                    continue
                acc = S.add(acc, S.mul(k, datum.c_action.on_basis(Pair(p.left, h)).coeff(g_of)))
            if acc != S.zero:
                out.append((Dual(ck), acc))
        return out

    def mu(p):
        (a, f), (a2, g) = (p.left.left, p.left.right), (p.right.left, p.right.right)
        parts = []
        for r, k in datum.a_coaction.on_basis(a).terms.items():
            left = datum.a.mu.on_basis(Pair(r.left, a2))
            right = Vector(S, transported(g.of, f.of, r.right))
            parts.append(tensor_vec(left, right).scale(k))
        return vsum(S, parts)

    eps_star = Vector(S, [(Dual(c), datum.c.epsilon.on_basis(c)) for c in cs])
    basis = FiniteBasis([Pair(a, Dual(c)) for a in a_elems for c in cs])
    return SemialgebraDesc(f"{datum.a.name}#{datum.c.name}*", S, basis, LinearMap(S, mu, "μ#"),
                           tensor_vec(datum.a.eta, eps_star))


def smash_embedding(datum: DKDatum, d: int | None = None) -> LinearMap:
    """a ↦ a#ε."""
    S = datum.semiring
    cs = _finite_c_basis(datum, d)
    eps_star = Vector(S, [(Dual(c), datum.c.epsilon.on_basis(c)) for c in cs])
    return LinearMap(S, lambda a: tensor_vec(Vector.basis(S, a), eps_star), "a ↦ a#ε")


def check_smash_embedding(datum: DKDatum, d: int = DEFAULT_DEGREE) -> CheckReport:
    smash = smash_product(datum, d)
    return check_morphism("algebra", smash_embedding(datum, d), datum.a.algebra if hasattr(datum.a, "algebra")
                          else datum.a, smash, d)


def dk_hom_product(f: LinearMap, g: LinearMap, datum: DKDatum, name: str | None = None) -> LinearMap:
    """(f·g)(c) = Σ f(c2)0 · g(c1·f(c2)1)."""
    S = datum.semiring

    def assign(c):
        parts = []
        for p, k in datum.c.delta.on_basis(c).terms.items():
            fc2 = lin_apply(datum.a_coaction, f.on_basis(p.right))
            for r, j in fc2.terms.items():
                moved = datum.c_action.on_basis(Pair(p.left, r.right))
                parts.append(datum.a.product(Vector.basis(S, r.left), lin_apply(g, moved)).scale(S.mul(k, j)))
        return vsum(S, parts)

    return LinearMap(S, assign, name or f"{f.name}·{g.name}")


def hom_unit(datum: DKDatum) -> LinearMap:
    """η_A∘ε_C."""
    S = datum.semiring
    return LinearMap(S, lambda c: datum.a.eta.scale(datum.c.epsilon.on_basis(c)), "η∘ε")


def elementary_maps(datum: DKDatum, d: int = DEFAULT_DEGREE) -> list[LinearMap]:
    """E_{c,a}: c ↦ a, every other basis element ↦ 0."""
    S = datum.semiring
    cs = _finite_c_basis(datum, d)
    out = []
    for c in cs:
        for a in basis_upto(datum.a, d):
            out.append(LinearMap(S, lambda x, c=c, a=a: Vector.basis(S, a) if x == c else Vector.zero(S),
                                 f"E[{c.pretty()},{a.pretty()}]"))
    return out


def check_hom_product(datum: DKDatum, d: int = DEFAULT_DEGREE, maps: list[LinearMap] | None = None) -> CheckReport:
    """Associativity and unitality of the Hom product on the given (default: elementary) maps."""
    maps = elementary_maps(datum, d) if maps is None else maps
    cs = _finite_c_basis(datum, d)
    eq = datum.b.quotient.equal
    unit = hom_unit(datum)
    report = CheckReport(f"Hom product for {datum.name}", bound=d)
    prods = {(i, j): dk_hom_product(f, g, datum) for i, f in enumerate(maps) for j, g in enumerate(maps)}
    for i, f in enumerate(maps):
        fu, uf = dk_hom_product(f, unit, datum), dk_hom_product(unit, f, datum)
        for c in cs:
            report.expect("f·(η∘ε) = f", (f.name, c), fu.on_basis(c), f.on_basis(c), eq)
            report.expect("(η∘ε)·f = f", (f.name, c), uf.on_basis(c), f.on_basis(c), eq)
    for (i, f), (j, g), (k, h) in itertools.product(enumerate(maps), repeat=3):
        left = dk_hom_product(prods[(i, j)], h, datum)
        right = dk_hom_product(f, prods[(j, k)], datum)
        for c in cs:
            if not eq(left.on_basis(c), right.on_basis(c)):
                report.fail("(f·g)·h = f·(g·h)", (f.name, g.name, h.name, c), left.on_basis(c), right.on_basis(c))
                break
        else:
            report.tick("(f·g)·h = f·(g·h)")
    return report
