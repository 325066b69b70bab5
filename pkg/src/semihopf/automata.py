"""S-linear automata over a bisemialgebra (right-action convention).

An automaton is a right ``B``-semimodule ``M`` with a start vector ``s`` and an
observation functional ``Ω``; its language is ``b ↦ Ω(s·b)``.  The tensor
automaton acts on ``M⊗N`` diagonally through ``Δ``, and its language is the
convolution of the two component languages.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from .errors import ParameterError, SemiringMismatch
from .report import CheckReport
from .semimodule import (
    Atom,
    Functional,
    LinearMap,
    Pair,
    Vector,
    Word,
    WordBasis,
    lin_apply,
    same_semiring,
    tensor_vec,
    vsum,
)
from .structures import DEFAULT_DEGREE, basis_upto, convolve_functionals


@dataclass
class LinearAutomaton:
    over: object
    state_basis: list
    action: LinearMap  # Pair(state, b) -> state vector
    start: Vector
    observe: Functional
    name: str = "A"
    notes: list[str] = field(default_factory=list)

    @property
    def semiring(self):
        return self.over.semiring

    def act(self, m: Vector, b: Vector) -> Vector:
        return lin_apply(self.action, tensor_vec(m, b))

    def language(self) -> Functional:
        S = self.semiring
        return Functional(S, lambda b: run_language(self, Vector.basis(S, b)), f"ρ[{self.name}]")


def run_language(aut: LinearAutomaton, inp: Vector):
    """Ω(s·input)."""
    return aut.observe(aut.act(aut.start, inp))


def check_automaton(aut: LinearAutomaton, d: int = DEFAULT_DEGREE) -> CheckReport:
    """(m·b)·b' = m·(bb') and m·1 = m on state and B basis elements ≤ d."""
    S = aut.semiring
    b = aut.over
    report = CheckReport(f"automaton {aut.name}", bound=d)
    eq = b.quotient.equal
    bs = basis_upto(b, d)
    for m in aut.state_basis:
        vm = Vector.basis(S, m)
        report.expect("m·1 = m", (m,), aut.act(vm, b.eta), vm, eq)
        for x, y in itertools.product(bs, repeat=2):
            lhs = aut.act(aut.action.on_basis(Pair(m, x)), Vector.basis(S, y))
            rhs = aut.act(vm, b.mu.on_basis(Pair(x, y)))
            report.expect("(m·b)·b' = m·(bb')", (m, x, y), lhs, rhs, eq)
    return report


def _state(q) -> Atom:
    return q if isinstance(q, Atom) else Atom(str(q))


def from_dfa(states: Sequence[Hashable], transitions: Mapping, accepting, initial, b,
             name: str = "dfa") -> LinearAutomaton:
    """Boolean automaton of a DFA over the word bisemialgebra ``b``.

    ``transitions`` maps ``(state, letter)`` to a state.  Missing entries send
    the state to zero (a rejecting sink).
    """
    S = b.semiring
    alphabet = getattr(b.basis, "alphabet", None)
    if alphabet is None:
        raise ParameterError(f"{b.name} is not a word structure")
    names = {q: _state(q) for q in states}
    if initial not in names:
        raise ParameterError(f"initial state {initial!r} is not declared")
    for (q, a), r in transitions.items():
        if a not in alphabet:
            raise ParameterError(f"unknown letter {a!r}; alphabet is {list(alphabet)}")
        if q not in names or r not in names:
            raise ParameterError(f"transition {(q, a)!r} -> {r!r} uses an undeclared state")
    for q in accepting:
        if q not in names:
            raise ParameterError(f"accepting state {q!r} is not declared")
    back = {v: k for k, v in names.items()}

    def action(p):
        q = back[p.left]
        for a in p.right.letters:
            if a not in alphabet:
                raise ParameterError(f"unknown letter {a!r}")
            q = transitions.get((q, a))
            if q is None:
                return Vector.zero(S)
        return Vector.basis(S, names[q])

    return LinearAutomaton(
        b, [names[q] for q in states], LinearMap(S, action, f"δ[{name}]"),
        Vector.basis(S, names[initial]),
        Functional(S, {names[q]: S.one for q in accepting}, f"Ω[{name}]", default_zero=True),
        name,
    )


def trivial_automaton(b, name: str = "trivial") -> LinearAutomaton:
    """One state q with q·w = ε(w)q, start q, Ω(q) = 1; its language is ε."""
    S = b.semiring
    q = Atom("q")
    return LinearAutomaton(
        b, [q], LinearMap(S, lambda p: Vector.basis(S, q, b.epsilon.on_basis(p.right)), "ε-action"),
        Vector.basis(S, q), Functional(S, {q: S.one}, "Ω"), name,
    )


def tensor_automata(a1: LinearAutomaton, a2: LinearAutomaton) -> LinearAutomaton:
    """States m⊗n, (m⊗n)·b = Σ (m·b1)⊗(n·b2), start s⊗s', observation Ω⊗Ω'.

    Over a word structure the action is defined on letters through Δ and
    extended letter by letter, so it is a module action by construction; the
    convolution law then tests the component actions rather than restating them.
    """
    if a1.over is not a2.over and a1.over.name != a2.over.name:
        raise SemiringMismatch("automata over different bisemialgebras")
    if not same_semiring(a1.semiring, a2.semiring):
        raise SemiringMismatch("automata over different semirings")
    b = a1.over
    S = b.semiring
    words = isinstance(b.basis, WordBasis)

    def step(pm: Pair, x) -> Vector:
        return vsum(S, [tensor_vec(a1.action.on_basis(Pair(pm.left, q.left)),
                                   a2.action.on_basis(Pair(pm.right, q.right))).scale(k)
                        for q, k in b.delta.on_basis(x).terms.items()])

    def action(p):
        pm, x = p.left, p.right
        if not (words and isinstance(x, Word)) or len(x.letters) <= 1:
            return step(pm, x)
        current = Vector.basis(S, pm)
        for letter in x.letters:
            current = vsum(S, [step(r, Word((letter,))).scale(c) for r, c in current.terms.items()])
        return current

    o1, o2 = a1.observe, a2.observe
    observe = Functional(S, lambda p: S.mul(o1.on_basis(p.left), o2.on_basis(p.right)), "Ω⊗Ω'")
    return LinearAutomaton(
        b, [Pair(m, n) for m in a1.state_basis for n in a2.state_basis],
        LinearMap(S, action, "diagonal"), tensor_vec(a1.start, a2.start), observe,
        f"{a1.name}⊗{a2.name}",
    )


def verify_language_convolution(a1: LinearAutomaton, a2: LinearAutomaton, max_len: int = 5) -> CheckReport:
    """ρ_{A⊗A'}(w) = (ρ∗ρ')(w) for every word (basis element) of degree ≤ max_len."""
    b = a1.over
    S = b.semiring
    t = tensor_automata(a1, a2)
    conv = convolve_functionals(a1.language(), a2.language(), b)
    report = CheckReport(f"language convolution {a1.name} × {a2.name}", bound=max_len)
    for w in basis_upto(b, max_len):
        report.expect("ρ⊗ = ρ∗ρ'", (w,), run_language(t, Vector.basis(S, w)), conv.on_basis(w))
    return report


def words_upto(alphabet: Sequence, max_len: int) -> list[Word]:
    return WordBasis(alphabet).elements(max_len)
