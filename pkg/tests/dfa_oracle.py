"""Plain-Python DFA simulation, independent of the library's linear algebra."""
from __future__ import annotations

import itertools

CONTAINS_X = {"states": ["p", "q"], "initial": "p", "accepting": {"q"},
              "delta": {("p", "x"): "q", ("p", "y"): "p", ("q", "x"): "q", ("q", "y"): "q"}}
ENDS_Y = {"states": ["p", "q"], "initial": "p", "accepting": {"q"},
          "delta": {("p", "x"): "p", ("p", "y"): "q", ("q", "x"): "p", ("q", "y"): "q"}}


def accepts(dfa, letters) -> bool:
    state = dfa["initial"]
    for a in letters:
        state = dfa["delta"][(state, a)]
    return state in dfa["accepting"]


def product_accepts(d1, d2, letters) -> bool:
    """Run the product automaton on pairs of states."""
    state = (d1["initial"], d2["initial"])
    for a in letters:
        state = (d1["delta"][(state[0], a)], d2["delta"][(state[1], a)])
    return state[0] in d1["accepting"] and state[1] in d2["accepting"]


def split_accepts(d1, d2, letters) -> bool:
    """Some split of the positions into two complementary subwords is accepted by d1 and d2."""
    n = len(letters)
    for mask in itertools.product((0, 1), repeat=n):
        left = [a for a, m in zip(letters, mask) if m]
        right = [a for a, m in zip(letters, mask) if not m]
        if accepts(d1, left) and accepts(d2, right):
            return True
    return False


def words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)
