"""Reproducible random formula generation.

Corpora must be byte-reproducible from a seed alone, across platforms and
reimplementations, so the generator is pinned down exactly:

PRNG: 64-bit linear congruential generator, state' = (a*state + c) mod 2^64
with a = 6364136223846793005 and c = 1442695040888963407 (Knuth's MMIX
constants), seeded directly with the given seed.  Derived draws:

    next_below(n) = (state' >> 33) % n        after one step
    next_unit()   = (state' >> 11) / 2^53     after one step

Formula sampling with ``n`` variables (taken from p, q, r, ... in order),
a node budget ``b`` and modality probability ``m``:

    sample(b):
        if b < 3: leaf: k = next_below(n + 1); variable k if k < n,
                  otherwise falsity
        else:     connective: |> if next_unit() < m else ->
                  left budget  = 1 + next_below(b - 2)
                  right budget = b - 1 - left budget
                  return connective(sample(left), sample(right))

Trees therefore have at most ``b`` nodes, and identical seeds give
identical formula sequences.
"""

from __future__ import annotations

from .formula import BOT, Atom, Formula, Implies, Rhd

_MULTIPLIER = 6364136223846793005
_INCREMENT = 1442695040888963407
_MASK = (1 << 64) - 1

_VARIABLE_NAMES = "pqrstuvwxyz"


class Lcg:
    """Minimal deterministic PRNG; see the module docstring for identity."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (_MULTIPLIER * self.state + _INCREMENT) & _MASK
        return self.state

    def next_below(self, n: int) -> int:
        return (self.next_u64() >> 33) % n

    def next_unit(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)


def random_formula(rng: Lcg, num_vars: int = 3, node_budget: int = 12,
                   rhd_prob: float = 0.35) -> Formula:
    """Draw one formula; consumes a deterministic number of PRNG steps."""
    names = _VARIABLE_NAMES[:num_vars]

    def sample(budget: int) -> Formula:
        if budget < 3:
            k = rng.next_below(num_vars + 1)
            return Atom(names[k]) if k < num_vars else BOT
        use_rhd = rng.next_unit() < rhd_prob
        left_budget = 1 + rng.next_below(budget - 2)
        right_budget = budget - 1 - left_budget
        left = sample(left_budget)
        right = sample(right_budget)
        return Rhd(left, right) if use_rhd else Implies(left, right)

    return sample(node_budget)


def random_corpus(count: int, seed: int, num_vars: int = 3,
                  node_budget: int = 12, rhd_prob: float = 0.35) -> list:
    """The first ``count`` formulas of the stream seeded with ``seed``."""
    rng = Lcg(seed)
    return [
        random_formula(rng, num_vars=num_vars, node_budget=node_budget,
                       rhd_prob=rhd_prob)
        for _ in range(count)
    ]
