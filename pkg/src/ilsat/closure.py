"""Closure sets of a formula, with stable deterministic indices.

For an input formula the search operates inside three finite sets:

    gamma_rhd    all left/right arguments of |>-subformulas
    gamma_pure   subformulas, plus falsity, plus ``a |> false`` for every
                 ``a`` in gamma_rhd
    gamma_rhd_i  the members of gamma_pure whose root is |>

Signed reasoning (a formula or its negation) is represented downstream as
sign maps over gamma_pure rather than by materializing negations.

gamma_pure is closed under subformulas, every propositional variable it
mentions is itself a member, and the operands of every Implies member are
members; the search procedures rely on all three facts.

Members are indexed in (size, rendered text) order, so indices are
reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .formula import BOT, Formula, Rhd, pretty, size, subformulas


def formula_sort_key(f: Formula) -> tuple:
    return (size(f), pretty(f))


@dataclass(frozen=True)
class ClosureSets:
    gamma_rhd: tuple
    gamma_pure: tuple
    gamma_rhd_i: tuple

    @cached_property
    def pure_index(self) -> dict:
        return {f: i for i, f in enumerate(self.gamma_pure)}

    @cached_property
    def rhd_index(self) -> dict:
        return {f: i for i, f in enumerate(self.gamma_rhd)}

    @cached_property
    def rhd_i_index(self) -> dict:
        return {f: i for i, f in enumerate(self.gamma_rhd_i)}

    @cached_property
    def rhd_i_pure_positions(self) -> tuple:
        """gamma_pure index of each gamma_rhd_i member."""
        return tuple(self.pure_index[f] for f in self.gamma_rhd_i)

    @cached_property
    def boxbot_rhd_i(self) -> tuple:
        """gamma_rhd_i indices of the ``a |> false`` shaped members."""
        return tuple(
            k for k, f in enumerate(self.gamma_rhd_i) if f.right == BOT
        )

    @cached_property
    def rhd_member_positions(self) -> tuple:
        """Per gamma_rhd index j: (pure index of s_j, pure index of s_j |> false)."""
        return tuple(
            (self.pure_index[f], self.pure_index[Rhd(f, BOT)]) for f in self.gamma_rhd
        )

    @cached_property
    def rhd_i_args(self) -> tuple:
        """Per gamma_rhd_i index: gamma_rhd indices of (left, right) arguments.

        The left argument is always a gamma_rhd member; the right one is -1
        exactly when it is falsity and falsity never occurs as a |>-argument
        in the input.
        """
        out = []
        for f in self.gamma_rhd_i:
            left = self.rhd_index[f.left]
            right = self.rhd_index.get(f.right, -1)
            out.append((left, right))
        return tuple(out)

    @property
    def budget(self) -> int:
        """Hard bound on the nesting depth of the recursive search."""
        return len(self.gamma_rhd_i) + 2


def compute_closure(delta: Formula) -> ClosureSets:
    sub = subformulas(delta)
    rhd_nodes = [f for f in sub if isinstance(f, Rhd)]
    gamma_rhd = {f.left for f in rhd_nodes} | {f.right for f in rhd_nodes}
    gamma_pure = set(sub) | {BOT} | {Rhd(f, BOT) for f in gamma_rhd}
    gamma_rhd_i = {f for f in gamma_pure if isinstance(f, Rhd)}
    return ClosureSets(
        gamma_rhd=tuple(sorted(gamma_rhd, key=formula_sort_key)),
        gamma_pure=tuple(sorted(gamma_pure, key=formula_sort_key)),
        gamma_rhd_i=tuple(sorted(gamma_rhd_i, key=formula_sort_key)),
    )


def closure_to_dict(closure: ClosureSets) -> dict:
    """JSON-ready view with formulas rendered as strings."""
    return {
        "gamma_rhd": [pretty(f) for f in closure.gamma_rhd],
        "gamma_pure": [pretty(f) for f in closure.gamma_pure],
        "gamma_rhd_i": [pretty(f) for f in closure.gamma_rhd_i],
    }
