"""Propositional reasoning over the closure, treating |>-formulas as atoms.

Every member of gamma_pure is mapped to a purely propositional shape: a
variable, falsity, an implication between two other members, or an opaque
atom standing for a whole |>-formula.  A *signed set* is a partial map
``gamma_pure index -> bool`` (True for the formula, False for its
negation); a maximal consistent set is a total sign vector that some truth
assignment to the abstract atoms induces.

Enumeration backtracks over the abstract atoms (variables first, then
|>-members, both in closure index order, True branch before False) with
unit-style propagation of the signed constraints.  The stream is lazy:
emitted vectors are produced one at a time and nothing proportional to the
number of solutions is ever stored.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Optional

from .closure import ClosureSets
from .formula import Atom, Bottom, Rhd

# A SignedSet is a Mapping[int, bool] over gamma_pure indices.
SignedSet = Mapping[int, bool]
# A MaxConsistentSet is a total sign vector over gamma_pure.
MaxConsistentSet = tuple

_FALSE, _ATOM, _IMP = 0, 1, 2


class _Abstraction:
    """Compiled propositional view of one closure."""

    def __init__(self, closure: ClosureSets):
        kinds = []
        children = []
        index = closure.pure_index
        for f in closure.gamma_pure:
            if isinstance(f, Bottom):
                kinds.append(_FALSE)
                children.append((-1, -1))
            elif isinstance(f, (Atom, Rhd)):
                kinds.append(_ATOM)
                children.append((-1, -1))
            else:
                # gamma_pure is subformula-closed, so both operands are members
                kinds.append(_IMP)
                children.append((index[f.left], index[f.right]))
        self.kinds = tuple(kinds)
        self.children = tuple(children)
        variable_positions = [
            i for i, f in enumerate(closure.gamma_pure) if isinstance(f, Atom)
        ]
        rhd_positions = [
            i for i, f in enumerate(closure.gamma_pure) if isinstance(f, Rhd)
        ]
        self.atom_order = tuple(variable_positions + rhd_positions)


def _abstraction(closure: ClosureSets) -> _Abstraction:
    # cached on the closure instance itself (same mechanism as
    # cached_property): value-hashing the closure here would dominate
    # the runtime of small recursive searches
    ab = closure.__dict__.get("_mcs_abstraction")
    if ab is None:
        ab = _Abstraction(closure)
        closure.__dict__["_mcs_abstraction"] = ab
    return ab


def abstract_atoms(closure: ClosureSets) -> tuple:
    """The abstraction alphabet: variables, then |>-members, index order."""
    ab = _abstraction(closure)
    return tuple(closure.gamma_pure[i] for i in ab.atom_order)


def signed_set(
    closure: ClosureSets, literals: Iterable
) -> Optional[dict]:
    """Build a signed set from (formula, sign) pairs.

    Returns None when some formula would carry both signs; raises KeyError
    for formulas outside gamma_pure.
    """
    out: dict = {}
    index = closure.pure_index
    for f, sign in literals:
        i = index[f]
        if out.setdefault(i, sign) != sign:
            return None
    return out


def _evaluate(ab: _Abstraction, pins: dict) -> list:
    """Three-valued bottom-up pass; index order is topological."""
    vals = [-1] * len(ab.kinds)
    for i, kind in enumerate(ab.kinds):
        if kind == _FALSE:
            vals[i] = 0
        elif kind == _ATOM:
            pinned = pins.get(i)
            if pinned is not None:
                vals[i] = 1 if pinned else 0
        else:
            li, ri = ab.children[i]
            l, r = vals[li], vals[ri]
            if l == 0 or r == 1:
                vals[i] = 1
            elif l == 1 and r == 0:
                vals[i] = 0
    return vals


def _require(ab: _Abstraction, i: int, want: bool, pins: dict, residual: set) -> bool:
    """Record that member ``i`` must carry sign ``want``; False on conflict."""
    kind = ab.kinds[i]
    if kind == _FALSE:
        return not want
    if kind == _ATOM:
        if pins.setdefault(i, want) != want:
            return False
        return True
    li, ri = ab.children[i]
    if not want:
        # a negated implication pins both operands
        return _require(ab, li, True, pins, residual) and _require(
            ab, ri, False, pins, residual
        )
    if ab.kinds[ri] == _FALSE:
        return _require(ab, li, False, pins, residual)
    if ab.kinds[li] == _FALSE:
        return True
    residual.add(i)
    return True


def _solutions(ab: _Abstraction, pins: dict, residual: set) -> Iterator[tuple]:
    """DFS with propagation; yields total sign vectors over gamma_pure."""
    pins = dict(pins)
    residual = set(residual)
    while True:
        vals = _evaluate(ab, pins)
        changed = False
        for i in list(residual):
            v = vals[i]
            if v == 1:
                residual.discard(i)
                changed = True
            elif v == 0:
                return
            else:
                li, ri = ab.children[i]
                if vals[li] == 1:
                    residual.discard(i)
                    if not _require(ab, ri, True, pins, residual):
                        return
                    changed = True
                elif vals[ri] == 0:
                    residual.discard(i)
                    if not _require(ab, li, False, pins, residual):
                        return
                    changed = True
        if not changed:
            break
    for i in ab.atom_order:
        if i not in pins:
            branch = i
            break
    else:
        yield tuple(v == 1 for v in _evaluate(ab, pins))
        return
    for value in (True, False):
        child_pins = dict(pins)
        child_pins[branch] = value
        yield from _solutions(ab, child_pins, residual)


def _start(closure: ClosureSets, constraints: SignedSet):
    """Decompose the signed constraints; None when already contradictory."""
    ab = _abstraction(closure)
    pins: dict = {}
    residual: set = set()
    for i, want in constraints.items():
        if not _require(ab, i, want, pins, residual):
            return None
    return ab, pins, residual


def enumerate_mcs(delta_pure: SignedSet, closure: ClosureSets) -> Iterator[tuple]:
    """Stream the total consistent sign maps extending ``delta_pure``.

    Distinct truth assignments to the abstract atoms induce distinct sign
    maps (every abstract atom is itself a gamma_pure member), so the stream
    is repetition-free by construction.
    """
    started = _start(closure, delta_pure)
    if started is None:
        return
    ab, pins, residual = started
    yield from _solutions(ab, pins, residual)


def is_prop_consistent(signed: SignedSet, closure: ClosureSets) -> bool:
    """True iff some truth assignment realizes every signed constraint."""
    return next(enumerate_mcs(signed, closure), None) is not None
