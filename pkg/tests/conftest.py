"""Shared test helpers: independent oracles kept deliberately naive."""

from __future__ import annotations

import itertools

from ilsat import Atom, Bottom, Implies, Rhd, abstract_atoms


def eval_abstract(f, assignment):
    """Truth of a formula under an assignment to variables and |>-formulas.

    Structural recursion only; independent of the package's compiled
    propositional engine.
    """
    if isinstance(f, Atom):
        return assignment[f]
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Rhd):
        return assignment[f]
    if isinstance(f, Implies):
        return (not eval_abstract(f.left, assignment)) or eval_abstract(
            f.right, assignment
        )
    raise TypeError(f)


def brute_force_sign_maps(delta_pure, closure):
    """All total sign vectors by filtering every assignment, in branch order."""
    atoms = abstract_atoms(closure)
    out = []
    for bits in itertools.product([True, False], repeat=len(atoms)):
        assignment = dict(zip(atoms, bits))
        vector = tuple(
            eval_abstract(f, assignment) for f in closure.gamma_pure
        )
        if all(vector[i] == sign for i, sign in delta_pure.items()):
            out.append(vector)
    return out


def truth_table_eval(f, row):
    """Classical evaluation of a |>-free formula; row maps names to bools."""
    if isinstance(f, Atom):
        return row[f.name]
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Implies):
        return (not truth_table_eval(f.left, row)) or truth_table_eval(f.right, row)
    raise TypeError(f"not propositional: {f}")
