"""Finite Veltman models: representation, checking, exhaustive enumeration.

A model is ``(W, R, {S_x}, valuation)`` where R is transitive and
irreflexive (equivalently converse well-founded on a finite carrier) and
for every world x:

  a) u S_x v implies x R u and x R v;
  b) S_x is reflexive and transitive on the R-successors of x;
  c) x R u R v implies u S_x v.

Forcing is classical on -> and falsity; ``x forces a |> b`` iff every
R-successor of x forcing ``a`` has an S_x-successor forcing ``b``.

``enumerate_models`` is the ground-truth oracle: it streams every rooted
model up to a small world bound (no isomorphism reduction), generating
each S_x from its forced core rather than filtering all subsets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .formula import Atom, Bottom, Formula, Implies, Rhd, variables

HARD_WORLD_CAP = 4


class CapExceeded(ValueError):
    pass


class UnknownWorld(KeyError):
    pass


@dataclass(frozen=True)
class VeltmanModel:
    worlds: tuple
    root: Optional[str]
    R: frozenset
    S: Mapping[str, frozenset]
    valuation: Mapping[str, frozenset]


@dataclass(frozen=True)
class FrameViolation:
    condition: str
    detail: tuple

    def __str__(self) -> str:
        return f"{self.condition}: {self.detail}"


def frame_check(model: VeltmanModel) -> list:
    """All violated frame conditions, with offending tuples; [] means OK."""
    violations = []
    worlds = set(model.worlds)

    for pair in model.R:
        a, b = pair
        if a not in worlds or b not in worlds:
            violations.append(FrameViolation("domain", pair))
    for x, rel in model.S.items():
        if x not in worlds:
            violations.append(FrameViolation("domain", (x,)))
        for u, v in rel:
            if u not in worlds or v not in worlds:
                violations.append(FrameViolation("domain", (x, u, v)))
    if violations:
        return violations

    for x in model.worlds:
        if (x, x) in model.R:
            violations.append(FrameViolation("irreflexive", (x, x)))
    for a, b in model.R:
        for c, d in model.R:
            if b == c and (a, d) not in model.R:
                violations.append(FrameViolation("transitive", (a, b, d)))

    succ = {x: {v for (u, v) in model.R if u == x} for x in model.worlds}
    for x in model.worlds:
        s_x = model.S.get(x, frozenset())
        for u, v in s_x:
            if u not in succ[x] or v not in succ[x]:
                violations.append(FrameViolation("a", (x, u, v)))
        for u in succ[x]:
            if (u, u) not in s_x:
                violations.append(FrameViolation("b-reflexive", (x, u)))
        for u, v in s_x:
            for v2, w in s_x:
                if v == v2 and (u, w) not in s_x:
                    violations.append(FrameViolation("b-transitive", (x, u, v, w)))
        for u in succ[x]:
            for v in succ[x]:
                if (u, v) in model.R and (u, v) not in s_x:
                    violations.append(FrameViolation("c", (x, u, v)))

    if model.root is not None:
        if model.root not in worlds:
            violations.append(FrameViolation("domain", (model.root,)))
        else:
            for y in model.worlds:
                if y != model.root and (model.root, y) not in model.R:
                    violations.append(FrameViolation("root-reach", (model.root, y)))
    return violations


def model_check(model: VeltmanModel, world: str, f: Formula) -> bool:
    """The forcing relation at ``world``; total on finite models."""
    if world not in model.worlds:
        raise UnknownWorld(world)
    succ = {x: tuple(v for (u, v) in model.R if u == x) for x in model.worlds}
    s_succ = {
        x: {
            u: tuple(v for (u2, v) in model.S.get(x, frozenset()) if u2 == u)
            for u in model.worlds
        }
        for x in model.worlds
    }
    memo: dict = {}

    def force(x: str, g: Formula) -> bool:
        key = (x, g)
        hit = memo.get(key)
        if hit is not None:
            return hit
        match g:
            case Atom(name):
                out = name in model.valuation.get(x, frozenset())
            case Bottom():
                out = False
            case Implies(a, b):
                out = not force(x, a) or force(x, b)
            case Rhd(a, b):
                out = all(
                    any(force(v, b) for v in s_succ[x][u])
                    for u in succ[x]
                    if force(u, a)
                )
            case _:
                raise TypeError(f"not a formula: {g!r}")
        memo[key] = out
        return out

    return force(world, f)


def _transitive(rel: frozenset) -> bool:
    for a, b in rel:
        for c, d in rel:
            if b == c and (a, d) not in rel:
                return False
    return True


def _sub_relations(names: tuple) -> Iterator[frozenset]:
    """All transitive irreflexive relations on ``names``, deterministically."""
    pairs = [(a, b) for a in names for b in names if a != b]
    for mask in range(1 << len(pairs)):
        rel = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        if _transitive(rel):
            yield rel


def _s_options(x: str, successors: tuple, R: frozenset) -> list:
    """All admissible S_x, grown from the forced core."""
    forced = {(u, u) for u in successors} | {
        (u, v) for u in successors for v in successors if (u, v) in R
    }
    optional = [
        (u, v)
        for u in successors
        for v in successors
        if u != v and (u, v) not in forced
    ]
    options = []
    for mask in range(1 << len(optional)):
        rel = frozenset(forced) | {
            p for i, p in enumerate(optional) if mask >> i & 1
        }
        if _transitive(rel):
            options.append(rel)
    return options


def enumerate_models(max_worlds: int, atoms: frozenset) -> Iterator[VeltmanModel]:
    """Stream every rooted model with 1..max_worlds worlds over ``atoms``.

    Worlds are labelled w0, w1, ...; w0 is the root and sees all others.
    Lazy; constant memory per emitted model.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    if max_worlds > HARD_WORLD_CAP:
        raise CapExceeded(f"max_worlds capped at {HARD_WORLD_CAP}")
    atom_list = tuple(sorted(atoms))
    for n in range(1, max_worlds + 1):
        worlds = tuple(f"w{i}" for i in range(n))
        root = worlds[0]
        rest = worlds[1:]
        root_edges = frozenset((root, y) for y in rest)
        for sub in _sub_relations(rest):
            R = root_edges | sub
            succ = {x: tuple(v for (u, v) in R if u == x) for x in worlds}
            per_world_s = [_s_options(x, succ[x], R) for x in worlds]
            valuation_choices = [
                [
                    frozenset(a for i, a in enumerate(atom_list) if mask >> i & 1)
                    for mask in range(1 << len(atom_list))
                ]
            ] * n
            for s_family in itertools.product(*per_world_s):
                S = {x: s for x, s in zip(worlds, s_family)}
                for vals in itertools.product(*valuation_choices):
                    valuation = {x: v for x, v in zip(worlds, vals)}
                    yield VeltmanModel(
                        worlds=worlds, root=root, R=R, S=S, valuation=valuation
                    )


def oracle_sat(f: Formula, max_worlds: int = 3) -> Optional[VeltmanModel]:
    """First enumerated model whose root forces ``f``; None if none exists
    up to the bound (which is not a proof of unsatisfiability)."""
    for model in enumerate_models(max_worlds, variables(f)):
        if model_check(model, model.root, f):
            return model
    return None


# ---------------------------------------------------------------------------
# JSON wire format

def model_to_dict(model: VeltmanModel) -> dict:
    order = {w: i for i, w in enumerate(model.worlds)}
    return {
        "worlds": list(model.worlds),
        "root": model.root,
        "R": [list(p) for p in sorted(model.R, key=lambda p: (order[p[0]], order[p[1]]))],
        "S": {
            x: [
                list(p)
                for p in sorted(
                    model.S.get(x, frozenset()),
                    key=lambda p: (order[p[0]], order[p[1]]),
                )
            ]
            for x in model.worlds
        },
        "valuation": {x: sorted(model.valuation.get(x, frozenset())) for x in model.worlds},
    }


def model_from_dict(data: dict) -> VeltmanModel:
    return VeltmanModel(
        worlds=tuple(data["worlds"]),
        root=data.get("root"),
        R=frozenset(tuple(p) for p in data["R"]),
        S={x: frozenset(tuple(p) for p in pairs) for x, pairs in data["S"].items()},
        valuation={x: frozenset(v) for x, v in data["valuation"].items()},
    )


def model_to_json(model: VeltmanModel, indent: int = 2) -> str:
    return json.dumps(model_to_dict(model), indent=indent)
