"""Rebuild explicit countermodels from accepting search traces.

The construction mirrors the two positive steps of the search:

  * an accepting extension check with refutation children builds each
    child model, takes their disjoint union and merges the child roots
    into a single world whose valuation comes from the chosen sign vector
    (no children: a single world);

  * an accepting refutation builds the model for its chi-check and one
    model per theta-check, takes their disjoint union, and puts a fresh
    root above everything, with S at the new root relating all old worlds
    pairwise and all variables false at the root.

World names are hierarchical path labels (z<i> = i-th refutation child,
a = chi-check, b<j> = j-th theta-check), so every world can be traced back
to the trace node that created it.

The result is always frame-correct and its root forces the traced input;
``certify`` re-checks both with the independent model checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .closure import ClosureSets
from .decide import McsNode, RefuteNode, SatNode
from .formula import Atom, Formula
from .semantics import VeltmanModel, frame_check, model_check


class MalformedTrace(ValueError):
    pass


@dataclass(frozen=True)
class WitnessBuild:
    model: VeltmanModel
    root: str
    provenance: Mapping[str, object]


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of the end-to-end soundness gate."""

    ok: bool
    frame_violations: tuple
    root_forces: Optional[bool]

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        if self.frame_violations:
            return "frame violations: " + "; ".join(map(str, self.frame_violations))
        return f"root forces formula: {self.root_forces}"


class _Parts:
    """Mutable accumulator for one sub-build."""

    def __init__(self) -> None:
        self.worlds: list = []
        self.R: set = set()
        self.S: dict = {}
        self.valuation: dict = {}
        self.provenance: dict = {}

    def absorb(self, other: "_Parts") -> None:
        self.worlds.extend(other.worlds)
        self.R.update(other.R)
        self.S.update(other.S)
        self.valuation.update(other.valuation)
        self.provenance.update(other.provenance)


def _positive_variables(vector: tuple, closure: ClosureSets) -> frozenset:
    return frozenset(
        f.name
        for i, f in enumerate(closure.gamma_pure)
        if isinstance(f, Atom) and vector[i]
    )


def _build_sat(node: SatNode, closure: ClosureSets, prefix: str) -> tuple:
    if not isinstance(node.child, McsNode):
        raise MalformedTrace("satisfiability node without an extension child")
    return _build_mcs(node.child, closure, prefix)


def _build_mcs(node: McsNode, closure: ClosureSets, prefix: str) -> tuple:
    if len(node.children) != len(node.split.delta_minus):
        raise MalformedTrace("extension node must refute every negative member")
    parts = _Parts()
    root = prefix + "w"
    if not node.children:
        parts.worlds.append(root)
        parts.S[root] = frozenset()
        parts.valuation[root] = _positive_variables(node.mcs, closure)
        parts.provenance[root] = node
        return parts, root

    parts.worlds.append(root)
    merged_s: set = set()
    for i, child in enumerate(node.children):
        child_parts, child_root = _build_refute(child, closure, f"{prefix}z{i}.")
        # splice the child component in, renaming its root to the merged one
        child_parts.worlds.remove(child_root)
        merged_s.update(child_parts.S.pop(child_root))
        child_parts.valuation.pop(child_root)
        child_parts.provenance.pop(child_root)
        child_parts.R = {
            (root if a == child_root else a, b) for (a, b) in child_parts.R
        }
        parts.absorb(child_parts)
    parts.S[root] = frozenset(merged_s)
    parts.valuation[root] = _positive_variables(node.mcs, closure)
    parts.provenance[root] = node
    return parts, root


def _build_refute(node: RefuteNode, closure: ClosureSets, prefix: str) -> tuple:
    if len(node.check_bs) != len(node.pair.theta):
        raise MalformedTrace("refutation node needs one check per theta member")
    parts = _Parts()
    root = prefix + "h"
    parts.worlds.append(root)
    inner_parts, inner_roots = _Parts(), []
    sub_a, root_a = _build_sat(node.check_a, closure, prefix + "a.")
    inner_parts.absorb(sub_a)
    inner_roots.append(root_a)
    for j, check in enumerate(node.check_bs):
        sub_b, root_b = _build_sat(check, closure, f"{prefix}b{j}.")
        inner_parts.absorb(sub_b)
        inner_roots.append(root_b)
    others = list(inner_parts.worlds)
    parts.absorb(inner_parts)
    parts.R.update((root, u) for u in others)
    parts.S[root] = frozenset((u, v) for u in others for v in others)
    parts.valuation[root] = frozenset()
    parts.provenance[root] = node
    return parts, root


def build_from_trace(trace: SatNode, closure: ClosureSets) -> WitnessBuild:
    """Materialize the countermodel encoded by an accepting trace."""
    if not isinstance(trace, SatNode):
        raise MalformedTrace(f"expected a satisfiability trace, got {trace!r}")
    parts, root = _build_sat(trace, closure, "")
    model = VeltmanModel(
        worlds=tuple(parts.worlds),
        root=root,
        R=frozenset(parts.R),
        S={w: frozenset(parts.S.get(w, frozenset())) for w in parts.worlds},
        valuation={w: parts.valuation.get(w, frozenset()) for w in parts.worlds},
    )
    return WitnessBuild(model=model, root=root, provenance=dict(parts.provenance))


def certify(model: VeltmanModel, delta: Formula) -> CertificationReport:
    """Frame-check the model, then check that its root forces ``delta``."""
    violations = tuple(frame_check(model))
    if violations:
        return CertificationReport(ok=False, frame_violations=violations,
                                   root_forces=None)
    if model.root is None:
        return CertificationReport(ok=False, frame_violations=(), root_forces=None)
    forces = model_check(model, model.root, delta)
    return CertificationReport(ok=forces, frame_violations=(), root_forces=forces)
