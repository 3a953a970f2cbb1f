"""Recursive satisfiability search for the interpretability modal language.

Three mutually recursive procedures, all operating inside one fixed
closure:

  sat_set     a signed set is satisfiable iff some maximal consistent
              extension of it passes check_mcs;
  check_mcs   a maximal consistent set passes iff every negatively signed
              |>-member can be refuted against the positively signed ones;
  refute_rhd  ``chi |> eta`` is refutable while keeping a set of positive
              |>-formulas iff some partition (sigma, theta) of gamma_rhd
              with eta in sigma, falsity outside theta, and
              "left in sigma or right in theta" for every kept positive
              |>-formula, passes one satisfiability check for chi and one
              per theta member, each phrased over the same closure.

Every recursive call stays within gamma_pure, which is what bounds the
nesting depth: each nested check_mcs pins at least one new positively
signed ``a |> false`` member, so nesting can never exceed the closure
budget.  The depth guard and the strict-growth assertion are instrumented
on every activation.

A positive answer returns the accepting run as a trace tree from which an
explicit countermodel can be rebuilt (see witness).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .closure import ClosureSets, compute_closure
from .formula import BOT, Formula, Implies
from .mcs import enumerate_mcs


class MalformedClosure(RuntimeError):
    """A refutation touched a formula outside gamma_pure (never expected)."""


class BudgetExceeded(RuntimeError):
    """Recursion passed the closure depth budget; signals a bug, not an input."""


@dataclass(frozen=True)
class DeltaSplit:
    """Positive / negative gamma_rhd_i indices of one maximal consistent set."""

    delta_plus: tuple
    delta_minus: tuple


@dataclass(frozen=True)
class SigmaThetaPair:
    """A partition of gamma_rhd (by index) driving one refutation attempt."""

    sigma: tuple
    theta: tuple


@dataclass(frozen=True)
class SatNode:
    """Accepting sat_set activation: its input and the extension that won."""

    input_signs: tuple
    child: "McsNode"


@dataclass(frozen=True)
class McsNode:
    """Accepting check_mcs activation: one refutation per negative member."""

    mcs: tuple
    split: DeltaSplit
    children: tuple


@dataclass(frozen=True)
class RefuteNode:
    """Accepting refute_rhd activation: the pair that won and its checks."""

    zeta: int
    pair: SigmaThetaPair
    check_a: SatNode
    check_bs: tuple


@dataclass
class RunStats:
    """Depth and effort instrumentation for one search run."""

    budget: int
    sat_calls: int = 0
    mcs_checked: int = 0
    pairs_tried: int = 0
    max_sat_depth: int = 0
    max_mcs_depth: int = 0

    def note_sat(self, depth: int) -> None:
        self.sat_calls += 1
        if depth > self.budget:
            raise BudgetExceeded(
                f"search depth {depth} exceeds budget {self.budget}"
            )
        if depth > self.max_sat_depth:
            self.max_sat_depth = depth

    def note_mcs(self, depth: int) -> None:
        self.mcs_checked += 1
        if depth > self.max_mcs_depth:
            self.max_mcs_depth = depth


@dataclass
class _Ctx:
    stats: RunStats
    memo: Optional[dict]


def _new_ctx(closure: ClosureSets, memoize: bool) -> _Ctx:
    return _Ctx(stats=RunStats(budget=closure.budget), memo={} if memoize else None)


def _sat_set(signs: dict, closure: ClosureSets, depth: int, ctx: _Ctx,
             inherited: Optional[frozenset]) -> Optional[SatNode]:
    ctx.stats.note_sat(depth)
    key = None
    if ctx.memo is not None:
        key = frozenset(signs.items())
        if key in ctx.memo:
            return ctx.memo[key]
    result = None
    for vector in enumerate_mcs(signs, closure):
        child = _check_mcs(vector, closure, depth, ctx, inherited)
        if child is not None:
            result = SatNode(input_signs=tuple(sorted(signs.items())), child=child)
            break
    if ctx.memo is not None:
        ctx.memo[key] = result
    return result


def _split(vector: tuple, closure: ClosureSets) -> DeltaSplit:
    plus = []
    minus = []
    for k, pos in enumerate(closure.rhd_i_pure_positions):
        (plus if vector[pos] else minus).append(k)
    return DeltaSplit(delta_plus=tuple(plus), delta_minus=tuple(minus))


def _check_mcs(vector: tuple, closure: ClosureSets, depth: int, ctx: _Ctx,
               inherited: Optional[frozenset]) -> Optional[McsNode]:
    ctx.stats.note_mcs(depth)
    mine = frozenset(
        k for k in closure.boxbot_rhd_i
        if vector[closure.rhd_i_pure_positions[k]]
    )
    # every nested extension check must pin strictly more "|> false" members
    assert inherited is None or inherited < mine, (
        "nested consistency check did not add a new positive '|> false' member"
    )
    split = _split(vector, closure)
    children = []
    for zeta_idx in split.delta_minus:
        node = _refute(split.delta_plus, zeta_idx, closure, depth, ctx, mine)
        if node is None:
            return None
        children.append(node)
    return McsNode(mcs=vector, split=split, children=tuple(children))


def _sat_literals(literals: list, closure: ClosureSets, depth: int, ctx: _Ctx,
                  inherited: Optional[frozenset]) -> Optional[SatNode]:
    signs: dict = {}
    for i, sign in literals:
        if signs.setdefault(i, sign) != sign:
            # the set demands both a formula and its negation: degenerate
            # activation that cannot have any consistent extension
            ctx.stats.note_sat(depth)
            return None
    return _sat_set(signs, closure, depth, ctx, inherited)


def _refute(delta_plus: tuple, zeta_idx: int, closure: ClosureSets, depth: int,
            ctx: _Ctx, parent_boxbot: frozenset) -> Optional[RefuteNode]:
    try:
        positions = closure.rhd_member_positions
        args = closure.rhd_i_args
    except KeyError as exc:
        raise MalformedClosure(f"missing closure member: {exc}") from exc
    chi_idx, eta_idx = args[zeta_idx]
    plus_args = [args[k] for k in delta_plus]
    member_count = len(closure.gamma_rhd)
    # theta candidates never contain eta or falsity, so eta lands in sigma
    # whenever it is a gamma_rhd member; when eta is falsity it fails at
    # every world anyway and needs no sigma entry.
    ground = [
        j for j in range(member_count)
        if j != eta_idx and closure.gamma_rhd[j] != BOT
    ]
    for k in range(len(ground) + 1):
        for combo in itertools.combinations(ground, k):
            theta_bits = 0
            for j in combo:
                theta_bits |= 1 << j
            covered = True
            for left, right in plus_args:
                if theta_bits >> left & 1 and not (
                    right >= 0 and theta_bits >> right & 1
                ):
                    covered = False
                    break
            if not covered:
                continue
            sigma = tuple(j for j in range(member_count) if not theta_bits >> j & 1)
            ctx.stats.pairs_tried += 1
            base = []
            for j in sigma:
                pure_s, pure_sbot = positions[j]
                base.append((pure_s, False))
                base.append((pure_sbot, True))
            chi_pure, chi_bot_pure = positions[chi_idx]
            check_a = _sat_literals(
                base + [(chi_pure, True), (chi_bot_pure, True)],
                closure, depth + 1, ctx, parent_boxbot,
            )
            if check_a is None:
                continue
            check_bs = []
            for j in combo:
                theta_pure, theta_bot_pure = positions[j]
                node = _sat_literals(
                    base + [(theta_pure, True), (theta_bot_pure, True)],
                    closure, depth + 1, ctx, parent_boxbot,
                )
                if node is None:
                    break
                check_bs.append(node)
            else:
                return RefuteNode(
                    zeta=zeta_idx,
                    pair=SigmaThetaPair(sigma=sigma, theta=combo),
                    check_a=check_a,
                    check_bs=tuple(check_bs),
                )
    return None


# ---------------------------------------------------------------------------
# Public surface


def sat_set(delta_pure, closure: ClosureSets, depth: int = 1, *,
            stats: Optional[RunStats] = None,
            memoize: bool = False) -> Optional[SatNode]:
    """Search for a rooted model of a signed set; trace on success."""
    ctx = _Ctx(stats=stats or RunStats(budget=closure.budget),
               memo={} if memoize else None)
    return _sat_set(dict(delta_pure), closure, depth, ctx, None)


def check_mcs(vector: tuple, closure: ClosureSets, depth: int = 1, *,
              stats: Optional[RunStats] = None) -> Optional[McsNode]:
    """Check one total sign vector; trace on success."""
    ctx = _Ctx(stats=stats or RunStats(budget=closure.budget), memo=None)
    return _check_mcs(vector, closure, depth, ctx, None)


def refute_rhd(delta_plus: Iterable, zeta: Formula, closure: ClosureSets,
               depth: int = 1, *,
               stats: Optional[RunStats] = None) -> Optional[RefuteNode]:
    """Refute ``zeta`` while keeping ``delta_plus``; trace on success."""
    if zeta not in closure.rhd_i_index:
        raise MalformedClosure(f"{zeta} is not a |>-member of the closure")
    plus = tuple(sorted(closure.rhd_i_index[f] for f in delta_plus))
    ctx = _Ctx(stats=stats or RunStats(budget=closure.budget), memo=None)
    boxbot = frozenset(k for k in closure.boxbot_rhd_i if k in set(plus))
    return _refute(plus, closure.rhd_i_index[zeta], closure, depth, ctx, boxbot)


@dataclass
class SatResult:
    formula: Formula
    satisfiable: bool
    trace: Optional[SatNode]
    closure: ClosureSets
    stats: RunStats


@dataclass
class ValidityResult:
    formula: Formula
    valid: bool
    negation: SatResult

    @property
    def countermodel_trace(self) -> Optional[SatNode]:
        return self.negation.trace


def decide_sat(delta: Formula, *, memoize: bool = False) -> SatResult:
    """Decide satisfiability of ``delta`` over finite Veltman models."""
    closure = compute_closure(delta)
    ctx = _new_ctx(closure, memoize)
    trace = _sat_set({closure.pure_index[delta]: True}, closure, 1, ctx, None)
    return SatResult(
        formula=delta,
        satisfiable=trace is not None,
        trace=trace,
        closure=closure,
        stats=ctx.stats,
    )


def decide_valid(delta: Formula, *, memoize: bool = False) -> ValidityResult:
    """``delta`` is valid iff its negation has no model."""
    negation = decide_sat(Implies(delta, BOT), memoize=memoize)
    return ValidityResult(formula=delta, valid=not negation.satisfiable,
                          negation=negation)
