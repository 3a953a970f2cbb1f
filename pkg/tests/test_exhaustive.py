"""Exhaustive differential check on every small formula.

Both error directions are pinned without trusting either side alone: SAT
answers must produce a certified witness, UNSAT answers must survive the
exhaustive 3-world oracle.
"""

from ilsat import (
    BOT,
    Atom,
    Implies,
    Rhd,
    build_from_trace,
    certify,
    decide_sat,
    oracle_sat,
    pretty,
)

P, Q = Atom("p"), Atom("q")


def formulas_of_size(n, leaves):
    if n == 1:
        yield from leaves
        return
    for left_size in range(1, n - 1):
        right_size = n - 1 - left_size
        for left in formulas_of_size(left_size, leaves):
            for right in formulas_of_size(right_size, leaves):
                yield Implies(left, right)
                yield Rhd(left, right)


def test_every_formula_up_to_size_seven_agrees_with_oracle():
    total = 0
    for size in (1, 3, 5, 7):
        for f in formulas_of_size(size, [P, Q, BOT]):
            total += 1
            result = decide_sat(f)
            if result.satisfiable:
                build = build_from_trace(result.trace, result.closure)
                assert certify(build.model, f).ok, pretty(f)
            else:
                assert oracle_sat(f, 3) is None, pretty(f)
    assert total == 3 + 18 + 216 + 3240
