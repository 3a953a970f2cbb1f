"""Built-in validation corpus: axiom schemata, non-theorems, regressions.

The axiom schemata of the logic (three from the provability fragment, five
governing |>) are instantiated over a small set of formulas; every
instance must come out valid.  The non-theorems must come out invalid with
a certified countermodel.  The GL regression list pins twenty |>-free
decisions (surface box/dia only).
"""

from __future__ import annotations

from .formula import Formula, Implies, Rhd, box, conj, dia, disj, parse


def _taut(a: Formula, b: Formula) -> Formula:
    return Implies(a, Implies(b, a))


def _dist(a: Formula, b: Formula) -> Formula:
    return Implies(box(Implies(a, b)), Implies(box(a), box(b)))


def _loeb(a: Formula) -> Formula:
    return Implies(box(Implies(box(a), a)), box(a))


def _j1(a: Formula, b: Formula) -> Formula:
    return Implies(box(Implies(a, b)), Rhd(a, b))


def _j2(a: Formula, b: Formula, c: Formula) -> Formula:
    return Implies(conj(Rhd(a, b), Rhd(b, c)), Rhd(a, c))


def _j3(a: Formula, b: Formula, c: Formula) -> Formula:
    return Implies(conj(Rhd(a, c), Rhd(b, c)), Rhd(disj(a, b), c))


def _j4(a: Formula, b: Formula) -> Formula:
    return Implies(Rhd(a, b), Implies(dia(a), dia(b)))


def _j5(a: Formula) -> Formula:
    return Rhd(dia(a), a)


AXIOM_SCHEMATA = (
    ("taut", 2, _taut),
    ("dist", 2, _dist),
    ("loeb", 1, _loeb),
    ("j1", 2, _j1),
    ("j2", 3, _j2),
    ("j3", 3, _j3),
    ("j4", 2, _j4),
    ("j5", 1, _j5),
)

INSTANTIATION_SET = (
    parse("p"),
    parse("q"),
    parse("p -> q"),
    parse("p |> q"),
    parse("dia p"),
)


def axiom_instances() -> list:
    """All schema instances over the instantiation set, deduplicated.

    Returns (label, formula) pairs in a fixed deterministic order.
    """
    out = []
    seen = set()
    for name, arity, build in AXIOM_SCHEMATA:
        slots = [INSTANTIATION_SET] * arity

        def walk(chosen, remaining):
            if not remaining:
                instance = build(*chosen)
                if instance not in seen:
                    seen.add(instance)
                    out.append((name, instance))
                return
            for candidate in remaining[0]:
                walk(chosen + [candidate], remaining[1:])

        walk([], slots)
    return out


NON_THEOREMS = tuple(
    parse(text)
    for text in (
        "box p -> p",
        "p -> box p",
        "(p |> q) -> box(p -> q)",
        "dia true",
        "p |> q -> q |> p",
    )
)

# (source text, expected validity); surface box/dia only, no |>.
GL_REGRESSION = (
    ("box(p -> q) -> (box p -> box q)", True),
    ("box(box p -> p) -> box p", True),
    ("box p -> box box p", True),
    ("box false -> box p", True),
    ("box(p & q) -> (box p & box q)", True),
    ("(box p & box q) -> box(p & q)", True),
    ("box p -> box(q -> p)", True),
    ("~dia false", True),
    ("box false | dia true", True),
    ("dia dia p -> dia p", True),
    ("box p -> p", False),
    ("p -> box p", False),
    ("dia true", False),
    ("box p -> dia p", False),
    ("dia p -> p", False),
    ("p -> dia p", False),
    ("box box p -> box p", False),
    ("dia p -> box p", False),
    ("dia p -> dia dia p", False),
    ("box(p | q) -> (box p | box q)", False),
)
