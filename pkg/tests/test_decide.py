import pytest

from ilsat import (
    BOT,
    Atom,
    BudgetExceeded,
    MalformedClosure,
    Rhd,
    RunStats,
    build_from_trace,
    certify,
    check_mcs,
    compute_closure,
    decide_sat,
    decide_valid,
    enumerate_mcs,
    oracle_sat,
    parse,
    refute_rhd,
    sat_set,
    signed_set,
)
from ilsat.generate import random_corpus

P, Q = Atom("p"), Atom("q")


class TestSatSet:
    def test_falsum_positive(self):
        c = compute_closure(P)
        assert sat_set({c.pure_index[BOT]: True}, c) is None

    def test_atom_positive_leaf_trace(self):
        c = compute_closure(P)
        trace = sat_set({c.pure_index[P]: True}, c)
        assert trace is not None
        assert trace.child.children == ()  # no negative |>-members to refute

    def test_negated_rhd_is_satisfiable(self):
        # confirmed independently by the exhaustive oracle (2-world model)
        c = compute_closure(Rhd(P, Q))
        trace = sat_set({c.pure_index[Rhd(P, Q)]: False}, c)
        assert trace is not None
        assert oracle_sat(parse("~(p |> q)"), 2) is not None

    def test_first_extension_wins(self):
        c = compute_closure(Rhd(P, Q))
        signs = {c.pure_index[Rhd(P, Q)]: False}
        trace = sat_set(signs, c)
        passing = [
            vector for vector in enumerate_mcs(signs, c)
            if check_mcs(vector, c) is not None
        ]
        assert trace.child.mcs == passing[0]

    def test_budget_guard(self):
        c = compute_closure(P)
        with pytest.raises(BudgetExceeded):
            sat_set({c.pure_index[P]: True}, c, depth=c.budget + 1)


class TestCheckMcs:
    def test_empty_negative_split_is_leaf(self):
        c = compute_closure(P)
        vector = next(iter(enumerate_mcs({c.pure_index[P]: True}, c)))
        node = check_mcs(vector, c)
        assert node is not None
        assert node.split.delta_minus == ()
        assert node.children == ()

    def test_all_negative_extension_passes(self):
        # the extension of {not (p |> q)} with every |>-member negative is
        # satisfiable: the oracle finds a 3-world model of ~(p|>q) & dia p & dia q
        # (2 worlds cannot work: the p-world's S-successors must avoid q while
        # some world forces q)
        c = compute_closure(Rhd(P, Q))
        signs = signed_set(
            c,
            [(Rhd(P, Q), False), (Rhd(P, BOT), False), (Rhd(Q, BOT), False)],
        )
        vectors = list(enumerate_mcs(signs, c))
        assert vectors, "constraints must be propositionally consistent"
        node = check_mcs(vectors[0], c)
        assert node is not None
        assert len(node.children) == 3
        assert oracle_sat(parse("~(p |> q) & dia p & dia q"), 3) is not None
        assert oracle_sat(parse("~(p |> q) & dia p & dia q"), 2) is None

    def test_positive_box_shaped_member_with_its_argument(self):
        # an extension holding both p |> false and p dies when refuting any
        # negative member: the covering clause forces p into sigma and the
        # chi-check then demands p and not p at once
        c = compute_closure(Rhd(P, Q))
        signs = signed_set(
            c,
            [(P, True), (Rhd(P, BOT), True), (Rhd(P, Q), False)],
        )
        for vector in enumerate_mcs(signs, c):
            assert check_mcs(vector, c) is None


class TestRefuteRhd:
    def test_first_passing_pair_for_empty_positives(self):
        c = compute_closure(Rhd(P, Q))
        node = refute_rhd([], Rhd(P, Q), c)
        assert node is not None
        sigma = {c.gamma_rhd[j] for j in node.pair.sigma}
        theta = {c.gamma_rhd[j] for j in node.pair.theta}
        # ({p, q}, {}) is tried first but its chi-check demands p and not p;
        # ({q}, {p}) is the first pair that passes
        assert sigma == {Q} and theta == {P}
        assert len(node.check_bs) == len(node.pair.theta) == 1

    def test_box_shaped_positive_blocks_its_argument(self):
        c = compute_closure(Rhd(P, Q))
        assert refute_rhd([Rhd(P, BOT)], Rhd(P, Q), c) is None

    def test_covering_satisfied_through_sigma_membership(self):
        # positive q |> p: any pair keeps q in sigma or p in theta; the
        # winning pair for refuting p |> q must satisfy that clause
        delta = parse("(p |> q) & (q |> p)")
        c = compute_closure(delta)
        node = refute_rhd([Rhd(Q, P)], Rhd(P, Q), c)
        assert node is not None
        sigma = {c.gamma_rhd[j] for j in node.pair.sigma}
        theta = {c.gamma_rhd[j] for j in node.pair.theta}
        assert Q in sigma or P in theta
        assert Q in sigma  # eta = q always lands in sigma

    def test_refuting_box_shaped_member(self):
        # zeta = p |> false with falsity not a member of gamma_rhd: the
        # eta-in-sigma requirement is vacuous and refutation succeeds
        c = compute_closure(Rhd(P, Q))
        node = refute_rhd([], Rhd(P, BOT), c)
        assert node is not None

    def test_unknown_zeta_rejected(self):
        c = compute_closure(Rhd(P, Q))
        with pytest.raises(MalformedClosure):
            refute_rhd([], Rhd(Q, Rhd(P, P)), c)


class TestDecideSat:
    def test_falsum(self):
        assert not decide_sat(BOT).satisfiable

    def test_atom(self):
        assert decide_sat(P).satisfiable

    def test_dia_and_box_of_negation_conflict(self):
        # dia p & box ~p abstracts to two distinct |>-atoms, so the clash is
        # semantic, not propositional; the oracle confirms unsatisfiability
        f = parse("dia p & box ~p")
        assert not decide_sat(f).satisfiable
        assert oracle_sat(f, 3) is None

    def test_rhd_vacuously_satisfiable(self):
        r = decide_sat(Rhd(P, Q))
        assert r.satisfiable
        build = build_from_trace(r.trace, r.closure)
        assert certify(build.model, Rhd(P, Q)).ok


class TestDecideValid:
    @pytest.mark.parametrize(
        "text",
        [
            "box(p -> q) -> (p |> q)",
            "dia p |> p",
            "box(box p -> p) -> box p",
            "(p |> q) & (q |> p |> q) -> (p |> p |> q)",
        ],
    )
    def test_valid(self, text):
        assert decide_valid(parse(text)).valid

    @pytest.mark.parametrize("text", ["box p -> p", "p -> box p", "dia true"])
    def test_invalid(self, text):
        result = decide_valid(parse(text))
        assert not result.valid
        assert result.countermodel_trace is not None

    def test_memoized_run_agrees(self):
        for text in ["box(p->q) -> (p |> q)", "~(p |> q)", "dia p & box ~p"]:
            f = parse(text)
            assert decide_sat(f).satisfiable == decide_sat(f, memoize=True).satisfiable


class TestInstrumentation:
    def test_depth_bounds_on_random_formulas(self):
        for f in random_corpus(120, seed=7):
            r = decide_sat(f)
            assert r.stats.max_sat_depth <= r.stats.budget
            assert r.stats.max_mcs_depth <= r.stats.budget - 1

    def test_stats_record_effort(self):
        r = decide_sat(parse("~(p |> q)"))
        assert r.stats.sat_calls >= 1
        assert r.stats.mcs_checked >= 1
        assert r.stats.pairs_tried >= 1

    def test_deterministic_traces(self):
        f = parse("~(p |> q)")
        a, b = decide_sat(f), decide_sat(f)
        assert a.trace == b.trace

    def test_runstats_budget_raise(self):
        stats = RunStats(budget=3)
        stats.note_sat(3)
        with pytest.raises(BudgetExceeded):
            stats.note_sat(4)
