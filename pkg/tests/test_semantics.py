import itertools

import pytest
from conftest import truth_table_eval
from hypothesis import given, settings, strategies as st

from ilsat import (
    BOT,
    Atom,
    CapExceeded,
    Implies,
    Rhd,
    UnknownWorld,
    VeltmanModel,
    box,
    dia,
    enumerate_models,
    frame_check,
    model_check,
    model_from_dict,
    model_to_dict,
    oracle_sat,
    parse,
    variables,
)

P, Q = Atom("p"), Atom("q")


def single_world(atoms=()):
    return VeltmanModel(
        worlds=("w0",),
        root="w0",
        R=frozenset(),
        S={"w0": frozenset()},
        valuation={"w0": frozenset(atoms)},
    )


WITNESS_NOT_PQ = VeltmanModel(
    worlds=("w", "u"),
    root="w",
    R=frozenset({("w", "u")}),
    S={"w": frozenset({("u", "u")}), "u": frozenset()},
    valuation={"w": frozenset(), "u": frozenset({"p"})},
)


class TestFrameCheck:
    def test_single_world_ok(self):
        assert frame_check(single_world()) == []

    def test_missing_forced_s_pair(self):
        m = VeltmanModel(
            worlds=("x", "u", "v"),
            root="x",
            R=frozenset({("x", "u"), ("u", "v"), ("x", "v")}),
            S={"x": frozenset(), "u": frozenset(), "v": frozenset()},
            valuation={w: frozenset() for w in ("x", "u", "v")},
        )
        conditions = {v.condition for v in frame_check(m)}
        assert "c" in conditions

    def test_reflexive_edge_rejected(self):
        m = VeltmanModel(
            worlds=("x",),
            root="x",
            R=frozenset({("x", "x")}),
            S={"x": frozenset({("x", "x")})},
            valuation={"x": frozenset()},
        )
        conditions = {v.condition for v in frame_check(m)}
        assert "irreflexive" in conditions

    def test_intransitive_rejected(self):
        m = VeltmanModel(
            worlds=("x", "u", "v"),
            root="x",
            R=frozenset({("x", "u"), ("u", "v")}),
            S={w: frozenset() for w in ("x", "u", "v")},
            valuation={w: frozenset() for w in ("x", "u", "v")},
        )
        conditions = {v.condition for v in frame_check(m)}
        assert "transitive" in conditions

    def test_unreached_world_rejected(self):
        m = VeltmanModel(
            worlds=("x", "u"),
            root="x",
            R=frozenset(),
            S={"x": frozenset(), "u": frozenset()},
            valuation={"x": frozenset(), "u": frozenset()},
        )
        conditions = {v.condition for v in frame_check(m)}
        assert "root-reach" in conditions


class TestModelCheck:
    def test_terminal_world_forces_every_rhd(self):
        m = single_world()
        assert model_check(m, "w0", Rhd(P, Q))
        assert model_check(m, "w0", Rhd(BOT, BOT))
        assert model_check(m, "w0", box(BOT))

    def test_terminal_world_refutes_every_dia(self):
        m = single_world({"p"})
        assert not model_check(m, "w0", dia(P))
        assert not model_check(m, "w0", dia(Implies(BOT, BOT)))

    def test_canonical_witness_refutes_rhd(self):
        assert not model_check(WITNESS_NOT_PQ, "w", Rhd(P, Q))
        assert model_check(WITNESS_NOT_PQ, "w", parse("~(p |> q)"))

    def test_unknown_world(self):
        with pytest.raises(UnknownWorld):
            model_check(single_world(), "nowhere", P)

    def test_propositional_fragment_matches_truth_tables(self):
        props = st.recursive(
            st.sampled_from([P, Q, BOT]),
            lambda c: st.builds(Implies, c, c),
            max_leaves=12,
        )

        @settings(max_examples=80, deadline=None)
        @given(props)
        def check(f):
            names = sorted(variables(f))
            for bits in itertools.product([False, True], repeat=len(names)):
                row = dict(zip(names, bits))
                m = single_world({n for n in names if row[n]})
                assert model_check(m, "w0", f) == truth_table_eval(f, row)

        check()


class TestEnumeration:
    def test_one_world_models_over_one_atom(self):
        models = list(enumerate_models(1, frozenset({"p"})))
        assert len(models) == 2
        assert {m.valuation["w0"] for m in models} == {frozenset(), frozenset({"p"})}

    def test_two_world_frame_forces_reflexive_s(self):
        two = [m for m in enumerate_models(2, frozenset()) if len(m.worlds) == 2]
        assert len(two) == 1
        assert two[0].R == frozenset({("w0", "w1")})
        assert two[0].S["w0"] == frozenset({("w1", "w1")})

    def test_every_emitted_model_is_frame_correct(self):
        for m in enumerate_models(3, frozenset({"p"})):
            assert frame_check(m) == []

    def test_cap(self):
        with pytest.raises(CapExceeded):
            list(enumerate_models(5, frozenset()))
        with pytest.raises(ValueError):
            list(enumerate_models(0, frozenset()))

    def test_deterministic(self):
        first = [model_to_dict(m) for m in enumerate_models(2, frozenset({"p"}))]
        second = [model_to_dict(m) for m in enumerate_models(2, frozenset({"p"}))]
        assert first == second


class TestOracle:
    def test_atom(self):
        m = oracle_sat(P, 1)
        assert m is not None and m.valuation[m.root] == frozenset({"p"})

    def test_falsum_never_found(self):
        assert oracle_sat(BOT, 3) is None

    def test_negated_rhd(self):
        m = oracle_sat(parse("~(p |> q)"), 2)
        assert m is not None
        assert len(m.worlds) == 2
        assert not model_check(m, m.root, Rhd(P, Q))


def test_json_roundtrip():
    data = model_to_dict(WITNESS_NOT_PQ)
    assert data["worlds"] == ["w", "u"]
    assert data["S"]["w"] == [["u", "u"]]
    assert model_from_dict(data) == WITNESS_NOT_PQ
