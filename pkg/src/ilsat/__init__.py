"""Decision engine for the interpretability logic IL over Veltman models.

Decides satisfiability and validity, extracts certified finite
countermodels from accepting search runs, and cross-checks itself against
an exhaustive small-model oracle.
"""

from .closure import ClosureSets, closure_to_dict, compute_closure
from .decide import (
    BudgetExceeded,
    DeltaSplit,
    MalformedClosure,
    McsNode,
    RefuteNode,
    RunStats,
    SatNode,
    SatResult,
    SigmaThetaPair,
    ValidityResult,
    check_mcs,
    decide_sat,
    decide_valid,
    refute_rhd,
    sat_set,
)
from .formula import (
    BOT,
    TOP,
    Atom,
    Bottom,
    Formula,
    Implies,
    ParseError,
    Rhd,
    box,
    conj,
    dia,
    disj,
    iff,
    neg,
    parse,
    pretty,
    size,
    subformulas,
    variables,
)
from .generate import Lcg, random_corpus, random_formula
from .mcs import abstract_atoms, enumerate_mcs, is_prop_consistent, signed_set
from .semantics import (
    CapExceeded,
    FrameViolation,
    UnknownWorld,
    VeltmanModel,
    enumerate_models,
    frame_check,
    model_check,
    model_from_dict,
    model_to_dict,
    model_to_json,
    oracle_sat,
)
from .witness import (
    CertificationReport,
    MalformedTrace,
    WitnessBuild,
    build_from_trace,
    certify,
)

__version__ = "0.1.0"
