"""Exact engine for beta-gamma system vertex algebras."""

from ._core import (
    EngineError,
    Rep,
    State,
    conformal,
    currents,
    derivative,
    hilbert_series,
    invariant_dimension,
    load_rep,
    load_rep_json,
    nth,
    ope,
    parse,
    sl2_triple,
    vacuum,
    verify,
    wick,
)

__all__ = [
    "EngineError",
    "Rep",
    "State",
    "conformal",
    "currents",
    "derivative",
    "hilbert_series",
    "invariant_dimension",
    "load_rep",
    "load_rep_json",
    "nth",
    "ope",
    "parse",
    "sl2_triple",
    "vacuum",
    "verify",
    "wick",
]
