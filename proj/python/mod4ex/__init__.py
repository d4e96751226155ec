"""Python bindings for the mod4ex core.

Graphs are ``Graph`` objects; searches and lemma campaigns return plain
dictionaries with the same fields as the CLI's JSON reports.
"""

import json

from . import _core
from ._core import (
    CapExceeded,
    Graph,
    GraphError,
    ParseError,
    blocks,
    build_adjustable_path,
    build_Gn,
    build_k4_subdivision,
    build_L8,
    build_L13,
    build_necklace,
    build_T1,
    build_T2,
    build_theta,
    canonical_form,
    enumerate_cycles,
    find_2cuts,
    formula_bound,
    has_cycle_mod,
    lemma_names,
    residue_histogram,
    shortest_cycle_mod,
    switch_at_2cut,
)

__version__ = _core.__version__


def ex_exact(n, workers=1, budget=0):
    return json.loads(_core.ex_exact_json(n, workers, budget))


def refute_above_bound(n, target, workers=1, budget=0):
    return json.loads(_core.refute_json(n, target, workers, budget))


def verify_lemma(lemma, trials=1000, seed=1, size_budget=24, workers=1):
    return json.loads(_core.verify_lemma_json(lemma, trials, seed, size_budget, workers))


def replay(record):
    """Re-check a stored instance; ``record`` is a dict or a JSON string."""
    if not isinstance(record, str):
        record = json.dumps(record)
    return json.loads(_core.replay_json(record))
