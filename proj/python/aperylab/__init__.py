"""Apéry tables, tangent cone structure, and Buchsbaum classification of
numerical semigroups.

The compiled core exposes the Semigroup class; this package adds thin
dict-returning wrappers around its JSON reports.
"""

from __future__ import annotations

import json as _json

from ._core import Semigroup, SemigroupError, render_table

__all__ = [
    "Semigroup",
    "SemigroupError",
    "analyze",
    "render_table",
    "sweep",
    "unique_betti",
]

from . import _core as _c


def analyze(generators):
    """Full report for one semigroup as a nested dict (schema apery-lab/1)."""
    return _json.loads(_c.analyze_json(list(generators)))


def unique_betti(ks):
    """Construction and prediction battery for n_i = prod(k_j, j != i)."""
    return _json.loads(_c.unique_betti_json(list(ks)))


def sweep(
    max_gen,
    embdim=None,
    min_mult=None,
    max_mult=None,
    filters=(),
    ceiling=10_000_000,
    threads=1,
    include_records=False,
):
    """Enumerates minimal generating tuples in the box and classifies each.

    Returns {"summary": ..., "records": [...]} with records present only when
    include_records is set.
    """
    return _json.loads(
        _c.sweep_json(
            embdim=embdim,
            max_gen=max_gen,
            min_mult=min_mult,
            max_mult=max_mult,
            filters=list(filters),
            ceiling=ceiling,
            threads=threads,
            include_records=include_records,
        )
    )
