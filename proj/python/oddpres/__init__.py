"""Exact checks of reflection-group presentations of W(E6)."""

import json

from ._core import (
    BudgetExceeded,
    automorphism_order,
    chamber_vertices,
    congruence_kernels,
    diagram,
    e6_betas,
    e6_generation_order,
    e6_roots,
    enumerate_presentation,
    free_hexagons,
    gosset_walls,
    hermitian,
    hexaflection,
    inner,
    mod3_projective_order,
    reflect,
    relator_text,
    simple_roots,
    tessellation,
    tessellation_dot,
    todd_coxeter,
)
from ._core import _run_suite_json

__version__ = "0.1.0"


def run_suite(suite, n=None, max_n=6, budget=200000, seed=0):
    """Run a verification suite and return its report as a dict."""
    return json.loads(_run_suite_json(suite, n, max_n, budget, seed))


__all__ = [name for name in dir() if not name.startswith("_")]
