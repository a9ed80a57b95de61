# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2026 the fano8 authors
"""Exact computer algebra for genus-8 Fano threefold verification.

Thin wrapper over the compiled core: polynomials travel as strings, rings as
(p, variable names), reports as plain dicts.
"""
import json as _json

from ._core import (
    Fano8Error,
    blowup_curve,
    blowup_point,
    delta_genus,
    fedder,
    fedder_klein,
    groebner,
    is_smooth,
    klein_cubic,
    klein_section_generators,
    klein_singular_points,
    krull_dim,
    palatini,
    plucker_generators,
    projbundle_wedge2k,
    rational_points,
    schubert_integral,
    smooth_klein,
    tworay,
    verify_paper_json,
    weyl_h0,
)

__version__ = "0.1.0"


def verify_paper(profile="quick"):
    """Run the verification suite; returns the report as a dict."""
    return _json.loads(verify_paper_json(profile))


__all__ = [
    "Fano8Error",
    "blowup_curve",
    "blowup_point",
    "delta_genus",
    "fedder",
    "fedder_klein",
    "groebner",
    "is_smooth",
    "klein_cubic",
    "klein_section_generators",
    "klein_singular_points",
    "krull_dim",
    "palatini",
    "plucker_generators",
    "projbundle_wedge2k",
    "rational_points",
    "schubert_integral",
    "smooth_klein",
    "tworay",
    "verify_paper",
    "verify_paper_json",
    "weyl_h0",
    "__version__",
]
