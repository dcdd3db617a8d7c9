# SPDX-License-Identifier: MIT
"""Exact classification of Hamiltonian circle actions on S2xS2 and CP2#CP2bar.

Thin Python layer over the C++ core.  Widths (the area parameter lambda) are
passed as exact rational strings such as ``"2"`` or ``"5/2"``; decimals are
rejected by design.
"""

from ._core import (
    are_equivalent,
    classify,
    deformation_dimension,
    enumerate_toric_actions,
    graph,
    graph_dot,
    graph_tikz,
    hirzebruch_trapezoid,
    homology_ranks,
    homotopy_type,
    polygon_symmetry_count,
    presentation,
    rational_homotopy_dims,
    strata,
    stratum_codimension,
    sweep,
    toric_extensions,
    weyl_orbit,
)

__all__ = [
    "are_equivalent",
    "classify",
    "deformation_dimension",
    "enumerate_toric_actions",
    "graph",
    "graph_dot",
    "graph_tikz",
    "hirzebruch_trapezoid",
    "homology_ranks",
    "homotopy_type",
    "polygon_symmetry_count",
    "presentation",
    "rational_homotopy_dims",
    "strata",
    "stratum_codimension",
    "sweep",
    "toric_extensions",
    "weyl_orbit",
]

__version__ = "0.1.0"
