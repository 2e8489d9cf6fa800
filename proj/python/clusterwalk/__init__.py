"""Exact cluster-algebra computations on polygons and annuli.

Thin wrapper over the C++ core. Surfaces, curves and triangulations are
addressed with the same string specs the command-line tool uses:

    polygon:<n>          disc with n+3 marked points
    annulus:<p>,<q>      annulus with p inner and q outer points
    "c 1-3"              polygon chord
    "p inner:1+2"        peripheral curve (start point, span)
    "b i1 o2 w-1"        bridging arc with winding
    "z2"                 loop winding twice around the core

>>> import clusterwalk
>>> clusterwalk.expand_text("annulus:1,1", "z1")
'(1 + x1^2 + x2^2) / (x1 x2)'
"""

from clusterwalk._core import (
    chebyshev,
    collections,
    decompose_product,
    exchange_graph_size,
    exchange_matrix,
    expand,
    expand_collection,
    expand_text,
    flip,
    triangulation_arcs,
    verify,
    walks,
)

__all__ = [
    "chebyshev",
    "collections",
    "decompose_product",
    "exchange_graph_size",
    "exchange_matrix",
    "expand",
    "expand_collection",
    "expand_text",
    "flip",
    "triangulation_arcs",
    "verify",
    "walks",
]
