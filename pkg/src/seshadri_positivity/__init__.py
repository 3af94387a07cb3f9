"""Exact bigness tests for submanifolds of polarized projective manifolds.

Given the Chow ring of a submanifold ``Y`` of dimension ``y`` in a polarized
manifold ``(X, A)`` of dimension ``k``, together with the Chern classes of the
normal bundle, the package computes the polynomial ``delta_eta(Y, A)`` in
exact rational arithmetic and decides whether it takes a positive value
below the Seshadri constant of ``A`` along ``Y``.

Typical use::

    from seshadri_positivity import catalog, delta_poly, decide_bigness

    v = catalog.build("veronese")
    p = delta_poly(v)
    decide_bigness(p, v.seshadri)
"""

from . import catalog
from .chern import (
    ChernSeries,
    chern_from_segre,
    euler_series,
    make_series,
    normal_from_euler,
    segre_from_chern,
    tangent_series,
    whitney,
)
from .chow import ChowPresentation, CycleClass, hirzebruch, integrate, mul, multiprojective, power, table
from .delta import (
    EtaPolynomial,
    VarietyData,
    blowup_intersection,
    delta1_decomposable,
    delta_at,
    delta_codim1_poly,
    delta_poly,
    finite_cover,
    finite_cover_delta,
    scale_delta,
    schur_delta1,
    segre_integral,
)
from .exactmath import OpenInterval, UniPoly, exists_positive, sturm_count
from .seshadri import (
    Big,
    Exact,
    Inconclusive,
    LowerBound,
    NotBig,
    decide_bigness,
    scale_seshadri,
    seshadri_complete_intersection,
    seshadri_defined_in_degree,
)

__version__ = "0.1.0"

__all__ = [
    "Big",
    "ChernSeries",
    "ChowPresentation",
    "CycleClass",
    "EtaPolynomial",
    "Exact",
    "Inconclusive",
    "LowerBound",
    "NotBig",
    "OpenInterval",
    "UniPoly",
    "VarietyData",
    "blowup_intersection",
    "catalog",
    "chern_from_segre",
    "decide_bigness",
    "delta1_decomposable",
    "delta_at",
    "delta_codim1_poly",
    "delta_poly",
    "euler_series",
    "exists_positive",
    "finite_cover",
    "finite_cover_delta",
    "hirzebruch",
    "integrate",
    "make_series",
    "mul",
    "multiprojective",
    "normal_from_euler",
    "power",
    "scale_delta",
    "scale_seshadri",
    "schur_delta1",
    "segre_from_chern",
    "segre_integral",
    "seshadri_complete_intersection",
    "seshadri_defined_in_degree",
    "sturm_count",
    "table",
    "tangent_series",
    "whitney",
]
