"""Curves and curve complexes on compact nonorientable surfaces.

The package models the nonorientable surface N_{g,n} by a two-polygon
gluing, represents isotopy classes of essential simple closed curves by
transverse diagrams on a fixed triangulation, and builds the finite rigid
subcomplexes of the curve complex together with the machinery needed to
verify their defining properties: exact geometric intersection numbers,
Dehn twists, crosscap slides, locally injective simplicial maps and the
exhaustion sequence.
"""

from .cells import CellComplex, SurfaceClass, SurfaceSig, build_polygon_model, triangulate
from .curves import (
    CurveClass,
    Surface,
    core_curve,
    enumerate_classes,
    geometric_intersection,
    hole_subset_curve,
    isotopic,
    itinerary_curve,
    one_sided_loop,
    two_sided_chord,
)
from .geometry import (
    are_disjoint,
    intersection_matrix,
    is_top_pants_decomposition,
    verify_induced_path,
    verify_pentagon,
)
from .mcg import Generator, MappingClass, crosscap_slide, twist
from .complexes import (
    FlagComplex,
    SimplicialMap,
    build_B30,
    build_B_family,
    build_X,
    build_complex,
    exhaustion,
    exhaustion_complex,
    find_L_f,
    generating_set,
    named_curve,
    scharlemann_complex,
    solve_unique_curve,
)
from .rigidity import (
    enumerate_locally_injective,
    induced_certificate,
    is_locally_injective,
    rigidity_evidence,
)
from .suites import MANIFEST, run_suite

__version__ = "0.1.0"
