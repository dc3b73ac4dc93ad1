from .cylinder import CylinderModel, CylinderRun, cylinder_check, cylinder_conserved, cylinder_recursion
from .pn1 import lifted_triangulation, pn1_expand
from .rank import Free, OneRelator, SurfaceInvariants, Trivial, annulus, polygon, triangle_group_type
from .strip import StripModel, strip_conserved, strip_expand, strip_relation_check

__all__ = [
    "CylinderModel", "CylinderRun", "cylinder_check", "cylinder_conserved", "cylinder_recursion",
    "lifted_triangulation", "pn1_expand",
    "Free", "OneRelator", "SurfaceInvariants", "Trivial", "annulus", "polygon", "triangle_group_type",
    "StripModel", "strip_conserved", "strip_expand", "strip_relation_check",
]
