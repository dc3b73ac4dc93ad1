"""Print the triangle group type for a few marked surfaces."""

from ncsurf.surfaces.rank import SurfaceInvariants, annulus, polygon, triangle_group_type

cases = {
    "sphere, 4 punctures": SurfaceInvariants(2, 4, closed="sphere"),
    "projective plane, 1 puncture": SurfaceInvariants(1, 1, closed="projective_plane"),
    "torus, 1 puncture": SurfaceInvariants(0, 1, closed="torus"),
    "hexagon": polygon(6),
    "annulus, r=3": annulus(3),
    "triangle with a special puncture": SurfaceInvariants(1, 3, 3, 1),
}
for name, inv in cases.items():
    print(f"{name:34s} {triangle_group_type(inv)}")
