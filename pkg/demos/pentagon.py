"""Expand every chord of a fan-triangulated pentagon and check the relations."""

from ncsurf.laurent import expand_edges, relation_checks
from ncsurf.polygon import parse_triangulation

tri = parse_triangulation("n=5;diag=1-3,1-4")
for p in range(1, 6):
    for q in range(1, 6):
        if p != q and not tri.has_edge(p, q):
            x = expand_edges(tri, p, q)
            print(f"x_{p}{q} ({len(x)} terms) = {x}")

count, failures = relation_checks(tri)
print(f"{count} triangle/exchange identities, {len(failures)} failures")
