from ncsurf.acceptance import PN1_X2, PN1_X3
from ncsurf.laurent import relation_checks
from ncsurf.polygon import parse_triangulation
from ncsurf.surfaces.pn1 import lift, lifted_triangulation, pn1_expand, project_edge, sign
from ncsurf.wordcore import element_from_string

TRI = parse_triangulation("n=6;diag=1-4,1-5,2-4")


def test_lift_and_sign():
    assert lift(3, 1) == (1, 4)
    assert sign(3, 1, 2) == "+" and sign(3, 2, 1) == "-"
    a, b = lift(3, 2, 3, "-")
    assert sign(3, a, b) == "-"
    assert project_edge(3, 1, 4) == project_edge(3, 4, 1)
    assert project_edge(3, 1, 2) == project_edge(3, 4, 5)


def test_lifted_triangulation():
    tri = lifted_triangulation(3, [(1,), (1, 2, "-")])
    assert tri.n == 6
    assert relation_checks(tri)[1] == []


def test_worked_examples():
    assert pn1_expand(3, TRI, 2) == element_from_string(PN1_X2)
    assert pn1_expand(3, TRI, 3) == element_from_string(PN1_X3)
    assert len(pn1_expand(3, TRI, 2, 3, "-")) == 3
