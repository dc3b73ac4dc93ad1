import pytest

from ncsurf.surfaces.cylinder import (
    CylinderModel,
    CylinderRun,
    cylinder_conserved,
    cylinder_recursion,
    membership_report,
    u_recursion_direct,
    u_recursion_records,
)
from ncsurf.surfaces.rank import annulus, triangle_group_type
from ncsurf.wordcore import alg_inv_unit, cyl, element_from_string, gen_id

U_COUNTS_R2 = [1, 1, 1, 2, 3, 7, 11, 26, 41, 97, 153, 362, 571, 1351]


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_basis_rank(r):
    m = CylinderModel(r)
    assert len(m.rewriter.basis) == 3 * r + 3
    assert triangle_group_type(annulus(r)).rank == 3 * r + 3
    assert all(m.rewriter.rewrite_word(w) == () for w in m.printed_relators())


@pytest.mark.parametrize("r", [1, 2, 3])
def test_initial_curves_are_generators(r):
    m = CylinderModel(r)
    for n in range(1, r + 2):
        assert m.U(n) == element_from_string(str(m.u_symbol(n)))
        assert m.rewriter.of(m.u_symbol(n)) == (gen_id(m.u_symbol(n)),)


def test_r2_examples():
    m = CylinderModel(2)
    assert m.U(4) == element_from_string("d*xbar1^-1*c2 + d*xbar1^-1*xbar3*dbar^-1*x2")
    assert m.U(5) == element_from_string(
        "cbar1*x2^-1*dbar + xbar3*xbar1^-1*xbar3 + xbar3*xbar1^-1*c2*x2^-1*dbar")
    # U_4 = D^-1 U_1^-1 C_2 + D^-1 U_1^-1 U_3 Dbar U_2 with D = d^-1, Dbar = dbar^-1
    D, Db, inv = m.D, m.Dbar, alg_inv_unit
    assert m.U(4) == inv(D) * inv(m.U(1)) * m.C(2) + inv(D) * inv(m.U(1)) * m.U(3) * Db * m.U(2)


def test_h_candidate_r2():
    h = CylinderModel(2).h_candidate()
    want = "d^-1*x3*x1^-1 + dbar^-1*x1*x3^-1 + xbar1^-1*c2*x2^-1 + xbar2^-1*c1*x3^-1"
    assert h == CylinderModel(2).rewriter.rewrite(element_from_string(want))
    assert len(h) == 4


def test_term_counts_and_positivity_r2():
    run = CylinderRun(2)
    assert [len(run.U(n)) for n in range(1, 15)] == U_COUNTS_R2
    assert all(set(run.U(n).raw.values()) == {1} for n in range(-4, 15))
    # reflection n -> r + 2 - n preserves the number of terms
    assert [len(run.U(n)) for n in range(-4, 1)] == [26, 11, 7, 3, 2]


@pytest.mark.parametrize("r, n_max", [(1, 10), (2, 12), (3, 12), (4, 12)])
def test_conservation_and_exchange(r, n_max):
    run = CylinderRun(r)
    h, rep = cylinder_conserved(r, n_max, 1 - r, run=run)
    assert rep["checked"] == list(range(1 - r, n_max + 1))
    recs = cylinder_recursion(r, n_max, 1, run=run, conserved=set(rep["checked"]))
    assert all(rec["ok"] and rec["method"] == "direct" for rec in recs)


def test_induction_certificate_is_used_beyond_budget():
    run = CylinderRun(2)
    _, rep = cylinder_conserved(2, 12, -1, run=run)
    recs = cylinder_recursion(2, 12, 1, budget=1000, run=run, conserved=set(rep["checked"]))
    assert {r["method"] for r in recs} == {"direct", "induction"}
    assert all(r["ok"] for r in recs)
    assert len(u_recursion_records(2, recs)) == len(recs) // 2


def test_u_recursion_directly():
    run = CylinderRun(2)
    assert all(u_recursion_direct(run, n) for n in range(1, 13))


def test_curves_lie_in_the_distinguished_subgroup():
    rep = membership_report(CylinderRun(2), range(1, 9))
    assert all(inside == total for inside, total in rep.values())


def test_symbols():
    m = CylinderModel(2)
    assert len(m.symbols()) == 4 * 2 + 4
    assert cyl("d") in m.symbols()
    with pytest.raises(ValueError):
        CylinderModel(0)
