import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncsurf.errors import ConservationViolated, WindowTooSmall
from ncsurf.surfaces.strip import (
    StripModel,
    strip_conserved,
    strip_expand,
    strip_relation_check,
    strip_relations,
)
from ncsurf.wordcore import element_from_string

M = StripModel(-2, 3)


def test_frozen_expansions():
    assert str(M.V(1, 0)) == "A0^-1*U0,0^-1*U0,1*Abar0*V0,0"
    assert M.U(0, 2) == element_from_string(
        "U0,1*U1,1^-1*U1,2 + U0,1*U1,1^-1*B0^-1*V0,0^-1*Abar0^-1*U0,1^-1*U0,0*A0*Abar1^-1")
    assert len(M.U(-2, 3)) == len(M.V(3, -2)) == 34


def test_frozen_angles():
    assert M.total_angle(0, "+") == element_from_string(
        "U-1,0^-1*U-1,-1*A-1 + U0,0^-1*U0,1*Abar0 "
        "+ U0,0^-1*B-1^-1*V-1,-1^-1*Abar-1^-1*U-1,0^-1*U-1,-1*A-1")
    assert M.total_angle(0, "-") == element_from_string(
        "B0*U1,1*U0,1^-1 + V0,0^-1*Abar0^-1*U0,1^-1 "
        "+ V0,0^-1*A-1^-1*U-1,-1^-1*U-1,0*Abar-1*V-1,-1*B-1")


def test_positive_coefficients():
    for i in M.columns:
        for j in M.columns:
            for p in (M.U(i, j), M.V(i, j)):
                assert p and set(p.raw.values()) == {1}


@settings(max_examples=20)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_window_invariance(i, j):
    small = strip_expand("U", i, j)
    big = strip_expand("U", i, j, window=(min(i, j) - 3, max(i, j) + 2))
    assert small == big


def test_relations_hold():
    recs = strip_relation_check(0, radius=3)
    assert len(recs) == 4 * 7
    assert all(r["ok"] for r in recs)


def test_printed_balance_is_wrong():
    # with V_ij in place of V_ji the balance relation fails off the diagonal
    _, lhs, _ = strip_relations(M, 0, 1)[2]
    assert lhs != M.U(0, 2) * M.Abar(1) * M.V(0, 1)


@pytest.mark.parametrize("sign", ["+", "-"])
def test_conservation(sign):
    rep = strip_conserved(0, range(-3, 4), sign)
    assert rep["result"] == "PASS" and rep["h_terms"] == 3


def test_conservation_violation_detected(monkeypatch):
    model = StripModel(-3, 4)
    monkeypatch.setattr(StripModel, "total_angle", lambda self, i, s: M.A(0))
    with pytest.raises(ConservationViolated):
        strip_conserved(0, [0], "+", model=model)


def test_window_errors():
    with pytest.raises(WindowTooSmall):
        StripModel(0, 0)
    with pytest.raises(WindowTooSmall):
        M.U(0, 5)
    with pytest.raises(WindowTooSmall):
        M.total_angle(3, "+")
    with pytest.raises(ValueError):
        M.expand("W", 0, 1)
