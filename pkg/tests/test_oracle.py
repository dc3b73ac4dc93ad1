from fractions import Fraction

import pytest

from ncsurf.errors import SingularAtAssignment
from ncsurf.oracle import (
    Const,
    MatrixAssignment,
    Sym,
    all_pass,
    evaluate,
    identity,
    invert,
    kernel_remark_pair,
    plucker_symbols,
    quasi_plucker,
    random_assignment,
    same,
    verify_identities,
    verify_identity,
    y_relation_pairs,
)
from ncsurf.wordcore import abstract, element_from_string

A, B = abstract("a"), abstract("b")


def test_noncommutativity_is_detected():
    rep = verify_identity(element_from_string("a*b"), element_from_string("b*a"), seed=3)
    assert rep["result"] == "FAIL" and rep["witness_seed"] is not None


def test_group_identities_pass():
    rep = verify_identity(element_from_string("a*b*b^-1 + a^-1*a"), element_from_string("a + 1"))
    assert rep == {"identity": "identity", "dims": [2, 3], "trials": 5, "result": "PASS", "witness_seed": None}


def test_expression_trees():
    a, b = Sym(A), Sym(B)
    rep = verify_identity((a + b).inv() * (a + b), Const(Fraction(1)))
    assert rep["result"] == "PASS"


def test_assignments_are_deterministic():
    m1 = random_assignment([A, B], 3, 7)
    m2 = random_assignment([B, A], 3, 7)
    assert same(m1.matrices[A], m2.matrices[A])
    assert same(evaluate(element_from_string("a*a^-1"), m1), identity(3))


def test_singular_matrix():
    from sympy.polys.matrices import DomainMatrix
    from sympy import QQ

    z = DomainMatrix([[QQ(1), QQ(2)], [QQ(2), QQ(4)]], (2, 2), QQ)
    with pytest.raises(SingularAtAssignment):
        invert(z)
    with pytest.raises(SingularAtAssignment):
        evaluate(element_from_string("a^-1"), MatrixAssignment(2, {A: z}))


@pytest.mark.parametrize("dim", [2, 3])
def test_boxed_rows_agree(dim):
    a = random_assignment(plucker_symbols(5), dim, 11)
    for i, j, k in [(1, 2, 3), (2, 5, 4), (5, 1, 3), (3, 4, 1)]:
        quasi_plucker(a, i, j, k)


def test_y_relations_small():
    assert all_pass(verify_identities(y_relation_pairs(4), dims=(2, 3), trials=2, seed=1))


def test_kernel_identity_holds_only_for_ordered_triples():
    ok = {}
    for sign in "+-":
        for i, j, k in [(1, 2, 3), (1, 3, 4), (2, 3, 4), (3, 2, 1), (2, 1, 3), (1, 3, 2)]:
            ok[(sign, i, j, k)] = verify_identities([kernel_remark_pair(i, j, k, sign)], trials=2)[0]["result"]
    for sign in "+-":
        assert ok[(sign, 1, 2, 3)] == ok[(sign, 1, 3, 4)] == ok[(sign, 2, 3, 4)] == ok[(sign, 3, 2, 1)] == "PASS"
        assert ok[(sign, 2, 1, 3)] == ok[(sign, 1, 3, 2)] == "FAIL"
