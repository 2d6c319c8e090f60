"""Tests for exact integer linear algebra and presented chain complexes."""

from __future__ import annotations

import random

import pytest

from artifact.homology import (
    AbelianGroup,
    ChainComplex,
    ChainMap,
    ComplexInvariantError,
    HomologyError,
    SparseMatrix,
    SpanTester,
    identity_dense,
    invariant_factors,
    kernel_basis,
    mat_mul_dense,
    rank_of,
    smith,
    solve,
)


def _random_matrix(rng, m, n, density=0.4, lo=-4, hi=4):
    return [
        [rng.randint(lo, hi) if rng.random() < density else 0 for _ in range(n)]
        for _ in range(m)
    ]


def _sympy_factors(dense):
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    m = smith_normal_form(Matrix(dense), domain=ZZ)
    out = []
    for i in range(min(m.shape)):
        v = int(m[i, i])
        if v:
            out.append(abs(v))
    return sorted(out)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def test_smith_certificates_small():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    sf = smith(m)
    smv = mat_mul_dense(mat_mul_dense(sf.U, m), sf.V)
    assert smv == sf.smith_dense()
    assert mat_mul_dense(sf.U, sf.Uinv) == identity_dense(3)
    assert mat_mul_dense(sf.V, sf.Vinv) == identity_dense(3)
    for a, b in zip(sf.diag, sf.diag[1:]):
        assert b % a == 0


def test_smith_matches_sympy_on_random_matrices():
    rng = random.Random(20260814)
    for trial in range(40):
        m = rng.randint(1, 6)
        n = rng.randint(1, 6)
        dense = _random_matrix(rng, m, n)
        sf = smith(dense)
        assert sorted(sf.diag) == _sympy_factors(dense)
        smv = mat_mul_dense(mat_mul_dense(sf.U, dense), sf.V)
        assert smv == sf.smith_dense()
        assert mat_mul_dense(sf.U, sf.Uinv) == identity_dense(m)
        assert mat_mul_dense(sf.V, sf.Vinv) == identity_dense(n)


def test_smith_zero_and_empty():
    assert smith([[0, 0], [0, 0]]).diag == []
    assert rank_of(SparseMatrix(0, 5)) == 0
    assert rank_of(SparseMatrix(5, 0)) == 0
    assert invariant_factors([[6, 0], [0, 4]]) == [2, 12]


def test_solve_and_kernel():
    rng = random.Random(99)
    for trial in range(30):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        dense = _random_matrix(rng, m, n, density=0.6)
        x0 = [rng.randint(-3, 3) for _ in range(n)]
        b = [sum(dense[i][j] * x0[j] for j in range(n)) for i in range(m)]
        x = solve(dense, b)
        assert x is not None
        got = [sum(dense[i][j] * x[j] for j in range(n)) for i in range(m)]
        assert got == b
        for k in kernel_basis(dense):
            img = [sum(dense[i][j] * k[j] for j in range(n)) for i in range(m)]
            assert not any(img)
        mat = SparseMatrix.from_dense(dense)
        assert len(kernel_basis(dense)) == n - rank_of(mat)


def test_solve_unsolvable():
    # 2x = 1 has no integer solution; x + y = 1, x + y = 2 inconsistent
    assert solve([[2]], [1]) is None
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_span_tester():
    tester = SpanTester([[2, 0], [0, 3]])
    assert tester.contains([2, 3])
    assert tester.contains([4, 0])
    assert not tester.contains([1, 0])
    assert not tester.contains([0, 1])


# ---------------------------------------------------------------------------
# abelian groups
# ---------------------------------------------------------------------------


def test_abelian_group_str():
    assert str(AbelianGroup(0)) == "0"
    assert str(AbelianGroup(1)) == "Z"
    assert str(AbelianGroup(2, [2, 4])) == "Z^2 + Z_2 + Z_4"
    assert AbelianGroup(0).is_zero()
    assert AbelianGroup(1) == AbelianGroup(1, [])


# ---------------------------------------------------------------------------
# chain complexes
# ---------------------------------------------------------------------------


def _circle():
    """Two vertices, two parallel edges a, b: v -> w."""
    cc = ChainComplex("circle", top=1)
    cc.set_degree(0, ["v", "w"], [{}, {}])
    cc.set_degree(1, ["a", "b"], [{1: 1, 0: -1}, {1: 1, 0: -1}])
    return cc


def test_circle_homology():
    cc = _circle()
    cc.check_complex_laws()
    assert cc.homology(0) == AbelianGroup(1)
    assert cc.homology(1) == AbelianGroup(1)
    with pytest.raises(HomologyError):
        cc.homology(2)


def test_class_of_circle():
    cc = _circle()
    assert cc.class_of(1, [1, -1]) == "nontrivial"
    assert cc.class_of(1, [1, 0]) == "not_cycle"
    assert cc.class_of(1, [0, 0]) == "boundary"


def test_disc_kills_the_cycle():
    cc = _circle()
    cc.top = 2
    cc.set_degree(2, ["D"], [{0: 1, 1: -1}])
    assert cc.homology(1) == AbelianGroup(0)
    assert cc.class_of(1, [1, -1]) == "boundary"


def test_torsion_synthetic():
    cc = ChainComplex("mod2", top=2)
    cc.set_degree(0, ["p"], [{}])
    cc.set_degree(1, ["c"], [{}])
    cc.set_degree(2, ["F"], [{0: 2}])
    assert cc.homology(1) == AbelianGroup(0, [2])
    assert cc.homology(2) == AbelianGroup(0)


def test_relations_quotient_module():
    # degree 0 generator with relation 2x: H_0 = Z/2
    cc = ChainComplex("q", top=0)
    cc.set_degree(0, ["x"], [{}], relations=[{0: 2}])
    assert cc.homology(0) == AbelianGroup(0, [2])


def test_relations_cycle_mod_relations():
    # d(a) = x - y is a relation, so a becomes a cycle in the quotient
    cc = ChainComplex("q2", top=1)
    cc.set_degree(0, ["x", "y"], [{}, {}], relations=[{0: 1, 1: -1}])
    cc.set_degree(1, ["a"], [{0: 1, 1: -1}])
    cc.check_complex_laws()
    assert cc.homology(0) == AbelianGroup(1)
    assert cc.homology(1) == AbelianGroup(1)
    assert cc.class_of(1, [1]) == "nontrivial"


def test_redundant_relation_matches_free_answer_at_and_below():
    # a relation that is already a boundary changes nothing at its own
    # degree or below; above it, d into the quotient may die (degree 2)
    free = _circle()
    free.top = 2
    free.set_degree(2, ["D"], [{0: 1, 1: -1}])
    quot = _circle()
    quot.top = 2
    quot.set_degree(1, ["a", "b"], [{1: 1, 0: -1}, {1: 1, 0: -1}], relations=[{0: 1, 1: -1}])
    quot.set_degree(2, ["D"], [{0: 1, 1: -1}])
    quot.check_complex_laws()
    for k in range(2):
        assert free.homology(k) == quot.homology(k), k
    assert free.homology(2) == AbelianGroup(0)
    assert quot.homology(2) == AbelianGroup(1)


def test_bad_complex_detected():
    cc = ChainComplex("bad", top=2)
    cc.set_degree(0, ["v", "w"], [{}, {}])
    cc.set_degree(1, ["a"], [{0: 1, 1: -1}])
    cc.set_degree(2, ["F"], [{0: 1}])  # d(d(F)) = v - w != 0
    with pytest.raises(ComplexInvariantError):
        cc.check_complex_laws()


def test_determinism():
    cc1 = _circle()
    cc2 = _circle()
    assert [str(cc1.homology(k)) for k in range(2)] == [
        str(cc2.homology(k)) for k in range(2)
    ]


# ---------------------------------------------------------------------------
# chain maps
# ---------------------------------------------------------------------------


def test_chain_map_identity_is_iso():
    cc = _circle()
    ident = ChainMap(
        "id", cc, cc, {0: [{0: 1}, {1: 1}], 1: [{0: 1}, {1: 1}]}
    )
    ident.check_chain_map([0, 1])
    rep = ident.induced_report(1)
    assert rep["isomorphism"]


def test_chain_map_doubling_not_surjective():
    cc = _circle()
    dbl = ChainMap(
        "double", cc, cc, {0: [{0: 1}, {1: 1}], 1: [{0: 2, 1: -1}, {1: 1}]}
    )
    # f(a) = 2a - b, f(b) = b: on H_1 = Z<a-b> the class a-b maps to 2(a-b)
    dbl.check_chain_map([0, 1])
    rep = dbl.induced_report(1)
    assert rep["injective"] and not rep["surjective"]


def test_chain_map_violation_detected():
    cc = _circle()
    bad = ChainMap("bad", cc, cc, {0: [{0: 1}, {0: 1}], 1: [{0: 1}, {1: 1}]})
    with pytest.raises(ComplexInvariantError):
        bad.check_chain_map([0, 1])
