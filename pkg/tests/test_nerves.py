"""Tests for the path nerve and the two corner nerves."""

import pytest

from artifact.category import CategoryError
from artifact.functors import FunctorError
from artifact.nerves import (
    NerveError,
    corner_nerve,
    cube_face_table,
    cube_shape,
    cubical_shell_fillers,
    face_position,
    fill_shell_cubical,
    fill_shell_simplicial,
    globular_nerve,
    simplex_shape,
    simplicial_shell_fillers,
)
from artifact.schemes import cube_category, globe_category, graph_category, simplex_category


def _check_simplicial_identities(nv):
    """Exhaustive face/degeneracy identity check on every stored cell."""
    D = nv.D
    for n in range(2, D + 1):
        for j in range(nv.size(n)):
            for jj in range(n + 1):
                for i in range(jj):
                    a = nv.face_table(n - 1, nv.cells[n - 1][nv.face(n, jj, j)], i)
                    b = nv.face_table(n - 1, nv.cells[n - 1][nv.face(n, i, j)], jj - 1)
                    assert a == b
    for n in range(0, D - 1):
        for j in range(nv.size(n)):
            for jj in range(n + 1):
                for i in range(jj + 1):
                    a = nv.degen_table(n + 1, nv.cells[n + 1][nv.degen(n, jj, j)], i)
                    b = nv.degen_table(n + 1, nv.cells[n + 1][nv.degen(n, i, j)], jj + 1)
                    assert a == b
    for n in range(0, D):
        for j in range(nv.size(n)):
            t = nv.cells[n][j]
            for jj in range(n + 1):
                sjt = nv.cells[n + 1][nv.degen(n, jj, j)]
                for i in range(n + 2):
                    got = nv.face_table(n + 1, sjt, i)
                    if i == jj or i == jj + 1:
                        assert got == t
                    elif i < jj:
                        want = nv.degen_table(
                            n - 1, nv.cells[n - 1][nv.face(n, i, j)], jj - 1
                        )
                        assert got == want
                    else:
                        want = nv.degen_table(
                            n - 1, nv.cells[n - 1][nv.face(n, i - 1, j)], jj
                        )
                        assert got == want
    for j in range(nv.size(1)):
        assert nv.aug[nv.face(1, 0, j)] == nv.aug[nv.face(1, 1, j)]


def test_globular_nerve_of_square_sizes():
    nv = globular_nerve(cube_category(2), 3)
    # 16 state pairs; 6 paths; above degree 0 the only nondegenerate
    # direction is the single square, giving 6 + n chains of length n.
    assert [nv.size(n) for n in range(-1, 4)] == [16, 6, 7, 8, 9]
    assert [sum(nv.thin[n]) for n in range(0, 4)] == [0, 6, 8, 9]


def test_globular_nerve_of_globe_sizes():
    nv = globular_nerve(globe_category(3), 3)
    assert [nv.size(n) for n in range(-1, 4)] == [4, 2, 4, 8, 16]


def test_corner_nerve_sizes_of_square():
    nm = corner_nerve(cube_category(2), "-", 2)
    np_ = corner_nerve(cube_category(2), "+", 2)
    assert [nm.size(n) for n in range(-1, 3)] == [4, 6, 16, 60]
    assert [np_.size(n) for n in range(-1, 3)] == [4, 6, 16, 60]
    assert [sum(nm.thin[n]) for n in range(0, 3)] == [0, 12, 60]


def test_corner_nerve_sizes_of_globe():
    nm = corner_nerve(globe_category(3), "-", 2)
    assert [nm.size(n) for n in range(-1, 3)] == [2, 2, 4, 8]


def test_degree_zero_cells_are_the_arrows():
    cat = cube_category(2)
    nm = corner_nerve(cat, "-", 1)
    evs = sorted(cat.label(v) for v in nm.evs[0])
    dims = {cat.dims[v] for v in nm.evs[0]}
    assert dims == {1}
    assert len(evs) == 6


def test_globular_identities_square():
    _check_simplicial_identities(globular_nerve(cube_category(2), 3))


def test_globular_identities_globe():
    _check_simplicial_identities(globular_nerve(globe_category(3), 3))


def test_corner_identities_square():
    _check_simplicial_identities(corner_nerve(cube_category(2), "-", 2))
    _check_simplicial_identities(corner_nerve(cube_category(2), "+", 2))


def test_corner_identities_globe():
    _check_simplicial_identities(corner_nerve(globe_category(3), "-", 2))


def test_grades_partition_cells():
    nv = globular_nerve(cube_category(2), 2)
    for n in range(0, 3):
        for j in range(nv.size(n)):
            assert nv.grades[n][j] in nv.minus_one_pos
    comp_total = 0
    for grade in nv.grade_keys():
        c = nv.component(grade)
        comp_total += c.size(1)
    assert comp_total == nv.size(1)


def test_component_faces_stay_inside():
    nv = corner_nerve(cube_category(2), "-", 2)
    for grade in nv.grade_keys():
        c = nv.component(grade)
        for n in range(1, 3):
            for j in range(c.size(n)):
                for i in range(n + 1):
                    c.face(n, i, j)  # must not raise


def test_simplicial_shell_fillers_recover_tops():
    nv = globular_nerve(cube_category(2), 2)
    pos2 = face_position(simplex_shape(2))
    for j in range(nv.size(2)):
        faces = [nv.cells[1][nv.face(2, i, j)] for i in range(3)]
        tops = simplicial_shell_fillers(2, nv.target, faces)
        assert nv.cells[2][j][pos2[(0, 1, 2)]] in tops


def test_cubical_shell_fillers_recover_centers():
    cat = cube_category(2)
    nm = corner_nerve(cat, "-", 1)
    posc = face_position(cube_shape(2))
    for j in range(nm.size(1)):
        t = nm.cells[1][j]
        mf = [cube_face_table(2, t, k, "-") for k in (1, 2)]
        pf = [cube_face_table(2, t, k, "+") for k in (1, 2)]
        tops = cubical_shell_fillers(2, cat, mf, pf)
        assert t[posc["00"]] in tops


def test_simplicial_shell_rejects_mismatched_faces():
    nv = globular_nerve(cube_category(2), 2)
    tables = nv.cells[1]
    # find three degree-1 cells that do NOT satisfy the shell relations
    bad = None
    for a in tables:
        for b in tables:
            for c in tables:
                try:
                    fill_shell_simplicial(2, nv.target, [a, b, c], a[0])
                except (NerveError, FunctorError):
                    bad = (a, b, c)
                    break
            if bad:
                break
        if bad:
            break
    assert bad is not None


def test_globular_nerve_requires_noncontracting():
    cat = cube_category(2)
    assert cat.noncontracting()
    assert simplex_category(3).noncontracting()
    assert globe_category(4).noncontracting()


def test_nerve_of_graph_has_no_high_cells():
    g = graph_category(
        "wedge", ["a", "b", "c"], [("f", "a", "b"), ("g", "b", "c")]
    )
    nv = globular_nerve(g, 2)
    # paths: f, g, g*f; all degree >= 1 cells are degenerate chains
    assert nv.size(0) == 3
    assert nv.size(1) == 3
    assert all(nv.thin[1])
    assert nv.size(2) == 3


def test_degenerate_chain_counts_match_formula():
    # for a category whose path category is a poset-like 1-category the
    # n-cells are chains; check monotone growth and degeneracy closure
    nv = globular_nerve(cube_category(2), 3)
    for n in range(0, 3):
        for j in range(nv.size(n)):
            for i in range(n + 1):
                nv.degen(n, i, j)  # lands inside cells, must not raise
