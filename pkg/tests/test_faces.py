"""Oracle tests for the face combinatorics layer.

The half-boundary alternation rules are frozen here against hand-worked
values; everything else in the package leans on them.
"""

from __future__ import annotations

import itertools

import pytest

from artifact import faces as F


# ---------------------------------------------------------------------------
# cube words
# ---------------------------------------------------------------------------


def test_cube_source_target_tops_worked_example():
    # frozen: four-letter word with one free coordinate blocks
    assert set(F.cube_source_tops("0+00")) == {"-+00", "0++0", "0+0-"}
    assert set(F.cube_target_tops("0+00")) == {"++00", "0+-0", "0+0+"}


def test_cube_tops_small_squares():
    assert F.cube_source_tops("00") == ["-0", "0+"]
    assert F.cube_target_tops("00") == ["+0", "0-"]
    assert F.cube_source_tops("-00") == ["--0", "-0+"]
    assert F.cube_target_tops("-00") == ["-+0", "-0-"]
    assert F.cube_target_tops("0+0") == ["++0", "0+-"]
    assert F.cube_target_tops("00-") == ["+0-", "0--"]
    assert F.cube_source_tops("+00") == ["+-0", "+0+"]


def test_cube_edge_orientation():
    # the 1-cube runs from - to +
    assert F.cube_source_tops("0") == ["-"]
    assert F.cube_target_tops("0") == ["+"]


def test_cube_subface_count():
    for word in ["0", "00", "0+0", "0000"]:
        subs = F.cube_subfaces(word)
        assert len(subs) == 3 ** F.cube_dim(word)
        assert len(set(subs)) == len(subs)
        assert word in subs


# ---------------------------------------------------------------------------
# simplex tuples
# ---------------------------------------------------------------------------


def test_simplex_source_target_tops_worked_example():
    # frozen: drop even positions for the source, odd for the target
    face = (0, 4, 5, 8, 9)
    assert set(F.simplex_source_tops(face)) == {(4, 5, 8, 9), (0, 4, 8, 9), (0, 4, 5, 8)}
    assert set(F.simplex_target_tops(face)) == {(0, 5, 8, 9), (0, 4, 5, 9)}


def test_simplex_triangle():
    assert set(F.simplex_source_tops((0, 1, 2))) == {(1, 2), (0, 1)}
    assert set(F.simplex_target_tops((0, 1, 2))) == {(0, 2)}
    # edges run from the larger vertex to the smaller one
    assert F.simplex_source_tops((0, 1)) == [(1,)]
    assert F.simplex_target_tops((0, 1)) == [(0,)]


def test_simplex_subface_count():
    for n in range(5):
        face = tuple(range(n + 1))
        subs = F.simplex_subfaces(face)
        assert len(subs) == 2 ** (n + 1) - 1
        assert len(set(subs)) == len(subs)


# ---------------------------------------------------------------------------
# serialization round trips
# ---------------------------------------------------------------------------


def test_face_str_round_trip():
    for face in ["-0+", "0000", "+", (0,), (0, 4, 5, 8, 9)]:
        assert F.face_from_str(F.face_to_str(face)) == face


def test_face_from_str_rejects_garbage():
    for bad in ["-0x", "(2 1)", "(1 1)", "()", "( a )"]:
        with pytest.raises(ValueError):
            F.face_from_str(bad)


# ---------------------------------------------------------------------------
# universes and R-closed masks
# ---------------------------------------------------------------------------


def test_closure_idempotent_and_monotone():
    for uni in [F.cube_universe(3), F.simplex_universe(3)]:
        full = (1 << len(uni)) - 1
        for trial in range(0, len(uni), 3):
            m = uni.closure(uni.bit[trial] | uni.bit[(trial * 7 + 1) % len(uni)])
            assert uni.closure(m) == m
            assert m & full == m


def test_half_boundary_square():
    uni = F.cube_universe(2)
    sq = uni.closure(uni.mask_of(["00"]))
    src = uni.half_boundary(sq, -1)
    tgt = uni.half_boundary(sq, +1)
    assert sorted(uni.faces_of(src)) == sorted(["--", "-+", "++", "-0", "0+"])
    assert sorted(uni.faces_of(tgt)) == sorted(["--", "+-", "++", "+0", "0-"])


def test_half_boundary_composite_path_in_cube():
    # a 1-dimensional three-step path through the 3-cube boundary
    uni = F.cube_universe(3)
    x = uni.closure(uni.mask_of(["-00", "0+0", "00-"]))
    src = uni.half_boundary(x, -1)
    assert sorted(f for f in uni.faces_of(src) if F.cube_dim(f) == 1) == sorted(
        ["--0", "-0+", "0++"]
    )
    tgt = uni.half_boundary(x, +1)
    assert sorted(f for f in uni.faces_of(tgt) if F.cube_dim(f) == 1) == sorted(
        ["0--", "+0-", "++0"]
    )


def test_half_boundary_two_step_path_in_triangle():
    uni = F.simplex_universe(2)
    x = uni.closure(uni.mask_of([(0, 1), (1, 2)]))
    src = uni.half_boundary(x, -1)
    tgt = uni.half_boundary(x, +1)
    assert uni.faces_of(src) == [(2,)]
    assert uni.faces_of(tgt) == [(0,)]


def _is_globular(uni, mask):
    """source/target of source equals source/target of target one level down."""
    d = uni.set_dim(mask)
    if d < 2:
        return True
    s = uni.half_boundary(mask, -1)
    t = uni.half_boundary(mask, +1)
    return (
        uni.half_boundary(s, -1) == uni.half_boundary(t, -1)
        and uni.half_boundary(s, +1) == uni.half_boundary(t, +1)
    )


def test_half_boundaries_globular_on_all_faces():
    for uni in [F.cube_universe(n) for n in range(1, 5)] + [
        F.simplex_universe(n) for n in range(1, 6)
    ]:
        for i, face in enumerate(uni.faces):
            mask = uni.rmask[i]
            assert _is_globular(uni, mask), face
            # iterating to the bottom ends at a single vertex on each side
            bot_s = uni.boundary_at(mask, 0, -1)
            bot_t = uni.boundary_at(mask, 0, +1)
            assert bin(bot_s).count("1") == 1
            assert bin(bot_t).count("1") == 1


def test_maximal_faces():
    uni = F.cube_universe(2)
    sq = uni.closure(uni.mask_of(["00"]))
    assert [uni.faces[i] for i in uni.maximal_faces(sq)] == ["00"]
    src = uni.half_boundary(sq, -1)
    assert sorted(uni.faces[i] for i in uni.maximal_faces(src)) == ["-0", "0+"]
