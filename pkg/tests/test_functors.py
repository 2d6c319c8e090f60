"""Functor tables: checking, evaluation, and exhaustive enumeration."""

import pytest

from artifact.category import path_category
from artifact.functors import (
    FunctorError,
    check_functor,
    enumerate_functors,
    evaluate_element,
)
from artifact.nerves import cube_shape, shape_faces, simplex_shape
from artifact.schemes import cube_category, simplex_category


def _critical(shape):
    return frozenset(
        gi for gi, w in enumerate(shape_faces(shape)) if w.count("0") == 1
    )


def test_functor_counts_into_square():
    # frozen counts, each re-derivable by hand on the filled square
    tgt = cube_category(2)
    ptgt = path_category(tgt)
    assert len(enumerate_functors(simplex_shape(0), ptgt)) == 6
    assert len(enumerate_functors(simplex_shape(1), ptgt)) == 7
    assert len(enumerate_functors(simplex_shape(2), ptgt)) == 8
    assert len(enumerate_functors(cube_shape(1), tgt)) == 10
    assert len(enumerate_functors(cube_shape(2), tgt)) == 47
    crit = _critical(cube_shape(1))
    assert len(enumerate_functors(cube_shape(1), tgt, dim1_exact=crit)) == 6


def test_enumerated_tables_all_check():
    tgt = cube_category(2)
    for shape in (cube_shape(1), cube_shape(2)):
        tables = enumerate_functors(shape, tgt)
        assert len(set(tables)) == len(tables)
        for t in tables:
            check_functor(shape, tgt, t)


def test_identity_functor_is_enumerated():
    tgt = cube_category(2)
    shape = cube_shape(2)
    by_label = dict(tgt.generators)
    ident = tuple(by_label[lbl] for lbl, _x in shape.generators)
    check_functor(shape, tgt, ident)
    assert ident in set(enumerate_functors(shape, tgt))


def test_check_functor_rejects_wrong_boundary():
    tgt = cube_category(2)
    shape = cube_shape(1)
    by_label = dict(tgt.generators)
    # edge image whose endpoints disagree with the vertex images
    pos = {w: gi for gi, w in enumerate(shape_faces(shape))}
    table = [None] * 3
    table[pos["-"]] = by_label["--"]
    table[pos["+"]] = by_label["--"]
    table[pos["0"]] = by_label["0-"]
    with pytest.raises(FunctorError):
        check_functor(shape, tgt, tuple(table))


def test_evaluate_element_on_composites():
    # evaluating a composite face equals composing the evaluations
    tgt = cube_category(2)
    shape = cube_shape(2)
    by_label = dict(tgt.generators)
    ident = tuple(by_label[lbl] for lbl, _x in shape.generators)
    for x in shape.elements():
        v = evaluate_element(shape, tgt, ident, x)
        assert tgt.dims[v] == shape.dims[x]
    top = dict(shape.generators)["00"]
    assert evaluate_element(shape, tgt, ident, top) == by_label["00"]


def test_fixed_and_vertex_candidates():
    tgt = cube_category(2)
    ptgt = path_category(tgt)
    shape = simplex_shape(1)
    tables = enumerate_functors(shape, ptgt)
    some_vertex_gi = next(
        gi for gi, (_l, x) in enumerate(shape.generators) if shape.dims[x] == 0
    )
    forced = tables[0][some_vertex_gi]
    sub = enumerate_functors(shape, ptgt, fixed={some_vertex_gi: forced})
    assert set(sub) == {t for t in tables if t[some_vertex_gi] == forced}
    only = enumerate_functors(shape, ptgt, vertex_candidates=[forced])
    assert set(only) == {
        t
        for t in tables
        if all(
            t[gi] == forced
            for gi, (_l, x) in enumerate(shape.generators)
            if shape.dims[x] == 0
        )
    }


def test_simplex_counts_grow_with_target():
    # the path category of the 1-cube is a single point
    tgt = cube_category(1)
    ptgt = path_category(tgt)
    assert len(enumerate_functors(simplex_shape(0), ptgt)) == 1
    assert len(enumerate_functors(simplex_shape(1), ptgt)) == 1
    tgt3 = simplex_category(2)
    p3 = path_category(tgt3)
    zero = len(enumerate_functors(simplex_shape(0), p3))
    assert zero == len([x for x in tgt3.elements() if tgt3.dims[x] == 1])
