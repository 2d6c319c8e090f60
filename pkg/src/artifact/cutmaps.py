"""Operators connecting morphisms, path-simplex cells, and corner-cube cells.

* ``corner_embedding`` sends a degree-n path-simplex cell to an
  (n+1)-cube cell of the chosen corner nerve of the same category.
* ``fold`` attaches to a morphism u of dimension >= 1 its canonical
  path-simplex cell of degree dim(u)-1: the top value is u, the two
  final faces fold the codimension-one boundaries (ordered per degree
  so that modulo thin cells the simplicial boundary of fold(u) is
  fold(source) - fold(target)), and every other face is an iterated
  degeneracy of a folded deeper boundary.
* ``is_folded_simplex`` / ``is_folded_minus`` test whether a cell is a
  fixed point of the corresponding folding.
* ``one_sided`` tests whether every face of a cube on the side
  opposite to the given sign is 0-dimensional; for '-' these cubes are
  exactly the corner embeddings of path-simplex cells.
* ``star`` composes two path-simplex cells pointwise at level 0, with
  ``ConstantCell`` standing in for state-valued degenerate cells.
* ``additivity_witness`` builds a degree-n simplex whose simplicial
  boundary is fold(x) - fold(x composed with y at level n-1) + fold(y)
  up to degenerate faces.

All tables follow the conventions of ``nerves``: tuples of target
element ids indexed by the shape's generator order.  Path-simplex
tables are valued in the path category; cube tables are valued in the
category itself.
"""

from __future__ import annotations

from collections import namedtuple
from itertools import permutations

from .category import path_category
from .functors import FunctorError, check_functor
from .nerves import (
    NerveError,
    cube_face_table,
    cube_gamma_table,
    cube_shape,
    face_position,
    fill_shell_cubical,
    fill_shell_simplicial,
    shape_faces,
    simplex_degen_table,
    simplex_face_table,
    simplex_shape,
)


class CutError(Exception):
    pass


# ---------------------------------------------------------------------------
# shared small helpers
# ---------------------------------------------------------------------------


def simplex_states(cat, n, table):
    """(source state, target state) of a degree-n path-simplex table."""
    pcat = path_category(cat)
    pos = face_position(simplex_shape(n))
    first = pcat.kept[table[pos[(n,)]]]
    last = pcat.kept[table[pos[(0,)]]]
    return cat.source(first, 0), cat.target(last, 0)


def cube_center(m, table):
    """Value of an m-cube table at the all-zeros word."""
    return table[face_position(cube_shape(m))["0" * m]]


def simplex_top(n, table):
    """Value of a degree-n simplex table at the full vertex tuple."""
    return table[face_position(simplex_shape(n))[tuple(range(n + 1))]]


# ---------------------------------------------------------------------------
# corner embeddings of path-simplex cells
# ---------------------------------------------------------------------------


def corner_embedding(cat, n, table, sign):
    """Embed a degree-n path-simplex table as an (n+1)-cube table.

    For sign '-' the cube is given by a closed form: a word containing
    '+' maps to the common target state; a word over {'-', '0'} with
    zeros at slots p_1 < ... < p_r (1-based) maps to the simplex value
    at the vertex tuple (p_1 - 1, ..., p_r - 1); the all-'-' word maps
    to the common source state.  The result commutes with faces and
    degeneracies slot by slot.

    For sign '+' no closed form exists: the cube is assembled
    recursively by filling a shell whose faces on the '+' side are the
    embeddings of the simplex's faces and whose '-' side is constant at
    the source state, searching over the ways of attaching the face
    embeddings to cube slots.  The slot order is not uniform across
    categories, so only the unordered set of '+'-faces is guaranteed to
    match the embedded simplex faces; ``CutError`` is raised when no
    attachment yields a valid cube (such cells exist: the embedding for
    '+' is partial).
    """
    assert sign in ("-", "+")
    if sign == "+":
        return _corner_plus(cat, n, table)
    pcat = path_category(cat)
    spos = face_position(simplex_shape(n))
    src_state, tgt_state = simplex_states(cat, n, table)
    out = []
    for w in shape_faces(cube_shape(n + 1)):
        if "+" in w:
            out.append(tgt_state)
        elif "0" in w:
            sigma = tuple(p for p in range(n + 1) if w[p] == "0")
            out.append(pcat.kept[table[spos[sigma]]])
        else:
            out.append(src_state)
    got = tuple(out)
    check_functor(cube_shape(n + 1), cat, got)
    return got


def _constant_cube(cat, m, state):
    """The m-cube table with every value equal to ``state``."""
    return tuple(state for _ in shape_faces(cube_shape(m)))


def _slot_assignments(k):
    """Ways of attaching k faces to k slots: mirror and identity first."""
    mirror = tuple(range(k - 1, -1, -1))
    plain = tuple(range(k))
    seen = [mirror, plain] if k > 1 else [plain]
    for perm in seen:
        yield perm
    for perm in permutations(range(k)):
        if perm not in seen:
            yield perm


def _corner_plus(cat, n, table):
    memo = getattr(cat, "_corner_plus_memo", None)
    if memo is None:
        memo = {}
        cat._corner_plus_memo = memo
    key = (n, table)
    if key in memo:
        good = memo[key]
        if good is None:
            raise CutError("no '+' corner embedding at degree %d" % n)
        return good
    pcat = path_category(cat)
    spos = face_position(simplex_shape(n))
    center = pcat.kept[simplex_top(n, table)]
    src_state, tgt_state = simplex_states(cat, n, table)
    if n == 0:
        out = []
        for w in shape_faces(cube_shape(1)):
            out.append({"-": src_state, "0": center, "+": tgt_state}[w])
        good = tuple(out)
        check_functor(cube_shape(1), cat, good)
        memo[key] = good
        return good
    faces = [
        _corner_plus(cat, n - 1, simplex_face_table(n, table, i))
        for i in range(n + 1)
    ]
    minus = [_constant_cube(cat, n, src_state)] * (n + 1)
    for perm in _slot_assignments(n + 1):
        plus = [faces[perm[j]] for j in range(n + 1)]
        try:
            good = fill_shell_cubical(n + 1, cat, minus, plus, center)
        except (NerveError, FunctorError):
            continue
        memo[key] = good
        return good
    memo[key] = None
    raise CutError("no '+' corner embedding at degree %d" % n)


def one_sided(cat, m, table, sign):
    """True when every face opposite to ``sign`` has a 0-dimensional value.

    For sign '-' an m-cube table has this property exactly when it is
    the corner embedding of some degree-(m-1) path-simplex cell; for
    sign '+' every embedding is one-sided but the converse can fail.
    """
    opp = "+" if sign == "-" else "-"
    for i in range(1, m + 1):
        face = cube_face_table(m, table, i, opp)
        if cat.dims[cube_center(m - 1, face)] != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# folding morphisms into path-simplex cells
# ---------------------------------------------------------------------------

_SIDE_PATTERNS = (
    ("alternating-source-first", lambda i: -1 if i % 2 == 0 else 1),
    ("alternating-target-first", lambda i: 1 if i % 2 == 0 else -1),
    ("all-source", lambda i: -1),
    ("all-target", lambda i: 1),
)


def _degeneracy_tower(table, i, top_degree):
    """Lift a degree-i table to degree top_degree-1 by eps_{top-2}..eps_i."""
    out = table
    for j in range(i, top_degree - 1):
        out = simplex_degen_table(j, out, j)
    return out


def fold(cat, u):
    """Canonical path-simplex cell of a morphism u, at degree dim(u)-1."""
    memo = getattr(cat, "_fold_memo", None)
    if memo is None:
        memo = {}
        cat._fold_memo = memo
        cat._fold_pattern = {}
    got = memo.get(u)
    if got is not None:
        return got
    n = cat.dim(u)
    if n < 1:
        raise CutError(
            "fold needs a morphism of dimension >= 1, got %s" % cat.label(u)
        )
    pcat = path_category(cat)
    d = n - 1
    if d == 0:
        table = (pcat.back[u],)
        memo[u] = table
        return table
    if d == 1:
        pos = face_position(simplex_shape(1))
        out = [None] * 3
        out[pos[(1,)]] = pcat.back[cat.source(u, 1)]
        out[pos[(0,)]] = pcat.back[cat.target(u, 1)]
        out[pos[(0, 1)]] = pcat.back[u]
        table = tuple(out)
        check_functor(simplex_shape(1), pcat, table)
        memo[u] = table
        return table
    # Degree >= 2: assemble from a shell.  The two final faces carry the
    # folded source and target; their order is fixed by the sign of the
    # surviving terms in the alternating face sum, and is tried first.
    fs = fold_at(cat, cat.source(u, n - 1), d - 1)
    ft = fold_at(cat, cat.target(u, n - 1), d - 1)
    if d % 2 == 0:
        last_two = [("target-then-source", (ft, fs)), ("source-then-target", (fs, ft))]
    else:
        last_two = [("source-then-target", (fs, ft)), ("target-then-source", (ft, fs))]
    errors = []
    for order_name, pair in last_two:
        for side_name, side in _SIDE_PATTERNS:
            faces = []
            for i in range(d - 1):
                w = cat.boundary(u, i + 1, side(i))
                faces.append(_degeneracy_tower(fold_at(cat, w, i), i, d))
            faces.extend(pair)
            try:
                table = fill_shell_simplicial(d, pcat, faces, pcat.back[u])
            except (NerveError, FunctorError) as exc:
                errors.append("%s/%s: %s" % (order_name, side_name, exc))
                continue
            cat._fold_pattern[d] = (order_name, side_name)
            memo[u] = table
            return table
    raise CutError(
        "no face assignment folds %s at degree %d (%s)"
        % (cat.label(u), d, "; ".join(errors))
    )


def fold_at(cat, w, degree):
    """fold(w) lifted by trailing degeneracies up to the given degree."""
    out = fold(cat, w)
    k = cat.dim(w) - 1
    while k < degree:
        out = simplex_degen_table(k, out, k)
        k += 1
    return out


def fold_pattern(cat):
    """Per-degree record of the face assignment chosen while folding."""
    return dict(getattr(cat, "_fold_pattern", {}))


# ---------------------------------------------------------------------------
# fixed-point tests for the foldings
# ---------------------------------------------------------------------------


def _in_degeneracy_tower(n_face, table, i):
    """Is a degree-n_face table in the image of eps_{n_face-1}..eps_i?"""
    z = table
    k = n_face
    for j in range(n_face - 1, i - 1, -1):
        z = simplex_face_table(k, z, j)
        k -= 1
    back = z
    for j in range(i, n_face):
        back = simplex_degen_table(j, back, j)
    return back == table


def is_folded_simplex(n, table):
    """A degree-n simplex is folded iff each face below the last two is
    an iterated degeneracy (face i lies in the image of
    eps_{n-2}..eps_i, for 0 <= i <= n-2)."""
    for i in range(0, n - 1):
        if not _in_degeneracy_tower(n - 1, simplex_face_table(n, table, i), i):
            return False
    return True


def _in_connection_tower(cat, m_face, table, i):
    """Is an m_face-cube table in the image of Gamma_{m_face-1}..Gamma_i?"""
    z = table
    k = m_face
    for j in range(m_face - 1, i - 1, -1):
        z = cube_face_table(k, z, j, "-")
        k -= 1
    back = z
    for j in range(i, m_face):
        back = cube_gamma_table(j, back, j, "-")
    return back == table


def is_folded_minus(cat, m, table):
    """Fixed-point test for the '-' corner folding on an m-cube table.

    True exactly when every '+'-side value is 0-dimensional and every
    low face on the '-' side is an iterated connection; these cubes are
    the '-' corner embeddings of folded path-simplex cells.
    """
    if not one_sided(cat, m, table, "-"):
        return False
    for i in range(1, m - 1):
        face = cube_face_table(m, table, i, "-")
        if not _in_connection_tower(cat, m - 1, face, i):
            return False
    return True


# ---------------------------------------------------------------------------
# pointwise composition of path-simplex cells
# ---------------------------------------------------------------------------

ConstantCell = namedtuple("ConstantCell", ["degree", "state"])


def cell_states(cat, n, x):
    """(source state, target state) for a table or a ConstantCell."""
    if isinstance(x, ConstantCell):
        assert x.degree == n
        return x.state, x.state
    return simplex_states(cat, n, x)


def star(cat, n, x, y):
    """Pointwise level-0 composition of two degree-n path-simplex cells.

    The target state of x must equal the source state of y.  Constant
    cells act as units, and composing two constants is again constant.
    """
    sx, tx = cell_states(cat, n, x)
    sy, ty = cell_states(cat, n, y)
    if tx != sy:
        raise CutError(
            "cells are not composable: target state %s differs from source state %s"
            % (cat.label(tx), cat.label(sy))
        )
    if isinstance(x, ConstantCell) and isinstance(y, ConstantCell):
        return ConstantCell(n, sx)
    if isinstance(x, ConstantCell):
        return y
    if isinstance(y, ConstantCell):
        return x
    pcat = path_category(cat)
    out = tuple(
        pcat.back[cat.compose(pcat.kept[a], 0, pcat.kept[b])] for a, b in zip(x, y)
    )
    check_functor(simplex_shape(n), pcat, out)
    return out


# ---------------------------------------------------------------------------
# the additivity witness
# ---------------------------------------------------------------------------


def additivity_witness(cat, x, y):
    """A degree-n simplex whose alternating face sum is
    fold(x) - fold(x *_{n-1} y) + fold(y) plus degenerate faces.

    Both morphisms must have the same dimension n >= 2 and compose at
    level n-1 (target of x equal to source of y there).
    """
    n = cat.dim(x)
    if cat.dim(y) != n or n < 2:
        raise CutError("additivity witnesses need two morphisms of equal dimension >= 2")
    z = cat.compose(x, n - 1, y)
    pcat = path_category(cat)
    faces = []
    for i in range(n - 2):
        side = -1 if i % 2 == 0 else 1
        w = cat.boundary(x, i + 1, side)
        faces.append(_degeneracy_tower(fold_at(cat, w, i), i, n))
    faces.append(fold_at(cat, x, n - 1))
    faces.append(fold_at(cat, z, n - 1))
    faces.append(fold_at(cat, y, n - 1))
    return fill_shell_simplicial(n, pcat, faces, pcat.back[z])
