"""Simplicial nerves of finite omega-categories.

Two families are built, both as augmented simplicial sets truncated at
an explicit level D:

* the path nerve ("globular"): degree n holds the functors from the
  n-simplex shape into the path category of C; degree -1 holds all
  ordered pairs of states, and the augmentation sends a functor to the
  (source state, target state) of its values.

* the two corner nerves ("minus" / "plus"): degree n holds the functors
  from the (n+1)-cube shape into C whose critical 1-faces (one free
  coordinate, all others at the corner sign) are 1-dimensional; degree
  -1 holds the states, with the augmentation evaluating the 0-boundary
  of the distinguished edge.

A cell is stored as a table: a tuple of target element ids indexed by
the shape's generator order.  All simplicial operators are pure table
reindexings along the corresponding shape-level maps.
"""

from __future__ import annotations

from .category import path_category
from .functors import (
    FunctorError,
    check_functor,
    enumerate_functors,
    evaluate_element,
    target_index,
)
from .schemes import cube_category, simplex_category

_SHAPE_CACHE = {}


class NerveError(Exception):
    pass


def simplex_shape(n):
    key = ("simplex", n)
    if key not in _SHAPE_CACHE:
        _SHAPE_CACHE[key] = simplex_category(n)
    return _SHAPE_CACHE[key]


def cube_shape(n):
    key = ("cube", n)
    if key not in _SHAPE_CACHE:
        _SHAPE_CACHE[key] = cube_category(n)
    return _SHAPE_CACHE[key]


def shape_faces(shape):
    """Generator-ordered list of the shape's faces (words or tuples)."""
    got = getattr(shape, "_gen_faces", None)
    if got is None:
        got = [shape.universe.faces[fi] for fi in shape.gen_face]
        shape._gen_faces = got
    return got


def face_position(shape):
    got = getattr(shape, "_face_gi", None)
    if got is None:
        got = {f: gi for gi, f in enumerate(shape_faces(shape))}
        shape._face_gi = got
    return got


# ---------------------------------------------------------------------------
# table reindexing: simplicial operators on the simplex shapes
# ---------------------------------------------------------------------------


def simplex_face_table(n, table, i):
    """Face operator: precompose with the injection skipping vertex i."""
    assert 0 <= i <= n
    src = face_position(simplex_shape(n))
    out = []
    for sigma in shape_faces(simplex_shape(n - 1)):
        lifted = tuple(v if v < i else v + 1 for v in sigma)
        out.append(table[src[lifted]])
    return tuple(out)


def simplex_degen_table(n, table, i):
    """Degeneracy: precompose with the surjection repeating vertex i."""
    assert 0 <= i <= n
    src = face_position(simplex_shape(n))
    out = []
    for sigma in shape_faces(simplex_shape(n + 1)):
        dropped = []
        for v in sigma:
            w = v if v <= i else v - 1
            if not dropped or dropped[-1] != w:
                dropped.append(w)
        out.append(table[src[tuple(dropped)]])
    return tuple(out)


# ---------------------------------------------------------------------------
# table reindexing: cube-level operators (1-based slot indexing)
# ---------------------------------------------------------------------------


def cube_face_table(m, table, j, sign):
    """Insert the letter ``sign`` at slot j: I^(m-1) -> I^m tables."""
    assert 1 <= j <= m
    src = face_position(cube_shape(m))
    out = []
    for w in shape_faces(cube_shape(m - 1)):
        out.append(table[src[w[: j - 1] + sign + w[j - 1:]]])
    return tuple(out)


def cube_degen_table(m, table, j):
    """True degeneracy: ignore slot j of an (m+1)-cube word."""
    assert 1 <= j <= m + 1
    src = face_position(cube_shape(m))
    out = []
    for w in shape_faces(cube_shape(m + 1)):
        out.append(table[src[w[: j - 1] + w[j:]]])
    return tuple(out)


_ORDER = {"-": 0, "0": 1, "+": 2}


def cube_gamma_table(m, table, j, sign):
    """Connection: merge slots j, j+1 by max (sign '-') or min (sign '+')."""
    assert 1 <= j <= m
    src = face_position(cube_shape(m))
    pick = max if sign == "-" else min
    out = []
    for w in shape_faces(cube_shape(m + 1)):
        merged = pick(w[j - 1], w[j], key=_ORDER.get)
        out.append(table[src[w[: j - 1] + merged + w[j + 1:]]])
    return tuple(out)


# ---------------------------------------------------------------------------
# nerves
# ---------------------------------------------------------------------------


class Nerve:
    """A truncated augmented simplicial set of functor tables."""

    def __init__(self, kind, cat, depth):
        assert kind in ("globular", "minus", "plus")
        self.kind = kind
        self.cat = cat
        self.D = depth
        self.sign = {"minus": "-", "plus": "+"}.get(kind)
        if kind == "globular":
            if not cat.noncontracting():
                raise NerveError("%s is contracting; the path nerve is undefined" % cat.name)
            self.target = path_category(cat)
            self.to_parent = self.target.kept
        else:
            self.target = cat
            self.to_parent = None
        self.cells = []
        self.pos = []
        self.evs = []
        self.thin = []
        self.grades = []
        self.minus_one = []
        self.minus_one_pos = {}
        self.aug = []
        self._build()

    # -- shapes ---------------------------------------------------------------

    def shape(self, n):
        if self.kind == "globular":
            return simplex_shape(n)
        return cube_shape(n + 1)

    # -- construction ----------------------------------------------------------

    def _grade_of_zero_cell(self, v):
        """Grade key of a 0-cell of the target."""
        if self.kind == "globular":
            parent = self.to_parent[v]
            return (self.cat.source(parent, 0), self.cat.target(parent, 0))
        return v

    def _vertex_pools(self):
        """Split target 0-cells into grade classes."""
        pools = {}
        for v in self.target.by_dim(0):
            pools.setdefault(self._grade_of_zero_cell(v), []).append(v)
        return pools

    def _build(self):
        cat = self.cat
        if self.kind == "globular":
            self.minus_one = [(a, b) for a in cat.states() for b in cat.states()]
        else:
            self.minus_one = list(cat.states())
        self.minus_one_pos = {g: i for i, g in enumerate(self.minus_one)}
        pools = self._vertex_pools()
        for n in range(self.D + 1):
            shape = self.shape(n)
            tables = []
            if self.kind == "globular":
                for grade in sorted(pools):
                    tables.extend(
                        enumerate_functors(shape, self.target, vertex_candidates=pools[grade])
                    )
            else:
                dim1 = self._critical_edges(n)
                tables.extend(enumerate_functors(shape, self.target, dim1_exact=dim1))
            tables.sort()
            self.cells.append(tables)
            self.pos.append({t: i for i, t in enumerate(tables)})
            self.evs.append([self._ev(n, t) for t in tables])
            self.grades.append([self._grade(n, t) for t in tables])
            self.thin.append(
                [n >= 1 and self._cat_dim_of_ev(self.evs[n][i]) <= n for i in range(len(tables))]
            )
        self.aug = [self._augment(t) for t in self.cells[0]]
        self._faces = {}
        self._degens = {}
        for n in range(1, self.D + 1):
            self._faces[n] = [
                [self.index_of(n - 1, self.face_table(n, t, i)) for t in self.cells[n]]
                for i in range(n + 1)
            ]
        for n in range(self.D):
            self._degens[n] = [
                [self.index_of(n + 1, self.degen_table(n, t, i)) for t in self.cells[n]]
                for i in range(n + 1)
            ]

    def _critical_edges(self, n):
        """Generator indexes of the corner-adjacent 1-faces of I^(n+1)."""
        shape = self.shape(n)
        out = set()
        for gi, w in enumerate(shape_faces(shape)):
            if w.count("0") == 1 and all(ch in ("0", self.sign) for ch in w):
                out.add(gi)
        return out

    # -- per-cell data -----------------------------------------------------------

    def _ev(self, n, table):
        shape = self.shape(n)
        if self.kind == "globular":
            top = (tuple(range(n + 1)),)
            return table[face_position(shape)[top[0]]]
        return table[face_position(shape)["0" * (n + 1)]]

    def _cat_dim_of_ev(self, v):
        if self.kind == "globular":
            return self.target.dims[v] + 1
        return self.target.dims[v]

    def _grade(self, n, table):
        shape = self.shape(n)
        if self.kind == "globular":
            v = table[face_position(shape)[(n,)]]
            return self._grade_of_zero_cell(v)
        return table[face_position(shape)[self.sign * (n + 1)]]

    def _augment(self, table):
        if self.kind == "globular":
            return self.minus_one_pos[self._grade(0, table)]
        edge = table[face_position(self.shape(0))["0"]]
        v = self.cat.source(edge, 0) if self.kind == "minus" else self.cat.target(edge, 0)
        return self.minus_one_pos[v]

    # -- operators -----------------------------------------------------------------

    def face_table(self, n, table, i):
        if self.kind == "globular":
            return simplex_face_table(n, table, i)
        return cube_face_table(n + 1, table, i + 1, self.sign)

    def degen_table(self, n, table, i):
        if self.kind == "globular":
            return simplex_degen_table(n, table, i)
        return cube_gamma_table(n + 1, table, i + 1, self.sign)

    def index_of(self, n, table):
        got = self.pos[n].get(table)
        if got is None:
            raise NerveError(
                "a produced table at degree %d is not among the enumerated cells" % n
            )
        return got

    def face(self, n, i, j):
        return self._faces[n][i][j]

    def degen(self, n, i, j):
        return self._degens[n][i][j]

    def size(self, n):
        if n == -1:
            return len(self.minus_one)
        return len(self.cells[n])

    def labels(self, n):
        """Human-readable labels for the degree-n cells."""
        if n == -1:
            if self.kind == "globular":
                return [
                    "(%s,%s)" % (self.cat.label(a), self.cat.label(b))
                    for (a, b) in self.minus_one
                ]
            return [self.cat.label(v) for v in self.minus_one]
        tag = "s" if self.kind == "globular" else "c"
        out = []
        for j, ev in enumerate(self.evs[n]):
            name = self.target.label(ev) if self.kind == "globular" else self.cat.label(ev)
            out.append("%s%d.%d[%s]" % (tag, n, j, name))
        return out

    # -- component decomposition -----------------------------------------------

    def grade_keys(self):
        keys = set(self.minus_one)
        for n in range(self.D + 1):
            keys.update(self.grades[n])
        return sorted(keys)

    def component(self, grade):
        """Restriction of the nerve to one grade, as plain index data."""
        keep = []
        for n in range(self.D + 1):
            keep.append([j for j in range(self.size(n)) if self.grades[n][j] == grade])
        return _Component(self, grade, keep)


class _Component:
    """A grade component: same interface surface as Nerve where it matters."""

    def __init__(self, nerve, grade, keep):
        self.nerve = nerve
        self.kind = nerve.kind
        self.cat = nerve.cat
        self.D = nerve.D
        self.grade = grade
        self.keep = keep
        self.back = [
            {j: i for i, j in enumerate(keep[n])} for n in range(nerve.D + 1)
        ]
        self.minus_one = [grade] if grade in nerve.minus_one_pos else []
        self.thin = [
            [nerve.thin[n][j] for j in keep[n]] for n in range(nerve.D + 1)
        ]
        self.aug = [0 for _j in keep[0]]

    def size(self, n):
        if n == -1:
            return len(self.minus_one)
        return len(self.keep[n])

    def face(self, n, i, j):
        parent = self.nerve.face(n, i, self.keep[n][j])
        got = self.back[n - 1].get(parent)
        if got is None:
            raise NerveError("face left the grade component")
        return got

    def labels(self, n):
        return [self.nerve.labels(n)[j] for j in self.keep[n]]


# ---------------------------------------------------------------------------
# shells and fillers
# ---------------------------------------------------------------------------


def fill_shell_simplicial(n, target, face_tables, top_value):
    """Assemble a degree-n simplex table from its n+1 faces and top cell.

    face_tables[i] is the table of the i-th face (degree n-1); the
    shell relations face_i(x_j) = face_{j-1}(x_i) for i < j are checked,
    then the assembled table is validated as a functor.
    """
    assert n >= 1 and len(face_tables) == n + 1
    for j in range(n + 1):
        for i in range(j):
            a = simplex_face_table(n - 1, face_tables[j], i)
            b = simplex_face_table(n - 1, face_tables[i], j - 1)
            if a != b:
                raise NerveError("shell relations fail at faces (%d, %d)" % (i, j))
    shape = simplex_shape(n)
    lower_pos = face_position(simplex_shape(n - 1))
    out = []
    for sigma in shape_faces(shape):
        if len(sigma) == n + 1:
            out.append(top_value)
            continue
        missing = min(set(range(n + 1)) - set(sigma))
        reduced = tuple(v if v < missing else v - 1 for v in sigma)
        out.append(face_tables[missing][lower_pos[reduced]])
    table = tuple(out)
    check_functor(shape, target, table)
    return table


def simplicial_shell_fillers(n, target, face_tables):
    """All top values that fill the shell; empty when not fillable."""
    shape = simplex_shape(n)
    # assemble without the top cell, then solve the boundary condition
    top_gi = face_position(shape)[tuple(range(n + 1))]
    partial = [None] * len(shape.generators)
    lower_pos = face_position(simplex_shape(n - 1))
    for gi, sigma in enumerate(shape_faces(shape)):
        if gi == top_gi:
            continue
        missing = min(set(range(n + 1)) - set(sigma))
        reduced = tuple(v if v < missing else v - 1 for v in sigma)
        partial[gi] = face_tables[missing][lower_pos[reduced]]
    top_elem = shape.generators[top_gi][1]
    memo = {}
    s = evaluate_element(shape, target, partial, shape.source(top_elem, n - 1), memo)
    t = evaluate_element(shape, target, partial, shape.target(top_elem, n - 1), memo)
    idx = target_index(target)
    cands = list(idx.exact.get((n, s, t), ()))
    if s == t and target.dims[s] < n:
        cands.append(s)
    good = []
    for u in cands:
        try:
            fill_shell_simplicial(n, target, face_tables, u)
        except (NerveError, FunctorError):
            continue
        good.append(u)
    return good


def fill_shell_cubical(m, target, minus_faces, plus_faces, top_value):
    """Assemble an m-cube table from its 2m faces and center value.

    minus_faces[j-1] / plus_faces[j-1] are the tables of the two faces
    at slot j (1-based); the cubical shell relations are checked first.
    """
    assert m >= 1 and len(minus_faces) == m and len(plus_faces) == m
    sides = {("-", j): minus_faces[j - 1] for j in range(1, m + 1)}
    sides.update({("+", j): plus_faces[j - 1] for j in range(1, m + 1)})
    for j in range(1, m + 1):
        for i in range(1, j):
            for a in "-+":
                for b in "-+":
                    lhs = cube_face_table(m - 1, sides[(b, j)], i, a)
                    rhs = cube_face_table(m - 1, sides[(a, i)], j - 1, b)
                    if lhs != rhs:
                        raise NerveError(
                            "cubical shell relations fail at slots (%d, %d)" % (i, j)
                        )
    shape = cube_shape(m)
    lower_pos = face_position(cube_shape(m - 1))
    out = []
    for w in shape_faces(shape):
        if w == "0" * m:
            out.append(top_value)
            continue
        j = next(k for k in range(m) if w[k] != "0") + 1
        out.append(sides[(w[j - 1], j)][lower_pos[w[: j - 1] + w[j:]]])
    table = tuple(out)
    check_functor(shape, target, table)
    return table


def cubical_shell_fillers(m, target, minus_faces, plus_faces):
    """All center values that fill a cubical shell."""
    shape = cube_shape(m)
    top_gi = face_position(shape)["0" * m]
    partial = [None] * len(shape.generators)
    lower_pos = face_position(cube_shape(m - 1))
    sides = {("-", j): minus_faces[j - 1] for j in range(1, m + 1)}
    sides.update({("+", j): plus_faces[j - 1] for j in range(1, m + 1)})
    for gi, w in enumerate(shape_faces(shape)):
        if gi == top_gi:
            continue
        j = next(k for k in range(m) if w[k] != "0") + 1
        partial[gi] = sides[(w[j - 1], j)][lower_pos[w[: j - 1] + w[j:]]]
    top_elem = shape.generators[top_gi][1]
    memo = {}
    s = evaluate_element(shape, target, partial, shape.source(top_elem, m - 1), memo)
    t = evaluate_element(shape, target, partial, shape.target(top_elem, m - 1), memo)
    idx = target_index(target)
    cands = list(idx.exact.get((m, s, t), ()))
    if s == t and target.dims[s] < m:
        cands.append(s)
    good = []
    for u in cands:
        try:
            fill_shell_cubical(m, target, minus_faces, plus_faces, u)
        except (NerveError, FunctorError):
            continue
        good.append(u)
    return good


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def globular_nerve(cat, depth):
    return Nerve("globular", cat, depth)


def corner_nerve(cat, sign, depth):
    assert sign in ("-", "+", "minus", "plus")
    kind = {"-": "minus", "+": "plus"}.get(sign, sign)
    return Nerve(kind, cat, depth)
