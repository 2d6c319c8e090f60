"""Functors between finite omega-categories, given by generator tables.

A functor out of a scheme-generated category is determined by the
images of the generators.  A table is an assignment of target elements
to the shape's generators (in generator order); it is a functor exactly
when every generator's image has dimension at most the generator's and
the top-level boundary law holds:

    source(F(g), d-1) = F(source element of g)   (and likewise target)

where the right-hand side is evaluated through the recorded derivation
of the boundary element.  Enumeration of all functors proceeds by
backtracking: the 1-skeleton is walked edge-first so vertex images are
propagated instead of guessed, and faces of dimension >= 2 are filled
in ascending order with their boundary images already determined.
"""

from __future__ import annotations

from .category import CategoryError


class FunctorError(CategoryError):
    pass


# ---------------------------------------------------------------------------
# evaluation of shape elements under a generator table
# ---------------------------------------------------------------------------


def gen_index_of_elements(shape):
    """Map element id -> generator index, for generator elements."""
    out = {}
    for gi, (_lbl, x) in enumerate(shape.generators):
        out[x] = gi
    return out


def evaluate_element(shape, target, table, elem, _memo=None):
    """Image of a shape element under the generator table."""
    if _memo is None:
        _memo = {}
    got = _memo.get(elem)
    if got is not None:
        return got
    der = shape.derivations[elem]
    if der[0] == "gen":
        val = table[der[1]]
        if val is None:
            raise FunctorError("table is missing generator %d" % der[1])
    else:
        _, a, p, b = der
        va = evaluate_element(shape, target, table, a, _memo)
        vb = evaluate_element(shape, target, table, b, _memo)
        val = target.compose(va, p, vb)
    _memo[elem] = val
    return val


def check_functor(shape, target, table):
    """Raise FunctorError unless the table satisfies the functor laws."""
    if len(table) != len(shape.generators):
        raise FunctorError("table length mismatch")
    memo = {}
    for gi, (lbl, x) in enumerate(shape.generators):
        d = shape.dims[x]
        val = table[gi]
        if target.dims[val] > d:
            raise FunctorError("image of %s has dimension %d > %d" % (lbl, target.dims[val], d))
        if d == 0:
            continue
        want_s = evaluate_element(shape, target, table, shape.source(x, d - 1), memo)
        want_t = evaluate_element(shape, target, table, shape.target(x, d - 1), memo)
        if target.source(val, d - 1) != want_s or target.target(val, d - 1) != want_t:
            raise FunctorError("boundary law fails on generator %s" % lbl)
    return True


# ---------------------------------------------------------------------------
# target indexes for candidate lookup
# ---------------------------------------------------------------------------


class _TargetIndex:
    def __init__(self, target):
        self.states = list(target.by_dim(0))
        self.low_by_s = {}
        self.low_by_t = {}
        self.low_by_st = {}
        for x in target.elements():
            if target.dims[x] <= 1:
                s = target.source(x, 0)
                t = target.target(x, 0)
                self.low_by_s.setdefault(s, []).append(x)
                self.low_by_t.setdefault(t, []).append(x)
                self.low_by_st.setdefault((s, t), []).append(x)
        self.exact = {}
        for x in target.elements():
            d = target.dims[x]
            if d >= 1:
                key = (d, target.source(x, d - 1), target.target(x, d - 1))
                self.exact.setdefault(key, []).append(x)


def target_index(target):
    idx = getattr(target, "_functor_index", None)
    if idx is None:
        idx = _TargetIndex(target)
        target._functor_index = idx
    return idx


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _skeleton_order(shape):
    """Faces ordered: BFS-interleaved vertices/edges, then higher dims."""
    gen_elem = [x for (_lbl, x) in shape.generators]
    verts = [gi for gi, x in enumerate(gen_elem) if shape.dims[x] == 0]
    edges = [gi for gi, x in enumerate(gen_elem) if shape.dims[x] == 1]
    elem_to_gen = gen_index_of_elements(shape)
    ends = {}
    for gi in edges:
        x = gen_elem[gi]
        ends[gi] = (elem_to_gen[shape.source(x, 0)], elem_to_gen[shape.target(x, 0)])
    order = []
    placed = set()
    vert_pool = list(verts)
    edge_pool = list(edges)
    while vert_pool or edge_pool:
        progressed = False
        for ei in list(edge_pool):
            a, b = ends[ei]
            if a in placed or b in placed:
                order.append(ei)
                edge_pool.remove(ei)
                for v in (a, b):
                    if v not in placed:
                        order.append(v)
                        placed.add(v)
                        vert_pool.remove(v)
                progressed = True
                break
        if progressed:
            continue
        if vert_pool:
            v = vert_pool.pop(0)
            order.append(v)
            placed.add(v)
        else:
            # edges with no placeable endpoint cannot occur in a connected
            # shape, but handle leftovers for robustness
            order.append(edge_pool.pop(0))
    higher = [
        gi
        for gi, x in enumerate(gen_elem)
        if shape.dims[x] >= 2
    ]
    higher.sort(key=lambda gi: (shape.dims[gen_elem[gi]], gi))
    return order + higher, ends, elem_to_gen


def enumerate_functors(
    shape,
    target,
    vertex_candidates=None,
    dim1_exact=frozenset(),
    fixed=None,
):
    """All functor tables shape -> target, sorted.

    vertex_candidates: optional list of allowed 0-cell images.
    dim1_exact: generator indexes whose image must have dimension exactly 1.
    fixed: dict generator index -> forced image.
    """
    idx = target_index(target)
    gen_elem = [x for (_lbl, x) in shape.generators]
    order, ends, _ = _skeleton_order(shape)
    fixed = fixed or {}
    n = len(gen_elem)
    table = [None] * n
    results = []
    vert_pool = list(idx.states) if vertex_candidates is None else list(vertex_candidates)

    def edge_endpoint_constraint(gi):
        """Forced value for vertex gi from already-assigned incident edges."""
        forced = None
        for ei, (a, b) in ends.items():
            val = table[ei]
            if val is None:
                continue
            if a == gi:
                want = target.source(val, 0)
            elif b == gi:
                want = target.target(val, 0)
            else:
                continue
            if forced is None:
                forced = want
            elif forced != want:
                return -1  # inconsistent
        return forced

    def candidates(gi):
        x = gen_elem[gi]
        d = shape.dims[x]
        if d == 0:
            forced = edge_endpoint_constraint(gi)
            if forced == -1:
                return ()
            if forced is not None:
                if vertex_candidates is not None and forced not in vert_pool:
                    return ()
                return (forced,)
            return tuple(vert_pool)
        if d == 1:
            a, b = ends[gi]
            va, vb = table[a], table[b]
            if va is not None and vb is not None:
                cands = idx.low_by_st.get((va, vb), ())
            elif va is not None:
                cands = idx.low_by_s.get(va, ())
            elif vb is not None:
                cands = idx.low_by_t.get(vb, ())
            else:
                cands = [
                    x2 for x2 in target.elements() if target.dims[x2] <= 1
                ]
            if gi in dim1_exact:
                cands = [c for c in cands if target.dims[c] == 1]
            # vertex filters restrict the endpoints of every edge too
            if vertex_candidates is not None:
                allowed = set(vert_pool)
                cands = [
                    c
                    for c in cands
                    if target.source(c, 0) in allowed and target.target(c, 0) in allowed
                ]
            return tuple(cands)
        # dimension >= 2: boundaries fully determined
        memo = {}
        try:
            s = evaluate_element(shape, target, table, shape.source(x, d - 1), memo)
            t = evaluate_element(shape, target, table, shape.target(x, d - 1), memo)
        except CategoryError:
            return ()
        cands = list(idx.exact.get((d, s, t), ()))
        if s == t and target.dims[s] < d:
            cands.append(s)  # degenerate image
        return tuple(cands)

    def backtrack(pos):
        if pos == len(order):
            results.append(tuple(table))
            return
        gi = order[pos]
        want = fixed.get(gi)
        for val in candidates(gi):
            if want is not None and val != want:
                continue
            table[gi] = val
            backtrack(pos + 1)
            table[gi] = None

    backtrack(0)
    results.sort()
    return results
