"""Builders for the standard composable schemes.

Each builder validates its input data, constructs the face universe,
seeds the generators dimension by dimension (closing under composition
at every step so that higher generators find their boundary elements),
and returns the saturated :class:`~artifact.category.FiniteOmegaCat`.
"""

from __future__ import annotations

from . import faces as F
from .category import (
    DEFAULT_ELEMENT_CAP,
    CategoryBuilder,
    FiniteOmegaCat,
    SchemeError,
    evaluate_expression,
)


def _seed_face_scheme(name, universe, cap, meta):
    """Seed every face of a cube/simplex-style universe as a generator."""
    builder = CategoryBuilder(name, universe, cap)
    cat = builder.cat
    order = sorted(range(len(universe)), key=lambda i: (universe.dims[i], i))
    current = 0
    for fi in order:
        d = universe.dims[fi]
        if d > current:
            builder.close()
            current = d
        if d == 0:
            src = tgt = None
        else:
            smask = universe.half_boundary(universe.rmask[fi], -1)
            tmask = universe.half_boundary(universe.rmask[fi], +1)
            src = cat.by_key.get(smask)
            tgt = cat.by_key.get(tmask)
            if src is None or tgt is None:
                raise SchemeError(
                    "%s: boundary of face %s is not composable" % (name, universe.faces[fi])
                )
        label = universe.faces[fi]
        if not isinstance(label, str):
            label = "(" + " ".join(str(v) for v in label) + ")"
        builder.add_generator(label, fi, src, tgt)
    return builder.finish(meta)


def cube_category(n, element_cap=DEFAULT_ELEMENT_CAP):
    """Free category on the n-cube's faces."""
    assert n >= 0
    return _seed_face_scheme(
        "cube%d" % n, F.cube_universe(n), element_cap, {"kind": "cube", "n": n}
    )


def simplex_category(n, element_cap=DEFAULT_ELEMENT_CAP):
    """Free category on the n-simplex's faces (the n-th oriental)."""
    assert n >= 0
    return _seed_face_scheme(
        "simplex%d" % n, F.simplex_universe(n), element_cap, {"kind": "simplex", "n": n}
    )


# ---------------------------------------------------------------------------
# presentations: generators with composition-expression boundaries
# ---------------------------------------------------------------------------


def presentation_category(name, gens, element_cap=DEFAULT_ELEMENT_CAP, meta=None):
    """Free category on named generators.

    ``gens`` is a list of (label, dim, src_tree, tgt_tree) with the trees
    being None for dim 0 and otherwise composition expressions
    ('gen', label) / ('comp', left, p, right) over earlier generators.
    """
    labels = [g[0] for g in gens]
    if len(set(labels)) != len(labels):
        raise SchemeError("%s: duplicate generator names" % name)
    dims = [g[1] for g in gens]
    k = len(gens)
    universe = F.FaceUniverse(
        labels, dims, [0] * k, [[] for _ in range(k)], [[] for _ in range(k)]
    )
    builder = CategoryBuilder(name, universe, element_cap)
    cat = builder.cat
    order = sorted(range(k), key=lambda i: (dims[i], i))
    current = 0
    for gi in order:
        label, d, stree, ttree = gens[gi]
        if d > current:
            builder.close()
            current = d
        if d == 0:
            if stree is not None or ttree is not None:
                raise SchemeError("%s: state %s cannot have boundaries" % (name, label))
            universe.rmask[gi] = universe.bit[gi]
            src = tgt = None
        else:
            if stree is None or ttree is None:
                raise SchemeError("%s: generator %s needs boundaries" % (name, label))
            src = evaluate_expression(cat, stree)
            tgt = evaluate_expression(cat, ttree)
            universe.rmask[gi] = universe.bit[gi] | cat.keys[src] | cat.keys[tgt]
            universe.source_tops[gi] = [
                i for i in universe._bits(cat.keys[src]) if universe.dims[i] == d - 1
            ]
            universe.target_tops[gi] = [
                i for i in universe._bits(cat.keys[tgt]) if universe.dims[i] == d - 1
            ]
        builder.add_generator(label, gi, src, tgt)
    cat = builder.finish(meta or {"kind": "presentation"})
    return cat


def globe_category(n, element_cap=DEFAULT_ELEMENT_CAP):
    """The n-globe: two parallel cells in every dimension below n.

    Generators are named m0/p0 ... m{n-1}/p{n-1} and ``top``.
    """
    assert n >= 0
    gens = []
    for kdim in range(n):
        if kdim == 0:
            gens.append(("m0", 0, None, None))
            gens.append(("p0", 0, None, None))
        else:
            lower = ("m%d" % (kdim - 1), "p%d" % (kdim - 1))
            gens.append(("m%d" % kdim, kdim, ("gen", lower[0]), ("gen", lower[1])))
            gens.append(("p%d" % kdim, kdim, ("gen", lower[0]), ("gen", lower[1])))
    if n == 0:
        gens.append(("top", 0, None, None))
    else:
        lower = ("m%d" % (n - 1), "p%d" % (n - 1))
        gens.append(("top", n, ("gen", lower[0]), ("gen", lower[1])))
    return presentation_category(
        "globe%d" % n, gens, element_cap, {"kind": "globe", "n": n}
    )


def graph_category(name, vertices, edges, element_cap=DEFAULT_ELEMENT_CAP):
    """Free 1-category on a finite acyclic multigraph.

    ``edges`` is a list of (label, source_vertex, target_vertex).
    """
    vset = list(vertices)
    if len(set(vset)) != len(vset):
        raise SchemeError("%s: duplicate vertex names" % name)
    adj = {v: [] for v in vset}
    for label, a, b in edges:
        if a not in adj or b not in adj:
            raise SchemeError("%s: edge %s has unknown endpoints" % (name, label))
        if a == b:
            raise SchemeError("%s: edge %s is a self-loop" % (name, label))
        adj[a].append(b)
    # acyclicity by iterative DFS with colors
    color = {v: 0 for v in vset}
    for root in vset:
        if color[root]:
            continue
        stack = [(root, iter(adj[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 1:
                    raise SchemeError("%s: the graph has a directed cycle" % name)
                if color[w] == 0:
                    color[w] = 1
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                stack.pop()
    gens = [(v, 0, None, None) for v in vset]
    gens += [(lbl, 1, ("gen", a), ("gen", b)) for (lbl, a, b) in edges]
    return presentation_category(name, gens, element_cap, {"kind": "graph"})


# ---------------------------------------------------------------------------
# semicubical sets -> their cell-path categories
# ---------------------------------------------------------------------------


def _cell_of(face_maps, cell, dim, word):
    """Iterated boundary cell of ``cell`` along a cube word of length dim."""
    for i in range(dim, 0, -1):
        ch = word[i - 1]
        if ch != "0":
            cell = face_maps[(cell, i, ch)]
    return cell


def semicubical_category(name, cells, face_maps, element_cap=DEFAULT_ELEMENT_CAP):
    """Category of a semicubical set: every n-cell contributes an n-cube.

    ``cells``: list of (label, dim).  ``face_maps``: dict mapping
    (label, i, sign) -> label for 1 <= i <= dim, sign in "-+".
    """
    labels = [c[0] for c in cells]
    if len(set(labels)) != len(labels):
        raise SchemeError("%s: duplicate cell names" % name)
    dim_of = dict(cells)
    # face maps must be total and land one dimension down
    for label, d in cells:
        for i in range(1, d + 1):
            for sign in "-+":
                tgt = face_maps.get((label, i, sign))
                if tgt is None:
                    raise SchemeError("%s: missing face (%s, %d, %s)" % (name, label, i, sign))
                if dim_of.get(tgt) != d - 1:
                    raise SchemeError(
                        "%s: face (%s, %d, %s) has wrong dimension" % (name, label, i, sign)
                    )
    # semicubical relations
    for label, d in cells:
        for j in range(2, d + 1):
            for i in range(1, j):
                for a in "-+":
                    for b in "-+":
                        lhs = face_maps[(face_maps[(label, j, b)], i, a)]
                        rhs = face_maps[(face_maps[(label, i, a)], j - 1, b)]
                        if lhs != rhs:
                            raise SchemeError(
                                "%s: face maps of %s violate the cubical relations"
                                % (name, label)
                            )
    # every cell must embed its cube: the labelling has to be injective
    index = {lbl: i for i, lbl in enumerate(labels)}
    rmasks = []
    stops, ttops = [], []
    for label, d in cells:
        seen = {}
        mask = 0
        for word in F.cube_subfaces("0" * d):
            sub = _cell_of(face_maps, label, d, word)
            if sub in seen and seen[sub] != word:
                raise SchemeError(
                    "%s: cell %s does not embed its cube (faces %s and %s collide)"
                    % (name, label, seen[sub], word)
                )
            seen[sub] = word
            mask |= 1 << index[sub]
        rmasks.append(mask)
        stops.append(
            [index[_cell_of(face_maps, label, d, w)] for w in F.cube_source_tops("0" * d)]
        )
        ttops.append(
            [index[_cell_of(face_maps, label, d, w)] for w in F.cube_target_tops("0" * d)]
        )
    # 1-skeleton acyclicity (cheap proxy for loop-freeness; deeper
    # self-linking is caught by the closure engine's union guard)
    verts = [lbl for lbl, d in cells if d == 0]
    arcs = [
        (lbl, face_maps[(lbl, 1, "-")], face_maps[(lbl, 1, "+")])
        for lbl, d in cells
        if d == 1
    ]
    graph_category("%s-skeleton" % name, verts, arcs, element_cap)

    dims = [c[1] for c in cells]
    universe = F.FaceUniverse(labels, dims, rmasks, stops, ttops)
    builder = CategoryBuilder(name, universe, element_cap)
    cat = builder.cat
    order = sorted(range(len(cells)), key=lambda i: (dims[i], i))
    current = 0
    for ci in order:
        d = dims[ci]
        if d > current:
            builder.close()
            current = d
        if d == 0:
            src = tgt = None
        else:
            smask = universe.half_boundary(universe.rmask[ci], -1)
            tmask = universe.half_boundary(universe.rmask[ci], +1)
            src = cat.by_key.get(smask)
            tgt = cat.by_key.get(tmask)
            if src is None or tgt is None:
                raise SchemeError(
                    "%s: boundary of cell %s is not composable" % (name, labels[ci])
                )
        builder.add_generator(labels[ci], ci, src, tgt)
    return builder.finish({"kind": "semicubical"})
