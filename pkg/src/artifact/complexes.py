"""Chain complexes of the homology theories.

Degree bookkeeping, common to every theory built here: complex degree k
holds the simplicial degree k-1 chains, so degree 0 is the augmentation
degree, the degree-1 differential is the augmentation map, and H(0) is
the cokernel of the augmentation.

Five families:

* plain nerve homology: free complex on the nerve cells with the
  alternating face sum differential;
* reduced nerve homology: same complex with every thin cell, and the
  boundary of every thin cell, added as relations;
* formal homology: free complex on the morphisms of the category with
  d = s - t, quotiented by linearized compositions (a composite equals
  the sum of its factors for level >= 1 compositions; the corner
  variants also keep one factor of each level-0 composition);
* old-style globular homology: free complex on the morphisms with
  d = s - t and no relations, in either of two degree-0 conventions;
* normalized nerve homology: the nerve complex presented modulo the
  degenerate cells (same homology; used as the honest chain-level
  target of the element-to-folded-simplex comparison map, whose
  boundary commutation only holds up to degenerate terms).

The comparison diagram between the globular-side theories is built by
``comparison_diagram``; the branching map induced by the corner
embedding is built by ``corner_chain_map``.
"""

from __future__ import annotations

from .cutmaps import corner_embedding, fold
from .homology import ChainComplex, ChainMap, ComplexInvariantError
from .nerves import corner_nerve, globular_nerve


def state_pairs(cat):
    """All ordered pairs of states, in the canonical enumeration order."""
    return [(a, b) for a in cat.states() for b in cat.states()]


def element_positions(cat, n):
    """Position of each dimension-n element in the degree-n basis."""
    return {x: i for i, x in enumerate(cat.by_dim(n))}


# ---------------------------------------------------------------------------
# nerve-based theories
# ---------------------------------------------------------------------------


def _nerve_degrees(nv):
    """Labels and differential columns for every complex degree."""
    degrees = {0: (nv.labels(-1), [{} for _ in range(nv.size(-1))])}
    degrees[1] = (nv.labels(0), [{nv.aug[j]: 1} for j in range(nv.size(0))])
    for k in range(2, nv.D + 2):
        n = k - 1
        cols = []
        for j in range(nv.size(n)):
            col = {}
            for i in range(n + 1):
                f = nv.face(n, i, j)
                col[f] = col.get(f, 0) + (1 if i % 2 == 0 else -1)
            cols.append({i: v for i, v in col.items() if v})
        degrees[k] = (nv.labels(n), cols)
    return degrees


def nerve_complex(nv, name=None, check=True):
    """Free complex of an augmented nerve, valid up to degree D."""
    cc = ChainComplex(
        name or "%s nerve of %s" % (nv.kind, nv.cat.name),
        top=nv.D,
        meta={"kind": nv.kind, "category": nv.cat.name, "truncation": nv.D},
    )
    for k, (labels, cols) in _nerve_degrees(nv).items():
        cc.set_degree(k, labels, cols)
    if check:
        cc.check_complex_laws()
    return cc


def reduced_nerve_complex(nv, name=None, check=True):
    """Nerve complex modulo the subcomplex generated by the thin cells."""
    cc = ChainComplex(
        name or "reduced %s nerve of %s" % (nv.kind, nv.cat.name),
        top=nv.D,
        meta={"kind": nv.kind, "category": nv.cat.name, "truncation": nv.D,
              "reduced": True},
    )
    degrees = _nerve_degrees(nv)
    for k, (labels, cols) in degrees.items():
        # complex degree k holds the nerve cells of degree k - 1
        relations = []
        if k >= 2:
            for j in range(nv.size(k - 1)):
                if nv.thin[k - 1][j]:
                    relations.append({j: 1})
        # boundaries of the thin cells one degree up keep d well-defined
        if k >= 1 and k + 1 in degrees:
            up_cols = degrees[k + 1][1]
            for j in range(nv.size(k)):
                if nv.thin[k][j] and up_cols[j]:
                    relations.append(dict(up_cols[j]))
        cc.set_degree(k, labels, cols, relations)
    if check:
        cc.check_complex_laws()
    return cc


def degenerate_flags(nv):
    """Per degree, which nerve cells are images of a degeneracy operator."""
    flags = {n: [False] * nv.size(n) for n in range(nv.D + 1)}
    for n in range(nv.D):
        for j in range(nv.size(n)):
            for i in range(n + 1):
                flags[n + 1][nv.degen(n, i, j)] = True
    return flags


def normalized_nerve_complex(nv, name=None, check=True):
    """Nerve complex presented modulo the degenerate cells.

    The degenerate cells span a subcomplex (in the alternating face sum
    of a degenerate cell, the two copies of the underlying cell cancel),
    so the quotient is well-defined and has the same homology as the
    plain nerve complex.
    """
    cc = ChainComplex(
        name or "normalized %s nerve of %s" % (nv.kind, nv.cat.name),
        top=nv.D,
        meta={"kind": nv.kind, "category": nv.cat.name, "truncation": nv.D,
              "normalized": True},
    )
    flags = degenerate_flags(nv)
    for k, (labels, cols) in _nerve_degrees(nv).items():
        relations = []
        if k >= 2:
            relations = [{j: 1} for j in range(nv.size(k - 1)) if flags[k - 1][j]]
        cc.set_degree(k, labels, cols, relations)
    if check:
        cc.check_complex_laws()
    return cc


# ---------------------------------------------------------------------------
# formal theories
# ---------------------------------------------------------------------------


def formal_complex(cat, variant, check=True):
    """Linearized composition complex; variant in {'gl', 'minus', 'plus'}.

    Every composite z = x *_p y of dimension n >= 2 contributes one
    degree-n relation, homogenized by dropping factors of dimension
    below n: for p >= 1 the relation is z = x + y, for p = 0 it is
    z = x (minus), z = y (plus) or nothing (gl).
    """
    assert variant in ("gl", "minus", "plus")
    cc = ChainComplex(
        "formal %s complex of %s" % (variant, cat.name),
        top=None,
        meta={"kind": "formal-" + variant, "category": cat.name},
    )
    if variant == "gl":
        pairs = state_pairs(cat)
        pair_pos = {p: i for i, p in enumerate(pairs)}
        labels0 = ["(%s,%s)" % (cat.label(a), cat.label(b)) for a, b in pairs]
    else:
        state_pos = {v: i for i, v in enumerate(cat.states())}
        labels0 = [cat.label(v) for v in cat.states()]
    cc.set_degree(0, labels0, [{} for _ in labels0])
    relations_by_dim = {}
    for (x, p, y), z in cat.comp.items():
        n = cat.dims[z]
        if n < 2:
            continue
        if p >= 1:
            keep = [x, y]
        elif variant == "minus":
            keep = [x]
        elif variant == "plus":
            keep = [y]
        else:
            continue
        rel = {z: 1}
        for e in keep:
            if cat.dims[e] == n:
                rel[e] = rel.get(e, 0) - 1
        rel = {e: c for e, c in rel.items() if c}
        if rel:
            relations_by_dim.setdefault(n, []).append(rel)
    for n in range(1, cat.maxdim + 1):
        basis = cat.by_dim(n)
        pos = {x: i for i, x in enumerate(basis)}
        below = element_positions(cat, n - 1) if n >= 2 else None
        labels = [cat.label(x) for x in basis]
        cols = []
        for x in basis:
            if n == 1:
                if variant == "gl":
                    cols.append({pair_pos[(cat.source(x, 0), cat.target(x, 0))]: 1})
                elif variant == "minus":
                    cols.append({state_pos[cat.source(x, 0)]: 1})
                else:
                    cols.append({state_pos[cat.target(x, 0)]: 1})
            else:
                s = cat.source(x, n - 1)
                t = cat.target(x, n - 1)
                if s not in below or t not in below:
                    raise ComplexInvariantError(
                        "%s: boundary of %s drops more than one dimension"
                        % (cc.name, cat.label(x))
                    )
                col = {}
                col[below[s]] = col.get(below[s], 0) + 1
                col[below[t]] = col.get(below[t], 0) - 1
                cols.append({i: v for i, v in col.items() if v})
        rels = []
        for rel in relations_by_dim.get(n, ()):
            rels.append({pos[e]: c for e, c in rel.items()})
        cc.set_degree(n, labels, cols, rels)
    if check:
        cc.check_complex_laws()
    return cc


# ---------------------------------------------------------------------------
# old-style globular theory
# ---------------------------------------------------------------------------


def old_globular_complex(cat, convention="tensor", check=True):
    """Free complex on all morphisms with d = s - t.

    Degree 0 follows one of two historical conventions:
      * 'tensor':  basis = ordered state pairs, d(u) = e[(s u, t u)]
      * 'sum':     basis = two tagged copies of the states,
                   d(u) = e[src copy of s u] + e[tgt copy of t u]
    """
    assert convention in ("tensor", "sum")
    cc = ChainComplex(
        "old globular complex of %s (%s)" % (cat.name, convention),
        top=None,
        meta={"kind": "old-gl", "category": cat.name, "degree0": convention},
    )
    states = list(cat.states())
    if convention == "tensor":
        pairs = state_pairs(cat)
        pair_pos = {p: i for i, p in enumerate(pairs)}
        labels0 = ["(%s,%s)" % (cat.label(a), cat.label(b)) for a, b in pairs]
    else:
        state_pos = {v: i for i, v in enumerate(states)}
        labels0 = ["src:%s" % cat.label(v) for v in states]
        labels0 += ["tgt:%s" % cat.label(v) for v in states]
    cc.set_degree(0, labels0, [{} for _ in labels0])
    for n in range(1, cat.maxdim + 1):
        basis = cat.by_dim(n)
        below = element_positions(cat, n - 1) if n >= 2 else None
        labels = [cat.label(x) for x in basis]
        cols = []
        for x in basis:
            if n == 1:
                if convention == "tensor":
                    cols.append({pair_pos[(cat.source(x, 0), cat.target(x, 0))]: 1})
                else:
                    col = {}
                    i = state_pos[cat.source(x, 0)]
                    j = len(states) + state_pos[cat.target(x, 0)]
                    col[i] = col.get(i, 0) + 1
                    col[j] = col.get(j, 0) + 1
                    cols.append(col)
            else:
                col = {}
                s = below[cat.source(x, n - 1)]
                t = below[cat.target(x, n - 1)]
                col[s] = col.get(s, 0) + 1
                col[t] = col.get(t, 0) - 1
                cols.append({i: v for i, v in col.items() if v})
        cc.set_degree(n, labels, cols)
    if check:
        cc.check_complex_laws()
    return cc


# ---------------------------------------------------------------------------
# theory registry (shared by the command line front end and tests)
# ---------------------------------------------------------------------------

THEORIES = (
    "gl", "minus", "plus",
    "reduced-gl", "reduced-minus", "reduced-plus",
    "formal-gl", "formal-minus", "formal-plus",
    "old-gl",
)


def build_theory(cat, theory, truncation=4, degree0="tensor", check=True):
    """Build the chain complex of one named theory over a category."""
    if theory not in THEORIES:
        raise ValueError("unknown theory %r (expected one of %s)" % (theory, ", ".join(THEORIES)))
    if theory == "old-gl":
        return old_globular_complex(cat, degree0, check=check)
    if theory.startswith("formal-"):
        return formal_complex(cat, theory.split("-", 1)[1], check=check)
    reduced = theory.startswith("reduced-")
    kind = theory.split("-", 1)[1] if reduced else theory
    if kind == "gl":
        nv = globular_nerve(cat, truncation)
    else:
        nv = corner_nerve(cat, kind, truncation)
    if reduced:
        return reduced_nerve_complex(nv)
    return nerve_complex(nv)


# ---------------------------------------------------------------------------
# comparison maps between the globular-side theories
# ---------------------------------------------------------------------------


def _identity_columns(cc, degrees):
    return {k: [{j: 1} for j in range(cc.n_gens(k))] for k in degrees}


def _fold_columns(cat, nv, degrees):
    """Element-of-dimension-k to folded-(k-1)-simplex columns."""
    cols = {}
    for k in degrees:
        if k == 0:
            cols[0] = [{j: 1} for j in range(len(state_pairs(cat)))]
        else:
            cols[k] = [
                {nv.index_of(k - 1, fold(cat, x)): 1} for x in cat.by_dim(k)
            ]
    return cols


def comparison_diagram(cat, truncation=4, check=True):
    """All chain-level comparison maps between the globular theories.

    Complexes: old-gl (ordered-pair degree 0), formal-gl, gl,
    normalized-gl and reduced-gl.  Maps:

    * ``old-to-formal``: identity on every basis (formal only adds
      relations);
    * ``old-to-normalized``, ``old-to-reduced``, ``formal-to-reduced``:
      an element maps to its folded simplex; boundary commutation holds
      modulo degenerate (resp. thin) cells, which is exactly what the
      presented targets quotient out;
    * ``gl-to-normalized``, ``gl-to-reduced``: identity quotient maps.

    An element-to-folded-simplex map into the PLAIN nerve complex is a
    chain map only when no element has dimension above 2: from degree 3
    on, the boundary of a folded simplex carries an extra degenerate
    face.  It is therefore not part of the diagram.

    Returns ``{"complexes": {...}, "maps": {...}}`` with every map
    already checked for boundary commutation when ``check`` is set.
    """
    nv = globular_nerve(cat, truncation)
    complexes = {
        "old-gl": old_globular_complex(cat, "tensor", check=check),
        "formal-gl": formal_complex(cat, "gl", check=check),
        "gl": nerve_complex(nv, check=check),
        "normalized-gl": normalized_nerve_complex(nv, check=check),
        "reduced-gl": reduced_nerve_complex(nv, check=check),
    }
    elem_degrees = range(0, min(cat.maxdim, truncation + 1) + 1)
    nerve_degrees = range(0, truncation + 2)
    maps = {
        "old-to-formal": ChainMap(
            "old-to-formal",
            complexes["old-gl"],
            complexes["formal-gl"],
            _identity_columns(complexes["old-gl"], range(cat.maxdim + 1)),
        ),
        "old-to-normalized": ChainMap(
            "old-to-normalized",
            complexes["old-gl"],
            complexes["normalized-gl"],
            _fold_columns(cat, nv, elem_degrees),
        ),
        "old-to-reduced": ChainMap(
            "old-to-reduced",
            complexes["old-gl"],
            complexes["reduced-gl"],
            _fold_columns(cat, nv, elem_degrees),
        ),
        "formal-to-reduced": ChainMap(
            "formal-to-reduced",
            complexes["formal-gl"],
            complexes["reduced-gl"],
            _fold_columns(cat, nv, elem_degrees),
        ),
        "gl-to-normalized": ChainMap(
            "gl-to-normalized",
            complexes["gl"],
            complexes["normalized-gl"],
            _identity_columns(complexes["gl"], nerve_degrees),
        ),
        "gl-to-reduced": ChainMap(
            "gl-to-reduced",
            complexes["gl"],
            complexes["reduced-gl"],
            _identity_columns(complexes["gl"], nerve_degrees),
        ),
    }
    if check:
        for m in maps.values():
            m.check_chain_map(sorted(m.columns))
    return {"complexes": complexes, "maps": maps}


def corner_chain_map(cat, sign, truncation=4, check=True):
    """Chain map from the globular to a corner nerve complex.

    Columns: degree 0 sends a state pair to its branching (resp.
    merging) state; degree k sends a globular cell to its corner
    embedding.  For sign '+' the embedding is partial and has no
    slotwise face compatibility, so only '-' yields a chain map.
    """
    gn = globular_nerve(cat, truncation)
    cn = corner_nerve(cat, sign, truncation)
    src = nerve_complex(gn, check=check)
    dst = nerve_complex(cn, check=check)
    states = list(cat.states())
    state_pos = {v: i for i, v in enumerate(states)}
    columns = {
        0: [
            {state_pos[a if sign == "-" else b]: 1}
            for (a, b) in state_pairs(cat)
        ]
    }
    for k in range(1, truncation + 2):
        n = k - 1
        cols = []
        for tab in gn.cells[n]:
            cols.append({cn.index_of(n, corner_embedding(cat, n, tab, sign)): 1})
        columns[k] = cols
    name = "globular-to-%s-corner" % ("branching" if sign == "-" else "merging")
    cm = ChainMap(name, src, dst, columns)
    if check:
        cm.check_chain_map(sorted(columns))
    return cm


def thin_cycle_report(nv, check_degrees=None):
    """For cycles supported on thin cells, count how many are boundaries.

    Exploratory only: callers report the result, nothing is asserted.
    """
    from .homology import SparseMatrix, kernel_basis

    cc = nerve_complex(nv)
    out = []
    for k in check_degrees or range(2, nv.D + 1):
        thin_idx = [j for j in range(nv.size(k - 1)) if nv.thin[k - 1][j]]
        if not thin_idx:
            continue
        mat = SparseMatrix.from_columns(
            cc.n_gens(k - 1),
            [cc.diff_columns[k][j] for j in thin_idx],
        )
        cycles = 0
        boundaries = 0
        for coeffs in kernel_basis(mat):
            vec = {}
            for t, c in enumerate(coeffs):
                if c:
                    vec[thin_idx[t]] = vec.get(thin_idx[t], 0) + c
            if not vec:
                continue
            cycles += 1
            if cc.class_of(k, vec) == "boundary":
                boundaries += 1
        out.append({"degree": k, "thin_cycles": cycles, "boundaries": boundaries})
    return out
