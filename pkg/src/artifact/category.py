"""Finite strict omega-categories presented by composable face schemes.

An element of one of these categories is canonically represented by a
downward-closed set of faces of the generating scheme (an R-closed set),
stored as a single integer bitmask over the scheme's face universe.
Composition of elements is union of face sets; the closure engine
saturates the generators under all binary compositions, recording for
every element one derivation (generator, or composite of two earlier
elements) from which boundaries are computed by the usual recursion:

    q < p:  s_q(x *_p y) = s_q(x),            t_q(x *_p y) = t_q(x)
    q = p:  s_p(x *_p y) = s_p(x),            t_p(x *_p y) = t_p(y)
    q > p:  s_q(x *_p y) = s_q(x) *_p s_q(y), t_q likewise

Elements therefore carry explicit boundary tables at every level below
their dimension, and all category axioms become checkable identities on
those tables (see ``verify_category``).
"""

from __future__ import annotations

from collections import deque

from .faces import FaceUniverse

DEFAULT_ELEMENT_CAP = 200000


class CategoryError(Exception):
    pass


class SchemeError(CategoryError):
    """The generating data does not describe a composable, loop-free scheme."""


class ExplosionError(CategoryError):
    """The closure exceeded the element cap."""


class CompositionError(CategoryError):
    """A requested composite does not exist."""


class FiniteOmegaCat:
    """A finite strict omega-category with explicit tables.

    Attributes (parallel lists indexed by element id):
      * keys: canonical bitmask of each element's face set
      * dims: element dimension
      * bnds: per element, a tuple of (source_id, target_id) pairs for
        levels 0 .. dim-1 (empty for 0-cells)
      * derivations: ('gen', generator_index) or ('comp', x, p, y)
    comp maps (x, p, y) -> z for every effective composition (both
    factors of dimension > p).
    """

    def __init__(self, name, universe):
        self.name = name
        self.universe = universe
        self.keys = []
        self.dims = []
        self.bnds = []
        self.derivations = []
        self.comp = {}
        self.by_key = {}
        self.generators = []  # (label, element_id) in seeding order
        self.gen_face = []  # universe face index per generator
        self.meta = {}
        self._by_dim = None

    # -- basic queries ------------------------------------------------------

    def __len__(self):
        return len(self.keys)

    def elements(self):
        return range(len(self.keys))

    def dim(self, x):
        return self.dims[x]

    @property
    def maxdim(self):
        return max(self.dims) if self.dims else 0

    def by_dim(self, d):
        if self._by_dim is None:
            self._by_dim = {}
            for x, dx in enumerate(self.dims):
                self._by_dim.setdefault(dx, []).append(x)
        return self._by_dim.get(d, [])

    def states(self):
        return self.by_dim(0)

    def source(self, x, p):
        if p >= self.dims[x]:
            return x
        return self.bnds[x][p][0]

    def target(self, x, p):
        if p >= self.dims[x]:
            return x
        return self.bnds[x][p][1]

    def boundary(self, x, p, sign):
        return self.source(x, p) if sign < 0 else self.target(x, p)

    def compose(self, x, p, y):
        """x *_p y, with identity absorption when one side has dim <= p."""
        if self.target(x, p) != self.source(y, p):
            raise CompositionError(
                "%s and %s are not composable at level %d"
                % (self.label(x), self.label(y), p)
            )
        if self.dims[x] <= p:
            return y
        if self.dims[y] <= p:
            return x
        z = self.comp.get((x, p, y))
        if z is None:
            raise CompositionError(
                "composite of %s and %s at level %d is missing from the table"
                % (self.label(x), self.label(y), p)
            )
        return z

    # -- labels and expressions ----------------------------------------------

    def label(self, x):
        """Canonical label: R(maximal faces of the element's face set)."""
        toks = sorted(
            str(self.universe.faces[i]) if isinstance(self.universe.faces[i], str)
            else _simplex_token(self.universe.faces[i])
            for i in self.universe.maximal_faces(self.keys[x])
        )
        return "R(%s)" % " ".join(toks)

    def expression(self, x):
        """A composition expression rebuilding x from generator labels."""
        der = self.derivations[x]
        if der[0] == "gen":
            return self.generators[der[1]][0]
        _, a, p, b = der
        return "(%s *%d %s)" % (self.expression(a), p, self.expression(b))

    def element_by_faces(self, tokens):
        """Element whose face set is the closure of the given face tokens."""
        from .faces import face_from_str

        uni = self.universe
        resolved = []
        for tok in tokens:
            if tok in uni.index:
                resolved.append(tok)
                continue
            try:
                parsed = face_from_str(tok) if isinstance(tok, str) else tok
            except ValueError:
                parsed = tok
            if parsed not in uni.index:
                raise CategoryError("%s: unknown face %r" % (self.name, tok))
            resolved.append(parsed)
        mask = uni.closure(uni.mask_of(resolved))
        x = self.by_key.get(mask)
        if x is None:
            raise CategoryError(
                "R(%s) is not an element of %s" % (" ".join(map(str, tokens)), self.name)
            )
        return x

    # -- structural checks ----------------------------------------------------

    def noncontracting(self):
        """Every element of dimension >= 1 has 1-dimensional 1-boundaries."""
        for x in self.elements():
            if self.dims[x] >= 1:
                if self.dims[self.source(x, 1)] != 1 or self.dims[self.target(x, 1)] != 1:
                    return False
        return True

    def initial_states(self):
        """0-cells that are never the 0-target of a higher element."""
        used = {self.target(x, 0) for x in self.elements() if self.dims[x] >= 1}
        return [v for v in self.states() if v not in used]

    def final_states(self):
        used = {self.source(x, 0) for x in self.elements() if self.dims[x] >= 1}
        return [v for v in self.states() if v not in used]


def _simplex_token(face):
    return "(" + " ".join(str(v) for v in face) + ")"


# ---------------------------------------------------------------------------
# closure engine
# ---------------------------------------------------------------------------


class CategoryBuilder:
    """Saturates scheme generators under binary composition.

    Generators must be supplied in non-decreasing dimension order; the
    boundary of every generator has to be an element already produced by
    closing the lower dimensions (this is exactly the composability
    requirement on the scheme).
    """

    def __init__(self, name, universe, element_cap=DEFAULT_ELEMENT_CAP):
        self.cat = FiniteOmegaCat(name, universe)
        self.cap = element_cap
        self._src_at = {}  # level -> source element id -> [element ids]
        self._tgt_at = {}
        self._queue = deque()
        self._seeded_dim = -1

    # -- element bookkeeping --------------------------------------------------

    def _register(self, key, dim, bnd, derivation):
        cat = self.cat
        if len(cat.keys) >= self.cap:
            raise ExplosionError(
                "%s: element cap %d exceeded during closure" % (cat.name, self.cap)
            )
        x = len(cat.keys)
        cat.keys.append(key)
        cat.dims.append(dim)
        cat.bnds.append(tuple(bnd))
        cat.derivations.append(derivation)
        cat.by_key[key] = x
        for p in range(dim):
            self._src_at.setdefault(p, {}).setdefault(bnd[p][0], []).append(x)
            self._tgt_at.setdefault(p, {}).setdefault(bnd[p][1], []).append(x)
        self._queue.append(x)
        return x

    def add_generator(self, label, face_index, src, tgt):
        """Seed a generator with already-existing boundary elements src/tgt.

        src and tgt are element ids of dimension dim-1 (None for dim 0);
        face_index points at the generator's face in the universe, whose
        rmask must already hold the generator's full face set.
        """
        cat = self.cat
        gi = len(cat.generators)
        dim = cat.universe.dims[face_index]
        key = cat.universe.rmask[face_index]
        if key in cat.by_key:
            raise SchemeError("%s: duplicate generator %s" % (cat.name, label))
        if dim == 0:
            bnd = []
        else:
            for side in (src, tgt):
                if cat.dims[side] != dim - 1:
                    raise SchemeError(
                        "%s: boundary of generator %s must have dimension %d"
                        % (cat.name, label, dim - 1)
                    )
            # globular compatibility of the prescribed boundaries
            for q in range(dim - 1):
                if cat.bnds[src][q] != cat.bnds[tgt][q]:
                    raise SchemeError(
                        "%s: generator %s has non-globular boundaries" % (cat.name, label)
                    )
            bnd = [cat.bnds[src][q] for q in range(dim - 1)] + [(src, tgt)]
        x = self._register(key, dim, bnd, ("gen", gi))
        cat.generators.append((label, x))
        cat.gen_face.append(face_index)
        return x

    # -- composition ----------------------------------------------------------

    def _compose_ids(self, x, p, y):
        """x *_p y for existing elements, creating the composite if needed."""
        cat = self.cat
        if cat.dims[x] <= p:
            assert x == cat.source(y, p)
            return y
        if cat.dims[y] <= p:
            assert y == cat.target(x, p)
            return x
        z = cat.comp.get((x, p, y))
        if z is not None:
            return z
        key = cat.keys[x] | cat.keys[y]
        if key == cat.keys[x] or key == cat.keys[y]:
            raise SchemeError(
                "%s: composite of %s and %s collapses onto one factor; "
                "the scheme is not loop-free" % (cat.name, cat.label(x), cat.label(y))
            )
        z = cat.by_key.get(key)
        if z is None:
            dim = max(cat.dims[x], cat.dims[y])
            bnd = []
            for q in range(dim):
                if q < p:
                    bnd.append(cat.bnds[x][q])
                elif q == p:
                    bnd.append((cat.source(x, p), cat.target(y, p)))
                else:
                    sq = self._compose_ids(cat.source(x, q), p, cat.source(y, q))
                    tq = self._compose_ids(cat.target(x, q), p, cat.target(y, q))
                    bnd.append((sq, tq))
            z = self._register(key, dim, bnd, ("comp", x, p, y))
        cat.comp[(x, p, y)] = z
        return z

    def close(self):
        """Process the worklist: compose every composable pair."""
        cat = self.cat
        while self._queue:
            x = self._queue.popleft()
            for p in range(cat.dims[x]):
                tx = cat.bnds[x][p][1]
                for y in list(self._src_at.get(p, {}).get(tx, ())):
                    self._compose_ids(x, p, y)
                sx = cat.bnds[x][p][0]
                for w in list(self._tgt_at.get(p, {}).get(sx, ())):
                    self._compose_ids(w, p, x)

    def finish(self, meta=None):
        self.close()
        self.cat.meta = dict(meta or {})
        return self.cat


# ---------------------------------------------------------------------------
# expression evaluation (composition expressions over generator labels)
# ---------------------------------------------------------------------------


def evaluate_expression(cat, tree):
    """Evaluate ('gen', label) / ('comp', left, p, right) trees to an id."""
    op = tree[0]
    if op == "gen":
        label = tree[1]
        for gl, x in cat.generators:
            if gl == label:
                return x
        raise CategoryError("%s: unknown generator %r" % (cat.name, label))
    if op == "faces":
        return cat.element_by_faces(tree[1])
    if op == "comp":
        a = evaluate_expression(cat, tree[1])
        b = evaluate_expression(cat, tree[3])
        return cat.compose(a, tree[2], b)
    raise CategoryError("bad expression node %r" % (tree,))


# ---------------------------------------------------------------------------
# axiom verification (used by tests and the verify subcommand)
# ---------------------------------------------------------------------------


def verify_category(cat, interchange_budget=200000):
    """Exhaustively re-check the strict category laws on the stored tables.

    Returns a list of human-readable violation strings (empty = sound).
    """
    bad = []
    # boundary tables: globularity at every pair of levels
    for x in cat.elements():
        d = cat.dims[x]
        for p in range(d):
            sp, tp = cat.bnds[x][p]
            if cat.dims[sp] > p or cat.dims[tp] > p:
                bad.append("boundary of %s at level %d has too high dimension" % (x, p))
            for q in range(p):
                if cat.bnds[sp][q] != cat.bnds[x][q] or cat.bnds[tp][q] != cat.bnds[x][q]:
                    bad.append("non-globular boundaries on element %s" % x)
    # composition tables
    for (x, p, y), z in cat.comp.items():
        if cat.target(x, p) != cat.source(y, p):
            bad.append("stored composite (%s,%d,%s) is not composable" % (x, p, y))
            continue
        if cat.dims[z] != max(cat.dims[x], cat.dims[y]):
            bad.append("composite (%s,%d,%s) has wrong dimension" % (x, p, y))
        for q in range(cat.dims[z]):
            if q < p:
                want = (cat.source(x, q), cat.target(x, q))
            elif q == p:
                want = (cat.source(x, p), cat.target(y, p))
            else:
                try:
                    want = (
                        cat.compose(cat.source(x, q), p, cat.source(y, q)),
                        cat.compose(cat.target(x, q), p, cat.target(y, q)),
                    )
                except CompositionError:
                    bad.append("boundary composite missing for (%s,%d,%s)" % (x, p, y))
                    continue
            if cat.bnds[z][q] != want:
                bad.append(
                    "boundary law fails at level %d for composite (%s,%d,%s)" % (q, x, p, y)
                )
    # associativity on all recorded triples, via a left-factor index
    left_at = {}
    for (x, p, y), z in cat.comp.items():
        left_at.setdefault((x, p), []).append((y, z))
    budget = interchange_budget
    for (x, p, y), xy in cat.comp.items():
        for w, yw in left_at.get((y, p), ()):
            if cat.comp.get((xy, p, w)) != cat.comp.get((x, p, yw)):
                bad.append("associativity fails at level %d on (%s,%s,%s)" % (p, x, y, w))
            budget -= 1
            if budget <= 0:
                break
        if budget <= 0:
            break
    # interchange: (x *_p y) *_q (z *_p w) = (x *_q z) *_p (y *_q w), q < p
    by_level = {}
    for (x, p, y), z in cat.comp.items():
        by_level.setdefault(p, []).append((x, y, z))
    budget = interchange_budget
    for p, upper in sorted(by_level.items()):
        for q, lower in sorted(by_level.items()):
            if q >= p:
                continue
            by_source = {}
            for z, w, zw in lower:
                by_source.setdefault(cat.source(z, q), []).append((z, w, zw))
            for x, y, xy in upper:
                for z, w, zw in by_source.get(cat.target(x, q), ()):
                    budget -= 1
                    if budget <= 0:
                        return bad
                    if cat.target(y, q) != cat.source(w, q):
                        continue
                    try:
                        a = cat.compose(cat.compose(x, q, z), p, cat.compose(y, q, w))
                        b = cat.compose(xy, q, zw)
                    except CompositionError:
                        bad.append(
                            "interchange composites missing at levels %d,%d" % (p, q)
                        )
                        continue
                    if a != b:
                        bad.append(
                            "interchange fails at levels %d,%d on (%s,%s,%s,%s)"
                            % (p, q, x, y, z, w)
                        )
    return bad


# ---------------------------------------------------------------------------
# derived categories: paths, bilocalization, loops
# ---------------------------------------------------------------------------


class MappedCat(FiniteOmegaCat):
    """A category whose elements are re-indexed from a parent category."""

    def __init__(self, name, parent, kept, shift):
        # kept: sorted list of parent element ids; shift: levels dropped
        FiniteOmegaCat.__init__(self, name, parent.universe)
        self.parent = parent
        self.kept = list(kept)
        self.shift = shift
        back = {x: i for i, x in enumerate(self.kept)}
        self.back = back
        for x in self.kept:
            self.keys.append(parent.keys[x])
            self.dims.append(parent.dims[x] - shift)
            self.bnds.append(
                tuple(
                    (back[s], back[t])
                    for (s, t) in parent.bnds[x][shift:]
                )
            )
            self.derivations.append(None)
        self.by_key = {parent.keys[x]: back[x] for x in self.kept}
        for (x, p, y), z in parent.comp.items():
            if p >= shift and x in back and y in back and z in back:
                self.comp[(back[x], p - shift, back[y])] = back[z]
        self.generators = [
            (lbl, back[x]) for (lbl, x) in parent.generators if x in back
        ]
        self.gen_face = [
            parent.gen_face[i]
            for i, (_lbl, x) in enumerate(parent.generators)
            if x in back
        ]

    def label(self, x):
        return self.parent.label(self.kept[x])

    def expression(self, x):
        return self.parent.expression(self.kept[x])


def path_category(cat):
    """Shift all levels down one: n-morphisms become (n-1)-morphisms.

    Only defined for non-contracting categories; 0-cells are dropped.
    The result is cached on the instance so that every consumer shares
    one element indexing.
    """
    got = getattr(cat, "_path_cat", None)
    if got is None:
        if not cat.noncontracting():
            raise CategoryError("%s is contracting; it has no path category" % cat.name)
        kept = [x for x in cat.elements() if cat.dims[x] >= 1]
        got = MappedCat("paths(%s)" % cat.name, cat, kept, 1)
        cat._path_cat = got
    return got


def bilocalize(cat, a, b):
    """Sub-category of the morphisms running from state a to state b."""
    assert cat.dims[a] == 0 and cat.dims[b] == 0
    kept = sorted(
        {a, b}
        | {
            x
            for x in cat.elements()
            if cat.dims[x] >= 1 and cat.source(x, 0) == a and cat.target(x, 0) == b
        }
    )
    sub = MappedCat("%s[%s,%s]" % (cat.name, a, b), cat, kept, 0)
    return sub


def loop_category(cat):
    """Paths of the bilocalization at the unique initial and final states."""
    inits = cat.initial_states()
    finals = cat.final_states()
    if len(inits) != 1 or len(finals) != 1:
        raise CategoryError(
            "%s needs exactly one initial and one final state (found %d and %d)"
            % (cat.name, len(inits), len(finals))
        )
    return path_category(bilocalize(cat, inits[0], finals[0]))


# ---------------------------------------------------------------------------
# isomorphism testing
# ---------------------------------------------------------------------------


def _structural_colors(cat):
    """Iterated boundary signatures, comparable across categories."""
    colors = [cat.dims[x] for x in cat.elements()]
    # composition degrees refine the signature beyond pure boundary data
    out_deg = {x: 0 for x in cat.elements()}
    in_deg = {x: 0 for x in cat.elements()}
    for (x, p, y) in cat.comp:
        out_deg[x] += 1
        in_deg[y] += 1
    colors = [
        (cat.dims[x], out_deg[x], in_deg[x]) for x in cat.elements()
    ]
    for _ in range(cat.maxdim + 2):
        colors = [
            (
                colors[x],
                tuple((colors[s], colors[t]) for (s, t) in cat.bnds[x]),
            )
            for x in cat.elements()
        ]
    return colors


def iso_check(a, b):
    """Exact isomorphism test; returns a mapping list or None.

    Searches dimension-preserving bijections compatible with all
    boundaries, then verifies the composition tables in full.
    """
    if len(a) != len(b):
        return None
    ca = _structural_colors(a)
    cb = _structural_colors(b)
    if sorted(map(repr, ca)) != sorted(map(repr, cb)):
        return None

    by_color_b = {}
    for y in b.elements():
        by_color_b.setdefault(repr(cb[y]), []).append(y)

    order = sorted(a.elements(), key=lambda x: (a.dims[x], x))

    def candidates(x):
        return by_color_b.get(repr(ca[x]), ())

    assign = {}
    used = set()

    def extend(i):
        if i == len(order):
            return True
        x = order[i]
        for y in candidates(x):
            if y in used:
                continue
            ok = True
            for p in range(a.dims[x]):
                sx, tx = a.bnds[x][p]
                # boundaries are lower-dimensional, hence already assigned
                if b.bnds[y][p] != (assign[sx], assign[tx]):
                    ok = False
                    break
            if not ok:
                continue
            assign[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del assign[x]
            used.discard(y)
        return False

    if not extend(0):
        return None
    # full verification of the composition tables both ways
    fwd = [assign[x] for x in range(len(a.keys))]
    image_comp = {(fwd[x], p, fwd[y]): fwd[z] for (x, p, y), z in a.comp.items()}
    if image_comp != b.comp:
        return None
    return fwd
