"""Exact integer homology: Smith normal form and presented chain complexes.

All computations are over the integers, with no floating point anywhere.
The Smith reduction keeps unimodular certificates (U, V and their
inverses) so that linear systems can be solved exactly and the
factorization can be re-checked by plain matrix multiplication.

Chain complexes are "presented": each degree has a list of generator
labels, an optional list of relation vectors (the degree is the free
module modulo the span of those vectors), and a differential given by
columns.  Homology of such a presentation is computed by exact lattice
arithmetic: cycles are pulled back through the relation span, boundaries
include the relation vectors, and the quotient is read off a Smith form.
"""

from __future__ import annotations

from math import gcd


class HomologyError(Exception):
    pass


class ComplexInvariantError(HomologyError):
    """A differential or relation failed the chain-complex laws."""


# ---------------------------------------------------------------------------
# sparse integer matrices
# ---------------------------------------------------------------------------


class SparseMatrix:
    """An m x n integer matrix stored as synchronized row and column dicts."""

    def __init__(self, m, n):
        self.m = m
        self.n = n
        self.rows = [dict() for _ in range(m)]
        self.cols = [dict() for _ in range(n)]

    @classmethod
    def from_dense(cls, rows):
        m = len(rows)
        n = len(rows[0]) if m else 0
        mat = cls(m, n)
        for i, row in enumerate(rows):
            assert len(row) == n, "ragged dense matrix"
            for j, v in enumerate(row):
                if v:
                    mat.set(i, j, v)
        return mat

    @classmethod
    def from_columns(cls, m, columns):
        """columns: list of dicts (or lists) giving each column's entries."""
        mat = cls(m, len(columns))
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                if v:
                    mat.set(i, j, v)
        return mat

    def copy(self):
        out = SparseMatrix(self.m, self.n)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.set(i, j, v)
        return out

    def set(self, i, j, v):
        if v:
            self.rows[i][j] = v
            self.cols[j][i] = v
        else:
            self.rows[i].pop(j, None)
            self.cols[j].pop(i, None)

    def get(self, i, j):
        return self.rows[i].get(j, 0)

    def to_dense(self):
        return [[self.rows[i].get(j, 0) for j in range(self.n)] for i in range(self.m)]

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def column_vector(self, j):
        return dict(self.cols[j])

    def is_zero(self):
        return all(not r for r in self.rows)


def mat_mul_dense(a, b):
    """Plain dense integer matrix product (used by tests and certificates)."""
    if not a:
        return []
    m, k = len(a), len(a[0])
    assert k == len(b), "shape mismatch"
    n = len(b[0]) if b else 0
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        ai = a[i]
        for t in range(k):
            v = ai[t]
            if v:
                bt = b[t]
                row = out[i]
                for j in range(n):
                    if bt[j]:
                        row[j] += v * bt[j]
    return out


def identity_dense(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


class SmithForm:
    """Result of a Smith reduction.

    ``diag`` holds the nonzero invariant factors d_1 | d_2 | ... | d_r,
    all positive.  When certificates were requested, U (m x m) and V
    (n x n) are unimodular with U * M * V = diag embedded in an m x n
    matrix, and Uinv/Vinv are their exact inverses.
    """

    def __init__(self, m, n, diag, U=None, V=None, Uinv=None, Vinv=None):
        self.m = m
        self.n = n
        self.diag = diag
        self.rank = len(diag)
        self.U = U
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv

    @property
    def torsion(self):
        return [d for d in self.diag if d > 1]

    def smith_dense(self):
        out = [[0] * self.n for _ in range(self.m)]
        for i, d in enumerate(self.diag):
            out[i][i] = d
        return out


class _Reducer:
    """In-place Smith elimination on a SparseMatrix with optional certificates."""

    def __init__(self, mat, certificates):
        self.a = mat
        if certificates:
            self.U = identity_dense(mat.m)
            self.Uinv = identity_dense(mat.m)
            self.V = identity_dense(mat.n)
            self.Vinv = identity_dense(mat.n)
        else:
            self.U = self.Uinv = self.V = self.Vinv = None

    # -- elementary operations (each mirrored on the certificates) ---------

    def row_add(self, i, k, q):
        """row i += q * row k;  U likewise, Uinv gets the inverse column op."""
        a = self.a
        for j, v in list(a.rows[k].items()):
            a.set(i, j, a.get(i, j) + q * v)
        if self.U is not None:
            Ui, Uk = self.U[i], self.U[k]
            for j in range(a.m):
                Ui[j] += q * Uk[j]
            for row in self.Uinv:
                row[k] -= q * row[i]

    def col_add(self, j, k, q):
        """col j += q * col k."""
        a = self.a
        for i, v in list(a.cols[k].items()):
            a.set(i, j, a.get(i, j) + q * v)
        if self.V is not None:
            for row in self.V:
                row[j] += q * row[k]
            Vk, Vj = self.Vinv[k], self.Vinv[j]
            for t in range(a.n):
                Vk[t] -= q * Vj[t]

    def row_swap(self, i, k):
        if i == k:
            return
        a = self.a
        ri, rk = dict(a.rows[i]), dict(a.rows[k])
        for j in set(ri) | set(rk):
            a.set(i, j, rk.get(j, 0))
            a.set(k, j, ri.get(j, 0))
        if self.U is not None:
            self.U[i], self.U[k] = self.U[k], self.U[i]
            for row in self.Uinv:
                row[i], row[k] = row[k], row[i]

    def col_swap(self, j, k):
        if j == k:
            return
        a = self.a
        cj, ck = dict(a.cols[j]), dict(a.cols[k])
        for i in set(cj) | set(ck):
            a.set(i, j, ck.get(i, 0))
            a.set(i, k, cj.get(i, 0))
        if self.V is not None:
            for row in self.V:
                row[j], row[k] = row[k], row[j]
            self.Vinv[j], self.Vinv[k] = self.Vinv[k], self.Vinv[j]

    def row_negate(self, i):
        a = self.a
        for j, v in list(a.rows[i].items()):
            a.set(i, j, -v)
        if self.U is not None:
            self.U[i] = [-v for v in self.U[i]]
            for row in self.Uinv:
                row[i] = -row[i]

    # -- pivoting -----------------------------------------------------------

    def _find_pivot(self, t):
        """Smallest-magnitude entry in the trailing submatrix, 1s first."""
        a = self.a
        best = None
        for i in range(t, a.m):
            for j, v in a.rows[i].items():
                if j < t:
                    continue
                av = abs(v)
                if av == 1:
                    return i, j
                if best is None or av < best[0]:
                    best = (av, i, j)
        if best is None:
            return None
        return best[1], best[2]

    def reduce(self):
        a = self.a
        t = 0
        limit = min(a.m, a.n)
        while t < limit:
            piv = self._find_pivot(t)
            if piv is None:
                break
            self.row_swap(piv[0], t)
            self.col_swap(piv[1], t)
            while True:
                if a.get(t, t) < 0:
                    self.row_negate(t)
                d = a.get(t, t)
                assert d > 0
                # clear column t with row operations
                again = False
                for i in list(a.cols[t]):
                    if i == t:
                        continue
                    q = a.get(i, t) // d
                    if q:
                        self.row_add(i, t, -q)
                    if a.get(i, t):
                        # nonzero remainder strictly smaller than the pivot
                        self.row_swap(i, t)
                        again = True
                        break
                if again:
                    continue
                # clear row t with column operations
                for j in list(a.rows[t]):
                    if j == t:
                        continue
                    q = a.get(t, j) // d
                    if q:
                        self.col_add(j, t, -q)
                    if a.get(t, j):
                        self.col_swap(j, t)
                        again = True
                        break
                if again:
                    continue
                if len(a.cols[t]) == 1 and len(a.rows[t]) == 1:
                    break
            t += 1
        # diagonal is now nonzero exactly on 0..t-1; enforce divisibility
        changed = True
        while changed:
            changed = False
            for i in range(t - 1):
                x, y = a.get(i, i), a.get(i + 1, i + 1)
                if y % x:
                    # fold the next diagonal entry into column i and re-eliminate
                    self.col_add(i, i + 1, 1)
                    g = gcd(x, y)
                    # row i gets (x, 0); row i+1 holds (y, y): standard 2x2 dance
                    self._two_by_two(i, g)
                    changed = True
        diag = [a.get(i, i) for i in range(t)]
        assert all(d > 0 for d in diag)
        for x, y in zip(diag, diag[1:]):
            assert y % x == 0
        return diag

    def _two_by_two(self, i, g):
        """Redo elimination on the 2x2 block at (i, i) until diagonal again."""
        a = self.a
        while True:
            # find smallest entry in the block
            entries = []
            for r in (i, i + 1):
                for c in (i, i + 1):
                    v = a.get(r, c)
                    if v:
                        entries.append((abs(v), r, c))
            entries.sort()
            _, r, c = entries[0]
            self.row_swap(r, i)
            self.col_swap(c, i)
            if a.get(i, i) < 0:
                self.row_negate(i)
            d = a.get(i, i)
            q = a.get(i + 1, i) // d
            if q:
                self.row_add(i + 1, i, -q)
            if a.get(i + 1, i):
                continue
            q = a.get(i, i + 1) // d
            if q:
                self.col_add(i + 1, i, -q)
            if a.get(i, i + 1):
                continue
            if a.get(i + 1, i + 1) < 0:
                self.row_negate(i + 1)
            if a.get(i + 1, i + 1) % d == 0:
                return


def smith(mat, certificates=True):
    """Smith normal form of a SparseMatrix (or dense list of rows)."""
    if isinstance(mat, list):
        mat = SparseMatrix.from_dense(mat)
    work = mat.copy()
    red = _Reducer(work, certificates)
    diag = red.reduce()
    return SmithForm(mat.m, mat.n, diag, red.U, red.V, red.Uinv, red.Vinv)


def rank_of(mat):
    return smith(mat, certificates=False).rank


def invariant_factors(mat):
    return smith(mat, certificates=False).diag


# ---------------------------------------------------------------------------
# exact linear solving over Z
# ---------------------------------------------------------------------------


def solve(mat, b, sf=None):
    """One integer solution x of mat * x = b, or None.

    ``b`` is a length-m list (or sparse dict).  A precomputed certified
    SmithForm of ``mat`` may be passed to amortize repeated solves.
    """
    if isinstance(mat, list):
        mat = SparseMatrix.from_dense(mat)
    if sf is None:
        sf = smith(mat, certificates=True)
    if isinstance(b, dict):
        bv = [0] * mat.m
        for i, v in b.items():
            bv[i] = v
    else:
        bv = list(b)
        assert len(bv) == mat.m
    # c = U b
    c = [sum(sf.U[i][k] * bv[k] for k in range(mat.m) if bv[k]) for i in range(mat.m)]
    y = [0] * mat.n
    for i in range(mat.m):
        if i < sf.rank:
            d = sf.diag[i]
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    # x = V y
    x = [0] * mat.n
    for j in range(mat.n):
        row = sf.V[j]
        x[j] = sum(row[k] * y[k] for k in range(mat.n) if y[k])
    return x


def kernel_basis(mat, sf=None):
    """Basis of the integer kernel lattice: trailing columns of V."""
    if isinstance(mat, list):
        mat = SparseMatrix.from_dense(mat)
    if sf is None:
        sf = smith(mat, certificates=True)
    basis = []
    for j in range(sf.rank, mat.n):
        basis.append([sf.V[i][j] for i in range(mat.n)])
    return basis


class SpanTester:
    """Membership oracle for the column span of a fixed matrix."""

    def __init__(self, mat):
        if isinstance(mat, list):
            mat = SparseMatrix.from_dense(mat)
        self.mat = mat
        self.sf = smith(mat, certificates=True)

    def contains(self, vector):
        return solve(self.mat, vector, self.sf) is not None

    def solve(self, vector):
        return solve(self.mat, vector, self.sf)


# ---------------------------------------------------------------------------
# finitely generated abelian groups
# ---------------------------------------------------------------------------


class AbelianGroup:
    """Isomorphism type Z^rank + Z_{t1} + Z_{t2} + ... with t1 | t2 | ..."""

    def __init__(self, rank, torsion=()):
        self.rank = rank
        self.torsion = tuple(torsion)

    def is_zero(self):
        return self.rank == 0 and not self.torsion

    def __eq__(self, other):
        if isinstance(other, AbelianGroup):
            return self.rank == other.rank and self.torsion == other.torsion
        return NotImplemented

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __repr__(self):
        return "AbelianGroup(rank=%d, torsion=%r)" % (self.rank, list(self.torsion))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append("Z^%d" % self.rank)
        parts.extend("Z_%d" % t for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


# ---------------------------------------------------------------------------
# presented chain complexes
# ---------------------------------------------------------------------------


class ChainComplex:
    """A non-negatively graded complex of presented Z-modules.

    degree k data:
      * generators[k]: list of labels (basis of a free module)
      * relations[k]:  list of integer vectors over those generators;
                       the degree-k module is free/(span of relations)
      * differential d_k: generators[k] -> degree k-1, given per generator
        as a sparse column dict {row_index: coefficient}; d_0 = 0.

    ``top`` is the largest degree whose differential INTO it (d_{top+1})
    is known to be complete; homology is only served for k <= top.
    ``top=None`` means the complex is not truncated (every degree valid).
    """

    def __init__(self, name, top=None, meta=None):
        self.name = name
        self.top = top
        self.generators = {}
        self.relations = {}
        self.diff_columns = {}
        self.meta = dict(meta or {})
        self._span_cache = {}
        self._cycle_cache = {}

    # -- construction -------------------------------------------------------

    def set_degree(self, k, labels, diff_columns, relations=()):
        assert k >= 0
        self.generators[k] = list(labels)
        self.diff_columns[k] = [dict(c) for c in diff_columns]
        assert len(self.diff_columns[k]) == len(self.generators[k])
        self.relations[k] = [dict(r) if isinstance(r, dict) else self._vec(k, r) for r in relations]
        if k == 0:
            assert all(not c for c in self.diff_columns[k]), "d_0 must vanish"

    def _vec(self, k, dense):
        return {i: v for i, v in enumerate(dense) if v}

    def n_gens(self, k):
        return len(self.generators.get(k, ()))

    def label(self, k, i):
        return self.generators[k][i]

    # -- matrices -----------------------------------------------------------

    def diff_matrix(self, k):
        """d_k as a SparseMatrix of shape n_gens(k-1) x n_gens(k)."""
        cols = self.diff_columns.get(k, [])
        return SparseMatrix.from_columns(self.n_gens(k - 1), cols)

    def relation_matrix(self, k):
        rels = self.relations.get(k, [])
        return SparseMatrix.from_columns(self.n_gens(k), rels)

    def relation_span(self, k):
        if k not in self._span_cache:
            self._span_cache[k] = SpanTester(self.relation_matrix(k))
        return self._span_cache[k]

    def apply_diff(self, k, vector):
        """Image of a (dense or sparse) degree-k vector under d_k."""
        if isinstance(vector, dict):
            items = vector.items()
        else:
            items = ((i, v) for i, v in enumerate(vector) if v)
        out = [0] * self.n_gens(k - 1)
        cols = self.diff_columns.get(k, [])
        for j, v in items:
            for i, c in cols[j].items():
                out[i] += v * c
        return out

    # -- invariants ----------------------------------------------------------

    def check_complex_laws(self):
        """d(d(x)) and d(relations) must land in the relation span below.

        Raises ComplexInvariantError with the offending generator.
        """
        for k in sorted(self.generators):
            if k == 0:
                continue
            # d_{k-1} after d_k lands in degree k-2 and must be a relation there
            if k >= 2:
                span_two_below = self.relation_span(k - 2)
                for j in range(self.n_gens(k)):
                    v = self.apply_diff(k - 1, self.diff_columns[k][j])
                    if any(v) and not span_two_below.contains(v):
                        raise ComplexInvariantError(
                            "%s: d(d(%s)) is not a relation" % (self.name, self.label(k, j))
                        )
            # differentials must descend to the quotients
            for r in self.relations.get(k, ()):  # vectors at degree k
                v = self.apply_diff(k, r)
                if any(v):
                    if k - 1 < 0 or not self.relation_span(k - 1).contains(v):
                        raise ComplexInvariantError(
                            "%s: differential does not descend at degree %d" % (self.name, k)
                        )
        return True

    # -- homology -------------------------------------------------------------

    def _require_degree(self, k):
        if k < 0 or (self.top is not None and k > self.top):
            raise HomologyError(
                "%s: homology degree %d outside the valid range 0..%s "
                "(raise the truncation level)" % (self.name, k, self.top)
            )

    def cycle_generators(self, k):
        """Vectors spanning {v : d_k v lies in the relation span below}."""
        if k in self._cycle_cache:
            return self._cycle_cache[k]
        g = self.n_gens(k)
        if k == 0:
            gens = [[1 if i == j else 0 for i in range(g)] for j in range(g)]
        else:
            dk = self.diff_matrix(k)
            rel_below = self.relations.get(k - 1, [])
            block = SparseMatrix(dk.m, g + len(rel_below))
            for j in range(g):
                for i, v in dk.cols[j].items():
                    block.set(i, j, v)
            for t, r in enumerate(rel_below):
                for i, v in r.items():
                    block.set(i, g + t, v)
            gens = [vec[:g] for vec in kernel_basis(block)]
            gens = [v for v in gens if any(v)]
        self._cycle_cache[k] = gens
        return gens

    def boundary_columns(self, k):
        """Columns spanning the subgroup of classes that die: im d_{k+1} + relations."""
        cols = [dict(c) for c in self.diff_columns.get(k + 1, [])]
        cols.extend(dict(r) for r in self.relations.get(k, []))
        return cols

    def homology(self, k):
        self._require_degree(k)
        g = self.n_gens(k)
        if g == 0:
            return AbelianGroup(0)
        if not self.relations.get(k - 1) and not self.relations.get(k):
            # free case: standard rank/torsion bookkeeping
            r_in = rank_of(self.diff_matrix(k + 1)) if self.n_gens(k + 1) else 0
            r_out = rank_of(self.diff_matrix(k)) if k >= 1 and self.n_gens(k - 1) else 0
            torsion = [d for d in invariant_factors(self.diff_matrix(k + 1)) if d > 1] if r_in else []
            return AbelianGroup(g - r_in - r_out, torsion)
        zgens = self.cycle_generators(k)
        if not zgens:
            return AbelianGroup(0)
        zmat = SparseMatrix.from_columns(g, zgens)
        zsf = smith(zmat, certificates=True)
        rel_cols = []
        for b in self.boundary_columns(k):
            x = solve(zmat, b, zsf)
            if x is None:
                raise ComplexInvariantError(
                    "%s: boundary at degree %d is not a cycle" % (self.name, k)
                )
            rel_cols.append(x)
        for dep in kernel_basis(zmat, zsf):
            rel_cols.append(dep)
        relmat = SparseMatrix.from_columns(len(zgens), rel_cols)
        sf = smith(relmat, certificates=False)
        return AbelianGroup(len(zgens) - sf.rank, [d for d in sf.diag if d > 1])

    def class_of(self, k, vector):
        """'not_cycle' | 'boundary' | 'nontrivial' for a degree-k chain."""
        self._require_degree(k)
        if isinstance(vector, dict):
            dense = [0] * self.n_gens(k)
            for i, v in vector.items():
                dense[i] = v
            vector = dense
        if k >= 1:
            img = self.apply_diff(k, vector)
            if any(img) and not self.relation_span(k - 1).contains(img):
                return "not_cycle"
        bmat = SparseMatrix.from_columns(self.n_gens(k), self.boundary_columns(k))
        if SpanTester(bmat).contains(vector):
            return "boundary"
        return "nontrivial"


# ---------------------------------------------------------------------------
# chain maps and induced maps on homology
# ---------------------------------------------------------------------------


class ChainMap:
    """A degreewise linear map between two presented complexes."""

    def __init__(self, name, src, dst, columns):
        """columns: dict degree -> list of sparse column dicts (one per src gen)."""
        self.name = name
        self.src = src
        self.dst = dst
        self.columns = {k: [dict(c) for c in cols] for k, cols in columns.items()}

    def apply(self, k, vector):
        if isinstance(vector, dict):
            items = vector.items()
        else:
            items = ((i, v) for i, v in enumerate(vector) if v)
        out = [0] * self.dst.n_gens(k)
        cols = self.columns.get(k, [])
        for j, v in items:
            for i, c in cols[j].items():
                out[i] += v * c
        return out

    def check_chain_map(self, degrees):
        """f d = d f up to relations, and f(relations) stay relations."""
        for k in degrees:
            if k >= 1:
                span = self.dst.relation_span(k - 1) if self.dst.relations.get(k - 1) else None
                for j in range(self.src.n_gens(k)):
                    a = self.apply(k - 1, self.src.apply_diff(k, {j: 1}))
                    b = self.dst.apply_diff(k, self.columns[k][j])
                    diff = [x - y for x, y in zip(a, b)]
                    if any(diff):
                        if span is None or not span.contains(diff):
                            raise ComplexInvariantError(
                                "%s: not a chain map at degree %d, generator %s"
                                % (self.name, k, self.src.label(k, j))
                            )
            for r in self.src.relations.get(k, ()):
                img = self.apply(k, r)
                if any(img) and not self.dst.relation_span(k).contains(img):
                    raise ComplexInvariantError(
                        "%s: image of a relation is not a relation at degree %d"
                        % (self.name, k)
                    )
        return True

    def induced_report(self, k):
        """Exact injectivity/surjectivity of H_k(src) -> H_k(dst)."""
        src, dst = self.src, self.dst
        src._require_degree(k)
        dst._require_degree(k)
        zx = src.cycle_generators(k)
        zy = dst.cycle_generators(k)
        fzx = [self.apply(k, z) for z in zx]
        bdst = dst.boundary_columns(k)
        bdst_mat = SparseMatrix.from_columns(dst.n_gens(k), bdst)
        # surjective: every target cycle generator is f(cycle) + boundary
        surj_mat = SparseMatrix.from_columns(dst.n_gens(k), [self._sparse(v) for v in fzx] + bdst)
        surj_tester = SpanTester(surj_mat)
        surjective = all(surj_tester.contains(z) for z in zy)
        # injective: f(v) a boundary (v a cycle) forces v to be a boundary
        nz = len(zx)
        block = SparseMatrix.from_columns(
            dst.n_gens(k), [self._sparse(v) for v in fzx] + bdst
        )
        bsrc_mat = SparseMatrix.from_columns(src.n_gens(k), src.boundary_columns(k))
        bsrc_tester = SpanTester(bsrc_mat)
        injective = True
        for vec in kernel_basis(block):
            coeffs = vec[:nz]
            v = [0] * src.n_gens(k)
            for t, c in enumerate(coeffs):
                if c:
                    for i, zv in enumerate(zx[t]):
                        v[i] += c * zv
            if any(v) and not bsrc_tester.contains(v):
                injective = False
                break
        return {
            "degree": k,
            "map": self.name,
            "source": str(src.homology(k)),
            "target": str(dst.homology(k)),
            "injective": injective,
            "surjective": surjective,
            "isomorphism": injective and surjective,
        }

    @staticmethod
    def _sparse(dense):
        return {i: v for i, v in enumerate(dense) if v}
