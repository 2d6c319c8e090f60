"""Face combinatorics for oriented cubes and simplexes.

A cube face of the n-cube is a word of length n over the alphabet
``- 0 +`` ("-0+" as a Python string).  Its dimension is the number of
``0`` letters.  A simplex face of the n-simplex is a non-empty strictly
increasing tuple of vertex labels drawn from ``0..n``; its dimension is
``len(face) - 1``.

Both kinds of faces generate a closure operator R (take all subfaces)
and carry two "half boundary" operators that pick out the lower faces
lying on the source side and on the target side.  Everything downstream
(free category generation, nerves, boundary formulas) is built on the
three primitives in this module: ``subfaces``, ``source_tops`` and
``target_tops``.
"""

from __future__ import annotations

import itertools

CUBE_LETTERS = "-0+"

# ---------------------------------------------------------------------------
# cube faces ("-0+" words)
# ---------------------------------------------------------------------------


def cube_dim(word):
    """Dimension of a cube face = number of free coordinates."""
    return word.count("0")


def cube_all_faces(n):
    """All 3**n faces of the n-cube, in lexicographic order (- < 0 < +)."""
    return ["".join(w) for w in itertools.product(CUBE_LETTERS, repeat=n)]


def cube_subfaces(word):
    """All faces obtained by fixing some free coordinates (includes word)."""
    slots = [i for i, ch in enumerate(word) if ch == "0"]
    out = []
    for choice in itertools.product(CUBE_LETTERS, repeat=len(slots)):
        w = list(word)
        for i, ch in zip(slots, choice):
            w[i] = ch
        out.append("".join(w))
    return out


def _cube_half_tops(word, first_sign):
    """Replace the i-th zero (1-indexed) by alternating signs.

    ``first_sign=-1`` starts the alternation with "-" (source side),
    ``first_sign=+1`` starts with "+" (target side).
    """
    slots = [i for i, ch in enumerate(word) if ch == "0"]
    out = []
    sign = first_sign
    for i in slots:
        w = list(word)
        w[i] = "-" if sign < 0 else "+"
        out.append("".join(w))
        sign = -sign
    return out


def cube_source_tops(word):
    """Maximal faces of the source boundary: i-th zero -> sign (-1)**(i+1).

    The first free coordinate is sent to "-", the second to "+", and so
    on, alternating.  Returns one word per free coordinate.
    """
    return _cube_half_tops(word, -1)


def cube_target_tops(word):
    """Maximal faces of the target boundary: alternation starts with "+"."""
    return _cube_half_tops(word, +1)


# ---------------------------------------------------------------------------
# simplex faces (strictly increasing vertex tuples)
# ---------------------------------------------------------------------------


def simplex_dim(face):
    return len(face) - 1


def simplex_all_faces(n):
    """All non-empty subsets of {0..n} as sorted tuples, lexicographic."""
    verts = range(n + 1)
    out = []
    for r in range(1, n + 2):
        out.extend(itertools.combinations(verts, r))
    out.sort()
    return out


def simplex_subfaces(face):
    """All non-empty subsequences of ``face`` (includes face itself)."""
    out = []
    for r in range(1, len(face) + 1):
        out.extend(itertools.combinations(face, r))
    return out


def simplex_source_tops(face):
    """Drop one vertex at an even position (0-based): positions 0, 2, ..."""
    if len(face) == 1:
        return []
    return [face[:i] + face[i + 1:] for i in range(0, len(face), 2)]


def simplex_target_tops(face):
    """Drop one vertex at an odd position (0-based): positions 1, 3, ..."""
    if len(face) == 1:
        return []
    return [face[:i] + face[i + 1:] for i in range(1, len(face), 2)]


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def face_to_str(face):
    if isinstance(face, str):
        return face
    return "(" + " ".join(str(v) for v in face) + ")"


def face_from_str(text):
    """Parse "-0+" cube words and "(0 4 5)" simplex tuples."""
    text = text.strip()
    if text.startswith("("):
        if not text.endswith(")"):
            raise ValueError("unterminated simplex face: %r" % text)
        body = text[1:-1].replace(",", " ").split()
        face = tuple(int(v) for v in body)
        if not face or any(a >= b for a, b in zip(face, face[1:])):
            raise ValueError("simplex face must be strictly increasing: %r" % text)
        return face
    if not text or any(ch not in CUBE_LETTERS for ch in text):
        raise ValueError("bad cube face: %r" % text)
    return text


# ---------------------------------------------------------------------------
# face universes: shared machinery for R-closed sets as bitmasks
# ---------------------------------------------------------------------------


class FaceUniverse:
    """An indexed family of faces closed under taking subfaces.

    Exposes bitmask-based R-closure and half-boundary computations so a
    whole R-closed set fits in a single Python int.  Used both for the
    standard cube/simplex universes and for labelled cell universes of
    composite shapes.
    """

    def __init__(self, faces, dims, subface_masks, source_top_lists, target_top_lists):
        self.faces = list(faces)
        self.index = {f: i for i, f in enumerate(self.faces)}
        assert len(self.index) == len(self.faces), "duplicate faces in universe"
        self.dims = list(dims)
        self.rmask = list(subface_masks)  # bit i set => face i's subface closure
        self.source_tops = list(source_top_lists)  # lists of face indexes
        self.target_tops = list(target_top_lists)
        self.top_dim = max(self.dims) if self.dims else 0
        self.bit = [1 << i for i in range(len(self.faces))]

    def __len__(self):
        return len(self.faces)

    def mask_of(self, faces):
        m = 0
        for f in faces:
            m |= self.bit[self.index[f]]
        return m

    def faces_of(self, mask):
        return [self.faces[i] for i in self._bits(mask)]

    @staticmethod
    def _bits(mask):
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def closure(self, mask):
        """R-closure: union of subface closures of every face in the set."""
        out = 0
        for i in self._bits(mask):
            out |= self.rmask[i]
        return out

    def set_dim(self, mask):
        return max(self.dims[i] for i in self._bits(mask))

    def dim_slice(self, mask, d):
        """Sub-mask of the faces of dimension exactly d."""
        out = 0
        for i in self._bits(mask):
            if self.dims[i] == d:
                out |= self.bit[i]
        return out

    def maximal_faces(self, mask):
        """Faces of the set not contained in another face of the set."""
        bits = self._bits(mask)
        out = []
        for i in bits:
            if not any(j != i and (self.rmask[j] >> i) & 1 for j in bits):
                out.append(i)
        return out

    def half_boundary(self, mask, sign):
        """One-level boundary of an R-closed set.

        For a set X of dimension d this removes the dimension-d faces,
        removes the dimension-(d-1) faces that occur as a target top
        (sign < 0, source boundary) or source top (sign > 0, target
        boundary) of a dimension-d face of X, and closes the rest.
        Sets of dimension 0 are returned unchanged.
        """
        d = self.set_dim(mask)
        if d == 0:
            return mask
        keep = self.dim_slice(mask, d - 1)
        for i in self._bits(self.dim_slice(mask, d)):
            tops = self.target_tops[i] if sign < 0 else self.source_tops[i]
            for j in tops:
                keep &= ~self.bit[j]
        return self.closure(keep)

    def boundary_at(self, mask, p, sign):
        """Iterate half_boundary until the set has dimension <= p."""
        while self.set_dim(mask) > p:
            mask = self.half_boundary(mask, sign)
        return mask


def cube_universe(n):
    faces = cube_all_faces(n)
    index = {f: i for i, f in enumerate(faces)}
    dims = [cube_dim(f) for f in faces]
    rmasks, stops, ttops = [], [], []
    for f in faces:
        m = 0
        for g in cube_subfaces(f):
            m |= 1 << index[g]
        rmasks.append(m)
        stops.append([index[g] for g in cube_source_tops(f)])
        ttops.append([index[g] for g in cube_target_tops(f)])
    return FaceUniverse(faces, dims, rmasks, stops, ttops)


def simplex_universe(n):
    faces = simplex_all_faces(n)
    index = {f: i for i, f in enumerate(faces)}
    dims = [simplex_dim(f) for f in faces]
    rmasks, stops, ttops = [], [], []
    for f in faces:
        m = 0
        for g in simplex_subfaces(f):
            m |= 1 << index[g]
        rmasks.append(m)
        stops.append([index[g] for g in simplex_source_tops(f)])
        ttops.append([index[g] for g in simplex_target_tops(f)])
    return FaceUniverse(faces, dims, rmasks, stops, ttops)
