"""Simplicial complexes with exact rational Betti numbers.

Faces are bitmasks over a labeled vertex tuple.  The empty face is
tracked explicitly: a nonvoid complex always contains it, and the
complex whose *only* face is the empty face (dimension -1) is distinct
from the void complex with no faces at all.  Reduced homology follows
the usual conventions: the {empty}-only complex has beta_{-1} = 1,
every nonvoid complex with a vertex has beta_{-1} = 0, and the void
complex has all Betti numbers zero.

Ranks of boundary matrices are computed over the rationals with
fraction-free (Bareiss) integer elimination, so every Betti number is
exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class SimplicialComplex:
    """Explicit face set over a labeled vertex ground set."""

    __slots__ = ("vertices", "faces")

    def __init__(self, vertices: Sequence, face_masks: Iterable[int], validate: bool = True):
        self.vertices = tuple(vertices)
        self.faces = frozenset(face_masks)
        if validate:
            self._check_closure()

    def _check_closure(self) -> None:
        limit = 1 << len(self.vertices)
        for f in self.faces:
            if not 0 <= f < limit:
                raise ValueError(f"face mask {f} out of range for {len(self.vertices)} vertices")
            g = f
            while g:
                bit = g & -g
                if f ^ bit not in self.faces:
                    raise ValueError(
                        f"not downward closed: face {self._tuple(f)} present "
                        f"but {self._tuple(f ^ bit)} missing"
                    )
                g ^= bit

    @classmethod
    def void(cls, vertices: Sequence = ()) -> "SimplicialComplex":
        return cls(vertices, [])

    @classmethod
    def empty_face_only(cls, vertices: Sequence = ()) -> "SimplicialComplex":
        return cls(vertices, [0])

    def _tuple(self, mask: int) -> tuple:
        return tuple(self.vertices[i] for i in range(len(self.vertices)) if mask >> i & 1)

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int | None:
        """Max face size - 1; -1 for the {empty}-only complex, None if void."""
        if not self.faces:
            return None
        return max(f.bit_count() for f in self.faces) - 1

    def faces_of_size(self, k: int) -> list[int]:
        return sorted((f for f in self.faces if f.bit_count() == k), key=self._tuple)

    def face_labels(self) -> set[frozenset]:
        """All faces as frozensets of vertex labels (for cross-complex comparison)."""
        return {frozenset(self._tuple(f)) for f in self.faces}

    def f_vector(self) -> dict[int, int]:
        """Face counts by dimension, including the empty face at -1."""
        out: dict[int, int] = {}
        for f in self.faces:
            j = f.bit_count() - 1
            out[j] = out.get(j, 0) + 1
        return out

    def reduced_euler(self) -> int:
        """Sum of (-1)^dim over all faces, the empty face contributing -1."""
        return sum((-1) ** (f.bit_count() - 1) for f in self.faces)

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Apply a permutation of vertex positions (perm[i] = new position of i)."""
        k = len(self.vertices)
        verts = [None] * k
        for i, lab in enumerate(self.vertices):
            verts[perm[i]] = lab
        faces = []
        for f in self.faces:
            g = 0
            for i in range(k):
                if f >> i & 1:
                    g |= 1 << perm[i]
            faces.append(g)
        return SimplicialComplex(verts, faces, validate=False)

    def __eq__(self, other) -> bool:
        if isinstance(other, SimplicialComplex):
            return self.face_labels() == other.face_labels()
        return NotImplemented

    def __repr__(self) -> str:
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.faces)} faces, dim={self.dim})"


class BettiVector:
    """Reduced Betti numbers beta_j for -1 <= j <= dim."""

    __slots__ = ("_b",)

    def __init__(self, values: dict[int, int]):
        self._b = {j: v for j, v in values.items() if v}

    def __getitem__(self, j: int) -> int:
        return self._b.get(j, 0)

    def items(self):
        return sorted(self._b.items())

    def reduced_euler(self) -> int:
        return sum((-1) ** j * v for j, v in self._b.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, BettiVector):
            return self._b == other._b
        return NotImplemented

    def __repr__(self) -> str:
        return f"BettiVector({dict(self.items())})"


def rank_bareiss(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    Bareiss pivoting keeps every intermediate entry an exact minor of the
    input, so the computation is over the rationals with no rounding.
    """
    mat = [row[:] for row in rows]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    r = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(r, nr) if mat[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            mat[r], mat[piv] = mat[piv], mat[r]
        mrc = mat[r][c]
        for i in range(r + 1, nr):
            mic = mat[i][c]
            row_i = mat[i]
            row_r = mat[r]
            for j in range(c + 1, nc):
                row_i[j] = (row_i[j] * mrc - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = mrc
        r += 1
        if r == nr:
            break
    return r


def boundary_matrix(complex_: SimplicialComplex, k: int) -> list[list[int]]:
    """Matrix of the boundary map from k-element faces to (k-1)-element faces.

    Faces are indexed in lexicographic vertex order; the sign of removing
    the i-th smallest vertex of a face is (-1)^i.  k = 1 gives the
    augmentation map onto the empty face.
    """
    top = complex_.faces_of_size(k)
    bottom = complex_.faces_of_size(k - 1)
    index = {f: i for i, f in enumerate(bottom)}
    rows = [[0] * len(top) for _ in bottom]
    for j, f in enumerate(top):
        sign = 1
        g = f
        while g:
            bit = g & -g
            rows[index[f ^ bit]][j] = sign
            sign = -sign
            g ^= bit
    return rows


def betti_numbers(complex_: SimplicialComplex) -> BettiVector:
    """Exact reduced Betti numbers via boundary-matrix ranks over Q."""
    if complex_.is_void:
        return BettiVector({})
    g = complex_.dim
    counts = [len(complex_.faces_of_size(k)) for k in range(g + 2)]
    ranks = [0] * (g + 3)
    for k in range(1, g + 2):
        mat = boundary_matrix(complex_, k)
        ranks[k] = rank_bareiss(mat) if mat and mat[0] else 0
    values = {}
    for j in range(-1, g + 1):
        values[j] = counts[j + 1] - ranks[j + 1] - ranks[j + 2]
    return BettiVector(values)
