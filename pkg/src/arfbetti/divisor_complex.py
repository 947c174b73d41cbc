"""Squarefree divisor complexes of a numerical semigroup.

For a degree s, the complex Delta_s lives on vertices {1, ..., k} indexed
by the minimal generators n_1 < ... < n_k; a subset F is a face iff
s - sum of the generators in F stays inside S. Downward closure follows
from S being closed under addition, and is asserted anyway.
"""

from __future__ import annotations

from .errors import BettiScaleError, InvalidEntryError
from .semigroup_core import NumericalSemigroup

# materializing a complex costs up to 2^k face checks
MAX_VERTICES = 24


def _mask_vertices(mask: int):
    """Sorted 1-indexed vertex tuple for a face bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class SimplicialComplex:
    """Immutable simplicial complex with bitmask faces on k vertices.

    faces is a frozenset of bitmasks (bit j-1 for vertex j). The empty
    face (mask 0) is present whenever the complex is nonvoid; an empty
    faces set marks the void complex, whose homology vanishes everywhere.
    """

    __slots__ = ("vertex_count", "faces")

    def __init__(self, vertex_count: int, faces, check: bool = True):
        self.vertex_count = vertex_count
        self.faces = frozenset(faces)
        if check:
            self._validate()

    def _validate(self):
        k = self.vertex_count
        if k < 0:
            raise InvalidEntryError("vertex count must be >= 0")
        for f in self.faces:
            if f < 0 or f >> k:
                raise InvalidEntryError(f"face {f:b} leaves the vertex range")
            # removing one vertex at a time witnesses downward closure
            rem = f
            while rem:
                low = rem & -rem
                if (f ^ low) not in self.faces:
                    raise InvalidEntryError(
                        f"not downward closed at face {_mask_vertices(f)}"
                    )
                rem ^= low

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self):
        """Dimension, or None for the void complex; {empty face} has dim -1."""
        if not self.faces:
            return None
        return max(f.bit_count() for f in self.faces) - 1

    def face_count(self) -> int:
        return len(self.faces)

    def contains_face(self, vertices) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << (v - 1)
        return mask in self.faces

    def faces_of_dim(self, d: int):
        """Faces of dimension d (cardinality d + 1) as bitmasks.

        Ordered lexicographically by sorted vertex list; this ordering is
        the column/row contract for boundary matrices.
        """
        if d < -1 or d > self.vertex_count - 1:
            raise InvalidEntryError(f"dimension {d} out of range")
        size = d + 1
        sel = [f for f in self.faces if f.bit_count() == size]
        sel.sort(key=_mask_vertices)
        return sel

    def faces_as_vertex_tuples(self):
        """All faces as sorted vertex tuples, ordered by (size, lex)."""
        out = [_mask_vertices(f) for f in self.faces]
        out.sort(key=lambda t: (len(t), t))
        return out

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.faces == other.faces

    def __hash__(self):
        return hash((self.vertex_count, self.faces))

    def __repr__(self):
        if self.is_void:
            return f"SimplicialComplex(k={self.vertex_count}, void)"
        return f"SimplicialComplex(k={self.vertex_count}, {len(self.faces)} faces)"


def squarefree_divisor_complex(S: NumericalSemigroup, s: int) -> SimplicialComplex:
    """Delta_s of S on the minimal generators; void when s is not in S."""
    if s < 0:
        raise InvalidEntryError("degree must be >= 0")
    k = S.embedding_dimension
    if k > MAX_VERTICES:
        raise BettiScaleError(
            f"complex on {k} vertices exceeds the materialization guard"
        )
    if not S.contains(s):
        return SimplicialComplex(k, frozenset(), check=False)
    gens = S.min_generators
    faces = []

    # depth-first with the downward-closure prune; equivalent to filtering
    # all 2^k subsets because every prefix of a face is a face
    def grow(start, mask, total):
        faces.append(mask)
        for j in range(start, k):
            nt = total + gens[j]
            if nt <= s and S.contains(s - nt):
                grow(j + 1, mask | (1 << j), nt)

    grow(0, 0, 0)
    return SimplicialComplex(k, faces)
