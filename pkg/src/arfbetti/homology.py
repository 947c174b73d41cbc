"""Exact reduced simplicial homology over Q or GF(p).

Boundary matrices follow the augmented chain complex: the matrix at level
d has columns indexed by d-faces and rows by (d-1)-faces, with the usual
alternating signs on sorted vertices. Level 0 is the augmentation (one
empty-face row of +1 entries). Ranks are exact: fraction-free integer
elimination over Q, modular elimination over GF(p); both use the first
nonzero pivot in column order so intermediate states are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidEntryError
from .divisor_complex import SimplicialComplex

# int64 elimination bails to exact big integers past this magnitude
_OVERFLOW_GUARD = 1 << 30
# numpy modular elimination is safe while (p-1)^2 fits comfortably in int64
_NUMPY_PRIME_LIMIT = 1 << 31


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for anything this package meets."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (characteristic 0) or a prime field GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            return
        if c < 2 or not _is_prime(c):
            raise InvalidEntryError(f"characteristic {c} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime_field(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse "q" (rationals) or "gf:p" (prime field)."""
        t = text.strip().lower()
        if t == "q":
            return cls(0)
        if t.startswith("gf:"):
            try:
                p = int(t[3:])
            except ValueError:
                raise InvalidEntryError(f"cannot parse field {text!r}") from None
            if p == 0:
                raise InvalidEntryError("characteristic 0 is spelled q")
            return cls(p)
        raise InvalidEntryError(f"cannot parse field {text!r}; use q or gf:p")

    @property
    def label(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __str__(self) -> str:
        return self.label


RATIONALS = FieldSpec(0)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed incidence matrix of the boundary map at level d.

    rows and cols hold the face bitmasks in the faces_of_dim order;
    entries has shape (len(rows), len(cols)) with values in {-1, 0, 1}.
    """

    d: int
    rows: tuple
    cols: tuple
    entries: np.ndarray

    def shape(self):
        return self.entries.shape

    def is_empty(self) -> bool:
        return self.entries.size == 0


def _faces_or_empty(C: SimplicialComplex, d: int):
    if d < -1 or d > C.vertex_count - 1:
        return []
    return C.faces_of_dim(d)


def boundary_matrix(C: SimplicialComplex, d: int) -> BoundaryMatrix:
    """Boundary map from d-faces to (d-1)-faces of the augmented complex."""
    if d < 0:
        raise InvalidEntryError("boundary level must be >= 0")
    rows = tuple(_faces_or_empty(C, d - 1))
    cols = tuple(_faces_or_empty(C, d))
    idx = {m: i for i, m in enumerate(rows)}
    A = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for ci, mask in enumerate(cols):
        sign = 1
        rem = mask
        while rem:
            low = rem & -rem
            A[idx[mask ^ low], ci] = sign
            sign = -sign
            rem ^= low
    return BoundaryMatrix(d, rows, cols, A)


def _rank_bigint(rows) -> int:
    """Fraction-free elimination on Python ints; exact for any input."""
    import math

    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, nr):
            cv = rows[r][col]
            if cv:
                pr = rows[rank]
                rw = rows[r]
                for i in range(nc):
                    rw[i] = pv * rw[i] - cv * pr[i]
                g = 0
                for x in rw:
                    g = math.gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    for i in range(nc):
                        rw[i] //= g
        rank += 1
        if rank == nr:
            break
    return rank


def _rank_rational(A: np.ndarray) -> int:
    """Rank over Q by fraction-free integer elimination.

    Runs vectorized on int64 with per-row gcd stripping; if entries risk
    leaving the safe range it redoes the whole matrix on Python ints.
    """
    if A.size == 0:
        return 0
    M = A.astype(np.int64, copy=True)
    nr, nc = M.shape
    rank = 0
    for col in range(nc):
        colvals = M[rank:, col]
        nz = np.nonzero(colvals)[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        pv = M[rank, col]
        if np.abs(M[rank:]).max(initial=0) > _OVERFLOW_GUARD:
            return _rank_bigint(A.tolist())
        below = M[rank + 1 :]
        if below.size:
            cv = below[:, col].copy()
            hit = cv != 0
            if hit.any():
                below[hit] = pv * below[hit] - np.outer(cv[hit], M[rank])
                g = np.gcd.reduce(np.abs(below[hit]), axis=1)
                g[g == 0] = 1
                below[hit] //= g[:, None]
        rank += 1
        if rank == nr:
            break
    return rank


def _rank_prime_python(rows, p: int) -> int:
    rows = [[x % p for x in r] for r in rows]
    if not rows or not rows[0]:
        return 0
    nr, nc = len(rows), len(rows[0])
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(rank + 1, nr):
            cv = rows[r][col]
            if cv:
                pr = rows[rank]
                rows[r] = [(a - cv * b) % p for a, b in zip(rows[r], pr)]
        rank += 1
        if rank == nr:
            break
    return rank


def _rank_prime(A: np.ndarray, p: int) -> int:
    """Rank over GF(p) by modular elimination."""
    if A.size == 0:
        return 0
    if p >= _NUMPY_PRIME_LIMIT:
        return _rank_prime_python(A.tolist(), p)
    M = np.mod(A.astype(np.int64, copy=True), p)
    nr, nc = M.shape
    rank = 0
    for col in range(nc):
        colvals = M[rank:, col]
        nz = np.nonzero(colvals)[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            M[[rank, piv]] = M[[piv, rank]]
        inv = pow(int(M[rank, col]), p - 2, p)
        M[rank] = M[rank] * inv % p
        below = M[rank + 1 :]
        if below.size:
            cv = below[:, col].copy()
            hit = cv != 0
            if hit.any():
                below[hit] = (below[hit] - np.outer(cv[hit], M[rank])) % p
        rank += 1
        if rank == nr:
            break
    return rank


def rank_array(A: np.ndarray, field: FieldSpec) -> int:
    """Exact rank of an integer matrix over the given field."""
    if field.characteristic == 0:
        return _rank_rational(A)
    return _rank_prime(A, field.characteristic)


def rank(M: BoundaryMatrix, field: FieldSpec = RATIONALS) -> int:
    return rank_array(M.entries, field)


def reduced_homology_dims(C: SimplicialComplex, field: FieldSpec = RATIONALS):
    """Reduced homology dimensions {d: dim} for d in [-1, dim C].

    Void complex gives {}; the empty-face-only complex gives {-1: 1}.
    """
    if C.is_void:
        return {}
    top = C.dim
    fcount = {d: len(C.faces_of_dim(d)) for d in range(-1, top + 1)}
    ranks = {}
    for d in range(0, top + 2):
        ranks[d] = rank(boundary_matrix(C, d), field)
    out = {}
    for d in range(-1, top + 1):
        out[d] = fcount[d] - ranks.get(d, 0) - ranks.get(d + 1, 0)
    return out
