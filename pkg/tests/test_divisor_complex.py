"""Squarefree divisor complexes and the simplicial complex container."""

import pytest

import oracles
from goldens import COMPLEX_345_AT_8
from arfbetti import (
    BettiScaleError,
    InvalidEntryError,
    SimplicialComplex,
    from_generators,
    squarefree_divisor_complex,
)


def test_golden_complex():
    S = from_generators([3, 4, 5])
    C = squarefree_divisor_complex(S, 8)
    assert tuple(C.faces_as_vertex_tuples()) == COMPLEX_345_AT_8
    assert C.vertex_count == 3
    assert C.dim == 1
    assert C.face_count() == 5


def test_void_complex_for_nonmembers():
    S = from_generators([3, 4, 5])
    C = squarefree_divisor_complex(S, 2)
    assert C.is_void
    assert C.dim is None
    assert C.face_count() == 0
    assert C.faces_as_vertex_tuples() == []


def test_degree_zero_is_empty_face_only():
    S = from_generators([3, 4, 5])
    C = squarefree_divisor_complex(S, 0)
    assert not C.is_void
    assert C.dim == -1
    assert C.faces_as_vertex_tuples() == [()]


def test_rejects_negative_degree():
    with pytest.raises(InvalidEntryError):
        squarefree_divisor_complex(from_generators([3, 4, 5]), -1)


def test_guards_vertex_count():
    S = from_generators(range(25, 50))
    assert S.embedding_dimension == 25
    with pytest.raises(BettiScaleError):
        squarefree_divisor_complex(S, 25)


def _verts(mask):
    return tuple(v + 1 for v in range(mask.bit_length()) if (mask >> v) & 1)


def test_faces_of_dim_ordering_is_lex():
    # {1,4} precedes {2,3} in lex order even though its bitmask is larger
    faces = {0}
    for m in (0b0001, 0b0010, 0b0100, 0b1000, 0b1001, 0b0110):
        faces.add(m)
    C = SimplicialComplex(4, frozenset(faces))
    assert [_verts(m) for m in C.faces_of_dim(1)] == [(1, 4), (2, 3)]
    assert [_verts(m) for m in C.faces_of_dim(0)] == [(1,), (2,), (3,), (4,)]
    assert C.faces_of_dim(-1) == [0]


def test_faces_of_dim_range_checks():
    C = SimplicialComplex(2, frozenset({0, 0b01, 0b10}))
    assert C.faces_of_dim(1) == []
    with pytest.raises(InvalidEntryError):
        C.faces_of_dim(-2)
    with pytest.raises(InvalidEntryError):
        C.faces_of_dim(2)


def test_downward_closure_validated():
    with pytest.raises(InvalidEntryError):
        SimplicialComplex(2, frozenset({0, 0b11}))
    with pytest.raises(InvalidEntryError):
        SimplicialComplex(2, frozenset({0b01}))  # missing the empty face
    with pytest.raises(InvalidEntryError):
        SimplicialComplex(1, frozenset({0, 0b10}))  # vertex out of range


def test_contains_face():
    S = from_generators([3, 4, 5])
    C = squarefree_divisor_complex(S, 8)
    assert C.contains_face(())
    assert C.contains_face((1, 3))
    assert C.contains_face((3, 1))
    assert not C.contains_face((1, 2))
    assert not C.contains_face((4,))


def test_equality_and_hash():
    S = from_generators([3, 4, 5])
    a = squarefree_divisor_complex(S, 8)
    b = squarefree_divisor_complex(S, 8)
    c = squarefree_divisor_complex(S, 9)
    assert a == b and hash(a) == hash(b)
    assert a != c


def test_matches_oracle_on_corpus():
    for gs in oracles.all_gapsets(10):
        gens = oracles.gapset_generators(gs)
        mg = oracles.minimal_generators(gens)
        c = oracles.conductor(gens)
        S = from_generators(gens)
        top = S.frobenius() + sum(S.min_generators)
        mem = oracles.sieve(gens, max(top, 1))

        def in_s(x):
            return 0 <= x and (x >= c or mem[x])

        for s in range(0, top + 1, 3):
            want = set(oracles.divisor_complex_faces(mg, s, in_s))
            C = squarefree_divisor_complex(S, s)
            got = {frozenset(f) for f in C.faces_as_vertex_tuples()}
            assert got == want, (gens, s)


def test_full_simplex_far_out():
    S = from_generators([3, 7, 8])
    top = S.frobenius() + sum(S.min_generators)
    C = squarefree_divisor_complex(S, top + 3)
    assert C.face_count() == 2 ** S.embedding_dimension
