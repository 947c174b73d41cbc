"""Frozen expected values.

Every number here was computed by the independent brute-force oracles in
oracles.py before the package existed, then frozen. Tests compare the
package against these constants; nothing below is derived from package
output.
"""

# invariants of small semigroups
INVARIANTS = {
    (3, 7, 8): {
        "conductor": 6,
        "frobenius": 5,
        "gaps": (1, 2, 4, 5),
        "multiplicity": 3,
        "embedding_dimension": 3,
        "min_mod_multiplicity": (0, 7, 8),
    },
    (2, 3): {
        "conductor": 2,
        "frobenius": 1,
        "gaps": (1,),
        "multiplicity": 2,
        "embedding_dimension": 2,
        "min_mod_multiplicity": (0, 3),
    },
    (1,): {
        "conductor": 0,
        "frobenius": -1,
        "gaps": (),
        "multiplicity": 1,
        "embedding_dimension": 1,
        "min_mod_multiplicity": (0,),
    },
}

# the closure-condition witness for <4,6,7>: first violating triple in
# the deterministic scan order, and the missing element s + t - u
ARF_WITNESS_467 = (6, 7, 4)
ARF_WITNESS_467_MISSING = 9

# gap set of the Arf closure of <4,6,7>
ARF_CLOSURE_467_GAPS = (1, 2, 3, 5)
ARF_CLOSURE_467_GENS = (4, 6, 7, 9)

# squarefree divisor complex of <3,4,5> at degree 8, 1-indexed vertex
# tuples in size-then-lex order
COMPLEX_345_AT_8 = ((), (1,), (2,), (3,), (1, 3))

# nonzero graded Betti numbers, (i, s) -> dim
BETTI = {
    (1,): {(0, 0): 1},
    (2, 3): {(0, 0): 1, (1, 6): 1},
    (3, 4, 5): {
        (0, 0): 1,
        (1, 8): 1,
        (1, 9): 1,
        (1, 10): 1,
        (2, 13): 1,
        (2, 14): 1,
    },
    (3, 7, 8): {
        (0, 0): 1,
        (1, 14): 1,
        (1, 15): 1,
        (1, 16): 1,
        (2, 22): 1,
        (2, 23): 1,
    },
}

# Arf semigroup counts by conductor bound, from the gap-set filter
ARF_COUNTS = {0: 1, 2: 2, 6: 11, 12: 63, 16: 152}

# the full corpus at bound 6, as minimal generator tuples
ARF_BOUND_6 = {
    (1,),
    (2, 3),
    (2, 5),
    (2, 7),
    (3, 4, 5),
    (3, 5, 7),
    (3, 7, 8),
    (4, 5, 6, 7),
    (4, 6, 7, 9),
    (5, 6, 7, 8, 9),
    (6, 7, 8, 9, 10, 11),
}
