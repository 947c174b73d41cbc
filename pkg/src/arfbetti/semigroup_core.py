"""Numerical semigroups with exact finite membership tables.

A numerical semigroup is a subset of N closed under addition, containing 0,
with finite complement. The representation is fully explicit: minimal
generators, conductor, and a membership table covering [0, conductor + max
generator]. All arithmetic is exact; the sieve runs on a Python int used as
a bitmask, so there is no overflow to worry about.
"""

from __future__ import annotations

import math
from functools import reduce

from .errors import EmptyGeneratorsError, InvalidEntryError, NonCofiniteError

# The sieve is quadratic in the largest generator; keep inputs at desk scale
# so the bitmask stays small.
MAX_GENERATOR = 10_000


class NumericalSemigroup:
    """Immutable numerical semigroup.

    Attributes:
        min_generators: strictly increasing tuple n_1 < ... < n_k.
        conductor: least c with c + N contained in S.
        multiplicity: n_1, the least nonzero member.

    Instances are only built through from_generators or the internal
    constructors; treat them as frozen.
    """

    __slots__ = ("min_generators", "conductor", "multiplicity", "_bits", "_horizon")

    def __init__(self, min_generators, conductor, bits, horizon):
        self.min_generators = tuple(min_generators)
        self.conductor = conductor
        self.multiplicity = self.min_generators[0]
        self._bits = bits
        self._horizon = horizon

    # -- membership ----------------------------------------------------

    def contains(self, s: int) -> bool:
        """True iff s is a member; negative s is never a member."""
        if s < 0:
            return False
        if s >= self.conductor:
            return True
        return bool((self._bits >> s) & 1)

    @property
    def membership(self):
        """Boolean table over [0, conductor + max generator]."""
        return tuple(bool((self._bits >> v) & 1) for v in range(self._horizon + 1))

    # -- elementary invariants -----------------------------------------

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    def frobenius(self) -> int:
        """Largest non-member; -1 for N by convention."""
        return self.conductor - 1

    def gaps(self):
        """Sorted complement of S in N."""
        return tuple(v for v in range(self.conductor) if not ((self._bits >> v) & 1))

    def genus(self) -> int:
        return len(self.gaps())

    def min_elements_mod_multiplicity(self):
        """For each residue r mod n_1, the least member congruent to r."""
        m = self.multiplicity
        out = [None] * m
        found = 0
        v = 0
        while found < m:
            if self.contains(v) and out[v % m] is None:
                out[v % m] = v
                found += 1
            v += 1
        return tuple(out)

    def members_below(self, limit: int):
        """Sorted members in [0, limit)."""
        return tuple(v for v in range(max(limit, 0)) if self.contains(v))

    # -- canonical forms -----------------------------------------------

    def text_form(self) -> str:
        return ",".join(str(g) for g in self.min_generators)

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.min_generators),
            "conductor": self.conductor,
            "gaps": list(self.gaps()),
        }

    def __str__(self) -> str:
        return "<" + self.text_form() + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup({self.text_form()})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_generators == other.min_generators

    def __hash__(self) -> int:
        return hash(self.min_generators)


def _closure_bits(gens, limit: int) -> int:
    """Bitmask of all generator sums in [0, limit]; bit v set iff v in S."""
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for g in gens:
        if g > limit:
            continue
        # doubling the shift covers every multiple count of g
        step = g
        while step <= limit:
            bits |= (bits << step) & mask
            step <<= 1
    return bits


def _extend_tail(bits: int, conductor: int, upto: int) -> int:
    """Set every bit in [conductor, upto] (the infinite tail of S)."""
    if upto < conductor:
        return bits
    tail = ((1 << (upto - conductor + 1)) - 1) << conductor
    return bits | tail


def _irreducibles(bits: int, conductor: int, mult: int):
    """Nonzero members that are not a sum of two nonzero members."""
    bound = max(conductor + mult - 1, mult)
    bits = _extend_tail(bits, conductor, bound)
    mask = (1 << (bound + 1)) - 1
    nonzero = (bits & ~1) & mask
    reducible = 0
    a = mult
    while a + mult <= bound:
        if (nonzero >> a) & 1:
            reducible |= (nonzero << a) & mask
        a += 1
    return [
        x
        for x in range(1, bound + 1)
        if ((bits >> x) & 1) and not ((reducible >> x) & 1)
    ]


def _build(bits: int, conductor: int) -> NumericalSemigroup:
    """Finish construction from a trusted membership bitmask."""
    nz = bits >> 1
    if nz == 0:
        raise NonCofiniteError("membership table has no nonzero member")
    mult = (nz & -nz).bit_length()
    gens = _irreducibles(bits, conductor, mult)
    horizon = conductor + gens[-1]
    bits = _extend_tail(bits, conductor, horizon) & ((1 << (horizon + 1)) - 1)
    return NumericalSemigroup(gens, conductor, bits, horizon)


def from_generators(gens) -> NumericalSemigroup:
    """Construct the numerical semigroup generated by gens.

    Entries must be positive integers with overall gcd 1. The minimal
    generating set is recomputed, so redundant entries are fine.
    """
    if gens is None:
        raise EmptyGeneratorsError("no generators given")
    gens = list(gens)
    if not gens:
        raise EmptyGeneratorsError("no generators given")
    for g in gens:
        if isinstance(g, bool) or not isinstance(g, int):
            raise InvalidEntryError(f"generator {g!r} is not an integer")
        if g < 1:
            raise InvalidEntryError(f"generator {g} is not positive")
        if g > MAX_GENERATOR:
            raise InvalidEntryError(
                f"generator {g} exceeds the supported maximum {MAX_GENERATOR}"
            )
    if reduce(math.gcd, gens) != 1:
        raise NonCofiniteError(f"gcd of {sorted(set(gens))} is not 1")

    gmax = max(gens)
    # provably past the Frobenius number at these sizes
    limit = 2 * gmax * gmax + gmax
    bits = _closure_bits(sorted(set(gens)), limit)
    mask = (1 << (limit + 1)) - 1
    conductor = (~bits & mask).bit_length()
    return _build(bits, conductor)


def from_membership(flags, conductor: int) -> NumericalSemigroup:
    """Construct from an explicit membership table (trusted fast path).

    flags is indexable over [0, len-1] with flags[v] truthy iff v in S;
    it must be correct at least on [0, conductor). Used by enumeration,
    where the table is produced by a structure argument rather than a
    sieve.
    """
    bits = 0
    for v in range(min(len(flags), conductor)):
        if flags[v]:
            bits |= 1 << v
    if not bits & 1:
        raise InvalidEntryError("membership table must contain 0")
    if conductor > 0 and (bits >> (conductor - 1)) & 1:
        raise InvalidEntryError("conductor - 1 must be a gap")
    bits = _extend_tail(bits, conductor, conductor)
    return _build(bits, conductor)


def parse_generators(text: str):
    """Parse the canonical comma-separated generator form, e.g. "3,7,8"."""
    if text is None or not text.strip():
        raise EmptyGeneratorsError("empty generator string")
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise InvalidEntryError("empty entry in generator list")
        try:
            out.append(int(part))
        except ValueError:
            raise InvalidEntryError(f"cannot parse generator {part!r}") from None
    return out


def natural_numbers() -> NumericalSemigroup:
    """The semigroup N itself."""
    return from_generators([1])
