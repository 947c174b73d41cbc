"""Arf property testing, quotients, blowups, closure, and enumeration.

S is Arf when S(n) = {s - n : s in S, s >= n} is a semigroup for every
n in S; equivalently, s, t >= u in S implies s + t - u in S. The triple
form admits a finite check: if max(s, t) >= conductor then s + t - u >=
max(s, t) lands in S automatically, so only members below the conductor
matter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    InvalidEntryError,
    NotArfError,
    NotMemberError,
    PreconditionFailedError,
)
from .semigroup_core import (
    NumericalSemigroup,
    from_generators,
    from_membership,
    natural_numbers,
)


@dataclass(frozen=True)
class QuotientSet:
    """The translated set S(n) = {s - n : s in S, s >= n}.

    Always cofinite (everything at or past tail_start belongs), but not
    necessarily closed under addition. closed reports the additive check;
    semigroup is populated only when it passed. violation, when present,
    is a pair (a, b) of members whose sum is missing.
    """

    source: NumericalSemigroup
    offset: int
    tail_start: int
    closed: bool
    violation: tuple | None
    semigroup: NumericalSemigroup | None = field(compare=False)

    def contains(self, x: int) -> bool:
        return x >= 0 and self.source.contains(x + self.offset)

    def members_below(self, limit: int):
        return tuple(x for x in range(max(limit, 0)) if self.contains(x))


def quotient(S: NumericalSemigroup, n: int) -> QuotientSet:
    """S(n) with its closure verdict; n must be a member of S."""
    if not S.contains(n):
        raise NotMemberError(f"{n} is not a member of {S}")
    tail = max(S.conductor - n, 0)
    members = [x for x in range(1, tail) if S.contains(x + n)]
    violation = None
    for i, a in enumerate(members):
        for b in members[i:]:
            y = a + b
            if y >= tail:
                break
            if not S.contains(y + n):
                violation = (a, b)
                break
        if violation:
            break
    closed = violation is None
    sg = None
    if closed:
        flags = [S.contains(x + n) for x in range(tail + 1)]
        sg = from_membership(flags, tail) if tail > 0 else natural_numbers()
    return QuotientSet(
        source=S,
        offset=n,
        tail_start=tail,
        closed=closed,
        violation=violation,
        semigroup=sg,
    )


def arf_violation(S: NumericalSemigroup):
    """First triple (s, t, u) with s, t >= u in S but s + t - u missing.

    Iteration is ascending in s, then t, then u, so the witness is
    deterministic. Returns None when S is Arf.
    """
    c = S.conductor
    small = [v for v in range(1, c) if S.contains(v)]
    for s in small:
        for t in small:
            if t < s:
                continue
            for u in small:
                if u > s:
                    break
                if not S.contains(s + t - u):
                    return (s, t, u)
    return None


def is_arf(S: NumericalSemigroup) -> bool:
    return arf_violation(S) is None


def blowup(S: NumericalSemigroup) -> NumericalSemigroup:
    """Semigroup generated by n_1 and n_i - n_1; N blows up to N."""
    gens = S.min_generators
    if len(gens) == 1:
        # gcd 1 forces the single generator to be 1, i.e. S = N
        return S
    n1 = gens[0]
    return from_generators([n1] + [g - n1 for g in gens[1:]])


def same_multiplicity_blowup(S: NumericalSemigroup) -> bool:
    """True when the blowup keeps the multiplicity of S.

    Computed both from the blowup itself and from the generator condition
    n_2 >= 2 n_1; the two must agree.
    """
    gens = S.min_generators
    direct = blowup(S).multiplicity == S.multiplicity
    by_gens = True if len(gens) == 1 else gens[1] >= 2 * gens[0]
    if direct != by_gens:
        raise AssertionError(
            f"multiplicity routes disagree on {S}: {direct} vs {by_gens}"
        )
    return direct


def _all_arf_violations(S: NumericalSemigroup):
    """Every missing s + t - u value, collected over a full pass."""
    c = S.conductor
    small = [v for v in range(1, c) if S.contains(v)]
    missing = set()
    for s in small:
        for t in small:
            if t < s:
                continue
            for u in small:
                if u > s:
                    break
                y = s + t - u
                if not S.contains(y):
                    missing.add(y)
    return sorted(missing)


def arf_closure(S: NumericalSemigroup) -> NumericalSemigroup:
    """Smallest Arf semigroup containing S.

    Each pass inserts every violating s + t - u at once, then renormalizes.
    Terminates because the finite gap set strictly shrinks.
    """
    cur = S
    while True:
        missing = _all_arf_violations(cur)
        if not missing:
            return cur
        members = [
            v
            for v in range(1, cur.conductor + cur.multiplicity + 1)
            if cur.contains(v)
        ]
        cur = from_generators(members + missing)


@dataclass(frozen=True)
class MultiplicitySequence:
    """Multiplicities along the blowup chain down to N.

    entries is the finite explicit part; an infinite tail of 1s is
    implied. For N the explicit part is empty.
    """

    entries: tuple

    def __post_init__(self):
        es = self.entries
        for m in es:
            if m < 1:
                raise InvalidEntryError("multiplicities must be positive")
        for a, b in zip(es, es[1:]):
            if a < b:
                raise InvalidEntryError("multiplicity sequence must be non-increasing")

    def partial_sums(self):
        out = [0]
        for m in self.entries:
            out.append(out[-1] + m)
        return tuple(out)


def multiplicity_sequence(S: NumericalSemigroup) -> MultiplicitySequence:
    """Multiplicities of the chain S, S', S'', ... until N; Arf only."""
    if not is_arf(S):
        raise NotArfError(f"{S} is not Arf")
    entries = []
    cur = S
    while cur.min_generators != (1,):
        entries.append(cur.multiplicity)
        cur = blowup(cur)
    return MultiplicitySequence(tuple(entries))


def _child(parent: NumericalSemigroup, m: int) -> NumericalSemigroup:
    """The Arf semigroup {0} union (m + parent), for m a member of parent."""
    c = m + parent.conductor
    horizon = 2 * c + m + 1
    flags = [False] * (horizon + 1)
    flags[0] = True
    for x in range(m, horizon + 1):
        if parent.contains(x - m):
            flags[x] = True
    return from_membership(flags, c)


def enumerate_arf(conductor_bound: int):
    """Yield every Arf semigroup with conductor <= bound, exactly once.

    N is Arf; if S' is Arf and m is a nonzero member of S', then
    {0} union (m + S') is Arf with multiplicity m and conductor
    m + conductor(S'). Every Arf semigroup other than N arises this way
    from its blowup, and (m, S') is recoverable from the child, so the
    recursion is exhaustive and duplicate-free. Order is depth-first with
    children by increasing m.
    """
    if conductor_bound < 0:
        raise InvalidEntryError("conductor bound must be >= 0")
    nat = natural_numbers()

    def walk(parent):
        cp = parent.conductor
        for m in range(1, conductor_bound - cp + 1):
            if not parent.contains(m):
                continue
            if cp == 0 and m == 1:
                # {0} union (1 + N) = N again; skip the lone duplicate
                continue
            child = _child(parent, m)
            yield child
            yield from walk(child)

    yield nat
    yield from walk(nat)


def check_pomoc(S: NumericalSemigroup):
    """Verify the three membership equivalences tying S to its blowup S'.

    For Arf S with a same-multiplicity blowup, with G(S) = {n_1, ..., n_k}:
      (a) s in S  iff  s - n_1 in S',   unless s = 0;
      (b) s in S  iff  s - 2 n_1 in S', unless s = 0 or s = n_l;
      (c) s in S  iff  s in S',         unless s = n_l - n_1 with l != 1.
    Scanned over s in [0, conductor(S) + conductor(S') + 3 n_1]. Returns
    the list of violations; empty means all three hold.
    """
    if not is_arf(S):
        raise PreconditionFailedError("not_arf", f"{S} is not Arf")
    if not same_multiplicity_blowup(S):
        raise PreconditionFailedError(
            "multiplicity_drops", f"blowup of {S} drops multiplicity"
        )
    Sp = blowup(S)
    gens = S.min_generators
    n1 = S.multiplicity
    except_b = set(gens)
    except_c = {g - n1 for g in gens[1:]}
    out = []
    hi = S.conductor + Sp.conductor + 3 * n1
    for s in range(hi + 1):
        in_s = S.contains(s)
        if s != 0 and in_s != Sp.contains(s - n1):
            out.append({"equivalence": "a", "s": s})
        if s != 0 and s not in except_b and in_s != Sp.contains(s - 2 * n1):
            out.append({"equivalence": "b", "s": s})
        if s not in except_c and in_s != Sp.contains(s):
            out.append({"equivalence": "c", "s": s})
    return out
