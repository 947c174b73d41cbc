"""Graded Betti tables of numerical semigroup rings.

beta_{i,s} equals the dimension of the reduced homology H~_{i-1} of the
squarefree divisor complex Delta_s. The scan covers every s in S up to
frobenius + sum of minimal generators; past that bound Delta_s is the full
simplex on all k vertices, which is acyclic, so the finite table is
complete.

Materializing Delta_s costs 2^k per degree and k equals the multiplicity
for the semigroups this package cares about, so the scan avoids
materialization through exact reductions (each one validated against the
naive route in the tests):

  - cone degrees: if some generator j extends every face of Delta_s, the
    complex is a cone, hence acyclic. Detected with a subset-sum bitset
    per j, no enumeration.
  - full-simplex degrees: one membership query (s - sum of generators).
  - everything else: per-size face counts come from a counting DP, and the
    smaller of Delta_s and its Alexander dual (on the active vertex set)
    is enumerated; over a field the dual carries the same reduced homology
    dimensions, re-indexed by size.
  - boundary matrix sizes follow from the same DP before any enumeration,
    so scale limits are enforced deterministically up front.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .errors import BettiScaleError, InvalidEntryError
from .homology import RATIONALS, FieldSpec, rank_array
from .semigroup_core import NumericalSemigroup

# Largest embedding dimension the int64 counting DP provably cannot
# overflow on (C(62, 31) fits; the scale limits stop real work far below).
MAX_SCAN_VERTICES = 62


@dataclass(frozen=True)
class ScaleLimits:
    """Deterministic bounds on the exact computation per degree.

    max_matrix_cells bounds rows*cols of any boundary matrix on the
    enumerated side; max_side_faces bounds the number of faces enumerated
    for one degree. Both are checked against DP-predicted counts before
    any enumeration happens, so hitting a limit is cheap and reproducible.
    """

    max_matrix_cells: int = 2_500_000
    max_side_faces: int = 400_000


DEFAULT_LIMITS = ScaleLimits()


@dataclass
class DegreePlan:
    """Sizing decision for one degree of the scan."""

    s: int
    kind: str  # void | empty_face_only | full | cone | compute | infeasible
    use_dual: bool = False
    active: int = 0
    side_counts: tuple = ()
    max_cells: int = 0
    fvec: tuple = ()
    homology: dict = dc_field(default_factory=dict)


@dataclass
class BettiTable:
    """Nonzero graded Betti numbers of one semigroup over one field."""

    generators: tuple
    field: FieldSpec
    entries: dict
    degree_bound: int
    diagnostics: list | None = None

    def total_betti(self):
        out = {}
        for (i, _s), v in self.entries.items():
            out[i] = out.get(i, 0) + v
        return dict(sorted(out.items()))

    def max_index(self) -> int:
        return max((i for (i, _s) in self.entries), default=0)

    def support_degrees(self, i: int):
        return sorted(s for (j, s) in self.entries if j == i)

    def to_json_dict(self) -> dict:
        cells = [
            {"i": i, "s": s, "dim": self.entries[(i, s)]}
            for (i, s) in sorted(self.entries)
        ]
        return {
            "schema_version": 1,
            "generators": list(self.generators),
            "field": self.field.label,
            "degree_bound": self.degree_bound,
            "betti": cells,
            "total": {str(i): v for i, v in self.total_betti().items()},
        }

    def text_diagram(self) -> str:
        """Rows are homological indices, columns the degrees with entries."""
        if not self.entries:
            return "(empty table)"
        degrees = sorted({s for (_i, s) in self.entries})
        imax = self.max_index()
        width = max(len(str(s)) for s in degrees)
        width = max(width, max(len(str(v)) for v in self.entries.values()))
        head = "i\\s " + " ".join(f"{s:>{width}}" for s in degrees)
        lines = [head]
        for i in range(imax + 1):
            row = [f"{i:<3} "]
            row.append(
                " ".join(
                    f"{self.entries.get((i, s), '.')!s:>{width}}" for s in degrees
                )
            )
            lines.append("".join(row))
        return "\n".join(lines)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.field == other.field
            and self.entries == other.entries
        )


class _DegreeScanner:
    """Shared state for scanning all degrees of one semigroup."""

    def __init__(self, S: NumericalSemigroup, field: FieldSpec, limits: ScaleLimits):
        self.S = S
        self.field = field
        self.limits = limits
        self.gens = S.min_generators
        self.k = len(self.gens)
        if self.k > MAX_SCAN_VERTICES:
            raise BettiScaleError(
                f"embedding dimension {self.k} exceeds the scan guard"
            )
        self.tot = sum(self.gens)
        self.bound = S.frobenius() + self.tot
        c = S.conductor
        self.mem = S._bits
        self.members_fin = [u for u in range(c) if S.contains(u)]
        self.conductor = c
        self._prepare_cone_filters()
        self._prepare_counting_dp()

    # -- membership ----------------------------------------------------

    def in_s(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= self.conductor:
            return True
        return bool((self.mem >> x) & 1)

    # -- cone detection ------------------------------------------------

    def _prepare_cone_filters(self):
        """Per-vertex data for the cone test.

        bad[j] holds the members u with u - n_j outside S (finite: u past
        conductor + n_j always has u - n_j in S). subset_sums[j] is the
        bitset of sums of generators other than j. Delta_s is a cone with
        apex j iff no face F avoiding j has s - sigma(F) in bad[j]; the
        witness face is genuine because membership of s - sigma(F) forces
        every vertex of F active.
        """
        c = self.conductor
        self.bad = []
        self.subset_sums = []
        for j, nj in enumerate(self.gens):
            self.bad.append(
                [
                    u
                    for u in range(0, c + nj)
                    if self.in_s(u) and not self.in_s(u - nj)
                ]
            )
            bs = 1
            for jj, w in enumerate(self.gens):
                if jj != j:
                    bs |= bs << w
            self.subset_sums.append(bs)

    def _cone_apex(self, s: int, active):
        for j in active:
            ok = True
            ssj = self.subset_sums[j]
            for u in self.bad[j]:
                x = s - u
                if x >= 0 and (ssj >> x) & 1:
                    ok = False
                    break
            if ok:
                return j
        return None

    # -- counting DP ---------------------------------------------------

    def _prepare_counting_dp(self):
        k, tot = self.k, self.tot
        cnt = np.zeros((k + 1, tot + 1), dtype=np.int64)
        cnt[0, 0] = 1
        for w in self.gens:
            # descending row order keeps the in-place update alias-free
            for r in range(k, 0, -1):
                cnt[r, w:] += cnt[r - 1, : tot + 1 - w]
        self.cnt = cnt
        self.cnt_prefix = np.cumsum(cnt, axis=1)

    def face_counts(self, s: int):
        """Faces of Delta_s per cardinality, from the DP; exact."""
        f = np.zeros(self.k + 1, dtype=np.int64)
        for u in self.members_fin:
            if u > s:
                break
            v = s - u
            if v <= self.tot:
                f += self.cnt[:, v]
        if s >= self.conductor:
            f += self.cnt_prefix[:, min(s - self.conductor, self.tot)]
        return f

    # -- per-degree planning -------------------------------------------

    def plan(self, s: int) -> DegreePlan:
        if not self.in_s(s):
            return DegreePlan(s, "void")
        active = [j for j in range(self.k) if self.in_s(s - self.gens[j])]
        if not active:
            # only s = 0 has no representation ending in a generator
            if s != 0:
                raise AssertionError(f"member {s} > 0 with no active vertex")
            return DegreePlan(s, "empty_face_only")
        if self.in_s(s - self.tot):
            return DegreePlan(s, "full", active=len(active))
        if self._cone_apex(s, active) is not None:
            return DegreePlan(s, "cone", active=len(active))

        fvec = self.face_counts(s)
        n_active = len(active)
        total = int(fvec.sum())
        dual_total = (1 << n_active) - total
        use_dual = dual_total < total
        if use_dual:
            side = [
                comb(n_active, l) - int(fvec[n_active - l])
                for l in range(n_active + 1)
            ]
        else:
            side = [int(x) for x in fvec]
        while side and side[-1] == 0:
            side.pop()
        max_cells = 0
        for a, b in zip(side, side[1:]):
            max_cells = max(max_cells, a * b)
        kind = "compute"
        if (
            sum(side) > self.limits.max_side_faces
            or max_cells > self.limits.max_matrix_cells
        ):
            kind = "infeasible"
        return DegreePlan(
            s,
            kind,
            use_dual=use_dual,
            active=n_active,
            side_counts=tuple(side),
            max_cells=max_cells,
            fvec=tuple(int(x) for x in fvec),
        )

    # -- enumeration and ranks -----------------------------------------

    def _enumerate_side(self, s: int, active, use_dual: bool):
        """Faces of the chosen side as bitmasks over the active vertices.

        Active vertices are visited in increasing generator weight; the
        depth-first walk only extends genuine faces, which is complete
        because both sides are downward closed.
        """
        order = sorted(active, key=lambda j: self.gens[j])
        wts = [self.gens[j] for j in order]
        n = len(order)
        out = []
        if not use_dual:
            def grow(start, mask, total):
                out.append(mask)
                for t in range(start, n):
                    nt = total + wts[t]
                    if nt > s:
                        break
                    if self.in_s(s - nt):
                        grow(t + 1, mask | (1 << t), nt)

            grow(0, 0, 0)
        else:
            base = s - sum(wts)

            def grow_dual(start, mask, total):
                out.append(mask)
                for t in range(start, n):
                    nt = total + wts[t]
                    if not self.in_s(base + nt):
                        grow_dual(t + 1, mask | (1 << t), nt)

            if not self.in_s(base):
                grow_dual(0, 0, 0)
        return out

    def compute(self, plan: DegreePlan):
        """Homology contributions {i: dim} for a "compute" degree."""
        s = plan.s
        active = [j for j in range(self.k) if self.in_s(s - self.gens[j])]
        masks = self._enumerate_side(s, active, plan.use_dual)
        by_size = {}
        for m in masks:
            by_size.setdefault(m.bit_count(), []).append(m)
        sizes = [len(by_size.get(l, ())) for l in range(max(by_size, default=0) + 1)]
        while sizes and sizes[-1] == 0:
            sizes.pop()
        if tuple(sizes) != plan.side_counts:
            raise AssertionError(
                f"enumerated face counts {sizes} disagree with DP {plan.side_counts}"
                f" at s={s}"
            )
        maxsize = len(sizes) - 1
        for l in by_size:
            by_size[l].sort()
        ranks = {}
        for l in range(1, maxsize + 1):
            rows = by_size.get(l - 1, [])
            cols = by_size.get(l, [])
            if not rows or not cols:
                ranks[l] = 0
                continue
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
            ranks[l] = rank_array(A, self.field)
        n_active = plan.active
        contrib = {}
        for l in range(0, maxsize + 1):
            h = sizes[l] - ranks.get(l, 0) - ranks.get(l + 1, 0)
            if h < 0:
                raise AssertionError(f"negative homology dimension at s={s}")
            if h:
                i = l if not plan.use_dual else n_active - l - 1
                if i < 0:
                    raise AssertionError(f"negative index from dual side at s={s}")
                contrib[i] = contrib.get(i, 0) + h
        return contrib


def _euler_from_counts(fvec) -> int:
    """Reduced Euler characteristic from per-size face counts.

    Size-l faces have dimension l - 1, so the empty face contributes -1.
    """
    return sum((f if l % 2 == 1 else -f) for l, f in enumerate(fvec))


def graded_betti(
    S: NumericalSemigroup,
    field: FieldSpec = RATIONALS,
    *,
    limits: ScaleLimits = DEFAULT_LIMITS,
    max_degree: int | None = None,
    collect_diagnostics: bool = False,
) -> BettiTable:
    """Scan all degrees and assemble the nonzero beta_{i,s}.

    max_degree only takes effect beyond the provable bound (the extra
    degrees are certified acyclic on the fly). Raises BettiScaleError when
    a degree needs more than the configured limits.
    """
    scanner = _DegreeScanner(S, field, limits)
    bound = scanner.bound
    if max_degree is not None and max_degree > bound:
        bound = max_degree
    # plan every degree before computing any: an infeasible degree anywhere
    # aborts up front instead of after minutes of feasible ranks
    plans = [scanner.plan(s) for s in range(0, bound + 1)]
    for plan in plans:
        if plan.kind == "infeasible":
            raise BettiScaleError(
                f"degree {plan.s} of {S} needs {plan.max_cells} matrix cells"
                f" / {sum(plan.side_counts)} faces, beyond the configured limits"
            )
    entries = {}
    diagnostics = [] if collect_diagnostics else None
    for plan in plans:
        s = plan.s
        if plan.kind == "empty_face_only":
            entries[(0, s)] = 1
            plan.homology = {0: 1}
        elif plan.kind in ("full", "cone"):
            # acyclic by construction; under diagnostics also check that
            # the counting DP agrees (a cone has reduced Euler number 0)
            if collect_diagnostics:
                plan.fvec = tuple(int(x) for x in scanner.face_counts(s))
                if _euler_from_counts(plan.fvec) != 0:
                    raise AssertionError(f"skip logic contradicts DP at s={s}")
        elif plan.kind == "compute":
            contrib = scanner.compute(plan)
            plan.homology = contrib
            euler_h = sum(
                (v if ((i - 1) % 2 == 0) else -v) for i, v in contrib.items()
            )
            euler_f = _euler_from_counts(plan.fvec)
            if euler_h != euler_f:
                raise AssertionError(
                    f"Euler mismatch at s={s}: faces {euler_f}, homology {euler_h}"
                )
            for i, h in contrib.items():
                if i == 0 and s != 0:
                    raise AssertionError(f"unexpected beta_0 at degree {s}")
                entries[(i, s)] = h
        if diagnostics is not None and plan.kind != "void":
            diagnostics.append(plan)
    return BettiTable(
        generators=scanner.gens,
        field=field,
        entries=entries,
        degree_bound=bound,
        diagnostics=diagnostics,
    )


@dataclass
class ScanForecast:
    """Outcome of the sizing pass without any homology computation."""

    generators: tuple
    feasible: bool
    worst_cells: int
    worst_side_faces: int
    worst_degree: int | None
    degrees_to_compute: int


def forecast_scan(
    S: NumericalSemigroup, limits: ScaleLimits = DEFAULT_LIMITS
) -> ScanForecast:
    """Predict whether graded_betti fits the limits, from the DP alone."""
    scanner = _DegreeScanner(S, RATIONALS, limits)
    worst_cells = 0
    worst_faces = 0
    worst_degree = None
    n_compute = 0
    feasible = True
    for s in range(0, scanner.bound + 1):
        plan = scanner.plan(s)
        if plan.kind not in ("compute", "infeasible"):
            continue
        n_compute += 1
        faces = sum(plan.side_counts)
        if plan.max_cells > worst_cells:
            worst_cells = plan.max_cells
            worst_degree = s
        worst_faces = max(worst_faces, faces)
        if plan.kind == "infeasible":
            feasible = False
    return ScanForecast(
        generators=scanner.gens,
        feasible=feasible,
        worst_cells=worst_cells,
        worst_side_faces=worst_faces,
        worst_degree=worst_degree,
        degrees_to_compute=n_compute,
    )


def total_betti(table: BettiTable):
    """Column sums i -> sum over s of beta_{i,s}."""
    return table.total_betti()
