"""Machine verification of the Betti-number shift identity and its toolkit.

For an Arf semigroup S whose blowup S' keeps the multiplicity n1, the
graded Betti numbers satisfy beta_{i,s}(S') = beta_{i,s+(i+1)n1}(S) for
i >= 1. check_theorem computes both tables and compares every populated
cell; sweep does that over the whole enumerated corpus up to a conductor
bound; classify_unmatched_faces re-runs the combinatorial heart of the
argument (an explicit matching of faces between the two divisor
complexes) and demands that every unmatched face falls into one of the
four expected shapes.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .arf import (
    arf_violation,
    blowup,
    check_pomoc,
    enumerate_arf,
    is_arf,
    quotient,
    same_multiplicity_blowup,
)
from .betti import (
    DEFAULT_LIMITS,
    BettiTable,
    ScaleLimits,
    forecast_scan,
    graded_betti,
)
from .errors import (
    ClassificationGapError,
    InvalidEntryError,
    PreconditionFailedError,
)
from .homology import RATIONALS, FieldSpec
from .semigroup_core import NumericalSemigroup, from_generators

I0_NOTE = (
    "i=0 is excluded: both sides have a single beta_0 = 1 in degree 0, so the "
    "shifted comparison beta_{0,s}(S') vs beta_{0,s+n1}(S) is degenerate at "
    "s=0 and trivial elsewhere; the identity is checked for i >= 1."
)


def _require_shift_eligible(S: NumericalSemigroup) -> None:
    if not is_arf(S):
        raise PreconditionFailedError("not_arf")
    if not same_multiplicity_blowup(S):
        raise PreconditionFailedError("multiplicity_drops")


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one shift-identity check.

    checked_range holds (i, s) pairs in blowup-side degrees; each compares
    beta_{i,s}(S') against beta_{i,s+(i+1)n1}(S). mismatches holds
    (i, s, blowup_dim, original_dim) for every unequal pair.
    """

    generators: tuple
    blowup_generators: tuple
    field: FieldSpec
    shift_base: int
    checked_range: tuple
    mismatches: tuple
    i0_note: str = I0_NOTE

    @property
    def verdict(self) -> str:
        return "pass" if not self.mismatches else "fail"

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "generators": list(self.generators),
            "blowup_generators": list(self.blowup_generators),
            "field": self.field.label,
            "shift_base": self.shift_base,
            "checked": [list(p) for p in self.checked_range],
            "mismatches": [list(m) for m in self.mismatches],
            "verdict": self.verdict,
            "i0_excluded": True,
            "i0_note": self.i0_note,
        }


def check_theorem(
    S: NumericalSemigroup,
    field: FieldSpec = RATIONALS,
    *,
    limits: ScaleLimits = DEFAULT_LIMITS,
    tables: dict | None = None,
) -> TheoremReport:
    """Compare the two Betti tables under the degree shift (i+1)*n1.

    The comparison window is the union of supports of both tables, so no
    nonzero cell on either side can escape it. `tables` is an optional
    cache {generators: BettiTable} shared across calls.
    """
    _require_shift_eligible(S)
    B = blowup(S)
    tS = _cached_table(S, field, limits, tables)
    tB = _cached_table(B, field, limits, tables)
    n1 = S.multiplicity
    pairs = set()
    for (i, s) in tB.entries:
        if i >= 1:
            pairs.add((i, s))
    for (i, s) in tS.entries:
        if i >= 1:
            pairs.add((i, s - (i + 1) * n1))
    checked = tuple(sorted(pairs))
    mismatches = []
    for (i, s) in checked:
        lhs = tB.entries.get((i, s), 0)
        rhs = tS.entries.get((i, s + (i + 1) * n1), 0)
        if lhs != rhs:
            mismatches.append((i, s, lhs, rhs))
    return TheoremReport(
        generators=S.min_generators,
        blowup_generators=B.min_generators,
        field=field,
        shift_base=n1,
        checked_range=checked,
        mismatches=tuple(mismatches),
    )


def _cached_table(S, field, limits, tables) -> BettiTable:
    if tables is None:
        return graded_betti(S, field, limits=limits)
    key = S.min_generators
    if key not in tables:
        tables[key] = graded_betti(S, field, limits=limits)
    return tables[key]


# ---------------------------------------------------------------------------
# proposition suite


@dataclass(frozen=True)
class PropositionResult:
    name: str
    applied: bool
    ok: bool
    detail: str = ""

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "applied": self.applied,
            "ok": self.ok,
            "detail": self.detail,
        }


def check_propositions(S: NumericalSemigroup) -> list:
    """Evaluate the supporting facts on one Arf semigroup.

    Returns five PropositionResult records; the generator formula and the
    membership equivalences only apply when the blowup keeps the
    multiplicity and are reported as applied=False otherwise.
    """
    if not is_arf(S):
        raise PreconditionFailedError("not_arf")
    results = []
    n1 = S.multiplicity
    B = blowup(S)

    k = S.embedding_dimension
    results.append(
        PropositionResult(
            "multiplicity_equals_embdim",
            True,
            n1 == k,
            "" if n1 == k else f"multiplicity {n1} != embedding dimension {k}",
        )
    )

    q = quotient(S, n1)
    horizon = max(B.conductor, q.tail_start) + 1
    same = B.members_below(horizon) == q.members_below(horizon)
    ok = same and q.closed
    detail = ""
    if not q.closed:
        detail = f"quotient by {n1} not closed: witness {q.violation}"
    elif not same:
        detail = "blowup and quotient membership tables differ"
    results.append(PropositionResult("blowup_equals_quotient", True, ok, detail))

    viol = arf_violation(B)
    results.append(
        PropositionResult(
            "blowup_is_arf",
            True,
            viol is None,
            "" if viol is None else f"blowup closure fails at {viol}",
        )
    )

    eligible = same_multiplicity_blowup(S) and k >= 2
    if eligible:
        expected = tuple(sorted([n1] + [g - n1 for g in S.min_generators[1:]]))
        got = B.min_generators
        results.append(
            PropositionResult(
                "same_mult_generator_formula",
                True,
                got == expected,
                "" if got == expected else f"expected {expected}, got {got}",
            )
        )
    else:
        results.append(
            PropositionResult("same_mult_generator_formula", False, True)
        )

    if same_multiplicity_blowup(S):
        violations = check_pomoc(S)
        results.append(
            PropositionResult(
                "pomoc_equivalences",
                True,
                not violations,
                "" if not violations else f"violations: {violations[:3]}",
            )
        )
    else:
        results.append(PropositionResult("pomoc_equivalences", False, True))
    return results


def propositions_ok(results) -> bool:
    return all(r.ok for r in results)


# ---------------------------------------------------------------------------
# face classification


@dataclass(frozen=True)
class UnmatchedFaceReport:
    """Census of faces that break the identity matching at one (i, s).

    Faces are vertex tuples (1-indexed into the generator list, shared by
    both complexes). Types 1-3 live only in the degree-t complex of S,
    type 4 only in the degree-s complex of the blowup.
    """

    i: int
    s: int
    t: int
    matched: int
    type1: tuple
    type2: tuple
    type3: tuple
    type4: tuple

    @property
    def unmatched(self) -> int:
        return len(self.type1) + len(self.type2) + len(self.type3) + len(self.type4)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "i": self.i,
            "s": self.s,
            "t": self.t,
            "matched": self.matched,
            "type1": [list(f) for f in self.type1],
            "type2": [list(f) for f in self.type2],
            "type3": [list(f) for f in self.type3],
            "type4": [list(f) for f in self.type4],
        }


def classify_unmatched_faces(
    S: NumericalSemigroup, i: int, s: int
) -> UnmatchedFaceReport:
    """Bin the faces where the two divisor complexes disagree.

    With t = s + (i+1)n1, faces of size i and i+1 are matched between the
    degree-s complex of the blowup and the degree-t complex of S by the
    identity on vertex sets. Membership equivalences force every
    unmatched face into one of four shapes:

      type 1: size i,   in Delta_t only, t - sigma(F) = 0
      type 2: size i,   in Delta_t only, 1 in F, t - sigma(F) a generator
      type 3: size i+1, in Delta_t only, 1 in F, t - sigma(F) = 0
      type 4: size i+1, in blowup complex only, 1 not in F,
              t - sigma(F) = n_l - n1 for some l != 1

    where sigma(F) sums the generators of S indexed by F. Anything else
    raises ClassificationGapError: that would be a genuine counterexample
    to the case analysis, not a software condition to swallow.
    """
    _require_shift_eligible(S)
    if i < 1:
        raise InvalidEntryError("classification needs i >= 1")
    if s < 0:
        raise InvalidEntryError("degree must be nonnegative")
    gens = S.min_generators
    n1 = S.multiplicity
    k = len(gens)
    B = blowup(S)
    bgens = B.min_generators
    if k >= 2:
        expected = tuple(sorted([n1] + [g - n1 for g in gens[1:]]))
        if bgens != expected:
            raise AssertionError(
                f"blowup generators {bgens} break the index alignment {expected}"
            )
    t = s + (i + 1) * n1
    gen_values = set(gens)
    diff_values = {g - n1 for g in gens[1:]}

    matched = 0
    bins = {1: [], 2: [], 3: [], 4: []}
    for size in (i, i + 1):
        if size > k:
            continue
        for F in itertools.combinations(range(1, k + 1), size):
            sigma = sum(gens[j - 1] for j in F)
            has1 = F[0] == 1
            sigma_b = sigma - (size - (1 if has1 else 0)) * n1
            in_t = S.contains(t - sigma)
            in_s = B.contains(s - sigma_b)
            if in_t == in_s:
                if in_t:
                    matched += 1
                continue
            x = t - sigma
            if size == i and in_t and x == 0:
                bins[1].append(F)
            elif size == i and in_t and has1 and x in gen_values:
                bins[2].append(F)
            elif size == i + 1 and in_t and has1 and x == 0:
                bins[3].append(F)
            elif size == i + 1 and in_s and not has1 and x in diff_values:
                bins[4].append(F)
            else:
                side = "degree-t complex" if in_t else "blowup degree-s complex"
                raise ClassificationGapError(
                    f"face {F} (size {size}) of the {side} fits no type:"
                    f" i={i} s={s} t={t} sigma={sigma} for {S}"
                )
    return UnmatchedFaceReport(
        i=i,
        s=s,
        t=t,
        matched=matched,
        type1=tuple(bins[1]),
        type2=tuple(bins[2]),
        type3=tuple(bins[3]),
        type4=tuple(bins[4]),
    )


# ---------------------------------------------------------------------------
# corpus sweep


@dataclass
class SweepReport:
    """Aggregate outcome of checking the whole corpus up to a bound."""

    bound: int
    field: FieldSpec
    total: int = 0
    eligible: int = 0
    passes: int = 0
    failures: list = dc_field(default_factory=list)
    prop_failures: list = dc_field(default_factory=list)
    skipped_infeasible: list = dc_field(default_factory=list)
    classification_pairs: int = 0
    unmatched_by_type: dict = dc_field(
        default_factory=lambda: {1: 0, 2: 0, 3: 0, 4: 0}
    )
    completed: bool = True
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return (
            self.completed
            and not self.failures
            and not self.prop_failures
            and not self.skipped_infeasible
        )

    def to_json_dict(self) -> dict:
        # wall time deliberately left out: identical runs must serialize
        # identically
        return {
            "schema_version": 1,
            "bound": self.bound,
            "field": self.field.label,
            "total": self.total,
            "eligible": self.eligible,
            "passes": self.passes,
            "failures": self.failures,
            "prop_failures": self.prop_failures,
            "skipped_infeasible": self.skipped_infeasible,
            "classification": {
                "pairs": self.classification_pairs,
                "unmatched_by_type": {
                    str(ty): n for ty, n in sorted(self.unmatched_by_type.items())
                },
                "gaps": 0,
            },
            "i0_excluded": True,
            "completed": self.completed,
        }


def _member_report(args) -> dict:
    """Worker body: full check of one corpus member; must stay picklable."""
    gens, char, limits, classify = args
    S = from_generators(gens)
    field = FieldSpec(char)
    out = {
        "generators": list(gens),
        "eligible": False,
        "passed": None,
        "mismatches": [],
        "prop_failures": [],
        "skipped": None,
        "class_pairs": 0,
        "class_types": {1: 0, 2: 0, 3: 0, 4: 0},
        "classification_gap": None,
    }
    for r in check_propositions(S):
        if not r.ok:
            out["prop_failures"].append({"name": r.name, "detail": r.detail})
    if not same_multiplicity_blowup(S):
        return out
    out["eligible"] = True
    fc = forecast_scan(S, limits)
    fcB = forecast_scan(blowup(S), limits)
    if not (fc.feasible and fcB.feasible):
        worst = fc if not fc.feasible else fcB
        out["skipped"] = {
            "worst_cells": worst.worst_cells,
            "worst_degree": worst.worst_degree,
        }
        return out
    tables: dict = {}
    report = check_theorem(S, field, limits=limits, tables=tables)
    out["passed"] = report.passed
    out["mismatches"] = [list(m) for m in report.mismatches]
    if classify:
        try:
            for (i, ds) in report.checked_range:
                if ds < 0:
                    continue
                census = classify_unmatched_faces(S, i, ds)
                out["class_pairs"] += 1
                out["class_types"][1] += len(census.type1)
                out["class_types"][2] += len(census.type2)
                out["class_types"][3] += len(census.type3)
                out["class_types"][4] += len(census.type4)
        except ClassificationGapError as e:
            out["classification_gap"] = str(e)
    return out


def sweep(
    conductor_bound: int,
    field: FieldSpec = RATIONALS,
    *,
    jobs: int = 1,
    limits: ScaleLimits = DEFAULT_LIMITS,
    deadline_s: float | None = None,
    classify: bool = True,
) -> SweepReport:
    """Check every Arf semigroup with conductor up to the bound.

    The proposition suite runs on all of them; the shift identity and the
    face classification run on those whose blowup keeps the multiplicity.
    Members whose exact computation would exceed the scale limits are
    recorded under skipped_infeasible (the sizing pass predicts this
    without doing the work). Identity failures are collected, never
    raised; a classification gap aborts via ClassificationGapError.
    """
    if conductor_bound < 0:
        raise InvalidEntryError("conductor bound must be nonnegative")
    start = time.monotonic()
    report = SweepReport(bound=conductor_bound, field=field)
    members = [S.min_generators for S in enumerate_arf(conductor_bound)]
    report.total = len(members)
    args = [(gens, field.characteristic, limits, classify) for gens in members]

    def consume(result: dict) -> None:
        if result["prop_failures"]:
            report.prop_failures.append(
                {
                    "generators": result["generators"],
                    "failures": result["prop_failures"],
                }
            )
        if not result["eligible"]:
            return
        report.eligible += 1
        if result["skipped"] is not None:
            entry = {"generators": result["generators"]}
            entry.update(result["skipped"])
            report.skipped_infeasible.append(entry)
            return
        if result["classification_gap"]:
            raise ClassificationGapError(result["classification_gap"])
        if result["passed"]:
            report.passes += 1
        else:
            report.failures.append(
                {
                    "generators": result["generators"],
                    "mismatches": result["mismatches"],
                }
            )
        report.classification_pairs += result["class_pairs"]
        for ty, n in result["class_types"].items():
            report.unmatched_by_type[ty] += n

    if jobs <= 1:
        for a in args:
            if deadline_s is not None and time.monotonic() - start > deadline_s:
                report.completed = False
                break
            consume(_member_report(a))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pending = pool.map(_member_report, args, chunksize=4)
            for result in pending:
                if (
                    deadline_s is not None
                    and time.monotonic() - start > deadline_s
                ):
                    report.completed = False
                    break
                consume(result)

    report.failures.sort(key=lambda f: f["generators"])
    report.prop_failures.sort(key=lambda f: f["generators"])
    report.skipped_infeasible.sort(key=lambda f: f["generators"])
    report.elapsed_s = time.monotonic() - start
    return report
