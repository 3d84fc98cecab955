"""Self-duality criteria for (extended) GRS codes and independent checks.

The criteria work on the L-values of the evaluation points alone: a GRS
code is self-dual once every ``lam * L_a(a_i)`` is a square, and an
extended code once every ``-L_a(a_i)`` is a square.  The verifiers never
look at L-values; they test orthogonality and distance directly on the
generator matrix.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .gf import FieldContext
from .grs import CodeSpec, generator_matrix, l_values
from .linalg import first_singular, gram, span_min_weight

__all__ = [
    "CriterionResult",
    "MdsCheck",
    "VerificationReport",
    "criterion_grs",
    "criterion_extended",
    "self_dual_code",
    "verify_self_dual",
    "min_distance_exhaustive",
    "verify_mds",
    "verify_code",
    "EXHAUSTIVE_LIMIT",
    "DEFAULT_BUDGET",
    "RANDOM_MINORS",
]

# largest q**k searched by min_distance_exhaustive
EXHAUSTIVE_LIMIT = 10**6
DEFAULT_BUDGET = 10**5
RANDOM_MINORS = 1000

PROVED_EXHAUSTIVE = "proved_exhaustive"
PROVED_MINORS = "proved_minors"
STRUCTURAL_ONLY = "structural_only"
REFUTED = "refuted"


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of a self-duality criterion.

    ``lam`` is set only for the non-extended criterion.  On failure
    ``witness_index`` is the first point whose L-value breaks the condition.
    """

    success: bool
    lam: Optional[int] = None
    multipliers: tuple[int, ...] = ()
    witness_index: Optional[int] = None


def criterion_grs(ctx: FieldContext, points: Sequence[int]) -> CriterionResult:
    """Find ``lam`` and multipliers making ``GRS_{n/2}(a, v)`` self-dual.

    Succeeds iff all L-values share one quadratic character.  ``lam`` is 1
    when they are squares and the smallest nonsquare otherwise; each
    ``v_i`` is the inverse of the smaller square root of ``lam * L_a(a_i)``.
    """
    if len(points) % 2 or len(points) < 2:
        raise ValueError(f"GRS criterion needs an even number of points, got {len(points)}")
    ls = l_values(ctx, points)
    first = ctx.quadratic_char(ls[0])
    for i, x in enumerate(ls):
        if ctx.quadratic_char(x) != first:
            return CriterionResult(False, witness_index=i)
    lam = 1 if first == 1 else ctx.nonsquare
    mult = tuple(ctx.inv(ctx.sqrt(ctx.mul(lam, x))) for x in ls)
    return CriterionResult(True, lam=lam, multipliers=mult)


def criterion_extended(ctx: FieldContext, points: Sequence[int]) -> CriterionResult:
    """Multipliers making ``GRS_{n/2}(a, v, inf)`` self-dual, if every ``-L_a(a_i)`` is a square."""
    if len(points) % 2 == 0:
        raise ValueError(
            f"extended criterion needs an odd number of finite points, got {len(points)}"
        )
    mult = []
    for i, x in enumerate(l_values(ctx, points)):
        w = ctx.sqrt(ctx.neg(x))
        if w is None:
            return CriterionResult(False, witness_index=i)
        mult.append(ctx.inv(w))
    return CriterionResult(True, multipliers=tuple(mult))


def self_dual_code(
    ctx: FieldContext, points: Sequence[int], extended: bool = False
) -> tuple[CodeSpec, CriterionResult]:
    """Run the matching criterion and assemble the code; raises if it fails."""
    crit = criterion_extended(ctx, points) if extended else criterion_grs(ctx, points)
    if not crit.success:
        raise ArithmeticError(f"self-duality criterion fails at point index {crit.witness_index}")
    n = len(points) + (1 if extended else 0)
    code = CodeSpec(ctx.spec, n // 2, tuple(points), crit.multipliers, extended)
    return code, crit


def verify_self_dual(ctx: FieldContext, code: CodeSpec) -> bool:
    """True iff ``n`` is even, ``k = n/2`` and ``G G^T = 0``."""
    if code.n % 2 or 2 * code.k != code.n:
        return False
    G = generator_matrix(ctx, code)
    return all(x == 0 for row in gram(ctx, G, G) for x in row)


def min_distance_exhaustive(ctx: FieldContext, code: CodeSpec) -> int:
    if code.k == 0:
        raise ValueError("the zero code has no minimum distance")
    if ctx.q**code.k > EXHAUSTIVE_LIMIT:
        raise ValueError(f"q^k = {ctx.q}^{code.k} exceeds the exhaustive limit {EXHAUSTIVE_LIMIT}")
    return span_min_weight(ctx, generator_matrix(ctx, code))[0]


@dataclass(frozen=True)
class MdsCheck:
    verdict: str
    min_distance: Optional[int] = None
    checked_minors: int = 0
    witness: Optional[dict] = None


def verify_mds(
    ctx: FieldContext,
    code: CodeSpec,
    budget: int = DEFAULT_BUDGET,
    mode: str = "auto",
    random_minors: int = RANDOM_MINORS,
    seed: int = 0,
) -> MdsCheck:
    """Check that ``d = n - k + 1``.

    ``mode`` is one of ``exhaustive``, ``minors``, ``structural`` or
    ``auto``.  Auto searches all codewords when ``q**k <= 10**6``, else all
    ``k x k`` column minors when there are at most ``budget`` of them, else
    falls back to the GRS structure and samples ``random_minors`` minors.
    """
    if mode not in ("auto", "exhaustive", "minors", "structural"):
        raise ValueError(f"unknown MDS mode {mode!r}")
    n, k = code.n, code.k
    pts = code.points
    if len(set(pts)) != len(pts):
        i, j = next((i, j) for i, j in itertools.combinations(range(len(pts)), 2) if pts[i] == pts[j])
        return MdsCheck(REFUTED, witness={"repeated_point": [i, j]})
    zero = [i for i, v in enumerate(code.multipliers) if v == 0]
    if zero:
        return MdsCheck(REFUTED, witness={"zero_multiplier": zero[0]})
    if k == 0:
        return MdsCheck(STRUCTURAL_ONLY)

    if mode in ("auto", "exhaustive") and ctx.q**k <= EXHAUSTIVE_LIMIT:
        d, word = span_min_weight(ctx, generator_matrix(ctx, code))
        if d != n - k + 1:
            return MdsCheck(REFUTED, min_distance=d, witness={"codeword": word})
        return MdsCheck(PROVED_EXHAUSTIVE, min_distance=d)
    if mode == "exhaustive":
        raise ValueError(f"q^k = {ctx.q}^{k} too large for exhaustive search")

    G = generator_matrix(ctx, code)
    total = math.comb(n, k)
    if mode in ("auto", "minors") and total <= budget:
        col_sets = list(itertools.combinations(range(n), k))
        bad = first_singular(ctx, G, col_sets)
        if bad is not None:
            return MdsCheck(REFUTED, checked_minors=total, witness={"minor": list(col_sets[bad])})
        return MdsCheck(PROVED_MINORS, min_distance=n - k + 1, checked_minors=total)
    if mode == "minors":
        raise ValueError(f"{total} minors exceed the budget {budget}")

    rng = random.Random(seed)
    col_sets = [sorted(rng.sample(range(n), k)) for _ in range(random_minors)]
    bad = first_singular(ctx, G, col_sets)
    if bad is not None:
        return MdsCheck(REFUTED, checked_minors=random_minors, witness={"minor": col_sets[bad]})
    return MdsCheck(STRUCTURAL_ONLY, checked_minors=random_minors)


@dataclass(frozen=True)
class VerificationReport:
    self_dual: bool
    mds_verdict: str
    min_distance: Optional[int] = None
    checked_minors: int = 0
    n: int = 0
    k: int = 0
    q: int = 0
    witness: Optional[dict] = field(default=None)

    @property
    def ok(self) -> bool:
        return self.self_dual and self.mds_verdict != REFUTED

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "self_dual": self.self_dual,
            "mds_verdict": self.mds_verdict,
            "min_distance": self.min_distance,
            "checked_minors": self.checked_minors,
            "witness": self.witness,
        }


def verify_code(
    ctx: FieldContext, code: CodeSpec, mode: str = "auto", budget: int = DEFAULT_BUDGET
) -> VerificationReport:
    mds = verify_mds(ctx, code, budget=budget, mode=mode)
    return VerificationReport(
        self_dual=verify_self_dual(ctx, code),
        mds_verdict=mds.verdict,
        min_distance=mds.min_distance,
        checked_minors=mds.checked_minors,
        n=code.n,
        k=code.k,
        q=ctx.q,
        witness=mds.witness,
    )
