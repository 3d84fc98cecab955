"""Census of even lengths admitting MDS self-dual codes over F_q.

Two rule sets are compared for a fixed odd prime power ``q``:

* ``new`` -- the four explicit families of :mod:`grsdual.construct`;
* ``known`` -- earlier existence results, as arithmetic conditions on ``n``.

Only parameter existence is checked.  Each length in the ``new`` rules
keeps one witnessing parameter set so that it can be built on demand.
Quadratic-character conditions on integers are evaluated on their image
in the prime subfield of F_q.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

import sympy

from .construct import Params, theorem4_tuples, theorem123_tuples
from .gf import FieldContext, field_create, prime_power

__all__ = [
    "CensusOptions",
    "CensusRule",
    "CensusReport",
    "CensusError",
    "NEW_RULES",
    "KNOWN_RULES",
    "enumerate_new",
    "enumerate_known",
    "compare",
    "sweep_conventions",
]

LENGTH_CAPS = ("q+1", "q", "q-1")


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusOptions:
    """Counting conventions.

    ``include_e0`` admits ``e = 0`` in family 4, ``include_n2`` counts the
    trivial length 2, and ``length_cap`` bounds ``n`` by ``q + 1``, ``q`` or
    ``q - 1``.
    """

    include_e0: bool = False
    include_n2: bool = True
    length_cap: str = "q+1"

    def __post_init__(self):
        if self.length_cap not in LENGTH_CAPS:
            raise CensusError(f"length_cap must be one of {LENGTH_CAPS}")

    def bounds(self, q: int) -> tuple[int, int]:
        hi = {"q+1": q + 1, "q": q, "q-1": q - 1}[self.length_cap]
        return (2 if self.include_n2 else 4), hi


@dataclass(frozen=True)
class CensusRule:
    id: str
    source: str  # "known" or "new"
    description: str


@dataclass
class _Field:
    """What the rules need to know about q."""

    q: int
    p: int
    k: int
    ctx: FieldContext

    def eta(self, n: int) -> int:
        return self.ctx.quadratic_char(self.ctx.from_int(n))

    def decompositions(self, min_s: int = 1) -> Iterator[tuple[int, int]]:
        """Pairs ``(r, s)`` with ``q = r**s``, ``r`` a power of ``p``."""
        for s in sympy.divisors(self.k):
            if s >= min_s:
                yield self.p ** (self.k // s), s

    def square_root(self):
        return self.p ** (self.k // 2) if self.k % 2 == 0 else None


def _odd_prime_powers_dividing(x: int, residue: int) -> Iterator[int]:
    """``l**a`` dividing ``x`` with ``l`` prime, ``l = residue (mod 4)``, ``a`` odd."""
    for ell, mult in sympy.factorint(x).items():
        if ell % 4 == residue:
            for a in range(1, mult + 1, 2):
                yield ell**a


# --- rules from earlier work; each yields candidate lengths ---


def _ga_q_plus_1(F):
    yield F.q + 1


def _yan_n_minus_1(F):
    for d in sympy.divisors(F.q - 1):
        n = d + 1
        if F.eta(1 - n) == 1:
            yield n


def _yan_n_minus_2(F):
    for d in sympy.divisors(F.q - 1):
        n = d + 2
        if F.eta(2 - n) == 1:
            yield n


def _gue_3mod4(F):
    if F.q % 4 == 3:
        for x in _odd_prime_powers_dividing(F.q - 1, 3):
            yield x + 1


def _gue_1mod4(F):
    if any(r % 4 == 1 and s % 2 == 1 for r, s in F.decompositions()):
        for x in _odd_prime_powers_dividing(F.q - 1, 1):
            yield x + 1


def _yan_lr_2l(F):
    for r, _ in F.decompositions(min_s=2):
        for ell in range(2, r, 2):
            if (r - 1) % (2 * ell) == 0:
                yield ell * r


def _yan_lr_lm1(F):
    for r, _ in F.decompositions(min_s=2):
        for d in sympy.divisors(r - 1):
            ell = d + 1
            if ell % 2 == 0 and F.eta(1 - ell) == 1:
                yield ell * r


def _yan_lr1_l(F):
    for r, _ in F.decompositions(min_s=2):
        for ell in sympy.divisors(r - 1):
            if ell % 2 and F.eta(ell) == 1:
                yield ell * r + 1


def _yan_lr1_lm1(F):
    if F.eta(-1) != 1:
        return
    for r, _ in F.decompositions(min_s=2):
        for d in sympy.divisors(r - 1):
            ell = d + 1
            if ell % 2 and F.eta(ell - 1) == 1:
                yield ell * r + 1


def _jx_n_le_r(F):
    r = F.square_root()
    if r:
        yield from range(2, r + 1)


def _jx_2tr(F):
    r = F.square_root()
    if r and r % 4 == 3:
        for t in range(1, (r - 1) // 2 + 1):
            yield 2 * t * r


def _yan_tr(F):
    r = F.square_root()
    if r:
        for t in range(2, r + 1, 2):
            yield t * r


def _yan_tr1(F):
    r = F.square_root()
    if r:
        for t in range(1, r + 1, 2):
            yield t * r + 1


def _yan_n_div(F):
    if F.q % 4 == 1:
        for n in sympy.divisors(F.q - 1):
            if n < F.q - 1:
                yield n


def _jx_4n(F):
    if F.q % 4 == 1:
        n = 2
        while 4**n * n * n <= F.q:
            yield n
            n += 2


def _yan_pa1(F):
    for a in sympy.divisors(F.k):
        yield F.p**a + 1


def _yan_2pe(F):
    if F.eta(-1) == 1:
        for e in range(1, F.k):
            yield 2 * F.p**e


KNOWN_RULES: list[tuple[CensusRule, Callable]] = [
    (CensusRule("ga_q_plus_1", "known", "n = q + 1"), _ga_q_plus_1),
    (CensusRule("yan_n_minus_1", "known", "(n-1) | (q-1), eta(1-n) = 1"), _yan_n_minus_1),
    (CensusRule("yan_n_minus_2", "known", "(n-2) | (q-1), eta(2-n) = 1"), _yan_n_minus_2),
    (
        CensusRule(
            "gue_3mod4",
            "known",
            "q = 3 (mod 4), n-1 = l^a | (q-1), prime l = 3 (mod 4), a odd",
        ),
        _gue_3mod4,
    ),
    (
        CensusRule(
            "gue_1mod4",
            "known",
            "q = r^s, r = 1 (mod 4), s odd, n-1 = l^a | (q-1), prime l = 1 (mod 4), a odd",
        ),
        _gue_1mod4,
    ),
    (CensusRule("yan_lr_2l", "known", "q = r^s, s >= 2, n = lr, l even, 2l | (r-1)"), _yan_lr_2l),
    (
        CensusRule(
            "yan_lr_lm1", "known", "q = r^s, s >= 2, n = lr, l even, (l-1) | (r-1), eta(1-l) = 1"
        ),
        _yan_lr_lm1,
    ),
    (
        CensusRule("yan_lr1_l", "known", "q = r^s, s >= 2, n = lr+1, l odd, l | (r-1), eta(l) = 1"),
        _yan_lr1_l,
    ),
    (
        CensusRule(
            "yan_lr1_lm1",
            "known",
            "q = r^s, s >= 2, n = lr+1, l odd, (l-1) | (r-1), eta(l-1) = eta(-1) = 1",
        ),
        _yan_lr1_lm1,
    ),
    (CensusRule("jx_n_le_r", "known", "q = r^2, n <= r"), _jx_n_le_r),
    (CensusRule("jx_2tr", "known", "q = r^2, r = 3 (mod 4), n = 2tr, t <= (r-1)/2"), _jx_2tr),
    (CensusRule("yan_tr", "known", "q = r^2, n = tr, t even, 1 <= t <= r"), _yan_tr),
    (CensusRule("yan_tr1", "known", "q = r^2, n = tr+1, t odd, 1 <= t <= r"), _yan_tr1),
    (CensusRule("yan_n_div", "known", "q = 1 (mod 4), n | (q-1), n < q-1"), _yan_n_div),
    (CensusRule("jx_4n", "known", "q = 1 (mod 4), 4^n n^2 <= q"), _jx_4n),
    (CensusRule("yan_pa1", "known", "q = p^k, n = p^a + 1, a | k"), _yan_pa1),
    (CensusRule("yan_2pe", "known", "q = p^k, n = 2p^e, 1 <= e < k, eta(-1) = 1"), _yan_2pe),
]

NEW_RULES: list[CensusRule] = [
    CensusRule("T1", "new", "q = r^2, n = tm, 2 <= t <= (r-1)/gcd(r-1,m), (q-1)/m and n even"),
    CensusRule("T2", "new", "q = r^2, n = tm+1, tm odd, 2 <= t <= (r-1)/gcd(r-1,m), m | (q-1)"),
    CensusRule("T3", "new", "q = r^2, n = tm+2, tm even, 2 <= t <= (r-1)/gcd(r-1,m), m | (q-1)"),
    CensusRule("T4", "new", "q = p^mdeg, n = 2tp^e, 2t | (p-1), e < mdeg, (q-1)/(2t) even"),
]


def _field(q: int) -> _Field:
    pk = prime_power(q)
    if pk is None:
        raise CensusError(f"q = {q} is not a prime power")
    if pk[0] == 2:
        raise CensusError(f"q = {q} is even")
    return _Field(q, pk[0], pk[1], field_create(*pk))


def _admissible(n: int, lo: int, hi: int) -> bool:
    return n % 2 == 0 and lo <= n <= hi


def enumerate_new(q: int, options: CensusOptions = CensusOptions()) -> dict[str, dict[int, Params]]:
    """Lengths from families 1-4, each with its first witnessing parameters."""
    _field(q)
    lo, hi = options.bounds(q)
    out: dict[str, dict[int, Params]] = {rule.id: {} for rule in NEW_RULES}
    params = list(theorem123_tuples(q)) + list(theorem4_tuples(q, include_e0=options.include_e0))
    for P in params:
        if _admissible(P.n, lo, hi):
            out[f"T{P.variant}"].setdefault(P.n, P)
    return {rid: dict(sorted(d.items())) for rid, d in out.items()}


def enumerate_known(q: int, options: CensusOptions = CensusOptions()) -> dict[str, list[int]]:
    F = _field(q)
    lo, hi = options.bounds(q)
    return {
        rule.id: sorted({n for n in fn(F) if _admissible(n, lo, hi)}) for rule, fn in KNOWN_RULES
    }


@dataclass
class CensusReport:
    q: int
    options: CensusOptions
    rules: list[dict] = field(default_factory=list)
    union_new: list[int] = field(default_factory=list)
    union_known: list[int] = field(default_factory=list)

    @property
    def count_new(self) -> int:
        return len(self.union_new)

    @property
    def count_known(self) -> int:
        return len(self.union_known)

    @property
    def new_only(self) -> list[int]:
        return sorted(set(self.union_new) - set(self.union_known))

    @property
    def known_only(self) -> list[int]:
        return sorted(set(self.union_known) - set(self.union_new))

    def rule_lengths(self, rule_id: str) -> list[int]:
        return next(r["lengths"] for r in self.rules if r["id"] == rule_id)

    def as_dict(self) -> dict:
        return {
            "format_version": 1,
            "q": self.q,
            "options": asdict(self.options),
            "count_new": self.count_new,
            "count_known": self.count_known,
            "union_new": self.union_new,
            "union_known": self.union_known,
            "new_only": self.new_only,
            "known_only": self.known_only,
            "rules": self.rules,
        }

    def to_json(self) -> str:
        """Byte-stable JSON: one top-level key per line, one rule per line."""
        compact = {"separators": (", ", ": ")}
        lines = []
        for key, value in self.as_dict().items():
            if key == "rules":
                inner = ",\n".join(f"    {json.dumps(r, **compact)}" for r in value)
                lines.append(f'  "rules": [\n{inner}\n  ]' if value else '  "rules": []')
            else:
                lines.append(f"  {json.dumps(key)}: {json.dumps(value, **compact)}")
        return "{\n" + ",\n".join(lines) + "\n}\n"


def _rule_entries(rules: list[CensusRule], lengths: dict[str, list[int]]) -> list[dict]:
    # lengths that no other rule in the same source produces
    entries = []
    for rule in rules:
        others = set()
        for other in rules:
            if other.id != rule.id:
                others.update(lengths[other.id])
        entries.append(
            {
                "id": rule.id,
                "source": rule.source,
                "description": rule.description,
                "count": len(lengths[rule.id]),
                "lengths": lengths[rule.id],
                "exclusive": [n for n in lengths[rule.id] if n not in others],
            }
        )
    return entries


def compare(q: int, options: CensusOptions = CensusOptions(), source: str = "both") -> CensusReport:
    """Run one or both rule sets and assemble the report.

    ``source`` is ``new``, ``known`` or ``both``; skipped sources leave
    their union empty.
    """
    if source not in ("new", "known", "both"):
        raise CensusError(f"unknown source {source!r}")
    _field(q)
    report = CensusReport(q, options)
    if source in ("new", "both"):
        new = {rid: sorted(d) for rid, d in enumerate_new(q, options).items()}
        report.rules += _rule_entries(NEW_RULES, new)
        report.union_new = sorted(set().union(*new.values()))
    if source in ("known", "both"):
        known = enumerate_known(q, options)
        report.rules += _rule_entries([r for r, _ in KNOWN_RULES], known)
        report.union_known = sorted(set().union(*known.values()))
    return report


def sweep_conventions(q: int, caps=("q+1", "q")) -> list[CensusReport]:
    """Reports for every combination of the counting flags (8 by default)."""
    out = []
    for cap in caps:
        for e0 in (False, True):
            for n2 in (True, False):
                out.append(compare(q, CensusOptions(include_e0=e0, include_n2=n2, length_cap=cap)))
    return out
