"""Explicit MDS self-dual (extended) GRS codes.

Four families, numbered 1-4:

1. ``q = r^2``, ``n = tm`` even with ``(q-1)/m`` even: points ``beta_z alpha^i``
   for a primitive ``m``-th root of unity ``alpha`` and ``t`` elements
   ``beta_z`` of F_r^* whose ``m``-th powers differ.
2. ``q = r^2``, ``tm`` odd: the same points, extended code of length ``tm + 1``.
3. ``q = r^2``, ``tm`` even: the same points plus ``0``, extended code of
   length ``tm + 2``.
4. ``q = p^mdeg``, ``2t | p - 1``, ``(q-1)/(2t)`` even, ``1 <= e < mdeg``:
   points ``omega^j + V`` with ``omega`` of order ``2t`` in F_p and ``V`` an
   ``e``-dimensional F_p-subspace meeting F_p only in 0.  Length ``2t p^e``.

In families 1-3, ``2 <= t <= (r-1)/gcd(r-1, m)`` and ``m | q - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Optional, Union

import sympy

from .duality import CriterionResult, self_dual_code
from .gf import FieldContext, field_create, prime_power
from .grs import CodeSpec

__all__ = [
    "ParameterError",
    "Theorem123Params",
    "Theorem4Params",
    "Construction",
    "lemma_ha",
    "coset_representatives",
    "subspace_v",
    "theorem123_points",
    "build_theorem1",
    "build_theorem2",
    "build_theorem3",
    "build_theorem4",
    "construct",
    "field_for",
    "theorem123_tuples",
    "theorem4_tuples",
]


class ParameterError(ValueError):
    """Construction parameters violate the family's hypotheses."""


def _split_prime_power(r: int, what: str) -> tuple[int, int]:
    pk = prime_power(r)
    if pk is None or pk[0] == 2:
        raise ParameterError(f"{what} = {r} is not an odd prime power")
    return pk


@dataclass(frozen=True)
class Theorem123Params:
    r: int
    m: int
    t: int
    variant: int  # 1, 2 or 3

    @property
    def q(self) -> int:
        return self.r * self.r

    @property
    def t_max(self) -> int:
        return (self.r - 1) // gcd(self.r - 1, self.m)

    @property
    def n(self) -> int:
        return self.t * self.m + (0, 0, 1, 2)[self.variant]

    def validate(self) -> None:
        _split_prime_power(self.r, "r")
        if self.variant not in (1, 2, 3):
            raise ParameterError(f"variant must be 1, 2 or 3, got {self.variant}")
        if self.m < 1 or (self.q - 1) % self.m:
            raise ParameterError(f"m = {self.m} does not divide q - 1 = {self.q - 1}")
        if not 2 <= self.t <= self.t_max:
            raise ParameterError(
                f"t = {self.t} outside 2 <= t <= (r-1)/gcd(r-1, m) = {self.t_max}"
            )
        tm = self.t * self.m
        if self.variant == 1:
            if ((self.q - 1) // self.m) % 2:
                raise ParameterError(f"(q-1)/m = {(self.q - 1) // self.m} is odd")
            if tm % 2:
                raise ParameterError(f"n = tm = {tm} is odd")
        elif self.variant == 2 and tm % 2 == 0:
            raise ParameterError(f"tm = {tm} is even")
        elif self.variant == 3 and tm % 2:
            raise ParameterError(f"tm = {tm} is odd")

    def as_dict(self) -> dict:
        return {"r": self.r, "m": self.m, "t": self.t}


@dataclass(frozen=True)
class Theorem4Params:
    p: int
    mdeg: int
    t: int
    e: int
    variant: int = field(default=4, init=False)

    @property
    def q(self) -> int:
        return self.p**self.mdeg

    @property
    def n(self) -> int:
        return 2 * self.t * self.p**self.e

    def validate(self, allow_e0: bool = False) -> None:
        if self.p < 3 or not sympy.isprime(self.p):
            raise ParameterError(f"p = {self.p} is not an odd prime")
        if self.mdeg < 1:
            raise ParameterError(f"mdeg = {self.mdeg} must be positive")
        if self.t < 1 or (self.p - 1) % (2 * self.t):
            raise ParameterError(f"2t = {2 * self.t} does not divide p - 1 = {self.p - 1}")
        lo = 0 if allow_e0 else 1
        if not lo <= self.e < self.mdeg:
            raise ParameterError(f"e = {self.e} outside {lo} <= e < mdeg = {self.mdeg}")
        if ((self.q - 1) // (2 * self.t)) % 2:
            raise ParameterError(f"(q-1)/(2t) = {(self.q - 1) // (2 * self.t)} is odd")

    def as_dict(self) -> dict:
        return {"p": self.p, "mdeg": self.mdeg, "t": self.t, "e": self.e}


Params = Union[Theorem123Params, Theorem4Params]


def lemma_ha(ctx: FieldContext, m: int, i: int) -> int:
    """``m * alpha^{-i}`` for the canonical primitive ``m``-th root of unity.

    This is the value of ``prod_{j != i} (alpha^i - alpha^j)`` over
    ``1 <= j <= m``.
    """
    alpha = ctx.root_of_unity(m)
    if not 1 <= i <= m:
        raise ValueError(f"index {i} outside 1..{m}")
    return ctx.mul(ctx.from_int(m), ctx.pow(alpha, -i))


def coset_representatives(ctx: FieldContext, r: int, m: int, t: int) -> list[int]:
    """``h^0, ..., h^{t-1}`` for ``h`` generating F_r^*.

    Their ``m``-th powers are pairwise distinct whenever
    ``t <= (r-1)/gcd(r-1, m)``.
    """
    if ctx.q != r * r:
        raise ParameterError(f"field has order {ctx.q}, expected r^2 = {r * r}")
    if not 1 <= t <= (r - 1) // gcd(r - 1, m):
        raise ParameterError(f"t = {t} outside 1..{(r - 1) // gcd(r - 1, m)}")
    h = ctx.subfield_generator(r)
    return [ctx.pow(h, z) for z in range(t)]


def theorem123_points(ctx: FieldContext, r: int, m: int, t: int) -> list[int]:
    """``beta_z alpha^i`` in block order: ``z`` outer, ``i = 1..m`` inner."""
    alpha = ctx.root_of_unity(m)
    betas = coset_representatives(ctx, r, m, t)
    powers = [ctx.pow(alpha, i) for i in range(1, m + 1)]
    return [ctx.mul(b, a) for b in betas for a in powers]


def subspace_v(ctx: FieldContext, p: int, mdeg: int, e: int) -> list[int]:
    """Elements of the F_p-span of ``x, ..., x^e``, in increasing code order."""
    if ctx.p != p or ctx.m != mdeg:
        raise ParameterError(f"field is F_{ctx.p}^{ctx.m}, expected F_{p}^{mdeg}")
    if not 0 <= e < mdeg:
        raise ParameterError(f"e = {e} outside 0 <= e < mdeg = {mdeg}")
    # digit 0 zero, digits 1..e free
    return [p * j for j in range(p**e)]


@dataclass(frozen=True)
class Construction:
    ctx: FieldContext
    params: Params
    code: CodeSpec
    criterion: CriterionResult

    @property
    def lam(self) -> Optional[int]:
        return self.criterion.lam


def _require_field(ctx: FieldContext, q: int) -> None:
    if ctx.q != q:
        raise ParameterError(f"field has order {ctx.q}, parameters need q = {q}")


def _build123(ctx: FieldContext, params: Theorem123Params, variant: int) -> Construction:
    if params.variant != variant:
        raise ParameterError(f"parameters are tagged for family {params.variant}, not {variant}")
    params.validate()
    _require_field(ctx, params.q)
    points = theorem123_points(ctx, params.r, params.m, params.t)
    if variant == 3:
        points = [0] + points
    code, crit = self_dual_code(ctx, points, extended=variant != 1)
    return Construction(ctx, params, code, crit)


def _build4(ctx: FieldContext, params: Theorem4Params, allow_e0: bool = False) -> Construction:
    params.validate(allow_e0=allow_e0)
    _require_field(ctx, params.q)
    if ctx.p != params.p:
        raise ParameterError(f"field characteristic {ctx.p} differs from p = {params.p}")
    prime_gen = ctx.subfield_generator(params.p)
    omega = ctx.pow(prime_gen, (params.p - 1) // (2 * params.t))
    V = subspace_v(ctx, params.p, params.mdeg, params.e)
    points = [ctx.add(ctx.pow(omega, j), v) for j in range(2 * params.t) for v in V]
    code, crit = self_dual_code(ctx, points)
    return Construction(ctx, params, code, crit)


def build_theorem1(ctx: FieldContext, params: Theorem123Params) -> CodeSpec:
    return _build123(ctx, params, 1).code


def build_theorem2(ctx: FieldContext, params: Theorem123Params) -> CodeSpec:
    return _build123(ctx, params, 2).code


def build_theorem3(ctx: FieldContext, params: Theorem123Params) -> CodeSpec:
    return _build123(ctx, params, 3).code


def build_theorem4(ctx: FieldContext, params: Theorem4Params) -> CodeSpec:
    return _build4(ctx, params).code


def field_for(params: Params) -> FieldContext:
    if isinstance(params, Theorem4Params):
        params.validate(allow_e0=True)
        return field_create(params.p, params.mdeg)
    p, d = _split_prime_power(params.r, "r")
    return field_create(p, 2 * d)


def construct(params: Params, allow_e0: bool = False) -> Construction:
    """Validate ``params``, build the field and the code."""
    if isinstance(params, Theorem4Params):
        params.validate(allow_e0=allow_e0)
        return _build4(field_for(params), params, allow_e0=allow_e0)
    params.validate()
    return _build123(field_for(params), params, params.variant)


def theorem123_tuples(q: int) -> Iterator[Theorem123Params]:
    """Every admissible family 1-3 parameter set for field order ``q``."""
    pk = prime_power(q)
    if pk is None or pk[0] == 2 or pk[1] % 2:
        return
    p, k = pk
    r = p ** (k // 2)
    for m in sympy.divisors(q - 1):
        t_max = (r - 1) // gcd(r - 1, m)
        for t in range(2, t_max + 1):
            tm = t * m
            if tm % 2 == 0:
                if ((q - 1) // m) % 2 == 0:
                    yield Theorem123Params(r, m, t, 1)
                yield Theorem123Params(r, m, t, 3)
            else:
                yield Theorem123Params(r, m, t, 2)


def theorem4_tuples(q: int, include_e0: bool = False) -> Iterator[Theorem4Params]:
    pk = prime_power(q)
    if pk is None or pk[0] == 2:
        return
    p, mdeg = pk
    for t in range(1, (p - 1) // 2 + 1):
        if (p - 1) % (2 * t) or ((q - 1) // (2 * t)) % 2:
            continue
        for e in range(0 if include_e0 else 1, mdeg):
            yield Theorem4Params(p, mdeg, t, e)
