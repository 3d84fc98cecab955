"""Generalized Reed-Solomon codes and their one-point extensions.

A code is described by its evaluation points ``a``, nonzero column
multipliers ``v`` and dimension ``k``.  Codewords are
``(v_1 f(a_1), ..., v_n f(a_n))`` for ``deg f < k``; the extended code
appends the coefficient ``f_{k-1}`` as a final coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf import FieldContext, FieldSpec
from .linalg import Matrix, rank

__all__ = [
    "CodeSpec",
    "l_value",
    "l_values",
    "dual_multipliers",
    "generator_matrix",
    "encode",
    "horner",
    "rank",
]


@dataclass(frozen=True)
class CodeSpec:
    """A (possibly extended) GRS code.

    ``points`` and ``multipliers`` are element codes with 0-based indices.
    Distinctness of the points and nonvanishing of the multipliers are
    checked by the verifiers rather than here, so that malformed codes can
    still be loaded and refuted.
    """

    field: FieldSpec
    k: int
    points: tuple[int, ...]
    multipliers: tuple[int, ...]
    extended: bool = False

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(int(a) for a in self.points))
        object.__setattr__(self, "multipliers", tuple(int(v) for v in self.multipliers))
        if len(self.points) != len(self.multipliers):
            raise ValueError(
                f"{len(self.points)} points but {len(self.multipliers)} multipliers"
            )
        if not self.points:
            raise ValueError("a code needs at least one evaluation point")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"dimension k = {self.k} outside [0, {self.n}]")
        q = self.field.q
        if any(not 0 <= x < q for x in self.points + self.multipliers):
            raise ValueError(f"element code outside [0, {q})")

    @property
    def n(self) -> int:
        return len(self.points) + (1 if self.extended else 0)

    def is_well_formed(self) -> bool:
        return len(set(self.points)) == len(self.points) and all(self.multipliers)


def _check_points(points: Sequence[int]) -> None:
    if len(points) < 2:
        raise ValueError("L_a needs at least two evaluation points")


def l_value(ctx: FieldContext, points: Sequence[int], i: int) -> int:
    """Product of ``points[i] - points[j]`` over all ``j != i``."""
    _check_points(points)
    if not 0 <= i < len(points):
        raise IndexError(f"point index {i} out of range for {len(points)} points")
    ai = points[i]
    out = 1
    for j, aj in enumerate(points):
        if j != i:
            out = ctx.mul(out, ctx.sub(ai, aj))
    return out


def l_values(ctx: FieldContext, points: Sequence[int]) -> list[int]:
    # a single point gets the empty product
    if len(points) == 1:
        return [1]
    return [l_value(ctx, points, i) for i in range(len(points))]


def dual_multipliers(ctx: FieldContext, points: Sequence[int]) -> list[int]:
    """Multipliers ``u_i = L_a(a_i)^{-1}`` of the dual of ``GRS_k(a, 1)``.

    For the extended code ``GRS_k(a, 1, inf)`` the dual is
    ``GRS_{n-k}(a, u, inf)`` with its infinity coordinate negated: the two
    top-degree rows meet with inner product ``1 + 1`` otherwise.
    """
    _check_points(points)
    return [ctx.inv(x) for x in l_values(ctx, points)]


def horner(ctx: FieldContext, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def generator_matrix(ctx: FieldContext, code: CodeSpec) -> Matrix:
    """``k x n`` matrix with row ``i`` equal to ``(v_j a_j^i)_j``.

    Extended codes get a last column ``(0, ..., 0, 1)^T``.
    """
    rows = []
    cur = list(code.multipliers)
    for i in range(code.k):
        row = list(cur)
        if code.extended:
            row.append(1 if i == code.k - 1 else 0)
        rows.append(row)
        cur = [ctx.mul(c, a) for c, a in zip(cur, code.points)]
    return rows


def encode(ctx: FieldContext, code: CodeSpec, msg: Sequence[int]) -> list[int]:
    if len(msg) != code.k:
        raise ValueError(f"message has length {len(msg)}, expected k = {code.k}")
    word = [ctx.mul(v, horner(ctx, msg, a)) for a, v in zip(code.points, code.multipliers)]
    if code.extended:
        word.append(msg[-1] if code.k else 0)
    return word
