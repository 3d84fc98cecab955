"""Arithmetic in finite fields F_{p^m} of odd characteristic.

Elements are plain integers in ``[0, q)``.  The integer ``c`` encodes the
residue polynomial ``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` via
``c = sum(c_i * p**i)``, so the prime subfield F_p is exactly the codes
``0 .. p-1`` and ``0``/``1`` are the zero and unit elements.

The default modulus is the monic irreducible polynomial whose non-leading
coefficients have the smallest encoding, and the default generator is the
primitive element with the smallest code.  Both are found by exhaustive
scans, so contexts are reproducible without lookup tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np
import sympy

__all__ = [
    "FieldSpec",
    "FieldContext",
    "FieldError",
    "field_create",
    "field_from_order",
    "canonical_modulus",
    "is_irreducible",
]

# dense q x q add/mul tables are built below this size
TABLE_LIMIT = 1024
# log/antilog tables are built below this size
LOG_LIMIT = 1 << 16
MAX_ORDER = 1 << 31


class FieldError(ValueError):
    """Invalid field parameters or an undefined field operation."""


# --- polynomials over F_p, coefficient lists with constant term first ---


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    a = list(a)
    d = len(f) - 1
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            for j in range(d + 1):
                a[i - d + j] = (a[i - d + j] - c * f[j]) % p
    return _trim([c % p for c in a[:d]])


def _poly_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, f, p)


def _poly_powmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _poly_mod(a, monic, p)
    return a


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (constant term first)."""
    f = [c % p for c in coeffs]
    m = len(f) - 1
    if m < 1 or f[-1] != 1:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob(k: int) -> list[int]:
        # x^(p^k) mod f
        y = x
        for _ in range(k):
            y = _poly_powmod(y, p, f, p)
        return y

    if _poly_sub(frob(m), x, p):
        return False
    for ell in sympy.primefactors(m):
        g = _poly_gcd(f, _poly_sub(frob(m // ell), x, p), p)
        if len(g) != 1:
            return False
    return True


def canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    """Smallest-encoding monic irreducible polynomial of degree ``m`` over F_p."""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        coeffs = []
        c = code
        for _ in range(m):
            c, r = divmod(c, p)
            coeffs.append(r)
        if coeffs[0] == 0:
            continue
        f = tuple(coeffs) + (1,)
        if is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """Defining data of F_q = F_p[x]/(modulus)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m


class FieldContext:
    """Arithmetic context for one field.  Treat as immutable once built."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.q = spec.q
        self._f = list(spec.modulus)
        self.order_factors = tuple(sympy.primefactors(self.q - 1))
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        self.generator = self._find_generator()
        if self.m > 1 and self.q <= LOG_LIMIT:
            self._build_logs()
        self.add_table: Optional[np.ndarray] = None
        self.mul_table: Optional[np.ndarray] = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()
        self.nonsquare = self._find_nonsquare()

    def __repr__(self) -> str:
        return f"FieldContext(q={self.q}, p={self.p}, m={self.m}, modulus={self.spec.modulus})"

    # --- encoding ---

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def encode(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)[: self.m]):
            code = code * self.p + (c % self.p)
        return code

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    # --- arithmetic ---

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.add_table is not None:
            return int(self.add_table[a, b])
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return (-a) % self.p
        return self.encode([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self.encode(_poly_mulmod(self.digits(a), self.digits(b), self._f, self.p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.q)
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self.encode(_poly_powmod(self.digits(a), e, self._f, self.p))

    def prod(self, values) -> int:
        out = 1
        for v in values:
            out = self.mul(out, v)
        return out

    # --- multiplicative structure ---

    def element_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        order = self.q - 1
        for ell in self.order_factors:
            while order % ell == 0 and self.pow(a, order // ell) == 1:
                order //= ell
        return order

    def quadratic_char(self, a: int) -> int:
        if a == 0:
            return 0
        if self._log is not None:
            return 1 if self._log[a] % 2 == 0 else -1
        return 1 if self.pow(a, (self.q - 1) // 2) == 1 else -1

    def is_square(self, a: int) -> bool:
        return self.quadratic_char(a) >= 0

    def sqrt(self, a: int) -> Optional[int]:
        """Square root with the smaller code, or ``None`` for a nonsquare.

        Tonelli-Shanks in the multiplicative group, using the smallest
        nonsquare as the auxiliary element.
        """
        if a == 0:
            return 0
        if self.quadratic_char(a) != 1:
            return None
        s, odd = 0, self.q - 1
        while odd % 2 == 0:
            s, odd = s + 1, odd // 2
        c = self.pow(self.nonsquare, odd)
        x = self.pow(a, (odd + 1) // 2)
        t = self.pow(a, odd)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = self.mul(t2, t2)
                i += 1
            b = c
            for _ in range(s - i - 1):
                b = self.mul(b, b)
            x = self.mul(x, b)
            c = self.mul(b, b)
            t = self.mul(t, c)
            s = i
        return min(x, self.neg(x))

    def root_of_unity(self, m: int) -> int:
        """Primitive ``m``-th root of unity ``generator**((q-1)/m)``."""
        if m < 1 or (self.q - 1) % m:
            raise FieldError(f"{m} does not divide q - 1 = {self.q - 1}")
        return self.pow(self.generator, (self.q - 1) // m)

    def subfield_generator(self, r: int) -> int:
        """Generator of F_r^* inside F_q, for F_r a subfield."""
        d = _log_exact(r, self.p)
        if d is None or d < 1 or self.m % d:
            raise FieldError(f"F_{r} is not a subfield of F_{self.q}")
        return self.pow(self.generator, (self.q - 1) // (r - 1))

    # --- construction helpers ---

    def _find_generator(self) -> int:
        if self.q == 3:
            return 2
        for a in range(1, self.q):
            if all(self.pow(a, (self.q - 1) // ell) != 1 for ell in self.order_factors):
                return a
        raise FieldError("no primitive element found; modulus is not irreducible")

    def _find_nonsquare(self) -> int:
        for a in range(1, self.q):
            if self.quadratic_char(a) == -1:
                return a
        raise FieldError("field has no nonsquare")

    def _build_logs(self) -> None:
        exp = [0] * (self.q - 1)
        log = [0] * self.q
        g = self.digits(self.generator)
        cur = [1]
        for i in range(self.q - 1):
            code = self.encode(cur)
            exp[i] = code
            log[code] = i
            cur = _poly_mulmod(cur, g, self._f, self.p)
        self._exp, self._log = exp, log

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        codes = np.arange(q)
        digits = np.stack([(codes // p**i) % p for i in range(self.m)], axis=1)
        weights = p ** np.arange(self.m)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        if self.m == 1:
            mul = np.outer(codes, codes) % p
        else:
            exp = np.array(self._exp)
            log = np.array(self._log)
            mul = exp[(log[:, None] + log[None, :]) % (q - 1)]
            mul[0, :] = 0
            mul[:, 0] = 0
        dtype = np.int32
        self.add_table = add.astype(dtype)
        self.mul_table = mul.astype(dtype)
        self.neg_table = ((-digits) % p @ weights).astype(dtype)
        inv = np.zeros(q, dtype=dtype)
        for a in range(1, q):
            inv[a] = self.inv(a) if self.m > 1 else pow(a, -1, p)
        self.inv_table = inv


def _log_exact(r: int, p: int) -> Optional[int]:
    d, x = 0, 1
    while x < r:
        x *= p
        d += 1
    return d if x == r else None


@lru_cache(maxsize=64)
def _cached_context(p: int, m: int, modulus: tuple[int, ...]) -> FieldContext:
    return FieldContext(FieldSpec(p, m, modulus))


def field_create(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldContext:
    """Build (or fetch a cached) context for F_{p^m}.

    Without ``modulus`` the canonical smallest irreducible polynomial is
    used; prime fields use the degenerate modulus ``x``, written ``[0, 1]``.
    """
    if p < 3 or not sympy.isprime(p):
        raise FieldError(f"p = {p} is not an odd prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_ORDER:
        raise FieldError(f"q = {p}^{m} exceeds 2^31")
    if modulus is None:
        mod = canonical_modulus(p, m)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != m + 1:
            raise FieldError(f"modulus must have {m + 1} coefficients")
        if any(not 0 <= c < p for c in mod):
            raise FieldError("modulus coefficients must lie in [0, p)")
        if mod[-1] != 1:
            raise FieldError("modulus is not monic")
        if m > 1 and not is_irreducible(mod, p):
            raise FieldError("modulus is reducible over F_%d" % p)
    return _cached_context(p, m, mod)


def prime_power(q: int) -> Optional[tuple[int, int]]:
    """Return ``(p, k)`` with ``q = p**k`` for a prime ``p``, else ``None``."""
    if q < 2:
        return None
    f = sympy.factorint(q)
    if len(f) != 1:
        return None
    ((p, k),) = f.items()
    return p, k


def field_from_order(q: int) -> FieldContext:
    pk = prime_power(q)
    if pk is None:
        raise FieldError(f"{q} is not a prime power")
    return field_create(*pk)
