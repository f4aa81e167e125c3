"""Arithmetic in GF(p^r) = F_p[x] / (f) for an odd prime p.

Elements are integers ``0 .. p**r - 1`` whose base-p digits are the
polynomial coefficients, least significant digit = constant term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from hrg.errors import InternalInconsistency, PreconditionError

Poly = tuple[int, ...]  # coefficients, constant term first, no trailing zeros


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _trim(a) -> Poly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return _trim(((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n))


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        coef = a[shift + len(b) - 1] * inv_lead % p
        q[shift] = coef
        if coef:
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - coef * y) % p
    return _trim(q), _trim(a)


def poly_mod(a: Poly, b: Poly, p: int) -> Poly:
    return poly_divmod(a, b, p)[1]


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, poly_mod(a, b, p)
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple(x * inv % p for x in a)


def poly_powmod(a: Poly, e: int, f: Poly, p: int) -> Poly:
    result: Poly = (1,)
    a = poly_mod(a, f, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, a, p), f, p)
        a = poly_mod(poly_mul(a, a, p), f, p)
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]


def is_irreducible(f: Poly, p: int) -> bool:
    """Rabin's test: x^(p^r) = x mod f and gcd(x^(p^(r/q)) - x, f) = 1 for primes q | r."""
    r = len(f) - 1
    if r < 1:
        return False
    if r == 1:
        return True
    x: Poly = (0, 1)
    if poly_sub(poly_powmod(x, p ** r, f, p), x, p):
        return False
    for q in _prime_factors(r):
        h = poly_sub(poly_powmod(x, p ** (r // q), f, p), x, p)
        if len(poly_gcd(f, h, p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, r: int) -> Poly:
    """First monic irreducible of degree r with (c_{r-1}, ..., c_0) in lexicographic order."""
    for high_first in product(range(p), repeat=r):
        f = tuple(reversed(high_first)) + (1,)
        if is_irreducible(f, p):
            return f
    raise InternalInconsistency(f"no irreducible polynomial of degree {r} over F_{p}")


@dataclass(frozen=True)
class FiniteField:
    p: int
    r: int
    modulus: Poly = field(repr=True)

    @property
    def order(self) -> int:
        return self.p ** self.r

    def to_poly(self, z: int) -> Poly:
        out = []
        for _ in range(self.r):
            z, d = divmod(z, self.p)
            out.append(d)
        return _trim(out)

    def from_poly(self, a: Poly) -> int:
        return sum(c * self.p ** i for i, c in enumerate(a))

    def add(self, x: int, y: int) -> int:
        return self.from_poly(_trim((a + b) % self.p for a, b in zip(self._digits(x), self._digits(y))))

    def sub(self, x: int, y: int) -> int:
        return self.from_poly(_trim((a - b) % self.p for a, b in zip(self._digits(x), self._digits(y))))

    def mul(self, x: int, y: int) -> int:
        return self.from_poly(poly_mod(poly_mul(self.to_poly(x), self.to_poly(y), self.p), self.modulus, self.p))

    def pow(self, x: int, e: int) -> int:
        return self.from_poly(poly_powmod(self.to_poly(x), e, self.modulus, self.p))

    def inv(self, x: int) -> int:
        """Inverse via the extended Euclidean algorithm on polynomials."""
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        p = self.p
        r0, r1 = self.modulus, self.to_poly(x)
        s0, s1 = (), (1,)
        while r1:
            q, rem = poly_divmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, p), p)
        c = pow(r0[0], -1, p)
        return self.from_poly(tuple(v * c % p for v in s0))

    def norm(self, z: int) -> int:
        """Norm to F_p, z^((p^r - 1)/(p - 1)); returned as an integer in 0..p-1."""
        w = self.to_poly(self.pow(z, (self.order - 1) // (self.p - 1)))
        if len(w) > 1:
            raise InternalInconsistency(f"norm of {z} is not in the prime field: {w}")
        return w[0] if w else 0

    def _digits(self, z: int) -> list[int]:
        out = []
        for _ in range(self.r):
            z, d = divmod(z, self.p)
            out.append(d)
        return out

    @cached_property
    def digits(self) -> np.ndarray:
        """``digits[z]`` = coefficient vector of element z (shape q x r)."""
        z = np.arange(self.order)
        return np.stack([(z // self.p ** i) % self.p for i in range(self.r)], axis=1)

    @cached_property
    def norms(self) -> np.ndarray:
        return np.array([self.norm(z) for z in range(self.order)], dtype=np.int64)

    def difference_table(self) -> np.ndarray:
        """``table[x, y]`` = the element y - x."""
        diff = (self.digits[None, :, :] - self.digits[:, None, :]) % self.p
        weights = self.p ** np.arange(self.r)
        return diff @ weights

    def norm_kernel(self) -> list[int]:
        return [z for z in range(1, self.order) if self.norms[z] == 1]


def gf(p: int, r: int) -> FiniteField:
    if p % 2 == 0:
        raise PreconditionError(f"characteristic must be odd, got {p}")
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if r < 1:
        raise PreconditionError(f"extension degree must be >= 1, got {r}")
    f = FiniteField(p, r, smallest_irreducible(p, r))
    _spot_check(f)
    return f


def _spot_check(f: FiniteField) -> None:
    step = max(1, (f.order - 1) // 64)
    for a in range(1, f.order, step):
        if f.mul(a, f.inv(a)) != 1:
            raise InternalInconsistency(f"{a} * {a}^-1 != 1 in GF({f.p}^{f.r})")
    expected = (f.order - 1) // (f.p - 1)
    if len(f.norm_kernel()) != expected:
        raise InternalInconsistency(f"norm kernel has {len(f.norm_kernel())} elements, expected {expected}")
