"""Dense polynomial and matrix helpers over a prime field F_p.

Polynomials are coefficient sequences, constant term first.  Matrices are
int64 numpy arrays with entries in ``[0, p)``.
"""

from __future__ import annotations

import numpy as np


def poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_sub(a, b, p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return poly_trim(out)


def poly_divmod(a, b, p: int) -> tuple[list[int], list[int]]:
    a = poly_trim([x % p for x in a])
    b = poly_trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv % p
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        poly_trim(a)
    return quot, a


def poly_gcd(a, b, p: int) -> list[int]:
    a = poly_trim([x % p for x in a])
    b = poly_trim([x % p for x in b])
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def poly_eval(a, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def reduction_matrix(modulus, p: int) -> np.ndarray:
    """Rows are x^d, ..., x^(2d-2) reduced modulo the monic ``modulus``."""
    d = len(modulus) - 1
    rows = np.zeros((max(d - 1, 0), d), dtype=np.int64)
    # x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
    cur = [(-c) % p for c in modulus[:d]]
    for r in range(d - 1):
        rows[r] = cur
        top = cur[-1]
        nxt = [0] + cur[:-1]
        cur = [(nxt[i] - top * modulus[i]) % p for i in range(d)]
    return rows


class PolyModRing:
    """Arithmetic in F_p[x]/(modulus) on int64 coefficient arrays."""

    def __init__(self, modulus, p: int):
        self.p = p
        self.modulus = tuple(int(c) % p for c in modulus)
        self.d = len(self.modulus) - 1
        self.red = reduction_matrix(self.modulus, p)
        for_overflow = self.d * self.d * (p - 1) ** 3
        self._reduce_hi = for_overflow >= 2**62

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        d, p = self.d, self.p
        if d == 1:
            return (a * b) % p
        z = np.convolve(a, b)
        hi = z[d:]
        if self._reduce_hi:
            hi = hi % p
            z = z % p
        return (z[:d] + hi @ self.red) % p

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = np.zeros(self.d, dtype=np.int64)
        result[0] = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def x_power(self, e: int) -> np.ndarray:
        x = np.zeros(self.d, dtype=np.int64)
        if self.d == 1:
            x[0] = (-self.modulus[0]) % self.p
        else:
            x[1] = 1
        return self.pow(x, e)


def is_irreducible(modulus, p: int) -> bool:
    """Ben-Or test: no factor of degree <= d/2 divides the monic ``modulus``."""
    d = len(modulus) - 1
    if d == 1:
        return True
    if modulus[0] % p == 0:
        return False
    if any(poly_eval(modulus, r, p) == 0 for r in range(p)):
        return False
    ring = PolyModRing(modulus, p)
    x = [0, 1]
    h = ring.x_power(p)
    for _ in range(1, d // 2 + 1):
        diff = poly_sub([int(c) for c in h], x, p)
        if len(poly_gcd(list(modulus), diff, p)) > 1:
            return False
        h = ring.pow(h, p)
    return True


def mat_pow(m: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(m.shape[0], dtype=np.int64)
    base = m % p
    while e:
        if e & 1:
            result = (result @ base) % p
        e >>= 1
        if e:
            base = (base @ base) % p
    return result


def row_reduce(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns of ``m`` over F_p."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        for o in others:
            if o != r:
                a[o] = (a[o] - a[o, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: np.ndarray, p: int) -> int:
    return len(row_reduce(m, p)[1])


def inverse(m: np.ndarray, p: int) -> np.ndarray:
    n = m.shape[0]
    aug = np.concatenate([np.array(m, dtype=np.int64) % p, np.eye(n, dtype=np.int64)], axis=1)
    red, pivots = row_reduce(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular modulo p")
    return red[:, n:]
