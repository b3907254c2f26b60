"""Exact arithmetic in Z[zeta_m] and in the ring of integers of Q(sqrt(-p1)).

Cyclotomic integers are stored in a canonical Z-basis built from the prime
power factors m = m_1 ... m_r: the products zeta_(m_1)^(j_1) ... zeta_(m_r)^(j_r)
with 0 <= j_i < phi(m_i).  Equality of values is equality of coefficient
tuples.  Sums accumulate in the redundant basis zeta_m^0 .. zeta_m^(m-1) and
are reduced axis by axis after the CRT reshaping Z/m = Z/m_1 x ... x Z/m_r,
which costs O(m * sum phi(m_i)) and never forms an m x phi(m) matrix.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import divisors, factorint

MAX_CONDUCTOR = 10**6
_FFT_EXACT_BOUND = 2**40
_FLOAT_EXACT_BOUND = 2**50


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, constant term first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in divisors(m):
        if d == m:
            continue
        num = _exact_divide(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_divide(a: list[int], b: tuple[int, ...]) -> list[int]:
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for shift in range(len(q) - 1, -1, -1):
        c = a[shift + len(b) - 1]  # b is monic
        q[shift] = c
        if c:
            for i, bi in enumerate(b):
                a[shift + i] -= c * bi
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


def _prime_power_rows(pk: int, p: int) -> np.ndarray:
    """rows[t] = coefficients of x^t mod Phi_(p^k), t < p^k; entries lie in {-1, 0, 1}."""
    phi = pk - pk // p
    step = pk // p
    rows = np.zeros((pk, phi), dtype=np.int64)
    for t in range(pk):
        if t < phi:
            rows[t, t] = 1
        else:
            # x^(phi + u) with u < step: -sum_{i=0}^{p-2} x^(u + i step)
            u = t - phi
            rows[t, u :: step] = -1
    return rows


class _Reducer:
    """CRT layout and per-axis reduction data for conductor m."""

    def __init__(self, m: int):
        if m < 1 or m > MAX_CONDUCTOR:
            raise ValueError(f"conductor {m} outside the supported range")
        self.m = m
        parts = sorted(factorint(m).items()) if m > 1 else []
        self.moduli = [pr**k for pr, k in parts] or [1]
        self.axis_rows = [_prime_power_rows(pr**k, pr) for pr, k in parts] or [np.ones((1, 1), dtype=np.int64)]
        self.phis = [r.shape[1] for r in self.axis_rows]
        self.phi = math.prod(self.phis)
        # zeta_m = prod zeta_(m_i)^(c_i) with c_i = (m/m_i)^-1 mod m_i
        e = np.arange(m, dtype=np.int64)
        comps = [(e * pow(m // mi, -1, mi)) % mi if mi > 1 else np.zeros(m, dtype=np.int64) for mi in self.moduli]
        self.perm = np.ravel_multi_index(tuple(comps), tuple(self.moduli))
        # exponent of zeta_m for each canonical basis vector
        grids = np.meshgrid(*[np.arange(ph) for ph in self.phis], indexing="ij")
        exp = np.zeros(self.phis, dtype=np.int64)
        for gi, mi in zip(grids, self.moduli):
            exp = (exp + gi * (m // mi)) % m
        self.basis_exp = exp.ravel()

    def _reduce_nd(self, arr: np.ndarray, lead: int) -> np.ndarray:
        for axis, rows in enumerate(self.axis_rows):
            ax = lead + axis
            r = rows.astype(arr.dtype) if arr.dtype != np.int64 else rows
            arr = np.moveaxis(np.tensordot(arr, r, axes=([ax], [0])), -1, ax)
        return arr

    def _prepare(self, vec: np.ndarray) -> np.ndarray:
        """Pick the arithmetic: float64 (BLAS, exact below 2^53), int64, or Python ints."""
        if vec.dtype != object:
            bound = int(np.abs(vec).max(initial=0)) * self.m
            if bound < _FLOAT_EXACT_BOUND:
                return vec.astype(np.float64)
            if bound < 2**62:
                return vec.astype(np.int64)
        return vec.astype(object)

    @staticmethod
    def _finish(arr: np.ndarray) -> np.ndarray:
        return np.rint(arr).astype(np.int64) if arr.dtype == np.float64 else arr

    def reduce(self, vec) -> tuple[int, ...]:
        """Reduce a length-m redundant coefficient vector to the canonical basis."""
        arr = self._prepare(np.asarray(vec))
        if arr.shape != (self.m,):
            raise ValueError(f"expected {self.m} redundant coefficients")
        scattered = np.zeros(self.m, dtype=arr.dtype)
        scattered[self.perm] = arr
        out = self._finish(self._reduce_nd(scattered.reshape(self.moduli), 0))
        return tuple(int(c) for c in out.ravel())

    def reduce_batch(self, mat: np.ndarray) -> np.ndarray:
        """Row-wise :meth:`reduce` of a (rows, m) array; returns (rows, phi)."""
        mat = self._prepare(np.asarray(mat))
        scattered = np.zeros_like(mat)
        scattered[:, self.perm] = mat
        out = self._finish(self._reduce_nd(scattered.reshape((len(mat), *self.moduli)), 1))
        return out.reshape(len(mat), self.phi)

    def redundant(self, coeffs) -> np.ndarray:
        dtype = np.int64 if _fits(coeffs, 2**62) else object
        vec = np.zeros(self.m, dtype=dtype)
        vec[self.basis_exp] = np.array(coeffs, dtype=dtype)
        return vec


@lru_cache(maxsize=256)
def _reducer(m: int) -> _Reducer:
    return _Reducer(m)


def _fits(coeffs, bound: int) -> bool:
    return not coeffs or (max(coeffs) < bound and min(coeffs) > -bound)


def _cyclic_convolve(x: np.ndarray, y: np.ndarray, m: int) -> np.ndarray:
    """Exact cyclic convolution of two length-m integer vectors."""
    if x.dtype != object and y.dtype != object:
        bound = int(np.abs(x).sum()) * int(np.abs(y).max(initial=0))
        if bound < _FFT_EXACT_BOUND:
            raw = np.fft.irfft(np.fft.rfft(x.astype(np.float64)) * np.fft.rfft(y.astype(np.float64)), n=m)
            out = np.rint(raw)
            if np.abs(raw - out).max(initial=0) < 0.25:
                return out.astype(np.int64)
        if bound < 2**62:
            prod = np.convolve(x, y)
        else:
            prod = np.convolve(x.astype(object), y.astype(object))
    else:
        prod = np.convolve(x.astype(object), y.astype(object))
    out = np.zeros(m, dtype=prod.dtype)
    out[: min(m, len(prod))] += prod[:m]
    if len(prod) > m:
        out[: len(prod) - m] += prod[m:]
    return out


class CyclotomicInt:
    """Element of Z[zeta_m], zeta_m = exp(2 pi i / m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        """``coeffs`` of length phi(m) are canonical; any other length is read as powers of zeta_m."""
        red = _reducer(m)
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) != red.phi:
            vec = [0] * m
            for i, c in enumerate(coeffs):
                vec[i % m] += c
            coeffs = list(red.reduce(np.array(vec, dtype=object)))
        self.m = m
        self.coeffs = tuple(coeffs)

    # constructors -----------------------------------------------------
    @classmethod
    def from_int(cls, m: int, n: int) -> CyclotomicInt:
        phi = _reducer(m).phi
        out = cls.__new__(cls)
        out.m = m
        out.coeffs = (int(n),) + (0,) * (phi - 1)
        return out

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> CyclotomicInt:
        vec = np.zeros(m, dtype=np.int64)
        vec[k % m] = 1
        return cls.from_redundant(m, vec)

    @classmethod
    def from_redundant(cls, m: int, counts) -> CyclotomicInt:
        """Element ``sum_t counts[t] * zeta_m^t`` for a length-m vector."""
        counts = np.asarray(counts)
        if counts.shape != (m,):
            raise ValueError(f"expected {m} redundant coefficients, got {counts.shape}")
        out = cls.__new__(cls)
        out.m = m
        out.coeffs = _reducer(m).reduce(counts)
        return out

    # helpers -----------------------------------------------------------
    def _check(self, other) -> CyclotomicInt:
        if isinstance(other, int):
            return CyclotomicInt.from_int(self.m, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.m != self.m:
            raise ValueError(f"conductor mismatch: {self.m} vs {other.m}")
        return other

    def _new(self, coeffs) -> CyclotomicInt:
        out = CyclotomicInt.__new__(CyclotomicInt)
        out.m = self.m
        out.coeffs = tuple(coeffs)
        return out

    def redundant(self) -> np.ndarray:
        """Length-m vector v with self = sum v[t] zeta_m^t."""
        return _reducer(self.m).redundant(self.coeffs)

    # ring operations ---------------------------------------------------
    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._new(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._new(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self._new(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new(a * other for a in self.coeffs)
        other = self._check(other)
        if other is NotImplemented:
            return other
        red = _reducer(self.m)
        vec = _cyclic_convolve(red.redundant(self.coeffs), red.redundant(other.coeffs), self.m)
        return self._new(red.reduce(vec))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> CyclotomicInt:
        if e < 0:
            raise ValueError("negative powers are not cyclotomic integers in general")
        result = CyclotomicInt.from_int(self.m, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        if other.m != self.m:
            lcm = self.m * other.m // math.gcd(self.m, other.m)
            return self.lift(lcm).coeffs == other.lift(lcm).coeffs
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"CyclotomicInt(m={self.m}, coeffs={list(self.coeffs)})"

    # Galois action and embeddings -------------------------------------
    def conj(self, t: int = -1) -> CyclotomicInt:
        """Apply the automorphism zeta_m -> zeta_m^t."""
        if math.gcd(t, self.m) != 1:
            raise ValueError(f"{t} is not coprime to the conductor {self.m}")
        red = _reducer(self.m)
        src = red.redundant(self.coeffs)
        vec = np.zeros_like(src)
        vec[(red.basis_exp * t) % self.m] = src[red.basis_exp]
        return self._new(red.reduce(vec))

    def lift(self, big_m: int) -> CyclotomicInt:
        """The same number written with conductor ``big_m`` (a multiple of m)."""
        if big_m % self.m:
            raise ValueError(f"{big_m} is not a multiple of {self.m}")
        if big_m == self.m:
            return self
        src = _reducer(self.m)
        vec = np.zeros(big_m, dtype=np.int64 if _fits(self.coeffs, 2**62) else object)
        vec[src.basis_exp * (big_m // self.m)] = np.array(self.coeffs, dtype=vec.dtype)
        return CyclotomicInt.from_redundant(big_m, vec)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.coeffs[0]

    def __complex__(self) -> complex:
        exps = _reducer(self.m).basis_exp
        return sum(
            (c * cmath.exp(2j * math.pi * int(e) / self.m) for e, c in zip(exps, self.coeffs) if c),
            0j,
        )

    def to_json(self) -> dict:
        z = complex(self)
        return {
            "conductor": self.m,
            "coeffs": [str(c) for c in self.coeffs],
            "complex_approx": [z.real, z.imag],
        }


def common_conductor(*xs: CyclotomicInt) -> list[CyclotomicInt]:
    m = 1
    for x in xs:
        m = m * x.m // math.gcd(m, x.m)
    return [x.lift(m) for x in xs]


@lru_cache(maxsize=None)
def quadratic_gauss_period(p: int) -> CyclotomicInt:
    """sum_t zeta_p^(t^2) = sqrt(p*), p* = (-1)^((p-1)/2) p, in Z[zeta_p]."""
    vec = [0] * p
    for t in range(p):
        vec[t * t % p] += 1
    return CyclotomicInt.from_redundant(p, np.array(vec, dtype=np.int64))


@lru_cache(maxsize=None)
def _half_root(p1: int) -> CyclotomicInt:
    vec = [0] * p1
    vec[0] = 1
    for r in {t * t % p1 for t in range(1, p1)}:
        vec[r] += 1
    return CyclotomicInt.from_redundant(p1, np.array(vec, dtype=np.int64))


@dataclass(frozen=True)
class QuadInt:
    """The algebraic integer (a + b sqrt(-p1)) / 2 with p1 = 3 mod 4."""

    p1: int
    a: int
    b: int

    def __post_init__(self):
        if (self.a - self.b) % 2:
            raise ValueError(f"({self.a}, {self.b}) has mixed parity; not an integer of Q(sqrt(-{self.p1}))")

    @classmethod
    def one(cls, p1: int) -> QuadInt:
        return cls(p1, 2, 0)

    def _check(self, other: QuadInt) -> None:
        if other.p1 != self.p1:
            raise ValueError(f"p1 mismatch: {self.p1} vs {other.p1}")

    def __mul__(self, other: QuadInt) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self.p1, self.a * other, self.b * other)
        self._check(other)
        a = self.a * other.a - self.p1 * self.b * other.b
        b = self.a * other.b + other.a * self.b
        # both numerators are even under the parity invariant
        return QuadInt(self.p1, a // 2, b // 2)

    __rmul__ = __mul__

    def __add__(self, other: QuadInt) -> QuadInt:
        self._check(other)
        return QuadInt(self.p1, self.a + other.a, self.b + other.b)

    def __neg__(self) -> QuadInt:
        return QuadInt(self.p1, -self.a, -self.b)

    def __pow__(self, s: int) -> QuadInt:
        return quad_pow(self, s)

    def conjugate(self) -> QuadInt:
        return QuadInt(self.p1, self.a, -self.b)

    def norm(self) -> int:
        n4 = self.a * self.a + self.p1 * self.b * self.b
        assert n4 % 4 == 0
        return n4 // 4

    def __complex__(self) -> complex:
        return complex(self.a / 2, self.b * math.sqrt(self.p1) / 2)

    def to_cyclotomic(self, m: int | None = None) -> CyclotomicInt:
        """Embed into Z[zeta_m] (m a multiple of p1) with sqrt(-p1) = sum zeta^(t^2)."""
        # (a + b r)/2 = (a - b)/2 + b (1 + r)/2 with (1 + r)/2 = 1 + sum_{QR} zeta^t
        value = _half_root(self.p1) * self.b + (self.a - self.b) // 2
        return value if m is None else value.lift(m)

    def to_json(self) -> dict:
        return {"p1": self.p1, "a": str(self.a), "b": str(self.b)}


def quad_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    return x * y


def quad_pow(x: QuadInt, s: int) -> QuadInt:
    if s < 0:
        raise ValueError("exponent must be nonnegative")
    result = QuadInt.one(x.p1)
    base = x
    while s:
        if s & 1:
            result = result * base
        s >>= 1
        if s:
            base = base * base
    return result


def cyc_mul(x: CyclotomicInt, y: CyclotomicInt) -> CyclotomicInt:
    return x * y


def cyc_conj(x: CyclotomicInt, t: int) -> CyclotomicInt:
    return x.conj(t)


def embed_complex(x: CyclotomicInt | QuadInt | int) -> complex:
    return complex(x)
