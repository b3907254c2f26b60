"""Deterministic prime-power fields F_{p^d}, subfield towers, trace and norm.

Elements are coefficient vectors in the power basis of ``F_p[x]/(f)``, constant
term first.  The modulus ``f`` is the lexicographically smallest monic
irreducible polynomial and the generator is the lexicographically smallest
primitive element, both ordered as integer tuples with the constant term
first.  Rebuilding a field with the same ``(p, d)`` therefore always yields the
same object.

Heavy enumerations (trace tables, log tables, coset sums) never loop over
field elements in Python: powers of an element are produced in blocks by
multiplying coordinate arrays with the F_p-linear "multiply by" matrix.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from functools import lru_cache

import numpy as np

from . import modp
from .arith import is_prime, prime_power_minus_one_factors

DLOG_LIMIT = 10**8
TABLE_LIMIT = 2**21
SUBFIELD_ENUM_LIMIT = 2 * 10**5


class FieldError(ValueError):
    """Invalid field construction or an infeasible field operation."""


class FieldElem:
    """An element of a :class:`FieldCtx`; immutable and hashable."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64) % ctx.p
        if arr.shape != (ctx.d,):
            raise FieldError(f"expected {ctx.d} coefficients, got shape {arr.shape}")
        arr.flags.writeable = False
        self.ctx = ctx
        self.coeffs = arr

    @classmethod
    def _raw(cls, ctx: FieldCtx, arr: np.ndarray) -> FieldElem:
        out = cls.__new__(cls)
        arr.flags.writeable = False
        out.ctx = ctx
        out.coeffs = arr
        return out

    def _coerce(self, other) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldError("elements belong to different fields")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ctx.scalar(int(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem._raw(self.ctx, (self.coeffs + other.coeffs) % self.ctx.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem._raw(self.ctx, (self.coeffs - other.coeffs) % self.ctx.p)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElem._raw(self.ctx, (-self.coeffs) % self.ctx.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem._raw(self.ctx, self.ctx.ring.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldElem:
        e = int(e)
        if e < 0:
            if not self:
                raise ZeroDivisionError("zero has no inverse")
            e %= self.ctx.order - 1
        return FieldElem._raw(self.ctx, self.ctx.ring.pow(self.coeffs, e))

    def inverse(self) -> FieldElem:
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __bool__(self) -> bool:
        return bool(self.coeffs.any())

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return bool(np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.d, self.coeffs.tobytes()))

    def key(self) -> bytes:
        return self.coeffs.tobytes()

    def __int__(self) -> int:
        return sum(int(c) * self.ctx.p**i for i, c in enumerate(self.coeffs))

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coeffs)

    def __repr__(self):
        return f"FieldElem(F_{self.ctx.p}^{self.ctx.d}, {list(self.as_tuple())})"


class FieldCtx:
    """The field F_p[x]/(modulus) with a fixed primitive element."""

    def __init__(self, p: int, d: int, modulus: tuple[int, ...], generator: tuple[int, ...]):
        self.p = p
        self.d = d
        self.order = p**d
        self.modulus = tuple(modulus)
        self.ring = modp.PolyModRing(self.modulus, p)
        self.generator = FieldElem(self, generator)
        self._cache: dict = {}

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.p, self.d, self.modulus, self.generator.as_tuple()) == (
            other.p,
            other.d,
            other.modulus,
            other.generator.as_tuple(),
        )

    def __hash__(self):
        return hash((self.p, self.d, self.modulus, self.generator.as_tuple()))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, d={self.d})"

    # elements ----------------------------------------------------------
    @property
    def alpha(self) -> FieldElem:
        return self.generator

    def __call__(self, coeffs) -> FieldElem:
        if isinstance(coeffs, (int, np.integer)):
            return self.scalar(int(coeffs))
        return FieldElem(self, coeffs)

    def scalar(self, c: int) -> FieldElem:
        arr = np.zeros(self.d, dtype=np.int64)
        arr[0] = c % self.p
        return FieldElem._raw(self, arr)

    @property
    def zero(self) -> FieldElem:
        return self.scalar(0)

    @property
    def one(self) -> FieldElem:
        return self.scalar(1)

    @property
    def x(self) -> FieldElem:
        """The class of the polynomial variable."""
        return FieldElem._raw(self, self.ring.x_power(1))

    def from_int(self, n: int) -> FieldElem:
        digits = []
        for _ in range(self.d):
            n, r = divmod(n, self.p)
            digits.append(r)
        return FieldElem(self, digits)

    def random(self, rng: np.random.Generator, nonzero: bool = False) -> FieldElem:
        while True:
            x = FieldElem(self, rng.integers(0, self.p, size=self.d))
            if x or not nonzero:
                return x

    def all_coords(self) -> np.ndarray:
        """Coordinates of every element, row i holding the element with integer code i."""
        if self.order > TABLE_LIMIT:
            raise FieldError(f"field of size {self.order} too large to list")
        codes = np.arange(self.order, dtype=np.int64)
        out = np.empty((self.order, self.d), dtype=np.int64)
        for i in range(self.d):
            codes, out[:, i] = np.divmod(codes, self.p)
        return out

    def codes(self, coords: np.ndarray) -> np.ndarray:
        """Integer codes sum c_i p^i of coordinate rows (fields below 2^62)."""
        weights = np.array([self.p**i for i in range(self.d)], dtype=np.int64)
        return coords @ weights

    # linear structure ---------------------------------------------------
    def mul_matrix(self, a: FieldElem) -> np.ndarray:
        """Matrix M over F_p with coords(a * y) = M @ coords(y)."""
        cols = []
        cur = a
        x = self.x
        for _ in range(self.d):
            cols.append(cur.coeffs)
            cur = cur * x
        return np.stack(cols, axis=1).astype(np.int64)

    @property
    def frobenius_matrix(self) -> np.ndarray:
        """Matrix of y -> y^p."""
        if "frob" not in self._cache:
            self._cache["frob"] = self.mul_matrix_of_powers(self.x**self.p)
        return self._cache["frob"]

    def mul_matrix_of_powers(self, y: FieldElem) -> np.ndarray:
        cols = []
        cur = self.one
        for _ in range(self.d):
            cols.append(cur.coeffs)
            cur = cur * y
        return np.stack(cols, axis=1).astype(np.int64)

    @property
    def trace_vector(self) -> np.ndarray:
        """Row vector t with Tr_{F_{p^d}/F_p}(y) = t . coords(y) mod p."""
        if "trace" not in self._cache:
            p = self.p
            total = np.zeros((self.d, self.d), dtype=np.int64)
            power = np.eye(self.d, dtype=np.int64)
            for _ in range(self.d):
                total = (total + power) % p
                power = (self.frobenius_matrix @ power) % p
            if total[1:].any():
                raise FieldError("absolute trace does not land in the prime field")
            self._cache["trace"] = total[0].copy()
        return self._cache["trace"]

    def abs_trace(self, y: FieldElem) -> int:
        return int(self.trace_vector @ y.coeffs % self.p)

    def power_coords(self, base: FieldElem, count: int, block: int = 1 << 14) -> Iterator[np.ndarray]:
        """Yield coordinate blocks of base^0, base^1, ..., base^(count-1)."""
        p = self.p
        m = self.mul_matrix(base)
        first_len = min(block, count)
        first = np.zeros((first_len, self.d), dtype=np.int64)
        first[0, 0] = 1
        filled, mk = 1, m
        while filled < first_len:
            take = min(filled, first_len - filled)
            first[filled : filled + take] = (first[:take] @ mk.T) % p
            filled += take
            mk = (mk @ mk) % p
        jump = modp.mat_pow(m, first_len, p)
        cur = first
        done = 0
        while done < count:
            take = min(first_len, count - done)
            yield cur[:take]
            done += take
            if done < count:
                cur = (cur @ jump.T) % p

    def trace_table(self) -> np.ndarray:
        """tr[t] = Tr(alpha^t) for t in [0, q - 1)."""
        if "trace_table" not in self._cache:
            if self.order > 5 * 10**7:
                raise FieldError(f"field of size {self.order} too large to enumerate")
            tv = self.trace_vector
            parts = [(blk @ tv) % self.p for blk in self.power_coords(self.generator, self.order - 1)]
            dtype = np.int16 if self.p < 2**15 else np.int64
            self._cache["trace_table"] = np.concatenate(parts).astype(dtype)
        return self._cache["trace_table"]

    # multiplicative structure -----------------------------------------
    def order_of(self, x: FieldElem) -> int:
        if not x:
            raise FieldError("zero has no multiplicative order")
        n = self.order - 1
        for r in prime_power_minus_one_factors(self.p, self.d):
            while n % r == 0 and (x ** (n // r)) == 1:
                n //= r
        return n

    def is_primitive(self, x: FieldElem) -> bool:
        if not x:
            return False
        n = self.order - 1
        return all((x ** (n // r)) != 1 for r in prime_power_minus_one_factors(self.p, self.d))

    def log_table(self) -> np.ndarray:
        if "log_table" not in self._cache:
            if self.order > TABLE_LIMIT:
                raise FieldError("log table only built for small fields")
            table = np.full(self.order, -1, dtype=np.int64)
            start = 0
            for blk in self.power_coords(self.generator, self.order - 1):
                table[self.codes(blk)] = np.arange(start, start + len(blk))
                start += len(blk)
            self._cache["log_table"] = table
        return self._cache["log_table"]

    def discrete_log(self, x: FieldElem, limit: int = DLOG_LIMIT) -> int:
        """t in [0, q-1) with alpha^t = x."""
        if not x:
            raise FieldError("discrete log of zero")
        if self.order <= TABLE_LIMIT:
            return int(self.log_table()[int(self.codes(x.coeffs[None, :])[0])])
        if self.order > limit:
            raise FieldError(f"field of size {self.order} exceeds discrete-log bound {limit}")
        return self._bsgs(x)

    def _bsgs(self, x: FieldElem) -> int:
        n = self.order - 1
        step = math.isqrt(n) + 1
        baby = {}
        cur = self.one
        for j in range(step):
            baby.setdefault(cur.key(), j)
            cur = cur * self.generator
        giant = self.generator ** (n - step)  # alpha^(-step)
        y = x
        for i in range(step + 1):
            j = baby.get(y.key())
            if j is not None:
                return (i * step + j) % n
            y = y * giant
        raise FieldError("discrete log not found; generator is not primitive")

    def _coset_table(self, n: int) -> tuple[int, dict[bytes, int]]:
        key = ("coset", n)
        if key not in self._cache:
            if (self.order - 1) % n:
                raise FieldError(f"{n} does not divide {self.order - 1}")
            if n > 10**5:
                raise FieldError(f"coset count {n} too large")
            exp = (self.order - 1) // n
            omega = self.generator**exp
            table = {}
            cur = self.one
            for j in range(n):
                table[cur.key()] = j
                cur = cur * omega
            self._cache[key] = (exp, table)
        return self._cache[key]

    def coset_index(self, x: FieldElem, n: int) -> int:
        """j in [0, n) with x in alpha^j <alpha^n>; no discrete log needed."""
        if not x:
            raise FieldError("zero lies in no multiplicative coset")
        exp, table = self._coset_table(n)
        return table[(x**exp).key()]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "modulus": list(self.modulus),
            "generator": list(self.generator.as_tuple()),
        }


def _lex_tuples(p: int, d: int, first_min: int = 0) -> Iterator[tuple[int, ...]]:
    for c0 in range(first_min, p):
        for rest in itertools.product(range(p), repeat=d - 1):
            yield (c0,) + rest


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    if d == 1:
        return (0, 1)
    for low in _lex_tuples(p, d, first_min=1):
        cand = low + (1,)
        if modp.is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {d} over F_{p}")  # pragma: no cover


@lru_cache(maxsize=None)
def build_field(p: int, d: int, generator_rank: int = 0) -> FieldCtx:
    """F_{p^d} with lex-smallest modulus and the lex-smallest primitive element.

    ``generator_rank`` selects the next primitive elements in the same order,
    which gives deterministic alternative generators for invariance checks.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if d < 1:
        raise FieldError("extension degree must be positive")
    modulus = smallest_irreducible(p, d)
    probe = FieldCtx(p, d, modulus, (1,) + (0,) * (d - 1))
    found = -1
    for coeffs in _lex_tuples(p, d):
        if not any(coeffs):
            continue
        if probe.is_primitive(FieldElem(probe, coeffs)):
            found += 1
            if found == generator_rank:
                return FieldCtx(p, d, modulus, coeffs)
    raise FieldError("not enough primitive elements")  # pragma: no cover


class TowerCtx:
    """F_{p^(d e)} containing F_{p^d} through an explicit coordinate isomorphism.

    The standalone subfield (its own lex-smallest modulus) is embedded by
    sending its variable to the lex-smallest root of its modulus in the big
    field.
    """

    def __init__(self, big: FieldCtx, sub: FieldCtx):
        if big.p != sub.p or big.d % sub.d:
            raise FieldError("subfield degree must divide the extension degree")
        self.big = big
        self.sub = sub
        self.ext = big.d // sub.d
        self.root = self._find_root()
        cols = [(self.root**i).coeffs for i in range(sub.d)]
        self.embed_matrix = np.stack(cols, axis=1).astype(np.int64)  # big.d x sub.d
        # pick sub.d independent rows of the embedding and invert them
        _, rows = modp.row_reduce(self.embed_matrix.T, big.p)
        self._rows = rows
        self._inv = modp.inverse(self.embed_matrix[rows, :], big.p)
        frob_q = modp.mat_pow(big.frobenius_matrix, sub.d, big.p)
        total = np.zeros((big.d, big.d), dtype=np.int64)
        power = np.eye(big.d, dtype=np.int64)
        for _ in range(self.ext):
            total = (total + power) % big.p
            power = (frob_q @ power) % big.p
        self.trace_matrix = total
        self.q = sub.order

    def _find_root(self) -> FieldElem:
        big, sub = self.big, self.sub
        if sub.d == 1:
            return big.zero if sub.modulus == (0, 1) else big.scalar(-sub.modulus[0])
        if sub.order > SUBFIELD_ENUM_LIMIT:
            raise FieldError(f"subfield of size {sub.order} too large to search for an embedding")
        gamma = big.generator ** ((big.order - 1) // (sub.order - 1))
        roots = []
        cur = big.one
        for _ in range(sub.order - 1):
            acc = big.zero
            for c in reversed(sub.modulus):
                acc = acc * cur + c
            if not acc:
                roots.append(cur)
            cur = cur * gamma
        if len(roots) != sub.d:
            raise FieldError("embedding search found the wrong number of roots")
        return min(roots, key=FieldElem.as_tuple)

    def embed(self, x: FieldElem) -> FieldElem:
        return FieldElem(self.big, self.embed_matrix @ x.coeffs)

    def restrict(self, y: FieldElem) -> FieldElem:
        """Inverse of :meth:`embed`; raises if y is not in the subfield."""
        c = (self._inv @ y.coeffs[self._rows]) % self.big.p
        if not np.array_equal((self.embed_matrix @ c) % self.big.p, y.coeffs):
            raise FieldError("element does not lie in the embedded subfield")
        return FieldElem(self.sub, c)

    def in_subfield(self, y: FieldElem) -> bool:
        return y ** self.q == y

    def trace(self, y: FieldElem) -> FieldElem:
        """Relative trace Tr_{q^k/q}, in subfield coordinates."""
        s = FieldElem(self.big, self.trace_matrix @ y.coeffs)
        return self.restrict(s)

    def norm(self, y: FieldElem) -> FieldElem:
        """Relative norm y^((q^k - 1)/(q - 1)), in subfield coordinates."""
        if not y:
            return self.sub.zero
        return self.restrict(y ** ((self.big.order - 1) // (self.q - 1)))


@lru_cache(maxsize=None)
def build_tower(p: int, sub_degree: int, ext: int) -> TowerCtx:
    """The tower F_p < F_{p^sub_degree} < F_{p^(sub_degree * ext)}."""
    return TowerCtx(build_field(p, sub_degree * ext), build_field(p, sub_degree))


def trace(ctx: TowerCtx, x: FieldElem) -> FieldElem:
    return ctx.trace(x)


def norm(ctx: TowerCtx, x: FieldElem) -> FieldElem:
    return ctx.norm(x)


def discrete_log(ctx: FieldCtx, x: FieldElem) -> int:
    return ctx.discrete_log(x)


def coset_index(ctx: FieldCtx, x: FieldElem, n: int) -> int:
    return ctx.coset_index(x, n)
