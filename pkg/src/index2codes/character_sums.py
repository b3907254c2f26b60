"""Additive and multiplicative characters of finite fields and their sums.

Characters are indices relative to the field's fixed generator:
``chi^j(alpha^t) = zeta_N^(j t)`` and ``psi(x) = zeta_p^Tr(x)``.  A brute-force
Gauss sum over F_q is accumulated as exponent counts in Z/(pN) and reduced
once into the power basis of Z[zeta_(pN)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exact_numbers import CyclotomicInt, _reducer, common_conductor, quadratic_gauss_period
from .finite_field import FieldCtx, FieldElem, FieldError

GAUSS_ENUM_LIMIT = 10**7


@dataclass
class Report:
    """Outcome of a verification routine: a name, pass/fail and failure notes."""

    name: str
    failures: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}


@dataclass(frozen=True)
class MultChar:
    """chi^j for the order-N character chi(alpha) = zeta_N."""

    ctx: FieldCtx
    n: int
    j: int = 1

    def __post_init__(self):
        if (self.ctx.order - 1) % self.n:
            raise FieldError(f"character order {self.n} does not divide {self.ctx.order - 1}")

    def exponent(self, x: FieldElem) -> int:
        """k with chi^j(x) = zeta_N^k."""
        return self.j * self.ctx.coset_index(x, self.n) % self.n

    def __call__(self, x: FieldElem) -> CyclotomicInt:
        return CyclotomicInt.zeta(self.n, self.exponent(x))

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.ctx, self.n, self.j * e % self.n)


def psi_exponent(ctx: FieldCtx, x: FieldElem) -> int:
    """t with psi(x) = zeta_p^t for the canonical additive character."""
    return ctx.abs_trace(x)


def _check_enumerable(ctx: FieldCtx, n: int) -> None:
    if (ctx.order - 1) % n:
        raise FieldError(f"character order {n} does not divide {ctx.order - 1}")
    if ctx.order > GAUSS_ENUM_LIMIT:
        raise FieldError(f"field of size {ctx.order} exceeds the Gauss-sum enumeration bound")


def gauss_brute(ctx: FieldCtx, n: int, j: int = 1) -> CyclotomicInt:
    """sum_{x in F_q^*} chi^j(x) psi(x) exactly, with conductor p*N."""
    _check_enumerable(ctx, n)
    p = ctx.p
    m = p * n
    tr = ctx.trace_table().astype(np.int64)
    t = np.arange(len(tr), dtype=np.int64)
    # zeta_N^u zeta_p^v = zeta_(pN)^(u p + v N)
    idx = ((j * t) % n * p + tr * n) % m
    counts = np.bincount(idx, minlength=m)
    return CyclotomicInt.from_redundant(m, counts)


def gauss_float(ctx: FieldCtx, n: int, j: int = 1) -> complex:
    """Complex-double Gauss sum, for sweeps; compare with tolerance 1e-6 sqrt(q)."""
    _check_enumerable(ctx, n)
    tr = ctx.trace_table().astype(np.float64)
    t = np.arange(len(tr), dtype=np.int64)
    angle = 2 * np.pi * (((j * t) % n) / n + tr / ctx.p)
    return complex(np.exp(1j * angle).sum())


def char_value_at_minus_one(ctx: FieldCtx, n: int, j: int) -> CyclotomicInt:
    if ctx.p == 2:
        return CyclotomicInt.from_int(n, 1)
    return CyclotomicInt.zeta(n, j * ((ctx.order - 1) // 2))


def gauss_property_suite(ctx: FieldCtx, n: int) -> Report:
    """Check |G|^2 = q, G(chi^p) = G(chi), G(chi^-1) = chi(-1) conj G, G(1) = -1."""
    rep = Report(f"gauss-properties q={ctx.order} N={n}")
    q, p = ctx.order, ctx.p
    values = [gauss_brute(ctx, n, j) for j in range(n)]
    for j, g in enumerate(values):
        rep.checked += 1
        if j % n == 0:
            if g != -1:
                rep.fail(f"(iv) principal character: G = {g!r}")
            continue
        if g * g.conj(-1) != q:
            rep.fail(f"(i) |G|^2 != q at j={j}")
        if values[(j * p) % n] != g:
            rep.fail(f"(ii) G(chi^p) != G(chi) at j={j}")
        sign = char_value_at_minus_one(ctx, n, j).lift(g.m)
        if values[(-j) % n] != sign * g.conj(-1):
            rep.fail(f"(iii) G(chi^-1) != chi(-1) conj G at j={j}")
    return rep


def character_orthogonality(ctx: FieldCtx, n: int) -> Report:
    """sum_{x in F_q^*} chi^j(x) = 0 for every j not divisible by N."""
    rep = Report(f"orthogonality q={ctx.order} N={n}")
    t = np.arange(ctx.order - 1, dtype=np.int64)
    for j in range(1, n):
        counts = np.bincount((j * t) % n, minlength=n)
        rep.checked += 1
        if CyclotomicInt.from_redundant(n, counts) != 0:
            rep.fail(f"j={j}")
    return rep


def quadratic_gauss_closed(p: int, f: int) -> CyclotomicInt:
    """(-1)^(f-1) sqrt(p*)^f with sqrt(p*) = sum_t zeta_p^(t^2), in Z[zeta_p]."""
    if p == 2:
        raise ValueError("the quadratic closed form needs an odd prime")
    value = quadratic_gauss_period(p) ** f
    return value if f % 2 else -value


def _weil_rhs_by_class(ctx: FieldCtx, d: int) -> tuple[int, list[CyclotomicInt]]:
    """For each class r = log(a) mod d: sum_{i=1}^{d-1} chi^-i(a) G(chi^i)."""
    p = ctx.p
    m = p * d
    # multiplying by zeta_m^k is a cyclic shift of the redundant vector
    gauss = [gauss_brute(ctx, d, i).redundant().astype(np.int64) for i in range(d)]
    out = []
    for r in range(d):
        acc = np.zeros(m, dtype=np.int64)
        for i in range(1, d):
            acc += np.roll(gauss[i], (-i * r % d) * p)
        out.append(CyclotomicInt.from_redundant(m, acc))
    return m, out


def weil_sum_check(ctx: FieldCtx, a: FieldElem, b: FieldElem, d: int) -> Report:
    """sum_{x in F_q} psi(a x^d + b) = psi(b) sum_{i=1}^{d-1} chi^-i(a) G(chi^i)."""
    if not a:
        raise FieldError("a must be nonzero")
    rep = Report(f"weil q={ctx.order} d={d}")
    p = ctx.p
    if ctx.order > 10**5:
        raise FieldError("Weil-sum enumeration limited to fields below 1e5 elements")
    lhs_counts = np.zeros(p, dtype=np.int64)
    for c in ctx.all_coords():
        lhs_counts[ctx.abs_trace(a * FieldElem(ctx, c) ** d + b)] += 1
    lhs = CyclotomicInt.from_redundant(p, lhs_counts)
    m, by_class = _weil_rhs_by_class(ctx, d)
    rhs = CyclotomicInt.zeta(m, ctx.abs_trace(b) * d) * by_class[ctx.coset_index(a, d)]
    lhs, rhs = common_conductor(lhs, rhs)
    rep.checked = 1
    if lhs != rhs:
        rep.fail(f"a={a.as_tuple()} b={b.as_tuple()}: {lhs!r} != {rhs!r}")
    return rep


def weil_sum_check_all(ctx: FieldCtx, ds: list[int] | None = None) -> Report:
    """Exhaustive Weil-sum identity over every (a, b, d), vectorised over b."""
    if ctx.order > 729:
        raise FieldError("exhaustive Weil check limited to q <= 729")
    from .arith import divisors

    q, p = ctx.order, ctx.p
    rep = Report(f"weil-all q={q}")
    coords = ctx.all_coords()
    codes = ctx.codes
    elems = [FieldElem(ctx, c) for c in coords]
    trace_of = (coords @ ctx.trace_vector) % p  # indexed by element code
    mul = np.empty((q, q), dtype=np.int64)
    for i, x in enumerate(elems):
        mul[i] = codes((coords @ ctx.mul_matrix(x).T) % p)
    add = codes((coords[:, None, :] + coords[None, :, :]) % p)
    rows_b = np.repeat(np.arange(q), q)
    for d in ds or divisors(q - 1):
        m, by_class = _weil_rhs_by_class(ctx, d)
        reducer = _reducer(m)
        step = m // p
        xd = codes(np.stack([(e**d).coeffs for e in elems]))
        # rhs in the redundant basis, rotated by psi(b): row b is zeta^(Tr(b) d) * base
        shifts = (np.arange(m)[None, :] - (trace_of * d)[:, None]) % m
        for ai in range(1, q):
            vals = add[mul[ai, xd][None, :], np.arange(q)[:, None]]  # row b: a x^d + b
            lhs_counts = np.zeros((q, p), dtype=np.int64)
            np.add.at(lhs_counts, (rows_b, trace_of[vals].ravel()), 1)
            lhs_red = np.zeros((q, m), dtype=np.int64)
            lhs_red[:, ::step] = lhs_counts
            base = by_class[ctx.coset_index(elems[ai], d)].redundant().astype(np.int64)
            rhs_red = base[shifts]
            diff = reducer.reduce_batch(lhs_red - rhs_red)
            rep.checked += q
            for bi in np.nonzero(diff.any(axis=1))[0]:
                rep.fail(f"a={ai} b={int(bi)} d={d}")
    return rep


def complex_close(x: complex, y: complex, q: int) -> bool:
    return abs(x - y) <= 1e-6 * math.sqrt(q)
