"""The two-zero cyclic code C_(q,k,h,e) and the counting quantities behind its weights.

With Q = q^k, alpha the fixed generator of F_Q, g = alpha^((q-1)/h) and
beta = alpha^((Q-1)/e), the codeword attached to (a, b) in F_Q^2 has
coordinates Tr_{Q/q}(a g^j + b (beta g)^j) for j < n = h(Q-1)/(q-1).

Z(a, b) counts the zero coordinates, so the weight is n - Z(a, b).  Writing
x = g^j, the factor beta^j is beta^(log_g x); this is the convention under
which the coset-sum identity for Z holds (see ``z_charsum``).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .arith import (
    is_index2,
    is_prime,
    legendre,
    prime_power_minus_one_divisors,
)
from .character_sums import Report, gauss_brute
from .exact_numbers import CyclotomicInt, common_conductor
from .finite_field import FieldCtx, FieldElem, FieldError, TowerCtx, build_field

CODEWORD_LIMIT = 10**6
DISTRIBUTION_LIMIT = 10**8
COSET_SUM_LIMIT = 10**7


class InvalidParameters(ValueError):
    """Base parameters violate e | h | q - 1 (distinct from failing the index-2 conditions)."""


@dataclass(frozen=True)
class CodeParams:
    p: int
    f: int
    k: int
    h: int
    e: int
    q: int
    Q: int
    n: int
    m: int
    index2_valid: bool
    p1: int | None = None
    s: int | None = None
    reasons: tuple[str, ...] = ()

    @property
    def dimension(self) -> int:
        return 2 * self.k

    @property
    def fk(self) -> int:
        return self.f * self.k

    @property
    def tuple(self) -> tuple[int, int, int, int, int]:
        return (self.p, self.f, self.k, self.h, self.e)

    def require_index2(self) -> None:
        if not self.index2_valid:
            raise InvalidParameters(f"{self.tuple} is not in the index-2 family: {'; '.join(self.reasons)}")

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "k": self.k,
            "h": self.h,
            "e": self.e,
            "q": str(self.q),
            "qk": str(self.Q),
            "n": str(self.n),
            "m": str(self.m),
            "dimension": self.dimension,
            "index2_valid": self.index2_valid,
            "p1": self.p1,
            "s": self.s,
            "reasons": list(self.reasons),
        }


def validate(p: int, f: int, k: int, h: int, e: int) -> CodeParams:
    """Derived quantities and the index-2 flag for the tuple (p, f, k, h, e)."""
    if min(p, f, k, h, e) < 1:
        raise InvalidParameters("all parameters must be positive")
    if not is_prime(p):
        raise InvalidParameters(f"p = {p} is not prime")
    q = p**f
    Q = q**k
    if h % e:
        raise InvalidParameters(f"e = {e} does not divide h = {h}")
    if (q - 1) % h:
        raise InvalidParameters(f"h = {h} does not divide q - 1 = {q - 1}")
    n = h * (Q - 1) // (q - 1)
    m = math.gcd((Q - 1) // (q - 1), e * (q - 1) // h)

    reasons = []
    p1 = s = None
    if e != 2:
        reasons.append(f"e = {e} is not 2")
    if not is_prime(m) or m % 4 != 3:
        reasons.append(f"m = {m} is not a prime = 3 (mod 4)")
    elif m == 3:
        reasons.append("m = 3 is excluded; the closed Gauss-sum formula needs p1 > 3")
    else:
        p1 = m
        half = (p1 - 1) // 2
        if (f * k) % half:
            reasons.append(f"fk = {f * k} is not divisible by (p1 - 1)/2 = {half}")
        else:
            s = f * k // half
        if not is_index2(p, p1):
            reasons.append(f"p = {p} is not of index 2 modulo {p1}")
    valid = not reasons
    if valid:
        # consequences of m = p1 that are never stated but always hold
        assert (q - 1) % p1 == 0 and k % p1 == 0, (p, f, k, h, e)
        assert ((q - 1) // h) % p1 == 0
    else:
        s = None
    return CodeParams(p, f, k, h, e, q, Q, n, m, valid, p1 if valid else None, s, tuple(reasons))


class TupleClass(NamedTuple):
    """(|E_0|, N_0, N_1, N_2) for a pair (a, b)."""

    e0: int
    n0: int
    n1: int
    n2: int

    def __str__(self) -> str:
        return f"({self.e0},{self.n0},{self.n1},{self.n2})"


# Listed in the order of the rows of the value/frequency table.
TUPLE_CLASSES = (
    TupleClass(2, 0, 0, 0),
    TupleClass(0, 2, 0, 0),
    TupleClass(0, 0, 2, 0),
    TupleClass(0, 0, 0, 2),
    TupleClass(1, 1, 0, 0),
    TupleClass(1, 0, 1, 0),
    TupleClass(1, 0, 0, 1),
    TupleClass(0, 1, 1, 0),
    TupleClass(0, 1, 0, 1),
    TupleClass(0, 0, 1, 1),
)


@dataclass(frozen=True)
class WeightDistribution:
    """Sorted (weight, count) pairs of a linear code of length n and given dimension."""

    n: int
    dimension: int
    q: int
    entries: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, n: int, dimension: int, q: int, counts) -> WeightDistribution:
        merged: Counter = Counter()
        for w, c in dict(counts).items():
            if c:
                merged[int(w)] += int(c)
        return cls(n, dimension, q, tuple(sorted(merged.items())))

    @property
    def total(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def min_distance(self) -> int | None:
        positive = [w for w, c in self.entries if w > 0 and c]
        return min(positive) if positive else None

    @property
    def first_moment(self) -> int:
        return sum(w * c for w, c in self.entries)

    def expected_first_moment(self) -> int:
        return self.n * (self.q - 1) * self.q ** (self.dimension - 1)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def check(self) -> Report:
        rep = Report(f"distribution n={self.n}")
        rep.checked = 4
        if self.total != self.q**self.dimension:
            rep.fail(f"counts sum to {self.total}, expected q^{self.dimension}")
        if self.as_dict().get(0) != 1:
            rep.fail(f"weight 0 has count {self.as_dict().get(0)}")
        if any(w < 0 or w > self.n for w, _ in self.entries):
            rep.fail("weight outside [0, n]")
        if self.first_moment != self.expected_first_moment():
            rep.fail(f"first moment {self.first_moment} != n(q-1)q^(2k-1)")
        return rep

    def to_json(self) -> dict:
        return {
            "n": str(self.n),
            "dimension": self.dimension,
            "q": str(self.q),
            "min_distance": None if self.min_distance is None else str(self.min_distance),
            "entries": [{"weight": str(w), "count": str(c)} for w, c in self.entries],
        }


class CyclicCode:
    """Concrete realisation of C_(q,k,h,e) over a fixed model of F_Q."""

    def __init__(self, params: CodeParams, generator_rank: int = 0):
        self.params = params
        pr = params
        self.field: FieldCtx = build_field(pr.p, pr.fk, generator_rank)
        self.sub: FieldCtx = build_field(pr.p, pr.f)
        self.tower = TowerCtx(self.field, self.sub)
        alpha = self.field.generator
        self.g = alpha ** ((pr.q - 1) // pr.h)
        self.beta = alpha ** ((pr.Q - 1) // pr.e)
        self.beta_pows = [self.beta**i for i in range(pr.e)]
        # coords of Tr_{Q/q}(y) in the subfield basis: R @ coords(y)
        tw = self.tower
        self.trace_rows = (tw._inv @ tw.trace_matrix[tw._rows]) % pr.p
        self._cache: dict = {}

    # codewords ----------------------------------------------------------
    def _orbit(self) -> np.ndarray:
        if "orbit" not in self._cache:
            n = self.params.n
            if n > CODEWORD_LIMIT:
                raise FieldError(f"code length {n} exceeds the codeword enumeration bound")
            self._cache["orbit"] = np.concatenate(list(self.field.power_coords(self.g, n)))
        return self._cache["orbit"]

    def _trace_coords(self, a: FieldElem, b: FieldElem) -> np.ndarray:
        """(n, f) array: subfield coordinates of every codeword entry."""
        pr = self.params
        orbit = self._orbit()
        out = np.empty((pr.n, pr.f), dtype=np.int64)
        for r in range(pr.e):
            mul = self.field.mul_matrix(a + self.beta_pows[r] * b)
            vals = (orbit[r :: pr.e] @ mul.T) % pr.p
            out[r :: pr.e] = (vals @ self.trace_rows.T) % pr.p
        return out

    def codeword(self, a: FieldElem, b: FieldElem) -> list[FieldElem]:
        return [FieldElem(self.sub, row) for row in self._trace_coords(a, b)]

    def weight(self, a: FieldElem, b: FieldElem) -> int:
        return int(self._trace_coords(a, b).any(axis=1).sum())

    def z_direct(self, a: FieldElem, b: FieldElem) -> int:
        """#{x in <g> : Tr(a x + beta^(log_g x) b x) = 0}."""
        return self.params.n - self.weight(a, b)

    # character sums ------------------------------------------------------
    def _coset_shift(self, i: int) -> int:
        pr = self.params
        return (pr.q - 1) * i // pr.h % pr.m

    def _coset_sum_brute(self, u: FieldElem, c: int) -> CyclotomicInt:
        """sum over x in alpha^c <alpha^m> of psi(u x), enumerated."""
        ctx, pr = self.field, self.params
        size = (pr.Q - 1) // pr.m
        if size > COSET_SUM_LIMIT:
            raise FieldError(f"coset of size {size} too large to enumerate")
        mul = ctx.mul_matrix(u * ctx.generator**c)
        tv = ctx.trace_vector
        counts = np.zeros(pr.p, dtype=np.int64)
        for blk in ctx.power_coords(ctx.generator**pr.m, size):
            counts += np.bincount(((blk @ mul.T) % pr.p) @ tv % pr.p, minlength=pr.p)
        return CyclotomicInt.from_redundant(pr.p, counts)

    def gauss_values(self, source: str) -> list[CyclotomicInt]:
        """G(chi^j), j < m, for chi(alpha) = zeta_m over F_Q."""
        key = ("gauss", source)
        if key not in self._cache:
            m = self.params.m
            if source == "gauss":
                vals = [gauss_brute(self.field, m, j) for j in range(m)]
            elif source == "closed":
                from .gauss_index2 import gauss_closed_for_field

                self.params.require_index2()
                g1 = gauss_closed_for_field(self.field, m)
                vals = [CyclotomicInt.from_int(m, -1)] + [g1.conj(j) for j in range(1, m)]
            else:
                raise ValueError(f"unknown Gauss-sum source {source!r}")
            self._cache[key] = vals
        return self._cache[key]

    def _coset_sums(self, source: str) -> list[CyclotomicInt]:
        """S[l] = sum_j zeta_m^(-j l) G(chi^j), i.e. m times the psi-sum over u C_0 when u is in C_l."""
        key = ("S", source)
        if key not in self._cache:
            m = self.params.m
            gs = self.gauss_values(source)
            cond = gs[1].m if m > 1 else gs[0].m
            out = []
            for ell in range(m):
                acc = CyclotomicInt.from_int(cond, 0)
                for j, g in enumerate(gs):
                    acc = acc + CyclotomicInt.zeta(cond, (-j * ell % m) * (cond // m)) * g.lift(cond)
                out.append(acc)
            self._cache[key] = out
        return self._cache[key]

    def inner_sum_times_m(self, i: int, a: FieldElem, b: FieldElem, source: str = "brute") -> CyclotomicInt:
        """m * sum_{x in C_((q-1)i/h)^(m,Q)} psi((a + beta^i b) x)."""
        pr = self.params
        u = a + self.beta_pows[i] * b
        c = self._coset_shift(i)
        if not u:
            return CyclotomicInt.from_int(pr.p, pr.Q - 1)
        if source == "brute":
            return self._coset_sum_brute(u, c) * pr.m
        ell = self.field.coset_index(u, pr.m)
        return self._coset_sums(source)[(ell + c) % pr.m]

    def t_value(self, a: FieldElem, b: FieldElem, source: str = "brute") -> int:
        terms = common_conductor(*(self.inner_sum_times_m(i, a, b, source) for i in range(self.params.e)))
        total = terms[0]
        for t in terms[1:]:
            total = total + t
        if not total.is_rational():
            raise ArithmeticError(f"coset-sum total is not rational: {total!r}")
        return total.to_int()

    def z_charsum(self, a: FieldElem, b: FieldElem, source: str = "brute") -> int:
        """n/q + (h/(e q)) sum_i m sum_{x in C_((q-1)i/h)} psi((a + beta^i b) x), exactly."""
        pr = self.params
        z = Fraction(pr.n, pr.q) + Fraction(pr.h * self.t_value(a, b, source), pr.e * pr.q)
        if z.denominator != 1 or z < 0:
            raise ArithmeticError(f"Z = {z} is not a nonnegative integer")
        return int(z)

    def y_value(self, a: FieldElem, b: FieldElem, source: str = "closed") -> int:
        """Y = (e q/h)(Z - n/q) + 2, which equals Q|E_0| + sum_i sum_j chi^-j(u_i) G(chi^j)."""
        return self.t_value(a, b, source) + 2

    @staticmethod
    def weight_from_y(params: CodeParams, y: int) -> int:
        pr = params
        w = pr.n - Fraction(pr.n, pr.q) - Fraction(pr.h * (y - 2), pr.e * pr.q)
        if w.denominator != 1 or not 0 <= w <= pr.n:
            raise ArithmeticError(f"weight {w} from Y = {y} is not an integer in [0, n]")
        return int(w)

    # index-2 classification ---------------------------------------------
    def classify(self, a: FieldElem, b: FieldElem) -> TupleClass:
        pr = self.params
        pr.require_index2()
        counts = [0, 0, 0, 0]
        for i in range(2):
            u = a + self.beta_pows[i] * b
            if not u:
                counts[0] += 1
                continue
            ell = self.field.coset_index(u, pr.p1)
            if ell == 0:
                counts[3] += 1
            elif legendre(ell, pr.p1) == 1:
                counts[1] += 1
            else:
                counts[2] += 1
        return TupleClass(*counts)

    def _element_in_class(self, kind: str, rng: np.random.Generator | None) -> FieldElem:
        """A nonzero element whose coset index mod p1 is zero, a QR or a QNR."""
        p1 = self.params.p1
        if kind == "zero":
            residue = 0
        else:
            want = 1 if kind == "qr" else -1
            pool = [r for r in range(1, p1) if legendre(r, p1) == want]
            residue = pool[0] if rng is None else int(rng.choice(pool))
        base = self.field.one if rng is None else self.field.random(rng, nonzero=True) ** p1
        return base * self.field.generator**residue

    def construct_representative(
        self, target: TupleClass, rng: np.random.Generator | None = None
    ) -> tuple[FieldElem, FieldElem]:
        """(a, b) with classify(a, b) == target, built from a + b and a - b."""
        pr = self.params
        pr.require_index2()
        if target not in TUPLE_CLASSES:
            raise ValueError(f"{target} is not one of the ten feasible classes")
        if pr.p == 2:
            raise InvalidParameters("halving needs odd characteristic")
        kinds = ["none"] * target.e0 + ["qr"] * target.n0 + ["qnr"] * target.n1 + ["zero"] * target.n2
        if rng is not None:
            kinds = list(rng.permutation(kinds))
        x, y = (self.field.zero if k == "none" else self._element_in_class(k, rng) for k in kinds)
        half = self.field.scalar(2).inverse()
        a, b = (x + y) * half, (x - y) * half
        got = self.classify(a, b)
        assert got == target, (got, target)
        return a, b


def _zero_table(code: CyclicCode) -> np.ndarray:
    """Boolean table over t < Q - 1: Tr_{Q/q}(alpha^t) == 0."""
    ctx = code.field
    if ctx.order > 5 * 10**7:
        raise FieldError("field too large for a trace table")
    parts = []
    for blk in ctx.power_coords(ctx.generator, ctx.order - 1):
        parts.append(~((blk @ code.trace_rows.T) % ctx.p).any(axis=1))
    return np.concatenate(parts)


def _split_histograms(code: CyclicCode) -> list[np.ndarray]:
    """For r in {0, 1}: histogram over u in F_Q of #{j = r mod 2 : Tr(u g^j) != 0}."""
    pr = code.params
    Qm1 = pr.Q - 1
    zero = _zero_table(code)
    step = (pr.q - 1) // pr.h  # g = alpha^step
    hists = []
    for r in range(2):
        js = np.arange(r, pr.n, 2, dtype=np.int64) * step
        width = len(js)
        chunk = max(1, 4_000_000 // max(width, 1))
        wts = np.empty(Qm1, dtype=np.int64)
        for t0 in range(0, Qm1, chunk):
            ts = np.arange(t0, min(t0 + chunk, Qm1), dtype=np.int64)
            idx = (ts[:, None] + js[None, :]) % Qm1
            wts[t0 : t0 + len(ts)] = width - zero[idx].sum(axis=1)
        hist = np.bincount(wts, minlength=width + 1).astype(object)
        hist[0] += 1  # u = 0
        hists.append(hist)
    return hists


def _literal_counts(code: CyclicCode) -> dict[int, int]:
    """Enumerate every pair, using c(a, b) = c(a, 0) + c(0, b) over F_p coordinates."""
    pr = code.params
    ctx = code.field
    zero = ctx.zero
    coords = ctx.all_coords()
    # linear maps a -> (coords of Tr(a g^j))_j and b -> (coords of Tr(b beta^j g^j))_j
    basis = [FieldElem(ctx, np.eye(ctx.d, dtype=np.int64)[i]) for i in range(ctx.d)]
    lin_a = np.stack([code._trace_coords(x, zero).ravel() for x in basis], axis=1)
    lin_b = np.stack([code._trace_coords(zero, x).ravel() for x in basis], axis=1)
    va = (coords @ lin_a.T) % pr.p
    vb = (coords @ lin_b.T) % pr.p
    hist = np.zeros(pr.n + 1, dtype=np.int64)
    for row in va:
        words = ((row[None, :] + vb) % pr.p).reshape(len(vb), pr.n, pr.f)
        hist += np.bincount(words.any(axis=2).sum(axis=1), minlength=pr.n + 1)
    return {w: int(c) for w, c in enumerate(hist)}


def brute_weight_distribution(
    params: CodeParams, method: str = "auto", limit: int = DISTRIBUTION_LIMIT, generator_rank: int = 0
) -> WeightDistribution:
    """Exact weight distribution by enumerating all q^(2k) pairs (a, b).

    ``split`` (e = 2, odd q) uses the bijection (a, b) -> (a + b, a - b): even
    coordinates see only a + b and odd ones only a - b, so the distribution is
    the convolution of two single-variable histograms.  ``literal`` forms every
    codeword sum explicitly and is the independent cross-check.
    """
    pr = params
    if pr.Q**2 > limit:
        raise FieldError(f"q^(2k) = {pr.Q**2} exceeds the enumeration bound {limit}")
    code = CyclicCode(pr, generator_rank)
    if method == "auto":
        method = "split" if pr.e == 2 and pr.p != 2 else "literal"
    if method == "split":
        if pr.e != 2 or pr.p == 2:
            raise ValueError("the split method needs e = 2 and odd characteristic")
        h0, h1 = _split_histograms(code)
        conv: Counter = Counter()
        for w0 in np.nonzero(h0)[0]:
            for w1 in np.nonzero(h1)[0]:
                conv[int(w0 + w1)] += int(h0[w0]) * int(h1[w1])
        counts = conv
    elif method == "literal":
        if pr.Q**2 * pr.n > 50 * limit:
            raise FieldError("literal enumeration too large; use the split method")
        counts = _literal_counts(code)
    else:
        raise ValueError(f"unknown method {method!r}")
    return WeightDistribution.from_counts(pr.n, pr.dimension, pr.q, counts)


def search_params(
    max_p: int,
    max_fk: int,
    max_p1: int | None = None,
    index2_only: bool = True,
    e: int = 2,
    max_qk: int | None = None,
) -> list[CodeParams]:
    """All (p, f, k, h, e) within bounds, sorted by q^k; index-2 ones only unless told otherwise.

    ``h`` runs over the multiples of e dividing q - 1.  In index-2 mode only
    k divisible by a usable p1 are tried, since the family forces p1 | k.
    """
    out = []
    if index2_only and e != 2:
        return out
    for p in range(2, max_p + 1):
        if not is_prime(p):
            continue
        for f in range(1, max_fk + 1):
            q = p**f
            if max_qk is not None and q > max_qk:
                break
            ks = range(1, max_fk // f + 1)
            if index2_only:
                # p1 | q - 1 means ord_p1(p) = (p1 - 1)/2 divides f; no factoring needed
                p1s = [
                    r
                    for r in range(7, 2 * f + 2, 4)
                    if is_prime(r) and f % ((r - 1) // 2) == 0 and (max_p1 is None or r <= max_p1) and is_index2(p, r)
                ]
                ks = [k for k in ks if any(k % r == 0 for r in p1s)]
            if not ks:
                continue
            hs = [h for h in prime_power_minus_one_divisors(p, f) if h % e == 0]
            for k in ks:
                if max_qk is not None and q**k > max_qk:
                    break
                for h in hs:
                    pr = validate(p, f, k, h, e)
                    if index2_only and not pr.index2_valid:
                        continue
                    if max_p1 is not None and pr.index2_valid and pr.p1 > max_p1:
                        continue
                    out.append(pr)
    return sorted(out, key=lambda c: (c.Q, c.tuple))


def feasibility(params: CodeParams, limit: int = DISTRIBUTION_LIMIT) -> str:
    return "fully-brute-forceable" if params.Q**2 <= limit else "stratified-only"

