"""Closed-form index-2 Gauss sums, Davenport-Hasse lifting and class numbers.

For a prime p1 = 3 (mod 4), p1 > 3, and a prime p of index 2 modulo p1, the
Gauss sum of an order-p1 character over F_{p^f}, f = (p1 - 1)/2, is

    p^((f - c)/2) * (a + b sqrt(-p1)) / 2,

with c the class number of Q(sqrt(-p1)), 4 p^c = a^2 + p1 b^2, p not dividing
a b, and a = -2 p^((f + c)/2) (mod p1).  The sign of b depends on which
character of order p1 is meant; :func:`pin_to_field` fixes it for the
character chi(alpha) = zeta_p1 of a concrete field using Stickelberger's
theorem on the p-adic valuation of Gauss sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .arith import digit_sum, divisors, euler_phi, is_index2, is_prime, isqrt_exact, legendre
from .exact_numbers import CyclotomicInt, QuadInt, quad_pow
from .character_sums import Report, gauss_brute
from .finite_field import FieldCtx, TowerCtx, build_field


class Index2Error(ValueError):
    """The index-2 hypotheses fail or the Diophantine data is inconsistent."""


def _check_p1(p1: int) -> None:
    if p1 <= 3 or p1 % 4 != 3 or not is_prime(p1):
        raise Index2Error(f"p1 = {p1} must be a prime = 3 (mod 4) with p1 > 3")


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """Reduced primitive positive definite forms (A, B, C) with B^2 - 4AC = disc."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError("discriminant must be negative and = 0, 1 (mod 4)")
    forms = []
    a = 1
    while 3 * a * a <= -disc:
        for b in range(-a + 1, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
        a += 1
    return forms


def class_number(p1: int) -> int:
    """Class number of Q(sqrt(-p1)) by counting reduced forms of discriminant -p1."""
    _check_p1(p1)
    return len(reduced_forms(-p1))


def class_number_legendre(p1: int) -> int:
    """Independent oracle: h = (2 - (2|p1))^-1 sum_{0<n<p1/2} (n|p1)."""
    _check_p1(p1)
    total = sum(legendre(n, p1) for n in range(1, (p1 + 1) // 2))
    denom = 2 - legendre(2, p1)
    if total % denom:
        raise ArithmeticError("Legendre sum not divisible; formula misapplied")
    return total // denom


def check_index2(p: int, p1: int, ell: int = 1) -> None:
    _check_p1(p1)
    if not is_prime(p) or p == p1:
        raise Index2Error(f"p = {p} must be a prime different from p1")
    if not is_index2(p, p1**ell):
        raise Index2Error(f"{p} is not of index 2 modulo {p1}^{ell}")


def solve_diophantine(p: int, p1: int, c: int, f: int | None = None) -> tuple[int, int]:
    """The pair (a, b), b > 0, with 4 p^c = a^2 + p1 b^2 and the sign congruence on a."""
    if f is None:
        f = (p1 - 1) // 2
    if (f + c) % 2:
        raise Index2Error(f"f + c = {f + c} is odd")
    target = 4 * p**c
    bmax = math.isqrt(target // p1)
    want = (-2 * pow(p, (f + c) // 2, p1)) % p1
    found = []
    for b in range(1, bmax + 1):
        a_abs = isqrt_exact(target - p1 * b * b)
        if a_abs is None or a_abs % p == 0 or b % p == 0:
            continue
        for a in {a_abs, -a_abs}:
            if a % p1 == want:
                found.append((a, b))
    if len(found) != 1:
        raise Index2Error(f"expected one solution of 4*{p}^{c} = a^2 + {p1} b^2, found {found}")
    return found[0]


@dataclass(frozen=True)
class LiftedGauss:
    """sign * p^prefactor_exp * reduced: a Gauss sum of order p1 over F_{p^(s f)}.

    ``f = (p1 - 1)/2``; ``s = 1`` is the base field of the index-2 evaluation.
    """

    p: int
    p1: int
    c: int
    s: int
    prefactor_exp: int
    sign: int
    reduced: QuadInt

    @property
    def a_s(self) -> int:
        return self.reduced.a

    @property
    def b_s(self) -> int:
        return self.reduced.b

    @property
    def field_degree(self) -> int:
        return self.s * (self.p1 - 1) // 2

    def value(self) -> CyclotomicInt:
        """Exact value in Z[zeta_p1], sqrt(-p1) being the quadratic Gauss period."""
        return self.reduced.to_cyclotomic() * (self.sign * self.p**self.prefactor_exp)

    def __complex__(self) -> complex:
        return complex(self.reduced) * self.sign * float(self.p) ** self.prefactor_exp

    def flipped(self) -> LiftedGauss:
        """The conjugate value, i.e. b_s -> -b_s."""
        return replace(self, reduced=self.reduced.conjugate())

    def to_json(self) -> dict:
        z = complex(self)
        return {
            "p": self.p,
            "p1": self.p1,
            "s": self.s,
            "c": self.c,
            "sign": self.sign,
            "prefactor_exp": self.prefactor_exp,
            "a_s": str(self.a_s),
            "b_s": str(self.b_s),
            "complex_approx": [z.real, z.imag],
        }


def index2_gauss(p: int, p1: int, ell: int = 1, s_idx: int = 0) -> tuple[int, QuadInt]:
    """(e, z) with G_q(chi^(p1^s_idx)) = p^e z over F_q, q = p^(phi(p1^ell)/2)."""
    check_index2(p, p1, ell)
    if not 0 <= s_idx < ell:
        raise Index2Error(f"s_idx must lie in [0, {ell})")
    f = euler_phi(p1**ell) // 2
    c = class_number(p1)
    a, b = solve_diophantine(p, p1, c, f)
    power = p1**s_idx
    num = f - c * power
    if num % 2 or num < 0:
        raise Index2Error(f"prefactor exponent ({f} - {c}*{power})/2 is not a nonnegative integer")
    return num // 2, quad_pow(QuadInt(p1, a, b), power)


def dh_lift(g, s: int):
    """(-1)^(s-1) g^s: the Gauss sum of the norm-lifted character on the degree-s extension."""
    if s < 1:
        raise ValueError("lifting degree must be positive")
    sign = -1 if (s - 1) % 2 else 1
    if isinstance(g, LiftedGauss):
        return replace(
            g,
            s=g.s * s,
            prefactor_exp=g.prefactor_exp * s,
            sign=sign * g.sign**s,
            reduced=quad_pow(g.reduced, s),
        )
    return g**s * sign


def base_index2(p: int, p1: int) -> LiftedGauss:
    check_index2(p, p1)
    c = class_number(p1)
    exp, reduced = index2_gauss(p, p1)
    return LiftedGauss(p, p1, c, 1, exp, 1, reduced)


def lifted_index2(p: int, p1: int, s: int) -> LiftedGauss:
    """Gauss sum of an order-p1 character over F_{p^(s (p1-1)/2)}, canonical b > 0."""
    lifted = dh_lift(base_index2(p, p1), s)
    assert lifted.prefactor_exp * 4 == s * (p1 - 1 - 2 * lifted.c)
    assert lifted.a_s**2 + p1 * lifted.b_s**2 == 4 * p ** (lifted.c * s)
    return lifted


def _image_of_half_root(ctx: FieldCtx, p1: int):
    """Image of (1 + sqrt(-p1))/2 = 1 + sum_{QR} zeta^r under zeta -> alpha^((Q-1)/p1)."""
    w = ctx.generator ** ((ctx.order - 1) // p1)
    acc = ctx.one
    for r in sorted({t * t % p1 for t in range(1, p1)}):
        acc = acc + w**r
    return acc


def pin_to_field(ctx: FieldCtx, p1: int) -> LiftedGauss:
    """The Gauss sum of chi over ctx, where chi(alpha) = zeta_p1, with its b sign fixed.

    Let phi: Z[zeta_p1] -> F_Q send zeta_p1 to alpha^((Q-1)/p1); its kernel is a
    prime over p, and chi is the (Q-1)/p1-th power of the Teichmueller character
    attached to a prime above it.  Stickelberger says G(chi) = G(omega^-j),
    j = (Q-1)(p1-1)/p1, has p-adic valuation s_p(j)/(p-1), conjugate s_p(Q-1-j).
    The reduced factor of the value with the larger valuation lies in ker phi.
    """
    p = ctx.p
    half = (p1 - 1) // 2
    if ctx.d % half:
        raise Index2Error(f"field degree {ctx.d} is not a multiple of {half}")
    lifted = lifted_index2(p, p1, ctx.d // half)
    q1 = ctx.order - 1
    j = q1 - q1 // p1
    big_is_chi = digit_sum(j, p) > digit_sum(q1 - j, p)
    h = _image_of_half_root(ctx, p1)
    a, b = lifted.reduced.a, lifted.reduced.b
    zero_plus = not (ctx.scalar((a - b) // 2) + h * b)
    zero_minus = not (ctx.scalar((a + b) // 2) + h * (-b))
    if zero_plus == zero_minus:
        raise Index2Error("Stickelberger sign test is inconclusive")
    return lifted if zero_plus == big_is_chi else lifted.flipped()


def gauss_closed_for_field(ctx: FieldCtx, p1: int) -> CyclotomicInt:
    """Exact G_Q(chi), chi(alpha) = zeta_p1, from the closed form (conductor p1)."""
    return pin_to_field(ctx, p1).value()


def index2_primes_for(p: int, bound: int) -> list[int]:
    """Primes p1 < bound, p1 = 3 mod 4, p1 > 3, for which p has index 2."""
    return [p1 for p1 in range(7, bound, 4) if is_prime(p1) and p1 != p and is_index2(p, p1)]


def _norm_log(tower: TowerCtx) -> int:
    """L with Norm(alpha_big) = alpha_sub^L."""
    big, sub = tower.big, tower.sub
    norm_gen = tower.restrict(big.generator ** ((big.order - 1) // (sub.order - 1)))
    return sub.discrete_log(norm_gen)


def davenport_hasse_check(p: int, d: int, ext: int = 2, orders: list[int] | None = None) -> Report:
    """Brute force G_{q^ext}(chi o Norm) = (-1)^(ext-1) G_q(chi)^ext for every chi of order N | q - 1."""
    sub = build_field(p, d)
    tower = TowerCtx(build_field(p, d * ext), sub)
    big = tower.big
    L = _norm_log(tower)
    rep = Report(f"davenport-hasse q={sub.order} ext={ext}")
    for n in orders or divisors(sub.order - 1):
        for j in range(1, n):
            rep.checked += 1
            lhs = gauss_brute(big, n, j * L % n)
            rhs = dh_lift(gauss_brute(sub, n, j), ext)
            if lhs != rhs:
                rep.fail(f"N={n} j={j}")
    return rep


def tower_pin_check(p: int, p1: int, s: int) -> Report:
    """Compare the pinned closed form over F_{p^(s f)} with a brute-force sum over F_{p^f} lifted by DH."""
    f = (p1 - 1) // 2
    tower = TowerCtx(build_field(p, f * s), build_field(p, f))
    L = _norm_log(tower)
    rep = Report(f"tower pin p={p} p1={p1} s={s}")
    j_sub = pow(L, -1, p1)  # chi' o Norm = chi on the big field
    lifted = dh_lift(gauss_brute(tower.sub, p1, j_sub), s)
    rep.checked = 1
    if lifted != gauss_closed_for_field(tower.big, p1):
        rep.fail("lifted brute-force sum differs from the pinned closed form")
    return rep
