"""Closed-form value/frequency table for the index-2 family and the weight enumerator.

Everything here is exact integer arithmetic.  For a parameter set in the
family, write P = p^(s(p1-1-2c)/4), sigma = (-1)^s, L = (q^k - 1)/p1 and let
(a_s, b_s) be the lifted Gauss-sum coordinates.  A pair (a, b) with tuple
class (e0, N0, N1, N2) has

    Y = q^k e0 + (sigma P / 2) ((N0 + N1 + N2 - p1 N2) a_s + (N1 - N0) p1 b_s),

and the ten classes give the ten table rows.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .arith import cyclic_subgroup, is_index2, is_prime
from .character_sums import Report
from .code_model import TUPLE_CLASSES, CodeParams, CyclicCode, TupleClass, WeightDistribution
from .gauss_index2 import LiftedGauss, lifted_index2, pin_to_field


@dataclass(frozen=True)
class Table1Row:
    label: str
    cls: TupleClass
    y: int
    freq: int
    # frequency as c * L^power, kept for pretty-printing
    freq_coeff: tuple[int, int, int] = (0, 0, 0)

    def to_json(self) -> dict:
        return {"label": self.label, "class": str(self.cls), "y": str(self.y), "freq": str(self.freq)}


def _half(x: int) -> int:
    if x % 2:
        raise ArithmeticError(f"table entry {x}/2 is not an integer")
    return x // 2


def default_lifted(params: CodeParams) -> LiftedGauss:
    params.require_index2()
    return lifted_index2(params.p, params.p1, params.s)


def table1(params: CodeParams, lifted: LiftedGauss | None = None) -> list[Table1Row]:
    """The ten (Y, frequency) rows, transcribed entry by entry."""
    params.require_index2()
    lg = lifted or default_lifted(params)
    p1, Q = params.p1, params.Q
    P = params.p**lg.prefactor_exp
    sp = P if params.s % 2 == 0 else -P  # (-1)^s P
    a, b = lg.a_s, lg.b_s
    if (a - b) % 2:
        raise ArithmeticError("a_s and b_s have different parity")
    L = (Q - 1) // p1
    hp = (p1 - 1) // 2
    ys = [
        2 * Q,
        sp * (a - b * p1),
        sp * (a + b * p1),
        sp * (1 - p1) * a,
        _half(sp * (a - b * p1)) + Q,
        _half(sp * (a + b * p1)) + Q,
        _half(sp * (1 - p1) * a) + Q,
        sp * a,
        _half(sp * (-a * (p1 - 2) - b * p1)),
        _half(sp * (-a * (p1 - 2) + b * p1)),
    ]
    # (constant, coefficient of L, coefficient of L^2)
    coeffs = [
        (1, 0, 0),
        (0, 0, hp * hp),
        (0, 0, hp * hp),
        (0, 0, 1),
        (0, p1 - 1, 0),
        (0, p1 - 1, 0),
        (0, 2, 0),
        (0, 0, _half((p1 - 1) ** 2)),
        (0, 0, p1 - 1),
        (0, 0, p1 - 1),
    ]
    rows = [
        Table1Row(f"row{i + 1}", cls, y, c0 + c1 * L + c2 * L * L, (c0, c1, c2))
        for i, (cls, y, (c0, c1, c2)) in enumerate(zip(TUPLE_CLASSES, ys, coeffs))
    ]
    total = sum(r.freq for r in rows)
    if total != Q * Q:
        raise ArithmeticError(f"frequencies sum to {total}, not q^(2k)")
    return rows


def y_for_class(params: CodeParams, lifted: LiftedGauss, cls: TupleClass) -> int:
    """The generic class formula, independent of the row transcription."""
    P = params.p**lifted.prefactor_exp
    sp = P if params.s % 2 == 0 else -P
    inner = (cls.n0 + cls.n1 + cls.n2 - params.p1 * cls.n2) * lifted.a_s + (cls.n1 - cls.n0) * params.p1 * lifted.b_s
    return params.Q * cls.e0 + _half(sp * inner)


def weight_of_y(params: CodeParams, y: int) -> int:
    return CyclicCode.weight_from_y(params, y)


def predict_distribution(
    params: CodeParams, flip: bool = False, lifted: LiftedGauss | None = None
) -> WeightDistribution:
    lg = lifted or default_lifted(params)
    if flip:
        lg = lg.flipped()
    counts: dict[int, int] = defaultdict(int)
    for row in table1(params, lg):
        counts[weight_of_y(params, row.y)] += row.freq
    dist = WeightDistribution.from_counts(params.n, params.dimension, params.q, counts)
    if dist.total != params.Q**2:
        raise ArithmeticError("predicted distribution does not sum to q^(2k)")
    return dist


def sign_invariance_check(params: CodeParams) -> Report:
    rep = Report(f"sign-flip {params.tuple}")
    lg = default_lifted(params)
    base = predict_distribution(params, lifted=lg)
    flipped = predict_distribution(params, lifted=lg.flipped())
    rep.checked = 2
    if base != flipped:
        rep.fail("distribution changes under b_s -> -b_s")
    r, rf = table1(params, lg), table1(params, lg.flipped())
    for i, j in ((1, 2), (4, 5), (8, 9)):
        rep.checked += 1
        if (r[i].y, r[i].freq) != (rf[j].y, rf[j].freq):
            rep.fail(f"row{i + 1} does not swap with row{j + 1}")
    return rep


def derived_frequencies(params: CodeParams) -> dict[TupleClass, int]:
    """Class counts from the base values and the three linear identities."""
    p1, Q = params.p1, params.Q
    L = (Q - 1) // p1
    hp = (p1 - 1) // 2
    N = {
        TupleClass(2, 0, 0, 0): 1,
        TupleClass(1, 1, 0, 0): (p1 - 1) * L,
        TupleClass(1, 0, 1, 0): (p1 - 1) * L,
        TupleClass(1, 0, 0, 1): 2 * L,
        TupleClass(0, 0, 0, 2): L * L,
        TupleClass(0, 2, 0, 0): hp * hp * L * L,
        TupleClass(0, 0, 2, 0): hp * hp * L * L,
    }
    rhs_sq = Q * (Q - 1) * (p1 - 1) // p1
    # x + y, x + z, y + z for x = N0110, y = N0101, z = N0011
    xy = rhs_sq - N[TupleClass(1, 1, 0, 0)] - 2 * N[TupleClass(0, 2, 0, 0)]
    xz = rhs_sq - N[TupleClass(1, 0, 1, 0)] - 2 * N[TupleClass(0, 0, 2, 0)]
    yz = 2 * Q * L - N[TupleClass(1, 0, 0, 1)] - 2 * N[TupleClass(0, 0, 0, 2)]
    total = _half(xy + xz + yz)
    N[TupleClass(0, 1, 1, 0)] = total - yz
    N[TupleClass(0, 1, 0, 1)] = total - xz
    N[TupleClass(0, 0, 1, 1)] = total - xy
    return N


def bijection_frequencies(params: CodeParams) -> dict[TupleClass, int]:
    """Class counts via (a, b) -> (a + b, a - b): each side is zero, in C_0, a QR or a QNR coset."""
    p1 = params.p1
    L = (params.Q - 1) // p1
    sizes = {"e0": 1, "n0": L * (p1 - 1) // 2, "n1": L * (p1 - 1) // 2, "n2": L}
    out: dict[TupleClass, int] = defaultdict(int)
    for x in sizes:
        for y in sizes:
            c = {"e0": 0, "n0": 0, "n1": 0, "n2": 0}
            c[x] += 1
            c[y] += 1
            out[TupleClass(c["e0"], c["n0"], c["n1"], c["n2"])] += sizes[x] * sizes[y]
    return dict(out)


def frequency_derivation_check(params: CodeParams) -> Report:
    rep = Report(f"frequencies {params.tuple}")
    rows = {r.cls: r.freq for r in table1(params)}
    for name, derived in (("identities", derived_frequencies(params)), ("bijection", bijection_frequencies(params))):
        for cls in TUPLE_CLASSES:
            rep.checked += 1
            if derived.get(cls) != rows[cls]:
                rep.fail(f"{name}: N{cls} = {derived.get(cls)} but the table has {rows[cls]}")
    rep.checked += 1
    if sum(rows.values()) != params.Q**2:
        rep.fail("frequency column does not sum to q^(2k)")
    return rep


def cyclotomic_fact_check(p: int, p1: int) -> Report:
    """|(<p> + u) cap <p>| = (p1 - 3)/4 for every u != 0 mod p1."""
    rep = Report(f"cyclotomic p={p} p1={p1}")
    group = cyclic_subgroup(p, p1)
    want = (p1 - 3) // 4
    for u in range(1, p1):
        rep.checked += 1
        got = sum(1 for x in group if (x + u) % p1 in group)
        if got != want:
            rep.fail(f"u={u}: {got} != {want}")
    return rep


def index2_pairs(bound: int, max_p: int | None = None) -> list[tuple[int, int]]:
    """(p, p1) with p1 < bound in the family, p the smallest prime of index 2 unless max_p is given."""
    out = []
    for p1 in range(7, bound, 4):
        if not is_prime(p1):
            continue
        for p in range(2, max_p or 10 * p1):
            if is_prime(p) and p != p1 and is_index2(p, p1):
                out.append((p, p1))
                if max_p is None:
                    break
    return out


def stratified_check(
    params: CodeParams, samples: int = 1000, seed: int = 0, generator_rank: int = 0, code: CyclicCode | None = None
) -> Report:
    """y_value(closed) equals the row picked by classify, for class representatives and random pairs."""
    code = code or CyclicCode(params, generator_rank)
    pinned = pin_to_field(code.field, params.p1)
    rows = {r.cls: r for r in table1(params, pinned)}
    rep = Report(f"stratified {params.tuple} rank={generator_rank}")
    rng = np.random.default_rng(seed)
    for cls in TUPLE_CLASSES:
        if rows[cls].y != y_for_class(params, pinned, cls):
            rep.fail(f"row for {cls} disagrees with the class formula")
        for gen in (None, rng):
            a, b = code.construct_representative(cls, gen)
            rep.checked += 1
            y = code.y_value(a, b, "closed")
            if y != rows[cls].y:
                rep.fail(f"representative of {cls}: Y = {y}, table {rows[cls].y}")
    for _ in range(samples):
        a, b = code.field.random(rng), code.field.random(rng)
        cls = code.classify(a, b)
        rep.checked += 1
        y = code.y_value(a, b, "closed")
        if y != rows[cls].y:
            rep.fail(f"a={a.as_tuple()} b={b.as_tuple()} class {cls}: Y = {y}, table {rows[cls].y}")
    return rep


# LaTeX ------------------------------------------------------------------
def _ell_poly(c1: int, c2: int) -> str:
    parts = []
    for coef, mono in ((c2, r"\ell^2"), (c1, r"\ell")):
        if coef:
            parts.append(mono if coef == 1 else f"{coef}{mono}")
    return parts[0] if len(parts) == 1 else "(" + "+".join(parts) + ")"


def _weight_tex(params: CodeParams, y: int, e0: int, lg: LiftedGauss) -> str | None:
    """Weight as cA(B - v) or cA(2B - v), A = P/q and B = q^k/P; None if A is not integral."""
    P = params.p**lg.prefactor_exp
    if P % params.q or params.Q % P:
        return None
    scale = params.h // 2
    # Y = e0 Q + u P, weight = (h/2)(2Q - Y)/q = (h/2) A ((2 - e0) B - u)
    u = (y - e0 * params.Q) // P
    if (y - e0 * params.Q) % P:
        return None
    coef_b = 2 - e0
    if coef_b == 2 and u % 2 == 0:
        scale, coef_b, u = scale * 2, 1, u // 2
    inner = ("B" if coef_b == 1 else f"{coef_b}B") + (f"-{u}" if u > 0 else f"+{-u}" if u < 0 else "")
    return (f"{scale}" if scale != 1 else "") + f"A({inner})"


def latex_enumerator(params: CodeParams, lifted: LiftedGauss | None = None) -> str:
    """The weight enumerator 1 + sum A_w x^w in the style A = P/q, B = q^k/P, ell = (q^k-1)/p1."""
    lg = lifted or default_lifted(params)
    terms: dict[int, list] = {}
    order = []
    for row in table1(params, lg)[1:]:
        w = weight_of_y(params, row.y)
        if w not in terms:
            tex = _weight_tex(params, row.y, row.cls.e0, lg) or str(w)
            terms[w] = [0, 0, tex]
            order.append(w)
        terms[w][0] += row.freq_coeff[1]
        terms[w][1] += row.freq_coeff[2]
    body = "+".join(f"{_ell_poly(c1, c2)} x^{{{tex}}}" for c1, c2, tex in (terms[w] for w in order))
    P = params.p**lg.prefactor_exp
    legend = rf"A={params.p}^{{{lg.prefactor_exp - params.f}}},B={params.p}^{{{params.fk - lg.prefactor_exp}}}" if P % params.q == 0 else ""
    legend += rf",\ell=({params.p}^{{{params.fk}}}-1)/{params.p1}"
    return f"1+{body}" + (f"\\quad\\text{{where }} {legend.lstrip(',')}")
