"""Command-line entry point: ``index2codes <subcommand> [flags]``.

Every subcommand prints a JSON document (or LaTeX/text where offered) and
exits with status 0 exactly when no verification inside it failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

import numpy as np

from . import __version__
from .arith import is_prime
from .character_sums import Report, gauss_brute, gauss_float, gauss_property_suite, weil_sum_check_all
from .code_model import (
    DISTRIBUTION_LIMIT,
    CyclicCode,
    InvalidParameters,
    brute_weight_distribution,
    feasibility,
    search_params,
    validate,
)
from .finite_field import FieldElem, FieldError, build_field
from .gauss_index2 import (
    Index2Error,
    class_number,
    class_number_legendre,
    davenport_hasse_check,
    lifted_index2,
    pin_to_field,
    tower_pin_check,
)
from .predictor import (
    cyclotomic_fact_check,
    frequency_derivation_check,
    index2_pairs,
    latex_enumerator,
    predict_distribution,
    sign_invariance_check,
    stratified_check,
    table1,
)

EXAMPLE_PARAMS = (3, 5, 11, 2, 2)
CLOSED_FORM_CASES = ((3, 11), (11, 7), (23, 7), (5, 19))
EQ2_SETS = ((5, 1, 2, 4, 2), (11, 1, 5, 2, 2), (7, 1, 3, 2, 2), (13, 1, 3, 4, 2))
FREQUENCY_SETS = ((3, 5, 11, 2, 2), (3, 5, 11, 22, 2), (11, 3, 7, 2, 2), (23, 3, 7, 158, 2), (5, 9, 19, 2, 2))
STRATIFIED_SETS = ((3, 5, 11, 2, 2), (11, 3, 7, 2, 2))


def _prime_powers(limit: int) -> list[tuple[int, int]]:
    out = []
    for p in range(2, limit + 1):
        if is_prime(p):
            d, q = 1, p
            while q <= limit:
                out.append((p, d))
                d, q = d + 1, q * p
    return sorted(out, key=lambda t: t[0] ** t[1])


def enumerable_sets(limit: int = 10**7, max_p: int = 13, max_fk: int = 14) -> list:
    """Parameter sets with e = 2 and q^(2k) <= limit; the index-2 family itself never qualifies."""
    max_qk = int(limit**0.5)
    return search_params(max_p, max_fk, index2_only=False, e=2, max_qk=max_qk)


# worked example --------------------------------------------------------
def run_example() -> Report:
    rep = Report("example (p,f,k,h,e) = (3,5,11,2,2)")
    params = validate(*EXAMPLE_PARAMS)

    def check(label: str, got, want) -> None:
        rep.checked += 1
        if got != want:
            rep.fail(f"{label}: got {got}, expected {want}")

    check("index-2 valid", params.index2_valid, True)
    check("p1", params.p1, 11)
    check("s", params.s, 11)
    check("dimension", params.dimension, 22)
    check("length", params.n, 2 * (3**55 - 1) // (3**5 - 1))
    check("class number", class_number(11), 1)
    lg = lifted_index2(3, 11, 11)
    check("a_11", lg.a_s, 67)
    check("|b_11|", abs(lg.b_s), 253)
    check("prefactor exponent", lg.prefactor_exp, 22)
    check("sign", lg.sign, 1)
    A, B, L = 3**17, 3**33, (3**55 - 1) // 11
    expected = {
        0: 1,
        2 * A * (B - 1358): 25 * L * L,
        2 * A * (B + 1425): 25 * L * L,
        2 * A * (B - 335): L * L,
        A * (B - 1358): 10 * L,
        A * (B + 1425): 10 * L,
        A * (B - 335): 2 * L,
        A * (2 * B + 67): 50 * L * L,
        A * (2 * B - 1693): 10 * L * L,
        2 * A * (B + 545): 10 * L * L,
    }
    dist = predict_distribution(params)
    got = dist.as_dict()
    for w, c in expected.items():
        check(f"count of weight {w}", got.get(w), c)
    check("number of distinct weights", len(got), len(expected))
    check("minimum distance", dist.min_distance, A * (B - 1358))
    for msg in dist.check().failures:
        rep.fail(msg)
    return rep


# verification suites --------------------------------------------------
def closed_form_check(p: int, p1: int) -> Report:
    """Pinned closed form equals the brute-force sum for every nontrivial chi^j, plus a float cross-check."""
    f = (p1 - 1) // 2
    ctx = build_field(p, f)
    rep = Report(f"closed form vs brute force F_{p}^{f}, p1={p1}")
    closed = pin_to_field(ctx, p1)
    value = closed.value()
    for j in range(1, p1):
        rep.checked += 1
        if gauss_brute(ctx, p1, j) != value.conj(j):
            rep.fail(f"exact mismatch at j={j}")
    rep.checked += 1
    if abs(gauss_float(ctx, p1, 1) - complex(closed)) > 1e-6 * ctx.order**0.5:
        rep.fail("float cross-check outside 1e-6 sqrt(q)")
    return rep


def eq2_check(t: tuple, samples: int, seed: int) -> Report:
    params = validate(*t)
    code = CyclicCode(params)
    rng = np.random.default_rng(seed)
    rep = Report(f"coset-sum identity {t} m={params.m}")
    pairs = [(code.field.zero, code.field.zero)] + [
        (code.field.random(rng), code.field.random(rng)) for _ in range(samples)
    ]
    for a, b in pairs:
        rep.checked += 1
        z = code.z_direct(a, b)
        zc = code.z_charsum(a, b, "brute")
        if z != zc:
            rep.fail(f"a={a.as_tuple()} b={b.as_tuple()}: direct {z} vs coset sums {zc}")
        if code.weight(a, b) != params.n - z:
            rep.fail("weight != n - Z")
    return rep


def distribution_sweep(limit: int = 10**7) -> Report:
    rep = Report(f"brute-force distributions q^(2k) <= {limit}")
    for params in enumerable_sets(limit):
        rep.checked += 1
        dist = brute_weight_distribution(params, limit=limit)
        for msg in dist.check().failures:
            rep.fail(f"{params.tuple}: {msg}")
    return rep


def _merge(name: str, reports: list[Report]) -> Report:
    out = Report(name)
    for r in reports:
        out.checked += r.checked
        out.failures.extend(f"[{r.name}] {msg}" for msg in r.failures)
    return out


def verify_all(seed: int = 0, level: str = "quick") -> list[Report]:
    full = level == "full"
    suites: list[tuple[str, Callable[[], list[Report]]]] = [
        ("example", lambda: [run_example()]),
        (
            "character_sums",
            lambda: [
                gauss_property_suite(build_field(3, 2), 8),
                gauss_property_suite(build_field(7, 1), 6),
                gauss_property_suite(build_field(2, 4), 15),
            ]
            + [weil_sum_check_all(build_field(p, d)) for p, d in _prime_powers(81 if full else 27)],
        ),
        (
            "gauss_index2",
            lambda: [closed_form_check(p, p1) for p, p1 in CLOSED_FORM_CASES[: 4 if full else 3]]
            + [tower_pin_check(3, 11, 11), tower_pin_check(11, 7, 7)]
            + [davenport_hasse_check(p, d) for p, d in _prime_powers(121 if full else 49)]
            + [class_number_report(500)],
        ),
        (
            "code_model",
            lambda: [eq2_check(t, 20, seed) for t in EQ2_SETS]
            + ([distribution_sweep()] if full else [distribution_sweep(10**5)]),
        ),
        (
            "predictor",
            lambda: [sign_invariance_check(validate(*t)) for t in FREQUENCY_SETS]
            + [frequency_derivation_check(validate(*t)) for t in FREQUENCY_SETS]
            + [cyclotomic_fact_check(p, p1) for p, p1 in index2_pairs(200)]
            + [stratified_check(validate(*t), 1000 if full else 100, seed) for t in STRATIFIED_SETS]
            + ([stratified_check(validate(*STRATIFIED_SETS[1]), 100, seed, generator_rank=1)] if full else []),
        ),
    ]
    return [_merge(name, fn()) for name, fn in suites]


def class_number_report(bound: int) -> Report:
    rep = Report(f"class numbers p1 < {bound}")
    for p1 in range(7, bound, 4):
        if is_prime(p1):
            rep.checked += 1
            a, b = class_number(p1), class_number_legendre(p1)
            if a != b:
                rep.fail(f"p1={p1}: forms {a}, Legendre sum {b}")
    return rep


# argument handling ----------------------------------------------------
def _add_params(sp: argparse.ArgumentParser) -> None:
    for name in ("p", "f", "k", "h", "e"):
        sp.add_argument(f"--{name}", type=int, required=True)


def _params(args) -> tuple[int, int, int, int, int]:
    return (args.p, args.f, args.k, args.h, args.e)


def _elem(ctx, text: str | None, rng) -> FieldElem:
    if text is None:
        return ctx.random(rng)
    coords = [int(c) for c in text.split(",")]
    coords += [0] * (ctx.d - len(coords))
    return FieldElem(ctx, coords[: ctx.d])


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "text" and isinstance(obj, dict):
        for key in sorted(obj):
            print(f"{key}: {obj[key]}")
    else:
        print(json.dumps(obj, indent=2, sort_keys=True))


def _emit_reports(reports: list[Report], fmt: str) -> int:
    ok = all(r.passed for r in reports)
    if fmt == "text":
        for r in reports:
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checked} checks)")
            for msg in r.failures:
                print(f"    {msg}")
    else:
        _emit({"passed": ok, "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="index2codes", description="Index-2 Gauss sums and two-zero cyclic codes.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name: str, help_: str, params: bool = False) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        if params:
            _add_params(sp)
        sp.add_argument("--format", choices=("json", "text", "latex"), default="json")
        return sp

    add("validate", "derived quantities and index-2 flag", True)
    sp = add("search-params", "enumerate parameter sets within bounds")
    sp.add_argument("--max-p", type=int, required=True)
    sp.add_argument("--max-fk", type=int, required=True)
    sp.add_argument("--max-p1", type=int)
    sp.add_argument("--max-qk", type=int)
    sp.add_argument("--e", type=int, default=2)
    sp.add_argument("--all", action="store_true", help="include sets outside the index-2 family")
    sp.add_argument("--max-enum", type=int, default=DISTRIBUTION_LIMIT)
    add("predict", "closed-form weight distribution", True)
    sp = add("brute", "brute-force weight distribution", True)
    sp.add_argument("--max-enum", type=int, default=DISTRIBUTION_LIMIT)
    sp.add_argument("--method", choices=("auto", "split", "literal"), default="auto")
    sp = add("classify", "tuple class and Y value of a pair (a, b)", True)
    sp.add_argument("--a", help="comma-separated F_p coordinates")
    sp.add_argument("--b", help="comma-separated F_p coordinates")
    sp.add_argument("--seed", type=int, default=0)
    sp = add("gauss-brute", "brute-force Gauss sum over F_(p^f)")
    for name in ("p", "f", "p1"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.add_argument("--j", type=int, default=1)
    for name, help_ in (("gauss-closed", "closed-form value for chi(alpha) = zeta_p1"), ("gauss-compare", "closed vs brute")):
        sp = add(name, help_)
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--p1", type=int, required=True)
        sp.add_argument("--s", type=int, default=1)
    sp = add("lift", "lifted coefficients (a_s, b_s), canonical b >= 0 seed")
    for name in ("p", "p1", "s"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp = add("class-number", "class number of Q(sqrt(-p1)) by two methods")
    sp.add_argument("--p1", type=int, required=True)
    sp = add("verify-eq2", "direct count vs coset-sum identity for Z", True)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("verify-table1", "stratified check of the value table", True)
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--generator-rank", type=int, default=0)
    add("example", "reproduce the documented index-2 example")
    sp = add("verify-all", "run every invariant suite")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    sp.add_argument("--seed", type=int, default=0)
    return ap


def _gauss_closed_json(p: int, p1: int, s: int) -> dict:
    f = (p1 - 1) // 2
    ctx = build_field(p, f * s)
    return pin_to_field(ctx, p1).to_json()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    fmt = args.format
    try:
        return _dispatch(args, fmt)
    except (InvalidParameters, Index2Error, FieldError, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2


def _dispatch(args, fmt: str) -> int:
    cmd = args.cmd
    if cmd == "validate":
        _emit(validate(*_params(args)).to_json(), fmt)
        return 0
    if cmd == "search-params":
        found = search_params(args.max_p, args.max_fk, args.max_p1, not args.all, args.e, args.max_qk)
        _emit([dict(c.to_json(), feasibility=feasibility(c, args.max_enum)) for c in found])
        return 0
    if cmd == "predict":
        params = validate(*_params(args))
        if fmt == "latex":
            print(latex_enumerator(params))
        else:
            body = predict_distribution(params).to_json()
            body["table"] = [r.to_json() for r in table1(params)]
            _emit(body)
        return 0
    if cmd == "brute":
        params = validate(*_params(args))
        dist = brute_weight_distribution(params, args.method, args.max_enum)
        rep = dist.check()
        _emit(dict(dist.to_json(), check=rep.to_json()))
        return 0 if rep.passed else 1
    if cmd == "classify":
        params = validate(*_params(args))
        code = CyclicCode(params)
        rng = np.random.default_rng(args.seed)
        a, b = _elem(code.field, args.a, rng), _elem(code.field, args.b, rng)
        cls = code.classify(a, b)
        y = code.y_value(a, b, "closed")
        rows = {r.cls: r for r in table1(params, pin_to_field(code.field, params.p1))}
        _emit(
            {
                "a": list(a.as_tuple()),
                "b": list(b.as_tuple()),
                "class": str(cls),
                "row": rows[cls].label,
                "y": str(y),
                "weight": str(code.weight_from_y(params, y)),
                "matches_table": y == rows[cls].y,
            }
        )
        return 0 if y == rows[cls].y else 1
    if cmd == "gauss-brute":
        ctx = build_field(args.p, args.f)
        g = gauss_brute(ctx, args.p1, args.j)
        _emit(dict(g.to_json(), p=args.p, f=args.f, n=args.p1, j=args.j))
        return 0
    if cmd == "gauss-closed":
        _emit(_gauss_closed_json(args.p, args.p1, args.s))
        return 0
    if cmd == "gauss-compare":
        f = (args.p1 - 1) // 2
        ctx = build_field(args.p, f * args.s)
        closed = pin_to_field(ctx, args.p1)
        ok = gauss_brute(ctx, args.p1, 1) == closed.value()
        err = abs(gauss_float(ctx, args.p1, 1) - complex(closed))
        _emit(dict(closed.to_json(), exact_equal=ok, float_error=err))
        return 0 if ok else 1
    if cmd == "lift":
        _emit(lifted_index2(args.p, args.p1, args.s).to_json())
        return 0
    if cmd == "class-number":
        a, b = class_number(args.p1), class_number_legendre(args.p1)
        _emit({"p1": args.p1, "reduced_forms": a, "legendre_sum": b, "agree": a == b})
        return 0 if a == b else 1
    if cmd == "verify-eq2":
        return _emit_reports([eq2_check(_params(args), args.samples, args.seed)], fmt)
    if cmd == "verify-table1":
        params = validate(*_params(args))
        return _emit_reports([stratified_check(params, args.samples, args.seed, args.generator_rank)], fmt)
    if cmd == "example":
        if fmt == "latex":
            print(latex_enumerator(validate(*EXAMPLE_PARAMS)))
            return 0 if run_example().passed else 1
        return _emit_reports([run_example()], fmt)
    if cmd == "verify-all":
        return _emit_reports(verify_all(args.seed, args.level), fmt)
    raise AssertionError(cmd)  # pragma: no cover


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
