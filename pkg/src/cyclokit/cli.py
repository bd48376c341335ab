"""Command-line surface: construction, resultants, inverses, sweeps, torus demo.

Every command prints a single JSON envelope on stdout:

    {"command": ..., "params": ..., "result": ..., "elapsed_ms": ...}

Verification sweeps additionally stream one JSON line per checked
instance before the summary envelope. Polynomials always serialize as
little-endian decimal-string arrays with an explicit denominator field.

Exit codes: 0 success; 1 a mathematical check failed; 2 usage error;
3 a mathematical precondition or resource ceiling was violated.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .cyclotomic import (
    PrimePair,
    cyclotomic,
    lam_leung_phi_pr,
    primes_upto,
    resultant_apostol,
)
from .finitefield import make_ext_field, random_nonzero
from .intpoly import IntPoly, NotCoprimeError, ScaledPoly, resultant
from .inverses import difference_inverse, inverse_mod, verify_closed_forms
from .torus import (
    TorusMembershipError,
    decompose,
    derive_exponent_polys,
    derive_params,
    kernel_annihilator,
    recombine,
    theta,
    theta_dimensions,
    theta_reverse,
    composite_exponents,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3

VERIFY_CEILING = 31
FIELD_ORDER_CEILING = 2**128


class UsageError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def _poly_payload(value: IntPoly | ScaledPoly) -> dict:
    if isinstance(value, IntPoly):
        return {"num": value.to_decimal_strings(), "den": "1"}
    return value.to_json_dict()


def _emit(command: str, params: dict, result, started: float) -> None:
    envelope = {
        "command": command,
        "params": params,
        "result": result,
        "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }
    print(json.dumps(envelope))


def _cmd_phi(args) -> tuple[dict, dict, int]:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    return {"n": args.n}, _poly_payload(cyclotomic(args.n)), EXIT_OK


def _cmd_res(args) -> tuple[dict, dict, int]:
    if args.m < 1 or args.n < 1:
        raise UsageError("indices must be >= 1")
    value = resultant(cyclotomic(args.m), cyclotomic(args.n))
    return {"m": args.m, "n": args.n}, {"resultant": str(value)}, EXIT_OK


def _cmd_inv(args) -> tuple[dict, dict, int]:
    if args.m < 1 or args.n < 1:
        raise UsageError("indices must be >= 1")
    inv = inverse_mod(args.m, args.n)
    return {"m": args.m, "n": args.n}, _poly_payload(inv), EXIT_OK


def _cmd_eval(args) -> tuple[dict, dict, int]:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    return (
        {"n": args.n, "q": args.q},
        {"value": str(cyclotomic(args.n).evaluate(args.q))},
        EXIT_OK,
    )


def _verify_theorem1(bound: int):
    primes = primes_upto(bound)
    for p in primes:
        for r in primes:
            if p == r:
                continue
            for report in verify_closed_forms(PrimePair.of(p, r)):
                line = report.to_json_dict()
                line["ok"] = report.bound_satisfied
                yield line


def _verify_resultants(bound: int):
    for m in range(2, bound + 1):
        phi_m = cyclotomic(m)
        for n in range(1, m):
            closed = resultant_apostol(m, n)
            generic = resultant(phi_m, cyclotomic(n))
            ok = closed == abs(generic) and (n == 1 or generic > 0)
            yield {
                "m": m,
                "n": n,
                "closed": str(closed),
                "generic": str(generic),
                "ok": ok,
            }


def _verify_lamleung(bound: int):
    primes = primes_upto(bound)
    for i, p in enumerate(primes):
        for r in primes[i + 1 :]:
            built = lam_leung_phi_pr(p, r)
            ok = built == cyclotomic(p * r) and all(
                c in (-1, 0, 1) for c in built.coeffs
            )
            yield {"p": p, "r": r, "ok": ok}


def _verify_alternation(bound: int):
    primes = primes_upto(bound)
    for p in primes:
        for r in primes:
            if p == r:
                continue
            try:
                du = difference_inverse(p, r)
                ok = True
                coeffs = du.to_decimal_strings()
            except ValueError:
                ok, coeffs = False, []
            yield {"p": p, "r": r, "ok": ok, "coeffs": coeffs}


_VERIFY_MODES = {
    "theorem1": _verify_theorem1,
    "resultants": _verify_resultants,
    "lamleung": _verify_lamleung,
    "alternation": _verify_alternation,
}


def _cmd_verify(args) -> tuple[dict, dict, int]:
    if args.max < 2 or args.max > VERIFY_CEILING:
        raise UsageError(f"--max must lie in [2, {VERIFY_CEILING}]")
    checked = failed = 0
    for line in _VERIFY_MODES[args.mode](args.max):
        checked += 1
        if not line["ok"]:
            failed += 1
        print(json.dumps(line))
    result = {"mode": args.mode, "max": args.max, "checked": checked, "failed": failed}
    return (
        {"mode": args.mode, "max": args.max},
        result,
        EXIT_OK if failed == 0 else EXIT_CHECK_FAILED,
    )


def _torus_guard(q: int, p: int, r: int) -> None:
    if q < 2:
        return
    # bit-length pretest keeps the guard cheap for absurd inputs
    definitely_over = p * r * (q.bit_length() - 1) > 128
    if definitely_over or q ** (p * r) > FIELD_ORDER_CEILING:
        raise PreconditionError(
            f"field order q^(p*r) exceeds the ceiling 2^128 for q={q}, p={p}, r={r}"
        )


def _torus_params_payload(args) -> dict:
    p, r = args.p, args.r
    if args.q == 0:  # symbolic mode: keep q as the indeterminate
        exps = derive_exponent_polys(p, r)
        return {
            "symbolic": True,
            "u1": _poly_payload(exps.u1),
            "u_pr": _poly_payload(exps.u_pr),
            "u_p": _poly_payload(exps.u_p),
            "u_r": _poly_payload(exps.u_r),
            "v1": _poly_payload(exps.v1),
            "v2": _poly_payload(exps.v2),
        }
    params = derive_params(args.q, p, r)
    return {
        "symbolic": False,
        "u1": _poly_payload(params.u1),
        "u_pr": _poly_payload(params.u_pr),
        "u_p": _poly_payload(params.u_p),
        "u_r": _poly_payload(params.u_r),
        "v1": _poly_payload(params.v1),
        "v2": _poly_payload(params.v2),
        "evaluations": {
            "u1": str(params.u1_q),
            "u_pr": str(params.u_pr_q),
            "u_p": str(params.u_p_q),
            "u_r": str(params.u_r_q),
            "v1": str(params.v1_q),
            "v2": str(params.v2_q),
        },
        "norm_exponents": {str(k): str(v) for k, v in sorted(params.norm_exponents.items())},
    }


def _torus_roundtrip_payload(args) -> tuple[dict, int]:
    n = args.p * args.r
    params = derive_params(args.q, args.p, args.r)
    field = make_ext_field(args.q, n)
    rng = random.Random(args.seed)
    passes = 0

    def coeffs(e):
        return [str(c) for c in e.coeffs]

    for i in range(args.count):
        x = random_nonzero(field, rng)
        comps = decompose(x, params)
        back = recombine(comps, params)
        ok = back == x**n
        if ok:
            passes += 1
        if i < args.vectors:  # regression-pinnable test vectors, one JSON line each
            print(
                json.dumps(
                    {
                        "x": coeffs(x),
                        "components": {
                            "t1": coeffs(comps.t1),
                            "tp": coeffs(comps.tp),
                            "tr": coeffs(comps.tr),
                            "tpr": coeffs(comps.tpr),
                        },
                        "recombined": coeffs(back),
                        "ok": ok,
                    }
                )
            )
    payload = {
        "count": args.count,
        "passes": passes,
        "seed": args.seed,
        "field": {
            "q": str(args.q),
            "n": n,
            "modulus": field.modulus.to_decimal_strings(),
        },
    }
    return payload, EXIT_OK if passes == args.count else EXIT_CHECK_FAILED


def _torus_theta_payload(args) -> tuple[dict, int]:
    q, p, r = args.q, args.p, args.r
    n = p * r
    params = derive_params(q, p, r)
    big = make_ext_field(q, n)
    field_p = make_ext_field(q, p)
    field_r = make_ext_field(q, r)
    rng = random.Random(args.seed)
    d_x, d_p, d_r = composite_exponents(params)
    passes = 0
    for _ in range(args.count):
        x = random_nonzero(big, rng) ** params.norm_exponents[n]
        xp = random_nonzero(field_p, rng)
        xr = random_nonzero(field_r, rng)
        x1, xpr = theta(x, xp, xr, params)
        back = theta_reverse(x1, xpr, params)
        if back == (x**d_x, xp**d_p, xr**d_r):
            passes += 1
    ins, outs = theta_dimensions(p, r)
    kern = kernel_annihilator(params)
    payload = {
        "count": args.count,
        "passes": passes,
        "seed": args.seed,
        "dimensions": {
            "domain": list(ins),
            "codomain": list(outs),
            "balanced": sum(ins) == sum(outs),
        },
        "kernel": {"exponent": str(kern.exponent), "power": kern.power},
    }
    return payload, EXIT_OK if passes == args.count else EXIT_CHECK_FAILED


def _cmd_torus(args) -> tuple[dict, dict, int]:
    if args.p < 2 or args.r < 2 or args.q < 0:
        raise UsageError("q, p, r must be positive (q may be 0 for symbolic params)")
    params_desc = {"action": args.action, "q": args.q, "p": args.p, "r": args.r}
    if args.action == "params":
        if args.q != 0:
            _torus_guard(args.q, args.p, args.r)
        return params_desc, _torus_params_payload(args), EXIT_OK
    if args.q == 0:
        raise UsageError("this action needs a prime q")
    _torus_guard(args.q, args.p, args.r)
    params_desc.update({"count": args.count, "seed": args.seed})
    if args.action == "roundtrip":
        payload, code = _torus_roundtrip_payload(args)
    else:
        payload, code = _torus_theta_payload(args)
    return params_desc, payload, code


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cyclokit",
        description="exact cyclotomic-polynomial arithmetic, inverses, and torus maps",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_phi = sub.add_parser("phi", help="coefficients of the n-th cyclotomic polynomial")
    p_phi.add_argument("n", type=int)

    p_res = sub.add_parser("res", help="resultant of two cyclotomic polynomials")
    p_res.add_argument("m", type=int)
    p_res.add_argument("n", type=int)

    p_inv = sub.add_parser("inv", help="inverse of the m-th cyclotomic mod the n-th")
    p_inv.add_argument("m", type=int)
    p_inv.add_argument("n", type=int)

    p_eval = sub.add_parser("eval", help="evaluate the n-th cyclotomic at an integer")
    p_eval.add_argument("n", type=int)
    p_eval.add_argument("q", type=int)

    p_verify = sub.add_parser("verify", help="verification sweeps (line-delimited JSON)")
    p_verify.add_argument("--mode", choices=sorted(_VERIFY_MODES), required=True)
    p_verify.add_argument("--max", type=int, default=13)

    p_torus = sub.add_parser("torus", help="subgroup decomposition demos")
    p_torus.add_argument("action", choices=["params", "roundtrip", "theta-demo"])
    p_torus.add_argument("--q", type=int, required=True, help="prime base (0 = symbolic params)")
    p_torus.add_argument("--p", type=int, required=True)
    p_torus.add_argument("--r", type=int, required=True)
    p_torus.add_argument("--count", type=int, default=100)
    p_torus.add_argument("--seed", type=int, default=0)
    p_torus.add_argument(
        "--vectors", type=int, default=0,
        help="for roundtrip: emit the first N trials as JSON vector lines",
    )
    return top


_HANDLERS = {
    "phi": _cmd_phi,
    "res": _cmd_res,
    "inv": _cmd_inv,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "torus": _cmd_torus,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        params, result, code = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NotCoprimeError, TorusMembershipError, PreconditionError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(args.command, params, result, started)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
