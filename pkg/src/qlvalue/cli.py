"""Command-line front end: single values, sweeps, local data, self-test.

Exit codes: 0 success, 1 bound violation found, 2 invalid input,
3 recognition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import QLError, Unrecognized
from .gauss import GaussInt, ONE
from .hecke import decompose, normalize_twist
from .lemni import PrecisionCtx, omega, omega_integral, wp, wp_prime
from .localdata import good_reduction_at_2, local_data, minimal_model_at_2
from .lvalue import (
    AlgebraicLValue,
    Val2,
    bound,
    check_bound,
    default_ctx,
    finite_sum_corollary,
    finite_sum_theorem,
    l2_value,
)
from .tables import TABLE_PRIME, TABLE_PRIME_SQUARE

__all__ = ["main"]


@dataclass
class ResultRow:
    v2: str
    d: str
    d1: str
    d2: str
    d3: str
    i_symbol: str
    bound: str
    ok: bool

    def as_dict(self) -> dict:
        return {
            "v2": self.v2,
            "D": self.d,
            "D1": self.d1,
            "D2": self.d2,
            "D3": self.d3,
            "i_symbol": self.i_symbol,
            "bound": self.bound,
            "ok": self.ok,
        }

    def as_csv(self) -> str:
        d = self.as_dict()
        d["ok"] = "true" if self.ok else "false"
        return ",".join(str(d[k]) for k in CSV_FIELDS)


CSV_FIELDS = ["v2", "D", "D1", "D2", "D3", "i_symbol", "bound", "ok"]


def _sym_str(s: GaussInt) -> str:
    return {(1, 0): "1", (-1, 0): "-1", (0, 1): "i", (0, -1): "-i"}[(s.re, s.im)]


def _class_str(primes, exp) -> str:
    if not primes:
        return "-"
    prod = ONE
    for p in primes:
        prod = prod * p.pow(exp)
    return str(prod)


def _row_for(d: GaussInt, lv: AlgebraicLValue) -> ResultRow:
    dec = decompose(d)
    lower = bound(dec)
    return ResultRow(
        v2=str(lv.v2),
        d=str(d),
        d1=_class_str(dec.s1, 1),
        d2=_class_str(dec.s2, 2),
        d3=_class_str(dec.s3, 3),
        i_symbol=_sym_str(dec.i_symbol),
        bound=str(lower),
        ok=lv.v2.meets(lower),
    )


def _emit_rows(rows: list[ResultRow], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        print(",".join(CSV_FIELDS), file=out)
        for r in rows:
            print(r.as_csv(), file=out)
    elif fmt == "json":
        print(json.dumps([r.as_dict() for r in rows], indent=2), file=out)
    else:
        widths = [6, 12, 10, 12, 10, 8, 6, 5]
        header = ["v2", "D", "D1", "D2", "D3", "i_sym", "bound", "ok"]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)), file=out)
        for r in rows:
            cells = [
                r.v2,
                r.d,
                r.d1,
                r.d2,
                r.d3,
                r.i_symbol,
                r.bound,
                "ok" if r.ok else "FAIL",
            ]
            print("  ".join(c.ljust(w) for c, w in zip(cells, widths)), file=out)


def _resolve_bits(args) -> int | None:
    if args.precision is not None:
        return args.precision
    env = os.environ.get("QL_PRECISION_BITS")
    return int(env) if env else None


def _parse_twist(text: str) -> GaussInt:
    raw = GaussInt.parse(text)
    norm = normalize_twist(raw)
    if norm.d != raw:
        print(f"note: input {raw} normalized to primary twist {norm.d}", file=sys.stderr)
    return norm.d


def cmd_compute(args) -> int:
    try:
        d = _parse_twist(args.D)
    except (QLError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    bits = _resolve_bits(args)
    t0 = time.monotonic()
    try:
        lv = l2_value(d, bits=bits)
    except Unrecognized as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except QLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - t0
    if d.is_unit():
        row = ResultRow(str(lv.v2), str(d), "-", "-", "-", "1", "-", True)
    else:
        row = _row_for(d, lv)
    _emit_rows([row], args.format)
    if args.format == "text":
        diag = (
            f"g={lv.g} m={lv.m} sqrt2={'yes' if lv.sqrt2_flag else 'no'} "
            f"odd_mult={lv.odd_mult} residual={lv.residual:.3e} "
            f"time={elapsed:.2f}s"
        )
        if lv.is_zero:
            diag = f"numerically zero below 2^-{lv.v2.zero_bits // 2} time={elapsed:.2f}s"
        print(diag)
    return 0 if row.ok else 1


def _shape_ok(dec, shape: str) -> bool:
    if shape == "any":
        return True
    if shape == "r1":
        return len(dec.s1) == 1 and not dec.s2 and not dec.s3
    if shape == "r1r2":
        return len(dec.s1) == 1 and len(dec.s2) == 1 and not dec.s3
    raise ValueError(f"unknown shape {shape}")


def sweep_twists(shape: str, max_abs: float) -> list[GaussInt]:
    """Primary quartic-free non-unit D with |D| <= max_abs, sorted."""
    r = int(max_abs)
    found = []
    for re in range(-r, r + 1):
        for im in range(-r, r + 1):
            if re * re + im * im > max_abs * max_abs:
                continue
            d = GaussInt(re, im)
            if not d.is_odd() or d.is_unit():
                continue
            try:
                dec = decompose(d)
            except QLError:
                continue
            if _shape_ok(dec, shape):
                found.append(d)
    found.sort(key=lambda z: (z.norm(), z.re, z.im))
    return found


def cmd_sweep(args) -> int:
    bits = _resolve_bits(args)
    rows = []
    failures = 0
    violation = False
    margin = None
    for d in sweep_twists(args.shape, args.max_abs):
        try:
            rep = check_bound(d, bits=bits)
        except Unrecognized as exc:
            print(f"error: {d}: {exc}", file=sys.stderr)
            failures += 1
            continue
        row = _row_for(d, rep.lvalue)
        rows.append(row)
        if not rep.ok:
            violation = True
        if not rep.v2.is_infinite:
            gap = rep.v2.value - rep.lower
            margin = gap if margin is None else min(margin, gap)
    _emit_rows(rows, args.format)
    if args.format == "text":
        print(
            f"# {len(rows)} rows, {failures} failures, "
            f"min v2-bound margin {margin if margin is not None else 'n/a'}"
        )
    if violation:
        return 1
    return 3 if failures else 0


def cmd_local(args) -> int:
    try:
        d = _parse_twist(args.D)
    except (QLError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        recs = local_data(d)
    except QLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "D": str(d),
        "good_at_2": good_reduction_at_2(d),
        "places": [
            {
                "place": str(rec.place),
                "kodaira": rec.kodaira,
                "m": rec.m,
                "v": rec.v,
                "f": rec.f,
                "c": rec.c,
            }
            for rec in recs
        ],
        "conductor": " * ".join(
            f"({rec.place})^{rec.f}" for rec in recs if rec.f
        )
        or "(1)",
    }
    if payload["good_at_2"]:
        model = minimal_model_at_2(d)
        payload["minimal_model_at_2"] = {
            "a1": _rat_str(model.a1),
            "a2": _rat_str(model.a2),
            "a3": _rat_str(model.a3),
            "a4": _rat_str(model.a4),
            "a6": _rat_str(model.a6),
            "s_parity": model.s_parity,
        }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"D = {payload['D']}  good reduction at 1+i: {payload['good_at_2']}")
        print("place        kodaira  m  v   f  c")
        for rec in payload["places"]:
            print(
                f"{rec['place']:<12} {rec['kodaira']:<8} {rec['m']:<2} "
                f"{rec['v']:<3} {rec['f']:<2} {rec['c']}"
            )
        print(f"conductor: {payload['conductor']}")
        if "minimal_model_at_2" in payload:
            mm = payload["minimal_model_at_2"]
            print(
                f"minimal model at 1+i (s {mm['s_parity']}): "
                f"y^2 + ({mm['a1']})xy + ({mm['a3']})y = "
                f"x^3 + ({mm['a2']})x^2 + ({mm['a4']})x + ({mm['a6']})"
            )
    return 0


def _rat_str(q) -> str:
    def part(f: Fraction, suffix: str = "") -> str:
        if suffix and abs(f.numerator) == 1 and f.denominator == 1:
            sign = "-" if f.numerator < 0 else ""
            return f"{sign}{suffix}"
        if f.denominator == 1:
            return f"{f.numerator}{suffix}"
        return f"{f.numerator}{suffix}/{f.denominator}"

    if q.im == 0:
        return part(q.re)
    if q.re == 0:
        return part(q.im, "i")
    sign = "+" if q.im > 0 else "-"
    return f"{part(q.re)} {sign} {part(abs(q.im), 'i')}"


def _selftest_checks(bits: int, subset: bool):
    """Yield (name, ok, detail) pairs."""
    ctx128 = PrecisionCtx(bits=128)
    with mp.workprec(200):
        om = omega(ctx128)
        oi = omega_integral(ctx128)
        ok = abs(om - oi) < mp.mpf(2) ** -100 and str(om)[:9] == "2.6220575"
        yield "omega-agm-vs-quadrature", ok, mp.nstr(om, 10)

        quarter = GaussInt(1, 0)
        four = GaussInt(4, 0)
        tors = GaussInt(1, 2)
        sqrt2 = mp.sqrt(2)
        checks = [
            ("wp(1/4)", wp(quarter, four, ctx128), 1 + sqrt2),
            ("wp'(1/4)", wp_prime(quarter, four, ctx128), -4 - 2 * sqrt2),
            ("wp((1+2i)/4)", wp(tors, four, ctx128), 1 - sqrt2),
            ("wp'((1+2i)/4)", wp_prime(tors, four, ctx128), 4 - 2 * sqrt2),
        ]
        for name, got, want in checks:
            yield name, abs(got - want) < mp.mpf(2) ** -118, mp.nstr(got, 10)

    ctx192 = PrecisionCtx(bits=192)
    with mp.workprec(260):
        anchor = finite_sum_theorem(GaussInt(1, 0), GaussInt(-3, 0), ctx192)
        ok = abs(anchor + mp.sqrt(2)) < mp.mpf(2) ** -96
        yield "anchor-sum-minus-sqrt2", ok, mp.nstr(anchor, 10)

    bad = 0
    for v2_want, d_text, sym_want in TABLE_PRIME:
        d = GaussInt.parse(d_text)
        dec = decompose(d)
        lv = l2_value(d, bits=bits)
        got = str(lv.v2)
        if got != v2_want or _sym_str(dec.i_symbol) != sym_want:
            bad += 1
    yield "prime-twist-table", bad == 0, f"{bad} mismatches of {len(TABLE_PRIME)}"

    agree_bad = 0
    with mp.workprec(bits + 16):
        tol = mp.mpf(2) ** -(bits // 2)
        for d_text in ("-3", "-2i+3", "2i-1", "-4i+1", "2i-5", "6i-1", "-7"):
            d = GaussInt.parse(d_text)
            ctx = default_ctx(d, bits)
            a = finite_sum_theorem(d, d, ctx)
            b = finite_sum_corollary(d, d, ctx)
            if abs(a - b) >= tol:
                agree_bad += 1
    yield "evaluator-agreement", agree_bad == 0, f"{agree_bad} disagreements"

    if subset:
        bad = 0
        total = 0
        seen = set()
        for v2_want, d1_text, d2_text, _sym in TABLE_PRIME_SQUARE:
            key = (v2_want, d1_text, d2_text)
            if key in seen:
                continue  # the source table repeats one row
            seen.add(key)
            d1 = GaussInt.parse(d1_text)
            d2 = GaussInt.parse(d2_text)
            if (d1 * d2).norm() > 10**5:
                continue
            total += 1
            d = d1 * d2 * d2
            lv = l2_value(d, bits=bits)
            if str(lv.v2) != v2_want:
                bad += 1
        yield "prime-square-table-subset", bad == 0, f"{bad} mismatches of {total}"


def cmd_selftest(args) -> int:
    bits = _resolve_bits(args) or 192
    failed = 0
    for name, ok, detail in _selftest_checks(bits, args.subset):
        status = "pass" if ok else "FAIL"
        print(f"{status}  {name}  ({detail})")
        if not ok:
            failed += 1
    print(f"# selftest: {failed} failures")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qlv",
        description="Central L-values of quartic twists y^2 = x^3 + Dx over Q(i).",
    )
    ap.add_argument("--precision", type=int, metavar="BITS", default=None)
    ap.add_argument("--format", choices=["json", "csv", "text"], default="text")
    ap.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for interface stability; evaluation is sequential",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("compute", help="one twist, full pipeline")
    p.add_argument("-D", required=True, help='Gaussian integer, e.g. "-1+2i"')
    p.set_defaults(fn=cmd_compute)

    p = sub.add_parser("sweep", help="all twists up to a radius")
    p.add_argument("--shape", choices=["r1", "r1r2", "any"], default="any")
    p.add_argument("--max-abs", type=float, required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("local", help="reduction data and conductor")
    p.add_argument("-D", required=True)
    p.set_defaults(fn=cmd_local)

    p = sub.add_parser("selftest", help="regression suite")
    p.add_argument("--subset", action="store_true", help="include square-class table rows of moderate size")
    p.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse rejects option values with a leading dash ("-D -3"), so
    # attach the twist to its flag before parsing.
    merged = []
    skip = False
    for idx, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "-D" and idx + 1 < len(argv):
            merged.append("-D" + argv[idx + 1])
            skip = True
        else:
            merged.append(tok)
    args = build_parser().parse_args(merged)
    if args.precision is not None and args.precision < 64:
        print("error: --precision must be at least 64", file=sys.stderr)
        return 2
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
