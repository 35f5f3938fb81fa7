"""Command-line interface.

Subcommands: triangle, poly, numbers, normal-order, verify, sweep.
Output is deterministic byte for byte: JSON is emitted with sorted keys
and fixed separators, integers travel as decimal strings, and parallel
runs (--jobs) merge results in the same order as sequential ones.

Exit codes: 0 when everything requested passed, 1 on a failing report or
an internal error, 2 on invalid flags or expressions (with no output
written in that case).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import acceptance, identities, opexpr, triangles
from .report import VerificationReport


class UsageError(Exception):
    pass


# axes per identity, in sweep order; (lo, hi) defaults are deliberately small
_AXES: dict[str, tuple[str, ...]] = {
    "spivey": ("n", "mshift"),
    "bell-rec": ("n",),
    "stirling-def": ("n",),
    "result1": ("n", "mshift", "x"),
    "result2": ("n", "l", "m", "r", "x"),
    "result3": ("n", "l", "m", "r"),
    "katriel": ("n", "l"),
    "lem1": ("k",),
    "lem2": ("k", "cap"),
    "lem3": ("k",),
    "lem4": ("k", "m", "r"),
    "triangle-oracle": ("n", "m", "r"),
    "whitney-special": ("k", "m"),
}

_DEFAULTS: dict[str, tuple[int, int]] = {
    "n": (0, 6),
    "mshift": (0, 4),
    "l": (0, 4),
    "m": (1, 2),
    "r": (0, 1),
    "x": (0, 3),
    "k": (1, 6),
    "cap": (10, 10),
}

_DEFAULT_OVERRIDES: dict[str, dict[str, tuple[int, int]]] = {
    "lem2": {"k": (0, 3)},
    "lem4": {"m": (0, 2), "r": (0, 2)},
    "whitney-special": {"k": (6, 6)},
}

_VARIANT_IDENTITIES = ("result1", "result2", "result3")
_M_GE_1_IDENTITIES = ("result2", "result3", "whitney-special")


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    """Inclusive integer range: 'lo..hi' or a single value."""
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"{flag}: expected an integer or lo..hi, got {text!r}")
    if lo < 0 or hi < 0:
        raise UsageError(f"{flag}: values must be nonnegative")
    if lo > hi:
        raise UsageError(f"{flag}: empty range {text!r}")
    return lo, hi


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _verify_task(task: tuple[str, str | None, dict]) -> VerificationReport:
    identity, variant, params = task
    return identities.run_case(identity, variant, params)


def cmd_triangle(args: argparse.Namespace) -> tuple[str, int]:
    kind = args.kind
    n = args.n
    if n is None:
        raise UsageError("triangle: --n is required")
    if n < 0:
        raise UsageError("triangle: --n must be nonnegative")
    whitney = kind in ("r-whitney", "qr-whitney")
    if whitney:
        if args.m is None:
            raise UsageError(f"triangle: --m is required for kind {kind}")
        if args.m < 1:
            raise UsageError("triangle: --m must be >= 1")
        m = args.m
        r = args.r if args.r is not None else 0
        if r < 0:
            raise UsageError("triangle: --r must be nonnegative")
    else:
        if args.m is not None or args.r is not None:
            raise UsageError(f"triangle: --m/--r do not apply to kind {kind}")
        m = r = None
    if kind == "stirling2":
        cells = [[str(v) for v in row] for row in triangles.stirling2(n)]
    elif kind == "q-stirling2":
        cells = [[c.to_json() for c in row] for row in triangles.q_stirling2(n)]
    elif kind == "r-whitney":
        cells = [[str(v) for v in row] for row in triangles.r_whitney(n, m, r)]
    else:
        cells = [[c.to_json() for c in row] for row in triangles.qr_whitney(n, m, r)]
    if args.format == "json":
        text = _dump({"kind": kind, "m": m, "r": r, "n_max": n, "rows": cells}) + "\n"
        return text, 0
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["kind", "m", "r", "n_max"])
    writer.writerow([kind, "" if m is None else m, "" if r is None else r, n])
    for row in cells:
        writer.writerow([c if isinstance(c, str) else _dump(c) for c in row])
    return buf.getvalue(), 0


def cmd_poly(args: argparse.Namespace) -> tuple[str, int]:
    if args.n is None or args.n < 0:
        raise UsageError("poly: --n is required and must be nonnegative")
    if args.kind == "q-bell":
        if args.m is not None or args.r is not None:
            raise UsageError("poly: --m/--r do not apply to kind q-bell")
        coeffs = triangles.q_bell_poly(args.n).to_json()
        payload = {"kind": "q-bell", "n": args.n, "coeffs": coeffs}
    else:
        if args.m is None or args.m < 1:
            raise UsageError("poly: --m is required and must be >= 1 for qr-dowling")
        r = args.r if args.r is not None else 0
        if r < 0:
            raise UsageError("poly: --r must be nonnegative")
        coeffs = triangles.qr_dowling_poly(args.n, args.m, r).to_json()
        payload = {
            "kind": "qr-dowling",
            "n": args.n,
            "m": args.m,
            "r": r,
            "coeffs": coeffs,
        }
    return _dump(payload) + "\n", 0


def cmd_numbers(args: argparse.Namespace) -> tuple[str, int]:
    if args.n is None or args.n < 0:
        raise UsageError("numbers: --n is required and must be nonnegative")
    n = args.n
    if args.kind == "bell":
        if args.m is not None or args.r is not None:
            raise UsageError("numbers: --m/--r do not apply to kind bell")
        payload = {
            "kind": "bell",
            "n_max": n,
            "values": [str(v) for v in triangles.bell(n)],
        }
    elif args.kind == "q-bell":
        if args.m is not None or args.r is not None:
            raise UsageError("numbers: --m/--r do not apply to kind q-bell")
        payload = {
            "kind": "q-bell",
            "n_max": n,
            "values": [
                triangles.q_bell_poly(i).eval_x(1).to_json() for i in range(n + 1)
            ],
        }
    else:
        if args.m is None or args.m < 1:
            raise UsageError("numbers: --m is required and must be >= 1 for r-dowling")
        r = args.r if args.r is not None else 0
        if r < 0:
            raise UsageError("numbers: --r must be nonnegative")
        payload = {
            "kind": "r-dowling",
            "n_max": n,
            "m": args.m,
            "r": r,
            "values": [str(v) for v in triangles.r_dowling(n, args.m, r)],
        }
    return _dump(payload) + "\n", 0


def cmd_normal_order(args: argparse.Namespace) -> tuple[str, int]:
    nf = opexpr.normal_order(args.expr, m=args.m, r=args.r)
    return _dump(nf.to_json()) + "\n", 0


def _verify_axes(args: argparse.Namespace) -> list[tuple[str, tuple[int, int]]]:
    identity = args.identity
    axes = _AXES[identity]
    if identity == "triangle-oracle" and args.kind == "q-stirling":
        axes = ("n",)
    overrides = _DEFAULT_OVERRIDES.get(identity, {})
    chosen = []
    for name in axes:
        given = getattr(args, name if name != "l" else "l")
        if given is not None:
            chosen.append((name, _parse_range(given, f"--{name}")))
        else:
            chosen.append((name, overrides.get(name, _DEFAULTS[name])))
    # reject flags that do not belong to this identity
    for name in _DEFAULTS:
        if getattr(args, name) is not None and name not in axes:
            raise UsageError(f"verify: --{name} does not apply to {identity}")
    return chosen


def cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    identity = args.identity
    variant = args.variant
    if variant is not None and identity not in _VARIANT_IDENTITIES:
        raise UsageError(f"verify: --variant does not apply to {identity}")
    if args.kind is not None and identity != "triangle-oracle":
        raise UsageError("verify: --kind only applies to triangle-oracle")
    if identity == "triangle-oracle" and args.kind is None:
        args.kind = "q-stirling"
    if args.jobs < 1:
        raise UsageError("verify: --jobs must be >= 1")
    chosen = _verify_axes(args)
    bounds = dict(chosen)
    if identity in _M_GE_1_IDENTITIES or (
        identity == "triangle-oracle" and args.kind == "qr-whitney"
    ):
        if bounds["m"][0] < 1:
            raise UsageError(f"verify: {identity} needs m >= 1")
    if identity in ("lem1", "lem3") and bounds["k"][0] < 1:
        raise UsageError(f"verify: {identity} needs k >= 1")
    if identity == "lem2" and bounds["cap"][0] < bounds["k"][1]:
        raise UsageError("verify: lem2 needs cap >= k")

    tasks = []
    names = [name for name, _ in chosen]
    spans = [range(lo, hi + 1) for _, (lo, hi) in chosen]
    for combo in product(*spans):
        params = dict(zip(names, combo))
        if identity == "triangle-oracle":
            params["kind"] = args.kind
        tasks.append((identity, variant, params))

    if args.jobs == 1:
        reports = [_verify_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_task, tasks))

    lines = [rep.to_json_line() for rep in reports]
    failed = sum(1 for rep in reports if not rep.passed)
    lines.append(
        _dump({"total": len(reports), "passed": len(reports) - failed, "failed": failed})
    )
    return "\n".join(lines) + "\n", 0 if failed == 0 else 1


def cmd_sweep(args: argparse.Namespace) -> tuple[str, int]:
    if args.jobs < 1:
        raise UsageError("sweep: --jobs must be >= 1")
    results = acceptance.run_suite(jobs=args.jobs)
    lines: list[str] = []
    n_reports = 0
    n_passed = 0
    for num, slug, reports in results:
        for rep in reports:
            lines.append(
                _dump({"criterion": num, "slug": slug, "report": rep.to_json()})
            )
            n_reports += 1
            n_passed += 1 if rep.passed else 0
    # criterion 11, in-run half: every emitted line parses back into a
    # report that re-renders to the identical bytes
    ok = 0
    for line in lines:
        d = json.loads(line)
        rep = VerificationReport.from_json(d["report"])
        again = _dump(
            {"criterion": d["criterion"], "slug": d["slug"], "report": rep.to_json()}
        )
        if again == line:
            ok += 1
    roundtrip = VerificationReport(
        identity="json-roundtrip",
        variant="n/a",
        params={"lines": len(lines)},
        lhs=str(ok),
        rhs=str(len(lines)),
        passed=ok == len(lines),
    )
    lines.append(
        _dump(
            {
                "criterion": 11,
                "slug": "engineering-determinism",
                "report": roundtrip.to_json(),
            }
        )
    )
    n_reports += 1
    n_passed += 1 if roundtrip.passed else 0
    failed = n_reports - n_passed
    lines.append(_dump({"total": n_reports, "passed": n_passed, "failed": failed}))
    return "\n".join(lines) + "\n", 0 if failed == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qspivey",
        description="Exact q-analogue triangles, polynomials and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="emit a triangle as JSON or CSV")
    p.add_argument(
        "--kind",
        required=True,
        choices=["stirling2", "q-stirling2", "r-whitney", "qr-whitney"],
    )
    p.add_argument("--n", type=int, default=None, help="largest row index")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("poly", help="emit a q-Bell or (q,r)-Dowling polynomial")
    p.add_argument("--kind", required=True, choices=["q-bell", "qr-dowling"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("numbers", help="emit Bell, q-Bell or r-Dowling numbers")
    p.add_argument("--kind", required=True, choices=["bell", "q-bell", "r-dowling"])
    p.add_argument("--n", type=int, default=None, help="largest index")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("normal-order", help="normally order an operator expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_normal_order)

    p = sub.add_parser("verify", help="verify one identity over parameter ranges")
    p.add_argument("--identity", required=True, choices=sorted(_AXES))
    p.add_argument("--variant", choices=["literal", "corrected"], default=None)
    p.add_argument("--kind", choices=["q-stirling", "qr-whitney"], default=None)
    for flag in ("--n", "--mshift", "--l", "--m", "--r", "--x", "--k", "--cap"):
        p.add_argument(flag, default=None, metavar="LO..HI")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="run the acceptance suite")
    p.add_argument("--suite", choices=["acceptance"], default="acceptance")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code else 0
    try:
        text, code = args.func(args)
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"qspivey: error: {e}\n")
        return 2
    except opexpr.ParseError as e:
        sys.stderr.write(f"qspivey: error: {e}\n")
        return 2
    except Exception as e:  # internal error: report, no partial output
        sys.stderr.write(f"qspivey: internal error: {e}\n")
        return 1
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
