"""Command-line front door.

Three subcommands:

  analyze <a> <m>   classify every prime dividing m or a, build the
                    filtrations, conductor table and discriminant data,
                    and report them (text or canonical JSON);
  verify            run the brute-force oracle suites and the named
                    self-checks over a parameter range;
  chartab <p> <r> <s>  dump one exact character table.

Exit codes: 0 success; 1 malformed command line; 2 the input violates
the hypotheses (odd m, non-power a, valuation condition) — the report
lists each violation; 3 an internal cross-check failed, meaning the
library disagrees with itself and the output cannot be trusted.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from sympy import isprime

from .chartab import character_json, count_by, value_profiles
from .conductor import conductor_checks, conductor_json
from .holomorph import GroupDesc, class_count
from .oracle import DEFAULT_MAX_ORDER, resolve_max_order, verification_report
from .ramfil import (
    EISENSTEIN,
    TAME,
    UNIT,
    UNRAMIFIED,
    PrimeLocalContext,
    filtration_json,
    global_ram,
    lower_filtration,
    ramification_checks,
    upper_filtration,
    validate,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_INCONSISTENT = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; the contract reserves
    2 for hypothesis violations, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def canonical_json(obj):
    """Byte-stable encoding: sorted keys, two-space indent, newline."""
    return json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n"


# ---------------------------------------------------------------------------
# analyze


def _context_json(ctx: PrimeLocalContext):
    return {
        "p": ctx.p,
        "r": ctx.r,
        "vp_a": ctx.vp_a,
        "case": ctx.case,
        "s": ctx.s,
        "g": ctx.g,
        "e": ctx.e,
        "f_res": ctx.f_res,
    }


def _count_by_summary(G):
    rows = []
    for k in range(G.s + 1):
        for t in range(G.r + 1):
            n = count_by(k, t, G)
            if n:
                rows.append({"level": k, "prim_degree": t, "count": n})
    return rows


def prime_block(gpd):
    """One per-prime report block; the wild cases carry the filtrations,
    the character census and the conductor/discriminant data."""
    ctx = gpd.context
    block = {
        "p": ctx.p,
        "case": ctx.case,
        "context": _context_json(ctx),
        "e_global": gpd.e_global,
        "filtration": {
            "upper": filtration_json(upper_filtration(ctx)),
            "lower": filtration_json(lower_filtration(ctx)),
        },
    }
    if ctx.case in (UNIT, EISENSTEIN):
        G = ctx.group()
        block["characters"] = {
            "class_count": class_count(G),
            "count_by": _count_by_summary(G),
        }
        block["conductors"] = conductor_json(ctx)
    return block


def build_report(a, m):
    """The full analyze report.  Per-prime blocks are independent, so
    they are computed concurrently; assembly stays in prime order."""
    data = global_ram(m, a)
    with ThreadPoolExecutor(max_workers=max(1, min(8, len(data)))) as pool:
        blocks = list(pool.map(prime_block, data))
    return {
        "input": {"a": a, "m": m},
        "validation": {"ok": True, "violations": []},
        "primes": blocks,
    }


def _fmt_steps(fj):
    if not fj["steps"]:
        return "(trivial)"
    parts = []
    for srow in fj["steps"]:
        if srow["x"] is None:
            parts.append(f"{srow['break']}: cyclic of order {srow['order']}")
        else:
            parts.append(
                f"{srow['break']}: (x={srow['x']}, y={srow['y']}, order {srow['order']})"
            )
    return "; ".join(parts)


def _print_block(block, out):
    ctx = block["context"]
    out.write(
        f"prime {block['p']}: {block['case']}  "
        f"(r={ctx['r']}, v_p(a)={ctx['vp_a']}, s={ctx['s']}, g={ctx['g']}, "
        f"f_res={ctx['f_res']})\n"
    )
    out.write(f"  e_local = {ctx['e']}, e_global = {block['e_global']}\n")
    out.write(f"  upper filtration: {_fmt_steps(block['filtration']['upper'])}\n")
    out.write(f"  lower filtration: {_fmt_steps(block['filtration']['lower'])}\n")
    if "characters" in block:
        census = ", ".join(
            f"(k={row['level']}, pr={row['prim_degree']}): {row['count']}"
            for row in block["characters"]["count_by"]
        )
        out.write(
            f"  characters: {block['characters']['class_count']} classes; {census}\n"
        )
        d = block["conductors"]["v_p_disc"]
        out.write(
            f"  v_{block['p']}(disc): sum={d['sum']}, closed={d['closed']}, "
            f"different={d['different']}, agree={str(d['agree']).lower()}\n"
        )


def cmd_analyze(args):
    violations = validate(args.m, args.a)
    if violations:
        if args.json:
            report = {
                "input": {"a": args.a, "m": args.m},
                "validation": {"ok": False, "violations": violations},
                "primes": [],
            }
            sys.stdout.write(canonical_json(report))
        else:
            for v in violations:
                sys.stdout.write(f"violation: {v}\n")
        return EXIT_VIOLATION

    try:
        report = build_report(args.a, args.m)
    except AssertionError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT

    if args.prime is not None:
        blocks = [b for b in report["primes"] if b["p"] == args.prime]
        if not blocks:
            relevant = ", ".join(str(b["p"]) for b in report["primes"])
            sys.stderr.write(
                f"prime {args.prime} does not divide m or a (relevant: {relevant})\n"
            )
            return EXIT_USAGE
        payload = blocks[0]
    else:
        payload = report

    if args.json:
        sys.stdout.write(canonical_json(payload))
    else:
        sys.stdout.write(f"x^{args.m} - ({args.a})\nvalidation: ok\n")
        blocks = [payload] if args.prime is not None else report["primes"]
        for block in blocks:
            _print_block(block, sys.stdout)

    bad = [
        b["p"]
        for b in report["primes"]
        if "conductors" in b and not b["conductors"]["v_p_disc"]["agree"]
    ]
    if bad:
        sys.stderr.write(f"internal inconsistency: disagreement at p in {bad}\n")
        return EXIT_INCONSISTENT
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _synthetic_unit(p, r, s):
    return PrimeLocalContext(p, r, 0, UNIT, s, p ** (r - s), p**s * p ** (r - 1) * (p - 1), 1)


def _synthetic_eisenstein(p, r):
    return PrimeLocalContext(p, r, 1, EISENSTEIN, r, 1, p**r * p ** (r - 1) * (p - 1), 1)


def _context_check_rows(ctx):
    return ramification_checks(ctx) + conductor_checks(ctx)


def verify_sweep(ps, rs, s_filter, max_order):
    """Oracle reports plus named self-checks for every group in range."""
    results = []
    for p in ps:
        for r in rs:
            for s in range(r + 1) if s_filter is None else [s_filter]:
                if s > r:
                    continue
                G = GroupDesc(p, r, s)
                if G.order > max_order:
                    results.append(
                        {
                            "group": {"p": p, "r": r, "s": s, "order": G.order},
                            "skipped": f"order {G.order} exceeds bound {max_order}",
                        }
                    )
                    continue
                entry = {
                    "group": {"p": p, "r": r, "s": s, "order": G.order},
                    "oracle": verification_report(G, max_order),
                    "unit_checks": _context_check_rows(_synthetic_unit(p, r, s)),
                }
                if s == r:
                    entry["eisenstein_checks"] = _context_check_rows(
                        _synthetic_eisenstein(p, r)
                    )
                results.append(entry)
    return results


def _iter_check_rows(entry):
    if "oracle" in entry:
        yield from entry["oracle"]["checks"]
    for key in ("unit_checks", "eisenstein_checks"):
        yield from entry.get(key, ())


def cmd_verify(args, parser):
    if args.p is not None and (args.p % 2 == 0 or not isprime(args.p)):
        parser.error(f"--p must be an odd prime (got {args.p})")
    if args.r is not None and args.r < 1:
        parser.error("--r must be at least 1")
    if args.s is not None and args.s < 0:
        parser.error("--s must be non-negative")
    if args.s is not None and args.r is not None and args.s > args.r:
        parser.error(f"--s {args.s} exceeds --r {args.r}")

    max_order = resolve_max_order(args.max_order)
    ps = [args.p] if args.p is not None else [3, 5, 7]
    rs = [args.r] if args.r is not None else [1, 2, 3]

    try:
        results = verify_sweep(ps, rs, args.s, max_order)
    except AssertionError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT

    n_pass = n_fail = n_skip = 0
    for entry in results:
        g = entry["group"]
        tag = f"p={g['p']} r={g['r']} s={g['s']} (order {g['order']})"
        if "skipped" in entry:
            n_skip += 1
            if not args.json:
                sys.stdout.write(f"SKIP  {tag}: {entry['skipped']}\n")
            continue
        for row in _iter_check_rows(entry):
            status = row["status"]
            if status == "fail":
                n_fail += 1
            elif status == "pass":
                n_pass += 1
            if not args.json and status != "pass":
                detail = row.get("detail")
                extra = f": {detail}" if detail else ""
                sys.stdout.write(f"{status.upper():5s} {tag} {row['name']}{extra}\n")
        if not args.json:
            names = sum(1 for _ in _iter_check_rows(entry))
            sys.stdout.write(f"ok    {tag}: {names} checks\n")

    ok = n_fail == 0
    if args.json:
        sys.stdout.write(
            canonical_json(
                {"max_order": max_order, "groups": results, "ok": ok}
            )
        )
    else:
        sys.stdout.write(
            f"{n_pass} checks passed, {n_fail} failed, {n_skip} groups skipped\n"
        )
    return EXIT_OK if ok else EXIT_INCONSISTENT


# ---------------------------------------------------------------------------
# chartab


def chartab_payload(G):
    classes, table, profiles = value_profiles(G)
    return {
        "group": {"p": G.p, "r": G.r, "s": G.s, "order": G.order},
        "root_of_unity_order": G.p ** (G.r - 1) * (G.p - 1),
        "classes": [
            {"u": c.representative.u, "beta": c.beta, "alpha": c.alpha, "size": c.size}
            for c in classes
        ],
        "characters": [character_json(chi) for chi in table],
        "values": [
            [[coe, exp if coe else 0] for coe, exp in zip(coeffs, exps)]
            for coeffs, exps in profiles
        ],
    }


def _fmt_value(coe, exp):
    if coe == 0:
        return "0"
    if exp == 0:
        return str(coe)
    if coe == 1:
        return f"z^{exp}"
    return f"{coe}*z^{exp}"


def cmd_chartab(args, parser):
    if args.p % 2 == 0 or not isprime(args.p):
        parser.error(f"p must be an odd prime (got {args.p})")
    if args.r < 1:
        parser.error("r must be at least 1")
    if not 0 <= args.s <= args.r:
        parser.error(f"s must lie in 0..r (got s={args.s}, r={args.r})")

    try:
        payload = chartab_payload(GroupDesc(args.p, args.r, args.s))
    except AssertionError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT

    if args.json:
        sys.stdout.write(canonical_json(payload))
        return EXIT_OK

    g = payload["group"]
    m0 = payload["root_of_unity_order"]
    sys.stdout.write(
        f"character table of C({g['p']}^{g['s']}) x| G({g['p']}^{g['r']}), "
        f"order {g['order']}; z = root of unity of order {m0}\n"
    )
    sys.stdout.write(
        "classes (u, beta, size): "
        + "  ".join(f"({c['u']},{c['beta']},{c['size']})" for c in payload["classes"])
        + "\n"
    )
    for chi, row in zip(payload["characters"], payload["values"]):
        cells = "  ".join(_fmt_value(coe, exp) for coe, exp in row)
        sys.stdout.write(
            f"{chi['kind']:7s} twist={tuple(chi['twist'])} deg={chi['degree']} "
            f"level={chi['level']}: {cells}\n"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------


def make_parser():
    parser = _Parser(
        prog="radical-ram",
        description="Exact ramification data of x^m - a and its splitting field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full per-prime report for x^m - a")
    pa.add_argument("a", type=int, help="radicand")
    pa.add_argument("m", type=int, help="odd exponent")
    pa.add_argument("--prime", type=int, default=None, help="emit one prime's block")
    pa.add_argument("--json", action="store_true", help="canonical JSON output")
    pa.set_defaults(_sub=pa)

    pv = sub.add_parser("verify", help="run the oracle suites and self-checks")
    pv.add_argument("--p", type=int, default=None, help="restrict to one prime")
    pv.add_argument("--r", type=int, default=None, help="restrict to one exponent r")
    pv.add_argument("--s", type=int, default=None, help="restrict to one depth s")
    pv.add_argument(
        "--max-order",
        type=int,
        default=None,
        help=f"largest group order to enumerate (default env RADICAL_RAM_MAX_ORDER or {DEFAULT_MAX_ORDER})",
    )
    pv.add_argument("--json", action="store_true", help="canonical JSON output")
    pv.set_defaults(_sub=pv)

    pc = sub.add_parser("chartab", help="dump one character table")
    pc.add_argument("p", type=int)
    pc.add_argument("r", type=int)
    pc.add_argument("s", type=int)
    pc.add_argument("--json", action="store_true", help="canonical JSON output")
    pc.set_defaults(_sub=pc)

    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "verify":
        return cmd_verify(args, args._sub)
    assert args.command == "chartab"
    return cmd_chartab(args, args._sub)


if __name__ == "__main__":
    sys.exit(main())
