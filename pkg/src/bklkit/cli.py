"""Command-line front end.

Three subcommands: `bkl` prints a canonical/dual-canonical column, `char`
prints an irreducible or tilting character in Verma characters, `verify`
runs the exact-identity suites.  Columns are cached content-addressed
under a two-level hash directory; a cache hit is returned byte-identically
and never recomputed unless --no-cache.

Exit codes: 0 success, 1 internal invariant failure (with diagnostic),
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cache as cachemod
from .canonical import CANONICAL, DUAL, bkl, wedge_bkl
from .characters import irreducible_character, tilting_character
from .combinat import SignedSeq, WedgeIndex, check_partition, parse_weight
from .scalars import Laurent
from .verify import run_suite


class UsageError(Exception):
    pass


def _parse_wedge(text: str):
    """'V:2' or 'W:3' finite wedge; 'partition:V:2,1' a partition tail."""
    parts = text.split(":")
    if parts[0] in ("V", "W") and len(parts) == 2:
        try:
            return ("finite", parts[0], int(parts[1]))
        except ValueError as exc:
            raise UsageError(f"bad wedge size in {text!r}") from exc
    if parts[0] == "partition" and len(parts) in (2, 3):
        side = parts[1] if len(parts) == 3 else "V"
        lam = tuple(int(v) for v in parts[-1].split(",")) if parts[-1] else ()
        try:
            check_partition(lam)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if side not in ("V", "W"):
            raise UsageError(f"bad wedge side in {text!r}")
        return ("partition", side, lam)
    raise UsageError(f"cannot parse wedge spec {text!r}")


def _poly_tex(p: Laurent) -> str:
    if not p.c:
        return "0"
    bits = []
    for e in sorted(p.c, reverse=True):
        v = p.c[e]
        mag = abs(v)
        if e == 0:
            term = str(mag)
        else:
            coeff = "" if mag == 1 else str(mag)
            if e == 1:
                term = f"{coeff}q"
            else:
                term = f"{coeff}q^{{{e}}}"
        bits.append(("-" if v < 0 else "+") + term)
    out = "".join(bits)
    return out[1:] if out.startswith("+") else out


def _poly_compact(p: Laurent) -> str:
    return " ".join(f"{e}:{v}" for e, v in sorted(p.c.items())) or "0"


def _render_column(payload: dict, fmt: str, at_q1: bool) -> str:
    if fmt == "json":
        if at_q1:
            payload = dict(payload)
            payload["column_q1"] = [
                {
                    "g": item["g"],
                    **({"u": item["u"]} if "u" in item else {}),
                    "mult": Laurent.from_json(item["poly"]).ev(1),
                }
                for item in payload["column"]
            ]
        return json.dumps(payload, sort_keys=True)
    lines = []
    if fmt == "csv":
        head = "g,u,poly" if any("u" in it for it in payload["column"]) else "g,poly"
        lines.append(head + (",q1" if at_q1 else ""))
        for item in payload["column"]:
            poly = Laurent.from_json(item["poly"])
            row = [item["g"].replace(",", " ")]
            if "u" in item:
                row.append(item["u"].replace(",", " "))
            row.append(_poly_compact(poly))
            if at_q1:
                row.append(str(poly.ev(1)))
            lines.append(",".join(row))
        return "\n".join(lines)
    if fmt == "tex":
        kindsym = "t" if payload["kind"] == CANONICAL else "\\ell"
        fidx = payload["f"] + (";" + payload["u"] if "u" in payload else "")
        for item in payload["column"]:
            poly = Laurent.from_json(item["poly"])
            gidx = item["g"] + (";" + item["u"] if "u" in item else "")
            val = str(poly.ev(1)) if at_q1 else _poly_tex(poly)
            lines.append(f"{kindsym}_{{({gidx}),({fidx})}} &= {val} \\\\")
        return "\n".join(lines)
    raise UsageError(f"unknown format {fmt!r}")


def cmd_bkl(args) -> int:
    b = SignedSeq.parse(args.seq)
    kind = {"canonical": CANONICAL, "dual": DUAL}[args.kind]
    wedge = _parse_wedge(args.wedge) if args.wedge else None

    if wedge and wedge[0] == "partition":
        _, side, lam = wedge
        head = parse_weight(args.f)
        if len(head) != len(b):
            raise UsageError(f"--f needs {len(b)} tensor entries")
        idx = WedgeIndex(head, side, lam)
        kw = max(len(lam), 1)
        flat = idx.flat(kw)
        wspec = {"side": side, "kw": kw, "partition": list(lam)}
    elif wedge:
        _, side, kw = wedge
        if "/" in args.f:
            head_s, tail_s = args.f.split("/", 1)
        else:
            head_s, tail_s = args.f, ""
        head, tail = parse_weight(head_s), parse_weight(tail_s)
        if len(head) != len(b) or len(tail) != kw:
            raise UsageError(
                f"--f must be '<{len(b)} tensor entries>/<{kw} tail entries>'"
            )
        flat = head + tail
        wspec = {"side": side, "kw": kw}
    else:
        flat = parse_weight(args.f)
        if len(flat) != len(b):
            raise UsageError(f"--f needs {len(b)} entries for sequence {b}")
        wspec = None

    key = cachemod.cache_key(
        "bkl-column",
        b=str(b),
        f=list(flat),
        kind=kind,
        window=args.window,
        wedge=wspec,
    )
    root = cachemod.cache_dir(args.cache_dir)
    payload_bytes = None
    if not args.no_cache:
        payload_bytes = cachemod.load(root, key)
    if payload_bytes is None:
        if wspec is None:
            col = bkl(b, flat, kind, k=args.window)
        else:
            col = wedge_bkl(b, wspec["side"], wspec["kw"], flat, kind, k=args.window)
        payload = col.to_json()
        payload_bytes = json.dumps(payload, sort_keys=True).encode()
        if not args.no_cache:
            cachemod.store(root, key, payload_bytes)
    payload = json.loads(payload_bytes)
    print(_render_column(payload, args.format, args.at_q1))
    return 0


def cmd_char(args) -> int:
    b = SignedSeq.parse(args.seq)
    lam = parse_weight(getattr(args, "lambda"))
    if len(lam) != len(b):
        raise UsageError(f"--lambda needs {len(b)} entries for sequence {b}")
    fn = irreducible_character if args.kind == "irr" else tilting_character
    exp = fn(b, lam, k=args.window)
    payload = exp.to_json()
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        print("mu,mult")
        for item in payload["terms"]:
            print(f"{item['mu'].replace(',', ' ')},{item['mult']}")
    elif args.format == "tex":
        sym = "L" if args.kind == "irr" else "T"
        terms = " + ".join(
            f"{item['mult']}\\,[M_{{{item['mu']}}}]" for item in payload["terms"]
        )
        print(f"[{sym}_{{{payload['lambda']}}}] = {terms}")
    else:
        raise UsageError(f"unknown format {args.format!r}")
    return 0


def cmd_verify(args) -> int:
    suite = run_suite(args.suite, max_rank=args.max_rank, max_window=args.max_window)
    for r in suite.results:
        status = "PASS" if r.ok else "FAIL"
        detail = f"  [{r.detail}]" if r.detail else ""
        print(f"{status}  {r.name}{detail}")
    if not suite.ok:
        print(f"{sum(not r.ok for r in suite.results)} failing checks", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bklkit",
        description="Canonical bases and BKL polynomials in mixed Fock spaces.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bkl", help="print one canonical/dual-canonical column")
    p.add_argument("--seq", required=True, help="0^m1^n sequence, e.g. 01")
    p.add_argument("--f", required=True, help="index, e.g. 3,3 (tail after '/')")
    p.add_argument("--kind", choices=["canonical", "dual"], default="canonical")
    p.add_argument("--window", type=int, default=None, help="window level k")
    p.add_argument("--wedge", default=None, help="V:k, W:k or partition:V:2,1")
    p.add_argument("--format", choices=["json", "csv", "tex"], default="json")
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--at-q1", action="store_true", help="also evaluate at q=1")
    p.set_defaults(fn=cmd_bkl)

    p = sub.add_parser("char", help="character of an irreducible or tilting module")
    p.add_argument("--seq", required=True)
    p.add_argument("--lambda", required=True, help="highest weight, e.g. 0,0")
    p.add_argument("--kind", choices=["irr", "tilt"], default="irr")
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv", "tex"], default="json")
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("verify", help="run exact-identity suites")
    p.add_argument(
        "--suite",
        default="all",
        help="rank2, involution, positivity, adjacency, superduality, "
        "truncation, shift, kl-oracle, or all (plus: bar-properties, "
        "triangularity, tensor-wedge, odd-reflection, parabolic)",
    )
    p.add_argument("--max-rank", type=int, default=2)
    p.add_argument("--max-window", type=int, default=3)
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
