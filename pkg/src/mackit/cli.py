"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded. Data goes to stdout as JSON, CSV or plain text; diagnostics go to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .cache import ResultCache
from .coeff import CyclotomicScalar, reduce_mod_cyclotomic
from .errors import BudgetExceeded, InvalidPartition, MackitError, NonInvertibleDenominator
from .macdonald import FAMILIES, KostkaMatrix, family, kostka_column
from .partitions import Partition, partitions
from .roots import cyclic_character, specialize_at_root
from .suites import HTILDE_CAP, SUITES, claims, run_claim
from .symfun import Basis, SymFunc, convert, principal_specialize

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

DEFAULT_BUDGET = 12
DEFAULT_VERIFY_BUDGET = 6


class UsageError(Exception):
    pass


def parse_partition(text: str) -> Partition:
    """Parse a bracketed comma list such as ``[2,2,1]``; ``[]`` is the empty partition."""
    raw = text.strip()
    if not (raw.startswith("[") and raw.endswith("]")):
        raise UsageError(f"partition {text!r} must be a bracketed comma list like [2,1]")
    body = raw[1:-1].strip()
    if not body:
        return Partition()
    parts = []
    for i, item in enumerate(body.split(",")):
        item = item.strip()
        try:
            parts.append(int(item))
        except ValueError:
            raise UsageError(f"invalid partition {text!r}: entry {i} ({item!r}) is not an integer") from None
    try:
        return Partition(parts)
    except InvalidPartition as exc:
        raise UsageError(f"invalid partition {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _coeff_text(c) -> str:
    return str(c.to_ratfun() if isinstance(c, CyclotomicScalar) else c)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _render_symfunc(f: SymFunc, fmt: str, header: dict | None = None) -> str:
    if fmt == "json":
        return _dump_json({**(header or {}), **f.to_json()})
    if fmt == "csv":
        rows = [["partition", "coefficient"]]
        rows += [["[" + ",".join(map(str, lam)) + "]", _coeff_text(c)] for lam, c in f.items()]
        return _csv(rows)
    lines = [f"{k}: {v}" for k, v in (header or {}).items()]
    lines += [f"{_coeff_text(c)}  {f.basis.value}[{','.join(map(str, lam))}]" for lam, c in f.items()] or ["0"]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _check_budget(kind: str, weight: int, args) -> None:
    limit = args.budget if args.budget is not None else (HTILDE_CAP if kind in ("Htilde", "Ktilde") else DEFAULT_BUDGET)
    if weight > limit:
        raise BudgetExceeded(f"weight {weight} exceeds the budget {limit} for {kind}; raise it with --budget")


def _compute(kind: str, lam: Partition, args) -> SymFunc:
    """A family member, or the Kostka column source for a variant, via the cache."""
    if kind in FAMILIES:
        name, compute = kind, (lambda: family(kind, lam))
    elif kind == "K":
        name, compute = "Kgen", (lambda: kostka_column("K", lam))
    else:
        name = {"Ktilde": "Htilde", "Kprime": "Qprime"}[kind]
        compute = lambda: family(name, lam)  # noqa: E731
    if args.no_cache:
        return compute()
    return ResultCache(args.cache_dir).fetch(name, lam, compute)


def cmd_expand(args) -> int:
    lam = parse_partition(args.partition)
    _check_budget(args.family, sum(lam), args)
    f = convert(_compute(args.family, lam, args), args.basis)
    header = {"family": args.family, "partition": list(lam)}
    if args.at_root is not None:
        f = specialize_at_root(f, args.at_root)
    sys.stdout.write(_render_symfunc(f, args.format, header))
    return EXIT_OK


def cmd_specialize(args) -> int:
    lam = parse_partition(args.partition)
    _check_budget(args.family, sum(lam), args)
    f = _compute(args.family, lam, args)
    value = principal_specialize(f, args.length, divide_by_one_minus_q=args.over_one_minus_q)
    shown = reduce_mod_cyclotomic(value, args.length) if args.at_root else value
    payload = {
        "family": args.family,
        "partition": list(lam),
        "length": args.length,
        "divide_by_one_minus_q": args.over_one_minus_q,
        "value": shown.to_ratfun().to_json() if args.at_root else shown.to_json(),
    }
    if args.at_root:
        payload["root_order"] = args.length
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        sys.stdout.write(_csv([["family", "partition", "length", "value"],
                               [args.family, str(list(lam)), args.length, _coeff_text(shown)]]))
    else:
        suffix = f" mod Phi_{args.length}(t)" if args.at_root else ""
        sys.stdout.write(f"{args.family}{list(lam)} at (1, t, ..., t^{args.length - 1}): {_coeff_text(shown)}{suffix}\n")
    return EXIT_OK


def cmd_kostka(args) -> int:
    n = args.weight
    if n < 1:
        raise UsageError("weight must be positive")
    _check_budget(args.variant, n, args)
    entries = {}
    for mu in partitions(n):
        col = convert(_compute(args.variant, mu, args), Basis.s)
        if args.at_root is not None:
            col = specialize_at_root(col, args.at_root)
        for lam, c in col.items():
            entries[(lam, mu)] = c
    km = KostkaMatrix(args.variant, n, entries, args.at_root)
    if args.format == "json":
        sys.stdout.write(_dump_json(km.to_json()))
    else:
        label = lambda lam: "[" + ",".join(map(str, lam)) + "]"  # noqa: E731
        rows = [["lambda\\mu"] + [label(mu) for mu in km.cols]]
        rows += [[label(lam)] + [_coeff_text(km[lam, mu]) for mu in km.cols] for lam in km.rows]
        if args.format == "csv":
            sys.stdout.write(_csv(rows))
        else:
            widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
            sys.stdout.write("\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows) + "\n")
    return EXIT_OK


def _report_line(rep, fmt: str, timings: bool) -> str:
    if fmt == "json":
        return json.dumps(rep.to_json(timings), ensure_ascii=False) + "\n"
    if fmt == "csv":
        return _csv([[rep.claim, json.dumps(rep.params, sort_keys=True), rep.status, rep.note]])
    params = " ".join(f"{k}={json.dumps(v, separators=(',', ':'))}" for k, v in rep.params.items())
    line = f"{rep.status.upper():9} {rep.claim} {params}"
    if rep.note:
        line += f"  ({rep.note})"
    if timings and rep.elapsed_ms is not None:
        line += f"  [{rep.elapsed_ms:.1f} ms]"
    if not rep.ok:
        for w in rep.witness:
            line += f"\n          {w['partition']}: lhs={w['lhs']} rhs={w['rhs']}"
    return line + "\n"


def cmd_verify(args) -> int:
    budget = args.budget if args.budget is not None else DEFAULT_VERIFY_BUDGET
    todo = claims(args.suite, budget)
    if args.format == "csv":
        sys.stdout.write(_csv([["claim", "params", "status", "note"]]))
    failures = 0
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(run_claim, todo, chunksize=1)
            for rep in results:
                failures += not rep.ok
                sys.stdout.write(_report_line(rep, args.format, args.timings))
                sys.stdout.flush()
    else:
        for claim in todo:
            rep = run_claim(claim)
            failures += not rep.ok
            sys.stdout.write(_report_line(rep, args.format, args.timings))
            sys.stdout.flush()
    if args.format == "pretty":
        sys.stdout.write(f"{len(todo) - failures}/{len(todo)} claims passed\n")
    return EXIT_OK if failures == 0 else EXIT_FAIL


def cmd_character(args) -> int:
    ch = cyclic_character(args.k, args.j)
    if args.format == "json":
        sys.stdout.write(_dump_json(ch.to_json()))
    else:
        header = {"k": args.k, "j": args.j}
        sys.stdout.write(_render_symfunc(convert(ch.frobenius, args.basis), args.format, header if args.format == "pretty" else None))
    return EXIT_OK


def cmd_cache(args) -> int:
    cache = ResultCache(args.cache_dir)
    if args.action == "clear":
        removed = cache.clear()
        payload = {"directory": str(cache.directory), "removed_files": removed}
    else:
        payload = cache.stats()
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        if args.action == "clear":
            sys.stdout.write(_csv([["directory", "removed_files"], [payload["directory"], payload["removed_files"]]]))
        else:
            sys.stdout.write(_csv([["file", "entries", "bytes"]] + [[f["file"], f["entries"], f["bytes"]] for f in payload["files"]]))
    else:
        if args.action == "clear":
            sys.stdout.write(f"removed {removed} cache file(s) from {payload['directory']}\n")
        else:
            sys.stdout.write(f"{payload['directory']}: {len(payload['files'])} file(s), "
                             f"{payload['total_entries']} entries, {payload['total_bytes']} bytes\n")
            for f in payload["files"]:
                sys.stdout.write(f"  {f['file']}: {f['entries']} entries, {f['bytes']} bytes\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{v} is not positive")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"{v} is negative")
    return v


def _global_flags(parser: argparse.ArgumentParser, defaults: bool) -> None:
    kw = (lambda v: {"default": v}) if defaults else (lambda v: {"default": argparse.SUPPRESS})
    parser.add_argument("--format", choices=("json", "csv", "pretty"), help="output format (default json)", **kw("json"))
    parser.add_argument("--cache-dir", help="cache directory (default $MACKIT_CACHE or ~/.cache/mackit)", **kw(None))
    parser.add_argument("--no-cache", action="store_true", help="neither read nor write the on-disk cache", **kw(False))
    parser.add_argument("--budget", type=_positive, help="maximum weight (defaults: 12, 8 for H~, 6 for verify)", **kw(None))
    parser.add_argument("--jobs", type=_positive, help="worker processes for verify (default 1)", **kw(1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mackit", description="Exact Macdonald polynomial computations.")
    _global_flags(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    ex = sub.add_parser("expand", parents=[common], help="expand a Macdonald polynomial")
    ex.add_argument("family", choices=tuple(FAMILIES))
    ex.add_argument("partition", help="bracketed comma list, e.g. [2,2,2]")
    ex.add_argument("--basis", choices=[b.value for b in Basis], default="s")
    ex.add_argument("--at-root", type=_positive, metavar="L", help="reduce coefficients modulo Phi_L(t)")
    ex.set_defaults(func=cmd_expand)

    sp = sub.add_parser("specialize", parents=[common], help="principal specialization on 1, t, ..., t^(L-1)")
    sp.add_argument("family", choices=tuple(FAMILIES))
    sp.add_argument("partition")
    sp.add_argument("--length", type=_positive, required=True, metavar="L")
    sp.add_argument("--over-one-minus-q", action="store_true", help="use the alphabet (1, ..., t^(L-1))/(1-q)")
    sp.add_argument("--at-root", action="store_true", help="reduce the value modulo Phi_L(t)")
    sp.set_defaults(func=cmd_specialize)

    ko = sub.add_parser("kostka", parents=[common], help="table of (q,t)-Kostka coefficients")
    ko.add_argument("variant", choices=("K", "Ktilde", "Kprime"))
    ko.add_argument("weight", type=_positive)
    ko.add_argument("--at-root", type=_positive, metavar="L")
    ko.set_defaults(func=cmd_kostka)

    ve = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ve.add_argument("suite", choices=SUITES + ("all",))
    ve.add_argument("--timings", action="store_true", help="include elapsed_ms (output is then not reproducible)")
    ve.set_defaults(func=cmd_verify)

    ch = sub.add_parser("character", parents=[common], help="cyclic character l_k^(j)")
    ch.add_argument("k", type=_positive)
    ch.add_argument("j", type=_nonneg)
    ch.add_argument("--basis", choices=[b.value for b in Basis], default="s")
    ch.set_defaults(func=cmd_character)

    ca = sub.add_parser("cache", parents=[common], help="manage the on-disk cache")
    ca.add_argument("action", choices=("clear", "stats"))
    ca.set_defaults(func=cmd_cache)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mackit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"mackit: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NonInvertibleDenominator as exc:
        where = f" (partition {list(exc.partition)})" if exc.partition is not None else ""
        print(f"mackit: error: {exc}{where}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, MackitError) as exc:
        print(f"mackit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
