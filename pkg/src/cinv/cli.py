"""Command-line front end.

Exit status: 0 on success, 1 on usage errors, 2 when ``verify-paper`` finds
a mismatch, 3 when a search exceeds its memory budget.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Sequence

from cinv.classify import classify_pair, traving_condition
from cinv.exactmath import FACTOR_LIMIT, factorize
from cinv.invariants import MultiDegree, chern_coefficients, invariant_profile, profile_document
from cinv.moduli import (
    DEFAULT_PAIR,
    BasePair,
    family_report,
    gamma_table,
    moduli_dimension,
    verify_monotonicity,
)
from cinv.search import (
    SearchBudgetExceeded,
    SearchConfig,
    find_collisions,
    verify_paper_examples,
)

log = logging.getLogger("cinv")

ENV_JOBS = "CINV_JOBS"
ENV_FORMAT = "CINV_FORMAT"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


def parse_degree_list(text: str) -> list[int]:
    tokens = [t for t in text.replace(" ", "").split(",")]
    if tokens == [""]:
        return []
    out = []
    for tok in tokens:
        if not tok:
            raise UsageError(f"empty entry in degree list {text!r}")
        d = _int(tok)
        if d < 1:
            raise UsageError(f"degrees must be >= 1, got {d}")
        out.append(d)
    return out


def parse_multidegree(n: str | int | None, degrees: str) -> MultiDegree:
    """Build a canonical MultiDegree from a dimension and ``"d1,d2,..."``."""
    if n is None or (isinstance(n, str) and not n.strip()):
        raise UsageError("the complex dimension --n is required")
    dim = n if isinstance(n, int) else _int(n)
    if dim < 1:
        raise UsageError(f"--n must be >= 1, got {dim}")
    degs = parse_degree_list(degrees)
    ones = degs.count(1)
    if ones:
        log.warning("dropping %d degree-1 entr%s (linear sections)", ones, "y" if ones == 1 else "ies")
    return MultiDegree(dim, degs)


def load_pair(path: str | None) -> BasePair:
    if path is None:
        return DEFAULT_PAIR
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read pair file {path}: {exc}") from None
    if isinstance(doc, dict):
        lists = doc.get("first"), doc.get("second")
    elif isinstance(doc, list) and len(doc) == 2:
        lists = doc
    else:
        raise UsageError("pair file must hold {'first': [...], 'second': [...]} or two lists")
    try:
        return BasePair(tuple(int(x) for x in lists[0]), tuple(int(x) for x in lists[1]))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad pair file {path}: {exc}") from None


def _table(rows: Sequence[Sequence[object]], header: Sequence[str] | None = None) -> str:
    rows = [[("" if c is None else str(c)) for c in r] for r in rows]
    if header:
        rows = [list(header)] + rows
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]

    def cell(c: str, w: int) -> str:
        return c.rjust(w) if c.lstrip("-").isdigit() else c.ljust(w)

    lines = ["  ".join(cell(c, w) for c, w in zip(r, widths)).rstrip() for r in rows]
    if header:
        lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _kv(doc: dict) -> str:
    return _table([[k, json.dumps(v) if isinstance(v, (list, dict)) else v] for k, v in doc.items()])


# each command returns (json document, table text, exit status)


def cmd_invariants(args):
    md = parse_multidegree(args.n, args.d)
    doc = profile_document(md)
    if args.chern:
        doc["c"] = [str(c) for c in chern_coefficients(md)]
    return doc, _kv(doc), EXIT_OK


def cmd_compare(args):
    a = parse_multidegree(args.n, args.d)
    b = parse_multidegree(args.n, args.other)
    doc = classify_pair(a, b).to_json()
    text = [f"{a}  vs  {b}", f"verdict: {doc['verdict']}"]
    if "witness" in doc:
        w = doc["witness"]
        text.append(f"differs in {w['invariant']}: {w['first']} vs {w['second']}")
    if "traving" in doc:
        text.append(_traving_text(doc["traving"]))
    return doc, "\n".join(text), EXIT_OK


def _traving_text(doc: dict) -> str:
    rows = [[c["p"], c["threshold"], c["exponent"], "yes" if c["ok"] else "no"] for c in doc["primes"]]
    head = f"Traving condition (n={doc['n']}, d={doc['d']}): {'holds' if doc['holds'] else 'fails'}"
    if not rows:
        return head
    return head + "\n" + _table(rows, ["p", "need", "have", "ok"])


def cmd_traving(args):
    n = _int(args.n) if args.n is not None else None
    if n is None or n < 1:
        raise UsageError("--n must be a positive integer")
    if (args.total_degree is None) == (args.d is None):
        raise UsageError("give exactly one of --total-degree or --d")
    d = _int(args.total_degree) if args.total_degree is not None else invariant_profile(
        parse_multidegree(n, args.d)
    ).d
    if d < 1:
        raise UsageError("total degree must be >= 1")
    try:
        doc = traving_condition(n, d).to_json()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if d < FACTOR_LIMIT:
        doc["factorization"] = str(factorize(d))
    text = _traving_text(doc)
    if "factorization" in doc:
        text += f"\nd = {doc['factorization']}"
    return doc, text, EXIT_OK


def cmd_moduli(args):
    md = parse_multidegree(args.n, args.d)
    if md.n < 2:
        raise UsageError("moduli dimension needs --n >= 2")
    doc = {"m": str(moduli_dimension(md))}
    return doc, f"m({md}) = {doc['m']}", EXIT_OK


def _family_table(fam_doc: dict) -> str:
    rows = []
    for r in fam_doc["rows"]:
        flags = ",".join(k for k, v in r["flags"].items() if v) or "-"
        bad = [k for k, v in r["flags"].items() if not v]
        if bad:
            flags += " FAILED:" + ",".join(bad)
        rows.append([r["lambda"], r["mu"], r["m"], r["delta"], flags])
    head = f"s={fam_doc['s']}  N={fam_doc['N']}  strictly increasing: {fam_doc['strictly_increasing']}"
    return head + "\n" + _table(rows, ["lambda", "mu", "m", "delta", "flags"])


def cmd_family(args):
    pair = load_pair(args.pair_file)
    if (args.s is None) == (args.s_max is None):
        raise UsageError("give exactly one of --s or --s-max")
    if args.s is not None:
        s = _int(args.s)
        if s < 1:
            raise UsageError("--s must be >= 1")
        doc = family_report(pair, s, jobs=args.jobs).to_json()
        return doc, _family_table(doc), EXIT_OK
    s_max = _int(args.s_max)
    if s_max < 1:
        raise UsageError("--s-max must be >= 1")
    rep = verify_monotonicity(pair, s_max, jobs=args.jobs)
    doc = rep.to_json()
    text = "\n\n".join(_family_table(f) for f in doc["families"])
    text += f"\n\nall bounds hold: {doc['ok']}"
    return doc, text, EXIT_OK if rep.ok else EXIT_VERIFY_FAILED


def cmd_gamma(args):
    pair = load_pair(args.pair_file)
    if (args.s is None) == (args.N is None):
        raise UsageError("give exactly one of --s or --N")
    N = pair.size * _int(args.s) + 5 if args.s is not None else _int(args.N)
    if N < 1:
        raise UsageError("N must be >= 1")
    doc = gamma_table(pair, N).to_json()
    return doc, _kv(doc), EXIT_OK


def cmd_search(args):
    prefix = tuple(parse_degree_list(args.prefix)) if args.prefix else ()
    seeds = [parse_multidegree(args.n, s) for s in args.seed or ()]
    cfg = None
    if not args.seeds_only:
        if args.max_degree is None:
            raise UsageError("--max-degree is required unless --seeds-only is given")
        try:
            cfg = SearchConfig(
                n=_int(args.n),
                r_min=_int(args.r_min),
                r_max=_int(args.r_max),
                max_degree=_int(args.max_degree),
                total_degree=None if args.total_degree is None else _int(args.total_degree),
                prefix=prefix,
                partitions=None if args.partitions is None else _int(args.partitions),
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif not seeds:
        raise UsageError("--seeds-only needs at least one --seed")
    try:
        records = find_collisions(
            cfg,
            seeds,
            include_euler=args.key == "full",
            jobs=args.jobs,
            max_entries=args.max_entries,
            checkpoint=args.checkpoint,
        )
    except SearchBudgetExceeded as exc:
        doc = {"error": str(exc), "checkpoint": exc.checkpoint}
        return doc, f"{exc}\ncheckpoint: {json.dumps(exc.checkpoint)}", EXIT_BUDGET
    doc = {
        "config": None if cfg is None else cfg.to_json(),
        "key": args.key,
        "collisions": [r.to_json() for r in records],
    }
    lines = [f"{len(records)} collision group(s)"]
    for rec in records:
        lines.append(f"d={rec.d}:")
        lines.extend(f"  {m}" for m in rec.members)
        lines.extend(
            f"  {list(v.first.degrees)} vs {list(v.second.degrees)}: {v.verdict.value}"
            for v in rec.verdicts
        )
    return doc, "\n".join(lines), EXIT_OK


def _override(text: str) -> tuple[str, object]:
    name, sep, value = text.partition("=")
    if not sep:
        raise UsageError(f"--override expects NAME=VALUE, got {text!r}")
    try:
        return name, int(value)
    except ValueError:
        return name, value


def cmd_verify_paper(args):
    overrides = dict(_override(o) for o in args.override or ())
    try:
        rep = verify_paper_examples(overrides)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    doc = rep.to_json()
    def show(v):
        if isinstance(v, list):  # factorization pairs
            return "*".join(f"{p}^{e}" for p, e in v)
        return v

    rows = [
        [("PASS" if c["passed"] else "FAIL"), c["name"], show(c["expected"]), show(c["actual"])]
        for c in doc["checks"]
    ]
    text = _table(rows, ["", "check", "expected", "actual"])
    text += f"\n{doc['total'] - doc['failed']}/{doc['total']} checks passed"
    return doc, text, EXIT_OK if rep.ok else EXIT_VERIFY_FAILED


def _default_jobs() -> int:
    raw = os.environ.get(ENV_JOBS)
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"{ENV_JOBS} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    fmt_default = os.environ.get(ENV_FORMAT, "json")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=fmt_default)

    parser = _Parser(prog="cinv", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=fn)
        return p

    p = add("invariants", cmd_invariants, "total degree, Pontrjagin classes, Euler characteristic")
    p.add_argument("--n", required=True)
    p.add_argument("--d", required=True, help="comma-separated degrees")
    p.add_argument("--chern", action="store_true", help="also print c_1..c_n")

    p = add("compare", cmd_compare, "classify two complete intersections")
    p.add_argument("--n", required=True)
    p.add_argument("--d", required=True)
    p.add_argument("--other", "--d2", dest="other", required=True)

    p = add("traving", cmd_traving, "prime-exponent smoothing condition")
    p.add_argument("--n", required=True)
    p.add_argument("--total-degree")
    p.add_argument("--d")

    p = add("moduli", cmd_moduli, "moduli-space dimension")
    p.add_argument("--n", required=True)
    p.add_argument("--d", required=True)

    for name, fn, help_ in (
        ("family", cmd_family, "moduli dimensions along a composed family"),
        ("gamma", cmd_gamma, "binomial sum constants over the base pair"),
    ):
        p = add(name, fn, help_)
        p.add_argument("--pair-file")
        p.add_argument("--s")
        if name == "family":
            p.add_argument("--s-max")
            p.add_argument("--jobs", type=int, default=None)
        else:
            p.add_argument("--N")

    p = add("search", cmd_search, "collision search over bounded multidegrees")
    p.add_argument("--n", required=True)
    p.add_argument("--r-min", default="1")
    p.add_argument("--r-max", default="3")
    p.add_argument("--max-degree")
    p.add_argument("--total-degree")
    p.add_argument("--prefix")
    p.add_argument("--partitions")
    p.add_argument("--seed", action="append", help="explicit multidegree to index (repeatable)")
    p.add_argument("--seeds-only", action="store_true")
    p.add_argument("--key", choices=("full", "dp"), default="full")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--max-entries", type=int)
    p.add_argument("--checkpoint")

    p = add("verify-paper", cmd_verify_paper, "recompute every published table value")
    p.add_argument("--override", action="append", metavar="NAME=VALUE")
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if hasattr(args, "jobs") and args.jobs is None:
            args.jobs = _default_jobs()
        doc, text, status = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(text + "\n")
    return status


def main(argv: Sequence[str] | None = None) -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
