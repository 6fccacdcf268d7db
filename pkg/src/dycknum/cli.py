"""Command-line interface: ``dycknum <command> ...``.

Every command prints plain text by default.  With ``--jsonl`` it prints one
JSON object per line instead; numbers are always decimal strings under
``value`` with the compact binary under ``bits``.  A record carrying an
``error`` key marks a failure, and the exit status is nonzero exactly when
such a record (or an error message) was produced.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from . import bijection, core, enumeration, oeis, sequences, ternary

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DEFECT = 3
EXIT_UNAVAILABLE = 4


class Output:
    def __init__(self, args, stdout=None):
        self.jsonl = args.jsonl
        self.binary = args.binary
        self.padded = args.padded
        self.out = stdout or sys.stdout
        self.failed = False

    def record(self, rec: dict, text: Optional[str] = None) -> None:
        if "error" in rec:
            self.failed = True
        if self.jsonl:
            print(json.dumps(rec), file=self.out)
        elif text is not None:
            print(text, file=self.out)

    def text(self, line: str) -> None:
        # free-form text that has no structured counterpart
        if not self.jsonl:
            print(line, file=self.out)

    def num(self, d: int, **extras) -> dict:
        rec = {"value": str(d), "bits": format(d, "b")}
        if self.padded and core.is_dyck(d):
            rec["padded"] = core.pad(d)
        rec.update(extras)
        return rec

    def show(self, d: int) -> str:
        """Text rendering of a number honoring --binary / --padded."""
        parts = [str(d)]
        if self.binary:
            parts.append(format(d, "b"))
        if self.padded and core.is_dyck(d):
            parts.append(core.pad(d) or "ε")
        return " ".join(parts) if len(parts) == 1 else "(" + " ".join(parts) + ")"


def parse_natural(token: str) -> int:
    """Decimal, or binary with a ``0b`` prefix."""
    t = token.strip().replace("_", "")
    try:
        if t[:2].lower() == "0b":
            value = int(t[2:], 2)
        else:
            if not t.isdigit():
                raise ValueError
            value = int(t, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {token!r}") from None
    return value


# -- command handlers ---------------------------------------------------------


def cmd_validate(args, out: Output) -> None:
    for n in args.numbers:
        check = core.validate(n)
        if check.is_dyck:
            out.record(out.num(n, is_dyck=True, deficit=check.deficit),
                       f"{out.show(n)} dyck deficit={check.deficit}")
        else:
            out.record(out.num(n, is_dyck=False, error=f"{n} is not a Dyck number"),
                       f"{out.show(n)} not-dyck")


def cmd_encode(args, out: Output) -> None:
    for n in args.numbers:
        brackets = core.to_brackets(n)
        out.record(out.num(n, padded=core.pad(n), brackets=brackets), brackets)


def cmd_decode(args, out: Output) -> None:
    for word in args.words:
        if set(word) <= {"0", "1"}:
            d = core.unpad(word)
        else:
            d = core.from_brackets(word)
        out.record(out.num(d, brackets=core.to_brackets(d)), out.show(d))


def cmd_level(args, out: Output) -> None:
    n = args.n
    if args.stats:
        s = enumeration.level_stats(n)
        rec = {"level": n, "count": s.count, "symmetric": s.symmetric_count,
               "asymmetric": s.asymmetric_count, "interior": s.interior_count,
               "roots": s.root_count}
        out.record(rec, " ".join(f"{k}={v}" for k, v in rec.items()))
        return
    if args.min or args.max:
        if args.min:
            d = enumeration.level_min(n)
            out.record(out.num(d, level=n, kind="min"), out.show(d))
        if args.max:
            d = enumeration.level_max(n)
            out.record(out.num(d, level=n, kind="max"), out.show(d))
        return
    if args.count:
        c = enumeration.level_count(n)
        out.record({"level": n, "count": c}, str(c))
        return
    terms = list(enumeration.iter_level(n, args.strategy))
    for pos, d in enumerate(terms, 1):
        out.record(out.num(d, level=n, position=pos))
    out.text(" ".join(out.show(d) for d in terms))


def cmd_suffixes(args, out: Output) -> None:
    words = enumeration.suffixes(args.length).words
    for w in words:
        out.record({"word": w, "balance": w.count("1") - w.count("0")})
    out.text(" ".join(w or "ε" for w in words))


def cmd_counts(args, out: Output) -> None:
    for k in args.k:
        if args.kind == "gf":
            g = enumeration.gf_coefficients(k)
            rec = {"k": k, "central": g.central, "odd_central": g.odd_central,
                   "interleaved": g.interleaved}
            out.record(rec, f"{k} {g.central} {g.odd_central} {g.interleaved}")
            continue
        f = {
            "level": enumeration.level_count,
            "suffix": enumeration.suffix_count,
            "catalan": enumeration.catalan,
        }[args.kind]
        v = f(k)
        out.record({"k": k, "kind": args.kind, "value": str(v)}, str(v))


def cmd_bij(args, out: Output) -> None:
    for n in args.numbers:
        image = bijection.bij(n)
        out.record(out.num(image, source=str(n)), out.show(image))


def cmd_invbij(args, out: Output) -> None:
    for n in args.numbers:
        pre = bijection.inv_bij(n)
        out.record(out.num(pre, source=str(n)), out.show(pre))


def cmd_classify(args, out: Output) -> None:
    for n in args.numbers:
        cls = bijection.classify(n)
        out.record(out.num(n, level=n.bit_length(), **{"class": str(cls)}),
                   f"{out.show(n)} {cls}")


def cmd_chain(args, out: Output) -> None:
    ch = bijection.chain(args.root, args.terms)
    for pos, t in enumerate(ch.terms, 1):
        out.record(out.num(t, level=t.bit_length(), position=pos, root=str(ch.root),
                           **{"class": str(bijection.TermClass.INTERIOR)}),
                   out.show(t))


def cmd_root(args, out: Output) -> None:
    root, path = bijection.root_of(args.number)
    for pos, t in enumerate(path):
        cls = bijection.TermClass.TREE_ROOT if t == root else bijection.TermClass.INTERIOR
        out.record(out.num(t, level=t.bit_length(), position=pos, **{"class": str(cls)}))
    out.text(out.show(root))
    if args.path:
        out.text(" -> ".join(out.show(t) for t in path))


def cmd_forest_verify(args, out: Output) -> None:
    report = bijection.forest_partition(args.bound, max_bound=args.max_bound)
    for d in report.interior:
        rec = out.num(d, level=d.bit_length(), **{"class": str(bijection.TermClass.INTERIOR)})
        if d in report.assignment:
            rec.update(root=str(report.assignment[d]), position=report.position[d])
        else:
            rec["error"] = "unassigned"
        out.record(rec)
    summary = {
        "bound": report.bound,
        "interior": len(report.interior),
        "assigned": len(report.assignment),
        "first_step": len(report.first_step_images),
        "roots": len(report.roots),
        "unassigned": len(report.unassigned),
        "collisions": len(report.collisions),
        "duplicate_first_images": len(report.duplicate_first_images),
        "disagreements": len(report.disagreements),
        "ok": report.ok,
    }
    if not report.ok:
        summary["error"] = "forest partition check failed"
    out.record({"summary": summary}, " ".join(f"{k}={v}" for k, v in summary.items()))


def cmd_ternary(args, out: Output) -> None:
    if args.action == "forest-check":
        report = ternary.forest_check(args.value, max_bound=args.max_bound)
        for level, roots in sorted(report.roots_by_level.items()):
            for r in roots:
                out.record(out.num(r, level=level, **{"class": "ternary-root"}))
            out.text(f"{level}: " + " ".join(out.show(r) for r in roots))
        summary = {"bound": report.bound, "roots": len(report.roots), "ok": report.ok}
        if not report.ok:
            summary["error"] = "ternary forest check failed"
        out.record({"summary": summary}, " ".join(f"{k}={v}" for k, v in summary.items()))
        return
    d = args.value
    if args.action == "children":
        kids = ternary.children(d)
        for pos, c in enumerate(kids, 1):
            out.record(out.num(c, level=c.bit_length(), position=pos, parent=str(d)))
        out.text(" ".join(out.show(c) for c in kids))
    elif args.action == "parent":
        p = ternary.parent(d)
        if p is None:
            out.record({"value": None, "root": True}, "none")
        else:
            out.record(out.num(p, level=p.bit_length()), out.show(p))
    elif args.action == "is-root":
        flag = ternary.is_ternary_root(d)
        out.record(out.num(d, root=flag), "true" if flag else "false")


def _fetch_kwargs(args) -> dict:
    return {
        "offline": True if args.offline else None,
        "refresh": args.refresh,
        "cache_dir": Path(args.cache_dir) if args.cache_dir else None,
    }


def cmd_oeis(args, out: Output) -> None:
    bfile = oeis.fetch_bfile(args.seq_id, **_fetch_kwargs(args))
    if args.action == "fetch":
        entries = bfile.entries[: args.limit] if args.limit else bfile.entries
        for i, v in entries:
            out.record({"index": i, "value": str(v)}, f"{i} {v}")
        return
    report = sequences.compare_with(bfile, args.limit)
    rec = {"seq_id": report.seq_id, "compared": report.compared_count, "ok": report.ok}
    text = f"{report.seq_id} compared={report.compared_count} "
    if report.ok:
        text += "ok"
    else:
        i, local, remote = report.first_mismatch
        rec.update(index=i, local=str(local), remote=str(remote),
                   error=f"mismatch at index {i}")
        text += f"MISMATCH index={i} local={local} remote={remote}"
    out.record(rec, text)


def cmd_export_bfile(args, out: Output) -> None:
    seq_id = args.seq
    if args.levels:
        values = [0] if args.zero else []
        values += list(enumeration.iter_dyck(args.levels))
        if args.count:
            values = values[: args.count]
    else:
        values = sequences.local_values(seq_id, args.start, args.count or 100, args.zero)
    bf = oeis.to_bfile(seq_id, values, args.start)
    if not out.jsonl:
        out.text(f"# {seq_id} computed locally by dycknum")
    for i, v in bf.entries:
        out.record({"index": i, "value": str(v)}, f"{i} {v}")


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jsonl", action="store_true", help="one JSON record per line")
    common.add_argument("--binary", action="store_true", help="also show compact binary")
    common.add_argument("--padded", action="store_true", help="also show the padded 2w-bit word")

    parser = argparse.ArgumentParser(prog="dycknum", description="Exact Dyck-number combinatorics.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.set_defaults(func=func)
        return p

    nat = parse_natural

    p = add("validate", cmd_validate, "check Dyck membership and deficit")
    p.add_argument("numbers", nargs="+", type=nat)
    p = add("encode", cmd_encode, "number -> bracket word")
    p.add_argument("numbers", nargs="+", type=nat)
    p = add("decode", cmd_decode, "bracket word (or padded bits) -> number")
    p.add_argument("words", nargs="+")

    p = add("level", cmd_level, "terms and statistics of one level")
    p.add_argument("n", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true", help="list the terms (default)")
    g.add_argument("--stats", action="store_true")
    g.add_argument("--count", action="store_true")
    p.add_argument("--min", action="store_true")
    p.add_argument("--max", action="store_true")
    p.add_argument("--strategy", choices=["auto", "scan", "dfs"], default="auto")

    p = add("suffixes", cmd_suffixes, "admissible binary suffixes of a length")
    p.add_argument("length", type=int)

    p = add("counts", cmd_counts, "closed-form counts")
    p.add_argument("kind", choices=["level", "suffix", "catalan", "gf"])
    p.add_argument("k", nargs="+", type=int)

    p = add("bij", cmd_bij, "apply B")
    p.add_argument("numbers", nargs="+", type=nat)
    p = add("invbij", cmd_invbij, "apply the inverse of B")
    p.add_argument("numbers", nargs="+", type=nat)
    p = add("classify", cmd_classify, "mersenne / self-bijective / root / interior")
    p.add_argument("numbers", nargs="+", type=nat)

    p = add("chain", cmd_chain, "B-tree chain grown from an asymmetric root")
    p.add_argument("root", type=nat)
    p.add_argument("--terms", type=int, default=4)

    p = add("root", cmd_root, "descend to the B-tree root")
    p.add_argument("number", type=nat)
    p.add_argument("--path", action="store_true", help="also print the descent")

    p = add("forest-verify", cmd_forest_verify, "check the B-tree partition up to a level")
    p.add_argument("--bound", type=int, default=16)
    p.add_argument("--max-bound", type=int, default=bijection.DEFAULT_MAX_BOUND)

    p = add("ternary", cmd_ternary, "triplet forest navigation")
    p.add_argument("action", choices=["children", "parent", "is-root", "forest-check"])
    p.add_argument("value", type=nat, help="a Dyck number, or the level bound for forest-check")
    p.add_argument("--max-bound", type=int, default=ternary.DEFAULT_MAX_BOUND)

    p = add("oeis", cmd_oeis, "fetch or compare OEIS b-files")
    p.add_argument("action", choices=["fetch", "compare"])
    p.add_argument("seq_id")
    p.add_argument("--limit", type=int, default=0, help="only the first N entries")
    p.add_argument("--offline", action="store_true")
    p.add_argument("--refresh", action="store_true")
    p.add_argument("--cache-dir", help=f"cache root (default ${oeis.CACHE_ENV})")

    p = add("export-bfile", cmd_export_bfile, "write local terms in b-file format")
    p.add_argument("--seq", default="A036991")
    p.add_argument("--levels", type=int, default=0, help="all Dyck numbers up to this level")
    p.add_argument("--count", type=int, default=0)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--zero", action="store_true", help="begin the Dyck listing with 0")
    return parser


def run(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = Output(args, stdout)

    def fail(code: int, exc: BaseException) -> int:
        message = f"{args.command}: {exc}"
        print(f"error: {message}", file=stderr)
        if out.jsonl:
            print(json.dumps({"error": message}), file=out.out)
        return code

    try:
        args.func(args, out)
    except bijection.RootSearchDefect as exc:
        return fail(EXIT_DEFECT, exc)
    except oeis.OEISUnavailable as exc:
        return fail(EXIT_UNAVAILABLE, exc)
    except (ValueError, KeyError) as exc:
        return fail(EXIT_FAIL, exc)
    return EXIT_FAIL if out.failed else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
