"""Command-line front end.

Examples::

    pkseq generate -K 2 -L 12
    pkseq generate -K 2 -L 12 | pkseq verify -K 2
    pkseq classify -K 2 10011110000 --json
    pkseq join-graph -K 2 000110111001 --dot
    pkseq count -K 2 -L 1-20 --csv

Exit status: 0 on success or acceptance, 1 on rejection, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import DEFAULT_BUDGET, BudgetExceeded, census
from .generate import generate_pkl
from .join import build_join_graph
from .lift import discrete_derivative, lempel_lift
from .necklace import AlphabetError, Necklace, ceil_log, parse_chars
from .verify import classify, is_pkl, profile_histogram

MAX_INPUT = 1 << 30


class InputError(Exception):
    pass


def _read_sequence(args) -> Necklace:
    if args.sequence not in (None, "-") and args.file:
        raise InputError("give the sequence either as an argument or with --file, not both")
    if args.file:
        with open(args.file) as fh:
            text = fh.read(MAX_INPUT + 2)
    elif args.sequence not in (None, "-"):
        text = args.sequence
    else:
        text = sys.stdin.read(MAX_INPUT + 2)
    text = text.strip()
    if len(text) > MAX_INPUT:
        raise InputError(f"input longer than {MAX_INPUT} characters")
    try:
        chars = parse_chars(text, args.alphabet)
    except AlphabetError as exc:
        raise InputError(str(exc)) from exc
    if not chars:
        raise InputError("empty sequence")
    return Necklace(chars, args.alphabet)


def _parse_lengths(spec: str) -> list[int]:
    try:
        if "-" in spec:
            lo, hi = (int(s) for s in spec.split("-", 1))
            lengths = list(range(lo, hi + 1))
        else:
            lengths = [int(spec)]
    except ValueError as exc:
        raise InputError(f"bad length {spec!r}") from exc
    if not lengths or min(lengths) < 1:
        raise InputError(f"lengths must be positive, got {spec!r}")
    return lengths


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_generate(args) -> int:
    lengths = _parse_lengths(args.length)
    for length in lengths:
        necklace = generate_pkl(args.alphabet, length)
        if args.json:
            _emit({"k": args.alphabet, "l": length, "sequence": str(necklace)})
        else:
            sys.stdout.write(str(necklace) + "\n")
    return 0


def cmd_verify(args) -> int:
    necklace = _read_sequence(args)
    verdict = is_pkl(necklace)
    if args.json:
        payload = verdict.to_dict()
        payload["tier"] = classify(necklace).tier.value
        if args.max_m:
            payload["profile"] = _profile(necklace, args.max_m)
        _emit(payload)
    else:
        print(verdict.describe())
    return 0 if verdict.accepted else 1


def cmd_classify(args) -> int:
    necklace = _read_sequence(args)
    result = classify(necklace)
    if args.json:
        payload = result.to_dict()
        payload["accepted"] = result.pkl
        pkl_witness = result.witnesses.get("PKL")
        payload["witness"] = None if pkl_witness is None else pkl_witness.to_dict(necklace.k)
        _emit(payload)
    else:
        print(result.tier.value)
        for name, witness in result.witnesses.items():
            print(f"  not {name}: {witness.describe(necklace.k)}")
    return 0 if result.pkl else 1


def _profile(necklace: Necklace, max_m: int) -> dict[str, dict[str, int]]:
    top = min(max_m, len(necklace))
    return {str(m): {str(c): n for c, n in profile_histogram(necklace, m).items()}
            for m in range(1, top + 1)}


def cmd_profile(args) -> int:
    necklace = _read_sequence(args)
    max_m = args.max_m or ceil_log(len(necklace), necklace.k) or 1
    prof = _profile(necklace, max_m)
    if args.json:
        _emit({"profile": prof})
    else:
        for m, hist in prof.items():
            parts = ", ".join(f"{n} occur {c}x" for c, n in hist.items())
            print(f"m={m}: {parts}")
    return 0


def cmd_lift(args) -> int:
    necklace = _read_sequence(args)
    fam = lempel_lift(necklace)
    members = [str(m) for m in fam.members]
    if args.json:
        _emit({"d": fam.d, "p": fam.p, "members": members})
    else:
        for m in members:
            print(m)
    return 0


def cmd_derive(args) -> int:
    necklace = _read_sequence(args)
    out = str(discrete_derivative(necklace))
    if args.json:
        _emit({"derivative": out})
    else:
        print(out)
    return 0


def cmd_join_graph(args) -> int:
    necklace = _read_sequence(args)
    fam = lempel_lift(necklace)
    n = ceil_log(len(necklace), necklace.k)
    graph = build_join_graph(fam, n)
    if args.dot:
        sys.stdout.write(graph.to_dot())
    else:
        from .necklace import format_chars

        _emit({
            "p": graph.p,
            "n": graph.n,
            "vertices": [str(m) for m in fam.members],
            "edges": [[l, r, format_chars(label, graph.k)] for l, r, label in graph.edges],
            "components": graph.components(),
        })
    return 0


def cmd_count(args) -> int:
    lengths = _parse_lengths(args.length)
    rows = []
    for length in lengths:
        try:
            res = census(args.alphabet, length, materialize=args.dump,
                         budget=args.budget, workers=args.workers)
        except BudgetExceeded as exc:
            raise InputError(str(exc)) from exc
        rows.append(res)
        if args.dump:
            from .necklace import format_chars

            for rep in res.representatives:
                print(format_chars(rep, args.alphabet))
    if args.dump:
        return 0
    if args.json:
        _emit([{"L": r.l, "count": r.count} for r in rows])
    elif args.csv or len(rows) > 1:
        print("L,count")
        for r in rows:
            print(f"{r.l},{r.count}")
    else:
        print(rows[0].count)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pkseq", description="Balanced de Bruijn-like necklaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, sequence=False, length=False):
        p.add_argument("-K", "--alphabet", type=int, required=True, help="alphabet size (>= 2)")
        if length:
            p.add_argument("-L", "--length", required=True, help="length, or a range such as 1-20")
        if sequence:
            p.add_argument("sequence", nargs="?", help="sequence text; '-' or omitted reads stdin")
            p.add_argument("--file", help="read the sequence from a file")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("generate", help="construct a balanced necklace")
    common(p, length=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a sequence for balance")
    common(p, sequence=True)
    p.add_argument("--max-m", type=int, default=0, help="include occurrence histograms up to this length")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="place a sequence in the class hierarchy")
    common(p, sequence=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("profile", help="occurrence histograms per substring length")
    common(p, sequence=True)
    p.add_argument("--max-m", type=int, default=0, help="deepest substring length (default ceil(log_K L))")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("lift", help="members of the Lempel lift")
    common(p, sequence=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("derive", help="discrete derivative")
    common(p, sequence=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("join-graph", help="join graph of the lift")
    common(p, sequence=True)
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.set_defaults(func=cmd_join_graph)

    p = sub.add_parser("count", help="exhaustive census of balanced necklaces")
    common(p, length=True)
    p.add_argument("--csv", action="store_true", help="emit L,count rows")
    p.add_argument("--dump", action="store_true", help="print every representative instead of the count")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="maximum K**L strings to scan")
    p.set_defaults(func=cmd_count)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.alphabet < 2:
        print("error: alphabet size must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
