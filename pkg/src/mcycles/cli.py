"""Command-line front end: construct, verify, search, graph.

Sequence files carry a one-line header "N T KIND" (KIND is m for
multisets, u for subsets) followed by whitespace-separated decimal
symbols; the writer wraps lines at 70 columns.

Exit codes: 0 success / verification ok; 1 verification failed;
2 construction impossible (bad pattern, not eulerian, shift not coprime,
infeasible parameters, search found nothing); 3 bad input or file format.
"""

from __future__ import annotations

import argparse
import sys
from collections import defaultdict

from .convert import convert2, convert3
from .core import MULTISET, SUBSET, expected_length
from .errors import McycleError
from .induction import construct3
from .search import SearchConfig, backtrack, count_distinct
from .transition import build_graph, construct_cycle, render_dot
from .verify import CyclicSequence, verify_cycle

WRAP_COLUMNS = 70
KIND_LETTERS = {MULTISET: "m", SUBSET: "u"}
LETTER_KINDS = {"m": MULTISET, "u": SUBSET}


class SequenceFormatError(ValueError):
    pass


def parse_sequence_file(text: str) -> CyclicSequence:
    """Parse the sequence file format; raises SequenceFormatError."""
    lines = text.splitlines()
    if not lines:
        raise SequenceFormatError("empty file")
    header = lines[0].split()
    if len(header) != 3:
        raise SequenceFormatError(f"header must be 'N T KIND', got {lines[0]!r}")
    try:
        n, t = int(header[0]), int(header[1])
    except ValueError:
        raise SequenceFormatError(f"bad header numbers in {lines[0]!r}") from None
    if header[2] not in LETTER_KINDS:
        raise SequenceFormatError(f"kind must be 'm' or 'u', got {header[2]!r}")
    kind = LETTER_KINDS[header[2]]
    if n < 1 or t < 1:
        raise SequenceFormatError("header needs N >= 1 and T >= 1")
    tokens = " ".join(lines[1:]).split()
    try:
        symbols = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise SequenceFormatError("body must contain integers only") from None
    if not symbols:
        raise SequenceFormatError("no symbols after the header")
    bad = [s for s in symbols if not 1 <= s <= n]
    if bad:
        raise SequenceFormatError(f"symbols out of range 1..{n}: {bad[:5]}")
    expected = expected_length(n, t, kind)
    if len(symbols) != expected:
        raise SequenceFormatError(
            f"expected {expected} symbols for ({n}, {t}, {header[2]}), got {len(symbols)}"
        )
    return CyclicSequence(symbols, n, t, kind)


def format_sequence_file(seq: CyclicSequence) -> str:
    """Render a sequence in the file format, wrapping at 70 columns."""
    lines = [f"{seq.n} {seq.t} {KIND_LETTERS[seq.kind]}"]
    current = ""
    for tok in (str(s) for s in seq.symbols):
        if not current:
            current = tok
        elif len(current) + 1 + len(tok) <= WRAP_COLUMNS:
            current += " " + tok
        else:
            lines.append(current)
            current = tok
    if current:
        lines.append(current)
    return "\n".join(lines) + "\n"


def _construct_t1(n: int, kind: str) -> CyclicSequence:
    # any permutation lists every 1-set once
    return CyclicSequence(tuple(range(1, n + 1)), n, 1, kind)


def _construct_t2(n: int, kind: str) -> CyclicSequence:
    """Eulerian circuit of the complete graph on [n] (with loops for the
    multiset kind): exists exactly when n is odd."""
    from .errors import Infeasible

    if kind == SUBSET and n < 2:
        raise Infeasible("2-subset cycles need n >= 2")
    if n % 2 == 0:
        raise Infeasible(f"complete graph on [{n}] has odd degrees; need odd n")
    edges = []
    for a in range(1, n + 1):
        if kind == MULTISET:
            edges.append((a, a))
        for b in range(a + 1, n + 1):
            edges.append((a, b))
    adj = defaultdict(list)
    for idx, (a, b) in enumerate(edges):
        adj[a].append((b, idx))
        if a != b:
            adj[b].append((a, idx))
    for v in adj:
        adj[v].sort()
    used = [False] * len(edges)
    ptr = {v: 0 for v in adj}
    stack = [1]
    walk = []
    while stack:
        v = stack[-1]
        found = None
        while ptr[v] < len(adj[v]):
            w, idx = adj[v][ptr[v]]
            ptr[v] += 1
            if not used[idx]:
                used[idx] = True
                found = w
                break
        if found is None:
            walk.append(stack.pop())
        else:
            stack.append(found)
    walk.reverse()
    if len(walk) != len(edges) + 1:
        raise RuntimeError("eulerian walk failed on the complete graph")
    return CyclicSequence(tuple(walk[:-1]), n, 2, kind)


def _cmd_construct(args) -> int:
    kind = LETTER_KINDS[args.kind]
    if args.method == "convert":
        if not args.infile:
            print("construct --method convert requires --in", file=sys.stderr)
            return 3
        src = parse_sequence_file(_read(args.infile))
        if src.kind != SUBSET:
            print("conversion input must be a subset cycle (kind u)", file=sys.stderr)
            return 3
        if args.n is not None and args.n != src.n or args.t is not None and args.t != src.t:
            print("--n/--t disagree with the input file header", file=sys.stderr)
            return 3
        seq = convert3(src) if src.t == 3 else convert2(src) if src.t == 2 else None
        if seq is None:
            print("conversion is available for t=2 and t=3 only", file=sys.stderr)
            return 3
    else:
        if args.n is None or args.t is None:
            print("construct requires --n and --t", file=sys.stderr)
            return 3
        n, t = args.n, args.t
        if t in (1, 2):
            seq = _construct_t1(n, kind) if t == 1 else _construct_t2(n, kind)
        elif args.method == "induct":
            if t != 3 or kind != MULTISET:
                print("induct method builds 3-multiset cycles only", file=sys.stderr)
                return 3
            seq = construct3(n)
        else:
            seq = construct_cycle(n, t, kind, seed=args.seed)
    report = verify_cycle(seq.symbols, seq.n, seq.t, seq.kind)
    if not report.ok:
        print(f"constructed sequence failed verification: {report.to_kv()}", file=sys.stderr)
        return 2
    _write(args.out, format_sequence_file(seq))
    return 0


def _cmd_verify(args) -> int:
    seq = parse_sequence_file(_read(args.infile))
    report = verify_cycle(seq.symbols, seq.n, seq.t, seq.kind)
    print(report.to_kv())
    if not report.ok:
        print(report.to_text())
    return 0 if report.ok else 1


def _cmd_search(args) -> int:
    prefix = None
    if args.prefix:
        try:
            prefix = tuple(int(x) for x in args.prefix.replace(",", " ").split())
        except ValueError:
            print(f"bad --prefix {args.prefix!r}", file=sys.stderr)
            return 3
    equivalence = args.equiv.replace("-", "_")
    if args.count:
        print(f"count={count_distinct(args.n, args.t, equivalence)}")
        return 0
    cfg = SearchConfig(args.n, args.t, mode="first", equivalence=equivalence,
                       prefix=prefix, limit=1)
    for found in backtrack(cfg):
        _write(args.out, format_sequence_file(found))
        return 0
    print(f"no cycle found for (n={args.n}, t={args.t})", file=sys.stderr)
    return 2


def _cmd_graph(args) -> int:
    if args.t < 3:
        print("transition graphs need t >= 3", file=sys.stderr)
        return 3
    g = build_graph(args.n, args.t, LETTER_KINDS[args.kind])
    _write(args.dot, render_dot(g))
    return 0


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argument errors are input errors: exit 3
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mcycles", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a universal cycle and write it out")
    p.add_argument("--method", choices=["transition", "induct", "convert"],
                   default="transition")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--kind", choices=["m", "u"], default="m")
    p.add_argument("--seed", type=int, default=None,
                   help="shuffle the eulerian circuit's edge exploration")
    p.add_argument("--in", dest="infile", help="input subset cycle (convert method)")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a sequence file and print a report")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive backtracking at small scale")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--first", action="store_true")
    group.add_argument("--count", action="store_true")
    p.add_argument("--equiv", choices=["relabel", "relabel-rotation"],
                   default="relabel")
    p.add_argument("--prefix", help="comma-separated symbols fixing the branch")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("graph", help="write a transition graph as DOT text")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--kind", choices=["m", "u"], default="m")
    p.add_argument("--dot", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_graph)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SequenceFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except McycleError as exc:
        print(f"construction impossible: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
