"""Command-line front end.

Four query modes cover the two problem shapes:

  count-mps / list-mps   many prefixes, one fixed suffix
  count-spm / list-spm   one fixed prefix, many suffixes

plus ``dump`` (occurrence arrays and the tree in DOT form, for
debugging) and ``bench`` (scaling measurement over synthetic texts).

Count modes print one ``<index>\\t<count>`` line per variable string.
List modes print one ``<index>\\t<start>:<end>`` line per answer, pairs
sorted ascending per query, with the substring itself appended as a
third column under --materialize.

Exit codes: 0 on success, 1 on usage errors, 2 on I/O errors.
"""

from __future__ import annotations

import argparse
import gc
import math
import random
import struct
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .counting import count_all
from .listing import list_all, materialize_all
from .occurrence import OccurrenceIndex
from .reversal import count_with_suffixes, list_with_suffixes
from .suffix_tree import SuffixTree, Text

_QUERY_MODES = ("count-mps", "list-mps", "count-spm", "list-spm")

_BENCH_SIZES = tuple(1 << k for k in range(14, 21))
_BENCH_PREFIXES = (b"a", b"aa", b"ab", b"ba", b"aab", b"abab")
_BENCH_SUFFIX = b"a"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_escaped(s: str) -> bytes:
    r"""Turn a CLI string argument into query bytes.

    Supports \\ \, \n \t and \xNN escapes; everything else is encoded
    as UTF-8.
    """
    out = bytearray()
    i = 0
    while i < len(s):
        c = s[i]
        if c != "\\":
            out += c.encode("utf-8")
            i += 1
            continue
        if i + 1 >= len(s):
            raise UsageError("dangling backslash in string argument")
        d = s[i + 1]
        if d == "n":
            out += b"\n"
        elif d == "t":
            out += b"\t"
        elif d == "\\":
            out += b"\\"
        elif d == ",":
            out += b","
        elif d == "x":
            if i + 3 >= len(s):
                raise UsageError(r"truncated \xNN escape")
            try:
                out.append(int(s[i + 2:i + 4], 16))
            except ValueError:
                raise UsageError(rf"bad \xNN escape: {s[i:i + 4]!r}") from None
            i += 4
            continue
        else:
            raise UsageError(f"unknown escape \\{d}")
        i += 2
    return bytes(out)


def split_vars(s: str) -> list[str]:
    """Split a --vars argument on commas, honoring backslash escapes."""
    parts = []
    cur = []
    i = 0
    while i < len(s):
        c = s[i]
        if c == "\\" and i + 1 < len(s):
            cur.append(s[i:i + 2])
            i += 2
            continue
        if c == ",":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(c)
        i += 1
    parts.append("".join(cur))
    return parts


def read_query_lines(path: str) -> list[bytes]:
    """Newline-delimited raw byte queries; a trailing newline does not
    produce a final empty query."""
    blob = Path(path).read_bytes()
    lines = blob.split(b"\n")
    if lines and lines[-1] == b"":
        lines.pop()
    return lines


def read_query_records(path: str) -> list[bytes]:
    """Length-prefixed binary queries: repeated records of a 4-byte
    little-endian length followed by that many payload bytes."""
    blob = Path(path).read_bytes()
    out = []
    off = 0
    while off < len(blob):
        if off + 4 > len(blob):
            raise UsageError(f"{path}: truncated record header at byte {off}")
        (length,) = struct.unpack_from("<I", blob, off)
        off += 4
        if off + length > len(blob):
            raise UsageError(f"{path}: truncated record payload at byte {off}")
        out.append(blob[off:off + length])
        off += length
    return out


def write_query_records(path: str, queries: list[bytes]) -> None:
    """Inverse of read_query_records, for producing query files."""
    with open(path, "wb") as fh:
        for q in queries:
            fh.write(struct.pack("<I", len(q)))
            fh.write(q)


@dataclass
class BenchRow:
    size: int
    seconds: float
    answers: int


@dataclass
class BenchReport:
    rows: list[BenchRow]
    slope: float | None


def make_bench_text(size: int, alphabet: int, period: int, seed: int) -> bytes:
    """Synthetic input: uniform random over the first ``alphabet``
    lowercase letters, or periodic (abab... for period 2, aaa... for
    period 1) when ``period`` > 0."""
    letters = bytes(range(ord("a"), ord("a") + alphabet))
    if period > 0:
        pattern = bytes(letters[i % alphabet] for i in range(period))
        reps = size // period + 1
        return (pattern * reps)[:size]
    rng = random.Random(seed)
    return bytes(rng.choices(letters, k=size))


def run_bench(sizes=_BENCH_SIZES, alphabet: int = 4, period: int = 0,
              repeats: int = 1, seed: int = 0) -> BenchReport:
    """Time the counting pipeline end to end over a ladder of sizes and
    fit a log-log slope to the measurements."""
    sizes = list(sizes)
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise UsageError("bench sizes must be strictly increasing")
    if not sizes or sizes[0] < 1:
        raise UsageError("bench sizes must be positive")
    # one small untimed run primes code paths and the allocator so the
    # first ladder point is not charged for warmup
    count_all(make_bench_text(4096, alphabet, period, seed),
              _BENCH_PREFIXES, _BENCH_SUFFIX)
    rows = []
    for size in sizes:
        text = make_bench_text(size, alphabet, period, seed)
        best = math.inf
        answers = 0
        for _ in range(max(1, repeats)):
            gc_was_on = gc.isenabled()
            gc.disable()
            try:
                t0 = time.perf_counter()
                counts = count_all(text, _BENCH_PREFIXES, _BENCH_SUFFIX)
                dt = time.perf_counter() - t0
            finally:
                if gc_was_on:
                    gc.enable()
            best = min(best, dt)
            answers = sum(counts)
        rows.append(BenchRow(size, best, answers))
    slope = None
    if len(rows) >= 2:
        xs = [math.log(r.size) for r in rows]
        ys = [math.log(max(r.seconds, 1e-9)) for r in rows]
        mx = sum(xs) / len(xs)
        my = sum(ys) / len(ys)
        den = sum((x - mx) ** 2 for x in xs)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / den
    return BenchReport(rows, slope)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="presuf",
        description="Count or list distinct substrings constrained by a "
                    "required prefix and a required suffix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for mode in _QUERY_MODES:
        fixed_role = "suffix" if mode.endswith("mps") else "prefix"
        var_role = "prefixes" if mode.endswith("mps") else "suffixes"
        verb = "count" if mode.startswith("count") else "list"
        p = sub.add_parser(
            mode,
            help=f"{verb} substrings; fixed {fixed_role}, variable {var_role}",
        )
        p.add_argument("text", help="path of the file holding the text bytes")
        p.add_argument("--fixed", default="",
                       help=f"the fixed {fixed_role} (escapes: "
                            r"\\ \, \n \t \xNN; default empty)")
        src = p.add_mutually_exclusive_group()
        src.add_argument("--vars",
                         help=f"comma-separated {var_role}, same escapes")
        src.add_argument("--queries",
                         help=f"file of newline-delimited {var_role} "
                              "(raw bytes, no escapes)")
        src.add_argument("--queries-bin",
                         help=f"file of length-prefixed binary {var_role} "
                              "(4-byte little-endian length + payload)")
        if verb == "list":
            p.add_argument("--materialize", action="store_true",
                           help="append each substring as a third column "
                                "(latin-1 rendering)")

    p = sub.add_parser("dump", help="print occurrence arrays and the tree "
                                    "in DOT form")
    p.add_argument("text", help="path of the file holding the text bytes")
    p.add_argument("--suffix", default="",
                   help="suffix pattern for the occurrence arrays "
                        "(default empty)")

    p = sub.add_parser("bench", help="measure counting-pipeline scaling on "
                                     "synthetic texts")
    p.add_argument("--sizes",
                   default=",".join(str(s) for s in _BENCH_SIZES),
                   help="comma-separated text sizes, strictly increasing")
    p.add_argument("--alphabet", type=int, default=4,
                   help="number of distinct letters (default 4)")
    p.add_argument("--period", type=int, default=0,
                   help="use a periodic text with this period instead of "
                        "random (1 gives aaa..., 2 gives abab...)")
    p.add_argument("--repeats", type=int, default=1,
                   help="timings per size, best kept (default 1)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the random text (default 0)")
    return parser


def _gather_queries(args) -> list[bytes]:
    if args.vars is not None:
        return [parse_escaped(v) for v in split_vars(args.vars)]
    if args.queries is not None:
        return read_query_lines(args.queries)
    if args.queries_bin is not None:
        return read_query_records(args.queries_bin)
    return []


def _run_query_mode(args) -> int:
    data = Path(args.text).read_bytes()
    fixed = parse_escaped(args.fixed)
    queries = _gather_queries(args)
    out = sys.stdout
    if args.command == "count-mps":
        counts = count_all(data, queries, fixed)
    elif args.command == "count-spm":
        counts = count_with_suffixes(data, fixed, queries)
    else:
        if args.command == "list-mps":
            lists = list_all(data, queries, fixed)
        else:
            lists = list_with_suffixes(data, fixed, queries)
        shown = materialize_all(data, lists) if args.materialize else None
        for i, refs in enumerate(lists):
            order = sorted(range(len(refs)), key=lambda k: refs[k])
            for k in order:
                a, b = refs[k]
                if shown is None:
                    out.write(f"{i}\t{a}:{b}\n")
                else:
                    text_col = shown[i][k].decode("latin-1")
                    out.write(f"{i}\t{a}:{b}\t{text_col}\n")
        return 0
    for i, c in enumerate(counts):
        out.write(f"{i}\t{c}\n")
    return 0


def _run_dump(args) -> int:
    data = Path(args.text).read_bytes()
    suffix = parse_escaped(args.suffix)
    text = Text(data)
    idx = OccurrenceIndex.build(text, suffix)
    out = sys.stdout
    out.write("SO: " + " ".join(str(v) for v in idx.so) + "\n")
    out.write("CSO: " + " ".join(str(v) for v in idx.cso) + "\n")
    out.write("NextSO: " + " ".join(str(v) for v in idx.next_so) + "\n")
    out.write(SuffixTree(text).to_dot())
    return 0


def _run_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s]
    except ValueError:
        raise UsageError(f"bad --sizes value: {args.sizes!r}") from None
    report = run_bench(sizes, args.alphabet, args.period, args.repeats,
                       args.seed)
    out = sys.stdout
    out.write("size\tseconds\tanswers\n")
    for row in report.rows:
        out.write(f"{row.size}\t{row.seconds:.6f}\t{row.answers}\n")
    if report.slope is not None:
        out.write(f"slope: {report.slope:.3f}\n")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command in _QUERY_MODES:
            return _run_query_mode(args)
        if args.command == "dump":
            return _run_dump(args)
        return _run_bench(args)
    except UsageError as exc:
        print(f"presuf: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"presuf: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
