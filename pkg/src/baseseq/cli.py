"""Command-line entry point: ``baseseq <command> ...``.

Exit status: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
import time
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from . import codec, gamma
from .bsq import check_bs
from .constructions import golay_pair
from .errors import BaseSeqError
from .seqcore import BaseQuadruple, pm

log = logging.getLogger("baseseq")

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- verify

def cmd_verify(args, out: TextIO) -> int:
    if args.corpus:
        from .corpus import verify_all

        summary = verify_all()
        out.write(summary.to_tsv())
        passed = sum(r.ok for r in summary.rows)
        log.info("rows=%d passed=%d examples_ok=%s", len(summary.rows), passed,
                 all(r.ok for r in summary.examples))
        return OK if summary.ok else FAILED
    if not args.file:
        raise UsageError("verify needs a witness file or --corpus")
    codes = codec.read_witnesses(args.file)
    failures = 0
    out.write("row\tn\tcode\tstatus\tedge\n")
    for i, code in enumerate(codes, 1):
        status, edge = "pass", ""
        try:
            q = codec.decode(code)
            res = check_bs(q)
            if res.ok:
                edge = gamma.edge_id(q)
            else:
                status = f"FAIL lag {res.failing_lag} residual {res.residual}"
        except ValueError as exc:
            status = f"FAIL {exc}"
        failures += status != "pass"
        out.write(f"{i}\t{code.n}\t{code}\t{status}\t{edge}\n")
    return FAILED if failures else OK


# ---------------------------------------------------------------- codec

def cmd_decode(args, out: TextIO) -> int:
    q = codec.decode(codec.CodePair.parse(args.code, args.n))
    out.write(q.to_text() + "\n")
    return OK


def _read_quadruple(fh: TextIO) -> BaseQuadruple:
    rows = []
    for line in fh.read().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            line = line.split("=", 1)[1]
        rows.append(pm(line))
    if len(rows) != 4:
        raise UsageError(f"expected four sequences, got {len(rows)}")
    q = BaseQuadruple(*rows)
    q.check_lengths()
    return q


def cmd_encode(args, out: TextIO) -> int:
    if args.file:
        with open(args.file) as fh:
            q = _read_quadruple(fh)
    else:
        q = _read_quadruple(sys.stdin)
    out.write(codec.format_witness(codec.encode(q)) + "\n")
    return OK


# ---------------------------------------------------------------- search

def _parse_edges(text: str, n: int) -> set[tuple[int, int]]:
    if text == "expected":
        return set(gamma.expected_gamma(n).edges)
    return {gamma.parse_edge(tok.strip()) for tok in text.split(",") if tok.strip()}


class WitnessSink:
    """Writes witnesses as they are found, then rewrites the file deduplicated and sorted."""

    def __init__(self, path: str | None, out: TextIO, edges: set[tuple[int, int]] | None):
        self.path = path
        self.out = out
        self.fh = open(path, "w") if path else None
        self.seen: set[codec.CodePair] = set()
        self.wanted = set(edges) if edges else None
        self.covered: set[tuple[int, int]] = set()

    def add(self, code: codec.CodePair) -> None:
        if code in self.seen:
            return
        q = codec.decode(code)
        if not check_bs(q).ok:  # soundness is asserted, never assumed
            raise RuntimeError(f"search emitted a non-solution {code}")
        self.seen.add(code)
        line = codec.format_witness(code) + "\n"
        if self.fh:
            self.fh.write(line)
            self.fh.flush()
        else:
            self.out.write(line)
        if self.wanted is not None:
            key = gamma.edge_of(q)
            if key in self.wanted:
                self.covered.add(key)

    @property
    def done(self) -> bool:
        return self.wanted is not None and self.wanted <= self.covered

    def close(self) -> None:
        if not self.fh:
            return
        self.fh.close()
        tmp = tempfile.NamedTemporaryFile("w", delete=False, dir=os.path.dirname(os.path.abspath(self.path)))
        with tmp:
            tmp.writelines(codec.iter_witness_lines(sorted(self.seen)))
        os.replace(tmp.name, self.path)


def _search_stream(args) -> Iterator[codec.CodePair]:
    from .search import (SegmentTable, case, case_table, read_segments, run_units, sampled_search,
                         segment_phase1, segment_phase2, units, write_segments)

    n = args.n
    restrict = "normal" if args.normal else "near-normal" if args.near_normal else None
    if restrict == "near-normal" and n % 2 and n != 1:
        raise UsageError("near-normal search needs n even or n = 1")
    if args.mode == "segment":
        if restrict:
            raise UsageError("segment mode does not combine with --normal/--near-normal")
        if args.segments and Path(args.segments).exists():
            rows = read_segments(args.segments)
        else:
            cases = [case(n, args.case)] if args.case else case_table(n % 2)
            rows = SegmentTable.concat([segment_phase1(n, c, args.prune) for c in cases])
            if args.segments:
                with open(args.segments, "w") as fh:
                    write_segments(rows, fh)
        log.info("segment rows=%d", len(rows))
        if args.entry is not None:
            yield from segment_phase2(n, rows, args.entry, args.rows, args.prune, max_nodes=args.max_nodes)
        else:
            deadline = time.monotonic() + args.time_limit if args.time_limit else None
            yield from sampled_search(n, rows, args.rows, args.repeats, args.seed, args.prune,
                                      max_nodes=args.max_nodes, deadline=deadline)
        return
    if n < 7 or (restrict and args.mode == "paper"):
        work = [(0, None)]
    else:
        work = [(u.id, u) for u in units(n, args.mode, restrict)
                if args.case is None or u.id == args.case]
    for res in run_units(n, work, args.prune, restrict, args.jobs):
        yield from res.codes


def cmd_search(args, out: TextIO) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.mode == "segment" and args.n < 15:
        raise UsageError("segment mode needs n >= 15")
    if args.case is not None and not 1 <= args.case <= 18:
        raise UsageError("--case must be in 1..18")
    edges = _parse_edges(args.until_edges, args.n) if args.until_edges else None
    sink = WitnessSink(args.out, out, edges)
    t0 = time.perf_counter()
    try:
        for code in _search_stream(args):
            sink.add(code)
            if sink.done:
                log.info("all requested edges covered")
                break
    finally:
        sink.close()
    log.info("witnesses=%d elapsed=%.3f", len(sink.seen), time.perf_counter() - t0)
    if edges is not None and not sink.done:
        missing = sorted(edges - sink.covered)
        log.info("edges without witness: %s", ",".join(gamma.format_edge(k) for k in missing))
    return OK


# ---------------------------------------------------------------- gamma

def cmd_gamma_build(args, out: TextIO) -> int:
    codes = codec.read_witnesses(args.witness)
    try:
        g = gamma.build_gamma(codes, args.n)
    except ValueError as exc:
        log.error("%s", exc)
        return FAILED
    out.write(g.to_dot() if args.format == "dot" else g.to_json() + "\n")
    if args.compare:
        cmp = gamma.compare(g, gamma.expected_gamma(args.n))
        sys.stderr.write(cmp.to_tsv(g))
        return OK if cmp.ok else FAILED
    return OK


def cmd_gamma_expected(args, out: TextIO) -> int:
    exp = gamma.expected_gamma(args.n)
    out.write(f"n={exp.n} kind={exp.kind} nu={','.join(map(str, exp.nu))}\n")
    for i, p in enumerate(gamma.vertex_order(args.n), 1):
        out.write(f"vertex {i}\t{p.label()}\n")
    for key in sorted(exp.edges):
        out.write(f"edge {gamma.format_edge(key)}\n")
    return OK


def cmd_gamma_table1(args, out: TextIO) -> int:
    if args.printed:
        from .corpus import load_table1

        table = load_table1()
    else:
        table = {n: gamma.nu_counts(n) for n in range(args.max + 1)}
    out.write("n\tnu0\tnu1\tnu\n")
    for n in range(args.max + 1):
        if n not in table:
            continue
        v = table[n]
        out.write(f"{n}\t{v[0]}\t{v[1]}\t\n" if isinstance(v, tuple) else f"{n}\t\t\t{v}\n")
    return OK


# ---------------------------------------------------------------- constructions

def cmd_ts_derive(args, out: TextIO) -> int:
    from .sources import derive

    d = derive(args.t)
    for step in d.chain:
        out.write(f"# {step}\n")
    if not d.known:
        out.write(f"TS({args.t}): unknown\n")
        return OK
    out.write(d.tseq.to_text() + "\n")
    return OK


def cmd_golay_make(args, out: TextIO) -> int:
    from .seqcore import to_text

    p = golay_pair(args.len)
    out.write(to_text(p.E) + "\n" + to_text(p.F) + "\n")
    return OK


def cmd_question(args, out: TextIO) -> int:
    even, odd = gamma.question_coverage(args.limit)
    out.write(f"even_uncovered\t{','.join(map(str, even))}\n")
    out.write(f"odd_uncovered\t{','.join(map(str, odd))}\n")
    return OK if not even and not odd else FAILED


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="baseseq", description="Base sequence search and verification toolkit.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    p.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="verify a witness file or the embedded corpus")
    v.add_argument("file", nargs="?")
    v.add_argument("--corpus", action="store_true")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decode", help="decode an AB;CD code")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--code", required=True)
    d.set_defaults(func=cmd_decode)

    e = sub.add_parser("encode", help="encode four +/- sequences (file or stdin)")
    e.add_argument("--file")
    e.set_defaults(func=cmd_encode)

    s = sub.add_parser("search", help="search BS(n+1, n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=("paper", "all", "segment"), default="all")
    s.add_argument("--case", type=int)
    s.add_argument("--entry", type=int, help="segment mode: first row of a single run")
    s.add_argument("--rows", type=int, default=1, help="segment mode: consecutive rows per run (r)")
    s.add_argument("--repeats", type=int, default=1000, help="segment mode: sampled runs (s)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-nodes", type=int, help="segment mode: node cap per row")
    s.add_argument("--time-limit", type=float, help="segment mode: seconds before no new run starts")
    s.add_argument("--segments", help="segment mode: phase-1 file (read if present, else written)")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--normal", action="store_true")
    g.add_argument("--near-normal", action="store_true")
    s.add_argument("--until-edges", help='comma list of edges "i-j", or "expected"')
    s.add_argument("--prune", choices=("decided", "bound", "spectral"), default="spectral")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out", help="witness file (default stdout)")
    s.set_defaults(func=cmd_search)

    gm = sub.add_parser("gamma", help="graphs on four-square partitions")
    gsub = gm.add_subparsers(dest="gamma_command", required=True, parser_class=_Parser)
    b = gsub.add_parser("build")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--witness", required=True)
    b.add_argument("--format", choices=("dot", "json"), default="dot")
    b.add_argument("--compare", action="store_true", help="also compare with the conjectured graph")
    b.set_defaults(func=cmd_gamma_build)
    x = gsub.add_parser("expected")
    x.add_argument("--n", type=int, required=True)
    x.set_defaults(func=cmd_gamma_expected)
    t1 = gsub.add_parser("table1")
    t1.add_argument("--max", type=int, default=40)
    t1.add_argument("--printed", action="store_true", help="show the embedded printed values")
    t1.set_defaults(func=cmd_gamma_table1)

    ts = sub.add_parser("ts", help="T-sequences")
    tsub = ts.add_subparsers(dest="ts_command", required=True, parser_class=_Parser)
    td = tsub.add_parser("derive")
    td.add_argument("--t", type=int, required=True)
    td.set_defaults(func=cmd_ts_derive)

    gl = sub.add_parser("golay", help="Golay complementary pairs")
    glsub = gl.add_subparsers(dest="golay_command", required=True, parser_class=_Parser)
    gk = glsub.add_parser("make")
    gk.add_argument("--len", type=int, required=True)
    gk.set_defaults(func=cmd_golay_make)

    q = sub.add_parser("question", help="check the sums-of-squares/triangular coverage question")
    q.add_argument("--limit", type=int, required=True)
    q.set_defaults(func=cmd_question)
    return p


def run(argv: Iterable[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        sys.stderr.write(f"baseseq: {exc}\n")
        return USAGE
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except (UsageError, BaseSeqError, OSError) as exc:
        sys.stderr.write(f"baseseq: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
