"""Command line interface.

Subcommands
-----------
validate      check every record of a planar-code file
metrics       W, C_W and D per graph (optionally per-vertex transmissions)
family        one member of a nanotubical family: planar code, metrics or formula row
family-table  formula rows for every family member up to an order
scan          aggregate C_W histogram, C_n, g_n and W_m over a file

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.

Examples
--------
  fullwiener family --type a --k 5 --emit planarcode | fullwiener metrics -
  fullwiener scan c30.pc --report summary
  fullwiener family-table --max-n 216
"""

from __future__ import annotations

import argparse
import contextlib
import hashlib
import json
import logging
import os
import sys
from typing import BinaryIO, Iterator, TextIO

from fullwiener import __version__
from fullwiener.families import (
    FAMILY_TABLE_HEADER,
    FamilyKind,
    KTooSmall,
    OrderNotInFamily,
    best_family,
    construct_type_a,
    family_row,
    family_table,
)
from fullwiener.graph import validate_fullerene
from fullwiener.metrics import report
from fullwiener.planarcode import PlanarCodeStream, RecordError, StreamError, write_all
from fullwiener.scan import AllRecordsMalformed, scan

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
WORKERS_ENV = "FULLWIENER_WORKERS"


class UsageError(Exception):
    pass


class _HashingReader:
    """Binary reader that hashes what passes through it."""

    def __init__(self, raw: BinaryIO):
        self._raw = raw
        self.sha256 = hashlib.sha256()

    def read(self, size: int = -1) -> bytes:
        data = self._raw.read(size)
        self.sha256.update(data)
        return data


@contextlib.contextmanager
def _open_input(path: str) -> Iterator[_HashingReader]:
    if path == "-":
        yield _HashingReader(sys.stdin.buffer)
    else:
        with open(path, "rb") as fh:
            yield _HashingReader(fh)


@contextlib.contextmanager
def _open_text_output(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


@contextlib.contextmanager
def _open_binary_output(path: str) -> Iterator[BinaryIO]:
    if path == "-":
        yield sys.stdout.buffer
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            yield fh


def _dump_json(obj, out: TextIO) -> None:
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")


def _provenance(args, reader: _HashingReader, workers: int | None = None) -> dict:
    prov = {"tool": f"fullwiener {__version__}", "input": args.input, "input_sha256": reader.sha256.hexdigest()}
    if workers is not None:
        prov["workers"] = workers
    return prov


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return int(env)
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:  # not on every platform
        return os.cpu_count() or 1


# -- validate ---------------------------------------------------------------

def cmd_validate(args) -> int:
    failed = 0
    with _open_input(args.input) as reader:
        stream = PlanarCodeStream(reader)
        while True:
            try:
                lists = stream.read_raw()
            except StreamError as err:
                print(f"record {err.index} @{err.offset}: FAIL {type(err).__name__}: {err}")
                failed += 1
                break
            except RecordError as err:
                print(f"record {err.index} @{err.offset}: FAIL {type(err).__name__}: {err}")
                failed += 1
                continue
            if lists is None:
                break
            index, offset = stream.records_seen - 1, stream.last_offset
            rep = validate_fullerene(lists)
            if rep.ok:
                print(f"record {index} @{offset}: ok n={rep.order} pentagons={rep.pentagon_count} hexagons={rep.hexagon_count}")
            else:
                failed += 1
                print(f"record {index} @{offset}: FAIL n={rep.order}: " + "; ".join(rep.failures))
    print(f"# {stream.records_seen} records, {failed} failed", file=sys.stderr)
    return EXIT_INVALID if failed else EXIT_OK


# -- metrics ----------------------------------------------------------------

def _metrics_rows(stream: PlanarCodeStream, errors: list[str]):
    while True:
        try:
            g = stream.read_next()
        except StreamError as err:
            errors.append(str(err))
            return
        except RecordError as err:
            errors.append(str(err))
            continue
        if g is None:
            return
        yield stream.records_seen - 1, report(g, with_pentagons=True)


def cmd_metrics(args) -> int:
    errors: list[str] = []
    with _open_input(args.input) as reader, _open_text_output(args.output) as out:
        stream = PlanarCodeStream(reader)
        if args.format == "json":
            rows = [dict(index=i, **r.to_dict(per_vertex=args.per_vertex)) for i, r in _metrics_rows(stream, errors)]
            for row in rows:
                row.pop("label", None)
            _dump_json({"graphs": rows, "errors": errors, "provenance": _provenance(args, reader)}, out)
        elif args.per_vertex:
            out.write("graph,vertex,transmission,eccentricity\n")
            for i, r in _metrics_rows(stream, errors):
                tv = r.transmissions
                for v, (t, e) in enumerate(zip(tv.transmissions, tv.eccentricities)):
                    out.write(f"{i},{v + 1},{t},{e}\n")
        else:
            out.write("n,W,C_W,D" + (",N_p,N_5,ipr" if args.pentagons else "") + "\n")
            for _, r in _metrics_rows(stream, errors):
                cells = list(r.row())
                if args.pentagons:
                    p = r.pentagons
                    cells += [p.parts, p.isolated, int(p.ipr)]
                out.write(",".join(map(str, cells)) + "\n")
    for e in errors:
        print(f"error: {e}", file=sys.stderr)
    return EXIT_INVALID if errors else EXIT_OK


# -- family -----------------------------------------------------------------

def _family_order(kind: FamilyKind, k: int | None, n: int | None) -> int:
    if (k is None) == (n is None):
        raise UsageError("give exactly one of --k or --n")
    if n is not None:
        return n
    if kind is FamilyKind.A:
        return 10 * k
    if kind is FamilyKind.B:
        return 6 * k - 4
    raise UsageError(f"--k is only defined for types a and b; use --n for {kind}")


def cmd_family(args) -> int:
    kind = FamilyKind.parse(args.type)
    n = _family_order(kind, args.k, args.n)
    try:
        row = family_row(kind, n)
    except OrderNotInFamily as err:
        raise UsageError(f"OrderNotInFamily: {err}") from err
    if args.emit == "table":
        with _open_text_output(args.output) as out:
            out.write("n,kind,W,C_W,D\n")
            out.write(row.csv(provenance=False) + "\n")
        return EXIT_OK
    if kind is not FamilyKind.A:
        raise UsageError(f"only type a graphs can be constructed; use --emit table for {kind}")
    try:
        g = construct_type_a(n // 10)
    except KTooSmall as err:
        raise UsageError(str(err)) from err
    if args.emit == "planarcode":
        with _open_binary_output(args.output) as out:
            write_all([g], out, header=args.header, wide=True if args.wide else None)
    else:
        r = report(g)
        with _open_text_output(args.output) as out:
            out.write("n,W,C_W,D\n")
            out.write(",".join(map(str, r.row())) + "\n")
    return EXIT_OK


def cmd_family_table(args) -> int:
    rows = family_table(args.max_n)
    if args.best:
        rows = [r for r in rows if best_family(r.n) is r.kind]
    with _open_text_output(args.output) as out:
        if args.format == "json":
            _dump_json([{"n": r.n, "kind": r.kind.value, "W": r.W, "C_W": r.C_W, "D": r.D, "provenance": r.provenance} for r in rows], out)
        else:
            out.write(FAMILY_TABLE_HEADER + "\n")
            for r in rows:
                out.write(r.csv() + "\n")
    return EXIT_OK


# -- scan -------------------------------------------------------------------

SUMMARY_FIELDS = ("n", "C_n", "g_n", "N", "W_m", "C_W_of_Wm", "D_of_Wm")


def _write_scan_csv(result, kind: str, all_graphs: bool, out: TextIO) -> None:
    reps = result.ordered()
    multi = len(reps) > 1
    if kind == "summary":
        out.write(",".join(SUMMARY_FIELDS) + "\n")
        for rep in reps:
            s = rep.summary()
            out.write(",".join(str(s[f]) for f in SUMMARY_FIELDS) + "\n")
    elif kind == "histogram":
        out.write(("n," if multi else "") + "C_W,N\n")
        for rep in reps:
            for c in sorted(rep.histogram):
                out.write((f"{rep.order}," if multi else "") + f"{c},{rep.histogram[c]}\n")
    elif kind == "pentagons":
        out.write("n,stat,value,N\n")
        for rep in reps:
            np_c, n5_c = rep.pentagon_histograms(only_max_complexity=not all_graphs)
            for name, hist in (("N_p", np_c), ("N_5", n5_c)):
                for v in sorted(hist):
                    out.write(f"{rep.order},{name},{v},{hist[v]}\n")
    elif kind == "wiener":
        out.write("n,C_n,index,W,D\n")
        for rep in reps:
            for s in rep.cn_graphs:
                out.write(f"{rep.order},{rep.max_complexity},{s.index},{s.W},{s.D}\n")


def cmd_scan(args) -> int:
    workers = default_workers() if args.workers is None else args.workers
    if workers < 1:
        raise UsageError("--workers must be at least 1")
    if args.retain < 1:
        raise UsageError("--retain must be at least 1")
    with _open_input(args.input) as reader:
        stream = PlanarCodeStream(reader)
        try:
            result = scan(stream, workers=workers, keep_all_argmax=args.keep_all_argmax, retain=args.retain)
        except AllRecordsMalformed as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_INVALID
    with _open_text_output(args.output) as out:
        if args.format == "json":
            body = result.to_dict()
            body["provenance"] = _provenance(args, reader, workers)
            _dump_json(body, out)
        else:
            _write_scan_csv(result, args.report, args.all_graphs, out)
    for index, offset, msg in result.malformed:
        print(f"warning: record {index} @{offset}: {msg}", file=sys.stderr)
    return EXIT_INVALID if result.malformed else EXIT_OK


# -- entry point ------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fullwiener", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log skipped records")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="check every record is a fullerene graph")
    v.add_argument("input", help="planar-code file, - for stdin")
    v.set_defaults(func=cmd_validate)

    m = sub.add_parser("metrics", help="W, C_W, D per graph")
    m.add_argument("input", help="planar-code file, - for stdin")
    m.add_argument("-o", "--output", default="-")
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.add_argument("--per-vertex", action="store_true", help="one line per vertex with its transmission")
    m.add_argument("--pentagons", action="store_true", help="append N_p, N_5 and IPR columns")
    m.set_defaults(func=cmd_metrics)

    f = sub.add_parser("family", help="one member of a nanotubical family")
    f.add_argument("--type", required=True, choices=[k.value for k in FamilyKind])
    f.add_argument("--k", type=int)
    f.add_argument("--n", type=int)
    f.add_argument("--emit", choices=("planarcode", "metrics", "table"), default="table")
    f.add_argument("--header", action="store_true", help="prefix planar code with >>planar_code<<")
    f.add_argument("--wide", action="store_true", help="force the 16-bit planar-code variant")
    f.add_argument("-o", "--output", default="-")
    f.set_defaults(func=cmd_family)

    t = sub.add_parser("family-table", help="formula rows for all family members")
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--best", action="store_true", help="only the family with maximal W at each order")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("-o", "--output", default="-")
    t.set_defaults(func=cmd_family_table)

    s = sub.add_parser("scan", help="aggregate statistics over a planar-code file")
    s.add_argument("input", help="planar-code file, - for stdin")
    s.add_argument("--report", choices=("summary", "histogram", "pentagons", "wiener"), default="summary")
    s.add_argument("--all-graphs", action="store_true", help="pentagon report over all graphs, not only those with C_n")
    s.add_argument("--workers", type=int, default=None, help=f"worker processes (default: CPUs, or ${WORKERS_ENV})")
    s.add_argument("--retain", type=int, default=1, help="max arg-max records kept")
    s.add_argument("--keep-all-argmax", action="store_true", help="keep every graph attaining W_m, up to --retain")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as err:
        print(f"fullwiener {args.command}: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        print(f"fullwiener {args.command}: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"fullwiener {args.command}: I/O error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
