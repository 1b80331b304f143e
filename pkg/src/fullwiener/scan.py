"""Aggregate invariants over a stream of planar-code records.

One decoder feeds bounded batches to a process pool; results come back in
file order and a single reducer folds them into one
:class:`DistributionReport` per order. Every per-graph summary carries its
record index, so merging partial reports is associative and commutative,
and output is identical for any worker count or batch size.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from fullwiener.graph import FullereneGraph
from fullwiener.metrics import report as graph_report
from fullwiener.planarcode import PlanarCodeStream, RecordError, StreamError

log = logging.getLogger(__name__)


class AllRecordsMalformed(RuntimeError):
    pass


@dataclass(frozen=True)
class GraphSummary:
    index: int
    n: int
    W: int
    C_W: int
    D: int
    N_p: int
    N_5: int


def summarize(index: int, g: FullereneGraph) -> GraphSummary:
    r = graph_report(g)
    assert r.pentagons is not None
    return GraphSummary(index, r.order, r.wiener, r.complexity, r.diameter, r.pentagons.parts, r.pentagons.isolated)


def _summarize_item(item: tuple[int, tuple]) -> GraphSummary:
    index, rotation = item
    return summarize(index, FullereneGraph(rotation))


@dataclass
class DistributionReport:
    """Aggregate over graphs of one order.

    ``cn_graphs`` holds a summary of every graph attaining the current
    maximal complexity; ``argmax`` holds ``(index, record bytes)`` of
    graphs attaining the maximal Wiener index (the first one only unless
    ``keep_all_argmax``), capped at ``retain``.
    """

    order: int
    keep_all_argmax: bool = False
    retain: int = 1
    total: int = 0
    histogram: Counter = field(default_factory=Counter)
    cn_graphs: list[GraphSummary] = field(default_factory=list)
    wm_graph: GraphSummary | None = None
    argmax: list[tuple[int, bytes]] = field(default_factory=list)
    np_histogram: Counter = field(default_factory=Counter)
    n5_histogram: Counter = field(default_factory=Counter)

    @property
    def max_complexity(self) -> int:
        return self.cn_graphs[0].C_W if self.cn_graphs else 0

    @property
    def gap(self) -> int:
        return self.order - self.max_complexity

    @property
    def max_complexity_count(self) -> int:
        return len(self.cn_graphs)

    @property
    def max_wiener(self) -> int:
        return self.wm_graph.W if self.wm_graph else 0

    def add(self, s: GraphSummary, record: bytes = b"") -> None:
        if s.n != self.order:
            raise ValueError(f"graph of order {s.n} added to report for order {self.order}")
        self.total += 1
        self.histogram[s.C_W] += 1
        self.np_histogram[s.N_p] += 1
        self.n5_histogram[s.N_5] += 1
        if not self.cn_graphs or s.C_W > self.max_complexity:
            self.cn_graphs = [s]
        elif s.C_W == self.max_complexity:
            self.cn_graphs.append(s)
            self.cn_graphs.sort(key=lambda x: x.index)
        self._offer_argmax(s, [(s.index, record)])

    def _offer_argmax(self, s: GraphSummary, records: list[tuple[int, bytes]]) -> None:
        if self.wm_graph is None or s.W > self.wm_graph.W:
            self.wm_graph = s
            self.argmax = []
        elif s.W < self.wm_graph.W:
            return
        elif s.index < self.wm_graph.index:
            self.wm_graph = s
        merged = sorted(self.argmax + records, key=lambda t: t[0])
        self.argmax = merged[: self.retain if self.keep_all_argmax else 1]

    def merge(self, other: "DistributionReport") -> "DistributionReport":
        """New report covering both inputs; neither input is modified."""
        if other.order != self.order:
            raise ValueError("cannot merge reports of different orders")
        out = DistributionReport(self.order, self.keep_all_argmax, self.retain)
        out.total = self.total + other.total
        out.histogram = self.histogram + other.histogram
        out.np_histogram = self.np_histogram + other.np_histogram
        out.n5_histogram = self.n5_histogram + other.n5_histogram
        cn = max(self.max_complexity, other.max_complexity)
        out.cn_graphs = sorted(
            (s for s in self.cn_graphs + other.cn_graphs if s.C_W == cn), key=lambda s: s.index
        )
        for part in (self, other):
            if part.wm_graph is not None:
                out._offer_argmax(part.wm_graph, part.argmax)
        return out

    def pentagon_histograms(self, only_max_complexity: bool = True) -> tuple[Counter, Counter]:
        if not only_max_complexity:
            return Counter(self.np_histogram), Counter(self.n5_histogram)
        return Counter(s.N_p for s in self.cn_graphs), Counter(s.N_5 for s in self.cn_graphs)

    def summary(self) -> dict:
        wm = self.wm_graph
        return {
            "n": self.order,
            "C_n": self.max_complexity,
            "g_n": self.gap,
            "N": self.max_complexity_count,
            "W_m": wm.W if wm else None,
            "C_W_of_Wm": wm.C_W if wm else None,
            "D_of_Wm": wm.D if wm else None,
        }

    def to_dict(self) -> dict:
        d = self.summary()
        d["total"] = self.total
        d["histogram"] = {str(k): self.histogram[k] for k in sorted(self.histogram)}
        d["wiener_at_C_n"] = [{"index": s.index, "W": s.W, "D": s.D, "N_p": s.N_p, "N_5": s.N_5} for s in self.cn_graphs]
        d["argmax_W"] = [{"index": i, "planar_code": rec.hex()} for i, rec in self.argmax]
        np_c, n5_c = self.pentagon_histograms(True)
        d["pentagons_at_C_n"] = {
            "N_p": {str(k): np_c[k] for k in sorted(np_c)},
            "N_5": {str(k): n5_c[k] for k in sorted(n5_c)},
        }
        d["pentagons_all"] = {
            "N_p": {str(k): self.np_histogram[k] for k in sorted(self.np_histogram)},
            "N_5": {str(k): self.n5_histogram[k] for k in sorted(self.n5_histogram)},
        }
        return d


@dataclass
class ScanResult:
    reports: dict[int, DistributionReport] = field(default_factory=dict)
    records_seen: int = 0
    decoded: int = 0
    malformed: list[tuple[int | None, int | None, str]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.total for r in self.reports.values())

    def ordered(self) -> list[DistributionReport]:
        return [self.reports[n] for n in sorted(self.reports)]

    def single(self) -> DistributionReport:
        if len(self.reports) != 1:
            raise ValueError(f"scan covers {len(self.reports)} orders")
        return next(iter(self.reports.values()))

    def to_dict(self) -> dict:
        return {
            "records": self.records_seen,
            "decoded": self.decoded,
            "malformed": [{"index": i, "offset": o, "error": m} for i, o, m in self.malformed],
            "orders": [r.to_dict() for r in self.ordered()],
        }


def _decode(stream: PlanarCodeStream, result: ScanResult) -> Iterator[tuple[int, FullereneGraph, bytes]]:
    while True:
        try:
            g = stream.read_next()
        except StreamError as err:
            log.warning("%s", err)
            result.malformed.append((err.index, err.offset, str(err)))
            break
        except RecordError as err:
            log.warning("skipping malformed record: %s", err)
            result.malformed.append((err.index, err.offset, str(err)))
            continue
        if g is None:
            break
        yield stream.records_seen - 1, g, stream.last_record


def _batches(items: Iterable, size: int) -> Iterator[list]:
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


def scan(
    stream: PlanarCodeStream,
    *,
    workers: int = 1,
    keep_all_argmax: bool = False,
    retain: int = 1,
    batch_size: int = 256,
) -> ScanResult:
    """Analyse every decodable record; malformed records are logged and skipped."""
    if workers < 1:
        raise ValueError("workers must be at least 1")
    result = ScanResult()
    records = _decode(stream, result)

    def fold(summaries: Iterable[GraphSummary], raw: list[bytes]) -> None:
        for s, rec in zip(summaries, raw):
            rep = result.reports.get(s.n)
            if rep is None:
                rep = result.reports[s.n] = DistributionReport(s.n, keep_all_argmax, retain)
            rep.add(s, rec)
            result.decoded += 1

    if workers == 1:
        for batch in _batches(records, batch_size):
            fold((summarize(i, g) for i, g, _ in batch), [rec for _, _, rec in batch])
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, batch_size // (4 * workers))
            for batch in _batches(records, batch_size):
                items = [(i, g.rotation) for i, g, _ in batch]
                fold(pool.map(_summarize_item, items, chunksize=chunk), [rec for _, _, rec in batch])
    result.records_seen = stream.records_seen
    if result.records_seen and not result.decoded:
        raise AllRecordsMalformed(f"none of {result.records_seen} records could be decoded")
    return result


def transmission_irregular_check(reports: ScanResult | DistributionReport | Iterable[DistributionReport]) -> bool:
    """True iff some scanned graph has all transmissions distinct."""
    if isinstance(reports, ScanResult):
        reports = reports.ordered()
    elif isinstance(reports, DistributionReport):
        reports = [reports]
    return any(r.total and r.max_complexity == r.order for r in reports)


def pentagon_histograms(stream: PlanarCodeStream, only_max_complexity: bool = True, **kw) -> tuple[Counter, Counter]:
    """(N_p histogram, N_5 histogram) over the scanned graphs, summed over orders."""
    result = scan(stream, **kw)
    np_total, n5_total = Counter(), Counter()
    for rep in result.ordered():
        np_c, n5_c = rep.pentagon_histograms(only_max_complexity)
        np_total += np_c
        n5_total += n5_c
    return np_total, n5_total
