import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fullwiener.families import construct_type_a
from fullwiener.planarcode import HEADER, PlanarCodeStream, encode, read_all, write_all
from fullwiener.scan import (
    AllRecordsMalformed,
    DistributionReport,
    GraphSummary,
    pentagon_histograms,
    scan,
    transmission_irregular_check,
)

from conftest import DATA

# n -> (C_n, g_n, N, W_m), and the Wiener indices of graphs attaining C_n
EXPECTED = {
    20: ((1, 19, 1, 500), [500]),
    24: ((2, 22, 1, 804), [804]),
    26: ((2, 24, 1, 987), [987]),
    28: ((5, 23, 1, 1198), [1198]),
    30: ((7, 23, 1, 1435), [1431]),
    32: ((9, 23, 1, 1696), [1688]),
    34: ((10, 24, 2, 1978), [1973, 1978]),
    36: ((14, 22, 1, 2298), [2288]),
    38: ((18, 20, 1, 2651), [2627]),
    40: ((19, 21, 1, 3035), [3001]),
}


def _scan_file(n, **kw):
    with open(DATA / f"c{n}.pc", "rb") as fh:
        return scan(PlanarCodeStream(fh), **kw)


@pytest.mark.parametrize("n", sorted(EXPECTED))
def test_fixture_rows(n):
    rep = _scan_file(n).single()
    s = rep.summary()
    (row, wiener_at_cn) = EXPECTED[n]
    assert (s["C_n"], s["g_n"], s["N"], s["W_m"]) == row
    assert sorted(g.W for g in rep.cn_graphs) == wiener_at_cn


def test_c30_argmax_row():
    s = _scan_file(30).single().summary()
    assert (s["C_W_of_Wm"], s["D_of_Wm"]) == (3, 6)


def test_histogram_counts_every_graph(isomers):
    for n, gs in isomers.items():
        rep = _scan_file(n).single()
        assert sum(rep.histogram.values()) == rep.total == len(gs)


def test_empty_stream():
    res = scan(PlanarCodeStream.from_bytes(HEADER))
    assert res.reports == {} and res.total == 0


def test_malformed_record_skipped():
    g = construct_type_a(2)
    bad = bytearray(encode(g))
    bad[1] = 99  # id out of range
    res = scan(PlanarCodeStream.from_bytes(encode(g) + bytes(bad) + encode(construct_type_a(3))))
    assert res.decoded == 2 and res.records_seen == 3
    assert [m[0] for m in res.malformed] == [1]
    assert sorted(res.reports) == [20, 30]


def test_all_malformed():
    bad = bytearray(encode(construct_type_a(2)))
    bad[1] = 99
    with pytest.raises(AllRecordsMalformed):
        scan(PlanarCodeStream.from_bytes(bytes(bad) * 2))


def test_truncated_tail_keeps_earlier_results():
    g = construct_type_a(2)
    res = scan(PlanarCodeStream.from_bytes(encode(g) + encode(g)[:30]))
    assert res.decoded == 1 and len(res.malformed) == 1


def test_mixed_orders():
    graphs = [construct_type_a(k) for k in (3, 2, 3, 5)]
    res = scan(PlanarCodeStream.from_bytes(b"".join(encode(g) for g in graphs)))
    assert sorted(res.reports) == [20, 30, 50]
    assert res.reports[30].total == 2
    assert [r["n"] for r in res.to_dict()["orders"]] == [20, 30, 50]


def test_workers_agree(isomers):
    data = (DATA / "c36.pc").read_bytes() + b"".join(encode(g) for g in isomers[32])
    one = scan(PlanarCodeStream.from_bytes(data), workers=1, batch_size=5)
    many = scan(PlanarCodeStream.from_bytes(data), workers=3, batch_size=7)
    assert one.to_dict() == many.to_dict()


def test_argmax_retention_reanalyses():
    graphs = [construct_type_a(4)]
    rng = random.Random(3)
    for _ in range(5):
        perm = list(range(40))
        rng.shuffle(perm)
        graphs.append(graphs[0].relabel(perm))
    data = b"".join(encode(g) for g in graphs)
    res = scan(PlanarCodeStream.from_bytes(data), keep_all_argmax=True, retain=3).single()
    assert [i for i, _ in res.argmax] == [0, 1, 2]
    for _, rec in res.argmax:
        assert read_all(rec)[0] in graphs
    assert scan(PlanarCodeStream.from_bytes(data)).single().argmax[0][0] == 0


def _summary(index, W, C, n=20):
    return GraphSummary(index, n, W, C, 5, 1, 0)


@settings(max_examples=60, deadline=None)
@given(
    items=st.lists(st.tuples(st.integers(490, 510), st.integers(1, 6)), min_size=1, max_size=30),
    cut1=st.integers(0, 30),
    cut2=st.integers(0, 30),
)
def test_merge_associative_commutative(items, cut1, cut2):
    summaries = [_summary(i, w, c) for i, (w, c) in enumerate(items)]
    random.Random(cut1 * 31 + cut2).shuffle(summaries)
    a, b = sorted((cut1, cut2))

    def build(part):
        rep = DistributionReport(20, keep_all_argmax=True, retain=4)
        for s in part:
            rep.add(s, bytes([s.index]))
        return rep

    x, y, z = build(summaries[:a]), build(summaries[a:b]), build(summaries[b:])
    whole = build(summaries)
    for merged in (x.merge(y).merge(z), x.merge(y.merge(z)), z.merge(x).merge(y)):
        assert merged.to_dict() == whole.to_dict()


def test_merge_rejects_other_order():
    with pytest.raises(ValueError):
        DistributionReport(20).merge(DistributionReport(24))


def test_transmission_irregular_check():
    assert not transmission_irregular_check(_scan_file(40))
    rep = DistributionReport(20)
    rep.add(_summary(0, 600, 20))
    assert transmission_irregular_check(rep)


def test_pentagon_histograms(type_a):
    with open(DATA / "c20.pc", "rb") as fh:
        assert pentagon_histograms(PlanarCodeStream(fh)) == ({1: 1}, {0: 1})
    sink = io.BytesIO()
    write_all([type_a[k] for k in (3, 4, 5, 6)], sink)
    np_c, n5_c = pentagon_histograms(PlanarCodeStream.from_bytes(sink.getvalue()))
    assert np_c == {2: 4} and n5_c == {0: 4}


def test_pentagon_histogram_all_graphs():
    rep = _scan_file(40).single()
    np_all, _ = rep.pentagon_histograms(only_max_complexity=False)
    assert sum(np_all.values()) == 40
    np_cn, _ = rep.pentagon_histograms()
    assert sum(np_cn.values()) == rep.max_complexity_count


def test_bad_worker_count():
    with pytest.raises(ValueError):
        scan(PlanarCodeStream.from_bytes(b""), workers=0)
