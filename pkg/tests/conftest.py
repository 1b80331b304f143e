from __future__ import annotations

import csv
from pathlib import Path

import pytest

from fullwiener.families import construct_type_a
from fullwiener.graph import FullereneGraph
from fullwiener.planarcode import PlanarCodeStream

DATA = Path(__file__).parent / "data"
ISOMER_ORDERS = (20, 24, 26, 28, 30, 32, 34, 36, 38, 40)


def load_isomers(n: int) -> list[FullereneGraph]:
    with open(DATA / f"c{n}.pc", "rb") as fh:
        return list(PlanarCodeStream(fh))


def floyd_warshall(g: FullereneGraph):
    """Pairwise hop distances by Floyd-Warshall; independent of any BFS."""
    import numpy as np

    n = g.order
    d = np.full((n, n), n + 1, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges():
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, k : k + 1] + d[k : k + 1, :])
    return d


def reference_rows() -> list[dict]:
    with open(DATA / "max_wiener.csv", newline="") as fh:
        return [
            {"n": int(r["n"]), "W_m": int(r["W_m"]), "C_W": int(r["C_W"]), "D": int(r["D"]), "t": r["t"]}
            for r in csv.DictReader(fh)
        ]


@pytest.fixture(scope="session")
def isomers() -> dict[int, list[FullereneGraph]]:
    return {n: load_isomers(n) for n in ISOMER_ORDERS}


@pytest.fixture(scope="session")
def dodecahedron() -> FullereneGraph:
    return load_isomers(20)[0]


@pytest.fixture(scope="session")
def type_a():
    return {k: construct_type_a(k) for k in range(2, 22)}


# -- acceptance summary ------------------------------------------------------

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(name)
        if prev in (None, "PASS"):
            _acceptance[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[2]) if s.split("_")[2].isdigit() else 99):
        terminalreporter.write_line(f"{_acceptance[name]:4}  {name}")
