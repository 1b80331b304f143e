"""Distance invariants: transmissions, Wiener index, Wiener complexity, diameter."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from fullwiener.graph import FullereneGraph, trace_faces
from fullwiener.pentagons import PentagonStats, pentagon_stats


class VertexOutOfRange(IndexError):
    pass


def _check_vertex(g: FullereneGraph, v: int) -> None:
    if not 0 <= v < g.order:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.order - 1}")


def bfs_distances(g: FullereneGraph, v: int) -> list[int]:
    """Hop distances from ``v`` to every vertex."""
    _check_vertex(g, v)
    dist = [-1] * g.order
    dist[v] = 0
    queue = deque([v])
    rot = g.rotation
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in rot[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def transmission(g: FullereneGraph, v: int) -> int:
    return sum(bfs_distances(g, v))


def _neighbor_array(g: FullereneGraph) -> np.ndarray:
    return np.asarray(g.rotation, dtype=np.intp)


def distance_profile(g: FullereneGraph) -> tuple[np.ndarray, np.ndarray]:
    """Transmissions and eccentricities of all vertices.

    Runs one breadth-first search per source, all sources advanced level
    by level together on boolean frontier rows; no distance matrix is kept.
    """
    nbr = _neighbor_array(g)
    n = g.order
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    tr = np.zeros(n, dtype=np.int32)
    ecc = np.zeros(n, dtype=np.int32)
    level = 0
    while True:
        # row s, column x: x is adjacent to some vertex of the frontier of s
        nxt = frontier[:, nbr[:, 0]] | frontier[:, nbr[:, 1]] | frontier[:, nbr[:, 2]]
        nxt &= ~reached
        counts = nxt.sum(axis=1, dtype=np.int32)
        if not counts.any():
            break
        level += 1
        tr += level * counts
        ecc[counts > 0] = level
        reached |= nxt
        frontier = nxt
    return tr, ecc


def distance_matrix(g: FullereneGraph) -> np.ndarray:
    """Full ``n x n`` hop-distance matrix (for per-vertex output and debugging)."""
    return np.array([bfs_distances(g, v) for v in range(g.order)], dtype=np.int32)


def transmissions(g: FullereneGraph) -> np.ndarray:
    return distance_profile(g)[0]


def wiener_index(g: FullereneGraph) -> int:
    total = int(transmissions(g).sum(dtype=np.int64))
    assert total % 2 == 0
    return total // 2


def _distinct(values) -> int:
    # sorted copy rather than a set keeps the count independent of hashing
    s = np.sort(np.asarray(values))
    return int(1 + np.count_nonzero(s[1:] != s[:-1])) if len(s) else 0


def wiener_complexity(g: FullereneGraph) -> int:
    return _distinct(transmissions(g))


def diameter(g: FullereneGraph) -> int:
    return int(distance_profile(g)[1].max())


@dataclass(frozen=True)
class TransmissionVector:
    transmissions: tuple[int, ...]
    eccentricities: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.transmissions)


@dataclass(frozen=True)
class GraphReport:
    order: int
    wiener: int
    complexity: int
    diameter: int
    transmissions: TransmissionVector
    pentagons: PentagonStats | None = None
    label: str | None = None

    def row(self) -> tuple[int, int, int, int]:
        return (self.order, self.wiener, self.complexity, self.diameter)

    def to_dict(self, per_vertex: bool = False) -> dict:
        d = {
            "n": self.order,
            "W": self.wiener,
            "C_W": self.complexity,
            "D": self.diameter,
        }
        if self.pentagons is not None:
            d.update(N_p=self.pentagons.parts, N_5=self.pentagons.isolated, ipr=self.pentagons.ipr)
        if self.label is not None:
            d["label"] = self.label
        if per_vertex:
            d["transmissions"] = list(self.transmissions.transmissions)
            d["eccentricities"] = list(self.transmissions.eccentricities)
        return d


def report(g: FullereneGraph, *, with_pentagons: bool = True) -> GraphReport:
    """All invariants of ``g`` from one all-sources search."""
    tr, ecc = distance_profile(g)
    total = int(tr.sum(dtype=np.int64))
    assert total % 2 == 0, "transmission sum must be even"
    pent = pentagon_stats(trace_faces(g)) if with_pentagons else None
    return GraphReport(
        order=g.order,
        wiener=total // 2,
        complexity=_distinct(tr),
        diameter=int(ecc.max()),
        transmissions=TransmissionVector(tuple(int(x) for x in tr), tuple(int(x) for x in ecc)),
        pentagons=pent,
        label=g.label,
    )

