"""Placement of the twelve pentagons: pentagonal parts and isolated pentagons."""

from __future__ import annotations

from dataclasses import dataclass

from fullwiener.graph import FaceSet, GraphError


class NotTwelvePentagons(GraphError):
    pass


@dataclass(frozen=True)
class PentagonStats:
    parts: int  # connected components of the pentagon adjacency graph
    isolated: int  # parts consisting of a single pentagon
    part_sizes: tuple[int, ...] = ()

    @property
    def ipr(self) -> bool:
        return self.isolated == 12


def _edge_set(face: tuple[int, ...]) -> set[frozenset[int]]:
    return {frozenset((face[i], face[(i + 1) % len(face)])) for i in range(len(face))}


def pentagon_adjacency(faces: FaceSet) -> list[set[int]]:
    """Adjacency lists over the pentagons (indexed as in ``faces.pentagons``).

    Two pentagons are adjacent when they share an edge; sharing only a
    vertex does not count.
    """
    pents = faces.pentagons
    if len(pents) != 12:
        raise NotTwelvePentagons(f"expected 12 pentagons, found {len(pents)}")
    owner: dict[frozenset[int], int] = {}
    adj: list[set[int]] = [set() for _ in pents]
    for i, face in enumerate(pents):
        for e in _edge_set(face):
            j = owner.setdefault(e, i)
            if j != i:
                adj[i].add(j)
                adj[j].add(i)
    return adj


def pentagon_stats(faces: FaceSet) -> PentagonStats:
    adj = pentagon_adjacency(faces)
    seen = [False] * len(adj)
    sizes = []
    for start in range(len(adj)):
        if seen[start]:
            continue
        seen[start] = True
        stack, size = [start], 0
        while stack:
            v = stack.pop()
            size += 1
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        sizes.append(size)
    sizes.sort(reverse=True)
    return PentagonStats(parts=len(sizes), isolated=sizes.count(1), part_sizes=tuple(sizes))
