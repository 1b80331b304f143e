"""Fullerene graphs stored as rotation systems, face tracing and validation.

A graph is kept as one clockwise neighbour triple per vertex (0-based ids).
Faces are recovered from the rotation: leaving directed edge ``(u, v)`` the
walk continues along ``(v, w)`` where ``w`` follows ``u`` in the rotation
at ``v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union


class GraphError(ValueError):
    """Base class for structural problems with a rotation system."""


class DegreeError(GraphError):
    pass


class AsymmetryError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class ParallelEdgeError(GraphError):
    pass


class OrderError(GraphError):
    pass


class EmbeddingError(GraphError):
    pass


def order_problem(n: int) -> str | None:
    """Return why no fullerene graph has ``n`` vertices, or None if one may."""
    if n % 2:
        return f"order {n} is odd"
    if n < 20:
        return f"order {n} is below 20"
    if n == 22:
        return "order 22: no fullerene graph has 22 vertices"
    return None


def _structure_problems(rotation: Sequence[Sequence[int]]) -> list[tuple[type, str]]:
    # Every local check, in a fixed order; connectivity only once adjacency is sane.
    problems: list[tuple[type, str]] = []
    n = len(rotation)
    for v, nbrs in enumerate(rotation):
        if len(nbrs) != 3:
            problems.append((DegreeError, f"vertex {v} has degree {len(nbrs)}"))
        for u in nbrs:
            if not 0 <= u < n:
                problems.append((DegreeError, f"vertex {v} names out-of-range id {u}"))
        if v in nbrs:
            problems.append((SelfLoopError, f"vertex {v} has a self-loop"))
        if len(set(nbrs)) != len(nbrs):
            problems.append((ParallelEdgeError, f"vertex {v} repeats a neighbour"))
    if problems:
        return problems
    for v, nbrs in enumerate(rotation):
        for u in nbrs:
            if v not in rotation[u]:
                problems.append((AsymmetryError, f"vertex {v} lists {u} but {u} does not list {v}"))
    if problems or n == 0:
        return problems
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in rotation[v]:
            if not seen[u]:
                seen[u] = True
                queue.append(u)
    if not all(seen):
        problems.append((DisconnectedError, f"graph is disconnected ({sum(seen)} of {n} reachable from 0)"))
    return problems


@dataclass(frozen=True)
class FullereneGraph:
    """Cubic graph with a clockwise rotation at every vertex.

    Instances are immutable. Build them with :meth:`from_adjacency`, which
    checks degree, symmetry, connectivity and the admissible orders.
    """

    rotation: tuple[tuple[int, int, int], ...]
    label: str | None = field(default=None, compare=False)

    @classmethod
    def from_adjacency(
        cls,
        rotation_lists: Iterable[Sequence[int]],
        label: str | None = None,
        *,
        check_order: bool = True,
    ) -> "FullereneGraph":
        rotation = tuple(tuple(int(u) for u in nbrs) for nbrs in rotation_lists)
        problems = _structure_problems(rotation)
        if problems:
            exc, message = problems[0]
            raise exc(message)
        if check_order:
            why = order_problem(len(rotation))
            if why:
                raise OrderError(why)
        return cls(rotation, label)  # type: ignore[arg-type]

    @property
    def order(self) -> int:
        return len(self.rotation)

    def neighbors(self, v: int) -> tuple[int, int, int]:
        return self.rotation[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v, nbrs in enumerate(self.rotation) for u in nbrs if v < u]

    def relabel(self, perm: Sequence[int]) -> "FullereneGraph":
        """Copy of the graph with vertex ``v`` renamed ``perm[v]``."""
        new = [None] * self.order
        for v, nbrs in enumerate(self.rotation):
            new[perm[v]] = tuple(perm[u] for u in nbrs)
        return FullereneGraph(tuple(new), self.label)  # type: ignore[arg-type]

    def mirror(self) -> "FullereneGraph":
        """The same graph with every rotation reversed."""
        return FullereneGraph(tuple(nbrs[::-1] for nbrs in self.rotation), self.label)  # type: ignore[arg-type]


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[int, ...], ...]

    @property
    def pentagon_count(self) -> int:
        return sum(1 for f in self.faces if len(f) == 5)

    @property
    def hexagon_count(self) -> int:
        return sum(1 for f in self.faces if len(f) == 6)

    @property
    def pentagons(self) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == 5]

    def __len__(self) -> int:
        return len(self.faces)


def _trace(rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    n = len(rotation)
    pos = [{u: i for i, u in enumerate(nbrs)} for nbrs in rotation]
    used: set[tuple[int, int]] = set()
    faces = []
    limit = sum(len(nbrs) for nbrs in rotation)
    for start in range(n):
        for first in rotation[start]:
            if (start, first) in used:
                continue
            face = []
            u, v = start, first
            while (u, v) not in used:
                used.add((u, v))
                face.append(u)
                nbrs = rotation[v]
                w = nbrs[(pos[v][u] + 1) % len(nbrs)]
                u, v = v, w
                if len(face) > limit:
                    raise EmbeddingError(f"face walk from ({start}, {first}) does not close")
            if (u, v) != (start, first):
                raise EmbeddingError(f"face walk from ({start}, {first}) does not close")
            faces.append(tuple(face))
    return faces


def trace_faces(g: FullereneGraph, *, strict: bool = False) -> FaceSet:
    """Trace every face of the embedding once.

    With ``strict`` an :class:`EmbeddingError` is raised unless all faces
    are pentagons or hexagons.
    """
    faces = _trace(g.rotation)
    if strict:
        bad = sorted({len(f) for f in faces} - {5, 6})
        if bad:
            raise EmbeddingError(f"faces of size {bad} present")
    return FaceSet(tuple(faces))


@dataclass
class ValidationReport:
    order: int
    failures: list[str] = field(default_factory=list)
    faces: FaceSet | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def pentagon_count(self) -> int | None:
        return None if self.faces is None else self.faces.pentagon_count

    @property
    def hexagon_count(self) -> int | None:
        return None if self.faces is None else self.faces.hexagon_count


def validate_fullerene(g: Union[FullereneGraph, Sequence[Sequence[int]]]) -> ValidationReport:
    """Check every fullerene condition and collect all failures.

    Accepts a :class:`FullereneGraph` or raw rotation lists; nothing is
    raised for a bad graph, the failures are listed in the report.
    """
    rotation = g.rotation if isinstance(g, FullereneGraph) else [tuple(nbrs) for nbrs in g]
    n = len(rotation)
    rep = ValidationReport(order=n)
    for exc, message in _structure_problems(rotation):
        rep.failures.append(f"{exc.__name__}: {message}")
    why = order_problem(n)
    if why:
        rep.failures.append(f"OrderError: {why}")
    if any(f.startswith(("DegreeError", "SelfLoopError", "ParallelEdgeError", "AsymmetryError")) for f in rep.failures):
        return rep

    try:
        faces = FaceSet(tuple(_trace(rotation)))
    except EmbeddingError as err:
        rep.failures.append(f"EmbeddingError: {err}")
        return rep
    rep.faces = faces
    edges = 3 * n // 2
    euler = n - edges + len(faces)
    if euler != 2:
        rep.failures.append(f"EmbeddingError: Euler characteristic {euler} != 2 (rotation is not planar)")
    sizes = sorted({len(f) for f in faces.faces} - {5, 6})
    if sizes:
        rep.failures.append(f"EmbeddingError: faces of size {sizes} present")
    if faces.pentagon_count != 12:
        rep.failures.append(f"EmbeddingError: {faces.pentagon_count} pentagons instead of 12")
    return rep
