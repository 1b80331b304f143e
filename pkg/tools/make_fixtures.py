#!/usr/bin/env python3
"""Generate small fullerene isomer sets as planar-code fixture files.

Independent of the package's own graph code: isomers come from the
Fowler-Manolopoulos face spiral (every placement of 12 pentagons in the
face sequence is wound up into a dual triangulation), the dual is embedded
with networkx, and isomers are deduplicated by a canonical BFS code over
all directed edges in both orientations.

    python tools/make_fixtures.py --max-n 40 --out tests/data
"""

from __future__ import annotations

import argparse
from itertools import combinations
from pathlib import Path

import networkx as nx

KNOWN_COUNTS = {20: 1, 24: 1, 26: 1, 28: 2, 30: 3, 32: 6, 34: 6, 36: 15, 38: 17, 40: 40, 42: 45, 44: 89}


def windup(sizes: list[int]) -> list[set[int]] | None:
    """Dual adjacency for a face spiral, or None if the spiral does not close."""
    f = len(sizes)
    adj = [set() for _ in range(f)]
    rem = list(sizes)

    def connect(a: int, b: int) -> bool:
        if a == b or b in adj[a]:
            return False
        adj[a].add(b)
        adj[b].add(a)
        rem[a] -= 1
        rem[b] -= 1
        return rem[a] >= 0 and rem[b] >= 0

    if not connect(0, 1):
        return None
    open_ = [0, 1]
    for k in range(2, f - 1):
        if not connect(k, open_[-1]) or not connect(k, open_[0]):
            return None
        while True:
            if rem[open_[0]] == 0:
                open_.pop(0)
                if not open_ or not connect(k, open_[0]):
                    return None
                continue
            if rem[open_[-1]] == 0:
                open_.pop()
                if not open_ or not connect(k, open_[-1]):
                    return None
                continue
            break
        if rem[k] <= 0:
            return None
        open_.append(k)
    last = f - 1
    if len(open_) != sizes[last]:
        return None
    for x in open_:
        if not connect(last, x):
            return None
    if any(rem):
        return None
    return adj


def dual_to_cubic(adj: list[set[int]]) -> list[tuple[int, int, int]] | None:
    g = nx.Graph()
    for a, nbrs in enumerate(adj):
        for b in nbrs:
            g.add_edge(a, b)
    planar, emb = nx.check_planarity(g)
    if not planar:
        return None
    face_of: dict[tuple[int, int], int] = {}
    faces = []
    for a, b in emb.edges():
        if (a, b) in face_of:
            continue
        face = emb.traverse_face(a, b)
        if len(face) != 3:
            return None
        idx = len(faces)
        faces.append(face)
        for i in range(3):
            face_of[(face[i], face[(i + 1) % 3])] = idx
    rotation = []
    for a, b, c in faces:
        rotation.append((face_of[(b, a)], face_of[(c, b)], face_of[(a, c)]))
    return rotation


def canonical_code(rotation: list[tuple[int, ...]]) -> tuple[int, ...]:
    best = None
    n = len(rotation)
    for orient in (1, -1):
        rot = [r[::orient] for r in rotation]
        pos = [{u: i for i, u in enumerate(r)} for r in rot]
        for s in range(n):
            for first in rot[s]:
                num = {s: 0}
                order = [s]
                entry = {s: first}
                code = []
                i = 0
                while i < len(order):
                    v = order[i]
                    i += 1
                    start = pos[v][entry[v]]
                    for j in range(3):
                        u = rot[v][(start + j) % 3]
                        if u not in num:
                            num[u] = len(order)
                            order.append(u)
                            entry[u] = v
                        code.append(num[u])
                code = tuple(code)
                if best is None or code < best:
                    best = code
    return best


def isomers(n: int) -> list[list[tuple[int, int, int]]]:
    f = n // 2 + 2
    found: dict[tuple[int, ...], list[tuple[int, int, int]]] = {}
    for pents in combinations(range(f), 12):
        sizes = [6] * f
        for p in pents:
            sizes[p] = 5
        adj = windup(sizes)
        if adj is None:
            continue
        rot = dual_to_cubic(adj)
        if rot is None or len(rot) != n:
            continue
        found.setdefault(canonical_code(rot), rot)
    return [found[key] for key in sorted(found)]


def encode(rotation) -> bytes:
    out = bytearray([len(rotation)])
    for nbrs in rotation:
        out.extend(u + 1 for u in nbrs)
        out.append(0)
    return bytes(out)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--out", type=Path, default=Path("tests/data"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(20, args.max_n + 1, 2):
        if n == 22:
            continue
        graphs = isomers(n)
        expected = KNOWN_COUNTS.get(n)
        status = "" if expected is None else (" ok" if expected == len(graphs) else f" MISMATCH (expected {expected})")
        print(f"C{n}: {len(graphs)} isomers{status}")
        path = args.out / f"c{n}.pc"
        path.write_bytes(b">>planar_code<<" + b"".join(encode(r) for r in graphs))


if __name__ == "__main__":
    main()
