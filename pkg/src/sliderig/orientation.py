"""Orientations where each vertex absorbs at most as many edges as its type.

A slider may have in-degree at most 1, a free vertex at most 2.  A graph
admits such an orientation exactly when every induced subgraph G' keeps
m' <= n1' + 2 n2'.  Edges are inserted one at a time; when both endpoints
are saturated a breadth-first search reroutes previously placed edges, and
if the search exhausts a saturated region that region certifies failure.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import TypedGraph


@dataclass(frozen=True)
class Orientation:
    """Partial orientation: canonical edge -> the endpoint receiving it."""

    head: dict[tuple[int, int], int]

    def in_degrees(self, n: int) -> list[int]:
        deg = [0] * n
        for h in self.head.values():
            deg[h] += 1
        return deg


@dataclass(frozen=True)
class DenseWitness:
    """A vertex set whose induced edge count exceeds its absorption capacity.

    The counts are recomputed from the graph, so m > n1 + 2*n2 holds by
    construction.  The set is the saturated region found by the failed
    search and is not minimized.
    """

    vertices: tuple[int, ...]
    n1: int
    n2: int
    m: int


class _Inserter:
    """Incremental insertion state shared by the public entry points."""

    def __init__(self, g: TypedGraph):
        self.g = g
        self.cap = [int(t) for t in g.types]
        self.indeg = [0] * g.n
        # incoming[v] lists edges currently pointed at v as (tail, edge_id)
        self.incoming: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        self.head: list[int] = [-1] * g.m
        # vertices known to sit in an exhausted saturated region; no
        # augmenting path can ever leave such a region, so skip them
        self.dead = bytearray(g.n)

    def _orient(self, eid: int, tail: int, head: int) -> None:
        self.head[eid] = head
        self.indeg[head] += 1
        self.incoming[head].append((tail, eid))

    def _flip(self, eid: int, new_head: int) -> None:
        old = self.head[eid]
        tail = new_head
        self.incoming[old].remove((tail, eid))
        self.indeg[old] -= 1
        self._orient(eid, old, new_head)

    def insert(self, eid: int) -> tuple[int, ...] | None:
        """Try to orient edge eid; returns None on success, else the
        saturated vertex set reached by the failed search."""
        u, v = self.g.edges[eid]
        lo, hi = (u, v) if u < v else (v, u)
        if self.indeg[lo] < self.cap[lo]:
            self._orient(eid, hi, lo)
            return None
        if self.indeg[hi] < self.cap[hi]:
            self._orient(eid, lo, hi)
            return None

        if self.dead[lo] and self.dead[hi]:
            return (lo, hi)

        # reroute: walking from a saturated vertex to the tail of one of its
        # incoming edges and flipping that edge frees one slot
        parent: dict[int, tuple[int, int]] = {}  # vertex -> (child vertex, edge)
        queue = deque()
        visited = {lo, hi}
        for root in (lo, hi):
            if not self.dead[root]:
                queue.append(root)
        while queue:
            w = queue.popleft()
            for tail, eid2 in self.incoming[w]:
                if tail in visited or self.dead[tail]:
                    continue
                visited.add(tail)
                parent[tail] = (w, eid2)
                if self.indeg[tail] < self.cap[tail]:
                    # flip the chain back toward the root, then place the edge
                    x = tail
                    while x in parent:
                        child, ce = parent[x]
                        self._flip(ce, x)
                        x = child
                    self._orient(eid, lo if x == hi else hi, x)
                    return None
                queue.append(tail)

        for w in visited:
            self.dead[w] = 1
        return tuple(sorted(visited))

    def orientation(self) -> Orientation:
        return Orientation({self.g.edges[i]: h for i, h in enumerate(self.head) if h >= 0})


def _witness_from(g: TypedGraph, vertices: tuple[int, ...]) -> DenseWitness:
    vs = set(vertices)
    n1 = sum(1 for v in vs if int(g.types[v]) == 1)
    m = sum(1 for a, b in g.edges if a in vs and b in vs)
    return DenseWitness(tuple(sorted(vs)), n1, len(vs) - n1, m)


def find_orientation(g: TypedGraph) -> Orientation | DenseWitness:
    """Orient all edges within type capacities, or certify impossibility.

    Edges are inserted in canonical order, preferring the lower-id endpoint
    when both can absorb.  On the first edge that cannot be placed the
    saturated region reached by the search is returned as a DenseWitness.
    """
    ins = _Inserter(g)
    for eid in range(g.m):
        stuck = ins.insert(eid)
        if stuck is not None:
            return _witness_from(g, stuck)
    return ins.orientation()


def max_orientable_edges(g: TypedGraph) -> tuple[int, Orientation]:
    """Size of a largest orientable edge subset, with a witness orientation.

    Same insertion loop as find_orientation, but edges that cannot be
    placed are skipped.  Skipping is exact: an edge refused now would be
    refused by every larger admissible subset, since the refusing region
    stays saturated for good.
    """
    ins = _Inserter(g)
    placed = 0
    for eid in range(g.m):
        if ins.insert(eid) is None:
            placed += 1
    return placed, ins.orientation()


def verify_orientation(g: TypedGraph, o: Orientation) -> bool:
    """Check o against g: real edges, heads on their edge, in-degrees within type."""
    indeg = [0] * g.n
    for edge, h in o.head.items():
        if edge not in g._edge_set:
            return False
        if h not in edge:
            return False
        indeg[h] += 1
    return all(indeg[v] <= int(g.types[v]) for v in range(g.n))
