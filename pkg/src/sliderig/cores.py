"""Degree-floor peeling and the accreted hull around the surviving core.

The core here keeps sliders of degree >= 2 and free vertices of degree
>= 3 (the floors are one above the type value).  Peeling removes light
vertices with a queue and live degree counters in O(n + m).  The hull
grows back greedily from the core: a slider rejoins with one edge into
the current set, a free vertex with two.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import TypedGraph


@dataclass(frozen=True)
class CoreResult:
    core_vertices: tuple[int, ...]
    core_plus_vertices: tuple[int, ...]
    n1_core: int
    n2_core: int
    m_core: int
    n_core_plus: int
    peel_trace: tuple[tuple[int, int, int], ...] | None = field(default=None)


def _peel(g: TypedGraph, want_trace: bool):
    # floor = type value + 1: sliders need degree 2, free vertices 3
    floor = [int(t) + 1 for t in g.types]
    deg = [len(a) for a in g.adjacency]
    removed = bytearray(g.n)
    queue = deque(v for v in range(g.n) if deg[v] < floor[v])
    for v in queue:
        removed[v] = 1
    trace: list[tuple[int, int, int]] = []
    while queue:
        v = queue.popleft()
        if want_trace:
            trace.append((v, int(g.types[v]), deg[v]))
        for w in g.adjacency[v]:
            if removed[w]:
                continue
            deg[w] -= 1
            if deg[w] < floor[w]:
                removed[w] = 1
                queue.append(w)
    return removed, trace


def core_2_5(g: TypedGraph) -> tuple[int, ...]:
    """Vertices of the maximal induced subgraph meeting the degree floors.

    Unique: the union of two subgraphs meeting the floors meets them too,
    and the peeling order does not matter.
    """
    removed, _ = _peel(g, want_trace=False)
    return tuple(v for v in range(g.n) if not removed[v])


def _accrete(g: TypedGraph, core: tuple[int, ...]) -> tuple[int, ...]:
    # a slider needs 1 edge into the current set to join, a free vertex 2;
    # an empty core accretes nothing
    if not core:
        return ()
    member = bytearray(g.n)
    for v in core:
        member[v] = 1
    hits = [0] * g.n
    queue = deque(core)
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if member[w]:
                continue
            hits[w] += 1
            need = 1 if int(g.types[w]) == 1 else 2
            if hits[w] >= need:
                member[w] = 1
                queue.append(w)
    return tuple(v for v in range(g.n) if member[v])


def core_plus(g: TypedGraph) -> tuple[int, ...]:
    """The core grown by greedy accretion; empty when the core is empty."""
    return _accrete(g, core_2_5(g))


def core_stats(g: TypedGraph, trace: bool = False) -> CoreResult:
    """Peel, accrete, and count; trace records the removal order with the
    degree each vertex had when it was removed."""
    removed, steps = _peel(g, want_trace=trace)
    core = tuple(v for v in range(g.n) if not removed[v])
    plus = _accrete(g, core)
    in_core = bytearray(g.n)
    for v in core:
        in_core[v] = 1
    n1c = sum(1 for v in core if int(g.types[v]) == 1)
    mc = sum(1 for a, b in g.edges if in_core[a] and in_core[b])
    return CoreResult(
        core_vertices=core,
        core_plus_vertices=plus,
        n1_core=n1c,
        n2_core=len(core) - n1c,
        m_core=mc,
        n_core_plus=len(plus),
        peel_trace=tuple(steps) if trace else None,
    )
