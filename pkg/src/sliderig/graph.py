"""Typed graphs: two vertex kinds with different freedom counts.

A vertex is either a slider (one degree of freedom, type value 1) or free
(two degrees of freedom, type value 2).  Graphs are simple and undirected.
This module holds the graph container, the random-graph sampler, induced
subgraphs, and a plain-text edge-list format.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

# Dense Bernoulli sampling over all vertex pairs is fine up to this size;
# beyond it we jump between edges with geometric gaps (same distribution).
_DENSE_SAMPLE_LIMIT = 2000


class VertexType(IntEnum):
    """Vertex kind; the numeric value is the freedom count of the vertex."""

    SLIDER = 1
    FREE = 2


class GraphFormatError(ValueError):
    """Raised on malformed edge-list input; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class TypedGraph:
    """Immutable simple graph with a type per vertex.

    ``types[v]`` is the VertexType of vertex ``v``; vertices are 0-based.
    Edges are stored canonically: each pair sorted, pairs sorted
    lexicographically.  Self-loops and duplicate edges are rejected.
    """

    types: tuple[VertexType, ...]
    edges: tuple[tuple[int, int], ...]

    def __init__(self, types: Sequence[int], edges: Iterable[tuple[int, int]]):
        tt = tuple(VertexType(t) for t in types)
        n = len(tt)
        canon = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "types", tt)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def n(self) -> int:
        return len(self.types)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def n1(self) -> int:
        return sum(1 for t in self.types if t == VertexType.SLIDER)

    @property
    def n2(self) -> int:
        return self.n - self.n1

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def __repr__(self) -> str:
        return f"TypedGraph(n={self.n}, n1={self.n1}, n2={self.n2}, m={self.m})"


@dataclass(frozen=True)
class ErConfig:
    """Sampling parameters: n vertices, edge probability c/n, slider share 1-q."""

    n: int
    c: float
    q: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.c < 0:
            raise ValueError("c must be nonnegative")
        if not 0.0 <= self.q <= 1.0:
            raise ValueError("q must lie in [0, 1]")


def _pair_from_index(ks: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # Invert the lexicographic pair index: row i starts at offset i*(2n-1-i)/2.
    b = 2 * n - 1
    i = ((b - np.sqrt(b * b - 8.0 * ks)) / 2.0).astype(np.int64)
    i = np.clip(i, 0, n - 2)
    # float sqrt can land one row off near boundaries
    off = i * (b - i) // 2
    too_far = off > ks
    i = np.where(too_far, i - 1, i)
    off = i * (b - i) // 2
    nxt = (i + 1) * (b - i - 1) // 2
    step = nxt <= ks
    i = np.where(step, i + 1, i)
    off = i * (b - i) // 2
    j = ks - off + i + 1
    return i, j


def sample_er(config: ErConfig) -> TypedGraph:
    """Draw a graph: each pair an edge with probability c/n, types iid.

    Every vertex is FREE with probability q, otherwise SLIDER.  Fully
    deterministic given the config; types are drawn first, then edges, so
    the same seed yields the same graph.  c/n above 1 is clamped with a
    warning.
    """
    n, c, q, seed = config.n, config.c, config.q, config.seed
    rng = np.random.default_rng(seed)
    free = rng.random(n) < q
    types = np.where(free, 2, 1)

    p = c / n if n else 0.0
    if p > 1.0:
        warnings.warn(f"edge probability c/n = {p:.3g} clamped to 1", stacklevel=2)
        p = 1.0

    total = n * (n - 1) // 2
    if p <= 0.0 or total == 0:
        ks = np.empty(0, dtype=np.int64)
    elif p >= 1.0:
        ks = np.arange(total, dtype=np.int64)
    elif n <= _DENSE_SAMPLE_LIMIT:
        mask = rng.random(total) < p
        ks = np.nonzero(mask)[0].astype(np.int64)
    else:
        # skip ahead by geometric gaps; identical distribution to the dense scan
        mean = total * p
        chunk = max(1024, int(mean + 10.0 * np.sqrt(mean) + 16))
        pos = -1
        out = []
        while pos < total:
            gaps = rng.geometric(p, size=chunk)
            ks_chunk = pos + np.cumsum(gaps)
            pos = int(ks_chunk[-1])
            out.append(ks_chunk[ks_chunk < total])
        ks = np.concatenate(out) if out else np.empty(0, dtype=np.int64)

    iu, jv = _pair_from_index(ks, n) if len(ks) else (np.empty(0, int), np.empty(0, int))
    edge_list = [(int(a), int(b)) for a, b in zip(iu, jv)]
    return TypedGraph(types.tolist(), edge_list)


def induced_subgraph(g: TypedGraph, vertices: Iterable[int]) -> tuple[TypedGraph, dict[int, int]]:
    """Restrict g to a vertex subset; returns the subgraph and old->new ids.

    New ids follow the sorted order of the chosen vertices.
    """
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    remap = {old: new for new, old in enumerate(vs)}
    types = [g.types[v] for v in vs]
    edges = [(remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap]
    return TypedGraph(types, edges), remap


def write_graph(g: TypedGraph, path) -> None:
    """Write the canonical edge-list form: header, type string, sorted edges."""
    lines = [f"{g.n} {g.m}", "".join(str(int(t)) for t in g.types)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_graph(path) -> TypedGraph:
    """Parse the edge-list format; malformed input names the bad line.

    Layout: ``n m`` header, then a string of n type characters from {1,2},
    then m lines ``u v``.  Lines starting with '#' are comments.
    """
    with open(path) as fh:
        raw = fh.read().split("\n")

    expecting_types_for_n: int | None = None
    header: tuple[int, int] | None = None
    types: str | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    for lineno, line in enumerate(raw, start=1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if stripped == "" and not (header is not None and types is None and header[0] == 0):
            continue

        if header is None:
            parts = stripped.split()
            if len(parts) != 2:
                raise GraphFormatError(lineno, f"expected 'n m' header, got {stripped!r}")
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise GraphFormatError(lineno, f"non-integer header {stripped!r}") from None
            if n < 0 or m < 0:
                raise GraphFormatError(lineno, "negative counts in header")
            header = (n, m)
            expecting_types_for_n = n
            continue

        if types is None:
            n = header[0]
            if len(stripped) != n:
                raise GraphFormatError(lineno, f"type string has length {len(stripped)}, expected {n}")
            bad = set(stripped) - {"1", "2"}
            if bad:
                raise GraphFormatError(lineno, f"type characters outside {{1,2}}: {sorted(bad)}")
            types = stripped
            continue

        n, m = header
        if len(edges) >= m:
            raise GraphFormatError(lineno, f"more than {m} edge lines")
        parts = stripped.split()
        if len(parts) != 2:
            raise GraphFormatError(lineno, f"expected 'u v', got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer edge {stripped!r}") from None
        if u == v:
            raise GraphFormatError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(lineno, f"edge ({u}, {v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(lineno, f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)

    last = len(raw)
    if header is None:
        raise GraphFormatError(last, "missing 'n m' header")
    if types is None:
        raise GraphFormatError(last, "missing type string line")
    if len(edges) != header[1]:
        raise GraphFormatError(last, f"expected {header[1]} edges, found {len(edges)}")
    return TypedGraph([int(ch) for ch in types], edges)
