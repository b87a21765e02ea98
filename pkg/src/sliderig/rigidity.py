"""Sparsity, rigidity, and rigid-component decomposition for typed graphs.

Counting rule: a graph on n1 sliders and n2 free vertices can carry at
most n1 + 2*n2 + min(0, n1 - 3) independent edges, and a subgraph bound
of the same shape must hold everywhere.  Independence splits into two
checkable halves: the classic m' <= 2n' - 3 condition (pebble game) and
the absorption condition m' <= n1' + 2n2' (edge orientation), because
2n' - max(n1', 3) = min(2n' - 3, n1' + 2n2').

Edge sets satisfying the bound form the independent sets of a matroid;
rank is computed greedily with incremental versions of both checks.
Rigid blocks are recovered through the dependence relation: a vertex w
belongs to the maximal rigid block of edge (u, v) exactly when both
virtual edges wu and wv are spanned by the graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cores import core_plus
from .graph import TypedGraph, VertexType, induced_subgraph
from .orientation import Orientation, find_orientation


def rigidity_target(n1: int, n2: int) -> int:
    """Edge count of a minimally rigid graph with these type counts (n >= 2)."""
    return n1 + 2 * n2 + min(0, n1 - 3)


class _PebbleGame:
    """Incremental test keeping every subgraph at m' <= 2n' - 3.

    Two pebbles per vertex; an edge may be added once four pebbles sit on
    its endpoints, and adding it consumes one.  Pebble searches reverse
    directed paths, which changes the internal state but not the set of
    placeable edges.
    """

    def __init__(self, n: int):
        self.n = n
        self.pebbles = [2] * n
        self.out: list[list[int]] = [[] for _ in range(n)]

    def _pull_pebble(self, root: int, block_a: int, block_b: int) -> bool:
        seen = bytearray(self.n)
        seen[root] = 1
        parent: dict[int, int] = {}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in self.out[x]:
                if seen[y]:
                    continue
                seen[y] = 1
                parent[y] = x
                if self.pebbles[y] > 0 and y != block_a and y != block_b:
                    self.pebbles[y] -= 1
                    self.pebbles[root] += 1
                    while y != root:
                        p = parent[y]
                        self.out[p].remove(y)
                        self.out[y].append(p)
                        y = p
                    return True
                stack.append(y)
        return False

    def can_place(self, u: int, v: int) -> bool:
        """True iff edge (u, v) can be added without breaking the bound."""
        while self.pebbles[u] + self.pebbles[v] < 4:
            if self.pebbles[u] < 2 and self._pull_pebble(u, u, v):
                continue
            if self.pebbles[v] < 2 and self._pull_pebble(v, u, v):
                continue
            return False
        return True

    def place(self, u: int, v: int) -> None:
        if not self.can_place(u, v):
            raise ValueError(f"edge ({u}, {v}) is not placeable")
        tail, head = (u, v) if u < v else (v, u)
        self.pebbles[tail] -= 1
        self.out[tail].append(head)


class _AbsorbGame:
    """Incremental test keeping every subgraph at m' <= n1' + 2n2'.

    Mirrors the orientation routine: each accepted edge points at one
    endpoint, in-degrees stay within the type value, and a saturated pair
    triggers a rerouting search.
    """

    def __init__(self, types: Sequence[int]):
        self.cap = [int(t) for t in types]
        self.indeg = [0] * len(self.cap)
        self.incoming: list[list[tuple[int, int, int]]] = [[] for _ in self.cap]

    def _reach_spare(self, u: int, v: int):
        # BFS over tails of incoming edges; a vertex with spare capacity
        # means one slot can be freed at u or v
        parent: dict[int, tuple[int, int, int, int]] = {}
        visited = {u, v}
        queue = [u, v]
        qi = 0
        while qi < len(queue):
            w = queue[qi]
            qi += 1
            for tail, a, b in self.incoming[w]:
                if tail in visited:
                    continue
                visited.add(tail)
                parent[tail] = (w, a, b, 0)
                if self.indeg[tail] < self.cap[tail]:
                    return tail, parent
                queue.append(tail)
        return None, parent

    def can_accept(self, u: int, v: int) -> bool:
        if self.indeg[u] < self.cap[u] or self.indeg[v] < self.cap[v]:
            return True
        spare, _ = self._reach_spare(u, v)
        return spare is not None

    def insert(self, u: int, v: int) -> bool:
        lo, hi = (u, v) if u < v else (v, u)
        for h in (lo, hi):
            if self.indeg[h] < self.cap[h]:
                self.indeg[h] += 1
                self.incoming[h].append((lo + hi - h, lo, hi))
                return True
        spare, parent = self._reach_spare(lo, hi)
        if spare is None:
            return False
        x = spare
        while x in parent:
            child, a, b, _ = parent[x]
            self.incoming[child].remove((x, a, b))
            self.indeg[child] -= 1
            self.indeg[x] += 1
            self.incoming[x].append((child, a, b))
            x = child
        self.indeg[x] += 1
        self.incoming[x].append((lo + hi - x, lo, hi))
        return True


@dataclass(frozen=True)
class RankResult:
    """Matroid rank of the edge set with one maximal independent subset."""

    rank: int
    basis: tuple[tuple[int, int], ...]


class _IndependenceTester:
    """Greedy basis over the canonical edge order, kept incrementally in
    both games; doubles as a dependence oracle for arbitrary vertex pairs."""

    def __init__(self, g: TypedGraph):
        self.g = g
        self.pebble = _PebbleGame(g.n)
        self.absorb = _AbsorbGame(g.types)
        basis = []
        for u, v in g.edges:
            if self.pebble.can_place(u, v) and self.absorb.insert(u, v):
                self.pebble.place(u, v)
                basis.append((u, v))
        self.basis = tuple(basis)

    def spanned(self, a: int, b: int) -> bool:
        """True iff adding edge (a, b) would not raise the rank."""
        if self.g.has_edge(a, b):
            return True
        return not (self.pebble.can_place(a, b) and self.absorb.can_accept(a, b))


def is_laman_sparse(g: TypedGraph) -> bool:
    """Every subgraph on n' >= 2 vertices has m' <= 2n' - 3."""
    game = _PebbleGame(g.n)
    for u, v in g.edges:
        if not game.can_place(u, v):
            return False
        game.place(u, v)
    return True


def is_sparse(g: TypedGraph) -> bool:
    """Every subgraph obeys the typed bound m' <= 2n' - max(n1', 3)."""
    return is_laman_sparse(g) and isinstance(find_orientation(g), Orientation)


def is_minimally_rigid(g: TypedGraph) -> bool:
    """Sparse with the full edge budget, or a single vertex."""
    if g.n == 1:
        return True
    if g.n < 2:
        return False
    return g.m == rigidity_target(g.n1, g.n2) and is_sparse(g)


def rank(g: TypedGraph) -> RankResult:
    """Size of a largest sparse edge subset, scanned in canonical order."""
    if g.n < 2:
        raise ValueError("rank requires at least 2 vertices")
    tester = _IndependenceTester(g)
    return RankResult(len(tester.basis), tester.basis)


def is_rigid(g: TypedGraph) -> bool:
    """True iff some spanning subgraph is minimally rigid."""
    if g.n <= 1:
        return g.n == 1
    return rank(g).rank == rigidity_target(g.n1, g.n2)


def _grow_block(g: TypedGraph, seeds: Iterable[int]) -> set[int]:
    """Close a vertex set under cheap rigid single-vertex extensions.

    A free vertex joins with two edges into the set.  A slider joins with
    one edge once the set holds three sliders, else it needs two; sliders
    parked at one edge are revisited when the third slider arrives.
    """
    adj = g.adjacency
    types = g.types
    in_s = set(seeds)
    n1s = sum(1 for v in in_s if types[v] == VertexType.SLIDER)
    cnt: dict[int, int] = {}
    parked: list[int] = []
    stack = list(in_s)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in in_s:
                continue
            c = cnt.get(w, 0) + 1
            cnt[w] = c
            t1 = types[w] == VertexType.SLIDER
            need = (1 if n1s >= 3 else 2) if t1 else 2
            if c < need:
                if t1 and c == 1 and n1s < 3:
                    parked.append(w)
                continue
            in_s.add(w)
            stack.append(w)
            if t1:
                n1s += 1
                if n1s == 3:
                    for p in parked:
                        if p not in in_s and cnt.get(p, 0) >= 1:
                            in_s.add(p)
                            stack.append(p)
                            n1s += 1
                    parked.clear()
    return in_s


class _BlockFinder:
    """Extracts maximal rigid blocks using a shared dependence oracle.

    Growth by single vertices alone can stall below the true block (a
    prism stalls at one triangle, a slider 4-cycle at one edge), so the
    grown set is expanded by boundary sweeps: a neighbor whose virtual
    edges to both seed endpoints are spanned belongs to the block.  Any
    member outside the current set stays reachable through the block
    itself, so sweeping until quiet is exact, except that a pinned block
    can fall apart into fragments bridged by non-members; the caller
    reunites pinned fragments afterwards.  The result is verified rigid;
    on the (unexpected) failure of that check an exhaustive spanned-pair
    scan gives the block directly.
    """

    def __init__(self, g: TypedGraph):
        self.g = g
        self.tester = _IndependenceTester(g)

    def _rigid_set(self, vs: set[int]) -> bool:
        sub, _ = induced_subgraph(self.g, vs)
        if sub.n <= 1:
            return sub.n == 1
        return rank(sub).rank == rigidity_target(sub.n1, sub.n2)

    def block_of(self, u: int, v: int) -> tuple[int, ...]:
        spanned = self.tester.spanned
        adj = self.g.adjacency
        block = _grow_block(self.g, (u, v))
        while True:
            boundary = {w for x in block for w in adj[x]} - block
            passed = [w for w in sorted(boundary)
                      if spanned(w, u) and spanned(w, v)]
            if not passed:
                break
            block = _grow_block(self.g, block | set(passed))
        if len(block) <= 2 or self._rigid_set(block):
            return tuple(sorted(block))
        exact = {
            w
            for w in range(self.g.n)
            if w in block or (w != u and w != v and spanned(w, u) and spanned(w, v))
        }
        exact.update((u, v))
        if not self._rigid_set(exact):
            raise RuntimeError(
                f"block extraction failed for edge ({u}, {v}); "
                "the dependence scan did not return a rigid set"
            )
        return tuple(sorted(exact))


def maximal_block_of_edge(g: TypedGraph, e: tuple[int, int]) -> tuple[int, ...]:
    """Vertex set of the unique maximal rigid block containing edge e."""
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    finder = _BlockFinder(g)
    block = finder.block_of(u, v)
    if sum(1 for w in block if int(g.types[w]) == 1) < 3:
        return block
    # a pinned block may hold detached fragments the local sweep cannot
    # reach, so complete it with the full dependence scan
    spanned = finder.tester.spanned
    full = set(block)
    full.update(
        w for w in range(g.n)
        if w not in full and spanned(w, u) and spanned(w, v)
    )
    return tuple(sorted(full))


@dataclass(frozen=True)
class RigidDecomposition:
    """Edge partition of a graph into its maximal rigid blocks.

    Each component is a (vertices, edges) pair with the full induced edge
    list; two components share at most one vertex.  Degree-0 vertices are
    listed separately.
    """

    components: tuple[tuple[tuple[int, ...], tuple[tuple[int, int], ...]], ...]
    isolated: tuple[int, ...]

    def largest_component_size(self) -> int:
        best = max((len(vs) for vs, _ in self.components), default=0)
        if best == 0 and self.isolated:
            return 1
        return best

    def largest_connected_component_size(self) -> int:
        best = 0
        for vs, es in self.components:
            if len(vs) > best and _edges_connect(vs, es):
                best = len(vs)
        if best == 0 and self.isolated:
            return 1
        return best


def _edges_connect(vs: Sequence[int], es: Sequence[tuple[int, int]]) -> bool:
    if len(vs) <= 1:
        return True
    adj: dict[int, list[int]] = {v: [] for v in vs}
    for a, b in es:
        adj[a].append(b)
        adj[b].append(a)
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vs)


def _connected_regions(g: TypedGraph) -> list[list[int]]:
    seen = bytearray(g.n)
    regions = []
    for s in range(g.n):
        if seen[s] or not g.adjacency[s]:
            continue
        seen[s] = 1
        stack = [s]
        region = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = 1
                    stack.append(y)
                    region.append(y)
        regions.append(sorted(region))
    return regions


def _blocks_of(g: TypedGraph) -> list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]:
    edge_id = {e: i for i, e in enumerate(g.edges)}
    assigned = bytearray(g.m)
    finder = _BlockFinder(g) if g.m else None
    comps = []
    for eid, (u, v) in enumerate(g.edges):
        if assigned[eid]:
            continue
        block = finder.block_of(u, v)
        inside = set(block)
        edges = []
        for a in block:
            for b in g.adjacency[a]:
                if a < b and b in inside:
                    edges.append((a, b))
        edges.sort()
        for e in edges:
            assigned[edge_id[e]] = 1
        comps.append((block, tuple(edges)))
    return comps


def _decompose(g: TypedGraph) -> RigidDecomposition:
    # blocks never straddle connected components, except that all pinned
    # blocks (three or more sliders) form one rigid union however they
    # are scattered; so scan per component and merge the pinned ones
    comps: list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = []
    for region in _connected_regions(g):
        sub, remap = induced_subgraph(g, region)
        back = {new: old for old, new in remap.items()}
        for vs, es in _blocks_of(sub):
            comps.append((
                tuple(back[x] for x in vs),
                tuple(sorted((min(back[a], back[b]), max(back[a], back[b]))
                             for a, b in es)),
            ))
    pinned = [i for i, (vs, _) in enumerate(comps)
              if sum(1 for v in vs if int(g.types[v]) == 1) >= 3]
    if len(pinned) > 1:
        drop = set(pinned[1:])
        union_vs = sorted(set().union(*(comps[i][0] for i in pinned)))
        union_es = sorted(set().union(*(comps[i][1] for i in pinned)))
        comps[pinned[0]] = (tuple(union_vs), tuple(union_es))
        comps = [c for i, c in enumerate(comps) if i not in drop]
    isolated = tuple(v for v in range(g.n) if not g.adjacency[v])
    return RigidDecomposition(tuple(comps), isolated)


def rigid_components(g: TypedGraph, *, core_fast: bool = False) -> RigidDecomposition:
    """Decompose g into maximal rigid blocks; every edge lands in exactly
    one block.

    With core_fast the graph is split at the accreted-core boundary and
    the two sides are decomposed separately, with boundary-crossing edges
    reported as bare 2-vertex blocks.  Blocks with a nonempty core sit
    entirely inside the accreted core, so the dominant components are
    found exactly; only blocks straddling the boundary (which have an
    empty core, e.g. free-vertex triangles) may come back split.  Meant
    for threshold-location sweeps at scale, not for exact structure.
    """
    if not core_fast:
        return _decompose(g)

    plus = set(core_plus(g))
    comps: list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]] = []
    for region in (sorted(plus), sorted(set(range(g.n)) - plus)):
        if not region:
            continue
        sub, remap = induced_subgraph(g, region)
        if sub.m == 0:
            continue
        back = {new: old for old, new in remap.items()}
        for vs, es in _decompose(sub).components:
            comps.append(
                (
                    tuple(back[x] for x in vs),
                    tuple((min(back[a], back[b]), max(back[a], back[b])) for a, b in es),
                )
            )
    for a, b in g.edges:
        if (a in plus) != (b in plus):
            comps.append(((a, b), ((a, b),)))
    isolated = tuple(v for v in range(g.n) if not g.adjacency[v])
    return RigidDecomposition(tuple(comps), isolated)


def retype_to_1(g: TypedGraph, v: int) -> TypedGraph:
    """Turn free vertex v into a slider; edges unchanged.

    Retyping inside a rigid graph preserves rigidity, and a minimally
    rigid graph with fewer than three sliders stays minimally rigid.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if g.types[v] != VertexType.FREE:
        raise ValueError(f"vertex {v} is not a free vertex")
    types = [int(t) for t in g.types]
    types[v] = 1
    return TypedGraph(types, g.edges)


def construct_minimally_rigid(n1: int, n2: int) -> TypedGraph:
    """Build a canonical minimally rigid graph: sliders 0..n1-1, then free.

    Sliders form a cycle (an edge when only two), free vertices form a
    cycle, and slider 0 is joined to the free vertices by a star.  With
    one or two free vertices the star is full and slider 1 contributes
    one extra edge; with three or more the star must skip one free
    vertex, which attaches to slider 1 instead, or the star side would
    exceed its sparsity count by one.  Small and sliderless cases fall
    back to complete graphs and a triangulated strip.
    """
    if n1 < 0 or n2 < 0 or n1 + n2 < 2:
        raise ValueError("need n1, n2 >= 0 with n1 + n2 >= 2")
    n = n1 + n2
    types = [1] * n1 + [2] * n2
    free = list(range(n1, n))

    if n1 == 0:
        edges = [(0, 1)]
        for k in range(2, n):
            edges += [(k - 2, k), (k - 1, k)]
        return TypedGraph(types, edges)

    if n1 == 1:
        if n2 <= 2:
            edges = [(a, b) for a in range(n) for b in range(a + 1, n)]
            return TypedGraph(types, edges)
        edges = [(free[k], free[(k + 1) % n2]) for k in range(n2)]
        edges += [(0, w) for w in free[:-1]]
        return TypedGraph(types, edges)

    edges = []
    if n1 == 2:
        edges.append((0, 1))
    else:
        edges += [(k, (k + 1) % n1) for k in range(n1)]
    if n2 == 2:
        edges.append((free[0], free[1]))
    elif n2 >= 3:
        edges += [(free[k], free[(k + 1) % n2]) for k in range(n2)]
    if n2 >= 3:
        edges += [(0, w) for w in free[:-1]]
        edges.append((1, free[-1]))
    elif n2:
        edges += [(0, w) for w in free]
        edges.append((1, free[0]))
    return TypedGraph(types, edges)


def edges_to_merge(i: int, j: int, t: int) -> int:
    """Cross edges needed so two rigid blocks with slider counts i and j,
    overlapping in one vertex of type t (t = 0: disjoint), merge into one
    rigid block.  Always between 0 and 3."""
    if t not in (0, 1, 2):
        raise ValueError("t must be 0, 1, or 2")
    if i < 0 or j < 0:
        raise ValueError("slider counts must be nonnegative")
    a, b = (i, j) if i >= j else (j, i)
    if b >= 3:
        return 0
    if a >= 3:
        if b == 2 and t == 2:
            raise ValueError("blocks with slider counts >=3 and 2 cannot share a free vertex")
        return 3 - b - t
    if a + b >= 3:
        return 6 - a - b - t
    return 3 - t
