"""Finite simple graphs with a loop on every vertex and a marked vertex set.

Loops are implicit: every vertex is adjacent to itself, and ``edges`` only
stores pairs ``(i, j)`` with ``i < j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

from .errors import BudgetExceeded

MAX_ISO_VERTICES = 8


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self) -> list[list[int]]:
        """Blocks sorted by their smallest member, each block sorted."""
        blocks: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            blocks.setdefault(self.find(x), []).append(x)
        return sorted(blocks.values(), key=lambda b: b[0])


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    labels: tuple[Hashable, ...]
    edges: frozenset[tuple[int, int]] = frozenset()
    marked: frozenset[int] = frozenset()
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        for i, j in self.edges:
            if not 0 <= i < j < n:
                raise ValueError(f"bad edge ({i}, {j}) for {n} vertices")
        if any(not 0 <= m < n for m in self.marked):
            raise ValueError("marked vertex out of range")
        index = {lab: i for i, lab in enumerate(self.labels)}
        if len(index) != n:
            raise ValueError("vertex labels must be distinct")
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(cls, labels: Iterable[Hashable], edges: Iterable[tuple[int, int]] = (),
              marked: Iterable[int] = ()) -> "Graph":
        return cls(tuple(labels), frozenset(_norm_edge(i, j) for i, j in edges if i != j), frozenset(marked))

    @classmethod
    def discrete(cls, labels: Iterable[Hashable]) -> "Graph":
        return cls.build(labels)

    @classmethod
    def complete(cls, labels: Iterable[Hashable]) -> "Graph":
        labels = tuple(labels)
        return cls.build(labels, itertools.combinations(range(len(labels)), 2))

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def adjacent(self, i: int, j: int) -> bool:
        return i == j or _norm_edge(i, j) in self.edges

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})

    def degrees(self) -> list[int]:
        deg = [0] * len(self)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def components(self) -> list[list[int]]:
        uf = UnionFind(len(self))
        for a, b in self.edges:
            uf.union(a, b)
        return uf.groups()

    def is_complete(self) -> bool:
        n = len(self)
        return len(self.edges) == n * (n - 1) // 2

    def is_discrete(self) -> bool:
        return not self.edges

    def induced(self, keep: Sequence[int]) -> "Graph":
        pos = {v: k for k, v in enumerate(keep)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        return Graph.build([self.labels[v] for v in keep], edges, [pos[m] for m in self.marked if m in pos])

    def relabel(self, f: Callable[[Hashable], Hashable]) -> "Graph":
        return Graph(tuple(f(x) for x in self.labels), self.edges, self.marked)

    def edge_labels(self) -> set[frozenset]:
        return {frozenset((self.labels[a], self.labels[b])) for a, b in self.edges}

    def same_labelled(self, other: "Graph") -> bool:
        """Equality as labelled graphs, ignoring vertex order."""
        return (set(self.labels) == set(other.labels)
                and self.edge_labels() == other.edge_labels()
                and {self.labels[m] for m in self.marked} == {other.labels[m] for m in other.marked})


def is_graph_map(f: Sequence[int], G: Graph, H: Graph) -> bool:
    """Adjacency-preserving (loops allow collapsing an edge onto a vertex)."""
    return len(f) == len(G) and all(H.adjacent(f[a], f[b]) for a, b in G.edges)


# -- constructions ---------------------------------------------------------


def coproduct(gs: Sequence[Graph]) -> Graph:
    labels, edges, marked = [], [], []
    off = 0
    for k, g in enumerate(gs):
        labels.extend((k, lab) for lab in g.labels)
        edges.extend((a + off, b + off) for a, b in g.edges)
        marked.extend(m + off for m in g.marked)
        off += len(g)
    return Graph.build(labels, edges, marked)


def product(gs: Sequence[Graph]) -> Graph:
    """Vertex tuples; adjacent iff adjacent (or equal) in every coordinate."""
    idx = list(itertools.product(*[range(len(g)) for g in gs]))
    labels = [tuple(g.labels[i] for g, i in zip(gs, t)) for t in idx]
    edges = [(x, y) for x, y in itertools.combinations(range(len(idx)), 2)
             if all(g.adjacent(a, b) for g, a, b in zip(gs, idx[x], idx[y]))]
    marked = [x for x, t in enumerate(idx) if all(i in g.marked for g, i in zip(gs, t))]
    return Graph.build(labels, edges, marked)


def union(gs: Sequence[Graph]) -> Graph:
    """Union over a common label universe."""
    labels: dict[Hashable, int] = {}
    for g in gs:
        for lab in g.labels:
            labels.setdefault(lab, len(labels))
    edges, marked = set(), set()
    for g in gs:
        for a, b in g.edges:
            edges.add(_norm_edge(labels[g.labels[a]], labels[g.labels[b]]))
        marked.update(labels[g.labels[m]] for m in g.marked)
    return Graph.build(labels, edges, marked)


def intersection(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise ValueError("intersection of an empty family")
    common = [lab for lab in gs[0].labels if all(lab in g._index for g in gs[1:])]
    pos = {lab: k for k, lab in enumerate(common)}
    edges = []
    for x, y in itertools.combinations(common, 2):
        if all(g.adjacent(g.index(x), g.index(y)) for g in gs):
            edges.append((pos[x], pos[y]))
    marked = [pos[lab] for lab in common if all(g.index(lab) in g.marked for g in gs)]
    return Graph.build(common, edges, marked)


def equalizer(G: Graph, f: Sequence[int], g: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on {v : f(v) = g(v)} and its inclusion."""
    keep = [v for v in range(len(G)) if f[v] == g[v]]
    return G.induced(keep), keep


def coequalizer(H: Graph, f: Sequence[int], g: Sequence[int]) -> tuple[Graph, list[int]]:
    """Quotient of H by the equivalence generated by f(v) ~ g(v), and the quotient map."""
    uf = UnionFind(len(H))
    for a, b in zip(f, g):
        uf.union(a, b)
    blocks = uf.groups()
    q = [0] * len(H)
    for k, blk in enumerate(blocks):
        for v in blk:
            q[v] = k
    labels = [tuple(H.labels[v] for v in blk) for blk in blocks]
    edges = {(q[a], q[b]) for a, b in H.edges if q[a] != q[b]}
    return Graph.build(labels, edges, {q[m] for m in H.marked}), q


# -- isomorphism -----------------------------------------------------------


def find_isomorphism(G: Graph, H: Graph, respect_marks: bool = True,
                     max_vertices: int = MAX_ISO_VERTICES) -> list[int] | None:
    """A bijection G -> H preserving adjacency (and marks), by backtracking."""
    n = len(G)
    if n != len(H) or len(G.edges) != len(H.edges):
        return None
    if respect_marks and len(G.marked) != len(H.marked):
        return None
    if n > max_vertices:
        raise BudgetExceeded("graph isomorphism search", n, max_vertices)
    dg, dh = G.degrees(), H.degrees()
    if sorted(dg) != sorted(dh):
        return None

    def key(graph, deg, v):
        return (deg[v], respect_marks and v in graph.marked)

    cands = [[w for w in range(n) if key(H, dh, w) == key(G, dg, v)] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(cands[v]))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in cands[v]:
            if w in used:
                continue
            if all(G.adjacent(v, u) == H.adjacent(w, assign[u]) for u in assign):
                assign[v] = w
                used.add(w)
                if extend(k + 1):
                    return True
                del assign[v]
                used.discard(w)
        return False

    return [assign[v] for v in range(n)] if extend(0) else None


def is_isomorphic(G: Graph, H: Graph, respect_marks: bool = True,
                  max_vertices: int = MAX_ISO_VERTICES) -> bool:
    return find_isomorphism(G, H, respect_marks, max_vertices) is not None
