"""Graphs of cyclic submodules Γ_I(M, Σ) and the invariants built on them.

Vertices are the distinct cyclic submodules Ra for a in Σ, and Ra ~ Rb
exactly when Ia ∩ Ib ≠ 0.  Over the commutative local algebras handled
here Ia depends only on Ra, so adjacency is representative independent.

Components are computed without materializing the O(V^2) edge set: two
vertices are adjacent iff their ideal images share a projective point, so
bucketing vertices by the projective points of their images and merging
each bucket yields the same partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .errors import BudgetExceeded, NotCMorphism, NotDecompositionIdeal, NotFundamental
from .graphs import Graph, UnionFind
from .linalg import DEFAULT_ENUM_BUDGET, FpMatrix, Subspace, Vector
from .trivext import (AModule, Ideal, cyclic_space, direct_sum, ideal_image, ideal_image_vec,
                      in_decomposition_domain, is_intertwiner, submodule_generated, zero_module)


@dataclass(frozen=True)
class CTriple:
    M: AModule
    Sigma: tuple[Vector, ...]
    SigmaPrime: tuple[Vector, ...] = ()

    def __post_init__(self):
        p = self.M.p
        sig = tuple(tuple(int(x) % p for x in a) for a in self.Sigma)
        sp = tuple(tuple(int(x) % p for x in a) for a in self.SigmaPrime)
        for a in sig:
            if len(a) != self.M.d:
                raise ValueError(f"vector {a} does not live in a module of dimension {self.M.d}")
            if not any(a):
                raise ValueError("Σ may not contain 0")
        if not set(sp) <= set(sig):
            raise ValueError("Σ' must be a subset of Σ")
        object.__setattr__(self, "Sigma", sig)
        object.__setattr__(self, "SigmaPrime", sp)


class CycGraph:
    """Γ_I(M, Σ) with marked set ⋃_{a ∈ Σ'} C_a.

    ``vertices`` holds (canonical subspace Ra, representative a) sorted by
    the subspace basis; ``images[k]`` is I·a for the k-th vertex.
    """

    def __init__(self, M: AModule, I: Ideal, vertices: Sequence[tuple[Subspace, Vector]],
                 marked_reps: Iterable[Vector] = ()):
        self.M = M
        self.I = I
        self.vertices = tuple(sorted(vertices, key=lambda v: (v[0].rank, v[0].basis)))
        self._index = {U: k for k, (U, _) in enumerate(self.vertices)}
        if len(self._index) != len(self.vertices):
            raise ValueError("duplicate vertex subspaces")
        self.images = tuple(ideal_image_vec(I, M, rep) for _, rep in self.vertices)
        seeds = {self.vertex_of(a) for a in marked_reps}
        comp = self.component_id
        marked_comps = {comp[s] for s in seeds}
        self.marked = frozenset(k for k in range(len(self.vertices)) if comp[k] in marked_comps)

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex_of(self, a: Sequence[int]) -> int:
        return self._index[cyclic_space(self.M, a)]

    def index(self, U: Subspace) -> int:
        return self._index[U]

    def adjacent(self, i: int, j: int) -> bool:
        return i == j or not la.intersect(self.images[i], self.images[j]).is_zero()

    @cached_property
    def _buckets(self) -> dict[Vector, list[int]]:
        buckets: dict[Vector, list[int]] = {}
        for k, img in enumerate(self.images):
            for pt in la.projective_points(img):
                buckets.setdefault(pt, []).append(k)
        return buckets

    @cached_property
    def _components(self) -> list[list[int]]:
        uf = UnionFind(len(self.vertices))
        for members in self._buckets.values():
            for k in members[1:]:
                uf.union(members[0], k)
        return uf.groups()

    def components(self) -> list[list[int]]:
        return [list(c) for c in self._components]

    @cached_property
    def component_id(self) -> list[int]:
        cid = [0] * len(self.vertices)
        for c, block in enumerate(self._components):
            for k in block:
                cid[k] = c
        return cid

    @property
    def n_components(self) -> int:
        return len(self._components)

    @cached_property
    def edges(self) -> list[tuple[int, int]]:
        """All i < j adjacent pairs, sorted."""
        out = set()
        for members in self._buckets.values():
            out.update(itertools.combinations(members, 2))
        return sorted(out)

    def adjacency_matrix(self) -> np.ndarray:
        n = len(self.vertices)
        adj = np.eye(n, dtype=bool)
        for i, j in self.edges:
            adj[i, j] = adj[j, i] = True
        return adj

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def to_graph(self) -> Graph:
        """Generic graph labelled by the canonical vertex bases."""
        return Graph.build((U.basis for U, _ in self.vertices), self.edges, self.marked)


# -- construction ----------------------------------------------------------


def gamma(t: CTriple, I: Ideal) -> CycGraph:
    M = t.M
    reps: dict[Subspace, Vector] = {}
    for a in t.Sigma:
        U = cyclic_space(M, a)
        if U not in reps or a < reps[U]:
            reps[U] = a
    return CycGraph(M, I, list(reps.items()), t.SigmaPrime)


def _encode_weights(p: int, d: int) -> np.ndarray:
    return np.array([p ** (d - 1 - k) for k in range(d)], dtype=np.int64)


def full_vertices(M: AModule, I: Ideal, budget: int = DEFAULT_ENUM_BUDGET) -> list[tuple[Subspace, Vector]]:
    """The distinct cyclic submodules Ra, a ∈ M ∖ IM, with smallest representatives."""
    p, d = M.p, M.d
    total = p ** d
    if total > budget:
        raise BudgetExceeded(f"enumerating F_{p}^{d}", total, budget)
    weights = _encode_weights(p, d)
    visited = np.zeros(total, dtype=bool)
    IM = ideal_image(I, M, M.full())
    for v in la.enumerate_vectors(IM, budget):
        visited[int(np.dot(v, weights)) if d else 0] = True
    units = np.arange(1, p, dtype=np.int64)
    out = []
    for code in range(total):
        if visited[code]:
            continue
        a = tuple((code // p ** (d - 1 - k)) % p for k in range(d))
        Ja = la.span((la.mat_vec(t, a) for t in M.T), d, p)
        js = np.array(la.enumerate_vectors(Ja, budget), dtype=np.int64).reshape(-1, d)
        orbit = (units[:, None, None] * np.array(a, dtype=np.int64)[None, None, :] + js[None, :, :]) % p
        visited[orbit.reshape(-1, d) @ weights] = True
        out.append((la.span([a, *Ja.basis], d, p), a))
    return out


def gamma_full(M: AModule, I: Ideal, budget: int = DEFAULT_ENUM_BUDGET) -> CycGraph:
    """Γ_I(M) with Σ = M ∖ IM, by exhaustive enumeration."""
    return CycGraph(M, I, full_vertices(M, I, budget))


def components(G: CycGraph | Graph) -> list[list[int]]:
    return G.components()


def cdim(M: AModule, I: Ideal, budget: int = DEFAULT_ENUM_BUDGET, graph: CycGraph | None = None) -> int:
    if not in_decomposition_domain(M, I):
        raise NotDecompositionIdeal(f"{I} is not a decomposition ideal of this module")
    G = graph if graph is not None else gamma_full(M, I, budget)
    return G.n_components


# -- fundamental sets ------------------------------------------------------


def _component_sums(G: CycGraph) -> list[Subspace]:
    M = G.M
    sums = []
    for block in G.components():
        rows = []
        for k in block:
            rows.extend(G.vertices[k][0].basis)
        sums.append(la.span(rows, M.d, M.p))
    return sums


def fundamental_failure(M: AModule, I: Ideal, Sigma: Sequence[Sequence[int]],
                        graph: CycGraph | None = None, budget: int = DEFAULT_ENUM_BUDGET) -> str | None:
    """None if Σ is fundamental, otherwise the reason it is not."""
    p, d = M.p, M.d
    Sigma = [tuple(int(x) % p for x in a) for a in Sigma]
    IM = ideal_image(I, M, M.full())
    for a in Sigma:
        if la.contains(IM, a):
            return f"{a} lies in IM"
    if submodule_generated(M, Sigma) != M.full():
        return "Σ does not generate M"
    G = graph if graph is not None else gamma_full(M, I, budget)
    sums = _component_sums(G)
    cid = G.component_id
    for a in Sigma:
        c = cid[G.vertex_of(a)]
        rest = la.sum_all((s for k, s in enumerate(sums) if k != c), p, d)
        if rest.is_full():
            return f"vertices outside the component of {a} already span M"
    return None


def is_fundamental(M: AModule, I: Ideal, Sigma: Sequence[Sequence[int]],
                   graph: CycGraph | None = None, budget: int = DEFAULT_ENUM_BUDGET) -> bool:
    return fundamental_failure(M, I, Sigma, graph, budget) is None


def fundamental_components(G: CycGraph, Sigma: Sequence[Sequence[int]]) -> frozenset[int]:
    cid = G.component_id
    return frozenset(cid[G.vertex_of(a)] for a in Sigma)


def fcdim(M: AModule, I: Ideal, Sigma: Sequence[Sequence[int]],
          graph: CycGraph | None = None, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    G = graph if graph is not None else gamma_full(M, I, budget)
    reason = fundamental_failure(M, I, Sigma, G)
    if reason is not None:
        raise NotFundamental(reason)
    return len(fundamental_components(G, Sigma))


# -- morphisms and categorical constructions -------------------------------


def gamma_map(f: FpMatrix, src: CTriple, dst: CTriple, I: Ideal,
              src_graph: CycGraph | None = None, dst_graph: CycGraph | None = None) -> list[int]:
    """Vertex map Ra ↦ Rf(a) of Γ_I(src) → Γ_I(dst)."""
    if not is_intertwiner(f, src.M, dst.M):
        raise NotCMorphism("matrix does not commute with the action")
    sig, sigp = set(dst.Sigma), set(dst.SigmaPrime)
    for a in src.Sigma:
        if la.mat_vec(f, a) not in sig:
            raise NotCMorphism(f"f({a}) is not in the target Σ")
    for a in src.SigmaPrime:
        if la.mat_vec(f, a) not in sigp:
            raise NotCMorphism(f"f({a}) is not in the target Σ'")
    return vertex_map(f, src_graph or gamma(src, I), dst_graph or gamma(dst, I))


def vertex_map(f: FpMatrix, Gs: CycGraph, Gd: CycGraph) -> list[int]:
    """Ra ↦ f(Ra), checked to be a morphism of marked graphs."""
    vmap = []
    for U, _ in Gs.vertices:
        V = la.image(f, U)
        if V not in Gd._index:
            raise NotCMorphism(f"image of vertex {U.basis} is not a vertex of the target")
        vmap.append(Gd.index(V))
    for i, j in Gs.edges:
        if not Gd.adjacent(vmap[i], vmap[j]):
            raise NotCMorphism(f"edge ({i}, {j}) is not preserved")
    if any(vmap[m] not in Gd.marked for m in Gs.marked):
        raise NotCMorphism("marked set is not preserved")
    return vmap


def compose_maps(g: Sequence[int], f: Sequence[int]) -> list[int]:
    """g ∘ f."""
    return [g[x] for x in f]


def _embed(vecs: Iterable[Vector], off: int, total: int) -> list[Vector]:
    return [(0,) * off + tuple(v) + (0,) * (total - off - len(v)) for v in vecs]


def triple_coproduct(ts: Sequence[CTriple]) -> CTriple:
    if not ts:
        raise ValueError("coproduct of an empty family needs an algebra")
    M = ts[0].M
    for t in ts[1:]:
        M = direct_sum(M, t.M)
    sig, sigp, off = [], [], 0
    for t in ts:
        sig += _embed(t.Sigma, off, M.d)
        sigp += _embed(t.SigmaPrime, off, M.d)
        off += t.M.d
    return CTriple(M, tuple(dict.fromkeys(sig)), tuple(dict.fromkeys(sigp)))


def empty_triple(M: AModule | None = None, algebra=None) -> CTriple:
    return CTriple(M if M is not None else zero_module(algebra), ())


def triple_chain_limit(chain: Sequence[CTriple], maps: Sequence[FpMatrix]) -> tuple[CTriple, list[FpMatrix]]:
    """Colimit of a finite chain of injective morphisms.

    Returns the final module carrying every Σ pushed forward, together with
    the composite maps φ_{k,∞} from each stage into it.
    """
    if len(maps) != len(chain) - 1:
        raise ValueError("a chain of k triples needs k - 1 maps")
    for k, f in enumerate(maps):
        if not is_intertwiner(f, chain[k].M, chain[k + 1].M):
            raise NotCMorphism(f"chain map {k} is not a module map")
        if la.rank(f) != f.cols:
            raise NotCMorphism(f"chain map {k} is not injective")
    final = chain[-1].M
    to_end = [FpMatrix.identity(final.p, final.d)]
    for f in reversed(maps):
        to_end.append(la.matmul(to_end[-1], f))
    to_end.reverse()
    sig, sigp = [], []
    for t, phi in zip(chain, to_end):
        sig += [la.mat_vec(phi, a) for a in t.Sigma]
        sigp += [la.mat_vec(phi, a) for a in t.SigmaPrime]
    return CTriple(final, tuple(dict.fromkeys(sig)), tuple(dict.fromkeys(sigp))), to_end


def socle_collapse(G: CycGraph, I: Ideal | None = None, M: AModule | None = None) -> Graph:
    """Identify vertices with equal ideal image; labels are the image bases."""
    I = I if I is not None else G.I
    M = M if M is not None else G.M
    images = G.images if (I == G.I and M == G.M) else [ideal_image_vec(I, M, rep) for _, rep in G.vertices]
    groups: dict[Subspace, list[int]] = {}
    for k, img in enumerate(images):
        groups.setdefault(img, []).append(k)
    keys = sorted(groups, key=lambda U: (U.rank, U.basis))
    pos = {U: k for k, U in enumerate(keys)}
    q = [pos[img] for img in images]
    if I == G.I and M == G.M:
        pairs = G.edges
    else:
        pairs = [(i, j) for i, j in itertools.combinations(range(len(G)), 2)
                 if not la.intersect(images[i], images[j]).is_zero()]
    edges = {(q[i], q[j]) for i, j in pairs if q[i] != q[j]}
    return Graph.build((U.basis for U in keys), edges, {q[m] for m in G.marked})
