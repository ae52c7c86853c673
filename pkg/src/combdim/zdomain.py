"""Γ over ℤ for free modules ℤ^d and principal ideals (m).

For m > 0, (m)a ∩ (m)b ≠ 0 iff ra = r'b for nonzero multiples r, r' of m,
which happens iff a and b are ℚ-proportional.  Adjacency is therefore the
vanishing of all 2x2 minors of [a | b]; ``witness_adjacent`` is the
bounded brute-force oracle for the same relation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .errors import NotDirected
from .graphs import Graph, union as graph_union, intersection as graph_intersection

ZVec = tuple[int, ...]


@dataclass(frozen=True)
class PrincIdeal:
    m: int

    def __post_init__(self):
        object.__setattr__(self, "m", abs(int(self.m)))

    def contains_ideal(self, other: "PrincIdeal") -> bool:
        """(other) ⊆ (self)."""
        if self.m == 0:
            return other.m == 0
        return other.m % self.m == 0


@dataclass(frozen=True)
class ZTriple:
    d: int
    Sigma: tuple[ZVec, ...]
    SigmaPrime: tuple[ZVec, ...] = ()

    def __post_init__(self):
        sig = tuple(tuple(int(x) for x in a) for a in self.Sigma)
        sp = tuple(tuple(int(x) for x in a) for a in self.SigmaPrime)
        for a in sig:
            if len(a) != self.d or not any(a):
                raise ValueError(f"Σ must hold nonzero vectors of length {self.d}: {a}")
        if not set(sp) <= set(sig):
            raise ValueError("Σ' must be a subset of Σ")
        object.__setattr__(self, "Sigma", sig)
        object.__setattr__(self, "SigmaPrime", sp)


def primitive(a: Sequence[int]) -> ZVec:
    """Canonical generator of ℤa: ℤa = ℤb iff b = ±a, so fix the leading sign."""
    a = tuple(int(x) for x in a)
    lead = next(x for x in a if x)
    return a if lead > 0 else tuple(-x for x in a)


def direction(a: Sequence[int]) -> ZVec:
    """The primitive vector on the ℚ-line through a."""
    g = reduce(math.gcd, (abs(x) for x in a))
    return primitive(tuple(x // g for x in a))


def proportional(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(a[i] * b[j] == a[j] * b[i] for i, j in itertools.combinations(range(len(a)), 2))


def z_adjacent(a: Sequence[int], b: Sequence[int], I: PrincIdeal) -> bool:
    if I.m == 0:
        return primitive(a) == primitive(b)
    return proportional(a, b)


def witness_adjacent(a: Sequence[int], b: Sequence[int], I: PrincIdeal, bound: int) -> bool:
    """Search r, r' ∈ mℤ ∖ 0 with |r|, |r'| ≤ bound and r·a = r'·b."""
    if I.m == 0:
        return primitive(a) == primitive(b)
    mults = [k * I.m for k in range(-(bound // I.m), bound // I.m + 1) if k]
    for r in mults:
        ra = [r * x for x in a]
        for s in mults:
            if all(x == s * y for x, y in zip(ra, b)):
                return True
    return False


def gamma_z(t: ZTriple, I: PrincIdeal) -> Graph:
    """Vertices ℤa labelled by their sign-normalized generator, sorted."""
    verts = sorted({primitive(a) for a in t.Sigma})
    pos = {v: k for k, v in enumerate(verts)}
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2)
             if z_adjacent(verts[i], verts[j], I)]
    G = Graph.build(verts, edges)
    seeds = {pos[primitive(a)] for a in t.SigmaPrime}
    comps = [c for c in G.components() if seeds & set(c)]
    return Graph.build(verts, edges, [v for c in comps for v in c])


def product_ideal(ideals: Sequence[PrincIdeal]) -> PrincIdeal:
    return PrincIdeal(math.prod(I.m for I in ideals))


def intersection_ideal(ideals: Sequence[PrincIdeal]) -> PrincIdeal:
    return PrincIdeal(reduce(math.lcm, (I.m for I in ideals)))


def sum_ideal(ideals: Sequence[PrincIdeal]) -> PrincIdeal:
    return PrincIdeal(reduce(math.gcd, (I.m for I in ideals)))


def lemma72_check(t: ZTriple, ideals: Sequence[PrincIdeal]) -> bool:
    if not ideals:
        raise ValueError("need at least one ideal")
    if any(I.m == 0 for I in ideals):
        raise ValueError("all ideals must be nonzero")
    g_prod = gamma_z(t, product_ideal(ideals))
    g_int = gamma_z(t, intersection_ideal(ideals))
    g_meet = graph_intersection([gamma_z(t, I) for I in ideals])
    return g_prod.same_labelled(g_int) and g_int.same_labelled(g_meet)


def is_directed(family: Sequence, contains) -> bool:
    """Every pair has an upper bound within the family."""
    return all(any(contains(c, a) and contains(c, b) for c in family)
               for a, b in itertools.combinations(family, 2))


def lemma71_check(t, family: Sequence) -> bool:
    """Γ over the sum of a directed family equals the union of the member graphs.

    Works for ``ZTriple`` with ``PrincIdeal`` members and for ``CTriple``
    with socle-subspace ``Ideal`` members.
    """
    if not family:
        raise ValueError("empty family")
    if isinstance(t, ZTriple):
        if not is_directed(family, lambda c, a: c.contains_ideal(a)):
            raise NotDirected("ideal family is not directed under inclusion")
        lhs = gamma_z(t, sum_ideal(family))
        rhs = graph_union([gamma_z(t, I) for I in family])
        return lhs.same_labelled(rhs)

    from . import linalg as la
    from .cyclic_graph import gamma
    from .trivext import Ideal

    def space(I):
        if I.kind == "zero":
            return la.Subspace.zero(I.algebra.p, I.algebra.n)
        if I.kind == "whole":
            raise ValueError("only socle-subspace ideals are supported here")
        return I.W

    if not is_directed(family, lambda c, a: la.is_subspace(space(a), space(c))):
        raise NotDirected("ideal family is not directed under inclusion")
    A = family[0].algebra
    total = Ideal.soc(A, la.sum_all((space(I) for I in family), A.p, A.n))
    lhs = gamma(t, total).to_graph()
    rhs = graph_union([gamma(t, I).to_graph() for I in family])
    return lhs.same_labelled(rhs)
