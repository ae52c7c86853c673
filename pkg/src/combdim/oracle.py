"""Krull-Schmidt decomposition oracle via idempotents of End(M).

A nontrivial idempotent e of End(M) stays nontrivial in End(M/JM): if
e(M) ⊆ JM then e = e² maps M into J·JM = 0.  So the search runs over the
image Ē of End(M) in End(M/JM), which has dimension at most (dim top)²,
and a hit is lifted back through the idempotent power of any preimage.
An exhaustive scan of Ē therefore certifies indecomposability.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from . import linalg as la
from .linalg import FpMatrix, Subspace
from .trivext import AModule, quotient_map, radical_image

NONE_CERTAIN = "none_certain"
NONE_HEURISTIC = "none_heuristic"
FOUND = "found"


@dataclass(frozen=True)
class EndAlgebra:
    module: AModule
    basis: tuple[FpMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coeffs: Sequence[int]) -> FpMatrix:
        M = self.module
        acc = FpMatrix.zeros(M.p, M.d, M.d)
        for c, b in zip(coeffs, self.basis):
            if c % M.p:
                acc = acc + b.scale(c)
        return acc


def end_algebra(M: AModule) -> EndAlgebra:
    """Basis of {X : X T_i = T_i X}, unknowns X[r][c] flattened row-major."""
    p, d = M.p, M.d
    if d == 0:
        return EndAlgebra(M, ())
    rows = []
    for t in M.T:
        te = t.entries
        # (X T - T X)[r][c] = Σ_k X[r][k] T[k][c] - T[r][k] X[k][c]
        for r in range(d):
            for c in range(d):
                eq = [0] * (d * d)
                for k in range(d):
                    if te[k][c]:
                        eq[r * d + k] += te[k][c]
                    if te[r][k]:
                        eq[k * d + c] -= te[r][k]
                if any(x % p for x in eq):
                    rows.append([x % p for x in eq])
    K = la.kernel(FpMatrix(p, len(rows), d * d, tuple(map(tuple, rows)))) if rows else la.Subspace.full(p, d * d)
    basis = tuple(FpMatrix(p, d, d, tuple(tuple(v[r * d:(r + 1) * d]) for r in range(d))) for v in K.basis)
    return EndAlgebra(M, basis)


def mat_power(m: FpMatrix, k: int) -> FpMatrix:
    result = FpMatrix.identity(m.p, m.rows)
    base = m
    while k:
        if k & 1:
            result = la.matmul(result, base)
        base = la.matmul(base, base)
        k >>= 1
    return result


def idempotent_power(phi: FpMatrix) -> FpMatrix:
    """The unique idempotent among the powers of phi.

    phi^d has reached the stable image and kernel (Fitting), and the
    idempotent power is the projection onto that image along that kernel.
    """
    p, d = phi.p, phi.rows
    if d == 0:
        return phi
    psi = mat_power(phi, d)
    img = la.column_space(psi)
    ker = la.kernel(psi)
    cols = list(img.basis) + list(ker.basis)
    P = FpMatrix(p, d, d, tuple(zip(*cols)))
    D = FpMatrix(p, d, d, tuple(tuple(int(r == c and r < img.rank) for c in range(d)) for r in range(d)))
    return la.matmul(la.matmul(P, D), la.inverse(P))


def stable_power_by_iteration(phi: FpMatrix, limit: int = 100000) -> FpMatrix:
    """Reference: iterate powers until φ^a = φ^b, then return φ^k with k ≥ a, c | k."""
    seen = {}
    cur = phi
    for k in range(1, limit + 1):
        if cur in seen:
            a = seen[cur]
            c = k - a
            e = -(-a // c) * c
            return mat_power(phi, e)
        seen[cur] = k
        cur = la.matmul(cur, phi)
    raise RuntimeError("power sequence did not cycle within the limit")


def is_idempotent(e: FpMatrix) -> bool:
    return la.matmul(e, e) == e


def is_trivial(e: FpMatrix) -> bool:
    return e.is_zero() or e == FpMatrix.identity(e.p, e.rows)


def commutes(e: FpMatrix, M: AModule) -> bool:
    return all(la.matmul(e, t) == la.matmul(t, e) for t in M.T)


@dataclass(frozen=True)
class IdempotentResult:
    status: str
    idempotent: FpMatrix | None = None
    end_dim: int = 0
    scanned: int = 0

    @property
    def certain(self) -> bool:
        return self.status != NONE_HEURISTIC


def _top_images(E: EndAlgebra) -> tuple[list[FpMatrix], list[FpMatrix], int]:
    """Preimages φ_k and images φ̄_k forming a basis of Ē ⊆ End(M/JM)."""
    M = E.module
    p = M.p
    proj, keep = quotient_map(M, radical_image(M))
    t = len(keep)
    sec = FpMatrix(p, M.d, t, tuple(tuple(int(r == k) for k in keep) for r in range(M.d)))
    pre, imgs, rows = [], [], []
    for phi in E.basis:
        bar = la.matmul(la.matmul(proj, phi), sec)
        flat = [x for row in bar.entries for x in row]
        trial, _ = la.rref_rows(rows + [flat], p, t * t)
        if len(trial) > len(rows):
            rows.append(flat)
            pre.append(phi)
            imgs.append(bar)
    return pre, imgs, t


def find_idempotent(M: AModule, budget: int = 2 ** 16, samples: int = 2000,
                    rng: random.Random | None = None) -> IdempotentResult:
    p, d = M.p, M.d
    E = end_algebra(M)
    if E.dim <= 1:
        return IdempotentResult(NONE_CERTAIN, None, E.dim, 0)
    pre, imgs, t = _top_images(E)
    r = len(imgs)
    ident_t = FpMatrix.identity(p, t)
    if p ** r <= budget:
        scanned = 0
        for coeffs in itertools.product(range(p), repeat=r):
            scanned += 1
            bar = FpMatrix.zeros(p, t, t)
            for c, b in zip(coeffs, imgs):
                if c:
                    bar = bar + b.scale(c)
            if bar.is_zero() or bar == ident_t or not is_idempotent(bar):
                continue
            phi = FpMatrix.zeros(p, d, d)
            for c, b in zip(coeffs, pre):
                if c:
                    phi = phi + b.scale(c)
            return IdempotentResult(FOUND, idempotent_power(phi), E.dim, scanned)
        return IdempotentResult(NONE_CERTAIN, None, E.dim, scanned)
    rng = rng or random.Random(0)
    for k in range(samples):
        phi = E.element([rng.randrange(p) for _ in range(E.dim)])
        e = idempotent_power(phi)
        if not is_trivial(e):
            return IdempotentResult(FOUND, e, E.dim, k + 1)
    return IdempotentResult(NONE_HEURISTIC, None, E.dim, samples)


# -- decomposition ---------------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    module: AModule
    bases: tuple[FpMatrix, ...]          # d x r_k, columns span each summand
    modules: tuple[AModule, ...]         # summand action in those coordinates
    leaf_certain: tuple[bool, ...]
    idempotents: tuple[FpMatrix, ...]    # every idempotent used to split

    @property
    def summands(self) -> list[tuple[Subspace, AModule]]:
        return [(la.column_space(B), S) for B, S in zip(self.bases, self.modules)]

    @property
    def certain(self) -> bool:
        return all(self.leaf_certain)

    @property
    def length(self) -> int:
        return len(self.modules)

    @property
    def change_of_basis(self) -> FpMatrix:
        M = self.module
        cols = [B.column(j) for B in self.bases for j in range(B.cols)]
        return FpMatrix(M.p, M.d, M.d, tuple(zip(*cols)) if cols else ())


def _restrict_cols(M: AModule, B: FpMatrix) -> AModule:
    """Action on the column space of B, in the coordinates given by B's columns."""
    r = B.cols
    Binv_rows = _left_inverse(B)
    T = []
    for t in M.T:
        TB = la.matmul(t, B)
        T.append(la.matmul(Binv_rows, TB))
    return AModule(M.algebra, r, tuple(T))


def _left_inverse(B: FpMatrix) -> FpMatrix:
    """An r x d matrix L with L B = I_r, for B of full column rank."""
    p, d, r = B.p, B.rows, B.cols
    if r == 0:
        return FpMatrix.zeros(p, 0, d)
    # extend the columns of B to a basis and invert
    cols = [B.column(j) for j in range(r)]
    extra = []
    cur = la.span(cols, d, p)
    for k in range(d):
        e = tuple(int(i == k) for i in range(d))
        if not la.contains(cur, e):
            extra.append(e)
            cur = la.span(list(cur.basis) + [e], d, p)
    full = FpMatrix(p, d, d, tuple(zip(*(cols + extra))))
    inv = la.inverse(full)
    return FpMatrix(p, r, d, inv.entries[:r])


def ks_decompose(M: AModule, budget: int = 2 ** 16, samples: int = 2000,
                 rng: random.Random | None = None) -> Decomposition:
    rng = rng or random.Random(0)
    bases, mods, certs, used = [], [], [], []

    def split(B: FpMatrix, N: AModule):
        res = find_idempotent(N, budget, samples, rng)
        if res.status != FOUND:
            bases.append(B)
            mods.append(N)
            certs.append(res.certain)
            return
        e = res.idempotent
        used.append(e)
        ident = FpMatrix.identity(N.p, N.d)
        for part in (la.column_space(e), la.column_space(ident - e)):
            C = FpMatrix(N.p, N.d, part.rank, tuple(zip(*part.basis)))
            split(la.matmul(B, C), _restrict_cols(N, C))

    if M.d:
        split(FpMatrix.identity(M.p, M.d), M)
    return Decomposition(M, tuple(bases), tuple(mods), tuple(certs), tuple(used))


def ks_length(M: AModule, budget: int = 2 ** 16, samples: int = 2000,
              rng: random.Random | None = None) -> tuple[int, bool]:
    dec = ks_decompose(M, budget, samples, rng)
    return dec.length, dec.certain


def reassembles(dec: Decomposition) -> bool:
    """P^{-1} T_i P is block diagonal with the summand actions as blocks."""
    M = dec.module
    if M.d == 0:
        return dec.length == 0
    P = dec.change_of_basis
    if la.rank(P) != M.d:
        return False
    Pinv = la.inverse(P)
    for i, t in enumerate(M.T):
        conj = la.matmul(la.matmul(Pinv, t), P)
        expect = la.block_diag(M.p, [S.T[i] for S in dec.modules])
        if conj != expect:
            return False
    return True
