"""The algebra A = F_p ⋉ F_p^n, its ideals, and finite-dimensional A-modules.

A module of k-dimension ``d`` is stored as ``n`` action matrices ``T_i``
(d x d), where ``T_i`` is multiplication by the i-th basis vector of
V = F_p^n.  Since V squares to zero in A, the matrices pairwise multiply
to zero; the constructor enforces this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg as la
from .errors import FieldMismatch
from .linalg import FpMatrix, Subspace, Vector


@dataclass(frozen=True)
class Algebra:
    p: int
    n: int

    def __post_init__(self):
        la.check_prime(self.p)
        if self.n < 0:
            raise ValueError("n must be non-negative")

    @property
    def dim(self) -> int:
        return self.n + 1

    def elem(self, a: int, v: Sequence[int] = ()) -> "AElem":
        v = tuple(v) if v else (0,) * self.n
        return AElem(self, a % self.p, tuple(x % self.p for x in v))

    def one(self) -> "AElem":
        return self.elem(1)


@dataclass(frozen=True)
class AElem:
    algebra: Algebra
    a: int
    v: Vector

    def __post_init__(self):
        if len(self.v) != self.algebra.n:
            raise ValueError(f"socle part has length {len(self.v)}, expected {self.algebra.n}")

    @property
    def is_unit(self) -> bool:
        return self.a % self.algebra.p != 0

    def __mul__(self, other: "AElem") -> "AElem":
        return elem_mul(self, other)


def elem_mul(x: AElem, y: AElem) -> AElem:
    """(a, v)(b, w) = (ab, bv + aw)."""
    if x.algebra != y.algebra:
        raise FieldMismatch("elements of different algebras")
    p = x.algebra.p
    return AElem(x.algebra, x.a * y.a % p,
                 tuple((y.a * v + x.a * w) % p for v, w in zip(x.v, y.v)))


# -- ideals ----------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal of A: ``zero``, ``whole``, or ``soc`` = 0 ⊕ W for a subspace W of V."""

    algebra: Algebra
    kind: str
    W: Subspace | None = None

    def __post_init__(self):
        if self.kind not in ("zero", "whole", "soc"):
            raise ValueError(f"unknown ideal kind {self.kind!r}")
        if self.kind == "soc":
            if self.W is None or self.W.p != self.algebra.p or self.W.ambient != self.algebra.n:
                raise ValueError("soc ideal needs a subspace of F_p^n")

    @classmethod
    def zero(cls, A: Algebra) -> "Ideal":
        return cls(A, "zero")

    @classmethod
    def whole(cls, A: Algebra) -> "Ideal":
        return cls(A, "whole")

    @classmethod
    def soc(cls, A: Algebra, W: Subspace | None = None) -> "Ideal":
        """0 ⊕ W; with ``W=None`` this is the radical J(A) = Soc(A)."""
        if W is None:
            W = Subspace.full(A.p, A.n)
        if W.is_zero():
            return cls.zero(A)
        return cls(A, "soc", W)

    radical = soc

    def __str__(self) -> str:
        if self.kind != "soc":
            return self.kind
        if self.W.is_full():
            return "soc"
        return "soc:" + ";".join(",".join(map(str, b)) for b in self.W.basis)

    def contains(self, x: AElem) -> bool:
        if self.kind == "whole":
            return True
        if x.a:
            return False
        if self.kind == "zero":
            return not any(x.v)
        return la.contains(self.W, x.v)

    def directions(self) -> list[Vector]:
        """Projective representatives of the nonzero socle elements of the ideal."""
        if self.kind == "zero":
            return []
        W = self.W if self.kind == "soc" else Subspace.full(self.algebra.p, self.algebra.n)
        return la.projective_points(W)


# -- modules ---------------------------------------------------------------


@dataclass(frozen=True)
class AModule:
    algebra: Algebra
    d: int
    T: tuple[FpMatrix, ...]
    generator_marks: tuple[int, ...] = ()

    def __post_init__(self):
        A = self.algebra
        if self.d < 0:
            raise ValueError("module dimension must be non-negative")
        if len(self.T) != A.n:
            raise ValueError(f"expected {A.n} action matrices, got {len(self.T)}")
        for t in self.T:
            if t.p != A.p:
                raise FieldMismatch(f"action matrix over F_{t.p} for algebra over F_{A.p}")
            if (t.rows, t.cols) != (self.d, self.d):
                raise ValueError(f"action matrix is {t.rows}x{t.cols}, module dimension {self.d}")
        for i, ti in enumerate(self.T):
            for j, tj in enumerate(self.T):
                if not la.matmul(ti, tj).is_zero():
                    raise ValueError(f"T_{i} T_{j} != 0: V must act with square zero")
        for g in self.generator_marks:
            if not 0 <= g < self.d:
                raise ValueError(f"generator mark {g} out of range")

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def n(self) -> int:
        return self.algebra.n

    def full(self) -> Subspace:
        return Subspace.full(self.p, self.d)

    def zero(self) -> Subspace:
        return Subspace.zero(self.p, self.d)

    def act_matrix(self, v: Sequence[int]) -> FpMatrix:
        """Matrix of multiplication by (0, v)."""
        p, d = self.p, self.d
        rows = [[0] * d for _ in range(d)]
        for c, t in zip(v, self.T):
            c %= p
            if c:
                for r in range(d):
                    row = rows[r]
                    for k, x in enumerate(t.entries[r]):
                        if x:
                            row[k] += c * x
        return FpMatrix(p, d, d, tuple(tuple(x % p for x in r) for r in rows))

    def elem_action(self, x: AElem) -> FpMatrix:
        """Matrix of multiplication by an arbitrary algebra element."""
        m = self.act_matrix(x.v)
        return m + FpMatrix.identity(self.p, self.d).scale(x.a)

    def unit_vector(self, i: int) -> Vector:
        return tuple(int(j == i) for j in range(self.d))

    @property
    def generators(self) -> list[Vector]:
        return [self.unit_vector(g) for g in self.generator_marks]


@dataclass(frozen=True)
class Submodule:
    parent: AModule
    U: Subspace

    def __post_init__(self):
        if self.U.p != self.parent.p or self.U.ambient != self.parent.d:
            raise FieldMismatch("subspace does not live in the parent module")
        for t in self.parent.T:
            if not la.is_subspace(la.image(t, self.U), self.U):
                raise ValueError("subspace is not closed under the action")

    @property
    def dim(self) -> int:
        return self.U.rank


def free_module(A: Algebra, r: int) -> AModule:
    """A^r with basis (1, e_1, ..., e_n) per free generator."""
    if r < 0:
        raise ValueError("rank must be non-negative")
    n, p = A.n, A.p
    d = r * (n + 1)
    T = []
    for i in range(n):
        rows = [[0] * d for _ in range(d)]
        for b in range(r):
            base = b * (n + 1)
            rows[base + 1 + i][base] = 1
        T.append(FpMatrix(p, d, d, tuple(map(tuple, rows))))
    return AModule(A, d, tuple(T), tuple(b * (n + 1) for b in range(r)))


def presentation(A: Algebra, g: int, N: int, L: Sequence[FpMatrix | Sequence[Sequence[int]]]) -> AModule:
    """Module on g generators over a socle k^N; generator alpha has v·alpha = L_alpha v.

    Coordinates are ordered generators first, then the N socle coordinates.
    """
    n, p = A.n, A.p
    if len(L) != g:
        raise ValueError(f"expected {g} socle maps, got {len(L)}")
    mats = []
    for a, m in enumerate(L):
        if not isinstance(m, FpMatrix):
            m = FpMatrix.from_rows(p, m, cols=n) if len(m) else FpMatrix.zeros(p, 0, n)
        if (m.rows, m.cols) != (N, n) or m.p != p:
            raise ValueError(f"socle map {a} must be a {N}x{n} matrix over F_{p}")
        mats.append(m)
    d = g + N
    T = []
    for i in range(n):
        rows = [[0] * d for _ in range(d)]
        for a, m in enumerate(mats):
            for s in range(N):
                rows[g + s][a] = m.entries[s][i]
        T.append(FpMatrix(p, d, d, tuple(map(tuple, rows))))
    return AModule(A, d, tuple(T), tuple(range(g)))


def act(v: Sequence[int], M: AModule, x: Sequence[int]) -> Vector:
    """(0, v)·x."""
    if len(v) != M.n or len(x) != M.d:
        raise ValueError("length mismatch")
    p = M.p
    out = [0] * M.d
    for c, t in zip(v, M.T):
        if c % p:
            tx = la.mat_vec(t, x)
            for j, y in enumerate(tx):
                out[j] += c * y
    return tuple(y % p for y in out)


def _check_ideal(I: Ideal, M: AModule) -> None:
    if I.algebra != M.algebra:
        raise FieldMismatch("ideal and module over different algebras")


def ideal_image(I: Ideal, M: AModule, U: Subspace) -> Subspace:
    """The subspace I·U (for a submodule U this is IU; for span{a} it is Ia)."""
    _check_ideal(I, M)
    if I.kind == "zero" or U.is_zero():
        return M.zero()
    if I.kind == "whole":
        rows = list(U.basis)
        for t in M.T:
            rows.extend(la.mat_vec(t, u) for u in U.basis)
        return la.span(rows, M.d, M.p)
    mats = [M.act_matrix(w) for w in I.W.basis]
    return la.span((la.mat_vec(m, u) for m in mats for u in U.basis), M.d, M.p)


def ideal_image_vec(I: Ideal, M: AModule, a: Sequence[int]) -> Subspace:
    """Ia for a single element a."""
    return ideal_image(I, M, la.span([a], M.d, M.p))


def radical_image(M: AModule) -> Subspace:
    """JM, the span of all columns of the action matrices."""
    return la.span((t.column(j) for t in M.T for j in range(M.d)), M.d, M.p)


def annihilator(M: AModule, I: Ideal) -> Subspace:
    """ann_I M = {x : I x = 0}."""
    _check_ideal(I, M)
    if I.kind == "zero":
        return M.full()
    if I.kind == "whole":
        return M.zero()
    rows = []
    for w in I.W.basis:
        rows.extend(M.act_matrix(w).entries)
    return la.kernel(FpMatrix(M.p, len(rows), M.d, tuple(rows)))


def socle(M: AModule) -> Subspace:
    return annihilator(M, Ideal.soc(M.algebra))


def ann_star_contains(M: AModule, I: Ideal, x: Sequence[int]) -> bool:
    """Whether some nonzero r in I kills x."""
    _check_ideal(I, M)
    if I.kind == "zero":
        return False
    if not any(v % M.p for v in x):
        return True
    return any(not any(act(w, M, x)) for w in I.directions())


def in_decomposition_domain(M: AModule, I: Ideal) -> bool:
    """Whether IM = ann_I M = ann*_I M (and hence I^2 M = 0)."""
    _check_ideal(I, M)
    if I.kind == "zero":
        return M.d == 0
    if I.kind == "whole":
        # IM = M and ann_A M = 0
        return M.d == 0
    IM = ideal_image(I, M, M.full())
    if IM != annihilator(M, I):
        return False
    # I^2 M = 0 holds by the square-zero action; ann* is a union of kernels
    for w in I.directions():
        if not la.is_subspace(la.kernel(M.act_matrix(w)), IM):
            return False
    return True


def goldie_dim(M: AModule) -> int:
    return socle(M).rank


def top_dim(M: AModule) -> int:
    return M.d - radical_image(M).rank


def cyclic(M: AModule, x: Sequence[int]) -> Submodule:
    x = tuple(int(v) % M.p for v in x)
    if len(x) != M.d:
        raise ValueError(f"vector of length {len(x)} in a module of dimension {M.d}")
    if not any(x):
        raise ValueError("the zero vector does not generate a vertex")
    return Submodule(M, cyclic_space(M, x))


def cyclic_space(M: AModule, x: Sequence[int]) -> Subspace:
    """span(x, T_1 x, ..., T_n x) without the closure re-check."""
    rows = [tuple(x)] + [la.mat_vec(t, x) for t in M.T]
    return la.span(rows, M.d, M.p)


def submodule_generated(M: AModule, vectors: Sequence[Sequence[int]]) -> Subspace:
    rows = []
    for x in vectors:
        rows.append(tuple(x))
        rows.extend(la.mat_vec(t, x) for t in M.T)
    return la.span(rows, M.d, M.p)


def direct_sum(M1: AModule, M2: AModule) -> AModule:
    if M1.algebra != M2.algebra:
        raise FieldMismatch("direct sum of modules over different algebras")
    p = M1.p
    T = tuple(la.block_diag(p, [a, b]) for a, b in zip(M1.T, M2.T))
    marks = M1.generator_marks + tuple(g + M1.d for g in M2.generator_marks)
    return AModule(M1.algebra, M1.d + M2.d, T, marks)


def zero_module(A: Algebra) -> AModule:
    return AModule(A, 0, tuple(FpMatrix.zeros(A.p, 0, 0) for _ in range(A.n)))


def permute(M: AModule, order: Sequence[int]) -> AModule:
    """Re-coordinatize so that new coordinate k is old coordinate ``order[k]``."""
    if sorted(order) != list(range(M.d)):
        raise ValueError("order must be a permutation of the coordinates")
    inv = {old: new for new, old in enumerate(order)}
    T = tuple(FpMatrix(M.p, M.d, M.d, tuple(tuple(t.entries[r][c] for c in order) for r in order)) for t in M.T)
    return AModule(M.algebra, M.d, T, tuple(inv[g] for g in M.generator_marks))


def quotient_map(M: AModule, K: Subspace) -> tuple[FpMatrix, tuple[int, ...]]:
    """Projection F_p^d -> F_p^d / K in the coordinates of K's non-pivot columns."""
    p, d = M.p, M.d
    keep = la.complement_coords(K)
    rows = []
    for j in range(d):
        # reduce e_j modulo K, then read off the kept coordinates
        e = [int(i == j) for i in range(d)]
        for row, pc in zip(K.basis, K.pivots):
            f = e[pc]
            if f:
                e = [(x - f * y) % p for x, y in zip(e, row)]
        rows.append([e[k] for k in keep])
    proj = FpMatrix(p, len(keep), d, tuple(zip(*rows)) if keep else ())
    return proj, keep


def quotient(M: AModule, K: Submodule | Subspace) -> AModule:
    """M / K with representatives on the non-pivot coordinates of K's RREF basis."""
    if isinstance(K, Submodule):
        if K.parent != M:
            raise ValueError("submodule of a different module")
        K = K.U
    else:
        Submodule(M, K)
    proj, keep = quotient_map(M, K)
    q = len(keep)
    T = []
    for t in M.T:
        cols = [la.mat_vec(proj, t.column(k)) for k in keep]
        T.append(FpMatrix(M.p, q, q, tuple(zip(*cols)) if q else ()))
    pos = {k: i for i, k in enumerate(keep)}
    marks = tuple(pos[g] for g in M.generator_marks if g in pos)
    return AModule(M.algebra, q, tuple(T), marks)


def restrict(M: AModule, U: Subspace) -> AModule:
    """The submodule U as a module in the coordinates of U's RREF basis."""
    Submodule(M, U)
    r = U.rank
    T = []
    for t in M.T:
        cols = [la.coordinates(U, la.mat_vec(t, b)) for b in U.basis]
        T.append(FpMatrix(M.p, r, r, tuple(zip(*cols)) if r else ()))
    return AModule(M.algebra, r, tuple(T))


def inclusion_matrix(U: Subspace) -> FpMatrix:
    """d x r matrix whose columns are U's basis vectors."""
    return FpMatrix(U.p, U.ambient, U.rank, tuple(zip(*U.basis)) if U.basis else tuple(() for _ in range(U.ambient)))


def is_pure(N: Submodule, I: Ideal) -> bool:
    """IN = IM ∩ N."""
    M = N.parent
    IN = ideal_image(I, M, N.U)
    IM = ideal_image(I, M, M.full())
    return IN == la.intersect(IM, N.U)


def star_meets(M: AModule, I: Ideal, N: Subspace) -> bool:
    """Whether (I∗M) ∩ N ≠ {0}, where I∗M is the union of the sets rM, r in I."""
    _check_ideal(I, M)
    if N.is_zero() or I.kind == "zero":
        return False
    if I.kind == "whole":
        return True
    for w in I.directions():
        if not la.intersect(la.column_space(M.act_matrix(w)), N).is_zero():
            return True
    return False


def is_intertwiner(f: FpMatrix, src: AModule, dst: AModule) -> bool:
    if src.algebra != dst.algebra or f.p != src.p:
        return False
    if (f.rows, f.cols) != (dst.d, src.d):
        return False
    return all(la.matmul(f, ts) == la.matmul(td, f) for ts, td in zip(src.T, dst.T))


def all_socle_ideals(A: Algebra) -> list[Ideal]:
    """Every ideal 0 ⊕ W, one per subspace W of V (small n only)."""
    seen = {}
    vecs = list(itertools.product(range(A.p), repeat=A.n))
    for k in range(A.n + 1):
        for combo in itertools.combinations(vecs, k):
            W = la.span(combo, A.n, A.p)
            seen[W] = True
    return [Ideal.soc(A, W) for W in seen]
