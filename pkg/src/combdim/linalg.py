"""Exact linear algebra over prime fields F_p.

Vectors are plain tuples of residues.  Matrices are :class:`FpMatrix`
values and subspaces are :class:`Subspace` values whose basis is kept in
reduced row echelon form, so two subspaces are equal exactly when their
dataclass fields are equal.  Everything here is immutable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceeded, FieldMismatch

Vector = tuple[int, ...]

DEFAULT_ENUM_BUDGET = 2**20

# above this many matrix entries row reduction switches to numpy
_NUMPY_THRESHOLD = 600


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> None:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise ValueError(f"modulus {p!r} is not prime")


@dataclass(frozen=True)
class FpMatrix:
    """A dense matrix over F_p with entries in ``[0, p)``."""

    p: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError(f"row of length {len(r)} in a matrix with {self.cols} columns")
            for x in r:
                if not 0 <= x < self.p:
                    raise ValueError(f"entry {x} not reduced mod {self.p}")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FpMatrix":
        """Build a matrix, reducing every entry mod ``p``."""
        rows = [tuple(int(x) % p for x in r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(rows[0])
        return cls(p, len(rows), cols, tuple(rows))

    @classmethod
    def from_numpy(cls, p: int, arr: np.ndarray) -> "FpMatrix":
        arr = np.asarray(arr, dtype=np.int64) % p
        r, c = arr.shape
        return cls(p, r, c, tuple(tuple(int(x) for x in row) for row in arr))

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, p: int, size: int) -> "FpMatrix":
        return cls(p, size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix(self.p, self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def __matmul__(self, other):
        if isinstance(other, FpMatrix):
            return matmul(self, other)
        return mat_vec(self, other)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        _same_shape(self, other)
        p = self.p
        return FpMatrix(p, self.rows, self.cols, tuple(
            tuple((x + y) % p for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        _same_shape(self, other)
        p = self.p
        return FpMatrix(p, self.rows, self.cols, tuple(
            tuple((x - y) % p for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def scale(self, c: int) -> "FpMatrix":
        p = self.p
        return FpMatrix(p, self.rows, self.cols, tuple(tuple(c * x % p for x in r) for r in self.entries))


def _same_shape(a: FpMatrix, b: FpMatrix) -> None:
    if a.p != b.p:
        raise FieldMismatch(f"F_{a.p} vs F_{b.p}")
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError(f"shape {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def matmul(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    if a.p != b.p:
        raise FieldMismatch(f"F_{a.p} vs F_{b.p}")
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    p = a.p
    if a.rows * a.cols * b.cols > 4000:
        return FpMatrix.from_numpy(p, (a.to_numpy() @ b.to_numpy()) % p)
    bt = list(zip(*b.entries)) if b.rows else [()] * b.cols
    return FpMatrix(p, a.rows, b.cols, tuple(
        tuple(sum(x * y for x, y in zip(r, c)) % p for c in bt) for r in a.entries))


def mat_vec(m: FpMatrix, v: Sequence[int]) -> Vector:
    if len(v) != m.cols:
        raise ValueError(f"vector of length {len(v)} against {m.cols} columns")
    p = m.p
    return tuple(sum(x * y for x, y in zip(r, v)) % p for r in m.entries)


def block_diag(p: int, blocks: Sequence[FpMatrix]) -> FpMatrix:
    size = sum(b.rows for b in blocks)
    width = sum(b.cols for b in blocks)
    out = np.zeros((size, width), dtype=np.int64)
    r = c = 0
    for b in blocks:
        if b.rows and b.cols:
            out[r:r + b.rows, c:c + b.cols] = b.to_numpy()
        r += b.rows
        c += b.cols
    return FpMatrix.from_numpy(p, out)


# -- row reduction ---------------------------------------------------------


def _rref_py(rows: list[list[int]], p: int, ncols: int) -> tuple[list[Vector], list[int]]:
    rows = [r[:] for r in rows]
    pivots: list[int] = []
    top = 0
    m = len(rows)
    for col in range(ncols):
        piv = None
        for r in range(top, m):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        prow = rows[top]
        inv = pow(prow[col], -1, p)
        if inv != 1:
            prow = [x * inv % p for x in prow]
            rows[top] = prow
        for r in range(m):
            if r != top:
                f = rows[r][col]
                if f:
                    rows[r] = [(x - f * y) % p for x, y in zip(rows[r], prow)]
        pivots.append(col)
        top += 1
        if top == m:
            break
    return [tuple(r) for r in rows[:top]], pivots


def _rref_np(arr: np.ndarray, p: int) -> tuple[list[Vector], list[int]]:
    a = np.array(arr, dtype=np.int64) % p
    m, ncols = a.shape
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        if top == m:
            break
        nz = np.flatnonzero(a[top:, col])
        if nz.size == 0:
            continue
        piv = top + int(nz[0])
        if piv != top:
            a[[top, piv]] = a[[piv, top]]
        inv = pow(int(a[top, col]), -1, p)
        a[top] = (a[top] * inv) % p
        f = a[:, col].copy()
        f[top] = 0
        a = (a - np.outer(f, a[top])) % p
        pivots.append(col)
        top += 1
    return [tuple(int(x) for x in row) for row in a[:top]], pivots


def rref_rows(rows: Iterable[Sequence[int]], p: int, ncols: int) -> tuple[list[Vector], list[int]]:
    """Row-reduce ``rows`` and return the nonzero RREF rows and pivot columns."""
    rows = [list(int(x) % p for x in r) for r in rows]
    if not rows or ncols == 0:
        return [], []
    if len(rows) * ncols > _NUMPY_THRESHOLD:
        return _rref_np(np.array(rows, dtype=np.int64), p)
    return _rref_py(rows, p, ncols)


def rref(m: FpMatrix) -> tuple[FpMatrix, int]:
    """Canonical reduced row echelon form of ``m`` (same shape) and its rank."""
    nz, _ = rref_rows(m.entries, m.p, m.cols)
    out = list(nz) + [(0,) * m.cols] * (m.rows - len(nz))
    return FpMatrix(m.p, m.rows, m.cols, tuple(out)), len(nz)


def rank(m: FpMatrix) -> int:
    return len(rref_rows(m.entries, m.p, m.cols)[0])


def inverse(m: FpMatrix) -> FpMatrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices are invertible")
    d, p = m.rows, m.p
    aug = [list(r) + [int(i == j) for j in range(d)] for i, r in enumerate(m.entries)]
    red, piv = rref_rows(aug, p, 2 * d)
    if piv[:d] != list(range(d)) or len(red) < d:
        raise ValueError("matrix is singular")
    return FpMatrix(p, d, d, tuple(r[d:] for r in red[:d]))


# -- subspaces -------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_p^ambient held by its canonical RREF basis."""

    p: int
    ambient: int
    basis: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    dim = rank

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    @property
    def basis_matrix(self) -> FpMatrix:
        return FpMatrix(self.p, len(self.basis), self.ambient, self.basis)

    @classmethod
    def zero(cls, p: int, ambient: int) -> "Subspace":
        check_prime(p)
        return cls(p, ambient, ())

    @classmethod
    def full(cls, p: int, ambient: int) -> "Subspace":
        check_prime(p)
        return cls(p, ambient, tuple(tuple(int(i == j) for j in range(ambient)) for i in range(ambient)))

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        return is_subspace(self, other)


def _compatible(U: Subspace, W: Subspace) -> None:
    if U.p != W.p:
        raise FieldMismatch(f"subspaces over F_{U.p} and F_{W.p}")
    if U.ambient != W.ambient:
        raise FieldMismatch(f"ambient dimensions {U.ambient} and {W.ambient} differ")


def span(vectors: Iterable[Sequence[int]], ambient: int, p: int) -> Subspace:
    check_prime(p)
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
    basis, _ = rref_rows(vectors, p, ambient)
    return Subspace(p, ambient, tuple(basis))


def row_space(m: FpMatrix) -> Subspace:
    return span(m.entries, m.cols, m.p)


def column_space(m: FpMatrix) -> Subspace:
    return span(m.T.entries, m.rows, m.p)


def kernel(m: FpMatrix) -> Subspace:
    """The null space ``{x : m x = 0}`` as a subspace of F_p^cols."""
    p, n = m.p, m.cols
    red, piv = rref_rows(m.entries, p, n)
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, piv):
            v[pc] = (-row[f]) % p
        basis.append(v)
    # vectors built from free columns are already independent; normalise to RREF
    return span(basis, n, p)


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _compatible(U, W)
    if not U.basis:
        return W
    if not W.basis:
        return U
    return span(U.basis + W.basis, U.ambient, U.p)


def sum_all(spaces: Iterable[Subspace], p: int, ambient: int) -> Subspace:
    rows: list[Vector] = []
    for S in spaces:
        if S.p != p or S.ambient != ambient:
            raise FieldMismatch("subspace does not live in the expected ambient space")
        rows.extend(S.basis)
    return span(rows, ambient, p)


def annihilator_equations(W: Subspace) -> FpMatrix:
    """A matrix ``H`` with ``W = kernel(H)``."""
    if not W.basis:
        return FpMatrix.zeros(W.p, 0, W.ambient)
    K = kernel(W.basis_matrix)
    return FpMatrix(W.p, K.rank, W.ambient, K.basis)


def intersect(U: Subspace, W: Subspace) -> Subspace:
    _compatible(U, W)
    p, n = U.p, U.ambient
    if not U.basis or not W.basis:
        return Subspace(p, n, ())
    if W.is_full():
        return U
    if U.is_full():
        return W
    H = annihilator_equations(W)
    # x = c B_U lies in W iff H B_U^T c = 0
    C = matmul(H, U.basis_matrix.T)
    coeffs = kernel(C)
    vecs = [tuple(sum(c * b[j] for c, b in zip(cv, U.basis)) % p for j in range(n)) for cv in coeffs.basis]
    return span(vecs, n, p)


def contains(U: Subspace, v: Sequence[int]) -> bool:
    if len(v) != U.ambient:
        raise ValueError(f"vector of length {len(v)} in ambient dimension {U.ambient}")
    p = U.p
    w = [x % p for x in v]
    for row, pc in zip(U.basis, U.pivots):
        f = w[pc]
        if f:
            w = [(x - f * y) % p for x, y in zip(w, row)]
    return not any(w)


def coordinates(U: Subspace, v: Sequence[int]) -> Vector:
    """Coefficients of ``v`` with respect to the RREF basis of ``U``."""
    if not contains(U, v):
        raise ValueError("vector is not in the subspace")
    return tuple(int(v[pc]) % U.p for pc in U.pivots)


def is_subspace(U: Subspace, W: Subspace) -> bool:
    _compatible(U, W)
    return all(contains(W, b) for b in U.basis)


def subspace_eq(U: Subspace, W: Subspace) -> bool:
    _compatible(U, W)
    return U.basis == W.basis


def image(m: FpMatrix, U: Subspace) -> Subspace:
    if U.ambient != m.cols or U.p != m.p:
        raise FieldMismatch("subspace does not live in the domain of the matrix")
    return span((mat_vec(m, b) for b in U.basis), m.rows, m.p)


def complement_coords(U: Subspace) -> tuple[int, ...]:
    """Coordinates not used as pivots; their unit vectors span a complement of ``U``."""
    piv = set(U.pivots)
    return tuple(j for j in range(U.ambient) if j not in piv)


def combine(p: int, coeffs: Sequence[int], vectors: Sequence[Sequence[int]], ambient: int) -> Vector:
    out = [0] * ambient
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                out[j] += c * x
    return tuple(x % p for x in out)


def enumerate_vectors(U: Subspace, budget: int = DEFAULT_ENUM_BUDGET) -> list[Vector]:
    """All ``p**rank`` vectors of ``U``, each exactly once."""
    size = U.p ** U.rank
    if size > budget:
        raise BudgetExceeded("subspace enumeration", size, budget)
    if not U.basis:
        return [(0,) * U.ambient]
    B = np.array(U.basis, dtype=np.int64)
    C = np.array(list(itertools.product(range(U.p), repeat=U.rank)), dtype=np.int64)
    return [tuple(int(x) for x in row) for row in (C @ B) % U.p]


def normalize(v: Sequence[int], p: int) -> Vector:
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    for x in v:
        if x % p:
            inv = pow(int(x), -1, p)
            return tuple(int(y) * inv % p for y in v)
    raise ValueError("zero vector has no projective class")


def projective_points(U: Subspace, budget: int = DEFAULT_ENUM_BUDGET) -> list[Vector]:
    """One normalized representative for each 1-dimensional subspace of ``U``."""
    p, r = U.p, U.rank
    count = (p**r - 1) // (p - 1)
    if count > budget:
        raise BudgetExceeded("projective point enumeration", count, budget)
    pts = []
    for lead in range(r):
        for tail in itertools.product(range(p), repeat=r - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            pts.append(combine(p, coeffs, U.basis, U.ambient))
    # RREF basis + leading coefficient 1 already gives normalized vectors
    return pts
