"""Admissible sequences and the recursive module towers M_s.

M_∅ = A, and M_{s+(i)} = (M_s ⊕ A) / W(i), where W(i) glues the last n - i
socle coordinates of M_s to the first n - i socle coordinates of the new
copy of A.  The result is the presentation module whose generators are Σ_s:
the old generators padded with i zero socle coordinates, plus a new
generator α with v·α = (0_{Σ i_j}, v).
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from . import linalg as la
from .cyclic_graph import (CTriple, CycGraph, cdim, fcdim, fundamental_components, fundamental_failure,
                           gamma, gamma_full)
from .errors import BudgetExceeded
from .linalg import DEFAULT_ENUM_BUDGET, FpMatrix, Subspace, Vector
from .trivext import (AModule, Algebra, Ideal, Submodule, direct_sum, free_module, goldie_dim,
                      in_decomposition_domain, is_intertwiner, is_pure, permute, presentation, quotient,
                      star_meets, top_dim)


# -- admissible sequences --------------------------------------------------


def term_allowed(i: int, p: int, n: int, prev: int | None = None) -> bool:
    if not 1 <= i <= n - 1:
        return False
    if prev is not None and i > prev:
        return False
    if p == 2 and not n // 2 < i:
        return False
    return True


def is_admissible(seq: Sequence[int], p: int, n: int) -> bool:
    prev = None
    for i in seq:
        if not term_allowed(i, p, n, prev):
            return False
        prev = i
    return True


def allowed_terms(p: int, n: int, prev: int | None = None) -> list[int]:
    return [i for i in range(1, n) if term_allowed(i, p, n, prev)]


@dataclass(frozen=True)
class AdmSeq:
    p: int
    n: int
    terms: tuple[int, ...] = ()

    def __post_init__(self):
        la.check_prime(self.p)
        object.__setattr__(self, "terms", tuple(int(i) for i in self.terms))
        if not is_admissible(self.terms, self.p, self.n):
            raise ValueError(f"sequence {list(self.terms)} is not admissible for p={self.p}, n={self.n}")

    def __len__(self) -> int:
        return len(self.terms)

    def truncation(self, k: int) -> "AdmSeq":
        return AdmSeq(self.p, self.n, self.terms[:k])

    def extend(self, i: int) -> "AdmSeq":
        return AdmSeq(self.p, self.n, self.terms + (i,))


def _as_seq(seq, p: int | None = None, n: int | None = None) -> AdmSeq:
    if isinstance(seq, AdmSeq):
        return seq
    if p is None or n is None:
        raise ValueError("p and n are required for a plain sequence")
    return AdmSeq(p, n, tuple(seq))


# -- construction ----------------------------------------------------------


@dataclass(frozen=True)
class TowerLevel:
    seq: AdmSeq
    module: AModule
    sigma: tuple[Vector, ...]
    socle_dim: int

    @property
    def algebra(self) -> Algebra:
        return self.module.algebra

    @property
    def gdim(self) -> int:
        return goldie_dim(self.module)


def socle_maps(seq: AdmSeq) -> tuple[int, list[list[list[int]]]]:
    """(N, [L_α]) for the presentation of M_s; each L_α is N x n."""
    n = seq.n
    ident = [[int(r == c) for c in range(n)] for r in range(n)]
    L = [ident]
    N = n
    for i in seq.terms:
        L = [m + [[0] * n for _ in range(i)] for m in L]
        offset = N + i - n
        L.append([[0] * n for _ in range(offset)] + ident)
        N += i
    return N, L


def build(seq: AdmSeq | Sequence[int], p: int | None = None, n: int | None = None) -> TowerLevel:
    seq = _as_seq(seq, p, n)
    A = Algebra(seq.p, seq.n)
    N, L = socle_maps(seq)
    g = len(L)
    M = presentation(A, g, N, L)
    return TowerLevel(seq, M, tuple(M.generators), N)


def module_Mi(p: int, n: int, i: int) -> AModule:
    return build(AdmSeq(p, n, (i,))).module


def module_Mn1i(p: int, n: int, i: int) -> AModule:
    return build(AdmSeq(p, n, (n - 1, i))).module


def glue_subspace(d_total: int, p: int, soc_start: int, N_s: int, new_soc_start: int, n: int, i: int) -> Subspace:
    """W(i): e_{soc, N_s-n+i+j} - e_{new, j}, j < n - i."""
    rows = []
    for j in range(n - i):
        v = [0] * d_total
        v[soc_start + N_s - n + i + j] = 1
        v[new_soc_start + j] = (-1) % p
        rows.append(v)
    return la.span(rows, d_total, p)


def extension_parts(M_s: AModule, N_s: int, i: int) -> tuple[AModule, Subspace]:
    """M_s ⊕ A reordered as [generators, new generator, Soc M_s, new socle], and W(i) in it."""
    A = M_s.algebra
    n, p = A.n, A.p
    g = M_s.d - N_s
    S = direct_sum(M_s, free_module(A, 1))
    order = list(range(g)) + [M_s.d] + list(range(g, M_s.d)) + list(range(M_s.d + 1, S.d))
    P = permute(S, order)
    K = glue_subspace(P.d, p, g + 1, N_s, g + 1 + N_s, n, i)
    return P, K


def char2_report(n: int = 4, depth: int = 2) -> Report:
    """Socle orthogonality over F_2 for each extension of an admissible prefix.

    Only terms above ⌊n/2⌋ are asserted; smaller terms are recorded.
    """
    p = 2
    J = Ideal.soc(Algebra(p, n))
    rep = Report(f"socle orthogonality over F_2, n={n}")
    prefixes = [AdmSeq(p, n)]
    layer = prefixes
    for _ in range(depth - 1):
        layer = [s.extend(i) for s in layer for i in allowed_terms(p, n, s.terms[-1] if s.terms else None)]
        prefixes += layer
    for s in prefixes:
        for i in range(1, n):
            asserted = term_allowed(i, p, n, s.terms[-1] if s.terms else None)
            ok = socle_orthogonal(s, i)
            rep.add(f"extend {list(s.terms)} by {i}: orthogonality", ok, "holds" if ok else "fails", asserted=asserted)
            if asserted:
                M = build(s.extend(i)).module
                rep.add(f"M_{list(s.terms) + [i]} in decomposition domain of Soc", in_decomposition_domain(M, J),
                        f"d={M.d}")
    return rep


def quotient_build(seq: AdmSeq | Sequence[int], p: int | None = None, n: int | None = None) -> AModule:
    """M_s via iterated quotients (M_s ⊕ A) / W(i)."""
    seq = _as_seq(seq, p, n)
    A = Algebra(seq.p, seq.n)
    M = free_module(A, 1)
    N = seq.n
    for i in seq.terms:
        P, K = extension_parts(M, N, i)
        M = quotient(P, Submodule(P, K))
        N += i
    return M


def socle_orthogonal(seq: AdmSeq, i: int) -> bool:
    """(Soc(A) ∗ (M_s ⊕ A)) ∩ W(i) = 0 for extending M_s by i."""
    lvl = build(seq)
    P, K = extension_parts(lvl.module, lvl.socle_dim, i)
    return not star_meets(P, Ideal.soc(P.algebra), K)


def sigma_tilde(level: TowerLevel, budget: int = DEFAULT_ENUM_BUDGET) -> list[Vector]:
    """All 2^g - 1 sums of distinct elements of Σ_s."""
    g = len(level.sigma)
    if 2 ** g - 1 > budget:
        raise BudgetExceeded("subset sums of Σ_s", 2 ** g - 1, budget)
    p, d = level.module.p, level.module.d
    out = []
    for r in range(1, g + 1):
        for combo in itertools.combinations(level.sigma, r):
            out.append(tuple(sum(col) % p for col in zip(*combo)))
    return out


def tilde_graph(level: TowerLevel) -> CycGraph:
    return gamma(CTriple(level.module, tuple(sigma_tilde(level))), Ideal.soc(level.algebra))


def embedding(level: TowerLevel, k: int) -> FpMatrix:
    """The inclusion M_{s_k} → M_s: generators to generators, socle coordinates padded."""
    small = build(level.seq.truncation(k))
    gs, Ns = len(small.sigma), small.socle_dim
    gb = len(level.sigma)
    rows = [[0] * small.module.d for _ in range(level.module.d)]
    for j in range(gs):
        rows[j][j] = 1
    for c in range(Ns):
        rows[gb + c][gs + c] = 1
    f = FpMatrix.from_rows(level.module.p, rows, cols=small.module.d)
    if not is_intertwiner(f, small.module, level.module):
        raise AssertionError("truncation embedding is not a module map")
    return f


def truncation_purity(level: TowerLevel) -> bool:
    M = level.module
    J = Ideal.soc(M.algebra)
    for k in range(len(level.seq)):
        f = embedding(level, k)
        if not is_pure(Submodule(M, la.column_space(f)), J):
            return False
    return True


class RankFunction(Enum):
    GDIM = "gdim"
    LENGTH = "length"


def rank(M: AModule, rho: RankFunction) -> int:
    return goldie_dim(M) if rho is RankFunction.GDIM else M.d


# -- indecomposable constructions ------------------------------------------


@dataclass
class Claim:
    name: str
    passed: bool | None
    detail: str = ""
    asserted: bool = True

    def line(self) -> str:
        status = {True: "PASS", False: "FAIL", None: "INFO"}[self.passed]
        tag = "" if self.asserted else " (recorded, not asserted)"
        return f"[{status}] {self.name}{tag}: {self.detail}"


@dataclass
class Report:
    title: str
    claims: list[Claim] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool | None, detail: str = "", asserted: bool = True) -> Claim:
        c = Claim(name, passed, detail, asserted)
        self.claims.append(c)
        return c

    @property
    def ok(self) -> bool:
        return all(c.passed is not False for c in self.claims if c.asserted)

    def render(self) -> str:
        out = [self.title] + [c.line() for c in self.claims] + [f"note: {n}" for n in self.notes]
        return "\n".join(out)

    def to_dict(self) -> dict:
        return {"title": self.title, "ok": self.ok,
                "claims": [c.__dict__ for c in self.claims], "notes": self.notes}


def local_quotient(A: Algebra, m: int) -> tuple[AModule, Ideal]:
    """A / (0 ⊕ W) with W = span(e_m, ..., e_{n-1}); Gdim m.

    The matching decomposition ideal is 0 ⊕ span(e_0, ..., e_{m-1}).
    """
    n, p = A.n, A.p
    F = free_module(A, 1)
    K = la.span([[0] * (1 + c) + [1] + [0] * (n - c - 1) for c in range(m, n)], F.d, p)
    Q = quotient(F, K)
    comp = la.span([[int(r == c) for r in range(n)] for c in range(m)], n, p)
    return Q, Ideal.soc(A, comp)


def verify_thm31(p: int, n: int, budget: int = DEFAULT_ENUM_BUDGET, oracle_budget: int = 2 ** 16) -> Report:
    from .oracle import find_idempotent  # local import keeps module load light

    A = Algebra(p, n)
    J = Ideal.soc(A)
    rep = Report(f"indecomposable modules by Goldie dimension, p={p}, n={n}")

    for m in range(1, n + 1):
        Q, I = local_quotient(A, m)
        res = find_idempotent(Q, oracle_budget)
        ok = goldie_dim(Q) == m and top_dim(Q) == 1 and in_decomposition_domain(Q, I) and res.status == "none_certain"
        rep.add(f"local quotient Gdim {m}", ok,
                f"Gdim={goldie_dim(Q)}, top={top_dim(Q)}, oracle={res.status}")

    for i in range(1, n):
        if not is_admissible((i,), p, n):
            rep.add(f"M_{i}", None, "no admissible construction for this i", asserted=False)
            continue
        lvl = build(AdmSeq(p, n, (i,)))
        M = lvl.module
        G = tilde_graph(lvl)
        gd = goldie_dim(M)
        dom = in_decomposition_domain(M, J)
        rep.add(f"M_{i} in decomposition domain of Soc", dom, f"d={M.d}")
        rep.add(f"M_{i} Gdim", gd == n + i, f"{gd} (expected {n + i})")
        rep.add(f"M_{i} tilde-graph complete", G.is_complete(),
                f"{len(G)} vertices, {len(G.edges)} edges")
        if p ** M.d <= budget:
            c = cdim(M, J, budget)
            rep.add(f"M_{i} full cdim", c == 1, f"cdim={c} by enumeration of {p ** M.d} elements")
        else:
            rep.notes.append(f"M_{i}: full enumeration needs {p ** M.d} elements; tilde-graph check substitutes")

    for i in range(1, n):
        if not is_admissible((n - 1, i), p, n):
            rep.add(f"M_({n - 1},{i})", None, "no admissible construction for this i", asserted=False)
            continue
        lvl = build(AdmSeq(p, n, (n - 1, i)))
        M = lvl.module
        gd = goldie_dim(M)
        rep.add(f"M_({n - 1},{i}) Gdim", gd == 2 * n + i - 1, f"{gd} (expected {2 * n + i - 1})")
        rep.add(f"M_({n - 1},{i}) in decomposition domain of Soc", in_decomposition_domain(M, J), f"d={M.d}")
        if p ** M.d > budget:
            rep.notes.append(f"M_({n - 1},{i}): full enumeration needs {p ** M.d} elements; skipped")
            continue
        G = gamma_full(M, J, budget)
        a0, a1, anew = lvl.sigma
        pair = [a0, anew]
        why = fundamental_failure(M, J, pair, G)
        rep.add(f"M_({n - 1},{i}) pair {{alpha_0, alpha_new}} fundamental", why is None,
                "fundamental" if why is None else why)
        if why is None:
            f = fcdim(M, J, pair, G)
            rep.add(f"M_({n - 1},{i}) fcdim of the pair", f == 1, f"fcdim={f}")
        full_why = fundamental_failure(M, J, list(lvl.sigma), G)
        rep.add(f"M_({n - 1},{i}) generator set Σ_s fundamental", full_why is None,
                "fundamental" if full_why is None else full_why, asserted=False)
        if full_why is None:
            f = len(fundamental_components(G, lvl.sigma))
            rep.add(f"M_({n - 1},{i}) fcdim of Σ_s", f == 1, f"fcdim={f}, cdim={G.n_components}", asserted=False)
        res = find_idempotent(M, oracle_budget)
        rep.add(f"M_({n - 1},{i}) oracle", res.status == "none_certain", res.status, asserted=False)
    rep.notes.append("large n is out of reach: full graphs need p^d elements; tilde-graph checks substitute")
    return rep


# -- conjecture search -----------------------------------------------------

CSV_FIELDS = ["seq", "depth", "d", "gdim", "tilde_components", "full_cdim",
              "fundamental_found", "fcdim", "elapsed_ms"]


@dataclass
class SearchRow:
    seq: tuple[int, ...]
    d: int
    gdim: int
    tilde_components: int
    full_cdim: int | None
    fundamental_found: bool
    fcdim: int | None
    fundamental_sets: list[list[int]] = field(default_factory=list)
    large_summand: bool | None = None
    elapsed_ms: float | None = None

    def csv_record(self, timing: bool) -> list[str]:
        return [" ".join(map(str, self.seq)), str(len(self.seq)), str(self.d), str(self.gdim),
                str(self.tilde_components), "-" if self.full_cdim is None else str(self.full_cdim),
                "true" if self.fundamental_found else "false",
                "-" if self.fcdim is None else str(self.fcdim),
                f"{self.elapsed_ms:.1f}" if timing and self.elapsed_ms is not None else "-"]


@dataclass
class SearchReport:
    p: int
    n: int
    depth: int
    beam: int
    metric: str
    rows: list[SearchRow]

    def to_csv(self, timing: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            w.writerow(r.csv_record(timing))
        return buf.getvalue()

    def to_json(self, timing: bool = False) -> str:
        rows = []
        for r in self.rows:
            rec = dict(zip(CSV_FIELDS, [list(r.seq), len(r.seq), r.d, r.gdim, r.tilde_components, r.full_cdim,
                                        r.fundamental_found, r.fcdim, r.elapsed_ms if timing else None]))
            rec["fundamental_sets"] = r.fundamental_sets
            rec["large_summand"] = r.large_summand
            rows.append(rec)
        return json.dumps({"p": self.p, "n": self.n, "depth": self.depth, "beam": self.beam,
                           "metric": self.metric, "rows": rows}, indent=2, sort_keys=True) + "\n"


def large_summand_holds(M: AModule, kappa: int, n: int, oracle_budget: int = 2 ** 16) -> bool | None:
    """If Gdim M ≥ n·κ, some certified summand has Gdim ≥ n; None when vacuous or uncertain."""
    from .oracle import ks_decompose

    if goldie_dim(M) < n * kappa:
        return None
    dec = ks_decompose(M, oracle_budget)
    if not dec.certain:
        return None
    return any(goldie_dim(S) >= n for S in dec.modules)


def evaluate(seq: AdmSeq, budget: int = DEFAULT_ENUM_BUDGET, fundamental_max: int = 3,
             oracle_budget: int = 2 ** 16) -> SearchRow:
    t0 = time.perf_counter()
    lvl = build(seq)
    M = lvl.module
    J = Ideal.soc(M.algebra)
    tilde = tilde_graph(lvl).n_components
    full = f = None
    found: list[list[int]] = []
    big = None
    if M.p ** M.d <= budget:
        G = gamma_full(M, J, budget)
        full = cdim(M, J, graph=G)
        comps = set()
        for r in range(1, min(fundamental_max, len(lvl.sigma)) + 1):
            for idx in itertools.combinations(range(len(lvl.sigma)), r):
                sub = [lvl.sigma[k] for k in idx]
                if fundamental_failure(M, J, sub, G) is None:
                    found.append(list(idx))
                    comps.add(fundamental_components(G, sub))
        if found:
            f = min(len(c) for c in comps)
        big = large_summand_holds(M, full, seq.n, oracle_budget)
    ms = (time.perf_counter() - t0) * 1000
    return SearchRow(seq.terms, M.d, goldie_dim(M), tilde, full, bool(found), f, found, big, ms)


def _metric_key(row: SearchRow, metric: str):
    if metric == "tilde":
        return (row.tilde_components,)
    if metric == "cdim":
        return (row.full_cdim if row.full_cdim is not None else float("inf"), row.tilde_components)
    if metric == "fcdim":
        return (row.fcdim if row.fcdim is not None else float("inf"), row.tilde_components)
    raise ValueError(f"unknown metric {metric!r}")


METRICS = ("tilde", "cdim", "fcdim")


def search(p: int, n: int, depth: int, beam: int, metric: str = "tilde",
           budget: int = DEFAULT_ENUM_BUDGET, fundamental_max: int = 3,
           oracle_budget: int = 2 ** 16) -> SearchReport:
    """Beam search over admissible extensions; lower metric is kept first."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}")
    if depth < 0 or beam < 1:
        raise ValueError("depth must be ≥ 0 and beam ≥ 1")
    root = AdmSeq(p, n)
    rows = [evaluate(root, budget, fundamental_max, oracle_budget)]
    frontier = [(rows[0], root)]
    for _ in range(depth):
        cands = []
        for _, s in frontier:
            prev = s.terms[-1] if s.terms else None
            for i in allowed_terms(p, n, prev):
                t = s.extend(i)
                cands.append((evaluate(t, budget, fundamental_max, oracle_budget), t))
        if not cands:
            break
        cands.sort(key=lambda c: (_metric_key(c[0], metric), c[1].terms))
        frontier = cands[:beam]
        rows.extend(r for r, _ in sorted(frontier, key=lambda c: c[1].terms))
    return SearchReport(p, n, depth, beam, metric, rows)
