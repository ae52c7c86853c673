"""Seeded random instances and the property suites run by the CLI and tests.

Every suite returns a ``CheckResult``; a failing one carries a serialized
counterexample that is enough to replay the failure.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from . import linalg as la
from .cyclic_graph import (CTriple, CycGraph, fundamental_components, fundamental_failure, gamma,
                           gamma_full, gamma_map, triple_chain_limit, triple_coproduct, vertex_map)
from .errors import NotCMorphism
from .graphs import Graph, coequalizer, coproduct, equalizer, is_isomorphic, product, union
from .linalg import FpMatrix, Subspace
from .oracle import FOUND, commutes, find_idempotent, is_idempotent, ks_decompose, reassembles
from .serialize import module_to_dict
from .towers import AdmSeq, build, embedding, truncation_purity
from .trivext import (AModule, Algebra, Ideal, Submodule, act, direct_sum, free_module, goldie_dim,
                      ideal_image, in_decomposition_domain, inclusion_matrix, is_pure, presentation,
                      quotient, radical_image, restrict, socle, star_meets, submodule_generated)
from .zdomain import (PrincIdeal, ZTriple, gamma_z, lemma71_check, lemma72_check, proportional,
                      witness_adjacent, z_adjacent)


@dataclass
class CheckResult:
    name: str
    trials: int = 0
    violations: int = 0
    counterexample: dict | None = None
    details: list[str] = field(default_factory=list)
    skipped: int = 0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def fail(self, example: dict, msg: str) -> None:
        self.violations += 1
        if self.counterexample is None:
            self.counterexample = example
            self.details.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f", {self.skipped} skipped" if self.skipped else ""
        return f"[{status}] {self.name}: {self.trials} trials, {self.violations} violations{extra}"

    def render(self) -> str:
        lines = [self.summary()] + [f"  {d}" for d in self.details]
        if self.counterexample is not None:
            lines.append("  counterexample: " + json.dumps(self.counterexample, sort_keys=True))
        return "\n".join(lines)


# -- random instances ------------------------------------------------------


def random_matrix(rng: random.Random, p: int, rows: int, cols: int) -> list[list[int]]:
    return [[rng.randrange(p) for _ in range(cols)] for _ in range(rows)]


def random_presentation(rng: random.Random, p: int, n: int, g: int, N: int) -> AModule:
    return presentation(Algebra(p, n), g, N, [random_matrix(rng, p, N, n) for _ in range(g)])


def random_domain_module(rng: random.Random, p: int, max_d: int = 8, n: int | None = None,
                         tries: int = 500) -> AModule:
    """A random presentation module in the decomposition domain of Soc(A)."""
    for _ in range(tries):
        nn = n if n is not None else rng.randint(1, 3)
        g = rng.randint(1, max(1, min(3, max_d - nn)))
        if g + nn > max_d:
            continue
        N = rng.randint(nn, max_d - g)
        M = random_presentation(rng, p, nn, g, N)
        if in_decomposition_domain(M, Ideal.soc(M.algebra)):
            return M
    # the regular module is always a member
    return free_module(Algebra(p, n or 1), 1)


def random_module_for_suite(rng: random.Random, p: int, max_d: int = 8) -> AModule:
    """Members of 𝔇(Soc) with d ≤ max_d, about a third of them direct sums."""
    n = rng.randint(1, 2)
    if rng.random() < 0.35 and max_d >= 2 * (n + 1):
        M1 = random_domain_module(rng, p, max_d // 2, n)
        M2 = random_domain_module(rng, p, max_d - M1.d, n)
        if M1.d + M2.d <= max_d:
            return direct_sum(M1, M2)
    return random_domain_module(rng, p, max_d, n)


def random_unit_combo(rng: random.Random, M: AModule, gens: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Another generating set: an invertible mix of ``gens`` plus radical noise."""
    p, g = M.p, len(gens)
    while True:
        mix = random_matrix(rng, p, g, g)
        if g == 0 or la.rank(FpMatrix.from_rows(p, mix, cols=g)) == g:
            break
    JM = radical_image(M)
    noise = la.enumerate_vectors(JM)
    out = []
    for row in mix:
        v = [0] * M.d
        for c, a in zip(row, gens):
            v = [(x + c * y) % p for x, y in zip(v, a)]
        z = rng.choice(noise)
        out.append(tuple((x + y) % p for x, y in zip(v, z)))
    return out


def top_lift(M: AModule) -> list[tuple[int, ...]]:
    """Unit vectors on coordinates complementary to JM: a minimal generating set."""
    return [M.unit_vector(k) for k in la.complement_coords(radical_image(M))]


def fundamental_candidates(rng: random.Random, M: AModule, extra: int = 4) -> list[list[tuple[int, ...]]]:
    base = top_lift(M)
    cands = [base] + [random_unit_combo(rng, M, base) for _ in range(extra)]
    if M.generator_marks:
        cands.append(M.generators)
    return cands


def random_submodule(rng: random.Random, M: AModule, k: int | None = None) -> Subspace:
    k = k if k is not None else rng.randint(1, 2)
    vecs = [tuple(rng.randrange(M.p) for _ in range(M.d)) for _ in range(k)]
    return submodule_generated(M, vecs)


def _mod(M: AModule) -> dict:
    return module_to_dict(M)


# -- bound suite and oracle soundness --------------------------------------


def oracle_soundness(M: AModule, res: CheckResult, budget: int = 2 ** 16) -> None:
    dec = ks_decompose(M, budget)
    for e in dec.idempotents:
        if not is_idempotent(e):
            res.fail({"module": _mod(M)}, "emitted idempotent fails e^2 = e")
    # each split idempotent lives in the module it split, so recheck on the leaves' parent chain
    if not reassembles(dec):
        res.fail({"module": _mod(M)}, "decomposition does not reassemble to a block-diagonal action")
    r = find_idempotent(M, budget)
    if r.status == FOUND and not (is_idempotent(r.idempotent) and commutes(r.idempotent, M)):
        res.fail({"module": _mod(M)}, "idempotent does not commute with the action")


def bound_suite(trials: int = 200, seed: int = 0, max_d: int = 8, primes=(2, 3),
                oracle_budget: int = 2 ** 16) -> tuple[CheckResult, CheckResult, list[dict]]:
    """KSℓ ≤ cdim, and KSℓ ≤ fcdim ≤ cdim wherever a fundamental set is found.

    Returns the bound result, the oracle-soundness result and per-module records.
    """
    rng = random.Random(seed)
    res = CheckResult("bounds KSl <= fcdim <= cdim")
    sound = CheckResult("oracle soundness")
    records = []
    for t in range(trials):
        p = primes[t % len(primes)]
        M = random_module_for_suite(rng, p, max_d)
        J = Ideal.soc(M.algebra)
        G = gamma_full(M, J)
        c = G.n_components
        dec = ks_decompose(M, oracle_budget)
        sound.trials += 1
        oracle_soundness(M, sound, oracle_budget)
        res.trials += 1
        rec = {"p": p, "d": M.d, "cdim": c, "ks": dec.length, "certain": dec.certain, "fcdim": None}
        if not dec.certain:
            res.skipped += 1
            records.append(rec)
            continue
        if dec.length > c:
            res.fail({"module": _mod(M), "cdim": c, "ks_length": dec.length}, "KSl exceeds cdim")
        fsets = [s for s in fundamental_candidates(rng, M) if fundamental_failure(M, J, s, G) is None]
        if fsets:
            f = len(fundamental_components(G, fsets[0]))
            rec["fcdim"] = f
            if not dec.length <= f <= c:
                res.fail({"module": _mod(M), "cdim": c, "fcdim": f, "ks_length": dec.length,
                          "sigma": [list(a) for a in fsets[0]]}, "KSl <= fcdim <= cdim fails")
        records.append(rec)
    return res, sound, records


def fundamental_coincidence_suite(trials: int = 100, seed: int = 0, max_d: int = 8) -> CheckResult:
    """Different fundamental subsets pick out the same components."""
    rng = random.Random(seed)
    res = CheckResult("fundamental component sets coincide")
    for t in range(trials):
        p = (2, 3)[t % 2]
        M = random_module_for_suite(rng, p, max_d)
        J = Ideal.soc(M.algebra)
        G = gamma_full(M, J)
        sets = [s for s in fundamental_candidates(rng, M, 6) if fundamental_failure(M, J, s, G) is None]
        if len(sets) < 2:
            res.skipped += 1
            continue
        res.trials += 1
        comps = {fundamental_components(G, s) for s in sets}
        if len(comps) > 1:
            res.fail({"module": _mod(M), "sigmas": [[list(a) for a in s] for s in sets]},
                     "fundamental subsets select different components")
    return res


# -- pure submodules and direct sums ---------------------------------------


def complete_subgraph_holds(M: AModule, U: Subspace, I: Ideal) -> bool:
    """Γ_I(N) sits inside Γ_I(M) with the inherited adjacency, for N = U pure."""
    N = restrict(M, U)
    inc = inclusion_matrix(U)
    GN = gamma_full(N, I.__class__(N.algebra, I.kind, I.W) if I.kind == "soc" else I)
    GM = gamma_full(M, I)
    try:
        vmap = vertex_map(inc, GN, GM)
    except NotCMorphism:
        return False
    for i, j in itertools.combinations(range(len(GN)), 2):
        if GN.adjacent(i, j) != GM.adjacent(vmap[i], vmap[j]):
            return False
    return len(set(vmap)) == len(vmap)


def pure_submodule_suite(trials: int = 100, seed: int = 0, max_d: int = 8) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("pure submodules: domain membership and complete subgraph")
    done = 0
    attempts = 0
    while done < trials and attempts < trials * 20:
        attempts += 1
        p = (2, 3)[attempts % 2]
        n = rng.randint(1, 2)
        if rng.random() < 0.5:
            M1 = random_domain_module(rng, p, max_d // 2, n)
            M2 = random_domain_module(rng, p, max_d - M1.d, n)
            if M1.d + M2.d > max_d:
                continue
            M = direct_sum(M1, M2)
            U = la.span([M.unit_vector(k) for k in range(M1.d)], M.d, p)
        else:
            M = random_domain_module(rng, p, max_d, n)
            U = random_submodule(rng, M)
        J = Ideal.soc(M.algebra)
        if U.is_zero() or not is_pure(Submodule(M, U), J):
            continue
        done += 1
        res.trials += 1
        N = restrict(M, U)
        ex = {"module": _mod(M), "submodule": [list(b) for b in U.basis]}
        if not in_decomposition_domain(N, Ideal.soc(N.algebra)):
            res.fail(ex, "pure submodule left the decomposition domain")
        elif not complete_subgraph_holds(M, U, J):
            res.fail(ex, "graph of the pure submodule is not a complete subgraph")
    return res


def direct_sum_suite(trials: int = 100, seed: int = 0, max_d: int = 8) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("direct sums: component restriction")
    for t in range(trials):
        p = (2, 3)[t % 2]
        n = rng.randint(1, 2)
        M1 = random_domain_module(rng, p, max_d // 2, n)
        M2 = random_domain_module(rng, p, max(max_d - M1.d, n + 1), n)
        M = direct_sum(M1, M2)
        J1, J = Ideal.soc(M1.algebra), Ideal.soc(M.algebra)
        G1, G = gamma_full(M1, J1), gamma_full(M, J)
        inc = inclusion_matrix(la.span([M.unit_vector(k) for k in range(M1.d)], M.d, p))
        vmap = vertex_map(inc, G1, G)
        res.trials += 1
        c1, c = G1.component_id, G.component_id
        for i, j in itertools.combinations(range(len(G1)), 2):
            if (c1[i] == c1[j]) != (c[vmap[i]] == c[vmap[j]]):
                res.fail({"M1": _mod(M1), "M2": _mod(M2), "vertices": [i, j]},
                         "component membership differs between the summand and the sum")
                break
    return res


# -- domain closure --------------------------------------------------------


def star_meets_brute(M: AModule, I: Ideal, N: Subspace) -> bool:
    """(I∗M) ∩ N ≠ 0 by listing r·x for r in I, x in M."""
    A = M.algebra
    W = I.W if I.kind == "soc" else Subspace.full(A.p, A.n)
    for w in la.enumerate_vectors(W):
        for x in la.enumerate_vectors(M.full()):
            y = act(w, M, x)
            if any(y) and la.contains(N, y):
                return True
    return False


def domain_closure_suite(trials: int = 100, seed: int = 0, max_d: int = 8) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("domain closed under sums and admissible quotients")
    for t in range(trials):
        p = (2, 3)[t % 2]
        n = rng.randint(1, 2)
        M1 = random_domain_module(rng, p, max_d // 2, n)
        M2 = random_domain_module(rng, p, max(max_d - M1.d, n + 1), n)
        S = direct_sum(M1, M2)
        J = Ideal.soc(S.algebra)
        res.trials += 1
        if not in_decomposition_domain(S, J):
            res.fail({"M1": _mod(M1), "M2": _mod(M2)}, "direct sum left the domain")
            continue
        soc = socle(S)
        k = rng.randint(1, max(1, min(2, soc.rank)))
        basis = la.enumerate_vectors(soc)
        N = la.span([rng.choice(basis) for _ in range(k)], S.d, p)
        meets = star_meets(S, J, N)
        if p ** S.d <= 3 ** 7 and meets != star_meets_brute(S, J, N):
            res.fail({"module": _mod(S), "N": [list(b) for b in N.basis]}, "I*M test disagrees with enumeration")
            continue
        if not meets and not N.is_zero():
            Q = quotient(S, Submodule(S, N))
            if not in_decomposition_domain(Q, Ideal.soc(Q.algebra)):
                res.fail({"module": _mod(S), "N": [list(b) for b in N.basis]}, "admissible quotient left the domain")
    return res


# -- categorical suite -----------------------------------------------------


def random_triple(rng: random.Random, p: int, n: int, max_sigma: int = 4, max_d: int = 6) -> CTriple:
    M = random_domain_module(rng, p, max_d, n)
    k = rng.randint(1, min(max_sigma, p ** M.d - 1))
    sig = []
    while len(sig) < k:
        v = tuple(rng.randrange(p) for _ in range(M.d))
        if any(v) and v not in sig:
            sig.append(v)
    sp = [a for a in sig if rng.random() < 0.4]
    return CTriple(M, tuple(sig), tuple(sp))


def coproduct_preserved(ts: list[CTriple], I_of: Callable[[Algebra], Ideal]) -> bool:
    T = triple_coproduct(ts)
    lhs = gamma(T, I_of(T.M.algebra)).to_graph()
    parts = [gamma(t, I_of(t.M.algebra)).to_graph() for t in ts]
    rhs = coproduct(parts)
    offs = list(itertools.accumulate([0] + [t.M.d for t in ts]))

    def embed(label):
        k, basis = label
        return tuple((0,) * offs[k] + tuple(r) + (0,) * (T.M.d - offs[k] - len(r)) for r in basis)

    ok = rhs.relabel(embed).same_labelled(lhs)
    if len(lhs) <= 8:
        ok = ok and is_isomorphic(lhs, rhs)
    return ok


def random_chain(rng: random.Random, p: int, n: int, length: int = 3) -> tuple[list[CTriple], list[FpMatrix]]:
    """M_0 ⊆ M_0 ⊕ B_1 ⊆ ... with Σ growing along the inclusions."""
    t0 = random_triple(rng, p, n, max_sigma=2, max_d=4)
    chain, maps = [t0], []
    for _ in range(length - 1):
        prev = chain[-1]
        B = random_domain_module(rng, p, 3, n)
        M = direct_sum(prev.M, B)
        f = FpMatrix.from_rows(p, [[int(r == c) for c in range(prev.M.d)] for r in range(M.d)], cols=prev.M.d)
        sig = [la.mat_vec(f, a) for a in prev.Sigma]
        sp = [la.mat_vec(f, a) for a in prev.SigmaPrime]
        for _ in range(rng.randint(0, 2)):
            v = tuple(rng.randrange(p) for _ in range(M.d))
            if any(v) and v not in sig:
                sig.append(v)
                if rng.random() < 0.3:
                    sp.append(v)
        chain.append(CTriple(M, tuple(sig), tuple(sp)))
        maps.append(f)
    return chain, maps


def chain_limit_preserved(chain: list[CTriple], maps: list[FpMatrix], I: Ideal) -> tuple[bool, bool]:
    """(union form, colimit form) of the limit comparison."""
    lim, to_end = triple_chain_limit(chain, maps)
    G_lim = gamma(lim, I)
    # union of the pushed-forward graphs Γ(φ(M_k), φ(Σ_k))
    pushed = []
    for t, phi in zip(chain, to_end):
        sub = CTriple(lim.M, tuple(la.mat_vec(phi, a) for a in t.Sigma),
                      tuple(la.mat_vec(phi, a) for a in t.SigmaPrime))
        pushed.append(gamma(sub, I).to_graph())
    union_ok = union(pushed).same_labelled(G_lim.to_graph())
    # colimit in graphs: coproduct of the stages glued along the stage maps
    Gs = [gamma(t, I) for t in chain]
    gen = coproduct([g.to_graph() for g in Gs])
    offs = list(itertools.accumulate([0] + [len(g) for g in Gs]))
    src, dst = [], []
    for k, f in enumerate(maps):
        vm = vertex_map(f, Gs[k], Gs[k + 1])
        src += [offs[k] + i for i in range(len(Gs[k]))]
        dst += [offs[k + 1] + j for j in vm]
    colim, q = coequalizer(gen, src, dst)
    labels = [None] * len(colim)
    for v in range(len(gen)):
        k = max(i for i in range(len(Gs)) if offs[i] <= v)
        U = Gs[k].vertices[v - offs[k]][0]
        labels[q[v]] = la.image(to_end[k], U).basis
    colim_ok = colim.relabel(lambda lab: labels[colim.index(lab)]).same_labelled(G_lim.to_graph())
    return union_ok, colim_ok


def categorical_suite(trials: int = 50, seed: int = 0) -> tuple[CheckResult, CheckResult, CheckResult]:
    rng = random.Random(seed)
    co = CheckResult("coproducts preserved")
    un = CheckResult("chain limits: union of graphs")
    lim = CheckResult("chain limits: colimit of graphs")
    for t in range(trials):
        p = (2, 3)[t % 2]
        n = rng.randint(1, 2)
        ts = [random_triple(rng, p, n) for _ in range(2)]
        co.trials += 1
        if not coproduct_preserved(ts, Ideal.soc):
            co.fail({"triples": [_triple(x) for x in ts]}, "Γ(coproduct) differs from the coproduct of graphs")
        chain, maps = random_chain(rng, p, n)
        I = Ideal.soc(chain[0].M.algebra)
        u_ok, c_ok = chain_limit_preserved(chain, maps, I)
        un.trials += 1
        lim.trials += 1
        if not u_ok:
            un.fail({"chain": [_triple(x) for x in chain]}, "union form fails")
        if not c_ok:
            lim.fail({"chain": [_triple(x) for x in chain]}, "colimit form fails")
    return co, un, lim


def _triple(t: CTriple) -> dict:
    return {"module": _mod(t.M), "sigma": [list(a) for a in t.Sigma], "sigma_prime": [list(a) for a in t.SigmaPrime]}


def field_triple(p: int, d: int, sigma) -> CTriple:
    A = Algebra(p, 0)
    return CTriple(AModule(A, d, ()), tuple(sigma))


def product_counterexample() -> dict:
    """Γ does not preserve products: 1 vertex versus 2 over F_3."""
    p = 3
    t = field_triple(p, 1, [(1,), (2,)])
    I1 = Ideal.whole(Algebra(p, 0))
    G = gamma(t, I1).to_graph()
    graph_prod = product([G, G])
    sig = [(a, b) for a in (1, 2) for b in (1, 2)]
    tp = field_triple(p, 2, sig)
    G_prod = gamma(tp, I1)
    return {"graph_product_vertices": len(graph_prod), "gamma_of_product_vertices": len(G_prod),
            "reproduced": len(graph_prod) == 1 and len(G_prod) == 2}


def equalizer_counterexample() -> dict:
    """Γ does not preserve equalizers: the module equalizer of (id, -id) on F_3 is 0."""
    p = 3
    A = Algebra(p, 0)
    I1 = Ideal.whole(A)
    t = field_triple(p, 1, [(1,), (2,)])
    f = FpMatrix.identity(p, 1)
    g = f.scale(-1)
    K = la.kernel(f - g)
    eq_triple = CTriple(restrict(t.M, K), tuple())
    G_eq_module = gamma(eq_triple, I1)
    G = gamma(t, I1)
    fm = gamma_map(f, t, t, I1, G, G)
    gm = gamma_map(g, t, t, I1, G, G)
    geq, _ = equalizer(G.to_graph(), fm, gm)
    return {"module_equalizer_dim": K.rank, "gamma_of_equalizer_vertices": len(G_eq_module),
            "graph_maps_equal": fm == gm, "graph_equalizer_vertices": len(geq),
            "reproduced": K.rank == 0 and len(G_eq_module) == 0 and fm == gm and len(geq) == 1}


# -- finite chains of towers -----------------------------------------------


def tower_chain_check(p: int, n: int, seq, budget: int = 2 ** 20) -> dict:
    """Along the truncations of seq: purity, domain membership, graph maps, component bound."""
    full = build(AdmSeq(p, n, tuple(seq)))
    levels = [build(full.seq.truncation(k)) for k in range(len(seq) + 1)]
    J = Ideal.soc(Algebra(p, n))
    graphs = [gamma_full(l.module, J, budget) for l in levels]
    out = {"seq": list(seq), "pure": [], "domain": [], "maps_ok": True, "cdims": [g.n_components for g in graphs]}
    for k in range(len(seq)):
        f = embedding(levels[k + 1], k)
        out["pure"].append(is_pure(Submodule(levels[k + 1].module, la.column_space(f)), J))
        try:
            vertex_map(f, graphs[k], graphs[k + 1])
        except NotCMorphism:
            out["maps_ok"] = False
    out["domain"] = [in_decomposition_domain(l.module, J) for l in levels]
    out["final_within_max"] = out["cdims"][-1] <= max(out["cdims"])
    out["ok"] = all(out["pure"]) and all(out["domain"]) and out["maps_ok"] and out["final_within_max"]
    return out


# -- ℤ and directed families -----------------------------------------------


def random_zvec(rng: random.Random, d: int, lo: int = -6, hi: int = 6) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(lo, hi) for _ in range(d))
        if any(v):
            return v


def random_ztriple(rng: random.Random) -> ZTriple:
    d = rng.randint(1, 3)
    sig = []
    for _ in range(rng.randint(1, 5)):
        a = random_zvec(rng, d)
        if rng.random() < 0.4 and sig:
            a = tuple(rng.choice([-3, -2, -1, 1, 2, 3]) * x for x in rng.choice(sig))
        if a not in sig:
            sig.append(a)
    sp = [a for a in sig if rng.random() < 0.3]
    return ZTriple(d, tuple(sig), tuple(sp))


def z_criterion(trials: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("integer adjacency matches the witness search")
    for _ in range(trials):
        d = rng.randint(1, 3)
        a = random_zvec(rng, d, -4, 4)
        if rng.random() < 0.5:
            b = tuple(rng.choice([-3, -2, 2, 3, 1]) * x for x in a)
            if rng.random() < 0.5:
                g = math.gcd(*[abs(x) for x in b])
                b = tuple(x // g for x in b)
        else:
            b = random_zvec(rng, d, -4, 4)
        I = PrincIdeal(rng.randint(1, 6))
        bound = I.m * max(abs(x) for x in a + b)
        res.trials += 1
        if z_adjacent(a, b, I) != witness_adjacent(a, b, I, bound):
            res.fail({"a": list(a), "b": list(b), "m": I.m}, "criterion and witness disagree")
    return res


def intersection_suite(trials: int = 100, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("product, intersection and graph intersection agree over Z")
    for _ in range(trials):
        t = random_ztriple(rng)
        ideals = [PrincIdeal(rng.randint(1, 12)) for _ in range(rng.randint(1, 3))]
        res.trials += 1
        if not lemma72_check(t, ideals):
            res.fail({"sigma": [list(a) for a in t.Sigma], "ideals": [I.m for I in ideals]}, "graphs differ")
    return res


def random_directed_z(rng: random.Random) -> list[PrincIdeal]:
    """A divisibility chain (m) ⊆ (m/k1) ⊆ ...; directed under inclusion."""
    m = rng.randint(1, 6)
    chain = [PrincIdeal(m)]
    for _ in range(rng.randint(0, 3)):
        m *= rng.randint(1, 4)
        chain.append(PrincIdeal(m))
    rng.shuffle(chain)
    return chain


def random_directed_soc(rng: random.Random, A: Algebra) -> list[Ideal]:
    """A chain of socle ideals, or a pair together with its sum."""
    n, p = A.n, A.p
    vecs = [tuple(rng.randrange(p) for _ in range(n)) for _ in range(rng.randint(1, 3))]
    spaces = [la.span(vecs[:k + 1], n, p) for k in range(len(vecs))]
    if rng.random() < 0.4 and n >= 2:
        U = la.span([tuple(rng.randrange(p) for _ in range(n))], n, p)
        W = la.span([tuple(rng.randrange(p) for _ in range(n))], n, p)
        spaces = [U, W, la.subspace_sum(U, W)]
    return [Ideal.soc(A, S) for S in spaces]


def directed_family_suite(trials: int = 50, seed: int = 0) -> tuple[CheckResult, CheckResult]:
    rng = random.Random(seed)
    rz = CheckResult("directed families over Z")
    rk = CheckResult("directed families over the trivial extension")
    for t in range(trials):
        zt = random_ztriple(rng)
        fam = random_directed_z(rng)
        rz.trials += 1
        if not lemma71_check(zt, fam):
            rz.fail({"sigma": [list(a) for a in zt.Sigma], "family": [I.m for I in fam]}, "graphs differ")
        p = (2, 3)[t % 2]
        ct = random_triple(rng, p, rng.randint(1, 2))
        kfam = random_directed_soc(rng, ct.M.algebra)
        rk.trials += 1
        if not lemma71_check(ct, kfam):
            rk.fail({"triple": _triple(ct), "family": [str(I) for I in kfam]}, "graphs differ")
    return rz, rk


# -- dispatch --------------------------------------------------------------

LEMMA_NAMES = ("2.4", "2.8", "2.10", "3.2", "5.3", "5.4", "5.5", "6.3-chain", "7.1", "7.2",
               "product-counterexample", "equalizer-counterexample")


def run_lemma(name: str, trials: int | None = None, seed: int = 0) -> list[CheckResult]:
    if name == "2.4":
        return [pure_submodule_suite(trials or 100, seed)]
    if name == "2.8":
        return [direct_sum_suite(trials or 100, seed)]
    if name == "2.10":
        return [fundamental_coincidence_suite(trials or 100, seed)]
    if name == "3.2":
        return [domain_closure_suite(trials or 100, seed)]
    if name in ("5.3", "5.4", "5.5"):
        co, un, lim = categorical_suite(trials or 50, seed)
        return [{"5.3": un, "5.4": lim, "5.5": co}[name]]
    if name == "6.3-chain":
        res = CheckResult("finite pure tower chains")
        for p, n, seq in [(3, 2, (1, 1)), (3, 3, (2, 1)), (3, 3, (1, 1)), (2, 3, (2, 2))]:
            out = tower_chain_check(p, n, seq)
            res.trials += 1
            if not out["ok"]:
                res.fail(out, f"chain {list(seq)} at p={p}, n={n} fails")
            res.details.append(f"p={p} n={n} seq={list(seq)} cdims={out['cdims']}")
        return [res]
    if name == "7.1":
        return list(directed_family_suite(trials or 50, seed))
    if name == "7.2":
        return [intersection_suite(trials or 100, seed), z_criterion(trials or 100, seed)]
    if name == "product-counterexample":
        out = product_counterexample()
        res = CheckResult("product counterexample", trials=1)
        res.details.append(f"graph product: {out['graph_product_vertices']} vertex, "
                           f"graph of the product: {out['gamma_of_product_vertices']} vertices")
        if not out["reproduced"]:
            res.fail(out, "discrepancy not reproduced")
        return [res]
    if name == "equalizer-counterexample":
        out = equalizer_counterexample()
        res = CheckResult("equalizer counterexample", trials=1)
        res.details.append(f"graph of the module equalizer: {out['gamma_of_equalizer_vertices']} vertices, "
                           f"graph equalizer: {out['graph_equalizer_vertices']} vertex")
        if not out["reproduced"]:
            res.fail(out, "discrepancy not reproduced")
        return [res]
    raise ValueError(f"unknown check {name!r}; choose from {', '.join(LEMMA_NAMES)}")
