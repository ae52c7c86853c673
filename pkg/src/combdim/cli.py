"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a check fails (the
counterexample is printed), 2 for usage errors and exhausted budgets.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from . import linalg as la
from .cyclic_graph import CTriple, cdim, fcdim, fundamental_failure, gamma, gamma_full, socle_collapse
from .errors import BudgetExceeded, CombdimError, NotDecompositionIdeal, NotFundamental, SchemaError
from .linalg import DEFAULT_ENUM_BUDGET
from .serialize import dumps, graph_to_dict, module_loads, to_dot
from .towers import METRICS, AdmSeq, build, char2_report, module_Mi, module_Mn1i, search, verify_thm31
from .trivext import AModule, Algebra, Ideal, free_module, in_decomposition_domain
from .zdomain import PrincIdeal, ZTriple, gamma_z

DEFAULTS = {
    "enumeration_budget": DEFAULT_ENUM_BUDGET,
    "oracle_budget": 2 ** 16,
    "seed": 0,
    "preset": "free",
    "p": 2,
    "n": 2,
    "r": 1,
    "i": 1,
    "seq": "",
    "ideal": "soc",
    "sigma": "full",
    "depth": 4,
    "beam": 50,
    "metric": "tilde",
    "format": "csv",
}

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument parsing ------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--config", type=Path, help="JSON file whose keys set defaults for these flags")
    c.add_argument("--enumeration-budget", dest="enumeration_budget", type=int)
    c.add_argument("--oracle-budget", dest="oracle_budget", type=int)
    c.add_argument("--seed", type=int)
    return c


def _module_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--preset", choices=["free", "Mi", "Mn1i", "tower", "zdom"])
    sp.add_argument("--module", type=Path, help="load the module from JSON instead of a preset")
    sp.add_argument("--p", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--r", type=int, help="rank of the free module")
    sp.add_argument("--i", type=int, help="term for the Mi and Mn1i presets")
    sp.add_argument("--seq", help="space or comma separated admissible sequence for the tower preset")
    sp.add_argument("--ideal", help="zero, whole, soc or soc:v1;v2;... with comma separated entries")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="combdim", description="Graphs of cyclic modules and their invariants.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", parents=[common], help="build a graph and emit DOT and JSON")
    _module_flags(g)
    g.add_argument("--sigma", choices=["full", "tilde"])
    g.add_argument("--collapse", action="store_true", help="identify vertices with equal ideal images")
    g.add_argument("--vectors", help="integer vectors for the zdom preset, e.g. '1,0;2,0;0,1'")
    g.add_argument("--marked", help="marked vectors (subset of --vectors) for the zdom preset")
    g.add_argument("--m", type=int, default=1, help="generator of the ideal for the zdom preset")
    g.add_argument("--dot", type=Path, help="write DOT here instead of stdout")
    g.add_argument("--json", type=Path, help="also write JSON here")

    c = sub.add_parser("cdim", parents=[common], help="number of components of the full graph")
    _module_flags(c)

    f = sub.add_parser("fcdim", parents=[common], help="components met by a fundamental set")
    _module_flags(f)
    f.add_argument("--gens", help="generator vectors 'a;b;...'; defaults to the module's marked generators")

    v = sub.add_parser("verify-thm31", parents=[common], help="indecomposable-module construction report")
    v.add_argument("--p", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--json", type=Path)

    c2 = sub.add_parser("char2-check", parents=[common], help="socle orthogonality over F_2")
    c2.add_argument("--n", type=int, default=4)
    c2.add_argument("--depth", type=int, default=2)

    lc = sub.add_parser("lemma-check", parents=[common], help="run a named property suite")
    lc.add_argument("name", choices=checks.LEMMA_NAMES)
    lc.add_argument("--trials", type=int)

    oc = sub.add_parser("oracle-check", parents=[common], help="random bound and oracle soundness suite")
    oc.add_argument("--trials", type=int, default=200)
    oc.add_argument("--max-d", dest="max_d", type=int, default=8)

    s = sub.add_parser("search", parents=[common], help="beam search over admissible sequences")
    s.add_argument("--p", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--depth", type=int)
    s.add_argument("--beam", type=int)
    s.add_argument("--metric", choices=METRICS)
    s.add_argument("--format", choices=["csv", "json"])
    s.add_argument("--timing", action="store_true", help="fill the elapsed_ms column (not reproducible)")
    s.add_argument("--out", type=Path)
    return ap


def _apply_defaults(args: argparse.Namespace) -> None:
    config = {}
    if getattr(args, "config", None):
        try:
            config = json.loads(args.config.read_text())
        except (OSError, json.JSONDecodeError) as err:
            raise UsageError(f"cannot read config {args.config}: {err}") from None
        if not isinstance(config, dict):
            raise UsageError("config must be a JSON object")
    for key, value in vars(args).items():
        if value is None:
            if key in config:
                setattr(args, key, config[key])
            elif key in DEFAULTS:
                setattr(args, key, DEFAULTS[key])
    for key in ("enumeration_budget", "oracle_budget"):
        if getattr(args, key) is not None and getattr(args, key) <= 0:
            raise UsageError(f"{key.replace('_', '-')} must be positive")


# -- input helpers ---------------------------------------------------------


def _vectors(text: str, p: int | None = None) -> list[tuple[int, ...]]:
    try:
        vecs = [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError:
        raise UsageError(f"cannot parse vectors {text!r}") from None
    return [tuple(x % p for x in v) for v in vecs] if p else vecs


def _seq(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"cannot parse sequence {text!r}") from None


def _ideal(spec: str, A: Algebra) -> Ideal:
    if spec == "zero":
        return Ideal.zero(A)
    if spec == "whole":
        return Ideal.whole(A)
    if spec == "soc":
        return Ideal.soc(A)
    if spec.startswith("soc:"):
        vecs = _vectors(spec[4:], A.p)
        if any(len(v) != A.n for v in vecs):
            raise UsageError(f"socle directions must have length {A.n}")
        return Ideal.soc(A, la.span(vecs, A.n, A.p))
    raise UsageError(f"unknown ideal {spec!r}")


def _module(args) -> tuple[AModule, list[tuple[int, ...]] | None]:
    """The module and, for towers, its generating set Σ_s."""
    if args.module:
        try:
            return module_loads(args.module.read_text()), None
        except OSError as err:
            raise UsageError(str(err)) from None
    try:
        if args.preset == "free":
            return free_module(Algebra(args.p, args.n), args.r), None
        if args.preset == "Mi":
            return module_Mi(args.p, args.n, args.i), None
        if args.preset == "Mn1i":
            return module_Mn1i(args.p, args.n, args.i), None
        if args.preset == "tower":
            lvl = build(AdmSeq(args.p, args.n, _seq(args.seq)))
            return lvl.module, list(lvl.sigma)
    except ValueError as err:
        raise UsageError(str(err)) from None
    raise UsageError(f"preset {args.preset!r} does not define a module")


def _subset_sums(gens, p: int) -> list[tuple[int, ...]]:
    out = set()
    for mask in range(1, 2 ** len(gens)):
        chosen = [g for k, g in enumerate(gens) if mask >> k & 1]
        out.add(tuple(sum(col) % p for col in zip(*chosen)))
    return sorted(v for v in out if any(v))


# -- commands --------------------------------------------------------------


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8", newline="\n")


def cmd_graph(args) -> int:
    if args.preset == "zdom":
        vecs = _vectors(args.vectors or "1,0;2,0;0,1")
        if not vecs:
            raise UsageError("--vectors is empty")
        d = len(vecs[0])
        try:
            t = ZTriple(d, tuple(vecs), tuple(_vectors(args.marked or "")))
        except ValueError as err:
            raise UsageError(str(err)) from None
        G = gamma_z(t, PrincIdeal(args.m))
        doc = graph_to_dict(G)
    else:
        M, sigma = _module(args)
        I = _ideal(args.ideal, M.algebra)
        if args.sigma == "full":
            CG = gamma_full(M, I, args.enumeration_budget)
        else:
            gens = sigma if sigma is not None else M.generators
            if 2 ** len(gens) - 1 > args.enumeration_budget:
                raise BudgetExceeded("subset sums of the generators", 2 ** len(gens) - 1, args.enumeration_budget)
            CG = gamma(CTriple(M, tuple(_subset_sums(gens, M.p))), I)
        if args.collapse:
            G = socle_collapse(CG)
            doc = graph_to_dict(G)
        else:
            G = CG
            doc = graph_to_dict(CG)
    _emit(to_dot(G), args.dot)
    if args.json:
        _emit(dumps(doc), args.json)
    return EXIT_OK


def cmd_cdim(args) -> int:
    M, _ = _module(args)
    I = _ideal(args.ideal, M.algebra)
    print(cdim(M, I, args.enumeration_budget))
    return EXIT_OK


def cmd_fcdim(args) -> int:
    M, sigma = _module(args)
    I = _ideal(args.ideal, M.algebra)
    if args.gens:
        gens = _vectors(args.gens, M.p)
        if any(len(v) != M.d for v in gens):
            raise UsageError(f"generators must have length {M.d}")
    else:
        gens = sigma if sigma is not None else M.generators
    if not in_decomposition_domain(M, I):
        raise NotDecompositionIdeal(f"{I} is not a decomposition ideal of this module")
    G = gamma_full(M, I, args.enumeration_budget)
    why = fundamental_failure(M, I, gens, G)
    if why is not None:
        raise NotFundamental(why)
    print(fcdim(M, I, gens, G))
    return EXIT_OK


def _report_exit(rep, json_path: Path | None = None) -> int:
    print(rep.render())
    if json_path:
        _emit(json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n", json_path)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    p = args.p if args.p is not None else 3
    n = args.n if args.n is not None else 2
    try:
        rep = verify_thm31(p, n, args.enumeration_budget, args.oracle_budget)
    except ValueError as err:
        raise UsageError(str(err)) from None
    return _report_exit(rep, args.json)


def cmd_char2(args) -> int:
    return _report_exit(char2_report(args.n, args.depth))


def _results_exit(results) -> int:
    for r in results:
        print(r.render())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_lemma(args) -> int:
    return _results_exit(checks.run_lemma(args.name, args.trials, args.seed))


def cmd_oracle(args) -> int:
    bounds, sound, records = checks.bound_suite(args.trials, args.seed, args.max_d,
                                                oracle_budget=args.oracle_budget)
    certain = sum(r["certain"] for r in records)
    with_f = sum(r["fcdim"] is not None for r in records)
    bounds.details.append(f"{certain} certain decompositions, {with_f} modules with a fundamental set")
    return _results_exit([bounds, sound])


def cmd_search(args) -> int:
    try:
        rep = search(args.p, args.n, args.depth, args.beam, args.metric,
                     args.enumeration_budget, oracle_budget=args.oracle_budget)
    except ValueError as err:
        raise UsageError(str(err)) from None
    text = rep.to_csv(args.timing) if args.format == "csv" else rep.to_json(args.timing)
    _emit(text, args.out)
    return EXIT_OK


COMMANDS = {
    "graph": cmd_graph,
    "cdim": cmd_cdim,
    "fcdim": cmd_fcdim,
    "verify-thm31": cmd_verify,
    "char2-check": cmd_char2,
    "lemma-check": cmd_lemma,
    "oracle-check": cmd_oracle,
    "search": cmd_search,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        _apply_defaults(args)
        return COMMANDS[args.command](args)
    except BudgetExceeded as err:
        print(f"error: budget exceeded: {err.what} needs {err.required}, budget is {err.budget}; "
              f"rerun with --enumeration-budget {err.required}", file=sys.stderr)
        return EXIT_USAGE
    except (NotDecompositionIdeal, NotFundamental) as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_USAGE
    except SchemaError as err:
        print(f"error: invalid module file at {err.path}: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, CombdimError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
