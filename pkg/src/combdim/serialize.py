"""JSON, DOT and schema handling for modules and graphs."""

from __future__ import annotations

import json
from typing import Any

import jsonschema

from .errors import SchemaError
from .graphs import Graph
from .linalg import FpMatrix
from .trivext import AModule, Algebra

MODULE_SCHEMA: dict = {
    "type": "object",
    "required": ["p", "n", "d", "T"],
    "additionalProperties": False,
    "properties": {
        "p": {"type": "integer", "minimum": 2},
        "n": {"type": "integer", "minimum": 0},
        "d": {"type": "integer", "minimum": 0},
        "T": {"type": "array", "items": {"type": "array", "items": {
            "type": "array", "items": {"type": "integer", "minimum": 0}}}},
        "generator_marks": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}

GRAPH_SCHEMA: dict = {
    "type": "object",
    "required": ["vertices", "edges", "marked"],
    "additionalProperties": False,
    "properties": {
        "vertices": {"type": "array", "items": {
            "type": "object",
            "required": ["basis", "rep"],
            "additionalProperties": False,
            "properties": {
                "basis": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
                "rep": {"type": "array", "items": {"type": "integer"}},
            },
        }},
        "edges": {"type": "array", "items": {
            "type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2}},
        "marked": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}


def _path(err: jsonschema.ValidationError) -> str:
    return "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in err.absolute_path)


def validate(doc: Any, schema: dict) -> None:
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as err:
        raise SchemaError(_path(err), err.message) from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


# -- modules ---------------------------------------------------------------


def module_to_dict(M: AModule) -> dict:
    return {"p": M.p, "n": M.n, "d": M.d,
            "T": [[list(r) for r in t.entries] for t in M.T],
            "generator_marks": list(M.generator_marks)}


def module_from_dict(doc: Any) -> AModule:
    validate(doc, MODULE_SCHEMA)
    p, n, d = doc["p"], doc["n"], doc["d"]
    if len(doc["T"]) != n:
        raise SchemaError("$.T", f"expected {n} action matrices, got {len(doc['T'])}")
    mats = []
    for k, t in enumerate(doc["T"]):
        if len(t) != d or any(len(r) != d for r in t):
            raise SchemaError(f"$.T[{k}]", f"expected a {d}x{d} matrix")
        if any(x >= p for r in t for x in r):
            raise SchemaError(f"$.T[{k}]", f"entries must lie in [0, {p})")
        mats.append(FpMatrix(p, d, d, tuple(tuple(r) for r in t)))
    try:
        return AModule(Algebra(p, n), d, tuple(mats), tuple(doc.get("generator_marks", ())))
    except ValueError as err:
        raise SchemaError("$", str(err)) from None


def module_dumps(M: AModule) -> str:
    return dumps(module_to_dict(M))


def module_loads(text: str) -> AModule:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError("$", f"invalid JSON: {err.msg}") from None
    return module_from_dict(doc)


# -- graphs ----------------------------------------------------------------


def graph_to_dict(G, reps=None) -> dict:
    """Accepts a CycGraph, or a generic Graph with optional representatives."""
    if isinstance(G, Graph):
        reps = reps if reps is not None else [_rep_of(lab) for lab in G.labels]
        verts = [{"basis": _as_basis(lab), "rep": list(r)} for lab, r in zip(G.labels, reps)]
        edges = sorted(G.edges)
    else:
        verts = [{"basis": [list(r) for r in U.basis], "rep": list(rep)} for U, rep in G.vertices]
        edges = G.edges
    return {"vertices": verts, "edges": [list(e) for e in edges], "marked": sorted(G.marked)}


def _as_basis(label) -> list[list[int]]:
    if isinstance(label, tuple) and label and all(isinstance(r, tuple) for r in label):
        if all(all(isinstance(x, int) for x in r) for r in label):
            return [list(r) for r in label]
    if isinstance(label, tuple) and all(isinstance(x, int) for x in label):
        return [list(label)]
    return []


def _rep_of(label) -> list[int]:
    b = _as_basis(label)
    return b[0] if b else []


def graph_from_dict(doc: Any) -> tuple[Graph, list[tuple[int, ...]]]:
    """The graph, labelled by vertex bases, and the vertex representatives."""
    validate(doc, GRAPH_SCHEMA)
    nv = len(doc["vertices"])
    for k, (i, j) in enumerate(doc["edges"]):
        if not (i < nv and j < nv and i != j):
            raise SchemaError(f"$.edges[{k}]", "edge endpoints must be distinct vertex indices")
    for k, m in enumerate(doc["marked"]):
        if m >= nv:
            raise SchemaError(f"$.marked[{k}]", "marked index out of range")
    labels = [tuple(tuple(r) for r in v["basis"]) for v in doc["vertices"]]
    try:
        G = Graph.build(labels, [tuple(e) for e in doc["edges"]], doc["marked"])
    except ValueError as err:
        raise SchemaError("$.vertices", str(err)) from None
    return G, [tuple(v["rep"]) for v in doc["vertices"]]


def _fmt_label(label) -> str:
    if isinstance(label, tuple) and all(isinstance(x, int) for x in label):
        return "".join(map(str, label)) if all(0 <= x < 10 for x in label) else ",".join(map(str, label))
    if isinstance(label, tuple):
        return "(" + " ".join(_fmt_label(x) for x in label) + ")"
    return str(label)


def to_dot(G, name: str = "G") -> str:
    """Canonical DOT: vertices in index order, edges sorted, loops omitted."""
    if isinstance(G, Graph):
        labels = [_fmt_label(lab) for lab in G.labels]
        edges = sorted(G.edges)
        comps = G.components()
    else:
        labels = [_fmt_label(rep) for _, rep in G.vertices]
        edges = G.edges
        comps = G.components()
    cid = {v: c for c, block in enumerate(comps) for v in block}
    out = [f"graph {name} {{"]
    for k, lab in enumerate(labels):
        attrs = [f'label="{lab}"', f"component={cid[k]}"]
        if k in G.marked:
            attrs.append("marked=true")
            attrs.append("style=filled")
        out.append(f"  v{k} [{', '.join(attrs)}];")
    for i, j in edges:
        out.append(f"  v{i} -- v{j};")
    out.append("}")
    return "\n".join(out) + "\n"
