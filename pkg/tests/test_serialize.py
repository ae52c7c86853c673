import json
import random

import pytest
from hypothesis import given, strategies as st

from combdim.checks import field_triple, random_domain_module
from combdim.cyclic_graph import gamma, gamma_full
from combdim.errors import SchemaError
from combdim.serialize import (GRAPH_SCHEMA, graph_from_dict, graph_to_dict, module_dumps, module_from_dict,
                               module_loads, module_to_dict, to_dot, validate)
from combdim.trivext import Algebra, Ideal, free_module


def test_module_round_trip():
    M = free_module(Algebra(2, 2), 1)
    assert module_loads(module_dumps(M)) == M


@given(st.integers(0, 10 ** 6))
def test_random_module_round_trip(seed):
    M = random_domain_module(random.Random(seed), 3, 6)
    assert module_loads(module_dumps(M)) == M


def test_discrete_example_graph_validates():
    G = gamma(field_triple(2, 2, [(1, 0), (0, 1), (1, 1)]), Ideal.whole(Algebra(2, 0)))
    doc = graph_to_dict(G)
    validate(doc, GRAPH_SCHEMA)
    H, reps = graph_from_dict(doc)
    assert len(H) == 3 and not H.edges and sorted(reps) == [(0, 1), (1, 0), (1, 1)]


def test_graph_round_trip_keeps_edges():
    A = Algebra(2, 2)
    G = gamma_full(free_module(A, 2), Ideal.soc(A))
    H, _ = graph_from_dict(json.loads(json.dumps(graph_to_dict(G))))
    assert H.same_labelled(G.to_graph())


def test_square_zero_violation_rejected():
    doc = {"p": 2, "n": 2, "d": 2, "T": [[[0, 0], [1, 0]], [[0, 1], [0, 0]]]}
    with pytest.raises(SchemaError) as info:
        module_from_dict(doc)
    assert info.value.path == "$"


def test_schema_errors_have_paths():
    with pytest.raises(SchemaError) as info:
        module_from_dict({"p": 2, "n": 1, "d": 1, "T": [[["x"]]]})
    assert info.value.path == "$.T[0][0][0]"
    with pytest.raises(SchemaError) as info:
        module_from_dict({"p": 2, "n": 1, "d": 2, "T": [[[0, 0]]]})
    assert info.value.path == "$.T[0]"
    with pytest.raises(SchemaError):
        module_loads("{not json")
    with pytest.raises(SchemaError) as info:
        graph_from_dict({"vertices": [{"basis": [], "rep": []}], "edges": [[0, 3]], "marked": []})
    assert info.value.path == "$.edges[0]"


def test_dot_is_canonical():
    A = Algebra(2, 2)
    G = gamma_full(free_module(A, 2), Ideal.soc(A))
    dot = to_dot(G)
    assert dot == to_dot(G)
    lines = dot.splitlines()
    assert lines[0] == "graph G {" and lines[-1] == "}"
    edges = [ln for ln in lines if "--" in ln]
    keys = [tuple(int(x.strip(" v;")) for x in ln.split("--")) for ln in edges]
    assert keys == sorted(keys)
