import json

import pytest

from combdim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cdim_free_rank_two(capsys):
    code, out, _ = run(capsys, "cdim", "--preset", "free", "--r", "2", "--p", "2", "--n", "2")
    assert code == 0 and out.strip() == "3"


def test_product_counterexample_exits_zero(capsys):
    code, out, _ = run(capsys, "lemma-check", "product-counterexample")
    assert code == 0 and "1 vertex" in out and "2 vertices" in out


def test_equalizer_counterexample(capsys):
    assert run(capsys, "lemma-check", "equalizer-counterexample")[0] == 0


def test_verify_reports_pair_failure(capsys):
    code, out, _ = run(capsys, "verify-thm31", "--p", "3", "--n", "2")
    assert code == 1
    assert "[FAIL] M_(1,1) pair" in out


def test_budget_error_prints_requirement(capsys):
    code, _, err = run(capsys, "cdim", "--preset", "tower", "--p", "3", "--n", "3", "--seq", "2 2 2")
    assert code == 2 and "1594323" in err


def test_usage_errors(capsys):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "cdim", "--preset", "Mi", "--p", "2", "--n", "2", "--i", "1")[0] == 2
    assert run(capsys, "cdim", "--ideal", "zero")[0] == 2
    assert run(capsys, "fcdim", "--gens", "0,1,0")[0] == 2


def test_fcdim_tower(capsys):
    code, out, _ = run(capsys, "fcdim", "--preset", "tower", "--p", "3", "--n", "3", "--seq", "2 1")
    assert code == 0 and out.strip() == "1"


def test_graph_dot_and_json(tmp_path, capsys):
    jpath = tmp_path / "g.json"
    code, out, _ = run(capsys, "graph", "--preset", "Mi", "--p", "3", "--n", "2", "--i", "1",
                       "--sigma", "tilde", "--json", str(jpath))
    assert code == 0 and out.startswith("graph G {") and out.count("--") == 3
    doc = json.loads(jpath.read_text())
    assert len(doc["vertices"]) == 3 and len(doc["edges"]) == 3


def test_graph_zdom(capsys):
    code, out, _ = run(capsys, "graph", "--preset", "zdom", "--m", "6")
    assert code == 0 and "v1 -- v2;" in out


def test_config_supplies_defaults(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"p": 2, "n": 2, "r": 2}))
    code, out, _ = run(capsys, "cdim", "--config", str(cfg))
    assert code == 0 and out.strip() == "3"


def test_module_file_input(tmp_path, capsys):
    from combdim.serialize import module_dumps
    from combdim.towers import module_Mi
    path = tmp_path / "m.json"
    path.write_text(module_dumps(module_Mi(3, 2, 1)))
    assert run(capsys, "cdim", "--module", str(path))[1].strip() == "1"
    path.write_text('{"p": 2, "n": 1, "d": 1, "T": [[[2]]]}')
    code, _, err = run(capsys, "cdim", "--module", str(path))
    assert code == 2 and "$.T[0]" in err


def test_search_rerun_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run(capsys, "search", "--p", "3", "--n", "3", "--depth", "2", "--beam", "4", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_char2_check(capsys):
    assert run(capsys, "char2-check")[0] == 0


def test_oracle_check_small(capsys):
    code, out, _ = run(capsys, "oracle-check", "--trials", "10")
    assert code == 0 and "oracle soundness" in out
