import json

import pytest

from chowtaut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    assert len(out.strip().splitlines()) == 19
    assert "1.22" in out


def test_list_json_round_trip(capsys):
    code, out, _ = run(capsys, "list", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 19


def test_get(capsys):
    code, out, _ = run(capsys, "get", "2.2")
    assert code == 0
    rec = json.loads(out)
    assert rec["degree"] == 2 and rec["h12"] == 10

def test_get_unknown_label(capsys):
    code, _, err = run(capsys, "get", "nope")
    assert code == 2
    assert "error" in json.loads(err)


def test_dims_json(capsys, tmp_path):
    code, out, _ = run(capsys, "dims", "--d", "2", "--b", "1", "--m", "2",
                       "--json", "--cache-dir", str(tmp_path))
    assert code == 0
    assert json.loads(out) == [1, 2, 3, 5, 3, 2, 1]


def test_dims_single_codim_no_cache(capsys):
    code, out, _ = run(capsys, "dims", "--d", "2", "--b", "1", "--m", "2",
                       "--codim", "3", "--json", "--no-cache")
    assert code == 0
    assert json.loads(out) == 5


def test_verify_ck_by_label(capsys):
    code, out, _ = run(capsys, "verify-ck", "--label", "2.3")
    assert code == 0
    cert = json.loads(out)
    assert cert["passed"] and cert["params"] == {"d": 3, "b": 5, "label": "2.3"}
    assert cert["signs"] == {"eps2": -1, "eps3": 1, "eps4_mode": "plain-sum"}


def test_verify_mck_by_params(capsys):
    code, out, _ = run(capsys, "verify-mck", "--d", "2", "--b", "1")
    assert code == 0
    cert = json.loads(out)
    assert cert["passed"] and cert["involution"] is True
    assert len(cert["mck"]) == 343
    nonzero = [e for e in cert["mck"] if not e[3]]
    assert all(i + j == k for i, j, k, _ in nonzero)


def test_verify_mck_label(capsys):
    code, out, _ = run(capsys, "verify-mck", "--label", "2.3")
    assert code == 0
    assert json.loads(out)["passed"]


def test_verify_requires_params(capsys):
    code, _, err = run(capsys, "verify-ck")
    assert code == 2
    assert "error" in json.loads(err)


def test_oracle_compare(capsys):
    code, out, _ = run(capsys, "oracle-compare", "--b", "1", "--m", "2", "--d", "2")
    assert code == 0
    report = json.loads(out)
    assert report["passed"]
    assert [row[1] for row in report["rows"]] == [1, 2, 3, 5, 3, 2, 1]


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--m", "2", "--d", "2", "--b", "10",
                       "t_{1,2}*h_1")
    assert code == 0
    assert out.strip() == "0"


def test_reduce_paper_signs(capsys):
    _, out_adj, _ = run(capsys, "reduce", "--d", "2", "--b", "1", "--m", "2",
                        "t_{1,2}^2")
    _, out_paper, _ = run(capsys, "reduce", "--d", "2", "--b", "1", "--m", "2",
                          "--signs", "paper", "t_{1,2}^2")
    assert out_adj.strip() == "-2*o_1*o_2"
    assert out_paper.strip() == "2*o_1*o_2"


def test_reduce_syntax_error(capsys):
    code, _, err = run(capsys, "reduce", "--d", "2", "--b", "1", "--m", "2", "h_1 +")
    assert code == 2
    assert "error" in json.loads(err)


def test_adjudicate(capsys):
    code, out, _ = run(capsys, "adjudicate", "--b", "1")
    assert code == 0
    rep = json.loads(out)
    assert rep["eps2"] == -1 and rep["eps3"] == 1
    assert rep["sym_relation_verified"] is True


def test_adjudicate_randomized_stable(capsys):
    code, out, _ = run(capsys, "adjudicate", "--b", "1", "--randomized", "3")
    assert code == 0
    assert json.loads(out)["stable"] is True


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
