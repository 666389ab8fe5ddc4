import json

import pytest

from tightgonal.classify import ClassificationReport
from tightgonal.cli import main
from tightgonal.universality import Verdict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_truant_command(capsys):
    code, out, _ = run(capsys, "repr", "truant", "--m", "3", "--coeffs", "3,4,5,6", "--n", "3", "--bound", "1000")
    assert code == 0 and out.strip() == "16"


def test_verify_failure_is_not_an_error(capsys):
    code, out, _ = run(capsys, "verify", "--m", "3", "--coeffs", "3,4,5", "--n", "3")
    assert code == 0 and out.split() == ["FailedAt", "6"]


def test_verify_json_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "--coeffs", "3,3,4,5", "--n", "3", "--bound", "1000", "--format", "json")
    v = Verdict.from_dict(json.loads(out))
    assert code == 0 and v.ok and v.bound == 1000


def test_certificate_emit_and_check(capsys, tmp_path):
    code, out, _ = run(
        capsys, "verify", "--m", "5", "--generalized", "--coeffs", "7,8,9,10,11,12,13", "--n", "7",
        "--bound", "10000", "--certify", "--base-bound", "10000", "--format", "json",
    )
    cert = json.loads(out)["certificate"]
    assert code == 0 and cert["kind"] == "Lemma123"
    assert {"kind", "e1", "e2", "e3", "base_bound", "n", "vector"} <= set(cert)
    path = tmp_path / "cert.json"
    path.write_text(json.dumps(cert))
    assert run(capsys, "verify", "--check-cert", str(path))[0] == 0
    cert["e3"] = 0
    path.write_text(json.dumps(cert))
    code, out, _ = run(capsys, "verify", "--check-cert", str(path))
    assert code == 1 and "INVALID" in out


def test_classify_diff_paper(capsys):
    code, out, _ = run(capsys, "classify", "--m", "3", "--n", "3", "--bound", "10000", "--diff-paper")
    assert code == 0
    assert "12 new tight" in out and "0 missing, 0 unexpected" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--m", "3", "--n", "4", "--bound", "10000", "--format", "json")
    rep = ClassificationReport.from_dict(json.loads(out))
    assert code == 0 and [list(v) for v in rep.vector_list()] == [[4, 4, 5, 6, 7], [4, 5, 6, 7, 8]]


def test_classify_diff_mismatch_exits_1(capsys):
    # the search is cut off before any vector of the n=3 table is reachable
    code, out, _ = run(capsys, "classify", "--m", "3", "--n", "3", "--bound", "10000", "--depth-cap", "5", "--diff-paper")
    assert code == 1 and "DepthCapHit" in out


def test_classify_out_of_catalog(capsys):
    code, _, err = run(capsys, "classify", "--m", "3", "--n", "2", "--bound", "1000", "--diff-paper")
    assert code == 2 and "no classification" in err


def test_classify_exploratory_label(capsys):
    code, out, _ = run(capsys, "classify", "--m", "5", "--generalized", "--n", "5", "--bound", "10000")
    assert code == 0 and "unclassified by paper" in out


def test_repr_set_json_schema(capsys):
    code, out, _ = run(capsys, "repr", "set", "--coeffs", "5,7", "--bound", "30", "--witnesses", "--format", "json")
    d = json.loads(out)
    assert code == 0
    assert set(d) == {"coeffs", "m", "generalized", "bound", "missing", "witnesses"}
    assert d["witnesses"]["26"] == [1, 2]
    assert 1 in d["missing"] and 26 not in d["missing"]


def test_repr_witness(capsys):
    code, out, _ = run(capsys, "repr", "witness", "--coeffs", "3,4,5,6", "--target", "16")
    assert code == 0 and "not represented" in out


def test_gonal_commands(capsys):
    assert run(capsys, "gonal", "list", "--m", "5", "--generalized", "--bound", "12")[1].split() == ["0", "1", "2", "5", "7", "12"]
    code, out, _ = run(capsys, "gonal", "member", "--m", "5", "--generalized", "2", "--format", "json")
    assert json.loads(out) == {"m": 5, "generalized": True, "N": 2, "member": True, "index": -1}


def test_new_command(capsys):
    code, out, _ = run(capsys, "new", "--coeffs", "3,3,4,5", "--n", "3", "--bound", "10000")
    assert code == 0 and out.startswith("new")
    code, out, _ = run(capsys, "new", "--coeffs", "3,3,4,5,6", "--n", "3", "--bound", "10000")
    assert out.startswith("not new")


@pytest.mark.parametrize(
    "argv",
    [
        ["oracle", "residue", "--preset", "p113", "--bound", "5000"],
        ["oracle", "f346", "--bound", "5000"],
        ["oracle", "jones", "--k", "2", "--p", "3", "--nmax", "500"],
        ["oracle", "identity", "--name", "id-468", "--trials", "500"],
        ["oracle", "tables", "--bound", "5000"],
    ],
)
def test_oracle_commands_pass(capsys, argv):
    assert run(capsys, *argv)[0] == 0


def test_usage_errors(capsys):
    assert run(capsys, "repr", "set", "--generalized", "--coeffs", "1", "--bound", "5")[0] == 2
    assert run(capsys, "repr", "set", "--coeffs", "1,0", "--bound", "5")[0] == 2
    assert run(capsys, "verify", "--coeffs", "3,3,4,5", "--n", "3", "--bound", "4")[0] == 2
    assert run(capsys, "oracle", "jones", "--k", "2", "--p", "5")[0] == 2
    assert run(capsys, "classify", "--n", "3", "--threads", "0")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_limit_error_names_parameter(capsys):
    code, _, err = run(capsys, "repr", "set", "--coeffs", "1", "--bound", str(10**12))
    assert code == 2 and "bound" in err


def test_output_independent_of_threads(capsys):
    base = ["classify", "--m", "3", "--n", "3", "--bound", "10000", "--format", "json"]
    one = run(capsys, *base, "--threads", "1")[1]
    four = run(capsys, *base, "--threads", "4")[1]
    assert one == four
