import json
import math
import subprocess
import sys

import pytest

from pathstruve import KStruveParams, eval_k_struve
from pathstruve.cli import dumps, main

LHS_TH1_PINNED = 0.01721945947573518743693692


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_struve_csv(capsys):
    code, out, _ = run(capsys, "eval-struve", "--k", "1", "--nu", "0", "--c", "0", "--x", "2")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header == "command,k,nu,c,x,tol,value,err_estimate,work"
    assert float(row.split(",")[6]) == pytest.approx(4 / math.pi, rel=1e-15)


def test_eval_struve_json_round_trip(capsys):
    code, out, _ = run(capsys, "eval-struve", "--k", "1", "--nu", "-0.5", "--c", "1", "--x", "1.5707963",
                       "--format", "json")
    rec = json.loads(out)
    assert rec["value"] == pytest.approx(2 / math.pi, rel=1e-7)
    # 17 significant digits reproduce the double exactly
    assert rec["value"] == eval_k_struve(KStruveParams(1, -0.5, 1), 1.5707963, 1e-10).value
    assert json.loads(dumps(rec)) == rec


def test_missing_flag_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval-struve", "--k", "1", "--nu", "0", "--c", "0"])
    assert info.value.code == 2


def test_invalid_struve_params_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval-struve", "--k", "1", "--nu", "-2", "--c", "0", "--x", "1"])
    assert info.value.code == 2


def test_struve_domain_error_exit_3(capsys):
    code, _, err = run(capsys, "eval-struve", "--k", "1", "--nu", "0.5", "--c", "1", "--x", "-1")
    assert code == 3 and "DomainError" in err


def test_eval_wright_e(capsys):
    code, out, _ = run(capsys, "eval-wright", "--spec", '{"upper":[[1,1]],"lower":[[1,1]]}', "--z", "1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(math.e, rel=1e-13)


def test_eval_wright_z_in_spec(capsys):
    code, out, _ = run(capsys, "eval-wright", "--spec", '{"upper":[[1,1]],"lower":[[2,1]],"z":1,"tol":1e-12}')
    assert code == 0
    assert float(out.splitlines()[1].rsplit(",", 3)[1]) == pytest.approx(math.e - 1, rel=1e-13)


def test_eval_wright_divergent_exit_3(capsys):
    code, _, err = run(capsys, "eval-wright", "--spec", '{"upper":[[1,3]],"lower":[[1,1]]}', "--z", "1")
    assert code == 3 and "ConvergenceConditionError" in err


def test_eval_wright_bad_json_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["eval-wright", "--spec", "{nope", "--z", "1"])
    assert info.value.code == 2


def test_pathway_power(capsys):
    code, out, _ = run(capsys, "pathway", "--family", "power", "--beta", "1", "--eta", "1", "--alpha", "0",
                       "--a", "1", "--x", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert rec["value"] == pytest.approx(2.0, rel=1e-13)
    assert rec["extra"]["closed_form"] == pytest.approx(2.0, rel=1e-15)
    assert rec["extra"]["rel_gap"] <= 1e-10


def test_pathway_struve_pinned(capsys):
    code, out, _ = run(capsys, "pathway", "--family", "struve", "--k", "1", "--nu", "1", "--c", "1", "--rho", "1",
                       "--eta", "1", "--alpha", "0", "--a", "1", "--x", "1", "--tol", "1e-12", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(LHS_TH1_PINNED, rel=1e-11)


def test_pathway_trig_family(capsys):
    code, out, _ = run(capsys, "pathway", "--family", "sin", "--gamma", "1", "--k", "1", "--rho", "1",
                       "--eta", "1", "--alpha", "0", "--a", "1", "--x", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(0.1585290151921034933474977, rel=1e-10)


def test_pathway_alpha_one_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["pathway", "--family", "power", "--beta", "1", "--eta", "1", "--alpha", "1", "--a", "1", "--x", "2"])
    assert info.value.code == 2


def test_pathway_power_needs_beta(capsys):
    with pytest.raises(SystemExit) as info:
        main(["pathway", "--family", "power", "--eta", "1", "--alpha", "0", "--a", "1", "--x", "2"])
    assert info.value.code == 2


def test_verify_th1(capsys):
    code, out, _ = run(capsys, "verify", "--case", "th1", "--format", "json")
    assert code == 0
    (rep,) = json.loads(out)
    assert rep["status"] == "CONFIRMED"


def test_verify_th4_table(capsys):
    code, out, _ = run(capsys, "verify", "--case", "th4")
    assert code == 0
    assert "PRINTED_MISMATCH" in out


def test_verify_all_has_ten_entries(verify_all_payload):
    assert verify_all_payload["exit"] == 0
    assert len(verify_all_payload["reports"]) == 10
    assert verify_all_payload["file"] == verify_all_payload["stdout"]
    for rep in verify_all_payload["reports"]:
        assert {"case", "grid", "max_rel_err_printed", "max_rel_err_corrected", "worst_point", "status"} <= set(rep)


def test_verify_bad_case_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--case", "th9"])
    assert info.value.code == 2


def test_module_entry_point():
    cp = subprocess.run([sys.executable, "-m", "pathstruve", "eval-struve", "--k", "2", "--nu", "1", "--c", "1",
                         "--x", "1.5", "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(cp.stdout)["value"] == pytest.approx(0.3333597668123423466801478, rel=1e-10)


def test_dumps_special_values():
    assert dumps({"a": [1.0, float("nan")], "b": None}) == '{"a": [1, NaN], "b": null}'
    assert json.loads(dumps(0.1)) == 0.1
