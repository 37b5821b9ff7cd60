import json
import subprocess
import sys

import pytest

from threeiet.cli import main
from threeiet.morphism import SIGMA01

EPS = ["--eps", "3/2-1/2*sqrt(5)", "--l", "1/2+1/10*sqrt(5)", "--c", "-1/3"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    return code, json.loads(out)


def test_ternarize_words(capsys):
    assert run(capsys, "ternarize-words", "0100101", "0101001")[:2] == (0, "ACABAC")


def test_ternarize_words_not_amicable(capsys):
    code, out, err = run(capsys, "ternarize-words", "10", "01")
    assert code == 3 and not out and "NotAmicable" in err


def test_amicable_verdicts(capsys):
    assert run(capsys, "amicable", "01", "10")[:2] == (0, "true")
    assert run(capsys, "amicable", "10", "01")[:2] == (1, "false")


def test_words_from_file(capsys, tmp_path):
    f = tmp_path / "u.txt"
    f.write_text("0100\n101\n")
    assert run(capsys, "ternarize-words", f"@{f}", "0101001")[:2] == (0, "ACABAC")
    assert run(capsys, "ternarize-words", f"@{tmp_path / 'missing'}", "0")[0] == 2


def test_gen3iet(capsys):
    assert run(capsys, "gen3iet", *EPS, "--from", "0", "--to", "8")[:2] == (0, "BCBCACBCB")
    assert run(capsys, "gen3iet", *EPS, "--from", "-3", "--to", "8")[1] == "CAC|BCBCACBCB"


def test_gensturm(capsys):
    code, out, _ = run(capsys, "gensturm", "--alpha", "3/2-1/2*sqrt(5)", "--beta", "1/3", "--to", "9")
    # sigma01 of the 3iet coding BCBCACBCB...
    assert code == 0 and out == SIGMA01("BCBCACBCB")[:10] == "0110110101"


def test_complexity(capsys):
    code, out, _ = run(capsys, "complexity", *EPS, "--half", "4000")
    assert code == 0
    assert out.splitlines() == [" ".join(str(2 * n + 1) for n in range(1, 16)), "threeiet_consistent"]
    assert run(capsys, "complexity", "0100101001001", "--nmax", "3")[1].splitlines()[1] == "sturmian_consistent"
    assert run(capsys, "complexity")[0] == 2


def test_ternarize_morph(capsys):
    assert run(capsys, "ternarize-morph", "--phi", "0:01,1:0", "--psi", "0:10,1:0")[:2] == (0, "A:B,B:ACA,C:A")


def test_fixedpoint(capsys):
    assert run(capsys, "fixedpoint", "--morph", "0:01,1:0", "--len", "8")[1] == "01001010"
    code, data = run_json(capsys, "fixedpoint", "--phi", "0:01,1:101", "--psi", "0:10,1:101", "--len", "20")
    assert code == 0 and data["result"].startswith("CACBCAC")
    assert data["witnesses"] == {"eta": "A:B,B:BCB,C:CAC", "case": "A", "seed": "C"}
    assert run(capsys, "fixedpoint", "--morph", "0:10,1:0")[0] == 3
    assert run(capsys, "fixedpoint")[0] == 2


def test_certify_sturm(capsys):
    code, out, _ = run(capsys, "certify-sturm", "--alpha", "0+1/2*sqrt(2)", "--beta", "0")
    assert code == 0 and out.startswith("verdict: True") and "alpha_conj" in out
    code, out, _ = run(capsys, "certify-sturm", "--alpha", "1/2+1/10*sqrt(5)", "--beta", "0")
    assert code == 1 and "failed clause: sturm" in out
    assert run(capsys, "certify-sturm", "--alpha", "0+1/2*sqrt(2)", "--beta", "1")[0] == 3


def test_certify_3iet(capsys):
    code, data = run_json(capsys, "certify-3iet", *EPS)
    assert code == 0
    assert data["command"] == "certify-3iet"
    assert data["result"] == {"verdict": True, "failed_clause": None}
    assert data["witnesses"]["minus_c_conj"] == "1/3"
    assert data["witnesses"]["c_plus_l_conj"] == "1/6-1/10*sqrt(5)"


def test_matrix_check(capsys):
    code, out, _ = run(capsys, "matrix-check", "--eta", "A:B,B:BCB,C:CAC", "--eps", "3/2-1/2*sqrt(5)")
    assert code == 0 and "lam_conj" in out
    code, out, _ = run(capsys, "matrix-check", "--eta", "A:B,B:BCB,C:CAC", *EPS)
    assert code == 1 and "failed clause: lattice_c" in out
    silver = ["--eps", "2-1*sqrt(2)", "--l", "0+1/2*sqrt(2)", "--c", "1/2-1/2*sqrt(2)"]
    assert run(capsys, "matrix-check", "--eta", "A:ACAB,B:ACABBABB,C:ACABB", *silver)[0] == 0
    assert run(capsys, "matrix-check", "--eta", "A:AC,B:ABB,C:AB", *silver)[0] == 3
    with pytest.raises(SystemExit) as info:
        main(["matrix-check", "--eta", "A:B,B:BCB,C:CAC"])
    assert info.value.code == 2


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--eta", "A:B,B:BCB,C:CAC")
    assert code == 0
    assert out.splitlines()[:3] == ["power: 1", "phi: 0:01,1:101", "psi: 0:10,1:101"]
    assert run(capsys, "decompose", "--eta", "A:B,B:C,C:ABB")[0] == 3


def test_infer_eps(capsys):
    assert run(capsys, "infer-eps", "--eta", "A:B,B:BCB,C:CAC")[:2] == (0, "3/2-1/2*sqrt(5)")


def test_selfsim(capsys):
    code, data = run_json(capsys, "selfsim", "--eta", "A:B,B:BCB,C:CAC")
    assert code == 0 and data["result"] == "A:B,B:BCB,C:CAC"
    assert data["witnesses"]["lam"] == "3/2+1/2*sqrt(5)"
    code, data = run_json(capsys, "selfsim", "--eta", "A:AC,B:ABB,C:AB", "--power", "2", "--len", "600")
    assert code == 0 and data["result"] == "A:ACAB,B:ACABBABB,C:ACABB"


def test_selfsim_dump(capsys):
    code, out, _ = run(capsys, "selfsim", "--eta", "A:B,B:BCB,C:CAC", "--len", "3", "--dump")
    assert code == 0
    assert out.splitlines()[1].split("\t")[:2] == ["1", "3/2+1/2*sqrt(5)"]


def test_usage_errors(capsys):
    assert run(capsys, "gen3iet", "--eps", "3/2-1/2*sqrt(x)", "--l", "1", "--c", "0")[0] == 2
    assert run(capsys, "decompose", "--eta", "A:B,B:BCB")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_invalid_params_are_domain_errors(capsys):
    assert run(capsys, "gen3iet", "--eps", "1/2", "--l", "3/4", "--c", "0")[0] == 3


def test_json_inputs_round_trip(capsys):
    _, first = run_json(capsys, "certify-3iet", *EPS)
    inputs = first["inputs"]
    _, second = run_json(capsys, "certify-3iet", "--eps", inputs["eps"], "--l", inputs["l"], "--c", inputs["c"])
    assert first == second


def test_deterministic_subprocess():
    cmd = [sys.executable, "-m", "threeiet", "gen3iet", *EPS, "--from", "-50", "--to", "50"]
    outs = {subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1
