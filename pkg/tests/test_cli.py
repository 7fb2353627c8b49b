import io
import contextlib
import json
import subprocess
import sys

import pytest

from isobaric import IsobaricPoly, gfp, glp
from isobaric.cli import main


def run(args):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(args))
    return code, out.getvalue(), err.getvalue()


def out_of(args):
    code, out, err = run(args)
    assert code == 0, f"exit {code}, stderr: {err!r}"
    return out


# -- polynomial verbs ------------------------------------------------------


def test_gfp_text():
    assert out_of(["gfp", "--k", "3", "--n", "3"]) == "t1^3 + 2 t1 t2 + t3\n"
    # at k=2 the t3 term is out of range and drops
    assert out_of(["gfp", "--k", "2", "--n", "3"]) == "t1^3 + 2 t1 t2\n"


def test_glp_text():
    assert out_of(["glp", "--k", "2", "--n", "4"]) == "t1^4 + 4 t1^2 t2 + 2 t2^2\n"


def test_wip_weight_vector():
    got = out_of(["wip", "--weights", "2,5,7,11", "--k", "4", "--n", "4"])
    assert got == "2 t1^4 + 9 t1^2 t2 + 9 t1 t3 + 5 t2^2 + 11 t4\n"


def test_wip_id_weights_are_glp():
    assert out_of(["wip", "--weights", "id", "--k", "2", "--n", "3"]) == str(glp(2, 3)) + "\n"


def test_eval_option():
    # Fibonacci number 13 at t = (1, 1)
    assert out_of(["gfp", "--k", "2", "--n", "6", "--eval", "1,1"]) == "13\n"


def test_root_value_golden():
    got = out_of(["root-gfp", "--q", "1/2", "--k", "1", "--n", "2", "--eval", "1"])
    assert got == "3/8\n"


def test_root_polynomial():
    got = out_of(["root-gfp", "--q", "1/2", "--k", "2", "--n", "3"])
    assert got == "5/16 t1^3 + 3/4 t1 t2\n"


def test_root_methods_agree():
    outs = {
        method: out_of(["root-gfp", "--q", "-5/2", "--k", "2", "--n", "2", "--method", method])
        for method in ("formula", "det", "perm", "stirling")
    }
    assert set(outs.values()) == {"15/8 t1^2 - 5/2 t2\n"}


def test_root_wip_with_weights():
    got = out_of(["root-wip", "--weights", "3,1,4", "--k", "3", "--n", "2", "--q", "1/2"])
    assert got == "3/8 t1^2 + 1/2 t2\n"


def test_conv_halves_make_whole():
    got = out_of(["conv", "--q1", "1/2", "--q2", "1/2", "--k", "2", "--n", "3"])
    assert got == str(gfp(2, 3)) + "\n"


# -- hessenberg verb -------------------------------------------------------


def test_hessenberg_grid_and_value():
    got = out_of(["hessenberg", "--weights", "1,1", "--k", "2", "--n", "3"])
    assert got == (
        "t1  -1   0\n"
        "t2  t1  -1\n"
        " 0  t2  t1\n"
        "value: t1^3 + 2 t1 t2\n"
    )


def test_hessenberg_plus_sign_with_id_weights():
    got = out_of(["hessenberg", "--weights", "id", "--k", "2", "--n", "3", "--sign", "plus"])
    assert got.endswith("value: t1^3 + 3 t1 t2\n")
    assert "2 t2" in got  # weighted last row


# -- window verbs ----------------------------------------------------------


def test_companion_fibonacci_rows():
    got = out_of(["companion", "--core", "1,1", "--rows", "0..6"])
    assert got == (
        "row 0:  0   1\n"
        "row 1:  1   1\n"
        "row 2:  1   2\n"
        "row 3:  2   3\n"
        "row 4:  3   5\n"
        "row 5:  5   8\n"
        "row 6:  8  13\n"
    )


def test_companion_negative_rows():
    got = out_of(["companion", "--core", "1,1", "--rows", "-2..2"])
    assert got.splitlines()[0] == "row -2:  -1  1"
    assert got.splitlines()[1] == "row -1:   1  0"


def test_companion_symbolic_rows():
    got = out_of(["companion", "--k", "2", "--rows", "0..3"])
    lines = got.splitlines()
    assert lines[2].endswith("t1^2 + t2")
    assert lines[3].endswith("t1^3 + 2 t1 t2")


def test_different_lucas_rows():
    got = out_of(["different", "--core", "1,1", "--rows", "0..4"])
    rightmost = [line.split()[-1] for line in got.splitlines()]
    assert rightmost == ["2", "1", "3", "4", "7"]


def test_different_det_numeric():
    assert out_of(["different", "--core", "1,1", "--det"]) == "det: -5\n"


def test_different_det_symbolic():
    assert out_of(["different", "--k", "2", "--det"]) == "det: -t1^2 - 4 t2\n"


def test_different_symbolic_window():
    got = out_of(["different", "--k", "3", "--rows", "0..2"])
    assert got == (
        "row 0:    -t2         -2 t1            3\n"
        "row 1:   3 t3          2 t2           t1\n"
        "row 2:  t1 t3  t1 t2 + 3 t3  t1^2 + 2 t2\n"
    )


# -- multiplicative verbs --------------------------------------------------


def test_mf_values():
    assert out_of(["mf", "--fn", "zeta", "--p", "2", "--N", "5"]) == "1,1,1,1,1,1\n"
    assert out_of(["mf", "--fn", "phi", "--p", "3", "--N", "4"]) == "1,2,6,18,54\n"


def test_mf_root_values():
    got = out_of(["mf-root", "--fn", "zeta", "--p", "2", "--N", "4", "--q", "1/2"])
    assert got == "1,1/2,3/8,5/16,35/128\n"


def test_mf_root_verify_pass():
    code, out, err = run(["mf-root", "--fn", "tau", "--p", "2", "--N", "4", "--q", "1/2", "--verify", "2"])
    assert code == 0
    assert out.endswith("verify: PASS\n")


def test_mf_root_verify_fail_exits_3():
    code, out, err = run(["mf-root", "--fn", "zeta", "--p", "2", "--N", "4", "--q", "1/2", "--verify", "3"])
    assert code == 3
    assert out.endswith("verify: FAIL\n")


# -- verify verb -----------------------------------------------------------


def test_verify_single_suite():
    code, out, err = run(["verify", "--suite", "partitions", "--max-n", "5"])
    assert code == 0
    assert out == "PASS partitions\n"


def test_verify_all_suites():
    code, out, err = run(["verify", "--suite", "all", "--max-n", "4"])
    assert code == 0
    assert out.splitlines() == [
        "PASS partitions",
        "PASS hessenberg",
        "PASS roots",
        "PASS companion",
        "PASS mf",
    ]


# -- json format -----------------------------------------------------------


def test_json_polynomial_round_trips():
    got = json.loads(out_of(["gfp", "--k", "3", "--n", "3", "--format", "json"]))
    assert got["n"] == 3 and got["k"] == 3
    assert IsobaricPoly.from_json_dict(got) == gfp(3, 3)
    coeffs = {tuple(t["alpha"]): t["coeff"] for t in got["terms"]}
    assert coeffs == {(3, 0, 0): "1", (1, 1, 0): "2", (0, 0, 1): "1"}


def test_json_hessenberg_schema():
    got = json.loads(out_of(["hessenberg", "--weights", "1,1", "--k", "2", "--n", "2", "--format", "json"]))
    m = got["matrix"]
    assert m["n"] == 2 and m["super"] == -1
    assert m["cells"][0][1] == {"coeff": "-1", "t": None}
    assert m["cells"][1][0] == {"coeff": "1", "t": 2}
    assert IsobaricPoly.from_json_dict(got["value"]) == gfp(2, 2)


def test_json_window():
    got = json.loads(out_of(["companion", "--core", "1,1", "--rows", "0..2", "--format", "json"]))
    assert got["k"] == 2 and got["n_lo"] == 0 and got["n_hi"] == 2
    assert [r["cells"] for r in got["rows"]] == [["0", "1"], ["1", "1"], ["1", "2"]]


def test_json_mf():
    got = json.loads(out_of(["mf", "--fn", "mobius", "--p", "2", "--N", "3", "--format", "json"]))
    assert got == {"fn": "mobius", "p": 2, "values": ["1", "-1", "0", "0"]}


def test_json_scalar_value():
    got = json.loads(out_of(["root-gfp", "--q", "1/2", "--k", "1", "--n", "2", "--eval", "1", "--format", "json"]))
    assert got == {"value": "3/8"}


def test_json_verify_report():
    code, out, err = run(["verify", "--suite", "mf", "--max-n", "4", "--format", "json"])
    assert code == 0
    got = json.loads(out)
    assert got == {"results": [{"suite": "mf", "ok": True, "detail": ""}]}


def test_json_mf_root_embeds_verdict():
    code, out, err = run(
        ["mf-root", "--fn", "zeta", "--p", "2", "--N", "3", "--q", "1/2", "--verify", "3", "--format", "json"]
    )
    assert code == 3
    assert json.loads(out)["verify"] == "FAIL"


# -- exit codes ------------------------------------------------------------


def test_usage_errors_exit_1():
    for args in (["frobnicate"], ["gfp"], ["companion", "--core", "1,1", "--rows", "nonsense"]):
        code, out, err = run(args)
        assert code == 1, args
        assert err.startswith("usage error:")


def test_domain_errors_exit_2():
    for args in (
        ["gfp", "--k", "0", "--n", "3"],
        ["root-gfp", "--q", "0", "--k", "2", "--n", "2", "--method", "stirling"],
        ["companion", "--core", "1,0", "--rows", "-3..0"],
        ["mf", "--fn", "nope", "--p", "2", "--N", "3"],
        ["mf", "--fn", "zeta", "--p", "1", "--N", "3"],
        ["companion", "--core", "1,1", "--k", "3", "--rows", "0..2"],
    ):
        code, out, err = run(args)
        assert code == 2, args
        assert err.startswith("error:")


def test_help_exits_0():
    code, out, err = run(["--help"])
    assert code == 0


# -- process-level behavior ------------------------------------------------


def test_module_invocation_byte_identical():
    cmd = [sys.executable, "-m", "isobaric.cli", "different", "--k", "3", "--rows", "0..2"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout.decode() == out_of(["different", "--k", "3", "--rows", "0..2"])


def test_negative_row_range_from_shell():
    cmd = [sys.executable, "-m", "isobaric.cli", "companion", "--core", "1,1", "--rows", "-2..2"]
    proc = subprocess.run(cmd, capture_output=True)
    assert proc.returncode == 0
    assert proc.stdout.decode().splitlines()[0] == "row -2:  -1  1"
