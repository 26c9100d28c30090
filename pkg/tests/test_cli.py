"""Command-line interface: subcommands, JSON output, exit codes."""
import json

from lmmt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_betti(capsys):
    code, out = run(capsys, "betti", "0,0,12")
    assert code == 0 and "1" in out


def test_betti_json(capsys):
    code, out = run(capsys, "--json", "betti", "0,0,12")
    assert code == 0
    assert json.loads(out)["betti"] == [1, 2, 2, 1]


def test_parse_round_trip(capsys):
    code, out = run(capsys, "--json", "parse", "0,12,2.13")
    assert code == 0
    assert json.loads(out)["algebra"]["dim"] == 3


def test_parse_with_param(capsys):
    code, out = run(capsys, "--json", "parse", "0,12,t.13", "--param", "t=2")
    assert code == 0


def test_parse_error_exit_code(capsys):
    assert main(["parse", "0,0,1$2"]) == 2


def test_jacobi_failure_exit_code(capsys):
    assert main(["betti", "0,12,13+23"]) == 1


def test_trivial(capsys):
    code, out = run(capsys, "--json", "trivial", "0,12,2.13")
    assert code == 0 and json.loads(out)["trivial"] is True
    code, out = run(capsys, "--json", "trivial", "0,0,12,13,14,15")
    assert code == 0 and json.loads(out)["trivial"] is False


def test_lie_kernel(capsys):
    code, out = run(capsys, "--json", "lie-kernel", "builtin:su2", "--degree", "3")
    assert code == 0
    assert json.loads(out)["dim"] == 1


def test_kunneth(capsys):
    code, out = run(capsys, "kunneth", "builtin:su2", "0,0,12")
    assert code == 0


def test_cartan_check(capsys):
    code, out = run(capsys, "--json", "cartan-check", "builtin:su2", "--samples", "10")
    assert code == 0


def test_verify_34(capsys):
    code, out = run(capsys, "--json", "verify-34", "0,12,2.13")
    assert code == 0
    assert json.loads(out)["agrees"] is True


def test_hs_page_codim2(capsys):
    code, out = run(capsys, "--json", "hs-page", "0,0,13+24,14",
                    "--ideal", "3,4", "--max-q", "2")
    assert code == 0


def test_invariant_cohomology(capsys):
    code, out = run(capsys, "--json", "invariant-cohomology", "0,12,2.13",
                    "--ideal", "2,3", "--degree", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim_H"] == 2 and payload["dim_invariant"] == 0


def test_search34(capsys):
    code, out = run(capsys, "--json", "search34", "--m", "2",
                    "--eig-range", "1..2")
    assert code == 0
    assert len(json.loads(out)["results"]) == 3


def test_stabilizer(capsys):
    code, out = run(capsys, "--json", "stabilizer", "--form", "g2")
    assert code == 0
    assert json.loads(out)["dim"] == 14


def test_stable_and_nondeg(capsys):
    code, out = run(capsys, "--json", "stable", "--form", "g2")
    assert code == 0
    code, out = run(capsys, "--json", "nondeg", "--form", "spin7")
    assert code == 0


def test_psu3_needs_field(capsys):
    assert main(["stabilizer", "--form", "psu3", "--field", "sqrt=2"]) == 2


def test_normal_form(capsys):
    code, out = run(capsys, "--json", "normal-form", "--form",
                    "symplectic(2,4)")
    assert code == 0
    assert json.loads(out)["k"] == 2


def test_construct_nondeg_impossible(capsys):
    code, out = run(capsys, "--json", "construct-nondeg", "3", "4")
    assert code == 0
    assert json.loads(out)["possible"] is False


def test_identities(capsys):
    code, out = run(capsys, "--json", "identities", "g2metric")
    assert code == 0


def test_mm_solve(capsys):
    code, out = run(capsys, "--json", "mm-solve", "0,0,12", "--degree", "2")
    assert code == 0


def test_orbit_check(capsys):
    form = json.dumps({"n": 3, "degree": 1, "terms": {"3": "1"}})
    code, out = run(capsys, "--json", "orbit-check", "0,0,12",
                    "--form", form)
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_verify_paper(capsys):
    code, out = run(capsys, "verify-paper")
    assert code == 0
    assert "12/12" in out
    assert out.count("[PASS]") == 12


def test_verify_paper_filter(capsys):
    code, out = run(capsys, "verify-paper", "--filter", "c03")
    assert code == 0 and "[PASS]" in out
