"""End-to-end CLI checks: schemas, exit codes, determinism."""
import json

from relpoly.cli import main
from relpoly.graphs import fixture, to_graph6
from relpoly.poly import BivarPoly


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rel_example(capsys):
    code, out, _ = run_cli(capsys, "rel", "--graph", "fixture:cycle:3", "--k", "1", "--p", "1/2")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "1/2"


def test_rel_via_tutte(capsys):
    code, out, _ = run_cli(
        capsys, "rel", "--graph", "fixture:cycle:4", "--k", "1", "--p", "1/3", "--via-tutte"
    )
    payload = json.loads(out)
    assert code == 0
    assert payload["value"] == payload["via_tutte"]


def test_compare_tutte_figure1(capsys):
    code, out, _ = run_cli(
        capsys,
        "compare", "--g", "fixture:figure1_G", "--h", "fixture:figure1_H", "--order", "tutte",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "NegativeQuotient"
    quotient = BivarPoly.from_triples(payload["quotient"])
    assert quotient.coeff(0, 3) == -8
    assert quotient.coeff(1, 5) == 4


def test_compare_whitney_figure1(capsys):
    code, out, _ = run_cli(
        capsys,
        "compare", "--g", "fixture:figure1_G", "--h", "fixture:figure1_H", "--order", "whitney",
    )
    payload = json.loads(out)
    assert payload["verdict"] == "Dominates"
    assert all(int(c) > 0 for _, _, c in payload["quotient"])


def test_poly_methods_agree(capsys):
    _, out_dc, _ = run_cli(capsys, "poly", "--graph", "fixture:cycle:4", "--tutte")
    _, out_exp, _ = run_cli(
        capsys, "poly", "--graph", "fixture:cycle:4", "--tutte", "--method", "expansion"
    )
    assert json.loads(out_dc)["terms"] == json.loads(out_exp)["terms"]
    _, out_w, _ = run_cli(capsys, "poly", "--graph", "fixture:cycle:3", "--whitney")
    assert json.loads(out_w)["terms"] == [[0, 0, "3"], [0, 1, "1"], [1, 0, "3"], [2, 0, "1"]]


def test_counts_schema(capsys):
    code, out, _ = run_cli(capsys, "counts", "--graph", "fixture:cycle:3")
    payload = json.loads(out)
    assert payload["mu"] == ["1", "3", "0", "0"]
    assert payload["t"] == ["3", "3", "1"]
    assert payload["lambda"] == [2, 3, None]
    assert payload["table"]["counts"][0] == ["0", "0", "1"]


def test_scan_c44(capsys, tmp_path):
    csv_path = tmp_path / "digest.csv"
    code, out, _ = run_cli(
        capsys, "scan", "--n", "4", "--m", "4", "--csv", str(csv_path)
    )
    assert code == 0
    payload = json.loads(out)
    assert len(payload["members"]) == 2
    assert payload["theorem2_check"] is True
    assert payload["summary"]["whitney_max"] == 1
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0].startswith("graph6,strong")
    assert len(lines) == 3


def test_scan_limit_marks_partial(capsys):
    _, out, _ = run_cli(capsys, "scan", "--n", "5", "--m", "6", "--limit", "2")
    payload = json.loads(out)
    assert payload["partial"] is True
    assert len(payload["members"]) == 2

    code, _, err = run_cli(capsys, "scan", "--n", "5", "--m", "6", "--limit", "0")
    assert code == 2
    assert json.loads(err)["error"] == "usage"


def test_scan_full_and_memo_cap_do_not_change_results(capsys):
    _, base, _ = run_cli(capsys, "scan", "--n", "5", "--m", "6")
    _, full, _ = run_cli(capsys, "scan", "--n", "5", "--m", "6", "--full")
    _, capped, _ = run_cli(capsys, "scan", "--n", "5", "--m", "6", "--memo-cap", "5")
    assert base == full == capped


def test_certify_maximum_and_expect_flag(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--graph", "fixture:cycle:4", "--n", "4", "--m", "4",
        "--order", "whitney", "--expect-maximum",
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "Maximum"

    code, out, _ = run_cli(
        capsys, "certify", "--graph", "g6:CN", "--n", "4", "--m", "4",
        "--order", "whitney", "--expect-maximum",
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "Counterexample"
    assert len(payload["counterexamples"]) == 1


def test_certify_full_collects_all(capsys):
    code, out, _ = run_cli(
        capsys, "certify", "--graph", "g6:CN", "--n", "4", "--m", "4", "--full"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["checked"] == 2


def test_mc_cross_check_exit_codes(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--graph", "fixture:cycle:3", "--k", "1", "--p", "1/2",
        "--trials", "20000", "--seed", "3", "--cross-check",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["exact"] == "1/2"


def test_graph_sources(capsys, tmp_path):
    edge_file = tmp_path / "triangle.txt"
    edge_file.write_text("3 3\n0 1\n1 2\n0 2\n")
    _, out_file, _ = run_cli(capsys, "counts", "--graph", str(edge_file))
    _, out_fixture, _ = run_cli(capsys, "counts", "--graph", "fixture:cycle:3")
    g6 = to_graph6(fixture("cycle", 3))
    _, out_g6, _ = run_cli(capsys, "counts", "--graph", f"g6:{g6}")
    assert out_file == out_fixture == out_g6


def test_usage_errors_are_json_on_stderr(capsys):
    code, out, err = run_cli(capsys, "rel", "--graph", "fixture:cycle:3", "--k", "1", "--p", "half")
    assert code == 2 and not out
    assert json.loads(err)["error"] == "usage"

    code, _, err = run_cli(capsys, "counts", "--graph", "missing_file.txt")
    assert code == 2
    assert json.loads(err)["error"] == "parse"

    code, _, err = run_cli(capsys, "rel", "--graph", "g6:A_")  # missing required args
    assert code == 2
    assert json.loads(err)["error"] == "usage"


def test_out_of_range_k_is_usage_error(capsys):
    code, _, err = run_cli(
        capsys, "rel", "--graph", "fixture:cycle:3", "--k", "9", "--p", "1/2"
    )
    assert code == 2
    assert json.loads(err)["error"] == "parse"


def test_certify_dimension_mismatch(capsys):
    code, _, err = run_cli(
        capsys, "certify", "--graph", "fixture:cycle:3", "--n", "4", "--m", "4"
    )
    assert code == 2
    assert json.loads(err)["error"] == "parse"


def test_budget_refusal_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "poly", "--graph", "fixture:complete:8", "--method", "expansion"
    )
    assert code == 3
    assert json.loads(err)["error"] == "budget"

    code, _, err = run_cli(capsys, "scan", "--n", "10", "--m", "9")
    assert code == 3


def test_disconnected_input_error(capsys):
    # "C`" is the disconnected graph on 4 vertices with edges (0,1), (2,3);
    # the count-table route requires a connected graph and must refuse cleanly
    code, out, err = run_cli(capsys, "rel", "--graph", "g6:C`", "--k", "1", "--p", "1/2")
    assert code == 2 and not out
    assert json.loads(err)["error"] in ("input", "parse")


def test_output_is_byte_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "counts", "--graph", "fixture:figure1_G")
    _, out2, _ = run_cli(capsys, "counts", "--graph", "fixture:figure1_G")
    assert out1 == out2
    _, scan1, _ = run_cli(capsys, "scan", "--n", "4", "--m", "4")
    _, scan2, _ = run_cli(capsys, "scan", "--n", "4", "--m", "4")
    assert scan1 == scan2
