import json

import pytest

from strongprod.cli import build_parser, parse_graph, run
from strongprod.graph import isomorphic, named


def run_capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_graph_forms():
    assert isomorphic(parse_graph("named:C4"), named("C4"))
    assert isomorphic(parse_graph("named:K2,3"), named("K2,3"))
    assert isomorphic(parse_graph("named:cycle:5"), named("C5"))
    assert isomorphic(parse_graph("C~"), named("K4"))


def test_props_bull(capsys):
    code, out, _ = run_capture(capsys, ["props", "named:bull"])
    assert code == 0
    rec = json.loads(out)
    assert rec["alpha"] == 3
    assert rec["equimatchable"]["status"] == "false"


def test_product_c4_c4(capsys):
    code, out, _ = run_capture(capsys, ["product", "named:C4", "named:C4"])
    assert code == 0
    rec = json.loads(out)
    assert rec["gamma"] == 3 and rec["alpha"] == 4
    assert rec["well_dominated"]["status"] == "false"


def test_census_subcommand(capsys):
    code, out, _ = run_capture(capsys, ["census", "4"])
    assert code == 0
    lines = out.strip().split("\n")
    assert json.loads(lines[-1])["summary"]["total"] == 3


def test_verify_theorem3_exit_zero(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "theorem3", "--max-product", "9"])
    assert code == 0
    assert json.loads(out.strip().split("\n")[-1])["status"] == "pass"


def test_verify_respects_output_file(tmp_path, capsys):
    dest = tmp_path / "report.jsonl"
    code, out, _ = run_capture(
        capsys, ["verify", "theorem1", "--max-g", "3", "--max-h", "3",
                 "--output", str(dest)])
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text().strip().split("\n")[-1])["status"] == \
        "pass"


def test_conjecture_c4(capsys):
    code, out, _ = run_capture(capsys, ["conjecture", "named:C4"])
    assert code == 0
    rec = json.loads(out)
    assert rec["verdicts"]["witness_found"]
    assert isomorphic(parse_graph(rec["certificates"]["witness_g6"]),
                      named("C4"))


def test_witness_subcommand(capsys):
    code, out, _ = run_capture(capsys, ["witness", "mup-star-star", "2", "2"])
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_decompose_subcommand(capsys):
    code, out, _ = run_capture(capsys, ["decompose", "named:P3"])
    assert code == 0
    rec = json.loads(out)
    assert rec["decomposition"]["A"] == [1]
    assert rec["structure_ok"]


def test_usage_error_exit_2(capsys):
    code, _, err = run_capture(capsys, ["nosuch"])
    assert code == 2 and err


def test_parse_error_exit_2(capsys):
    code, _, err = run_capture(capsys, ["props", "!!notgraph6!!"])
    assert code == 2 and err


def test_time_budget_exit_3(capsys):
    code, out, _ = run_capture(
        capsys, ["verify", "theorem1", "--max-g", "4", "--max-h", "4",
                 "--time-budget-ms", "1"])
    assert code == 3


def test_cli_determinism(capsys):
    _, a, _ = run_capture(capsys, ["verify", "theorem2", "--max-g", "3",
                                   "--max-h", "3"])
    _, b, _ = run_capture(capsys, ["verify", "theorem2", "--max-g", "3",
                                   "--max-h", "3"])
    assert a == b


def test_jobs_flag_parses():
    args = build_parser().parse_args(
        ["verify", "theorem1", "--jobs", "2", "--max-g", "3", "--max-h", "3"])
    assert args.jobs == 2
