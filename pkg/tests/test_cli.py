import json

import pytest
from click.testing import CliRunner

from crepant.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_table_cr_rank_two_text(runner):
    result = runner.invoke(main, ["table", "cr", "--n", "2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["e1 . e1 = [1/3*L]*e2",
                                          "e1 . e2 = 1/3*S",
                                          "e2 . e2 = [1/3*M]*e1"]


def test_table_qc_rank_one_symbolic(runner):
    result = runner.invoke(main, ["table", "qc", "--n", "1"])
    assert result.exit_code == 0
    assert "(4*d11)*K" in result.output


def test_table_qc_pole_diagnostic(runner):
    result = runner.invoke(main, ["table", "qc", "--n", "2",
                                  "--q", "e:1/2,e:1/2"])
    assert result.exit_code == 2
    doc = json.loads(result.output)
    assert doc["error"] == "pole" and (doc["mu"], doc["nu"]) == (1, 2)


def test_table_json_roundtrip_flag(runner):
    result = runner.invoke(main, ["table", "qc", "--n", "2",
                                  "--format", "json", "--check-roundtrip"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["kind"] == "quantum" and doc["n"] == 2


def test_table_rejects_float_q(runner):
    result = runner.invoke(main, ["table", "qc", "--n", "1",
                                  "--q", "0.5"])
    assert result.exit_code == 2


def test_output_determinism(runner):
    first = runner.invoke(main, ["table", "qc", "--n", "3",
                                 "--format", "json"])
    second = runner.invoke(main, ["table", "qc", "--n", "3",
                                  "--format", "json"])
    assert first.output == second.output


def test_verify_bgp_rank_two_passes(runner):
    result = runner.invoke(main, ["verify", "--n", "2", "--map", "bgp:1",
                                  "--q", "e:1/3,e:1/3"])
    assert result.exit_code == 0, result.output
    assert "PASS" in result.output


def test_verify_chtd_fails(runner):
    result = runner.invoke(main, ["verify", "--n", "2", "--map", "chtd",
                                  "--q", "e:1/3,e:1/3"])
    assert result.exit_code == 1
    assert "FAIL" in result.output and "nonzero difference" in result.output


def test_verify_rank_one(runner):
    result = runner.invoke(main, ["verify", "--n", "1", "--map", "bgp:1",
                                  "--q", "e:1/2"])
    assert result.exit_code == 0


def test_verify_pole_exit(runner):
    result = runner.invoke(main, ["verify", "--n", "2", "--map", "bgp:1",
                                  "--q", "e:1/2,e:1/2"])
    assert result.exit_code == 2


def test_verify_map_from_file(runner, tmp_path):
    from crepant.mckay import bgp_map

    path = tmp_path / "map.json"
    path.write_text(json.dumps(bgp_map(2, 1).to_json()))
    result = runner.invoke(main, ["verify", "--n", "2", "--map", str(path),
                                  "--q", "e:1/3,e:1/3"])
    assert result.exit_code == 0


def test_solve_rank_two_lists_both_tuples(runner):
    result = runner.invoke(main, ["solve", "--n", "2", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert len(doc) == 2
    assert all(set(sol) == {"a", "b", "q1", "q2"} for sol in doc)


def test_solve_rank_one(runner):
    result = runner.invoke(main, ["solve", "--n", "1"])
    assert result.exit_code == 0
    assert result.output.count("at q = -1") == 2


def test_scan_rank_three_report(runner):
    result = runner.invoke(main, ["scan", "--n", "3", "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert [r["m_root"] for r in doc] == [1, 3]
    assert all(r["status"] in ("pass", "fail", "pole") for r in doc)


def test_mckay_compare_resolution(runner):
    result = runner.invoke(main, ["mckay", "--n", "4",
                                  "--compare-resolution"])
    assert result.exit_code == 0
    assert "match: yes" in result.output


def test_mckay_static_group(runner):
    result = runner.invoke(main, ["mckay", "--group", "E_7",
                                  "--format", "json"])
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["aut"] == "1" and len(doc["vertices"]) == 7


def test_mckay_requires_exactly_one_selector(runner):
    assert runner.invoke(main, ["mckay"]).exit_code == 2
    assert runner.invoke(main, ["mckay", "--n", "2", "--group",
                                "D_4"]).exit_code == 2


def test_resolve_command(runner):
    result = runner.invoke(main, ["resolve", "--n", "5"])
    assert result.exit_code == 0
    assert "5 exceptional curves in 3 blow-up rounds" in result.output
    dot = runner.invoke(main, ["resolve", "--n", "3", "--format", "dot"])
    assert dot.output.startswith("graph resolution {")


def test_qc_table_evaluated_via_cli_matches_library(runner):
    from crepant.exactnum import root_of_unity
    from crepant.ringtables import qc_eval, qc_table, table_from_json

    result = runner.invoke(main, ["table", "qc", "--n", "2",
                                  "--q", "e:1/3,e:1/3", "--format", "json"])
    assert result.exit_code == 0
    z3 = root_of_unity(3, 1).lift(12)
    expected = qc_eval(qc_table(2), [z3, z3])
    assert table_from_json(json.loads(result.output)) == expected
