import csv
import json

import pytest

from ehclab.cli import cli_main, read_config
from ehclab.errors import ConfigError
from ehclab.exact import ell_valuation
from ehclab.instance import rank_one_instance
from ehclab.verify import SKIPPED, SUITES, RunConfig, all_passed, run, to_json

BLOCK_SUITES = ("conjecture-a", "conjecture-b-count", "dade-equivalence")


@pytest.fixture(scope="module")
def gl25_report():
    return run(RunConfig(gtype="GL", n=2, q=5, ell=3))


def test_verify_exit_zero(tmp_path, capsys):
    out = tmp_path / "report.json"
    rc = cli_main(["verify", "--group", "GL", "--n", "2", "--q", "5", "--ell", "3",
                   "--suite", "conjecture-a", "--out", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert set(rep) == {"instance", "suites", "versions"}
    assert rep["instance"] == {"type": "GL", "n": 2, "q": 5, "ell": 3, "e": 2}
    assert list(rep["suites"]) == ["conjecture-a"]
    for it in rep["suites"]["conjecture-a"]["items"]:
        assert {"block", "defect", "lhs", "rhs", "verdict"} <= set(it)


@pytest.mark.parametrize("argv", [
    ["verify", "--group", "GL", "--n", "2", "--q", "5", "--ell", "3", "--suite", "nonsense"],
    ["verify", "--group", "GL", "--n", "2", "--q", "5", "--ell", "5"],
    ["verify", "--group", "GL", "--n", "2", "--q", "6", "--ell", "5"],
    ["verify", "--group", "GL", "--n", "2", "--q", "5", "--ell", "4"],
    ["verify", "--group", "GL", "--n", "2", "--q", "5"],
    ["verify", "--config", "/nonexistent/ehc.cfg"],
])
def test_config_errors_exit_two(argv, capsys):
    assert cli_main(argv) == 2
    assert capsys.readouterr().err


def test_levis_command(capsys):
    assert cli_main(["levis", "--group", "GL", "--n", "3", "--q", "2", "--e", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("3 1-split Levi classes")


def test_other_commands(capsys):
    assert cli_main(["chains", "--group", "GL", "--n", "2", "--q", "5", "--e", "2"]) == 0
    assert cli_main(["table", "--group", "SL", "--n", "2", "--q", "4"]) == 0
    assert cli_main(["blocks", "--group", "GL", "--n", "2", "--q", "5", "--ell", "3"]) == 0
    out = capsys.readouterr().out
    assert "12 3-blocks of" in out


def test_determinism():
    cfg = dict(gtype="SL", n=2, q=4, ell=3)
    assert to_json(run(RunConfig(**cfg))) == to_json(run(RunConfig(**cfg)))


def test_json_has_no_timestamp(gl25_report):
    assert "time" not in to_json(gl25_report).lower()


def test_parallel_matches_sequential():
    cfg = dict(gtype="SL", n=2, q=5, ell=3, suites=("conjecture-a", "am-identity", "blocks"))
    assert to_json(run(RunConfig(**cfg, parallel=True))) == to_json(run(RunConfig(**cfg)))


def test_config_file_and_csv(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# instance\ngroup = SL\nn = 2\nq = 4\nell = 3\n"
                   "suite = conjecture-a\nsuite = am-identity\n")
    parsed = read_config(str(cfg))
    assert parsed["suites"] == ["conjecture-a", "am-identity"] and parsed["gtype"] == "SL"
    out, table = tmp_path / "r.json", tmp_path / "r.csv"
    assert cli_main(["verify", "--config", str(cfg), "--out", str(out), "--csv", str(table)]) == 0
    rep = json.loads(out.read_text())
    assert set(rep["suites"]) == {"conjecture-a", "am-identity"}
    rows = list(csv.DictReader(table.open()))
    assert len(rows) == sum(len(s["items"]) for s in rep["suites"].values())
    assert {"suite", "block", "defect", "lhs", "rhs", "verdict"} <= set(rows[0])


def test_bad_config_line(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("q: 5\n")
    with pytest.raises(ConfigError):
        read_config(str(cfg))
    cfg.write_text("colour = blue\n")
    with pytest.raises(ConfigError):
        read_config(str(cfg))


def test_all_suites_present_and_passing(gl25_report):
    assert list(gl25_report["suites"]) == list(SUITES)
    assert all_passed(gl25_report)
    for s in gl25_report["suites"].values():
        for it in s["items"]:
            assert it["verdict"] != SKIPPED or it.get("reason")


def _defect_counts(q, ell):
    """(block name, defect) -> number of characters, straight from the block partition."""
    inst = rank_one_instance("GL", q)
    bd = inst.block_data(ell)
    order = ell_valuation(inst.G.order, ell)
    counts = {}
    for B in bd.blocks:
        for i in B.members:
            d = order - ell_valuation(inst.degree(inst.match.generic_of[i]), ell)
            key = (f"B{B.index}", d)
            counts[key] = counts.get(key, 0) + 1
    return counts


def test_report_completeness(gl25_report):
    counts = _defect_counts(5, 3)
    blocks = {b for b, _ in counts}
    for name in BLOCK_SUITES:
        seen = {(it["block"], it["defect"]) for it in gl25_report["suites"][name]["items"]}
        assert set(counts) <= seen, name
    for name in ("am-identity", "theorem-a", "blocks"):
        assert blocks <= {it["block"] for it in gl25_report["suites"][name]["items"]}, name


def test_cross_suite_consistency(gl25_report):
    counts = _defect_counts(5, 3)
    for it in gl25_report["suites"]["conjecture-a"]["items"]:
        assert it["extra"]["k"] == counts.get((it["block"], it["defect"]), 0)
    for it in gl25_report["suites"]["blocks"]["items"]:
        assert it["lhs"] == sum(v for (b, _), v in counts.items() if b == it["block"])


def test_higher_rank_skips_rank_one_suites():
    rep = run(RunConfig(gtype="GL", n=3, q=2, ell=3))
    levis = rep["suites"]["levis"]["items"]
    assert levis and all(it["verdict"] in ("PASS", "EQUAL") for it in levis)
    for name in ("tables", "conjecture-a", "am-identity"):
        items = rep["suites"][name]["items"]
        assert items and all(it["verdict"] == SKIPPED and it.get("reason") for it in items)
    assert all_passed(rep)


def test_dade_skipped_when_centre_has_ell_part():
    rep = run(RunConfig(gtype="GL", n=2, q=4, ell=3, suites=("dade-equivalence",)))
    items = rep["suites"]["dade-equivalence"]["items"]
    assert items and all(it["verdict"] == SKIPPED for it in items)
    assert "O_ell" in items[0]["reason"]
