"""The cnideal command line: subcommands, exit codes, and JSON output.

Runs the console entry point in-process via ``main(argv)`` for speed; one
smoke test goes through the installed script for the packaging path.
"""

from __future__ import annotations

import contextlib
import io
import json
import subprocess
import sys

import pytest

from cnideals.cli import main


def run_cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def chain2(tmp_path):
    """Edge-list file of the 2-link chain plus its certificate file."""
    graph = tmp_path / "chain2.edges"
    cert = tmp_path / "chain2.cert"
    code, _, _ = run_cli(
        "gen",
        "--family",
        "ni-chain",
        "--t",
        "2",
        "--out",
        str(graph),
        "--certificate-out",
        str(cert),
    )
    assert code == 0
    return graph, cert


@pytest.fixture
def k2(tmp_path):
    p = tmp_path / "k2.edges"
    p.write_text("1 2\n")
    return p


@pytest.fixture
def tri(tmp_path):
    p = tmp_path / "tri.edges"
    p.write_text("1 2\n2 3\n1 3\n")
    return p


class TestGen:
    def test_summary_line_and_file(self, tmp_path):
        out_path = tmp_path / "g.edges"
        code, out, _ = run_cli("gen", "--family", "ni-chain", "--t", "2", "--out", str(out_path))
        assert code == 0
        assert "24 vertices, 33 edges, diameter 13" in out
        assert out_path.exists()

    def test_round_trip_equals_construction(self, tmp_path):
        from cnideals import chain_ni, read_edge_list

        out_path = tmp_path / "g.edges"
        run_cli("gen", "--family", "ni-chain", "--t", "3", "--out", str(out_path))
        assert read_edge_list(out_path) == chain_ni(3)

    def test_json_mode(self, tmp_path):
        out_path = tmp_path / "g.edges"
        code, out, _ = run_cli(
            "gen", "--family", "edge-base", "--out", str(out_path), "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["vertices"] == 5 and data["edges"] == 5 and data["diameter"] == 3

    def test_invalid_t_exits_2(self, tmp_path):
        code, _, err = run_cli(
            "gen", "--family", "ni-chain", "--t", "0", "--out", str(tmp_path / "x")
        )
        assert code == 2
        assert "error" in err

    def test_certificate_only_for_ni_chain(self, tmp_path):
        code, _, err = run_cli(
            "gen",
            "--family",
            "edge-base",
            "--out",
            str(tmp_path / "g"),
            "--certificate-out",
            str(tmp_path / "c"),
        )
        assert code == 2
        assert "ni-chain" in err


class TestAss:
    def test_member_exits_0(self, tri):
        code, out, _ = run_cli("ass", str(tri), "--ideal", "edge", "--power", "2")
        assert code == 0
        assert "member: true" in out
        assert "witness: 1 2 3" in out

    def test_non_member_exits_1(self, k2):
        code, out, _ = run_cli("ass", str(k2), "--ideal", "ni", "--power", "2")
        assert code == 1
        assert "member: false" in out

    def test_json_output(self, tri):
        code, out, _ = run_cli(
            "ass", str(tri), "--ideal", "edge", "--power", "2", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert list(data) == ["power", "member", "strategy", "witness", "checks"]
        assert data["member"] is True
        assert data["strategy"] == "exact-colon"

    def test_certificate_strategy(self, chain2):
        graph, cert = chain2
        code, out, _ = run_cli(
            "ass",
            str(graph),
            "--ideal",
            "ni",
            "--power",
            "3",
            "--strategy",
            "certificate",
            "--certificate",
            str(cert),
        )
        assert code == 0
        assert "member: true" in out

    def test_certificate_strategy_requires_path(self, tri):
        code, _, err = run_cli(
            "ass", str(tri), "--ideal", "edge", "--power", "2", "--strategy", "certificate"
        )
        assert code == 2
        assert "--certificate" in err

    def test_witness_search_strategy(self, tri):
        code, out, _ = run_cli(
            "ass", str(tri), "--ideal", "edge", "--power", "2", "--strategy", "witness-search"
        )
        assert code == 0
        assert "witness-search" in out

    def test_cap_exhaustion_exits_2(self, tri):
        code, _, err = run_cli(
            "ass",
            str(tri),
            "--ideal",
            "edge",
            "--power",
            "3",
            "--cap-products",
            "5",
        )
        assert code == 2
        assert "infeasible" in err

    def test_missing_file_exits_2(self):
        code, _, err = run_cli("ass", "no-such-file", "--ideal", "ni", "--power", "2")
        assert code == 2
        assert "error" in err


class TestAudit:
    def test_member_bound_pass_exits_0(self, tri):
        code, out, _ = run_cli("audit", str(tri), "--ideal", "edge", "--power", "2")
        assert code == 0
        data = json.loads(out)
        assert data["bound_pass"] is True
        assert data["checks"]["odd_cycle_per_component"] is True

    def test_ni_report_fields(self, chain2):
        graph, _ = chain2
        code, out, _ = run_cli("audit", str(graph), "--ideal", "ni", "--power", "3")
        assert code == 0
        data = json.loads(out)
        assert data["diam_G"] == 13 and data["bound_value"] == 13
        assert data["step1_pass"] and data["step2_pass"]
        assert data["bound_pass"] is True
        # strict step-4 count is diagnostic data, not the exit verdict
        assert data["step4_pass"] is False

    def test_non_member_notice_exits_1(self, k2):
        code, out, _ = run_cli("audit", str(k2), "--ideal", "ni", "--power", "2")
        assert code == 1
        data = json.loads(out)
        assert data["member"] is False and data["notice"] == "not a member"


class TestScan:
    def test_text_output(self, chain2):
        graph, _ = chain2
        code, out, _ = run_cli("scan", str(graph), "--ideal", "ni", "--power", "3")
        assert code == 0
        assert "power 1: non-member" in out
        assert "power 2: non-member" in out
        assert "power 3: member" in out
        assert "astab lower bound: 2" in out

    def test_json_output(self, tri):
        code, out, _ = run_cli("scan", str(tri), "--ideal", "edge", "--power", "2", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["per_power"] == [[1, False], [2, True]]
        assert data["lower_bound"] == 1

    def test_infeasible_powers_reported_but_completed_ones_keep_exit_0(self, tri):
        code, out, _ = run_cli(
            "scan",
            str(tri),
            "--ideal",
            "edge",
            "--power",
            "2",
            "--cap-products",
            "1",
        )
        assert code == 0  # power 1 completed
        assert "power 1: non-member" in out
        assert "power 2: infeasible" in out


def test_installed_script_smoke(tmp_path):
    """The console script resolves and behaves like main()."""
    out_path = tmp_path / "g.edges"
    proc = subprocess.run(
        [sys.executable, "-m", "cnideals.cli", "gen", "--family", "ni-base", "--out", str(out_path)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "12 vertices, 16 edges, diameter 6" in proc.stdout
