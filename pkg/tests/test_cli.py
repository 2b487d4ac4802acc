"""CLI behavior: subcommands, formats, exit codes, stream separation."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from kexit import cli
from kexit.errors import CompositeTooHardError


def run_cli(*argv, capsys):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_fixture_text(self, capsys):
        code, out, err = run_cli("compute", "--fixture", "u3_31", capsys=capsys)
        assert code == 0
        assert err == ""
        assert out.endswith("not in pi(K): 5, 7, 19, 31\n")

    def test_fixture_csv_golden_row(self, capsys):
        code, out, _ = run_cli(
            "compute", "--fixture", "u3_31", "--format", "csv", capsys=capsys
        )
        assert code == 0
        assert '7,"5,19,31","5,19,31","5,19,31",1,3,excluded' in out.splitlines()

    def test_fixture_u4_text_cell(self, capsys):
        code, out, _ = run_cli("compute", "--fixture", "u4_89", capsys=capsys)
        assert code == 0
        assert "3,5,7,11,89,233,373" in out
        assert out.endswith("not in pi(K): 7, 17, 233, 373\n")

    def test_order_and_degrees(self, capsys):
        code, out, _ = run_cli(
            "compute", "--order", "7", "--degrees", "0", capsys=capsys
        )
        assert code == 0
        assert out.endswith("not in pi(K): (none)\n")

    def test_json_inputs(self, capsys):
        blob = '{"order": [[3, 1], [5, 1]], "degrees": [1, 1]}'
        code, out, _ = run_cli(
            "compute", "--order", blob, "--degrees", blob,
            "--format", "json", capsys=capsys,
        )
        assert code == 0
        data = json.loads(out)
        assert [row["prime"] for row in data["rows"]] == [3, 5]

    def test_method_l(self, capsys):
        code, out, _ = run_cli(
            "compute", "--fixture", "u3_31", "--method", "L", capsys=capsys
        )
        assert code == 0
        assert "L(p,G)" in out
        assert out.endswith("not in pi(K): 5, 7, 19\n")

    def test_length_mismatch_exits_3(self, capsys):
        code, out, err = run_cli(
            "compute", "--order", "2^11*3*5", "--degrees", "1,1", capsys=capsys
        )
        assert code == 3
        assert out == ""
        assert "3 primes" in err and "2 entries" in err

    def test_odd_degree_sum_exits_3_and_override(self, capsys):
        args = ("compute", "--order", "3*5", "--degrees", "1,0")
        code, _, err = run_cli(*args, capsys=capsys)
        assert code == 3
        assert "odd" in err
        code, out, _ = run_cli(*args, "--allow-odd-degree-sum", capsys=capsys)
        assert code == 0
        assert "theta(p)" in out

    def test_not_prime_exits_3(self, capsys):
        code, _, err = run_cli(
            "compute", "--order", "4*5", "--degrees", "1,1", capsys=capsys
        )
        assert code == 3
        assert "not prime" in err

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run_cli(
            "compute", "--order", "2^^3", "--degrees", "1", capsys=capsys
        )
        assert code == 2
        assert "error" in err

    def test_missing_degrees_exits_2(self, capsys):
        code, _, err = run_cli("compute", "--order", "7", capsys=capsys)
        assert code == 2
        assert "--degrees" in err

    def test_fixture_conflicts_with_order_exits_2(self, capsys):
        code, _, err = run_cli(
            "compute", "--fixture", "u3_31", "--order", "7", "--degrees", "0",
            capsys=capsys,
        )
        assert code == 2

    def test_unknown_fixture_exits_2(self, capsys):
        code, _, err = run_cli("compute", "--fixture", "u5_3", capsys=capsys)
        assert code == 2
        assert "u5_3" in err

    def test_bad_format_exits_2(self, capsys):
        code, _, _ = run_cli(
            "compute", "--fixture", "u3_31", "--format", "xml", capsys=capsys
        )
        assert code == 2

    def test_no_subcommand_exits_2(self, capsys):
        assert run_cli(capsys=capsys)[0] == 2

    def test_help_exits_0(self, capsys):
        assert run_cli("--help", capsys=capsys)[0] == 0


class TestAnnotations:
    def test_u4_89_notes_on_stderr(self, capsys):
        code, out, err = run_cli(
            "compute", "--fixture", "u4_89", "--annotate-paper-diffs",
            "--format", "csv", capsys=capsys,
        )
        assert code == 0
        notes = err.splitlines()
        assert len(notes) == 2
        assert "theta_bar(89)" in notes[0] and "5,7,233" in notes[0] and "17,233" in notes[0]
        assert "H(5)" in notes[1] and "7,17,89,233,373" in notes[1]
        # stdout stays clean data
        assert "note" not in out

    def test_u3_31_has_no_diffs(self, capsys):
        _, _, err = run_cli(
            "compute", "--fixture", "u3_31", "--annotate-paper-diffs", capsys=capsys
        )
        assert "no cells conflict" in err

    def test_requires_fixture(self, capsys):
        _, _, err = run_cli(
            "compute", "--order", "7", "--degrees", "0", "--annotate-paper-diffs",
            capsys=capsys,
        )
        assert "--fixture" in err


class TestCatalog:
    def test_psu3_text(self, capsys):
        code, out, _ = run_cli("catalog", "PSU3", "31", capsys=capsys)
        assert code == 0
        assert out == "2^11*3*5*7^2*19*31^3\n"

    def test_psu4_json(self, capsys):
        code, out, _ = run_cli(
            "catalog", "psu4", "89", "--format", "json", capsys=capsys
        )
        assert code == 0
        data = json.loads(out)
        assert data["order"][0] == [2, 9]
        assert data["value"] == 2**9 * 3**7 * 5**3 * 7 * 11**2 * 17 * 89**6 * 233 * 373

    def test_alternating_alias(self, capsys):
        code, out, _ = run_cli("catalog", "A", "5", capsys=capsys)
        assert code == 0
        assert out == "2^2*3*5\n"

    def test_unknown_family_exits_2(self, capsys):
        assert run_cli("catalog", "sporadic", "5", capsys=capsys)[0] == 2

    def test_non_prime_power_exits_3(self, capsys):
        assert run_cli("catalog", "psl2", "6", capsys=capsys)[0] == 3

    def test_small_alternating_exits_3(self, capsys):
        assert run_cli("catalog", "A", "4", capsys=capsys)[0] == 3

    def test_composite_too_hard_exits_4(self, capsys, monkeypatch):
        def explode(spec):
            raise CompositeTooHardError(10**40 + 1)

        monkeypatch.setattr(cli, "family_order", explode)
        code, _, err = run_cli("catalog", "psl2", "7", capsys=capsys)
        assert code == 4
        assert "effort budget" in err


class TestVerify:
    def test_fixture_agrees(self, capsys):
        code, out, _ = run_cli("verify", "--fixture", "u4_89", capsys=capsys)
        assert code == 0
        assert "all cells agree" in out
        assert "9 primes" in out

    def test_order_input(self, capsys):
        code, out, _ = run_cli(
            "verify", "--order", "2^4*3^2*11", "--degrees", "2,1,1", capsys=capsys
        )
        assert code == 0
        assert "all cells agree" in out


class TestFixtureListing:
    def test_lists_both(self, capsys):
        code, out, _ = run_cli("fixtures", capsys=capsys)
        assert code == 0
        assert "u3_31" in out and "u4_89" in out
        assert "2^11*3*5*7^2*19*31^3" in out


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "kexit", "compute", "--fixture", "u3_31"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "not in pi(K): 5, 7, 19, 31" in proc.stdout
