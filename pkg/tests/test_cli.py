import json

import pytest

from wcosym.cli import (
    REPORT_SCHEMA,
    SWEEP_CSV_COLUMNS,
    format_complex,
    main,
    parse_complex,
    validate_report_dict,
)
from wcosym.errors import CliParseError


class TestComplexLiterals:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("3", 3.0),
            ("-0.5", -0.5),
            ("0.5i", 0.5j),
            ("i", 1j),
            ("-i", -1j),
            ("1+2i", 1 + 2j),
            ("0.25-0.75i", 0.25 - 0.75j),
            ("1e-3+2.5e-1i", 0.001 + 0.25j),
        ],
    )
    def test_parse(self, text, value):
        assert parse_complex(text) == value

    @pytest.mark.parametrize("text", ["", "abc", "1+2", "nan", "inf", "1i+2"])
    def test_rejects(self, text):
        with pytest.raises(CliParseError):
            parse_complex(text)

    @pytest.mark.parametrize(
        "value", [0.0, 1.5, -2.25j, 0.1 + 0.2j, -1 / 3 - 1e-9j, 3e-15 + 7j]
    )
    def test_round_trip(self, value):
        assert parse_complex(format_complex(complex(value))) == complex(value)


class TestClassifyCommand:
    def test_hyperbolic(self, capsys):
        code = main(["classify", "--phi", "3,1,1,3"])
        out = capsys.readouterr().out
        assert code == 0
        assert "HyperbolicAutomorphism" in out
        assert "0.5" in out

    def test_identity(self, capsys):
        assert main(["classify", "--phi", "1,0,0,1"]) == 0
        assert "Identity" in capsys.readouterr().out

    def test_parabolic(self, capsys):
        assert main(["classify", "--phi", "0,0.5,-0.5,1"]) == 0
        out = capsys.readouterr().out
        assert "ParabolicNonAutomorphism" in out

    def test_json_format(self, capsys):
        assert main(["classify", "--phi", "3,1,1,3", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["class"] == "HyperbolicAutomorphism"
        assert doc["sigma"]["b"]["re"] == pytest.approx(-1 / 3)

    def test_bad_input_exit_2(self, capsys):
        assert main(["classify", "--phi", "3,1,1"]) == 2
        assert main(["classify", "--phi", "2,0,0,1"]) == 2  # not a self-map
        assert main(["classify", "--phi", "x,y,z,w"]) == 2


class TestCheckCommand:
    def test_j_family_normal_instance(self, capsys):
        code = main(["check", "--family", "j", "--a0", "0.5i", "--a1", "0.75", "--b", "1"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["predicates"]["normal"] is True
        assert doc["residuals"]["normality"] <= 1e-7
        assert doc["verdict"] == "pass"

    def test_c1_family_non_normal_instance(self, capsys):
        code = main(["check", "--family", "c1", "--alpha", "i", "--c0", "0.3", "--c1", "0.5"])
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["predicates"]["normal"] is False
        assert doc["residuals"]["normality"] >= 1e-3
        assert doc["verdict"] == "pass"

    def test_c2_case_i_instance(self, capsys):
        code = main(
            ["check", "--family", "c2", "--alpha", "0.5", "--c0", "0.6", "--c1", "0.36", "--c2", "0.54"]
        )
        doc = json.loads(capsys.readouterr().out)
        assert code == 0
        assert doc["predicates"]["case"] == "CaseI"
        # no truncation exists for these parameters; the coefficient-level
        # oracle must agree with the stated case
        assert doc["residuals"]["lft_commute_defect"] <= 1e-9
        assert doc["verdict"] == "pass"

    def test_domain_violation_exit_2(self, capsys):
        assert main(["check", "--family", "j", "--a0", "2", "--a1", "0"]) == 2


class TestSuiteCommand:
    def test_passing_suite_exit_0(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = main(
            ["suite", "--id", "prop21-normal", "--seed", "7", "--samples", "10", "--json", str(out)]
        )
        assert code == 0
        doc = json.loads(out.read_text())
        assert validate_report_dict(doc) == []
        assert doc["summary"]["fail"] == 0

    def test_known_discrepancy_exit_3(self, capsys, tmp_path):
        out = tmp_path / "thm61.json"
        code = main(["suite", "--id", "thm61-consistency", "--samples", "15", "--json", str(out)])
        assert code == 3
        doc = json.loads(out.read_text())
        assert doc["known_discrepancy"] is True
        assert doc["summary"]["discrepancy"] >= 1

    def test_unknown_suite_exit_2(self, capsys):
        assert main(["suite", "--id", "nope"]) == 2

    def test_determinism_across_processes(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path in (a, b):
            assert main(
                ["suite", "--id", "cor41-aut", "--seed", "11", "--samples", "8", "--json", str(path)]
            ) == 0
        assert a.read_bytes() == b.read_bytes()


class TestSweepCommand:
    def test_passing_sweep(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main(["sweep", "--family", "j-hyperbolic", "--csv", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == ",".join(SWEEP_CSV_COLUMNS)
        assert len(lines) > 1
        for line in lines[1:]:
            deficiency = float(line.split(",")[4])
            assert deficiency >= 1e-3

    def test_c1_sweep_documents_discrepancy(self, capsys, tmp_path):
        out = tmp_path / "c1.csv"
        code = main(["sweep", "--family", "c1-hyperbolic", "--csv", str(out)])
        assert code == 3
        rows = out.read_text().splitlines()[1:]
        assert any("discrepancy" in row for row in rows)


def test_default_dim_env_override(capsys, monkeypatch):
    monkeypatch.setenv("WCO_DEFAULT_DIM", "48")
    code = main(["check", "--family", "j", "--a0", "0.3", "--a1", "0.2"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "pass"


def test_print_schema(capsys):
    assert main(["--print-schema"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["version"] == REPORT_SCHEMA["version"]


def test_suites_listing(capsys):
    assert main(["suites"]) == 0
    out = capsys.readouterr().out.split()
    assert "prop21-normal" in out and "thm61-consistency" in out


def test_no_command_exits_2(capsys):
    assert main([]) == 2
