import csv
import io
import json

import pytest

from tdist_bounds.cli import format_number, main, table_record


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_format_number():
    assert format_number(0.1) == "0.10000000000000001"
    assert format_number(None) == ""
    assert format_number(float("inf")) == "inf"


class TestDist:
    def test_normal_reference(self, capsys):
        code, out, _ = run(capsys, "dist", "--p", "4")
        assert code == 0
        (rec,) = rows(out)
        assert rec["q"] == "inf"
        assert float(rec["d_ko"]) == pytest.approx(0.0376727, abs=1e-7)
        assert float(rec["d_tv"]) == 2 * float(rec["d_ko"])

    def test_finite_q(self, capsys):
        code, out, _ = run(capsys, "dist", "--p", "4", "--q", "12")
        assert code == 0
        assert float(rows(out)[0]["d_ko"]) == pytest.approx(0.0247384, abs=1e-7)

    def test_degenerate(self, capsys):
        code, _, err = run(capsys, "dist", "--p", "4", "--q", "4")
        assert code == 2
        assert "degenerate pair" in err

    def test_bad_q_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dist", "--p", "4", "--q", "banana"])
        assert exc.value.code == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "dist", "--p", "4", "--format", "json")
        assert code == 0
        (rec,) = json.loads(out)
        assert rec["q"] == "inf" and rec["d_ko"] == pytest.approx(0.0376727, abs=1e-7)


class TestBound:
    def test_p12(self, capsys):
        code, out, _ = run(capsys, "bound", "--p", "12")
        assert code == 0
        rec = rows(out)[0]
        assert float(rec["rel_err_C"]) < 0.015
        assert float(rec["d_ko"]) <= float(rec["bound_B"]) <= float(rec["C_over_p"])

    def test_p4_chain(self, capsys):
        code, out, _ = run(capsys, "bound", "--p", "4")
        rec = rows(out)[0]
        assert code == 0
        assert float(rec["d_ko"]) <= float(rec["bound_B"]) <= float(rec["C_over_p"])

    def test_below_4_leaves_C_blank(self, capsys):
        _, out, _ = run(capsys, "bound", "--p", "3")
        assert rows(out)[0]["C_over_p"] == ""

    def test_below_threshold(self, capsys):
        code, _, err = run(capsys, "bound", "--p", "1.7")
        assert code == 2
        assert "50/29" in err


class TestTable:
    def test_monotone(self, capsys):
        code, out, _ = run(
            capsys, "table", "--p-min", "1.7242", "--p-max", "30", "--steps", "100"
        )
        assert code == 0
        recs = rows(out)
        assert len(recs) == 100
        d = [float(r["d_ko"]) for r in recs]
        assert all(u > v for u, v in zip(d, d[1:]))
        assert float(recs[-1]["p"]) == 30

    def test_steps_too_small(self, capsys):
        code, _, _ = run(capsys, "table", "--p-min", "2", "--p-max", "30", "--steps", "1")
        assert code == 2

    def test_out_file_round_trip(self, tmp_path, capsys):
        path = tmp_path / "t.csv"
        code, out, _ = run(
            capsys, "table", "--p-min", "4", "--p-max", "20", "--steps", "5", "--out", str(path)
        )
        assert code == 0 and out == ""
        for rec in rows(path.read_text()):
            again = table_record(float(rec["p"]))
            for field, text in rec.items():
                assert text == format_number(again[field])


class TestVerify:
    @pytest.mark.parametrize("suite", ["wallis", "signs", "hlt", "limit"])
    def test_suites_pass(self, capsys, suite):
        code, out, _ = run(capsys, "verify", "--suite", suite)
        assert code == 0
        assert out.rstrip().endswith("all checks passed")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "wallis", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["passed"]
