import io
import json

import pytest

from idemsync import (
    gen_cerny,
    gen_flipflop,
    gen_gusev_like,
    gen_ladder,
    higgins_transform,
    parse_automaton,
    render_automaton,
)
from idemsync.cli import main


def write_saf(tmp_path, dfa, name="input.saf"):
    path = tmp_path / name
    path.write_text(render_automaton(dfa), encoding="utf-8")
    return str(path)


class TestGen:
    def test_cerny_roundtrips(self, capsys):
        assert main(["gen", "cerny", "-n", "3"]) == 0
        assert parse_automaton(capsys.readouterr().out) == gen_cerny(3)

    def test_flipflop_golden(self, capsys):
        assert main(["gen", "flipflop"]) == 0
        assert capsys.readouterr().out == "SAF 1\n2 2\na 0 0\nb 1 1\n"

    def test_ladder_and_gusev(self, capsys):
        assert main(["gen", "ladder", "-n", "6"]) == 0
        assert parse_automaton(capsys.readouterr().out) == gen_ladder(6)
        assert main(["gen", "gusev"]) == 0
        assert parse_automaton(capsys.readouterr().out) == gen_gusev_like(7)

    def test_random_idem_is_seed_deterministic(self, capsys):
        argv = ["gen", "random-idem", "-n", "6", "-k", "2", "--seed", "9"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first

    def test_bad_parameter_exits_with_usage_code(self, capsys):
        assert main(["gen", "cerny", "-n", "1"]) == 2
        assert "error:" in capsys.readouterr().err


class TestTransform:
    def test_higgins_from_file(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_flipflop())
        assert main(["transform", "higgins", path]) == 0
        out = parse_automaton(capsys.readouterr().out)
        assert out == higgins_transform(gen_flipflop()).result

    def test_reads_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(render_automaton(gen_cerny(3))))
        assert main(["transform", "higgins", "-"]) == 0
        out = parse_automaton(capsys.readouterr().out)
        assert out.letters == ("a1", "a2", "b")
        assert out.n == 6


class TestAnalyze:
    def test_ladder_report(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_ladder(5))
        assert main(["analyze", path]) == 0
        out = capsys.readouterr().out
        assert "states: 5" in out
        assert "letter a: rank=3 idempotent=true" in out
        assert "sinks: 4" in out
        assert "strongly_connected: false" in out
        assert "synchronizing: true" in out
        assert "reset_threshold: 4" in out
        assert "shortest_reset_word: b a b a" in out

    def test_budget_flag_truncates(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(4))
        assert main(["analyze", path, "--budget", "2"]) == 0
        out = capsys.readouterr().out
        assert "truncated: true" in out
        assert "synchronizing: false" in out

    def test_env_var_sets_default_budget(self, tmp_path, capsys, monkeypatch):
        path = write_saf(tmp_path, gen_cerny(4))
        monkeypatch.setenv("IDEMSYNC_MAX_SUBSETS", "2")
        assert main(["analyze", path]) == 0
        assert "truncated: true" in capsys.readouterr().out

    def test_budget_flag_beats_env_var(self, tmp_path, capsys, monkeypatch):
        path = write_saf(tmp_path, gen_cerny(4))
        monkeypatch.setenv("IDEMSYNC_MAX_SUBSETS", "2")
        assert main(["analyze", path, "--budget", "100000"]) == 0
        assert "truncated: false" in capsys.readouterr().out

    def test_bad_env_var_is_a_usage_error(self, tmp_path, capsys, monkeypatch):
        path = write_saf(tmp_path, gen_cerny(4))
        monkeypatch.setenv("IDEMSYNC_MAX_SUBSETS", "lots")
        assert main(["analyze", path]) == 2


class TestShortestWord:
    def test_cerny3_witness(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["shortest-word", path]) == 0
        assert capsys.readouterr().out.strip() == "s1 s2 s2 s1"

    def test_non_synchronizing_exits_one(self, tmp_path, capsys):
        path = tmp_path / "cycle.saf"
        path.write_text("SAF 1\n3 1\nr 1 2 0\n", encoding="utf-8")
        assert main(["shortest-word", str(path)]) == 1
        assert "not synchronizing" in capsys.readouterr().err


class TestVerify:
    def test_passing_claim(self, capsys):
        assert main(["verify", "ladder"]) == 0
        out = capsys.readouterr().out
        assert out.count("[PASS]") == 15

    def test_known_red_claim_exits_one(self, capsys):
        assert main(["verify", "cor3"]) == 1
        assert "[FAIL] cor3 n=4" in capsys.readouterr().out

    def test_json_records(self, capsys):
        assert main(["verify", "gusev7", "--json"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        records = [json.loads(line) for line in lines]
        assert records[0]["claim"] == "gusev7"
        assert records[0]["pass"] is True
        assert any(r["informative"] for r in records)

    def test_unknown_claim_is_a_parser_error(self):
        with pytest.raises(SystemExit) as err:
            main(["verify", "bogus"])
        assert err.value.code == 2


class TestSynchronize:
    def test_ladder_word(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_ladder(5))
        assert main(["synchronize", "--idem2", path]) == 0
        assert capsys.readouterr().out.strip() == "b a b a"

    def test_single_state_prints_empty_marker(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_ladder(1))
        assert main(["synchronize", "--idem2", path]) == 0
        assert capsys.readouterr().out.strip() == "(empty)"

    def test_rejects_non_idempotent_input(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["synchronize", "--idem2", path]) == 2
        assert "idempotent" in capsys.readouterr().err

    def test_flag_is_required(self, tmp_path):
        path = write_saf(tmp_path, gen_ladder(3))
        with pytest.raises(SystemExit) as err:
            main(["synchronize", path])
        assert err.value.code == 2

    def test_contradiction_is_a_usage_failure(self, tmp_path, capsys):
        path = tmp_path / "blocked.saf"
        path.write_text("SAF 1\n5 2\na 1 1 3 3 4\nb 0 2 2 0 4\n", encoding="utf-8")
        assert main(["synchronize", "--idem2", str(path)]) == 2
        assert "not synchronizing" in capsys.readouterr().err


class TestExportDot:
    def test_stdin_to_dot(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(render_automaton(gen_ladder(4))))
        assert main(["export-dot", "-"]) == 0
        assert '3 -> 3 [label="a,b"];' in capsys.readouterr().out


class TestChi:
    def test_encode(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["chi", "encode", path, "s1", "s2"]) == 0
        assert capsys.readouterr().out.strip() == "b a1 b a2"

    def test_decode(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["chi", "decode", path, "b", "a1", "b", "a2"]) == 0
        assert capsys.readouterr().out.strip() == "s1 s2"

    def test_decode_out_of_image(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["chi", "decode", path, "a1", "b"]) == 0
        assert capsys.readouterr().out.strip() == "not-in-image position=0"

    def test_empty_word(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["chi", "encode", path]) == 0
        assert capsys.readouterr().out.strip() == "(empty)"

    def test_unknown_letter(self, tmp_path, capsys):
        path = write_saf(tmp_path, gen_cerny(3))
        assert main(["chi", "encode", path, "zz"]) == 2


class TestErrors:
    def test_missing_file(self, capsys):
        assert main(["analyze", "/nonexistent/a.saf"]) == 2
        assert "cannot read" in capsys.readouterr().err

    def test_malformed_saf_reports_line(self, tmp_path, capsys):
        path = tmp_path / "bad.saf"
        path.write_text("SAF 1\n3 1\nr 0 1 7\n", encoding="utf-8")
        assert main(["analyze", str(path)]) == 2
        assert "line 3" in capsys.readouterr().err
