import json
from pathlib import Path

import pytest

from dynzeta.cli import main
from dynzeta.exponents import apply_spec
from dynzeta.jsonio import compile_result_from_json, spec_from_json

SPEC_DIR = Path(__file__).resolve().parent.parent / "demos" / "specs"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


class TestRealizableCheck:
    def test_dold_failure_exits_1(self, capsys, tmp_path):
        seq = write_json(tmp_path / "seq.json", {"n": 6, "entries": ["0", "0", "0", "8", "0", "8"]})
        code, out, _ = run(capsys, "realizable-check", seq)
        assert code == 1
        payload = json.loads(out)
        assert payload == {"verdict": "fail", "failure": "dold", "index": 6, "value": "8"}

    def test_full_shift_prefix_passes(self, capsys, tmp_path):
        seq = write_json(tmp_path / "seq.json", {"entries": [str(2**n) for n in range(1, 17)]})
        code, out, _ = run(capsys, "realizable-check", seq)
        assert code == 0
        assert json.loads(out) == {"verdict": "pass"}

    def test_empty_entries_is_usage_error(self, capsys, tmp_path):
        seq = write_json(tmp_path / "seq.json", {"n": 0, "entries": []})
        code, out, err = run(capsys, "realizable-check", seq)
        assert code == 2
        assert out == ""
        assert "entries" in err

    def test_missing_file_is_usage_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "realizable-check", str(tmp_path / "nope.json"))
        assert code == 2
        assert "cannot read" in err


class TestZeta:
    def test_zeta_from_fix_geometric(self, capsys):
        code, out, _ = run(capsys, "zeta-from-fix", "--source", "geometric:2", "--order", "5")
        assert code == 0
        assert json.loads(out) == {"order": 5, "coeffs": ["1", "2", "4", "8", "16", "32"]}

    def test_zeta_check_pass_and_fail(self, capsys, tmp_path):
        good = write_json(tmp_path / "good.json", {"order": 4, "coeffs": ["1", "2", "4", "8", "16"]})
        code, out, _ = run(capsys, "zeta-check", good)
        assert code == 0 and json.loads(out) == {"verdict": "pass"}

        bad = write_json(tmp_path / "bad.json", {"order": 3, "coeffs": ["2", "4", "8", "16"]})
        code, out, _ = run(capsys, "zeta-check", bad)
        assert code == 1
        assert json.loads(out)["reason"] == "constant_term_not_one"


class TestApply:
    def test_tower_map_on_orbit(self, capsys):
        code, out, _ = run(
            capsys, "apply", "--map", "nn", "--source", "reg:8", "--max-n", "6"
        )
        assert code == 0
        assert json.loads(out)["entries"] == ["0", "0", "0", "8", "0", "8"]

    def test_unknown_map_is_usage_error(self, capsys):
        code, _, err = run(capsys, "apply", "--map", "frobnicate", "--source", "reg:2", "--max-n", "3")
        assert code == 2
        assert "unknown map" in err


class TestWords:
    def test_eval_empty_word_range(self, capsys, tmp_path):
        word = write_json(tmp_path / "w.json", {"gens": []})
        code, out, _ = run(capsys, "word-eval", word, "--range", "1:5")
        assert code == 0
        assert json.loads(out)["values"] == ["1", "2", "3", "4", "5"]

    def test_eval_single_point(self, capsys, tmp_path):
        word = write_json(tmp_path / "w.json", {"gens": [{"kind": "g", "p": 2, "t": 0}]})
        code, out, _ = run(capsys, "word-eval", word, "--n", "5")
        assert code == 0
        assert json.loads(out)["values"] == ["10"]

    def test_normal_form_moves_caps_right(self, capsys, tmp_path):
        word = write_json(
            tmp_path / "w.json",
            {"gens": [{"kind": "h", "p": 2, "t": 0}, {"kind": "g", "p": 2, "t": 0}]},
        )
        code, out, _ = run(capsys, "word-normal-form", word)
        assert code == 0
        assert json.loads(out) == {
            "gens": [{"kind": "g", "p": 2, "t": 0}, {"kind": "h", "p": 2, "t": 1}]
        }

    def test_range_and_n_are_exclusive(self, capsys, tmp_path):
        word = write_json(tmp_path / "w.json", {"gens": []})
        code, _, err = run(capsys, "word-eval", word, "--n", "3", "--range", "1:2")
        assert code == 2
        assert "exactly one" in err


class TestSpecs:
    def test_validate_shipped_specs(self, capsys):
        for name in ("doubling", "squaring", "constant2", "identity"):
            code, out, _ = run(capsys, "spec-validate", str(SPEC_DIR / f"{name}.json"))
            assert code == 0
            assert json.loads(out) == {"valid": True}

    def test_validate_reports_violations(self, capsys, tmp_path):
        spec = write_json(
            tmp_path / "bad.json",
            {"primes": {"2": {"shape": "unbounded", "values": [0, 0, 2]}}},
        )
        code, out, _ = run(capsys, "spec-validate", spec)
        assert code == 1
        payload = json.loads(out)
        assert payload["valid"] is False
        assert payload["violations"][0]["prime"] == 2
        assert payload["violations"][0]["index"] == 1

    def test_compile_doubling_word(self, capsys, tmp_path):
        out_file = tmp_path / "word.json"
        code, out, _ = run(
            capsys, "spec-compile", str(SPEC_DIR / "doubling.json"), "--out", str(out_file)
        )
        assert code == 0 and out == ""
        payload = json.loads(out_file.read_text())
        assert payload["agreement"] == {"2": 2}
        assert len(payload["word"]["gens"]) == 3

    @pytest.mark.parametrize("name", ["doubling", "squaring", "constant2", "identity"])
    def test_compile_then_eval_matches_apply_spec(self, capsys, tmp_path, name):
        spec_path = SPEC_DIR / f"{name}.json"
        spec = spec_from_json(json.loads(spec_path.read_text()))
        out_file = tmp_path / "compiled.json"
        code, _, _ = run(capsys, "spec-compile", str(spec_path), "--out", str(out_file))
        assert code == 0
        result = compile_result_from_json(json.loads(out_file.read_text()))

        code, out, _ = run(capsys, "word-eval", str(out_file), "--range", "1:200")
        assert code == 0
        values = [int(v) for v in json.loads(out)["values"]]
        for n in range(1, 201):
            if result.admits(n):
                assert values[n - 1] == apply_spec(spec, n), (name, n)


class TestMembershipAndStructure:
    def test_tower_map_witness(self, capsys):
        code, out, _ = run(
            capsys, "membership-test", "--map", "nn", "--max-k", "8", "--max-n", "6"
        )
        assert code == 1
        assert json.loads(out) == {
            "result": "witness", "k": 8, "failure": "dold", "index": 6, "value": "8",
        }

    def test_generator_map_no_violation(self, capsys):
        code, out, _ = run(
            capsys, "membership-test", "--map", "gen:g:2:0", "--max-k", "20", "--max-n", "200"
        )
        assert code == 0
        assert json.loads(out)["result"] == "no-violation"

    def test_successor_witness(self, capsys):
        code, out, _ = run(
            capsys, "membership-test", "--map", "succ", "--max-k", "3", "--max-n", "2"
        )
        assert code == 1
        assert json.loads(out)["k"] == 2

    def test_preimage_progression(self, capsys):
        code, out, _ = run(
            capsys, "preimage", "--map", "gen:g:2:1", "--k", "4", "--max-n", "200"
        )
        assert code == 0
        assert json.loads(out) == {"outcome": "progression", "k": 4, "max_n": 200, "step": 2}

    def test_divisibility_check_failure_exits_1(self, capsys):
        code, out, _ = run(capsys, "divisibility-check", "--map", "nn", "--max-n", "6")
        assert code == 1
        assert json.loads(out)["coprime-lcm"]["counterexample"] == [2, 3]

    def test_relation_search_is_seeded(self, capsys):
        args = ["relation-search", "--seed", "11", "--count", "30", "--length", "5", "--max-n", "500"]
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2


class TestDeterminism:
    def test_byte_identical_output(self, capsys, tmp_path):
        seq = write_json(tmp_path / "seq.json", {"entries": ["1", "1", "1"]})
        outputs = set()
        for _ in range(3):
            _, out, _ = run(capsys, "realizable-check", seq)
            outputs.add(out)
        assert len(outputs) == 1

    def test_maps_with_parameters(self, capsys):
        code, out, _ = run(capsys, "apply", "--map", "mul:3", "--source", "constant:1", "--max-n", "4")
        assert code == 0
        assert json.loads(out)["entries"] == ["1", "1", "1", "1"]
        code, out, _ = run(capsys, "apply", "--map", "pow:2", "--source", "geometric:2", "--max-n", "3")
        assert code == 0
        assert json.loads(out)["entries"] == ["2", "16", "512"]
