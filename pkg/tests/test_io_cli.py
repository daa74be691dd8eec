import json
import re

import pytest

from audioactive import cli, fst, io, machines


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", machines.MACHINE_NAMES)
def test_json_round_trip(corpus, name):
    t = corpus[name]
    text = io.dumps(t)
    back = io.loads(text)
    assert io.dumps(back) == text
    assert back.num_states == t.num_states
    assert sorted(back.transitions) == sorted(t.transitions)


def test_json_layout():
    data = json.loads(io.dumps(machines.build_audio_plus()))
    assert data["input_alphabet"] == ["1", "2", "3", "d", "*"]
    assert data["num_states"] == 28
    assert [0, None, None, 0] not in data["transitions"]
    assert any(t[1] == "*" and t[2] == "*" for t in data["transitions"])


def test_malformed_json():
    with pytest.raises(ValueError):
        io.loads('{"input_alphabet": []}')


def test_dot(corpus):
    dot = io.to_dot(corpus["splitting"])
    assert dot.count("shape=doublecircle") + dot.count("shape=circle") == 21
    assert "style=invis" in dot
    audio = io.to_dot(corpus["audio"])
    assert 'label="ε|ε"' in audio and 'label="1|1"' in audio


def test_derive(capsys):
    assert run_cli(capsys, "derive", "55555", "-n", "3")[1] == "55\n25\n1215\n"
    assert run_cli(capsys, "derive", "22", "-n", "5")[1] == "22\n" * 5
    assert run_cli(capsys, "derive", "2222222222", "-n", "1")[1] == "[10]2\n"
    assert run_cli(capsys, "derive", "abc")[0] == cli.EXIT_USAGE


def test_audio(capsys):
    assert run_cli(capsys, "audio", "1113")[1] == "3113\n"
    assert run_cli(capsys, "audio", "22*33")[1] == "22*23\n"
    assert "no output" in run_cli(capsys, "audio", "1111")[1]


def test_split_and_factorize(capsys):
    assert run_cli(capsys, "split", "3*2212")[1] == "valid splitting\n"
    assert run_cli(capsys, "split", "3*133")[1] == "not a splitting (fails at depth 9)\n"
    assert run_cli(capsys, "split", "3133")[0] == cli.EXIT_USAGE
    assert run_cli(capsys, "factorize", "32211")[1] == "32211 (atom)\n"
    assert run_cli(capsys, "factorize", "3113")[1] == "3113 = Ac\n"
    assert run_cli(capsys, "factorize", "32213")[1] == "32213 = 3·22·13 (U H Pa)\n"
    assert run_cli(capsys, "factorize", "1111")[0] == cli.EXIT_USAGE


def test_elements_and_growth(capsys):
    code, out, _ = run_cli(capsys, "elements")
    assert code == 0 and len(out.splitlines()) == 94
    code, out, _ = run_cli(capsys, "growth")
    lam = float(re.match(r"lambda = (\d\.\d{10}) \(residual", out).group(1))
    assert round(lam, 4) == 1.3036


def test_prove(capsys):
    code, out, _ = run_cli(capsys, "prove", "splitting")
    assert code == 0 and "fixed point n=9" in out
    code, out, _ = run_cli(capsys, "prove", "cosmological")
    assert code == 0 and "E stabilizes at n=24 with 94 elements" in out
    code, out, _ = run_cli(capsys, "prove", "cosmological", "--max-n", "20")
    assert code == cli.EXIT_GATE and "no fixed point within bound" in out
    code, out, _ = run_cli(capsys, "prove", "splitting", "--format", "json")
    assert json.loads(out)["gates_passed"] is True


def test_prove_against_bad_golden(capsys, tmp_path, monkeypatch):
    (tmp_path / "splitting.json").write_text(json.dumps({"sizes": [1, 2, 3]}))
    code, out, _ = run_cli(capsys, "prove", "splitting", "--golden", str(tmp_path))
    assert code == cli.EXIT_GATE and "sizes differs" in out
    monkeypatch.setenv("AUDIOACTIVE_GOLDEN", str(tmp_path / "missing"))
    code, _, _ = run_cli(capsys, "prove", "splitting", "--golden", str(tmp_path))
    assert code == 0


def test_export(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "export", "audio", "--format", "json")
    assert json.loads(out)["num_states"] == 28
    code, out, _ = run_cli(capsys, "export", "splitting", "--format", "dot")
    assert len(re.findall(r"^  q\d+ \[", out, re.M)) == 21
    path = tmp_path / "c2.json"
    run_cli(capsys, "export", "counter2", "-o", str(path))
    assert json.loads(path.read_text())["num_states"] == 6
    code, out, _ = run_cli(capsys, "export", str(path))
    assert out == path.read_text()
    assert run_cli(capsys, "export", "nosuch")[0] == cli.EXIT_USAGE


def test_verify_table_and_audit(capsys):
    code, out, _ = run_cli(capsys, "verify-table")
    assert code == 0 and "94 elements" in out
    assert run_cli(capsys, "audit-audio-src", "-n", "2")[1] == "Audio^2 . Src: 35 states\n"
    assert run_cli(capsys, "audit-audio-src", "-n", "6", "--limit-states", "100")[0] == cli.EXIT_RESOURCE
    assert run_cli(capsys, "audit-audio-src", "-n", "30")[0] == cli.EXIT_USAGE


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == cli.EXIT_USAGE
    assert run_cli(capsys, "prove", "splitting", "--max-n", "0")[0] == cli.EXIT_USAGE


def test_transpose_round_trip_is_identity():
    audio = machines.build_audio()
    assert fst.transpose(fst.transpose(audio)) == audio
