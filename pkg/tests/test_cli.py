import json

import pytest

from omegacanon import fixtures as fx
from omegacanon.cli import main
from omegacanon.io import load_document, save_document
from omegacanon.omega import equivalent


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, make in list(fx.AUTOMATA.items()) + list(fx.FDFAS.items()):
        path = tmp_path / f"{name}.json"
        save_document(make(), path)
        out[name] = str(path)
    return out


def call(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv)
    return code, json.loads(out)


def test_wagner(capsys, files):
    code, doc = call_json(capsys, "wagner", files["inf-aa-fin-bb-dma"])
    assert code == 0
    assert doc == {"m_plus": 2, "m_minus": 3, "class": {"k": 3, "polarity": "minus"}}
    code, doc = call_json(capsys, "wagner", files["universal"])
    assert doc == {"m_plus": 1, "m_minus": 0, "class": {"k": 1, "polarity": "plus"}}
    code, doc = call_json(capsys, "wagner", files["big-muller"])
    assert code == 3 and doc["kind"] == "capacity"
    code, doc = call_json(capsys, "wagner", files["big-muller"], "--cap", "13")
    assert code == 0


def test_diameter(capsys, files):
    for name in ("inf-aa-fin-bb-colorful", "inf-aa-fin-bb-fs", "inf-aa-fin-bb-dma"):
        code, doc = call_json(capsys, "diameter", files[name])
        assert code == 0 and doc == {"d_plus": 2, "d_minus": 3}
    code, doc = call_json(capsys, "diameter", files["universal-fdfa"])
    assert doc == {"d_plus": 1, "d_minus": 0}


def test_colorful(capsys, files, tmp_path):
    out, dot = tmp_path / "cf.json", tmp_path / "cf.dot"
    code, doc = call_json(capsys, "colorful", files["inf-aa-fin-bb-dma"], "--out", str(out), "--dot", str(dot))
    assert code == 0
    assert doc["leading_states"] == 1
    assert doc["progress_states"] == {"0": 6}
    assert sorted(doc["colors"]["0"]) == [1, 2, 2, 3, 3, 3]
    f = load_document(out)
    assert f.progress[0].state_count == 6
    assert dot.read_text().startswith("digraph")
    code, doc = call_json(capsys, "colorful", files["universal"])
    assert doc["leading_states"] == 1 and doc["progress_states"] == {"0": 2}


def test_color(capsys, files):
    running = files["inf-aa-fin-bb-dma"]
    code, doc = call_json(capsys, "color", running, "--v", "a")
    assert code == 0 and doc["color"] == 3 and not doc["reliable"]
    code, doc = call_json(capsys, "color", running, "--v", "aa")
    assert doc["color"] == 2
    code, doc = call_json(capsys, "color", running, "--v", "ab", "--infinite")
    assert doc["color"] == 3
    code, doc = call_json(capsys, "color", running, "--v", "")
    assert code == 2
    code, doc = call_json(capsys, "color", running, "--v", "c")
    assert code == 2 and doc["kind"] == "input"


def test_color_irrelevant(capsys, tmp_path):
    from omegacanon.core import Structure
    from omegacanon.omega import Buchi, OmegaAutomaton
    path = tmp_path / "m.json"
    save_document(OmegaAutomaton(Structure(fx.AB, ((0, 1), (1, 1))), Buchi({0})), path)
    code, doc = call_json(capsys, "color", str(path), "--v", "b")
    assert doc["color"] == "-inf" and doc["clamped"] == 0 and not doc["relevant"]


def test_fdfa_ops(capsys, files, tmp_path):
    fs, club = files["inf-aa-fin-bb-fs"], files["inf-aa-fin-bb-colorful"]
    code, doc = call_json(capsys, "fdfa-ops", "equiv", fs, club)
    assert code == 0 and doc["equivalent"] is True
    comp = tmp_path / "comp.json"
    call(capsys, "fdfa-ops", "complement", club, "--out", str(comp))
    both = tmp_path / "both.json"
    call(capsys, "fdfa-ops", "intersect", club, str(comp), "--out", str(both))
    code, doc = call_json(capsys, "fdfa-ops", "empty", str(both))
    assert code == 0 and doc == {"empty": True, "witness": None}
    either = tmp_path / "either.json"
    call(capsys, "fdfa-ops", "union", club, str(comp), "--out", str(either))
    code, doc = call_json(capsys, "fdfa-ops", "universal", str(either))
    assert code == 0 and doc["universal"] is True
    code, doc = call_json(capsys, "fdfa-ops", "empty", club)
    assert code == 1 and doc["witness"] is not None
    # a failed containment replays under `accepts`
    code, doc = call_json(capsys, "fdfa-ops", "contains", club, files["inf-aa-fdfa"])
    assert code == 1
    x = doc["witness"]
    _, a = call_json(capsys, "accepts", files["inf-aa-fdfa"], "--u", x["u"], "--v", x["v"])
    _, b = call_json(capsys, "accepts", club, "--u", x["u"], "--v", x["v"])
    assert a["accepted"] and not b["accepted"]
    code, doc = call_json(capsys, "fdfa-ops", "equiv", club, files["inf-aa-fin-bb-dma"])
    assert code == 0
    code, doc = call_json(capsys, "fdfa-ops", "complement", club, club)
    assert code == 2


def test_accepts(capsys, files):
    code, doc = call_json(capsys, "accepts", files["b-parity-f1"], "--v", "a")
    assert code == 0 and doc["accepted"] is True
    code, doc = call_json(capsys, "accepts", files["b-parity-f2"], "--v", "a")
    assert doc["accepted"] is True
    code, doc = call_json(capsys, "accepts", files["inf-aa-fin-bb-dma"], "--u", "bb", "--v", "b")
    assert doc["accepted"] is False


def test_bw(capsys, files, tmp_path):
    out = tmp_path / "bw.json"
    code, doc = call_json(capsys, "bw", "dba", files["inf-aa-dba"], "--out", str(out))
    assert code == 0
    assert equivalent(load_document(out), fx.inf_aa_dba())
    code, doc = call_json(capsys, "bw", "dba", files["inf-aa-fin-bb-dma"])
    assert code == 2 and doc["error"] == "not DBA-recognizable: color 3"
    code, doc = call_json(capsys, "bw", "dca", files["fin-a-dca"])
    assert code == 0


def test_dot(capsys, files):
    code, out, _ = call(capsys, "dot", files["inf-aa-fin-bb-dma"], "--format", "text")
    assert code == 0 and out.startswith("digraph")
    code, again, _ = call(capsys, "dot", files["inf-aa-fin-bb-dma"], "--format", "text")
    assert again == out
    code, out, _ = call(capsys, "dot", files["inf-aa-fin-bb-dma"], "--colorful", "--format", "text")
    assert "cluster_p0" in out


def test_selftest(capsys, files):
    code, doc = call_json(capsys, "selftest", "--bounds", "1,3", "--fixture", "universal")
    assert code == 0 and doc["violations"] == []
    code, doc = call_json(capsys, "selftest", "--bounds", "1,3", "--fixture", "universal", "--fdfa", "unsaturated")
    assert code == 1
    v = doc["violations"][0]
    assert v["witness"]
    code, doc = call_json(capsys, "selftest", "--bounds", "0,0")
    assert code == 2


def test_fixture_and_errors(capsys, tmp_path):
    code, doc = call_json(capsys, "fixture", "inf-aa-dba")
    assert code == 0 and doc["acceptance"]["kind"] == "buchi"
    code, doc = call_json(capsys, "fixture", "nope")
    assert code == 2
    code, doc = call_json(capsys, "wagner", "inf-aa-dba")
    assert code == 2 and "fixture" in doc["error"]
    code, doc = call_json(capsys, "wagner", str(tmp_path / "missing.json"))
    assert code == 2
    assert main(["no-such-verb"]) == 2
    capsys.readouterr()
    code, out, _ = call(capsys, "wagner", str(tmp_path / "missing.json"), "--format", "text")
    assert code == 2 and out == ""


def test_text_format_and_determinism(capsys, files):
    code, out, _ = call(capsys, "wagner", files["inf-aa-fin-bb-dma"], "--format", "text")
    assert out == "m+ = 2, m- = 3, class DM-3\n"
    runs = [call(capsys, "colorful", files["inf-aa-fin-bb-dma"])[1] for _ in range(2)]
    assert runs[0] == runs[1]
