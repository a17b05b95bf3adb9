import json

import pytest

from brauerkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_gentle(capsys, fixture_path):
    code, out, _ = run(capsys, "validate", fixture_path("F1"))
    assert code == 0 and "gentle: yes" in out


def test_validate_special_biserial_not_gentle(capsys, fixture_path):
    code, out, _ = run(capsys, "validate", fixture_path("F4"))
    assert code == 0 and "special biserial: yes" in out and "gentle: no" in out


def test_validate_graph(capsys, fixture_path):
    code, out, _ = run(capsys, "validate", fixture_path("cycle3"))
    assert code == 0 and "class Cycle" in out


def test_parse_error_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("vertices: 1 2\narrow: a 1 2\nnonsense\n")
    code, _, err = run(capsys, "validate", str(f))
    assert code == 1 and "line 3" in err


def test_validation_error_exit_code(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("vertices: 1 2\narrow: a 1 7\n")
    assert run(capsys, "validate", str(f))[0] == 2


def test_trivext_star(capsys, fixture_path, tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "trivext", fixture_path("F2"), "--dot", str(dot))
    assert code == 0
    assert out.count("bedge:") == 3 and "C + C^T: ok" in out
    assert dot.read_text().startswith("graph G")


def test_trivext_non_gentle(capsys, fixture_path):
    assert run(capsys, "trivext", fixture_path("F4"))[0] == 2


def test_trivext_self_folded(capsys, fixture_path):
    code, _, err = run(capsys, "trivext", fixture_path("F6"))
    assert code == 3 and "loop" in err


@pytest.mark.parametrize("name,cls,pred", [
    ("line3", "Line", "20"), ("cycle4", "Cycle", "Infinite"), ("triangle_pendant", "Other", "FiniteUnknown"),
])
def test_classify(capsys, fixture_path, name, cls, pred):
    code, out, _ = run(capsys, "classify", fixture_path(name))
    assert code == 0 and f"class: {cls}" in out and f"predicted count: {pred}" in out


def test_classify_gentle_input(capsys, fixture_path):
    code, out, _ = run(capsys, "classify", fixture_path("F3"))
    assert code == 0 and "class: Line" in out


@pytest.mark.parametrize("args,count", [
    (("F4",), 6), (("F5", "--trivext"), 32), (("F2", "--trivext"), 20), (("star2_m2",), 6),
])
def test_stt_count(capsys, fixture_path, args, count):
    code, out, _ = run(capsys, "stt", fixture_path(args[0]), *args[1:], "--count")
    assert code == 0
    assert json.loads(out)["count"] == count


def test_stt_infinite(capsys, fixture_path):
    code, out, err = run(capsys, "stt", fixture_path("cycle4"))
    assert code == 4
    assert json.loads(out)["finite"] is False and "band" in err


def test_stt_hasse(capsys, fixture_path, tmp_path):
    dot = tmp_path / "h.dot"
    code, out, _ = run(capsys, "stt", fixture_path("F4"), "--hasse", "--dot", str(dot))
    assert code == 0 and "2-regular: True" in out and "sink: (0 | 1,2)" in out
    assert dot.read_text().count("->") == 6


def test_stt_list(capsys, fixture_path):
    code, out, _ = run(capsys, "stt", fixture_path("F6"), "--list")
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_json_report_is_stable(capsys, fixture_path):
    a = json.loads(run(capsys, "--json", "stt", fixture_path("F4"), "--count")[1])
    b = json.loads(run(capsys, "--json", "stt", fixture_path("F4"), "--count")[1])
    for r in (a, b):
        r.pop("elapsed_ms")
    assert a == b and a["command"] == "stt" and a["outcome"]["count"] == 6


def test_verify_quick_is_reproducible(capsys):
    code, first, _ = run(capsys, "verify-paper", "--level", "quick", "--seed", "7")
    assert code == 0
    code, second, _ = run(capsys, "verify-paper", "--level", "quick", "--seed", "7")
    assert first == second
    assert first.count("PASS") == 11
