import io
import json
import pathlib
import subprocess
import sys

import pytest

from gradedeg import Ideal, PolyRing
from gradedeg.cli import ScriptError, main, parse_script, run
from gradedeg.groebner import ideal_equal

GOLDEN = pathlib.Path(__file__).parent / "golden"
SCRIPTS = sorted(GOLDEN.glob("*.gd"))


def _run(text, **kw):
    out, err = io.StringIO(), io.StringIO()
    code = run(text, out=out, err=err, **kw)
    return code, out.getvalue(), err.getvalue()


def test_hilbert_example():
    code, out, _ = _run("ring x,y; I = x^2,y^2; hilbert I")
    assert code == 0
    assert "text: 1 + 2t + t^2" in out
    assert '"numerator": [1, 2, 1], "denominator_exponent": 0' in out


def test_coeffs_example():
    code, out, _ = _run("ring x,y,z; I = x^2,y^2,z^2,x*y-x*z,x*z-y*z; coeffs I --window 1",
                        as_json=True, timing=False)
    rep = json.loads(out)
    assert code == 0 and rep["result"]["e"][:3] == [8, 4, 0]
    assert rep["result"]["lengths"] == [36, 64, 100]


def test_implicitize_example():
    code, out, _ = _run("ring s,t; implicitize s^4,t^4,s^3*t", as_json=True, timing=False)
    res = json.loads(out)["result"]
    assert code == 0 and res["edeg"] == 4 and res["birational"] is True
    B = PolyRing.from_names("T1,T2,T3")
    assert B(res["F"]) in (B("T3^4 - T1^3*T2"), B("T1^3*T2 - T3^4"))


@pytest.mark.parametrize("script", SCRIPTS, ids=lambda p: p.stem)
def test_golden_text(script):
    code, out, err = _run(script.read_text())
    assert code == 0, err
    assert out == script.with_suffix(".out").read_text()


@pytest.mark.parametrize("script", SCRIPTS, ids=lambda p: p.stem)
def test_golden_json_and_determinism(script):
    first = _run(script.read_text(), as_json=True, timing=False)[1]
    second = _run(script.read_text(), as_json=True, timing=False)[1]
    assert first == second == script.with_suffix(".json").read_text()


def test_timing_field_only_when_requested():
    _, out, _ = _run("ring x,y; I = x^2,y^2; hilbert I", as_json=True)
    assert "elapsed_ms" in json.loads(out)
    _, out, _ = _run("ring x,y; I = x^2,y^2; hilbert I", as_json=True, timing=False)
    assert "elapsed_ms" not in json.loads(out)


def test_printed_ideals_reparse():
    text = "ring x,y,z; I = x^2*y-z^3,x*y^2+3/2*z^3,y^3; decompose x^2,x*y,y*z; hilbert I"
    _, out, _ = _run(text, as_json=True, timing=False)
    reports = [json.loads(line) for line in out.splitlines()]
    R = PolyRing.from_names("x,y,z")
    original = Ideal(R, ["x^2*y-z^3", "x*y^2+3/2*z^3", "y^3"])
    printed = reports[1]["inputs"]["ideals"]["I"]
    assert ideal_equal(Ideal(R, printed), original)
    for comp in reports[0]["result"]["components"]:
        assert Ideal(R, comp).gens  # every component reparses


def test_exit_codes():
    assert _run("ring x,y; I = x^2; hilbert I")[0] == 0
    code, out, err = _run("ring x,y; I = x^2,y^2; secelim I x^3")
    assert code == 1 and "error" in err
    assert _run("ring x,y; I = x^2,; hilbert I")[0] == 2
    assert _run("ring x,y; frobnicate x")[0] == 2
    assert _run("ring x,y; ring z; hilbert z")[0] == 2
    assert _run("hilbert x")[0] == 2


def test_parse_error_position():
    code, _, err = _run("ring x,y\nI = x^2,\nhilbert I")
    assert code == 2 and "line 2, column" in err
    with pytest.raises(ScriptError) as info:
        parse_script("ring x,y\n\nhilbert x --wndow 2")
    assert "line 3" in str(info.value)


def test_rees_name_collision_rejected():
    code, _, err = _run("ring T1,t; implicitize T1^2,T1*t,t^2")
    assert code == 1 and "reserved" in err


def test_command_line_entry_point(tmp_path):
    script = tmp_path / "s.gd"
    script.write_text("ring x,y\nI = x^2,y^2\nhilbert I\n")
    proc = subprocess.run([sys.executable, "-m", "gradedeg.cli", "--json", "--no-timing", str(script)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["degree"] == 4
    proc = subprocess.run([sys.executable, "-m", "gradedeg.cli", "-"], input="ring x; hilbert x^3",
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "1 + t + t^2" in proc.stdout
