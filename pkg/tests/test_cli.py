import io
import json
from pathlib import Path

import pytest

from saturable.cli import run

PROBLEMS = Path(__file__).parent.parent / "gallery" / "problems"


def call(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out)
    return code, out.getvalue()


def test_decide_three_points():
    code, text = call("decide", PROBLEMS / "three_points.ideal")
    assert code == 0 and "Saturable" in text


def test_decide_four_points():
    assert "Saturable" in call("decide", PROBLEMS / "four_points_saturable.ideal")[1]
    code, text = call("decide", PROBLEMS / "four_points_nonsaturable.ideal")
    assert code == 0 and "NotSaturable" in text


def test_hilbert_square():
    code, text = call("hilbert", PROBLEMS / "bb.ideal", "--power", 2, "--at", 9)
    assert code == 0 and text.strip() == "17"


def test_saturate_missing_file():
    assert call("saturate", "nosuchfile")[0] == 2


def test_bad_arguments():
    assert call("frobnicate")[0] == 2
    assert call("limit", PROBLEMS / "three_points.family")[0] == 2


def test_parse_error_exit(tmp_path):
    p = tmp_path / "bad.ideal"
    p.write_text("ring: a0 a1\nideal: a0 + zz\n")
    code, text = call("saturate", p)
    assert code == 2 and "line 2" in text


def test_saturate_json():
    code, text = call("--json", "saturate", PROBLEMS / "three_points.ideal")
    rep = json.loads(text)
    assert code == 0 and rep["command"] == "saturate"
    assert {"input_hash", "timing_ms", "certificates", "assumptions"} <= set(rep)


def test_json_is_deterministic_apart_from_timing():
    a = json.loads(call("--json", "obfib", PROBLEMS / "three_points.ideal")[1])
    b = json.loads(call("obfib", PROBLEMS / "three_points.ideal", "--json")[1])
    a.pop("timing_ms"), b.pop("timing_ms")
    assert a == b


def test_obfib():
    code, text = call("--json", "obfib", PROBLEMS / "three_points.ideal")
    rep = json.loads(text)
    assert code == 0 and rep["value"] == 1
    code, _ = call("obfib", PROBLEMS / "partial.ideal")
    assert code == 1
    code, text = call("--json", "obfib", PROBLEMS / "partial.ideal", "--method", "underived_hom")
    assert code == 0 and json.loads(text)["value"] == 1


def test_obfib_table_bigraded():
    code, text = call("--json", "obfib", PROBLEMS / "bb.ideal", "--table")
    assert code == 0 and json.loads(text)["value"] == {"-1": 1}


def test_decide_unsupported_is_not_applicable():
    assert call("decide", PROBLEMS / "partial.ideal")[0] == 1


def test_limit_routes():
    for route in ("dual", "kernel"):
        code, text = call("limit", PROBLEMS / "three_points.family", "--degree-bound", 4, "--route", route)
        assert code == 0 and "H = (1,3,3,3,3)" in text


def test_verify_limit_forms():
    code, text = call("verify-limit-forms", PROBLEMS / "limit_forms.family")
    assert code == 0 and "certified" in text


def test_rank3_commands():
    assert call("rank3", "square-cert", PROBLEMS / "square.form")[0] == 0
    code, text = call("--json", "rank3", "special3", PROBLEMS / "sextic.form")
    assert code == 0 and json.loads(text)["certificates"][0]["valid"]
    code, text = call("rank3", "exclude-wild", PROBLEMS / "sextic.form", "--assumed-br", 9)
    assert code == 0 and "Certified" in text
    assert call("rank3", "exclude-wild", PROBLEMS / "sextic.form")[0] == 2
    assert call("rank3", "special4", PROBLEMS / "sextic.form")[0] == 1


def test_replicate_single():
    code, text = call("replicate", "--only", "1")
    assert code == 0 and text.startswith("PASS")
    assert call("replicate", "--only", "99")[0] == 2
