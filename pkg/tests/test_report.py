import json
import os
from pathlib import Path

import pytest

from vltwist.report import (
    FAIL,
    PASS,
    Check,
    Report,
    check_equal,
    check_variants,
    record_timings,
    render_json,
    render_report,
    render_text,
    resolved,
    variant_tag,
)
from vltwist.suites import Extras, run_suite
from vltwist.twist import make_context

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("VLTWIST_REGEN_GOLDEN") == "1"


def _golden(name: str, text: str):
    path = GOLDEN / name
    if REGEN:
        path.write_text(text, encoding="utf-8")
    assert text == path.read_text(encoding="utf-8")


def test_empty_report_is_header_only():
    text = render_text(Report("empty", {}))
    assert text.splitlines()[0] == "suite: empty"
    assert len(text.splitlines()) == 3
    _golden("empty.txt", text)
    assert render_text(Report.from_text(text)) == text


def test_one_passing_row():
    r = Report("one", {"order": 2})
    r.add(Check("only_check", PASS, 3, 3))
    text = render_text(r)
    rows = [line for line in text.splitlines() if line.startswith("only_check")]
    assert len(rows) == 1 and " pass " in rows[0]
    _golden("one_pass.txt", text)


def test_status_validation():
    assert variant_tag(resolved("weight")) == "weight"
    assert variant_tag(PASS) is None
    with pytest.raises(ValueError):
        Check("x", "maybe")
    assert not Check("x", FAIL).ok
    assert Check("x", resolved("a")).ok


def test_checks_sorted_and_json_canonical():
    r = Report("s", {"b": 1, "a": [1, "x"]})
    r.add(Check("zeta", PASS))
    r.add(Check("alpha", FAIL, 1, 2))
    d = json.loads(render_json(r))
    assert [c["name"] for c in d["checks"]] == ["alpha", "zeta"]
    assert list(d) == sorted(d)
    assert render_json(r).endswith("}\n")
    bad = Report("s", {"x": 0.5})
    with pytest.raises(TypeError):
        render_json(bad)
    with pytest.raises(ValueError):
        render_report(r, "xml")


def test_variant_resolution_rules():
    chk, held = check_variants("v", {"a": lambda: True, "b": lambda: False})
    assert chk.status == "resolved-variant(a)" and held == ["a"]
    assert check_variants("v", {"a": lambda: True, "b": lambda: True})[0].status == FAIL
    assert check_variants("v", {"a": lambda: False, "b": lambda: False})[0].status == FAIL


def test_timings_opt_in():
    assert check_equal("x", lambda: [1], lambda: [1]).elapsed_ms == 0
    with record_timings():
        c = check_equal("x", lambda: sum(range(10**6)), lambda: sum(range(10**6)))
    assert c.elapsed_ms >= 0


def test_golden_round_trip_text_and_json():
    r = run_suite("lemma3_3_twist", make_context(order=3), Extras(seed=0))
    text = render_text(r)
    js = render_json(r)
    _golden("lemma3_3_twist.txt", text)
    _golden("lemma3_3_twist.json", js)
    again = Report.from_json(js)
    assert render_json(again) == js
    assert render_text(again) == text
    assert render_text(Report.from_text(text)) == text
    assert render_json(Report.from_text(text)) == js


def test_closed_form_suite_golden():
    r = run_suite("theorem2_6", make_context(order=3), Extras(seed=7))
    _golden("theorem2_6_N3_seed7.json", render_json(r))
