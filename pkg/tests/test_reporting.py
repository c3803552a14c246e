"""Report document assembly and rendering."""

import json

import pytest

from meanlab.reporting import (
    CSV_HEADER,
    CheckRecord,
    build_report,
    render_report,
    to_csv,
    to_json,
    to_text,
)


def _rec(check="01-x", name="n", passed=True, **kw):
    return CheckRecord(check=check, name=name, passed=passed, **kw)


class TestBuildReport:
    def test_empty(self):
        doc = build_report([])
        assert doc.summary == {"pass": 0, "fail": 0, "total": 0}
        assert doc.records == ()
        assert json.loads(to_json(doc))["records"] == []

    def test_single_pass(self):
        doc = build_report([_rec()])
        assert doc.summary == {"pass": 1, "fail": 0, "total": 1}

    def test_mixed_counts(self):
        doc = build_report([_rec(), _rec(passed=False), _rec(passed=False)])
        assert doc.summary == {"pass": 1, "fail": 2, "total": 3}

    def test_sorted_by_check_then_stable(self):
        doc = build_report([
            _rec(check="02-b", name="first"),
            _rec(check="01-a", name="x"),
            _rec(check="02-b", name="second"),
        ])
        assert [(r.check, r.name) for r in doc.records] == [
            ("01-a", "x"), ("02-b", "first"), ("02-b", "second")]


class TestRendering:
    def test_json_roundtrip_fields(self):
        doc = build_report([_rec(x=1.0, y=3.0, z=0.5, margin=1e-3, detail="d")])
        payload = json.loads(to_json(doc))
        record = payload["records"][0]
        assert record == {"check": "01-x", "name": "n", "x": 1.0, "y": 3.0,
                          "z": 0.5, "margin": 1e-3, "pass": True, "detail": "d"}
        assert payload["summary"] == {"pass": 1, "fail": 0, "total": 1}
        assert payload["tool"] == "meanlab"

    def test_csv_header_and_blanks(self):
        doc = build_report([_rec(margin=None)])
        lines = to_csv(doc).splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert lines[1] == "01-x,n,,,,,true"

    def test_text_contains_status_lines(self):
        doc = build_report([_rec(), _rec(name="bad", passed=False)])
        text = to_text(doc)
        assert "[PASS] 01-x :: n" in text
        assert "[FAIL] 01-x :: bad" in text
        assert "1 passed, 1 failed, 2 total" in text

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_report(build_report([]), "yaml")
