from io import StringIO

from rich.console import Console

from kloosterman.core.identities import VerificationReport, compare


def _report() -> VerificationReport:
    return VerificationReport(
        rows=[
            compare(4, 2, "pless", "o3 dual moments", 80, 80, h=1),
            compare(8, 3, "theorem-a", "T1K recursion", 5, 4, h=1),
        ]
    )


def test_compare():
    row = compare(4, 2, "prop-h", "T0K^1", 3, 3)
    assert row.match
    assert row.h is None
    assert not compare(4, 2, "prop-h", "T0K^1", 3, "3").match


def test_passed_and_failures():
    report = _report()
    assert not report.passed
    assert [row.check for row in report.failures()] == ["theorem-a"]
    assert VerificationReport().passed


def test_json():
    data = _report().model_dump(mode="json", by_alias=True)
    assert data["schema"] == "1"
    assert data["passed"] is False
    assert data["rows"][0] == {
        "q": 4,
        "r": 2,
        "h": 1,
        "check": "pless",
        "method": "o3 dual moments",
        "value": "80",
        "oracle": "80",
        "match": True,
        "detail": None,
    }


def test_table():
    table = _report().to_table()
    assert [c.header for c in table.columns] == ["q", "h", "check", "method", "value", "oracle", "match"]
    assert table.row_count == 2
    buf = StringIO()
    Console(file=buf, width=120, color_system=None).print(table)
    assert "NO" in buf.getvalue()
