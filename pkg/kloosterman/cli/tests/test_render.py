from kloosterman.cli.commands import CommandOutput, Section
from kloosterman.cli.render import emit, render


def _output() -> CommandOutput:
    return CommandOutput(
        command="demo",
        payload={"q": 4, "values": ["1", "2"]},
        sections=[
            Section(title="first", columns=["a", "b"], rows=[["1", "2"]]),
            Section(title="second", columns=["c"], rows=[["3"], ["4"]]),
        ],
    )


def test_json():
    assert render(_output(), "json") == '{\n  "schema": "1",\n  "command": "demo",\n  "q": 4,\n  "values": [\n    "1",\n    "2"\n  ]\n}\n'


def test_csv_separates_sections():
    assert render(_output(), "csv") == "a,b\n1,2\n\nc\n3\n4\n"


def test_table_has_titles():
    text = render(_output(), "table")
    assert "first" in text
    assert "second" in text
    assert "\x1b[" not in text


def test_emit(tmp_path, capsys):
    emit("hello\n", None)
    assert capsys.readouterr().out == "hello\n"
    target = tmp_path / "a" / "b.txt"
    emit("hello\n", target)
    assert target.read_text() == "hello\n"
