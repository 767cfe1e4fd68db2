import csv
import io
from pathlib import Path

from rich.console import Console
from rich.table import Table

from kloosterman.core.utils.json import dumps

from .commands import CommandOutput
from .config import FormatLiteral


SCHEMA_VERSION = "1"


def render_json(output: CommandOutput) -> str:
    document = {"schema": SCHEMA_VERSION, "command": output.command, **output.payload}
    return dumps(document, indent=2) + "\n"


def render_csv(output: CommandOutput) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for i, section in enumerate(output.sections):
        if i:
            buf.write("\n")
        writer.writerow(section.columns)
        writer.writerows(section.rows)
    return buf.getvalue()


def render_table(output: CommandOutput, width: int = 120) -> str:
    console = Console(file=io.StringIO(), width=width, color_system=None, force_terminal=False)
    for section in output.sections:
        table = Table(title=section.title)
        for column in section.columns:
            table.add_column(column)
        for row in section.rows:
            table.add_row(*row)
        console.print(table)
    return console.file.getvalue()


def render(output: CommandOutput, fmt: FormatLiteral) -> str:
    if fmt == "json":
        return render_json(output)
    if fmt == "csv":
        return render_csv(output)
    return render_table(output)


def emit(text: str, out: Path | None) -> None:
    """Write rendered output to `out`, or to stdout."""
    if out is None:
        print(text, end="")
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
