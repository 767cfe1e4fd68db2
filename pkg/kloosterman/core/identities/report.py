from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer
from rich.table import Table


class ReportRow(BaseModel):
    """One verification: a value computed by `method` compared with an independent oracle."""

    q: int
    r: int
    h: int | None = None
    check: str = Field(description="Check name, e.g. 'theorem-a' or 'pless'.")
    method: str
    value: int | str
    oracle: int | str
    match: bool
    detail: str | None = None

    model_config = ConfigDict(extra="forbid", frozen=True)

    @field_serializer("value", "oracle")
    def _decimal(self, v: int | str) -> str:
        return str(v)


def compare(q: int, r: int, check: str, method: str, value: int | str, oracle: int | str, h: int | None = None) -> ReportRow:
    return ReportRow(q=q, r=r, h=h, check=check, method=method, value=value, oracle=oracle, match=value == oracle)


class VerificationReport(BaseModel):
    schema_version: Literal["1"] = Field(default="1", serialization_alias="schema")
    rows: list[ReportRow] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(row.match for row in self.rows)

    def failures(self) -> list[ReportRow]:
        return [row for row in self.rows if not row.match]

    def to_table(self, title: str | None = "Verification report") -> Table:
        table = Table(title=title)
        for column in ("q", "h", "check", "method", "value", "oracle", "match"):
            table.add_column(column, justify="right" if column in ("q", "h") else "left")
        for row in self.rows:
            mark = "[green]yes[/green]" if row.match else "[bold red]NO[/bold red]"
            table.add_row(str(row.q), "" if row.h is None else str(row.h), row.check, row.method, str(row.value), str(row.oracle), mark)
        return table
