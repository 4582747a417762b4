"""Base Pydantic schemas for JSON-lines reports."""
import json
from typing import Generic, Optional, TypeVar

import jsonschema
from pydantic import BaseModel, ConfigDict, Field

T = TypeVar("T")


class BaseSchema(BaseModel):
    """Base schema with common configuration."""

    model_config = ConfigDict(from_attributes=True)


class ReportSchema(BaseSchema, Generic[T]):
    """One report line: status and message, the command and entry, and the payload."""

    status: str = Field(
        description="Report status", examples=["success", "failed", "error"]
    )
    message: Optional[str] = Field(default=None, description="Report message")
    command: str = Field(description="Command that produced the report")
    entry: Optional[str] = Field(default=None, description="Corpus entry id")
    data: Optional[T] = Field(default=None, description="Report payload")
    timing: Optional[float] = Field(
        default=None, description="Wall-clock seconds, when requested"
    )


def render_report(report: ReportSchema) -> str:
    """
    Serialize a report as one JSON line after validating it against its schema.

    Fields keep declaration order and timing is left out unless set, so
    reruns produce identical lines.

    Raises:
        jsonschema.ValidationError: if the payload does not match the schema
    """
    exclude = {"timing"} if report.timing is None else None
    payload = report.model_dump(mode="json", exclude=exclude)
    jsonschema.validate(payload, type(report).model_json_schema())
    return json.dumps(payload, separators=(",", ":"))
