"""Source positions shared by the tokenizer, parser, model and reports."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SourceSpan:
    """A 1-based, inclusive region of a source file."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self) -> None:
        if (self.start_line, self.start_col) > (self.end_line, self.end_col):
            raise ValueError(f"span starts after it ends: {self}")

    def __str__(self) -> str:
        return f"{self.file}:{self.start_line}:{self.start_col}"

    def to(self, other: "SourceSpan") -> "SourceSpan":
        """Smallest span covering this one and `other` (same file)."""
        return SourceSpan(
            self.file,
            self.start_line,
            self.start_col,
            other.end_line,
            other.end_col,
        )


def synthetic_span(label: str = "<builtin>") -> SourceSpan:
    """Placeholder span for declarations built in memory rather than parsed."""
    return SourceSpan(label, 1, 1, 1, 1)
