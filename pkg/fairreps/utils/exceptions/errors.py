from __future__ import annotations

from typing import Any


class FairRepsError(Exception):
    code = 4000
    exit_code = 1
    default_detail = "Representative computation failed"

    def __init__(self, detail: str | None = None, **context: Any) -> None:
        self.detail = detail or self.default_detail
        self.context = context
        super().__init__(self.detail)


class GraphFormatError(FairRepsError):
    code = 4001
    exit_code = 2
    default_detail = "The input does not follow the expected format"

    def __init__(self, detail: str | None = None, line: int | None = None) -> None:
        if line is not None:
            detail = f"line {line}: {detail or self.default_detail}"
        super().__init__(detail, line=line)
        self.line = line


class InvalidInputError(FairRepsError):
    code = 4002
    exit_code = 2
    default_detail = "The input violates a precondition"


class InfeasibleError(FairRepsError):
    code = 4003
    default_detail = "The family admits no system of representatives"


class NotRepresentativeError(FairRepsError):
    code = 4004
    default_detail = "The given set is not a system of representatives"

    def __init__(self, violations: list[Any], detail: str | None = None) -> None:
        super().__init__(
            detail or f"{self.default_detail} ({len(violations)} violated members)",
            violations=violations,
        )
        self.violations = violations


class CapExceededError(FairRepsError):
    code = 4005
    default_detail = "A configured size cap was exceeded"


class PipelineDefect(FairRepsError):
    code = 5001
    default_detail = "A guaranteed consequence of the construction failed"
