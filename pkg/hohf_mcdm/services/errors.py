"""Error hierarchy shared by the services."""

from __future__ import annotations

from typing import Any


class HOHFError(RuntimeError):
    """Raised when a pipeline operation fails.

    ``code`` is machine-readable and stable; ``details`` carries the offending
    subset, cell or pair so callers can report it without parsing messages.
    """

    def __init__(
        self,
        code: str,
        message: str,
        *,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message)
        self.code = code
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message, "details": self.details}
