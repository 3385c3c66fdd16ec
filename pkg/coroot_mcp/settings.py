"""Server settings resolved from command-line flags, then environment variables."""

import os
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import ValidationError

MAX_LENGTH_ENV = "COROOT_MCP_MAX_LENGTH"
LOG_LEVEL_ENV = "COROOT_MCP_LOG_LEVEL"

DEFAULT_MAX_LENGTH = 8
DEFAULT_LOG_LEVEL = "WARNING"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class ServerSettings:
    max_length: int = DEFAULT_MAX_LENGTH
    log_level: str = DEFAULT_LOG_LEVEL

    def __post_init__(self):
        if self.max_length < 1:
            raise ValidationError(f"max length must be positive, got {self.max_length}")
        if self.log_level not in LOG_LEVELS:
            raise ValidationError(f"unknown log level {self.log_level!r}")

    def check_length(self, theta: Sequence[int]) -> None:
        """Reject coweights longer than the configured cap."""
        if sum(abs(x) for x in theta) > self.max_length:
            raise ValidationError(
                f"theta {list(theta)} is longer than the server cap {self.max_length}"
            )


def resolve_settings(
    max_length: Optional[int] = None,
    log_level: Optional[str] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> ServerSettings:
    env = os.environ if environ is None else environ
    if max_length is None and env.get(MAX_LENGTH_ENV):
        try:
            max_length = int(env[MAX_LENGTH_ENV])
        except ValueError:
            raise ValidationError(f"{MAX_LENGTH_ENV} must be an integer") from None
    if log_level is None:
        log_level = env.get(LOG_LEVEL_ENV) or DEFAULT_LOG_LEVEL
    return ServerSettings(
        max_length=DEFAULT_MAX_LENGTH if max_length is None else max_length,
        log_level=log_level.upper(),
    )
