"""
Exceptions raised by the Hom complex toolkit
"""

from typing import Optional


class HomcxError(Exception):
    """Base class for every error the toolkit raises on purpose"""

    stage: Optional[str] = None


class InvalidInput(HomcxError, ValueError):
    """An input violates a documented invariant; the message names it"""

    def __init__(self, message: str, stage: Optional[str] = None):
        super().__init__(message)
        self.stage = stage


class CellCapExceeded(HomcxError):
    """A construction would materialize more cells than the configured cap"""

    def __init__(self, stage: str, requested: int, cap: int):
        super().__init__(
            f"{stage}: {requested} cells requested, cap is {cap}"
        )
        self.stage = stage
        self.requested = requested
        self.cap = cap


DEFAULT_MAX_CELLS = 5_000_000


def check_cap(stage: str, requested: int, cap: int) -> None:
    if requested > cap:
        raise CellCapExceeded(stage, requested, cap)
