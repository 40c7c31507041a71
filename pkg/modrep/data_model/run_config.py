from pathlib import Path
from typing import Optional

from .base import BaseModel, StrEnum, model_validator

__all__ = ["Command", "RunConfig"]


class Command(StrEnum):
    tau = "tau"
    verify_table = "verify-table"
    consistency = "consistency"
    lehmer = "lehmer"


class RunConfig(BaseModel):
    """
    The parameters of one command-line run, after merging flags with the :class:`~modrep.Config`.
    """

    command: Command
    k: Optional[int] = None
    ell: Optional[int] = None
    n: Optional[int] = None
    prime_max: int
    limit: Optional[int] = None
    workers: int
    table_path: Optional[Path] = None
    checkpoint: Optional[Path] = None
    output: Optional[Path] = None
    chebotarev_bound: int
    witness_bound: int
    sigma: float
    check: Optional[str] = None
    quiet: bool = False
    verbosity: int = 0

    @model_validator(mode="after")
    def _check_bounds(self) -> "RunConfig":
        if self.workers < 1:
            raise ValueError(f"worker count must be at least 1, got {self.workers}")
        for name in ("n", "prime_max", "limit", "chebotarev_bound", "witness_bound"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"'{name}' must be positive, got {value}")
        if self.sigma <= 0:
            raise ValueError(f"'sigma' must be positive, got {self.sigma}")
        return self
