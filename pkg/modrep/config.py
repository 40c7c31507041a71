import logging
import os
import warnings
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import ClassVar, Optional, Set

import yaml

from .exceptions import ConfigurationError

DEFAULT_CONFIG_LOCATION: Optional[Path] = None
try:
    DEFAULT_CONFIG_LOCATION = Path.home() / ".modrep" / "config.yml"
except RuntimeError:
    # Can't locate home directory.
    pass


__all__ = ["Config"]

logger = logging.getLogger(__name__)


@dataclass
class Config:
    workers: int = 1
    """
    How many worker processes the long scans use. With 1 everything runs in-process.
    """

    table_path: Optional[str] = None
    """
    A polynomial table file to use instead of the built-in table.
    """

    prime_max: int = 10_000
    """
    Default prime bound for consistency scans and congruence checks.
    """

    chebotarev_bound: int = 100_000
    """
    Default prime bound for the factorization pattern frequency check.
    """

    witness_bound: int = 10_000
    """
    How far to look for a prime keeping a polynomial irreducible.
    """

    sigma: float = 4.0
    """
    Frequency deviations beyond this many Poisson standard deviations are flagged.
    """

    checkpoint_interval: int = 1_000_000
    """
    How many values of ``h`` the search covers between progress records.
    """

    exact_bound: int = 512
    """
    Largest truncation bound for which exact q-expansions are multiplied out directly.
    Longer ones are assembled from residues modulo several primes.
    """

    CONFIG_PATH_KEY: ClassVar[str] = "MODREP_CONFIG"
    WORKERS_KEY: ClassVar[str] = "MODREP_WORKERS"
    TABLE_KEY: ClassVar[str] = "MODREP_TABLE"
    IGNORE_FIELDS: ClassVar[Set[str]] = set()

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        """
        Initialize a config from a local config file if one can be found, then
        environment variables, then keyword overrides.

        .. note::
            Environment variables take precedence over values in the config file.

        """
        path = cls.find_config()
        config = cls.from_path(path) if path is not None else cls()

        # Override with environment variables.
        if cls.WORKERS_KEY in os.environ:
            try:
                config.workers = int(os.environ[cls.WORKERS_KEY])
            except ValueError:
                raise ConfigurationError(
                    f"'{cls.WORKERS_KEY}' must be an integer, got '{os.environ[cls.WORKERS_KEY]}'"
                )
        if os.environ.get(cls.TABLE_KEY):
            config.table_path = os.environ[cls.TABLE_KEY]

        # Override with any arguments passed to this method.
        for name, value in overrides.items():
            if hasattr(config, name):
                setattr(config, name, value)
            else:
                raise ConfigurationError(f"modrep config has no attribute '{name}'")

        config.validate()
        return config

    @classmethod
    def from_path(cls, path: Path) -> "Config":
        """
        Initialize a config from a local config file.
        """
        with open(path) as config_file:
            logger.debug("Loading modrep config from '%s'", path)
            field_names = {f.name for f in fields(cls)}
            data = yaml.load(config_file, Loader=yaml.SafeLoader) or {}
            if not isinstance(data, dict):
                raise ConfigurationError(f"config '{path}' must be a mapping")
            for key in list(data.keys()):
                if key in cls.IGNORE_FIELDS:
                    data.pop(key)
                    continue
                value = data[key]
                if key not in field_names:
                    del data[key]
                    warnings.warn(
                        f"Unknown field '{key}' found in config '{path}'. It will be ignored.",
                        RuntimeWarning,
                    )
                elif isinstance(value, str) and value == "":
                    # Replace empty strings with `None`
                    data[key] = None
            return cls(**data)

    def validate(self):
        """
        :raises ConfigurationError: If a bound isn't positive or there are no workers.
        """
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigurationError(f"'workers' must be at least 1, got {self.workers}")
        for name in (
            "prime_max",
            "chebotarev_bound",
            "witness_bound",
            "checkpoint_interval",
            "exact_bound",
        ):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigurationError(f"'{name}' must be a positive integer, got {value}")
        if self.sigma <= 0:
            raise ConfigurationError(f"'sigma' must be positive, got {self.sigma}")

    def save(self, path: Optional[Path] = None):
        """
        Save the config to the given path.
        """
        if path is None:
            if self.CONFIG_PATH_KEY in os.environ:
                path = Path(os.environ[self.CONFIG_PATH_KEY])
            elif DEFAULT_CONFIG_LOCATION is not None:
                path = DEFAULT_CONFIG_LOCATION
        if path is None:
            raise ValueError("param 'path' is required")
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as config_file:
            yaml.dump(asdict(self), config_file)

    @classmethod
    def find_config(cls) -> Optional[Path]:
        if cls.CONFIG_PATH_KEY in os.environ:
            path = Path(os.environ[cls.CONFIG_PATH_KEY])
            if path.is_file():
                return path
        elif DEFAULT_CONFIG_LOCATION is not None and DEFAULT_CONFIG_LOCATION.is_file():
            return DEFAULT_CONFIG_LOCATION

        return None
