import logging

from .config import Config
from .data_model import *
from .exceptions import *
from .services import *
from .version import VERSION

__all__ = ["ModRep"]


class ModRep:
    """
    A client for checking the polynomials attached to the mod-``ell`` Galois
    representations of level 1 cusp forms, and for running the search for primes with
    ``tau(p) = 0``.

    :param config: The :class:`Config`.

    The easiest way to initialize a client is with :meth:`.from_env()`:

    >>> modrep = ModRep.from_env()

    You can then reach the various services through the corresponding property.
    For example, to look up a polynomial, use :data:`ModRep.table`:

    >>> modrep.table.get(12, 13).degree
    14

    .. tip::
        Use the right side nav to browse through the API docs for all of the different services.

    """

    CLIENT_VERSION = VERSION

    logger = logging.getLogger("modrep")

    def __init__(self, config: Config):
        config.validate()
        self._config = config

        # Initialize service clients:
        self._table = TableClient(self)
        self._forms = FormsClient(self)
        self._frobenius = FrobeniusClient(self)
        self._lehmer = LehmerClient(self)
        self._verify = VerifyClient(self)

    def __str__(self) -> str:
        return (
            f"ModRep("
            f"workers={self.config.workers}, "
            f"table='{self.config.table_path or 'built-in'}'"
            f")"
        )

    @classmethod
    def from_env(cls, **overrides) -> "ModRep":
        """
        Initialize a client from a config file and/or environment variables.

        :param overrides: Fields in the :class:`Config` to override.

        .. note::
            The config file is found through the ``MODREP_CONFIG`` environment variable,
            falling back to ``$HOME/.modrep/config.yml``. Neither has to exist.

        """
        return cls(Config.from_env(**overrides))

    @property
    def config(self) -> Config:
        """
        The client's :class:`Config`.
        """
        return self._config

    @property
    def table(self) -> TableClient:
        """
        Load, look up and save polynomial tables.

        :examples:

        >>> len(modrep.table.entries())
        13
        """
        return self._table

    @property
    def forms(self) -> FormsClient:
        """
        q-expansions of the cusp forms ``Delta_k`` and the congruences their coefficients satisfy.

        :examples:

        >>> modrep.forms.tau(12, 3).tau
        252
        """
        return self._forms

    @property
    def frobenius(self) -> FrobeniusClient:
        """
        Predicted and observed Frobenius cycle types, and the consistency scan between them.

        :examples:

        >>> modrep.frobenius.consistency((12, 11), prime_max=200).ok
        True
        """
        return self._frobenius

    @property
    def lehmer(self) -> LehmerClient:
        """
        The search for primes ``p`` with ``tau(p) = 0``.

        .. tip::
            The full search up to ``10**20`` takes a while, set
            :data:`Config.workers <modrep.Config.workers>` to spread it over several processes.
        """
        return self._lehmer

    @property
    def verify(self) -> VerifyClient:
        """
        Integrity checks for the polynomial table.

        :examples:

        >>> modrep.verify.oddness((12, 13)).top_value
        -3
        """
        return self._verify
