from pathlib import Path
from typing import List, Optional

from ..aliases import PathOrStr
from ..data_model import *
from ..exceptions import *
from ..reptable import builtin_table, get_entry, load_table, parse_table, serialize_table
from .service_client import ServiceClient


class TableClient(ServiceClient):
    """
    Accessed via :data:`ModRep.table <modrep.ModRep.table>`.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._entries: Optional[List[TableEntry]] = None

    def entries(self) -> List[TableEntry]:
        """
        The polynomial table in use: the file named by
        :data:`Config.table_path <modrep.Config.table_path>` if set, otherwise the built-in table.

        :raises TableError: If the table file is malformed.
        """
        if self._entries is None:
            if self.config.table_path is not None:
                self._entries = self.load(self.config.table_path)
            else:
                self._entries = builtin_table()
                self.logger.debug("Using the built-in table (%d entries)", len(self._entries))
        return list(self._entries)

    def get(self, k: int, ell: int) -> TableEntry:
        """
        :examples:

        >>> modrep.table.get(12, 11).coeffs[0]
        -111

        :raises EntryNotFound: If the table has no entry for ``(k, ell)``.
        """
        return get_entry(self.entries(), k, ell)

    def builtin(self) -> List[TableEntry]:
        return builtin_table()

    def load(self, path: PathOrStr) -> List[TableEntry]:
        """
        Load a table file.

        :raises TableError: If the file is malformed.
        """
        self.logger.debug("Loading polynomial table from '%s'", path)
        entries = load_table(path)
        self.logger.debug("Loaded %d entries from '%s'", len(entries), path)
        return entries

    def parse(self, text: str) -> List[TableEntry]:
        return parse_table(text)

    def serialize(self, entries: Optional[List[TableEntry]] = None) -> str:
        return serialize_table(entries if entries is not None else self.entries())

    def save(self, path: PathOrStr, entries: Optional[List[TableEntry]] = None):
        Path(path).write_text(self.serialize(entries), encoding="utf-8")
