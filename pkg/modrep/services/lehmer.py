from pathlib import Path
from typing import Callable, Iterator, List, Optional, TextIO, Tuple, Union

from ..aliases import PathOrStr
from ..data_model import *
from ..exceptions import *
from ..lehmer import (
    MAX_LIMIT,
    SearchPoly,
    h_max_for_limit,
    scan_chunk,
    search_polys,
    serre_sieve,
    tested_candidates,
)
from ..progress import get_scan_progress
from ..util import chunk_ranges, parse_limit, read_json_lines, to_json_line
from .service_client import ServiceClient


class LehmerClient(ServiceClient):
    """
    Accessed via :data:`ModRep.lehmer <modrep.ModRep.lehmer>`.
    """

    def sieve(self, h_lo: int, h_hi: int, trace: bool = False) -> Iterator[Candidate]:
        """
        :examples:

        >>> [c.passed_mod49 for c in modrep.lehmer.sieve(29, 31, trace=True)]
        [False, True, False]
        """
        return serre_sieve(h_lo, h_hi, trace=trace)

    def candidates(self, h_lo: int, h_hi: int) -> Iterator[Candidate]:
        """
        The candidates of :meth:`sieve` with the splitting test of each ``P_{12,ell}`` in the
        table attached.

        :examples:

        >>> [c.splitting for c in modrep.lehmer.candidates(7366218, 7366218)]
        [{11: True, 13: True, 17: True, 19: True}]
        """
        return tested_candidates(h_lo, h_hi, self._search_polys())

    def scan(
        self,
        limit: Union[int, str],
        checkpoint: Optional[PathOrStr] = None,
        emit: Optional[Callable[[str], None]] = None,
        quiet: bool = True,
    ) -> List[LehmerHit]:
        """
        Search every ``p = h*M - 1 <= limit`` satisfying Serre's criteria for ``tau(p) = 0``
        modulo 11, 13, 17 and 19.

        The range of ``h`` is cut into chunks of :data:`Config.checkpoint_interval
        <modrep.Config.checkpoint_interval>`. After each chunk the hits found in it and a
        progress record are passed to ``emit`` as JSON lines, in chunk order whatever the
        number of workers.

        The polynomials ``P_{12,ell}`` come from the client's table, so
        :data:`Config.table_path <modrep.Config.table_path>` applies to the search.

        :param limit: The largest ``p`` to consider, e.g. ``10**20`` or ``"1e20"``.
        :param checkpoint: A JSON Lines file the records are also appended to. If it already
            holds records from an earlier run, those up to the last progress record are
            replayed through ``emit`` and the search continues from there.
        :param emit: Receives each record as a line of JSON, without the newline.
        :param quiet: Don't display a progress bar.

        :returns: Every hit, in ascending order of ``p``, replayed ones included.

        :raises OutOfRangeError: If ``limit`` is beyond :data:`~modrep.lehmer.MAX_LIMIT`.
        :raises CheckpointError: If the checkpoint can't be read or covers more than ``limit``.
        :raises TableError: If the configured table file is malformed.
        """
        p_limit = parse_limit(limit)
        if p_limit > MAX_LIMIT:
            raise OutOfRangeError(f"searching beyond {MAX_LIMIT} isn't supported, got {p_limit}")
        h_max = h_max_for_limit(p_limit)
        polys = self._search_polys()

        hits: List[LehmerHit] = []
        h_done = 0
        checkpoint_file: Optional[TextIO] = None
        if checkpoint is not None:
            replayed, h_done = self._replay(Path(checkpoint), h_max)
            for record in replayed:
                if isinstance(record, LehmerHit):
                    hits.append(record)
                if emit is not None:
                    emit(to_json_line(record.to_json()))
            checkpoint_file = Path(checkpoint).open("a")

        def write(record: LehmerRecord):
            line = to_json_line(record.to_json())
            if checkpoint_file is not None:
                checkpoint_file.write(line + "\n")
                checkpoint_file.flush()
            if emit is not None:
                emit(line)

        chunks = [
            (h_lo, h_hi, polys)
            for h_lo, h_hi in chunk_ranges(h_done + 1, h_max, self.config.checkpoint_interval)
        ]
        self.logger.info(
            "Searching h from %d to %d (p <= %d) in %d chunks",
            h_done + 1,
            h_max,
            p_limit,
            len(chunks),
        )
        progress = get_scan_progress(quiet)
        try:
            with progress:
                task_id = progress.add_task("Searching", total=len(chunks))
                for result in self.ordered_map(
                    scan_chunk, chunks, progress=progress, task_id=task_id
                ):
                    self.logger.debug(
                        "h in [%d, %d]: %d candidates, %d hits",
                        result.h_lo,
                        result.h_hi,
                        result.candidates,
                        len(result.hits),
                    )
                    for hit in result.hits:
                        self.logger.info("tau(%d) = 0 mod 11*13*17*19 (h = %d)", hit.p, hit.h)
                        write(hit)
                    hits.extend(result.hits)
                    write(LehmerProgress(h_done=result.h_hi))
        finally:
            if checkpoint_file is not None:
                checkpoint_file.close()
        self.logger.info("Search up to %d done, %d hits", p_limit, len(hits))
        return hits

    def primes(self, limit: Union[int, str], quiet: bool = True) -> List[int]:
        """
        :examples:

        >>> modrep.lehmer.primes("2.2689e16")
        []
        """
        return [hit.p for hit in self.scan(limit, quiet=quiet)]

    def _search_polys(self) -> Tuple[SearchPoly, ...]:
        return search_polys(self.modrep.table.get(12, ell) for ell in SEARCH_ELLS)

    def _replay(self, path: Path, h_max: int):
        """
        Read the records of a checkpoint up to its last progress record, truncating
        anything after that.
        """
        if not path.exists():
            return [], 0
        try:
            raw = read_json_lines(path)
        except (OSError, ValueError) as e:
            raise CheckpointError(f"can't read checkpoint '{path}': {e}")
        records: List[LehmerRecord] = []
        for i, data in enumerate(raw):
            kind = data.get("type") if isinstance(data, dict) else None
            try:
                if kind == "hit":
                    records.append(LehmerHit.from_json(data))
                elif kind == "progress":
                    records.append(LehmerProgress.from_json(data))
                else:
                    raise CheckpointError(f"record {i + 1} of '{path}' has unknown type {kind!r}")
            except ValidationError as e:
                raise CheckpointError(f"record {i + 1} of '{path}' is invalid: {e}")

        last = max(
            (i for i, r in enumerate(records) if isinstance(r, LehmerProgress)), default=-1
        )
        records = records[: last + 1]
        h_done = records[-1].h_done if records else 0  # type: ignore[union-attr]
        if h_done > h_max:
            raise CheckpointError(
                f"checkpoint '{path}' covers h up to {h_done}, beyond this search's {h_max}"
            )
        with path.open("w") as f:
            for record in records:
                f.write(to_json_line(record.to_json()) + "\n")
        self.logger.info("Resuming from checkpoint '%s' after h = %d", path, h_done)
        return records, h_done
