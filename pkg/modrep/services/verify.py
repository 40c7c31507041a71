from typing import List, Optional, Tuple, Union

from ..arith import prime_list
from ..data_model import *
from ..exceptions import *
from ..poly import discriminant
from ..progress import get_entries_progress, get_scan_progress
from ..verify import (
    chebotarev_rows,
    check_chebotarev_bound,
    check_discriminant,
    check_not_totally_real,
    find_irreducibility_witness,
    observe_patterns,
)
from .service_client import ServiceClient, batches

PRIMES_PER_TASK = 1000


class VerifyClient(ServiceClient):
    """
    Accessed via :data:`ModRep.verify <modrep.ModRep.verify>`.
    """

    def discriminant(self, entry: Union[TableEntry, Tuple[int, int]]) -> DiscriminantCheck:
        """
        :examples:

        >>> modrep.verify.discriminant((12, 11)).expected_exponent
        21
        """
        return check_discriminant(self.resolve_entry(entry))

    def oddness(self, entry: Union[TableEntry, Tuple[int, int]]) -> OddnessCheck:
        return check_not_totally_real(self.resolve_entry(entry))

    def witness(
        self, entry: Union[TableEntry, Tuple[int, int]], search_bound: Optional[int] = None
    ) -> Optional[int]:
        entry = self.resolve_entry(entry)
        if search_bound is None:
            search_bound = self.config.witness_bound
        return find_irreducibility_witness(entry, search_bound)

    def chebotarev(
        self,
        entry: Union[TableEntry, Tuple[int, int]],
        prime_bound: Optional[int] = None,
        sigma: Optional[float] = None,
        quiet: bool = True,
        disc: Optional[int] = None,
    ) -> ChebotarevCheck:
        """
        Factorization pattern frequencies over primes up to ``prime_bound`` against the
        cycle type distribution of ``PGL_2(F_ell)``. Primes are factored in parallel when
        :data:`Config.workers <modrep.Config.workers>` is more than 1.
        A bound below 10000 gives a :class:`RuntimeWarning`.

        :raises InvalidArgumentError: If ``prime_bound < 2``.
        """
        entry = self.resolve_entry(entry)
        prime_bound = prime_bound if prime_bound is not None else self.config.chebotarev_bound
        check_chebotarev_bound(prime_bound)
        sigma = sigma if sigma is not None else self.config.sigma
        if disc is None:
            disc = discriminant(entry.poly)
        tasks = [
            (entry, chunk, disc) for chunk in batches(prime_list(prime_bound), PRIMES_PER_TASK)
        ]
        patterns, skipped = [], []
        progress = get_scan_progress(quiet)
        with progress:
            task_id = progress.add_task(f"Factoring {entry}", total=len(tasks))
            for chunk_patterns, chunk_skipped in self.ordered_map(
                observe_patterns, tasks, progress=progress, task_id=task_id
            ):
                patterns.extend(chunk_patterns)
                skipped.extend(chunk_skipped)
        check = ChebotarevCheck(
            prime_bound=prime_bound,
            sample_size=len(patterns),
            sigma=sigma,
            skipped=skipped,
            rows=chebotarev_rows(entry.ell, patterns, sigma),
        )
        for row in check.rows:
            if row.flagged:
                self.logger.warning(
                    "%s: pattern %s seen %d times, expected %.1f (%.1f sigma)",
                    entry,
                    row.cycle_type,
                    row.observed_count,
                    row.expected_count,
                    row.deviation,
                )
        return check

    def entry(
        self,
        entry: Union[TableEntry, Tuple[int, int]],
        witness_bound: Optional[int] = None,
        chebotarev_bound: Optional[int] = None,
        sigma: Optional[float] = None,
        skip_chebotarev: bool = False,
        quiet: bool = True,
    ) -> VerifyReport:
        """
        Run every check on one entry.
        """
        entry = self.resolve_entry(entry)
        witness_bound = witness_bound if witness_bound is not None else self.config.witness_bound
        disc = discriminant(entry.poly)
        self.logger.debug("disc(%s) = %d", entry, disc)
        witness = find_irreducibility_witness(entry, witness_bound, disc)
        if witness is None:
            self.logger.warning(
                "%s: no prime below %d keeps the polynomial irreducible (inconclusive)",
                entry,
                witness_bound,
            )
        report = VerifyReport(
            k=entry.k,
            ell=entry.ell,
            discriminant=check_discriminant(entry, disc),
            oddness=check_not_totally_real(entry, disc),
            irreducibility_witness=witness,
            witness_bound=witness_bound,
            chebotarev=None
            if skip_chebotarev
            else self.chebotarev(entry, chebotarev_bound, sigma, quiet=quiet, disc=disc),
        )
        self.logger.info("%s: %s", entry, "ok" if report.ok else "FAILED")
        return report

    def table(
        self,
        witness_bound: Optional[int] = None,
        chebotarev_bound: Optional[int] = None,
        sigma: Optional[float] = None,
        skip_chebotarev: bool = False,
        raise_on_failure: bool = False,
        quiet: bool = True,
    ) -> List[VerifyReport]:
        """
        Verify every entry of the table in use.

        :raises VerificationFailedError: If ``raise_on_failure`` and some entry fails.
        """
        entries = self.modrep.table.entries()
        reports = []
        progress = get_entries_progress(quiet)
        with progress:
            task_id = progress.add_task("Verifying table", total=len(entries))
            for entry in entries:
                reports.append(
                    self.entry(
                        entry,
                        witness_bound=witness_bound,
                        chebotarev_bound=chebotarev_bound,
                        sigma=sigma,
                        skip_chebotarev=skip_chebotarev,
                    )
                )
                progress.advance(task_id)
        failed = [report for report in reports if not report.ok]
        if raise_on_failure and failed:
            raise VerificationFailedError(
                f"P_{{{failed[0].k},{failed[0].ell}}} failed verification", report=failed[0]
            )
        return reports
