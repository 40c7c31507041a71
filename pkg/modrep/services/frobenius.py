from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from ..arith import prime_list
from ..cycle_type import CycleType
from ..data_model import *
from ..exceptions import *
from ..frob import (
    consistency_report,
    enumerate_pgl2_cycle_types,
    observe_primes,
    observed_pattern,
    pgl2_trace_zero_count,
    predicted_patterns,
    trace_zero_criterion_check,
)
from ..poly import discriminant
from ..progress import get_scan_progress
from .service_client import ServiceClient, batches

PRIMES_PER_TASK = 500


class FrobeniusClient(ServiceClient):
    """
    Accessed via :data:`ModRep.frobenius <modrep.ModRep.frobenius>`.
    """

    def predicted_patterns(self, t: int, d: int, ell: int) -> FrozenSet[CycleType]:
        """
        :examples:

        >>> sorted(modrep.frobenius.predicted_patterns(2, 1, 11))
        [CycleType(1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1), CycleType(1, 11)]
        """
        return predicted_patterns(FrobeniusData(t=t % ell, d=d % ell, ell=ell))

    def observed_pattern(self, entry: Union[TableEntry, Tuple[int, int]], p: int) -> CycleType:
        return observed_pattern(self.resolve_entry(entry), p)

    def pgl2_cycle_types(self, ell: int) -> Dict[CycleType, int]:
        return enumerate_pgl2_cycle_types(ell)

    def pgl2_trace_zero_count(self, ell: int) -> int:
        return pgl2_trace_zero_count(ell)

    def trace_zero_criterion(self, q: int) -> bool:
        """
        Exhaustively check, over ``GL_2(F_q)``, that trace zero, having only orbits of
        length 1 and 2 with 0 or 2 fixed points, and having an orbit of length 2 are
        equivalent.
        """
        ok = trace_zero_criterion_check(q)
        self.logger.debug("Checked trace zero equivalence over GL_2(F_%d): %s", q, ok)
        return ok

    def consistency(
        self,
        entry: Union[TableEntry, Tuple[int, int]],
        prime_max: Optional[int] = None,
        raise_on_violation: bool = False,
        quiet: bool = True,
    ) -> ConsistencyReport:
        """
        Compare, for every prime ``p <= prime_max`` not dividing ``ell * disc(P)``, the
        factorization pattern of ``P_{k,ell}`` mod ``p`` with the patterns predicted by
        ``tau_k(p)`` and ``p^(k-1)`` mod ``ell``.

        :param raise_on_violation: Raise instead of returning a report with violations.
        :param quiet: Don't display a progress bar.

        :raises ConsistencyViolationError: If ``raise_on_violation`` and a prime disagrees.
        """
        entry = self.resolve_entry(entry)
        prime_max = prime_max if prime_max is not None else self.config.prime_max
        disc = discriminant(entry.poly)
        residues = self.modrep.forms.tau_residues(entry.k, entry.ell, prime_max)
        tasks = [
            (entry, chunk, {p: residues[p] for p in chunk}, disc)
            for chunk in batches(prime_list(prime_max), PRIMES_PER_TASK)
        ]
        observations, skipped = [], []
        progress = get_scan_progress(quiet)
        with progress:
            task_id = progress.add_task(f"Consistency of {entry}", total=len(tasks))
            for chunk_observations, chunk_skipped in self.ordered_map(
                observe_primes, tasks, progress=progress, task_id=task_id
            ):
                observations.extend(chunk_observations)
                skipped.extend(chunk_skipped)
        report = consistency_report(entry, prime_max, observations, skipped)
        self.logger.info(
            "%s: %d primes checked, %d skipped, %d violations",
            entry,
            report.checked,
            len(report.skipped),
            len(report.violations),
        )
        if raise_on_violation and not report.ok:
            raise ConsistencyViolationError(
                f"{entry}: {len(report.violations)} primes disagree with the predicted "
                f"patterns, the first is p = {report.violations[0].p}",
                report=report,
            )
        return report

    def consistency_all(
        self, prime_max: Optional[int] = None, quiet: bool = True
    ) -> List[ConsistencyReport]:
        return [
            self.consistency(entry, prime_max, quiet=quiet) for entry in self.modrep.table.entries()
        ]
