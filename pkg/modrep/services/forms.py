from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..arith import prime_list
from ..data_model import *
from ..exceptions import *
from ..forms import (
    QExpansion,
    congruence_125,
    congruence_691,
    delta_k,
    delta_k_crt,
    nonvanishing_check,
    tau,
)
from .service_client import ServiceClient


class FormsClient(ServiceClient):
    """
    Accessed via :data:`ModRep.forms <modrep.ModRep.forms>`.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._expansions: Dict[Tuple[int, Optional[int]], QExpansion] = {}

    def expansion(self, k: int, bound: int, modulus: Optional[int] = None) -> QExpansion:
        """
        The expansion of ``Delta_k`` to at least ``q^bound``. Expansions are cached, and a
        cached expansion with a larger bound is reused.

        .. note::
            Exact coefficients are multiplied out directly up to
            :data:`Config.exact_bound <modrep.Config.exact_bound>`. Beyond that they are
            assembled from residues by :func:`~modrep.forms.delta_k_crt`.

        :raises InvalidWeightError: If ``k`` isn't one of 12, 16, 18, 20, 22.
        """
        cached = self._expansions.get((k, modulus))
        if cached is not None and cached.bound >= bound:
            return cached
        if modulus is None and bound > self.config.exact_bound:
            self.logger.debug("Computing Delta_%d to q^%d from residues", k, bound)
            expansion = delta_k_crt(k, bound)
        else:
            self.logger.debug("Computing Delta_%d to q^%d (modulus=%s)", k, bound, modulus)
            expansion = delta_k(k, bound, modulus)
        self._expansions[(k, modulus)] = expansion
        return expansion

    def tau(self, k: int, n: int, modulus: Optional[int] = None) -> TauValue:
        """
        :examples:

        >>> modrep.forms.tau(12, 2).tau
        -24
        """
        value = tau(k, n, self.expansion(k, n, modulus))
        return TauValue(k=k, n=n, tau=value, modulus=modulus)

    def tau_values(
        self, k: int, ns: Iterable[int], modulus: Optional[int] = None
    ) -> List[TauValue]:
        ns = list(ns)
        if not ns:
            return []
        expansion = self.expansion(k, max(ns), modulus)
        return [TauValue(k=k, n=n, tau=tau(k, n, expansion), modulus=modulus) for n in ns]

    def tau_at_primes(
        self, k: int, prime_max: int, modulus: Optional[int] = None
    ) -> List[TauValue]:
        return self.tau_values(k, prime_list(prime_max), modulus)

    def tau_residues(self, k: int, modulus: int, prime_max: int) -> Dict[int, int]:
        """
        ``{p: tau_k(p) mod modulus}`` for the primes ``p <= prime_max``.
        """
        expansion = self.expansion(k, max(prime_max, 1), modulus)
        return {p: expansion[p] for p in prime_list(prime_max)}

    def congruence(
        self, check: Union[CongruenceCheck, str], prime_max: Optional[int] = None
    ) -> CongruenceReport:
        """
        Check one of the classical congruences for ``tau(p)`` at every prime up to ``prime_max``.

        :examples:

        >>> modrep.forms.congruence("691", 1000).ok
        True
        """
        prime_max = prime_max if prime_max is not None else self.config.prime_max
        check = CongruenceCheck(check)
        if check == CongruenceCheck.mod_691:
            checked, failures = congruence_691(prime_max)
            untested: List[int] = []
        else:
            checked, failures, untested = congruence_125(prime_max)
        report = CongruenceReport(
            check=check,
            prime_max=prime_max,
            checked=len(checked),
            failures=failures,
            untested=untested,
        )
        self.logger.info(
            "Congruence mod %s: %d primes checked, %d failures",
            check.value,
            report.checked,
            len(failures),
        )
        return report

    def nonvanishing(self, bound: Optional[int] = None) -> NonvanishingReport:
        """
        Find every ``n <= bound`` with ``tau(n) == 0``.
        """
        bound = bound if bound is not None else self.config.prime_max
        zeros = nonvanishing_check(bound)
        self.logger.info("tau(n) != 0 checked for n <= %d: %d zeros", bound, len(zeros))
        return NonvanishingReport(bound=bound, zeros=zeros)
