"""
Frobenius elements seen two ways: through ``tau_k(p)`` and ``p^(k-1)`` modulo ``ell``,
and through the factorization of ``P_{k,ell}`` modulo ``p``.

The roots of ``P_{k,ell}`` are permuted by ``Frob_p`` the way its projective image in
``PGL_2(F_ell)`` permutes the projective line, so the factorization pattern is the
cycle type of a matrix with characteristic polynomial ``X^2 - tau_k(p) X + p^(k-1)``.

>>> from modrep.data_model import FrobeniusData
>>> from modrep.frob import predicted_patterns
>>> predicted_patterns(FrobeniusData(t=0, d=1, ell=11))
frozenset({CycleType(2, 2, 2, 2, 2, 2)})
"""

from collections import Counter
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Sequence, Tuple

from .arith import is_prime, jacobi, prime_list
from .cycle_type import CycleType
from .data_model.frobenius import ConsistencyReport, FrobeniusData, Violation, ViolationKind
from .data_model.table import TableEntry
from .exceptions import InvalidArgumentError, NotSquarefreeError
from .poly import ModPoly, ddf_pattern, discriminant, reduce_mod, splitting_test

__all__ = [
    "FiniteField",
    "Matrix",
    "projective_action",
    "permutation_cycle_type",
    "predicted_patterns",
    "observed_pattern",
    "enumerate_pgl2",
    "enumerate_pgl2_cycle_types",
    "pgl2_trace_zero_count",
    "trace_zero_criterion_check",
    "PrimeObservation",
    "observe_primes",
    "consistency_report",
    "consistency_scan",
]


Matrix = Tuple[int, int, int, int]
"""
``(a, b, c, d)`` for the matrix with rows ``(a, b)`` and ``(c, d)``.
"""


class FiniteField:
    """
    The field with ``q`` elements, ``q`` a prime power.

    Elements are the integers ``0 .. q-1``; the base ``p`` digits of an element are its
    coordinates in the basis ``1, a, a^2, ...`` where ``a`` is a root of the smallest
    monic irreducible polynomial of degree ``n`` over ``F_p``. Arithmetic goes through
    precomputed tables, so this is only meant for small ``q``.

    :raises InvalidArgumentError: If ``q`` isn't a prime power.
    """

    def __init__(self, q: int):
        p = next((d for d in range(2, q + 1) if q % d == 0), None) if q >= 2 else None
        if p is None:
            raise InvalidArgumentError(f"there is no field with {q} elements")
        n, rest = 0, q
        while rest % p == 0:
            rest //= p
            n += 1
        if rest != 1:
            raise InvalidArgumentError(f"there is no field with {q} elements")
        self.q = q
        self.characteristic = p
        self.degree = n
        self.modulus = _irreducible(p, n)
        self._add = [[self._encode(self._poly_add(a, b)) for b in range(q)] for a in range(q)]
        self._mul = [[self._encode(self._poly_mul(a, b)) for b in range(q)] for a in range(q)]
        self._neg = [self._negate(a) for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)

    def _digits(self, a: int) -> List[int]:
        p = self.characteristic
        return [(a // p**i) % p for i in range(self.degree)]

    def _encode(self, digits: Sequence[int]) -> int:
        p = self.characteristic
        return sum(c * p**i for i, c in enumerate(digits))

    def _poly_add(self, a: int, b: int) -> List[int]:
        p = self.characteristic
        return [(x + y) % p for x, y in zip(self._digits(a), self._digits(b))]

    def _poly_mul(self, a: int, b: int) -> List[int]:
        prod = ModPoly(self._digits(a), self.characteristic) * ModPoly(
            self._digits(b), self.characteristic
        )
        rem = list((prod % self.modulus).coeffs)
        return rem + [0] * (self.degree - len(rem))

    def _negate(self, a: int) -> int:
        p = self.characteristic
        return self._encode([(-c) % p for c in self._digits(a)])

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.q))

    def __repr__(self) -> str:
        return f"FiniteField({self.q})"


def _irreducible(p: int, n: int) -> ModPoly:
    if n == 1:
        return ModPoly.x(p)
    for tail in product(range(p), repeat=n):
        candidate = ModPoly(list(tail) + [1], p)
        try:
            if ddf_pattern(candidate) == CycleType([n]):
                return candidate
        except NotSquarefreeError:
            continue
    raise AssertionError(f"no irreducible polynomial of degree {n} over F_{p}")


@lru_cache(maxsize=None)
def _field(q: int) -> FiniteField:
    return FiniteField(q)


def projective_action(field: FiniteField, m: Matrix) -> List[int]:
    """
    The permutation of the projective line induced by ``m``. The point ``[x : 1]`` has
    index ``x`` and the point at infinity has index ``q``.
    """
    a, b, c, d = m
    q = field.q
    image = []
    for x in range(q):
        num = field.add(field.mul(a, x), b)
        den = field.add(field.mul(c, x), d)
        image.append(q if den == 0 else field.mul(num, field.inv(den)))
    image.append(q if c == 0 else field.mul(a, field.inv(c)))
    return image


def permutation_cycle_type(perm: Sequence[int]) -> CycleType:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, i = 0, start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        lengths.append(length)
    return CycleType(lengths)


def _ring_mul(x: Tuple[int, int], y: Tuple[int, int], t: int, d: int, ell: int) -> Tuple[int, int]:
    # (u1 + v1 X)(u2 + v2 X) with X^2 = t X - d
    u1, v1 = x
    u2, v2 = y
    vv = v1 * v2
    return ((u1 * u2 - d * vv) % ell, (u1 * v2 + u2 * v1 + t * vv) % ell)


def _ring_pow(x: Tuple[int, int], e: int, t: int, d: int, ell: int) -> Tuple[int, int]:
    result = (1, 0)
    while e:
        if e & 1:
            result = _ring_mul(result, x, t, d, ell)
        e >>= 1
        if e:
            x = _ring_mul(x, x, t, d, ell)
    return result


@lru_cache(maxsize=None)
def _predicted(t: int, d: int, ell: int) -> FrozenSet[CycleType]:
    disc = (t * t - 4 * d) % ell
    if disc == 0:
        return frozenset({CycleType.identity(ell + 1), CycleType([1, ell])})
    split = jacobi(disc, ell) == 1
    # The eigenvalue ratio is X / (t - X) = X^2 / d in F_ell[X]/(X^2 - tX + d).
    x_sq = _ring_mul((0, 1), (0, 1), t, d, ell)
    d_inv = pow(d, -1, ell)
    ratio = (x_sq[0] * d_inv % ell, x_sq[1] * d_inv % ell)
    group_order = ell - 1 if split else ell + 1
    order = next(
        m
        for m in range(2, group_order + 1)
        if group_order % m == 0 and _ring_pow(ratio, m, t, d, ell) == (1, 0)
    )
    if split:
        return frozenset({CycleType([1, 1] + [order] * ((ell - 1) // order))})
    return frozenset({CycleType([order] * ((ell + 1) // order))})


def predicted_patterns(fd: FrobeniusData) -> FrozenSet[CycleType]:
    """
    The cycle types on the projective line of the projective classes of matrices over
    ``F_ell`` with characteristic polynomial ``X^2 - tX + d``.

    - If ``t^2 - 4d`` is a nonzero square, the eigenvalues lie in ``F_ell`` and their
      ratio has some order ``m >= 2``. The two eigenlines are fixed and every other point
      lies in an orbit of length ``m``.
    - If ``t^2 - 4d`` is not a square, the eigenvalues are conjugate in ``F_{ell^2}`` and
      their ratio has order ``m`` dividing ``ell + 1``. Every orbit has length ``m``.
    - If ``t^2 - 4d = 0``, the matrix is either scalar (the identity permutation) or has
      a single eigenline (one fixed point and one orbit of length ``ell``). Both are
      returned.
    """
    return _predicted(fd.t, fd.d, fd.ell)


def observed_pattern(entry: TableEntry, p: int) -> CycleType:
    """
    The factorization pattern of ``P_{k,ell}`` modulo ``p``.

    :raises InvalidArgumentError: If ``p == ell``.
    :raises NotSquarefreeError: If ``p`` divides ``disc(P_{k,ell})``.
    """
    if p == entry.ell:
        raise InvalidArgumentError(f"Frobenius at p = ell = {p} isn't considered")
    return ddf_pattern(reduce_mod(entry.poly, p))


def enumerate_pgl2(ell: int) -> Iterator[Tuple[Matrix, CycleType]]:
    """
    Every element of ``PGL_2(F_ell)``, each exactly once, with its cycle type on the
    projective line. Each class is represented by the matrix whose first nonzero entry is 1.
    """
    field = _field(ell)
    for a, b, c, d in product((0, 1), range(ell), range(ell), range(ell)):
        if a == 0 and b != 1:
            continue
        det = field.sub(field.mul(a, d), field.mul(b, c))
        if det == 0:
            continue
        m = (a, b, c, d)
        yield m, permutation_cycle_type(projective_action(field, m))


@lru_cache(maxsize=None)
def _pgl2_counts(ell: int) -> Tuple[Tuple[CycleType, int], ...]:
    counts: Counter = Counter(cycle_type for _, cycle_type in enumerate_pgl2(ell))
    return tuple(sorted(counts.items()))


def enumerate_pgl2_cycle_types(ell: int) -> Dict[CycleType, int]:
    """
    How many elements of ``PGL_2(F_ell)`` have each cycle type on the projective line.
    The counts add up to ``ell^3 - ell``.

    :raises InvalidArgumentError: If ``ell`` isn't an odd prime.
    """
    if ell < 3 or not is_prime(ell):
        raise InvalidArgumentError(f"ell must be an odd prime, got {ell}")
    return dict(_pgl2_counts(ell))


def pgl2_trace_zero_count(ell: int) -> int:
    """
    The number of elements of ``PGL_2(F_ell)`` with trace zero (a property of the
    projective class, since scaling preserves it).
    """
    if ell < 3 or not is_prime(ell):
        raise InvalidArgumentError(f"ell must be an odd prime, got {ell}")
    return sum(1 for (a, _, _, d), _ in enumerate_pgl2(ell) if (a + d) % ell == 0)


def trace_zero_criterion_check(q: int) -> bool:
    """
    Check, for every ``M`` in ``GL_2(F_q)``, that these are equivalent:

    1. ``tr(M) = 0``;
    2. ``M`` has 0 or 2 fixed points on the projective line and all of its other orbits
       have length 2;
    3. ``M`` has an orbit of length 2.

    :raises InvalidArgumentError: If ``q`` is even or isn't a prime power.
    """
    if q % 2 == 0:
        raise InvalidArgumentError(f"q must be odd, got {q}")
    field = _field(q)
    for m in product(range(q), repeat=4):
        a, b, c, d = m
        if field.sub(field.mul(a, d), field.mul(b, c)) == 0:
            continue
        cycle_type = permutation_cycle_type(projective_action(field, m))
        trace_zero = field.add(a, d) == 0
        fixed = cycle_type.multiplicity(1)
        involutive_shape = fixed in (0, 2) and all(part <= 2 for part in cycle_type)
        has_two_orbit = 2 in cycle_type
        if not trace_zero == involutive_shape == has_two_orbit:
            return False
    return True


class PrimeObservation(NamedTuple):
    p: int
    t: int
    d: int
    pattern: CycleType
    splits: bool
    """
    The result of :func:`~modrep.poly.splitting_test` on ``P_{k,ell}`` modulo ``p``.
    """


def observe_primes(
    entry: TableEntry, primes: Iterable[int], tau_residues: Mapping[int, int], disc: int
) -> Tuple[List[PrimeObservation], List[int]]:
    """
    Factor ``P_{k,ell}`` modulo each prime. Primes dividing ``ell * disc`` are skipped.

    :returns: The observations and the skipped primes, both in the order given.
    """
    observations, skipped = [], []
    poly = entry.poly
    for p in primes:
        if p == entry.ell or disc % p == 0:
            skipped.append(p)
            continue
        fd = FrobeniusData.from_tau(tau_residues[p], p, entry.k, entry.ell)
        reduced = reduce_mod(poly, p)
        observations.append(
            PrimeObservation(p, fd.t, fd.d, ddf_pattern(reduced), splitting_test(reduced))
        )
    return observations, skipped


def consistency_report(
    entry: TableEntry,
    prime_max: int,
    observations: Iterable[PrimeObservation],
    skipped: Sequence[int],
) -> ConsistencyReport:
    """
    Compare each observed pattern with the predicted ones, and each splitting test with
    whether ``tau_k(p)`` vanishes modulo ``ell``.
    """
    violations = []
    counts: Counter = Counter()
    checked = 0
    for obs in observations:
        checked += 1
        counts[obs.pattern] += 1
        predicted = _predicted(obs.t, obs.d, entry.ell)
        predicted_strs = sorted(str(ct) for ct in predicted)
        if obs.pattern not in predicted:
            violations.append(
                Violation(
                    p=obs.p,
                    kind=ViolationKind.pattern,
                    t=obs.t,
                    d=obs.d,
                    observed=str(obs.pattern),
                    predicted=predicted_strs,
                )
            )
        if obs.splits != (obs.t == 0):
            violations.append(
                Violation(
                    p=obs.p,
                    kind=ViolationKind.trace_zero,
                    t=obs.t,
                    d=obs.d,
                    observed=str(obs.pattern),
                    predicted=predicted_strs,
                )
            )
    return ConsistencyReport(
        k=entry.k,
        ell=entry.ell,
        prime_max=prime_max,
        checked=checked,
        skipped=list(skipped),
        trace_zero_checked=checked,
        violations=violations,
        pattern_counts={str(ct): n for ct, n in sorted(counts.items())},
    )


def consistency_scan(
    entry: TableEntry, prime_max: int, tau_residues: Mapping[int, int]
) -> ConsistencyReport:
    """
    Check every prime ``p <= prime_max`` not dividing ``ell * disc(P_{k,ell})``.

    :param tau_residues: ``tau_k(p) mod ell`` (or ``tau_k(p)`` itself) for every such prime.
    """
    disc = discriminant(entry.poly)
    observations, skipped = observe_primes(entry, prime_list(prime_max), tau_residues, disc)
    return consistency_report(entry, prime_max, observations, skipped)
