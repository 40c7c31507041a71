"""
Univariate polynomials over the integers and over prime fields.

Coefficients are always stored in ascending degree order with no trailing zeros, so
the zero polynomial is the empty tuple and equality is plain tuple equality.

>>> from modrep.poly import IntPoly, discriminant, reduce_mod, ddf_pattern
>>> discriminant(IntPoly([-1, 0, 1]))
4
>>> ddf_pattern(reduce_mod(IntPoly([1, 0, 1]), 5))
CycleType(1, 1)
>>> ddf_pattern(reduce_mod(IntPoly([1, 0, 1]), 3))
CycleType(2)
"""

import math
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .cycle_type import CycleType
from .exceptions import (
    InvalidArgumentError,
    ModulusMismatchError,
    NotMonicError,
    NotSquarefreeError,
)

__all__ = [
    "IntPoly",
    "ModPoly",
    "derivative",
    "resultant",
    "sylvester_resultant",
    "discriminant",
    "reduce_mod",
    "pow_mod",
    "pow_x_mod",
    "compose_mod",
    "gcd_mod",
    "is_squarefree_mod",
    "frobenius_matrix",
    "frobenius_iterate",
    "ddf_pattern",
    "splitting_test",
]


def _trim(c: List[int]) -> List[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _sqr(a: Sequence[int]) -> List[int]:
    n = len(a)
    if n == 0:
        return []
    out = [0] * (2 * n - 1)
    for i in range(n):
        ai = a[i]
        if ai:
            out[2 * i] += ai * ai
            ai2 = 2 * ai
            for j in range(i + 1, n):
                out[i + j] += ai2 * a[j]
    return out


def _rem_monic(c: List[int], m: Sequence[int], p: int) -> List[int]:
    """
    Reduce ``c`` modulo the monic polynomial ``m`` and the prime ``p``. Mutates ``c``.
    """
    n = len(m) - 1
    for i in range(len(c) - 1, n - 1, -1):
        q = c[i] % p
        if q:
            base = i - n
            for j in range(n):
                c[base + j] -= q * m[j]
    return _trim([x % p for x in c[:n]])


class IntPoly:
    """
    A polynomial with arbitrary precision integer coefficients.

    :param coeffs: Coefficients in ascending degree order. Trailing zeros are dropped.
    """

    __slots__ = ("coeffs",)

    coeffs: Tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = tuple(_trim([int(c) for c in coeffs]))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """
        The degree, with ``-1`` for the zero polynomial.
        """
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def __getitem__(self, i: int) -> int:
        """
        The coefficient of ``x**i``, zero above the degree.
        """
        if i < 0:
            raise IndexError(i)
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.coeffs))

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: Union["IntPoly", int]) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("x" if i == 1 else f"x^{i}")
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


class ModPoly:
    """
    A polynomial over the prime field with ``modulus`` elements.

    :param coeffs: Coefficients in ascending degree order. They are reduced into
        ``[0, modulus)`` and trailing zeros are dropped.
    :param modulus: A prime.
    """

    __slots__ = ("coeffs", "modulus")

    coeffs: Tuple[int, ...]
    modulus: int

    def __init__(self, coeffs: Iterable[int], modulus: int):
        if modulus < 2:
            raise InvalidArgumentError(f"modulus must be a prime, got {modulus}")
        self.modulus = int(modulus)
        self.coeffs = tuple(_trim([int(c) % self.modulus for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: List[int], modulus: int) -> "ModPoly":
        # Coefficients already reduced and trimmed.
        out = cls.__new__(cls)
        out.coeffs = tuple(coeffs)
        out.modulus = modulus
        return out

    @classmethod
    def x(cls, modulus: int) -> "ModPoly":
        return cls([0, 1], modulus)

    @classmethod
    def one(cls, modulus: int) -> "ModPoly":
        return cls([1], modulus)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def _check(self, other: "ModPoly") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatchError(
                f"can't combine polynomials modulo {self.modulus} and {other.modulus}"
            )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModPoly):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("ModPoly", self.modulus, self.coeffs))

    def __add__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return ModPoly._raw(_trim(out), p)

    def __neg__(self) -> "ModPoly":
        p = self.modulus
        return ModPoly._raw([(-c) % p for c in self.coeffs], p)

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        return self + (-other)

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        self._check(other)
        p = self.modulus
        return ModPoly._raw(_trim([c % p for c in _mul(self.coeffs, other.coeffs)]), p)

    def scale(self, c: int) -> "ModPoly":
        p = self.modulus
        return ModPoly._raw(_trim([(c * a) % p for a in self.coeffs]), p)

    def monic(self) -> "ModPoly":
        """
        Divide through by the leading coefficient. The zero polynomial stays zero.
        """
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.modulus))

    def __divmod__(self, other: "ModPoly") -> Tuple["ModPoly", "ModPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.modulus
        b = other.coeffs
        db = len(b) - 1
        inv = pow(b[-1], -1, p)
        r = list(self.coeffs)
        if len(r) <= db:
            return ModPoly._raw([], p), self
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = (r[i] * inv) % p
            if c:
                q[i - db] = c
                base = i - db
                for j in range(db + 1):
                    r[base + j] = (r[base + j] - c * b[j]) % p
        return ModPoly._raw(_trim(q), p), ModPoly._raw(_trim(r[:db]), p)

    def __floordiv__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "ModPoly":
        p = self.modulus
        return ModPoly._raw(
            _trim([(i * c) % p for i, c in enumerate(self.coeffs) if i > 0]), p
        )

    def lift(self) -> IntPoly:
        """
        The polynomial with the same coefficients, read as integers in ``[0, modulus)``.
        """
        return IntPoly(self.coeffs)

    def __repr__(self) -> str:
        return f"ModPoly({list(self.coeffs)}, modulus={self.modulus})"

    def __str__(self) -> str:
        return f"{self.lift()} (mod {self.modulus})"


def derivative(f: IntPoly) -> IntPoly:
    """
    The formal derivative of ``f``.
    """
    return f.derivative()


def _pseudo_remainder(a: List[int], b: List[int]) -> List[int]:
    # lc(b)^(deg a - deg b + 1) * a = b * q + r
    r = list(a)
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) >= len(b):
        s = r[-1]
        shift = len(r) - len(b)
        r = [lb * c for c in r]
        for j, bj in enumerate(b):
            r[shift + j] -= s * bj
        _trim(r)
        e -= 1
    if e > 0:
        scale = lb**e
        r = [c * scale for c in r]
    return r


def resultant(f: IntPoly, g: IntPoly) -> int:
    """
    The resultant ``Res(f, g)``, computed with the subresultant pseudo-remainder sequence
    so that intermediate coefficients stay the size of subresultant determinants.
    """
    if f.is_zero() or g.is_zero():
        return 0
    a, b = f.content(), g.content()
    A = [c // a for c in f.coeffs]
    B = [c // b for c in g.coeffs]
    t = a ** (len(B) - 1) * b ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        A, B = B, A
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -1
    if len(B) == 1:
        return s * t * B[0] ** (len(A) - 1)

    lead, h = 1, 1
    while True:
        delta = len(A) - len(B)
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -s
        r = _pseudo_remainder(A, B)
        if not r:
            return 0
        divisor = lead * h**delta
        A, B = B, [c // divisor for c in r]
        lead = A[-1]
        if delta > 0:
            h = lead**delta // h ** (delta - 1)
        if len(B) == 1:
            deg_a = len(A) - 1
            return s * t * (B[0] ** deg_a // h ** (deg_a - 1))


def _bareiss_determinant(matrix: List[List[int]]) -> int:
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    """
    The resultant as the determinant of the Sylvester matrix, by fraction-free
    elimination. Slower than :func:`resultant`; kept as an independent cross-check.
    """
    if f.is_zero() or g.is_zero():
        return 0
    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return 1
    fd, gd = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return _bareiss_determinant(rows)


def discriminant(f: IntPoly) -> int:
    """
    The discriminant ``(-1)**(n(n-1)/2) * Res(f, f')`` of a monic polynomial of degree
    ``n >= 2``.

    :raises NotMonicError: If ``f`` isn't monic.
    :raises InvalidArgumentError: If ``deg(f) < 2``.
    """
    if not f.is_monic():
        raise NotMonicError(
            "discriminant needs a monic polynomial, "
            f"got leading coefficient {f.leading_coefficient}"
        )
    n = f.degree
    if n < 2:
        raise InvalidArgumentError(f"discriminant needs degree >= 2, got {n}")
    res = resultant(f, f.derivative())
    return -res if (n * (n - 1) // 2) % 2 else res


def reduce_mod(f: IntPoly, p: int) -> ModPoly:
    """
    Reduce the coefficients of ``f`` modulo the prime ``p``.
    """
    return ModPoly(f.coeffs, p)


def _require_monic(P: ModPoly) -> None:
    if not P.is_monic():
        raise NotMonicError(f"expected a monic modulus polynomial, got {P}")


def pow_mod(f: ModPoly, e: int, P: ModPoly) -> ModPoly:
    """
    ``f**e`` reduced modulo the monic polynomial ``P``.
    """
    f._check(P)
    _require_monic(P)
    if e < 0:
        raise InvalidArgumentError(f"exponent must be non-negative, got {e}")
    p, m = P.modulus, P.coeffs
    result = _rem_monic([1], m, p)
    base = _rem_monic(list(f.coeffs), m, p)
    while e:
        if e & 1:
            result = _rem_monic(_mul(result, base), m, p)
        e >>= 1
        if e:
            base = _rem_monic(_sqr(base), m, p)
    return ModPoly._raw(result, p)


def pow_x_mod(e: int, P: ModPoly) -> ModPoly:
    """
    ``x**e`` in ``F_p[x]/(P)``, by left-to-right square-and-multiply. Multiplying by
    ``x`` is a shift, so each step costs one squaring and one reduction.

    :raises NotMonicError: If ``P`` isn't monic.
    :raises InvalidArgumentError: If ``e < 0`` or ``deg(P) < 1``.
    """
    _require_monic(P)
    if e < 0:
        raise InvalidArgumentError(f"exponent must be non-negative, got {e}")
    if P.degree < 1:
        raise InvalidArgumentError("modulus polynomial must have degree >= 1")
    p, m = P.modulus, P.coeffs
    if e == 0:
        return ModPoly._raw(_rem_monic([1], m, p), p)
    r = _rem_monic([0, 1], m, p)
    for bit in bin(e)[3:]:
        r = _rem_monic(_sqr(r), m, p)
        if bit == "1":
            r = _rem_monic([0] + r, m, p)
    return ModPoly._raw(r, p)


def compose_mod(f: ModPoly, g: ModPoly, P: ModPoly) -> ModPoly:
    """
    ``f(g(x))`` reduced modulo the monic polynomial ``P``, by Horner's rule.
    """
    f._check(P)
    g._check(P)
    _require_monic(P)
    p, m = P.modulus, P.coeffs
    gr = _rem_monic(list(g.coeffs), m, p)
    acc: List[int] = []
    for c in reversed(f.coeffs):
        acc = _rem_monic(_mul(acc, gr), m, p)
        if acc:
            acc[0] = (acc[0] + c) % p
            _trim(acc)
        else:
            acc = _trim([c])
    return ModPoly._raw(acc, p)


def gcd_mod(a: ModPoly, b: ModPoly) -> ModPoly:
    """
    The monic greatest common divisor, by Euclid's algorithm over ``F_p``.
    ``gcd(0, 0)`` is the zero polynomial.

    :raises ModulusMismatchError: If the moduli differ.
    """
    a._check(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_squarefree_mod(P: ModPoly) -> bool:
    """
    Whether ``P`` has no repeated irreducible factor over ``F_p``, i.e. ``gcd(P, P') == 1``.
    """
    if P.is_zero():
        raise InvalidArgumentError("the zero polynomial has no squarefree decomposition")
    return gcd_mod(P, P.derivative()).degree == 0


def frobenius_matrix(P: ModPoly) -> List[List[int]]:
    """
    The matrix of the Frobenius map ``h -> h**p`` on ``F_p[x]/(P)``: row ``i`` holds
    ``x**(i*p) mod P``.
    """
    _require_monic(P)
    p, m, n = P.modulus, P.coeffs, P.degree
    xp = list(pow_x_mod(p, P).coeffs)
    rows: List[List[int]] = [_rem_monic([1], m, p)]
    for _ in range(1, n):
        rows.append(_rem_monic(_mul(rows[-1], xp), m, p))
    return rows


def _apply_frobenius(rows: List[List[int]], h: Sequence[int], n: int, p: int) -> List[int]:
    out = [0] * n
    for hi, row in zip(h, rows):
        if hi:
            for j, c in enumerate(row):
                out[j] += hi * c
    return _trim([c % p for c in out])


def frobenius_iterate(P: ModPoly, d: int, rows: Optional[List[List[int]]] = None) -> ModPoly:
    """
    ``x**(p**d) mod P``, by applying the Frobenius map ``d`` times to ``x``.
    """
    _require_monic(P)
    p, n = P.modulus, P.degree
    if rows is None:
        rows = frobenius_matrix(P)
    h = _rem_monic([0, 1], P.coeffs, p)
    for _ in range(d):
        h = _apply_frobenius(rows, h, n, p)
    return ModPoly._raw(h, p)


def _require_squarefree(P: ModPoly) -> None:
    _require_monic(P)
    if not is_squarefree_mod(P):
        raise NotSquarefreeError(f"{P} is not squarefree modulo {P.modulus}")


def ddf_pattern(P: ModPoly) -> CycleType:
    """
    The degrees of the irreducible factors of ``P`` over ``F_p``, by distinct-degree
    factorization.

    At stage ``d`` the remaining part ``f`` of ``P`` has no factors of degree below
    ``d``, so ``gcd(f, x**(p**d) - x)`` is the product of its degree ``d`` factors;
    ``x**(p**d)`` comes from applying the Frobenius matrix of ``P`` once more.

    :raises NotMonicError: If ``P`` isn't monic.
    :raises NotSquarefreeError: If ``P`` has a repeated factor.
    """
    _require_squarefree(P)
    p, n = P.modulus, P.degree
    if n <= 0:
        return CycleType([])
    rows = frobenius_matrix(P)
    x = ModPoly.x(p)
    f = P
    h = list(x.coeffs) if n > 1 else _rem_monic([0, 1], P.coeffs, p)
    parts: List[int] = []
    d = 0
    while 2 * (d + 1) <= f.degree:
        d += 1
        h = _apply_frobenius(rows, h, n, p)
        g = gcd_mod(f, ModPoly._raw(h, p) - x)
        if g.degree > 0:
            parts.extend([d] * (g.degree // d))
            f = f // g
    if f.degree > 0:
        parts.append(f.degree)
    return CycleType(parts)


def splitting_test(P: ModPoly) -> bool:
    """
    Whether ``x**(p**2) == x`` and ``x**p != x`` in ``F_p[x]/(P)``, i.e. whether ``P``
    splits into factors of degree 1 and 2 with at least one of degree 2.

    ``x**(p**2)`` is obtained from ``x**p`` by composing it with itself.

    :raises NotMonicError: If ``P`` isn't monic.
    :raises NotSquarefreeError: If ``P`` has a repeated factor.
    """
    _require_squarefree(P)
    p = P.modulus
    x = ModPoly._raw(_rem_monic([0, 1], P.coeffs, p), p)
    xp = pow_x_mod(p, P)
    if xp == x:
        return False
    return compose_mod(xp, xp, P) == x
