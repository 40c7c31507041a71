"""
Initialize a :class:`ModRep client <modrep.ModRep>` with :meth:`ModRep.from_env()`:

>>> from modrep import *
>>> modrep = ModRep.from_env()

Polynomial table
----------------

The polynomials ``P_{k,ell}``, whose splitting fields are cut out by the projective mod-``ell``
Galois representations attached to the cusp forms ``Delta_k``, are reached through
:data:`ModRep.table`. The built-in table holds 13 entries:

>>> [(entry.k, entry.ell) for entry in modrep.table.entries()][:4]
[(12, 11), (12, 13), (12, 17), (12, 19)]

Each entry is a monic integer polynomial of degree ``ell + 1``:

>>> entry = modrep.table.get(12, 11)
>>> entry.degree, entry.poly.is_monic()
(12, True)

.. important::
    In this example - and all other examples - ``modrep`` is an instance of the
    :class:`ModRep` client class, not the :mod:`modrep` module.

Cusp forms
----------

Coefficients of ``Delta_k`` for ``k`` in 12, 16, 18, 20 and 22 come from
:meth:`ModRep.forms.tau() <services.FormsClient.tau>`:

>>> modrep.forms.tau(16, 2).tau
216

Ramanujan's congruences can be checked with
:meth:`ModRep.forms.congruence() <services.FormsClient.congruence>`.

Frobenius elements
------------------

For a prime ``p`` not dividing ``ell * disc(P)``, the factorization pattern of ``P`` modulo ``p``
is the cycle type of Frobenius acting on the projective line over ``F_ell``, which depends
only on ``tau_k(p)`` and ``p^(k-1)`` modulo ``ell``:

>>> modrep.frobenius.predicted_patterns(-24, 2**11, 11)
frozenset({CycleType(4, 4, 4)})

:meth:`ModRep.frobenius.consistency() <services.FrobeniusClient.consistency>` compares the two
for every prime up to a bound.

Verification
------------

:meth:`ModRep.verify.entry() <services.VerifyClient.entry>` checks the discriminant of a
polynomial, that its number field isn't totally real, that it is irreducible and that its
factorization patterns are distributed like the cycle types of ``PGL_2(F_ell)``.

Searching for tau(p) = 0
------------------------

:meth:`ModRep.lehmer.scan() <services.LehmerClient.scan>` lists the primes ``p`` satisfying
Serre's criteria with ``tau(p) = 0`` modulo 11, 13, 17 and 19:

>>> modrep.lehmer.primes(10**16)
[]

"""

from .client import *
from .config import *
from .cycle_type import *
from .data_model import *
from .exceptions import *
