from typing import Iterable, List

__all__ = ["CycleType"]


class CycleType(tuple):
    """
    A multiset of positive integers, stored sorted in increasing order.

    It records either the degrees of the irreducible factors of a squarefree polynomial
    over a prime field or the orbit lengths of a permutation. Two cycle types are equal
    exactly when they are equal as multisets, so they work as set members and map keys.

    >>> CycleType([2, 1, 2])
    CycleType(1, 2, 2)
    >>> CycleType([2, 1, 2]).is_involutive()
    True
    """

    def __new__(cls, parts: Iterable[int]) -> "CycleType":
        parts = sorted(int(part) for part in parts)
        if any(part < 1 for part in parts):
            raise ValueError(f"cycle lengths must be positive, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_string(cls, s: str) -> "CycleType":
        """
        Parse the ``"1^2 2^5"`` form produced by :meth:`__str__`.
        """
        parts: List[int] = []
        for token in s.split():
            length, _, multiplicity = token.partition("^")
            parts.extend([int(length)] * int(multiplicity or 1))
        return cls(parts)

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls([1] * n)

    @property
    def degree(self) -> int:
        """
        The number being partitioned.
        """
        return sum(self)

    def multiplicity(self, length: int) -> int:
        return self.count(length)

    def is_involutive(self) -> bool:
        """
        Only cycles of length 1 and 2 occur, and at least one of length 2.
        """
        return 2 in self and all(part <= 2 for part in self)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({', '.join(str(part) for part in self)})"

    def __str__(self) -> str:
        return " ".join(
            f"{length}^{self.count(length)}" for length in sorted(set(self))
        )
