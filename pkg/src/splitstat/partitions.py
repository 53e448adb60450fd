"""Integer partitions and the combinatorial scalars attached to them.

A partition indexes three things at once here: a conjugacy class of the
symmetric group, a factorization type of a monic polynomial, and an
irreducible representation.  The canonical enumeration order is
reverse-lexicographic ([4] before [3,1] before [2,2] ...), which fixes
all table layouts and JSON output.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator


class Partition:
    """A weakly decreasing tuple of positive integers, with multiplicity access."""

    __slots__ = ("parts", "d", "_mults")

    def __init__(self, parts: Iterable[int] = ()) -> None:
        ps = sorted((int(p) for p in parts), reverse=True)
        if ps and ps[-1] <= 0:
            raise ValueError("partition parts must be positive integers")
        mults: dict[int, int] = {}
        for p in ps:
            mults[p] = mults.get(p, 0) + 1
        object.__setattr__(self, "parts", tuple(ps))
        object.__setattr__(self, "d", sum(ps))
        object.__setattr__(self, "_mults", mults)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Partition is immutable")

    @property
    def length(self) -> int:
        return len(self.parts)

    def mult(self, j: int) -> int:
        """Number of parts equal to j (the statistic x_j)."""
        if j < 1:
            raise ValueError("part sizes start at 1")
        return self._mults.get(j, 0)

    def multiplicities(self) -> tuple[tuple[int, int], ...]:
        """(part size, multiplicity) pairs, ascending in part size."""
        return tuple(sorted(self._mults.items()))

    def centralizer_order(self) -> int:
        """prod_j j**m_j * m_j!; the conjugacy class has size d!/this."""
        z = 1
        for j, m in self._mults.items():
            z *= j**m * factorial(m)
        return z

    def sign(self) -> int:
        """+1 iff this is the cycle type of an even permutation."""
        return -1 if (self.d - len(self.parts)) % 2 else 1

    def label(self) -> str:
        """Compact bracket form, e.g. "[3,1,1]"; used as JSON keys."""
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse "[3,1,1]" (brackets optional)."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        if not body.strip():
            return cls(())
        try:
            return cls(int(piece) for piece in body.split(","))
        except ValueError as exc:
            raise ValueError(f"not a partition: {text!r}") from exc

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return self.label()


def _descending_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_parts(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of d, exactly once, in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return tuple(Partition(parts) for parts in _descending_parts(d, d if d else 1))
