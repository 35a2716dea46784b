"""Integer partitions used to index Schur basis elements and wedge monomials."""

from __future__ import annotations

from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are trimmed on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))`` and the empty partition is canonical.
    Being a tuple subclass, a partition compares and hashes like the tuple
    of its nonzero parts.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for k, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {parts}")
            if k and parts[k - 1] < p:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        if not self:
            return "0"
        return "(" + ",".join(map(str, self)) + ")"

    def length(self) -> int:
        return len(self)

    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The ``i``-th part, counted from 1; absent parts are zero."""
        if i < 1:
            raise ValueError(f"part index must be >= 1, got {i}")
        return self[i - 1] if i <= len(self) else 0

    def padded(self, r: int) -> tuple[int, ...]:
        """Parts as a tuple of exactly ``r`` entries (zero padded)."""
        if len(self) > r:
            raise ValueError(f"{self} has more than {r} parts")
        return tuple(self) + (0,) * (r - len(self))

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read ``"2,1"``, ``"(2,1)"``, ``"[2, 1]"`` or ``"0"``/``""``."""
        body = text.strip().strip("()[]").strip()
        if body in ("", "0"):
            return cls()
        try:
            return cls(int(tok) for tok in body.split(","))
        except ValueError as exc:
            raise ValueError(f"cannot read partition from {text!r}: {exc}") from None


def remove_part(lam: Partition, i: int) -> Partition:
    """Delete the ``i``-th part (1-based); absent parts count as zeros."""
    if i < 1:
        raise ValueError(f"part index must be >= 1, got {i}")
    lam = Partition(lam)
    if i > len(lam):
        return lam
    return Partition(lam[: i - 1] + lam[i:])


def add_ones(lam: Partition, j: int) -> Partition:
    """Partwise sum ``lam + (1^j)``; requires ``length(lam) <= j``."""
    if j < 0:
        raise ValueError(f"count must be >= 0, got {j}")
    lam = Partition(lam)
    if len(lam) > j:
        raise ValueError(f"{lam} has more than {j} parts; lam + (1^{j}) is not a partition")
    return Partition(p + 1 for p in lam.padded(j))


def _descending(total: int, max_len: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # lexicographically decreasing
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        if first * max_len < total:
            break
        for rest in _descending(total - first, max_len - 1, first):
            yield (first,) + rest


def partitions_of(d: int, max_len: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``d`` with at most ``max_len`` parts, reverse-lex order."""
    if d < 0:
        return []
    bound = d if max_part is None else max_part
    return [Partition(p) for p in _descending(d, max_len, bound)]


def enumerate_box(r: int, c: int, degree: int | None = None) -> list[Partition]:
    """All partitions inside the ``r x c`` rectangle.

    Ordered by weight, then reverse-lexicographically within a weight.
    With ``degree`` given, only partitions of that weight are returned.
    """
    if r < 0 or c < 0:
        raise ValueError("box dimensions must be non-negative")
    degrees = range(r * c + 1) if degree is None else [degree]
    out: list[Partition] = []
    for d in degrees:
        if 0 <= d <= r * c:
            out.extend(partitions_of(d, r, c))
    return out
