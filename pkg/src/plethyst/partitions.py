"""Integer partitions and the reverse lexicographic order.

Partitions are plain tuples of weakly decreasing positive integers with no
trailing zeros, so tuple equality and hashing behave correctly everywhere.
For two partitions of the same number, comparing the zero-padded part
sequences lexicographically gives the reverse lexicographic order; since
neither tuple can be a proper prefix of the other at equal size, built-in
tuple comparison already implements it.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import PartitionParseError, SizeMismatchError
from .limits import check_partition_size

Partition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` as a partition and return the canonical tuple.

    Parts must be weakly decreasing non-negative integers; zeros (necessarily
    trailing) are dropped.
    """
    raw = tuple(parts)
    for x in raw:
        if not isinstance(x, int):
            raise PartitionParseError(f"partition parts must be integers, got {x!r}")
        if x < 0:
            raise PartitionParseError(f"partition parts must be non-negative, got {x}")
    for a, b in zip(raw, raw[1:]):
        if a < b:
            raise PartitionParseError(f"partition parts must be weakly decreasing, got {raw}")
    return tuple(x for x in raw if x > 0)


def revlex_cmp(a: Iterable[int], b: Iterable[int]) -> int:
    """Compare partitions of the same number under reverse lexicographic order.

    Returns -1, 0 or 1.  Raises SizeMismatchError when the partitions do not
    partition the same number: revlex is only defined degree by degree.
    """
    pa, pb = as_partition(a), as_partition(b)
    if sum(pa) != sum(pb):
        raise SizeMismatchError(
            f"cannot compare partitions of {sum(pa)} and {sum(pb)} under revlex"
        )
    return (pa > pb) - (pa < pb)


def _iter_partitions(n: int) -> Iterator[Partition]:
    """Yield the partitions of n in strictly decreasing revlex order."""
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        # Find the rightmost part that can still shrink.
        k = len(parts) - 1
        while k >= 0 and parts[k] == 1:
            k -= 1
        if k < 0:
            return
        # Shrink it and redistribute the freed cells as greedily as allowed,
        # which lands exactly on the revlex successor.
        spare = len(parts) - k
        parts[k] -= 1
        del parts[k + 1 :]
        cap = parts[k]
        while spare > 0:
            take = min(cap, spare)
            parts.append(take)
            spare -= take


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n``, ordered by decreasing revlex.

    The first entry is ``(n,)`` and the last is ``(1,) * n``.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative number: {n}")
    check_partition_size(n)
    return list(_iter_partitions(n))


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated partition such as ``"3,1"``.

    The empty string denotes the empty partition.  Exponent shorthand is not
    accepted.
    """
    body = text.strip()
    if not body:
        return ()
    try:
        values = [int(chunk.strip()) for chunk in body.split(",")]
    except ValueError:
        raise PartitionParseError(f"could not parse partition from {text!r}") from None
    return as_partition(values)


def format_partition(p: Iterable[int]) -> str:
    """Inverse of parse_partition; the empty partition becomes ``""``."""
    return ",".join(str(x) for x in as_partition(p))
