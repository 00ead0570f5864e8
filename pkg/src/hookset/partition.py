"""Partitions, beta-sets and hook lengths.

A partition is stored as a weakly decreasing tuple of positive parts. Its
beta-set is the set of first-column hook lengths ``{parts[i] + m - 1 - i}``,
which determines the partition uniquely.
"""
from __future__ import annotations

from typing import Iterable

__all__ = [
    "PartitionError",
    "DomainError",
    "Partition",
    "BetaSet",
    "HookGrid",
    "make_partition",
    "conjugate",
    "beta_set",
    "partition_from_beta",
    "hook_length",
    "hook_grid",
    "parse_partition",
    "parse_beta_set",
]


class PartitionError(ValueError):
    """Invalid partition or beta-set data.

    ``index`` is the position of the offending entry, when there is one.
    """

    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


class DomainError(ValueError):
    """Operation is undefined for the given (valid) input."""


def _as_int(value, index: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            as_int = int(value)
        except (TypeError, ValueError):
            raise PartitionError(f"entry {index} is not an integer: {value!r}", index) from None
        if as_int != value:
            raise PartitionError(f"entry {index} is not an integer: {value!r}", index)
        return as_int
    return value


class Partition(tuple):
    """Immutable integer partition; compares equal to the plain tuple of its parts."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        checked = []
        for i, raw in enumerate(parts):
            part = _as_int(raw, i)
            if part < 1:
                raise PartitionError(f"part {i} must be positive, got {part}", i)
            if checked and part > checked[-1]:
                raise PartitionError(
                    f"parts must be weakly decreasing: part {i} ({part}) exceeds "
                    f"part {i - 1} ({checked[-1]})",
                    i,
                )
            checked.append(part)
        return super().__new__(cls, checked)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def boxes(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"

    def __str__(self) -> str:
        return ",".join(map(str, self))


class BetaSet(frozenset):
    """Nonempty set of positive integers, iterated in ascending order.

    ``n`` is the largest element, which is the (1, 1) hook length of the
    corresponding partition.
    """

    __slots__ = ()

    def __new__(cls, elements: Iterable[int]) -> BetaSet:
        values = [_as_int(x, i) for i, x in enumerate(elements)]
        if not values:
            raise PartitionError("a beta-set must be nonempty")
        seen: set[int] = set()
        for i, x in enumerate(values):
            if x < 1:
                raise PartitionError(f"beta-set element {i} must be positive, got {x}", i)
            if x in seen:
                raise PartitionError(f"beta-set element {i} ({x}) is repeated", i)
            seen.add(x)
        return super().__new__(cls, values)

    def __iter__(self):
        return iter(sorted(frozenset.__iter__(self)))

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def n(self) -> int:
        return max(frozenset.__iter__(self))

    def __repr__(self) -> str:
        return f"BetaSet({list(self)!r})"

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


# Row i holds the hook lengths h(i, 1), ..., h(i, parts[i]).
HookGrid = tuple[tuple[int, ...], ...]


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def conjugate(p: Partition) -> Partition:
    """Transpose of ``p``: column ``i`` has ``#{j : p[j] >= i}`` boxes."""
    p = Partition(p)
    if not p:
        return p
    counts = [0] * (p[0] + 1)
    for part in p:
        counts[part] += 1
    # counts[i] = number of parts equal to i; accumulate from the top down.
    out = []
    running = 0
    for i in range(p[0], 0, -1):
        running += counts[i]
        out.append(running)
    return Partition(reversed(out))


def beta_set(p: Partition) -> BetaSet:
    p = Partition(p)
    if not p:
        raise DomainError("the empty partition has no beta-set")
    m = len(p)
    return BetaSet(part + m - 1 - i for i, part in enumerate(p))


def partition_from_beta(a: Iterable[int]) -> Partition:
    """Inverse of :func:`beta_set`.

    With the elements sorted decreasingly ``a_1 > ... > a_m``, the parts are
    ``a_i - (m - i)``.
    """
    a = a if isinstance(a, BetaSet) else BetaSet(a)
    desc = sorted(a, reverse=True)
    m = len(desc)
    return Partition(x - (m - 1 - i) for i, x in enumerate(desc))


def hook_length(p: Partition, i: int, j: int) -> int:
    """Hook length of the box in row ``i``, column ``j`` (both 1-based)."""
    p = Partition(p)
    if not (1 <= i <= len(p)) or not (1 <= j <= p[i - 1]):
        raise IndexError(f"box ({i}, {j}) is not in the diagram of {tuple(p)}")
    # column length: number of rows reaching column j
    col = sum(1 for part in p if part >= j)
    return p[i - 1] - j + col - i + 1


def hook_grid(p: Partition) -> HookGrid:
    p = Partition(p)
    cols = conjugate(p)
    return tuple(
        tuple(row - j + cols[j] - i - 1 for j in range(row))
        for i, row in enumerate(p)
    )


def _split_ints(text: str, brackets: str, what: str) -> list[int]:
    body = text.strip()
    if body[:1] == brackets[0] and body[-1:] == brackets[1]:
        body = body[1:-1]
    body = body.strip()
    if not body:
        return []
    out = []
    for i, tok in enumerate(body.split(",")):
        tok = tok.strip()
        try:
            out.append(int(tok))
        except ValueError:
            raise PartitionError(f"bad {what} entry {i}: {tok!r}", i) from None
    return out


def parse_partition(text: str) -> Partition:
    """Parse ``"4,2,2"`` (parentheses and whitespace allowed; ``""`` or ``"()"`` is empty)."""
    return Partition(_split_ints(text, "()", "partition"))


def parse_beta_set(text: str) -> BetaSet:
    """Parse ``"{2,3,6}"``; braces are optional."""
    return BetaSet(_split_ints(text, "{}", "beta-set"))
