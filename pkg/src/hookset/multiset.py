"""Integer multisets, pairwise sum/difference calculus and hook multisets.

Two independent routes to the hook multiset are provided:
:func:`hooks_direct` walks the Young diagram box by box, and
:func:`hooks_via_beta` takes positive differences between a beta-set and its
complement in ``{0, ..., n}``.
"""
from __future__ import annotations

import json
from collections import Counter
from typing import Iterable, Mapping

from .partition import BetaSet, Partition, hook_grid

__all__ = [
    "PreconditionError",
    "IntMultiset",
    "HookMultiset",
    "multiplicity",
    "msum",
    "mdiff",
    "hooks_direct",
    "complement_in",
    "hooks_via_beta",
    "conjugate_beta",
]


class PreconditionError(ValueError):
    """Arguments violate the stated precondition of an operation."""


class IntMultiset:
    """Frozen multiset of integers.

    Iteration yields values in ascending order with repetition, and ``m[k]``
    is the multiplicity of ``k`` (zero when absent). The canonical text form
    ``[1,1,2,3]`` is returned by :meth:`key` and doubles as a grouping key.
    """

    __slots__ = ("_counts", "_key")

    def __init__(self, values: Iterable[int] = ()) -> None:
        if isinstance(values, Mapping):
            counts = Counter()
            for value, mult in values.items():
                if mult < 0:
                    raise ValueError(f"negative multiplicity {mult} for {value}")
                if mult:
                    counts[int(value)] += mult
        else:
            counts = Counter(int(v) for v in values)
        self._counts: dict[int, int] = dict(sorted(counts.items()))
        self._key: str | None = None

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> IntMultiset:
        return cls(counts)

    @classmethod
    def from_key(cls, text: str) -> IntMultiset:
        values = json.loads(text)
        if not isinstance(values, list) or values != sorted(values):
            raise ValueError(f"not a canonical multiset: {text!r}")
        return cls(values)

    def counts(self) -> dict[int, int]:
        return dict(self._counts)

    def values(self) -> list[int]:
        return [v for v, c in self._counts.items() for _ in range(c)]

    def key(self) -> str:
        if self._key is None:
            self._key = "[" + ",".join(map(str, self.values())) + "]"
        return self._key

    def __getitem__(self, k: int) -> int:
        return self._counts.get(k, 0)

    def __contains__(self, k: object) -> bool:
        return k in self._counts

    def __iter__(self):
        return iter(self.values())

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __bool__(self) -> bool:
        return bool(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMultiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._counts.items()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.key()})"

    __str__ = key

    def max(self) -> int:
        if not self._counts:
            raise ValueError("max() of an empty multiset")
        return next(reversed(self._counts))


class HookMultiset(IntMultiset):
    """Multiset of hook lengths; every value is positive."""

    __slots__ = ()

    def __init__(self, values: Iterable[int] = ()) -> None:
        super().__init__(values)
        if self._counts and next(iter(self._counts)) < 1:
            raise ValueError("hook lengths must be positive")


def _counts_of(m) -> dict[int, int]:
    if isinstance(m, IntMultiset):
        return m._counts
    return Counter(m)


def multiplicity(m: IntMultiset, k: int) -> int:
    return _counts_of(m).get(k, 0)


def msum(m, n) -> IntMultiset:
    """All pairwise sums ``x + y``, multiplicities multiplied.

    Plain sets or iterables are accepted and read with multiplicity one.
    """
    out: Counter = Counter()
    nc = _counts_of(n)
    for x, cx in _counts_of(m).items():
        for y, cy in nc.items():
            out[x + y] += cx * cy
    return IntMultiset.from_counts(out)


def mdiff(m, n) -> IntMultiset:
    """All pairwise differences ``x - y``; zero and negative values are kept."""
    out: Counter = Counter()
    nc = _counts_of(n)
    for x, cx in _counts_of(m).items():
        for y, cy in nc.items():
            out[x - y] += cx * cy
    return IntMultiset.from_counts(out)


def hooks_direct(p: Partition) -> HookMultiset:
    return HookMultiset(h for row in hook_grid(p) for h in row)


def complement_in(a: BetaSet, n: int) -> frozenset[int]:
    """``{0, ..., n}`` minus ``a``; requires ``n == max(a)``."""
    a = a if isinstance(a, BetaSet) else BetaSet(a)
    if n != a.n:
        raise PreconditionError(f"n={n} is not the largest element of {a}")
    return frozenset(range(n + 1)) - a


def hooks_via_beta(a: BetaSet) -> HookMultiset:
    a = a if isinstance(a, BetaSet) else BetaSet(a)
    comp = complement_in(a, a.n)
    return HookMultiset(x - y for x in a for y in comp if x > y)


def conjugate_beta(a: BetaSet) -> BetaSet:
    """Beta-set of the conjugate partition, ``{n - x : x in complement}``."""
    a = a if isinstance(a, BetaSet) else BetaSet(a)
    n = a.n
    return BetaSet(n - x for x in complement_in(a, n))
