"""Deciding conjugacy of two beta-sets with equal hook multisets.

For distinct beta-sets ``A`` and ``B`` with common maximum ``n`` and equal
hook multisets, the partitions are conjugate exactly when ``A - B`` and
``B - A`` are both fixed by the reflection ``x -> n - x``. This module
implements that test, an independent direct test, and checks of the two
intermediate facts used to establish the equivalence.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .multiset import (
    PreconditionError,
    complement_in,
    conjugate_beta,
    hooks_direct,
    hooks_via_beta,
    msum,
)
from .partition import BetaSet, Partition, beta_set, partition_from_beta

__all__ = [
    "IdenticalSetsError",
    "MaxMismatchError",
    "HooksDifferError",
    "NotSymmetricError",
    "Status",
    "SymmetricDiffWitness",
    "ConjugacyVerdict",
    "Step1Result",
    "is_n_symmetric",
    "reflect",
    "theorem_criterion",
    "is_conjugate_direct",
    "decide_conjugacy",
    "herman_chung_pair",
    "herman_chung_beta_pair",
    "step1_derived_sets",
    "proof_identity_residual",
    "proof_identity_residuals",
]


class IdenticalSetsError(PreconditionError):
    pass


class MaxMismatchError(PreconditionError):
    pass


class HooksDifferError(PreconditionError):
    pass


class NotSymmetricError(PreconditionError):
    pass


def _beta(a) -> BetaSet:
    return a if isinstance(a, BetaSet) else BetaSet(a)


def reflect(s: Iterable[int], n: int) -> frozenset[int]:
    return frozenset(n - x for x in s)


def is_n_symmetric(s: Iterable[int], n: int) -> bool:
    s = frozenset(s)
    return s == reflect(s, n)


class Status(str, enum.Enum):
    CONJUGATE = "Conjugate"
    NOT_CONJUGATE = "NotConjugate"
    IDENTICAL = "Identical"
    HOOKS_DIFFER = "HooksDiffer"


@dataclass(frozen=True)
class SymmetricDiffWitness:
    n: int
    a_minus_b: tuple[int, ...]
    b_minus_a: tuple[int, ...]
    a_sym: bool
    b_sym: bool

    @property
    def holds(self) -> bool:
        return self.a_sym and self.b_sym

    @property
    def a_minus_b_reflected(self) -> tuple[int, ...]:
        return tuple(sorted(reflect(self.a_minus_b, self.n)))

    @property
    def b_minus_a_reflected(self) -> tuple[int, ...]:
        return tuple(sorted(reflect(self.b_minus_a, self.n)))

    @classmethod
    def of(cls, a: BetaSet, b: BetaSet) -> SymmetricDiffWitness:
        n = a.n
        c, d = a - b, b - a
        return cls(n, tuple(sorted(c)), tuple(sorted(d)), is_n_symmetric(c, n), is_n_symmetric(d, n))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "a_minus_b": list(self.a_minus_b),
            "b_minus_a": list(self.b_minus_a),
            "a_minus_b_reflected": list(self.a_minus_b_reflected),
            "b_minus_a_reflected": list(self.b_minus_a_reflected),
            "a_sym": self.a_sym,
            "b_sym": self.b_sym,
        }

    @classmethod
    def from_dict(cls, d: dict) -> SymmetricDiffWitness:
        return cls(d["n"], tuple(d["a_minus_b"]), tuple(d["b_minus_a"]), d["a_sym"], d["b_sym"])


@dataclass(frozen=True)
class ConjugacyVerdict:
    status: Status
    witness: SymmetricDiffWitness | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ConjugacyVerdict:
        w = d.get("witness")
        return cls(Status(d["status"]), None if w is None else SymmetricDiffWitness.from_dict(w))


def theorem_criterion(a: BetaSet, b: BetaSet) -> tuple[bool, SymmetricDiffWitness]:
    """Symmetric-difference test for conjugacy.

    Requires ``a != b``, ``max(a) == max(b)`` and equal hook multisets; each
    violation raises its own :class:`PreconditionError` subclass.

    Returns:
        ``(verdict, witness)`` where the verdict is true iff both differences
        are symmetric under ``x -> n - x``.
    """
    a, b = _beta(a), _beta(b)
    if a == b:
        raise IdenticalSetsError(f"{a} and {b} are the same set")
    if a.n != b.n:
        raise MaxMismatchError(f"largest elements differ: {a.n} vs {b.n}")
    if hooks_via_beta(a) != hooks_via_beta(b):
        raise HooksDifferError(f"{a} and {b} have different hook multisets")
    witness = SymmetricDiffWitness.of(a, b)
    return witness.holds, witness


def is_conjugate_direct(a: BetaSet, b: BetaSet) -> bool:
    return conjugate_beta(_beta(a)) == _beta(b)


def decide_conjugacy(a: BetaSet, b: BetaSet) -> ConjugacyVerdict:
    a, b = _beta(a), _beta(b)
    if a == b:
        return ConjugacyVerdict(Status.IDENTICAL)
    # unequal maxima imply unequal largest hooks
    if a.n != b.n or hooks_via_beta(a) != hooks_via_beta(b):
        return ConjugacyVerdict(Status.HOOKS_DIFFER)
    holds, witness = theorem_criterion(a, b)
    return ConjugacyVerdict(Status.CONJUGATE if holds else Status.NOT_CONJUGATE, witness)


def herman_chung_pair(n: int) -> tuple[Partition, Partition]:
    """The pair ``(n+6, n+3, n+3, 2)``, ``(n+5, n+5, n+2, 1, 1)``.

    Both have the same hook multiset and are not conjugate, for every n >= 0.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return Partition((n + 6, n + 3, n + 3, 2)), Partition((n + 5, n + 5, n + 2, 1, 1))


def herman_chung_beta_pair(n: int) -> tuple[BetaSet, BetaSet]:
    lam, mu = herman_chung_pair(n)
    return beta_set(lam), beta_set(mu)


def _require_symmetric(a: BetaSet, b: BetaSet) -> int:
    if a.n != b.n:
        raise MaxMismatchError(f"largest elements differ: {a.n} vs {b.n}")
    n = a.n
    if not is_n_symmetric(a - b, n):
        raise NotSymmetricError(f"{sorted(a - b)} is not {n}-symmetric")
    if not is_n_symmetric(b - a, n):
        raise NotSymmetricError(f"{sorted(b - a)} is not {n}-symmetric")
    return n


class Step1Result(NamedTuple):
    derived_minus_b: frozenset[int]
    b_minus_derived: frozenset[int]
    first_sym: bool
    second_sym: bool


def step1_derived_sets(a: BetaSet, b: BetaSet) -> Step1Result:
    """Compare ``b`` with the conjugate beta-set ``n - A'`` of ``a``.

    Given symmetric ``A - B`` and ``B - A``, both ``(n - A') - B`` and
    ``B - (n - A')`` must come out symmetric as well; the flags report it.
    """
    a, b = _beta(a), _beta(b)
    n = _require_symmetric(a, b)
    derived = reflect(complement_in(a, n), n)
    left, right = derived - b, b - derived
    return Step1Result(left, right, is_n_symmetric(left, n), is_n_symmetric(right, n))


def _identity_terms(a: BetaSet, b: BetaSet, n: int):
    c, d = a - b, b - a
    derived = reflect(complement_in(a, n), n)
    return msum(c, derived), msum(b, c), msum(d, derived), msum(d, b)


def proof_identity_residual(a: BetaSet, b: BetaSet, k: int) -> int:
    """``L - R`` for the four-term multiplicity identity at ``k``.

    ``L`` is the difference of the multiplicities of ``k`` in the two hook
    multisets; ``R`` is

        (C + (n - A'))[n+k] - (B + C)[n+k] - (D + (n - A'))[n+k] + (D + B)[n+k]

    with ``C = A - B``, ``D = B - A`` and ``+`` the pairwise-sum multiset.
    The result is 0 whenever ``C`` and ``D`` are symmetric.
    """
    a, b = _beta(a), _beta(b)
    n = _require_symmetric(a, b)
    if not 1 <= k <= n:
        raise PreconditionError(f"k must lie in 1..{n}, got {k}")
    return proof_identity_residuals(a, b)[k - 1]


def proof_identity_residuals(a: BetaSet, b: BetaSet) -> list[int]:
    """Residuals for every ``k`` in ``1..n``, sharing the multiset work."""
    a, b = _beta(a), _beta(b)
    n = _require_symmetric(a, b)
    # left side from the diagram, right side from beta-set arithmetic
    ha = hooks_direct(partition_from_beta(a))
    hb = hooks_direct(partition_from_beta(b))
    c_sum, bc_sum, d_sum, db_sum = _identity_terms(a, b, n)
    out = []
    for k in range(1, n + 1):
        lhs = ha[k] - hb[k]
        j = n + k
        rhs = c_sum[j] - bc_sum[j] - d_sum[j] + db_sum[j]
        out.append(lhs - rhs)
    return out
