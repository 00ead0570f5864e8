"""Brute-force reference implementations, independent of the package code paths."""
from collections import Counter


def cells(parts):
    return {(i, j) for i, row in enumerate(parts) for j in range(row)}


def brute_hook(parts, i, j):
    """Count boxes right of and below (i, j) in the cell set, plus the box itself (0-based)."""
    box = cells(parts)
    right = sum(1 for (r, c) in box if r == i and c > j)
    below = sum(1 for (r, c) in box if c == j and r > i)
    return right + below + 1


def brute_hooks(parts):
    return sorted(brute_hook(parts, i, j) for (i, j) in cells(parts))


def brute_conjugate(parts):
    """Reflect the cell set across the diagonal and read off row lengths."""
    flipped = {(j, i) for (i, j) in cells(parts)}
    rows = Counter(r for r, _ in flipped)
    return tuple(rows[r] for r in range(len(rows)))


def brute_beta(parts):
    """First-column hooks read from the diagram."""
    return sorted(brute_hook(parts, i, 0) for i in range(len(parts)))


def pair_sums(xs, ys):
    return sorted(x + y for x in xs for y in ys)


def pair_diffs(xs, ys):
    return sorted(x - y for x in xs for y in ys)


def all_partitions(total, cap=None):
    cap = total if cap is None else cap
    if total == 0:
        yield ()
        return
    for first in range(min(total, cap), 0, -1):
        for rest in all_partitions(total - first, first):
            yield (first,) + rest
