"""Exhaustive generation of signed partitions.

Partitions are generated through their growth strings (see
:mod:`signed_partitions.core`), so every partition comes out exactly
once and already canonical.  The order is lexicographic in the codes,
where codes compare as ``0 < +1 < -1 < +2 < -2 < ...``.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .core import SignedPartition, from_rgs


def _code(index: int) -> int:
    # option index -> code: 0, +1, -1, +2, -2, ...
    return 0 if index == 0 else (index + 1) // 2 * (1 if index % 2 else -1)


class EnumerationCursor:
    """Odometer over the growth strings of length ``n``.

    With ``k_filter`` set, only strings opening exactly that many pairs
    are produced; infeasible prefixes are never entered.  A cursor is a
    single-consumer iterator.
    """

    def __init__(self, n: int, k_filter: Optional[int] = None):
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        if k_filter is not None and not 0 <= k_filter <= n:
            raise ValueError(f"k must lie in [0, {n}], got {k_filter}")
        self.n = n
        self.k_filter = k_filter
        self._idx = [0] * n
        # opened[i] = pairs opened by codes[:i]
        self._opened = [0] * (n + 1)
        self._done = False
        self._started = False

    def _feasible(self, pos: int, opened_after: int) -> bool:
        k = self.k_filter
        if k is None:
            return True
        return opened_after <= k and opened_after + (self.n - pos - 1) >= k

    def _try(self, pos: int, start: int) -> bool:
        """Set position ``pos`` to the first feasible option >= ``start``."""
        j = self._opened[pos]
        for idx in range(start, 2 * j + 2):
            after = j + 1 if idx == 2 * j + 1 else j
            if self._feasible(pos, after):
                self._idx[pos] = idx
                self._opened[pos + 1] = after
                return True
        return False

    def _fill(self, pos: int) -> None:
        for q in range(pos, self.n):
            if not self._try(q, 0):
                raise AssertionError("feasible prefix has no completion")

    def __iter__(self) -> "EnumerationCursor":
        return self

    def _advance(self) -> bool:
        if not self._started:
            self._started = True
            if self.k_filter is not None and self.n == 0 and self.k_filter != 0:
                return False
            self._fill(0)
            return True
        for pos in range(self.n - 1, -1, -1):
            if self._try(pos, self._idx[pos] + 1):
                self._fill(pos + 1)
                return True
        return False

    def __next__(self) -> tuple[int, ...]:
        if self._done or not self._advance():
            self._done = True
            raise StopIteration
        return tuple(_code(i) for i in self._idx)


def enumerate_rgs(n: int, k_filter: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    return EnumerationCursor(n, k_filter)


def enumerate_partitions(n: int, k_filter: Optional[int] = None) -> Iterator[SignedPartition]:
    """Yield every signed partition of [+-n] (with ``k_filter`` pairs, if given)."""
    for codes in EnumerationCursor(n, k_filter):
        yield from_rgs(codes)


def count_by_pairs(n: int) -> list[int]:
    """Tally the enumerated partitions of [+-n] by number of pairs."""
    counts = [0] * (n + 1)
    for codes in EnumerationCursor(n):
        counts[max(map(abs, codes), default=0)] += 1
    return counts
