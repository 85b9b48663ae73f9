"""Balls into urns: a bijection between functions f: [n] -> [m] (m odd)
and pairs (signed partition of [+-n], urn choices).

Encoding walks the pairs in canonical order.  Urn 1 is reserved for the
zero-block.  Pair t picks a free urn p_t for the positive elements of
its representative; the absolute values of its negative elements go to
the next free urn after p_t in cyclic order on {2, ..., m}.  Both urns
are then reserved, even when the second one receives no ball, so a pair
always consumes exactly two urns and there are m-1, m-3, ... choices.

Decoding reads the zero-block off urn 1, then repeatedly takes the
smallest unplaced ball, its urn a, and the next free urn b after a; the
balls in a and b form the new pair (positively and negatively).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import AbstractSet, Iterator, Optional, Sequence

from .core import SignedPartition
from .enumeration import enumerate_partitions
from .errors import (
    EvenM,
    GuardExceeded,
    InvalidAssignment,
    InvalidChoice,
    NoFreeUrn,
    TooManyPairs,
)

DEFAULT_MAX_FUNCTIONS = 10**6


@dataclass(frozen=True)
class UrnAssignment:
    """Ball ``i`` (1-based) lands in urn ``values[i-1]``."""

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        check_odd(self.m)
        object.__setattr__(self, "values", tuple(self.values))
        for i, u in enumerate(self.values, start=1):
            if isinstance(u, bool) or not isinstance(u, int) or not 1 <= u <= self.m:
                raise InvalidAssignment(f"f({i}) = {u!r} is not an urn in [1, {self.m}]")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, ball: int) -> int:
        return self.values[ball - 1]

    def format(self) -> str:
        return ",".join(map(str, self.values))

    def to_json(self) -> dict:
        return {"m": self.m, "f": list(self.values)}


def parse_urns(text: str) -> tuple[int, ...]:
    """``"1,4,5"`` -> ``(1, 4, 5)``; blank text is the empty sequence."""
    text = "".join(text.split())
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def check_odd(m: int) -> None:
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidAssignment(f"m must be a positive integer, got {m!r}")
    if m % 2 == 0:
        raise EvenM(f"m={m} is even; the urn bijection is only defined for odd m")


def check_pair_bound(k: int, m: int) -> None:
    if 2 * k > m - 1:
        raise TooManyPairs(
            f"{k} pairs need {2 * k + 1} urns but only {m} exist (require 2k <= m-1)"
        )


def cyclic_successor(u: int, used: AbstractSet[int], m: int) -> int:
    """First urn after ``u`` in the cycle u+1, ..., m, 2, 3, ... that is
    neither urn 1 nor in ``used``."""
    if not 2 <= u <= m:
        raise ValueError(f"urn {u} not in [2, {m}]")
    for step in range(1, m - 1):
        v = (u - 2 + step) % (m - 1) + 2
        if v not in used:
            return v
    raise NoFreeUrn(f"no free urn after {u} among [2, {m}] with {sorted(used)} reserved")


def encode(p: SignedPartition, choices: Sequence[int], m: int) -> UrnAssignment:
    check_odd(m)
    check_pair_bound(p.k, m)
    if len(choices) != p.k:
        raise InvalidChoice(f"partition has {p.k} pairs but {len(choices)} urn choices were given")
    values = [0] * p.n
    for i in p.zero:
        values[i - 1] = 1
    used = {1}
    for t, (rep, a) in enumerate(zip(p.pairs, choices), start=1):
        if isinstance(a, bool) or not isinstance(a, int) or not 2 <= a <= m:
            raise InvalidChoice(f"choice {a!r} for pair {t} is not an urn in [2, {m}]")
        if a in used:
            raise InvalidChoice(f"choice {a} for pair {t} is already reserved")
        used.add(a)
        b = cyclic_successor(a, used, m)
        used.add(b)
        for e in rep:
            values[abs(e) - 1] = a if e > 0 else b
    return UrnAssignment(m, tuple(values))


def decode(f: UrnAssignment | Sequence[int], m: Optional[int] = None) -> tuple[SignedPartition, tuple[int, ...]]:
    """Recover ``(partition, choices)`` with ``encode(partition, choices, m) == f``."""
    if not isinstance(f, UrnAssignment):
        if m is None:
            raise TypeError("m is required when f is a plain sequence")
        f = UrnAssignment(m, tuple(f))
    m = f.m
    vals = f.values
    by_urn: dict[int, list[int]] = {}
    for i, u in enumerate(vals, start=1):
        by_urn.setdefault(u, []).append(i)

    zero = tuple(by_urn.get(1, ()))
    used = {1}
    pairs = []
    choices = []
    for i, a in enumerate(vals, start=1):
        if a in used:
            continue
        # i is the smallest ball not yet placed
        used.add(a)
        b = cyclic_successor(a, used, m)
        used.add(b)
        rep = [(j, j) for j in by_urn[a]] + [(j, -j) for j in by_urn.get(b, ())]
        pairs.append(tuple(e for _, e in sorted(rep)))
        choices.append(a)
    return SignedPartition(f.n, zero, tuple(pairs)), tuple(choices)


# ---------------------------------------------------------------------------
# choice ranks


def choice_counts(k: int, m: int) -> list[int]:
    """Sizes of the successive free sets: m-1, m-3, ..., m-2k+1."""
    return [m - 1 - 2 * t for t in range(k)]


def choices_from_ranks(ranks: Sequence[int], m: int) -> tuple[int, ...]:
    """Turn indices into the shrinking free sets into urn numbers."""
    check_pair_bound(len(ranks), m)
    used = {1}
    out = []
    for r in ranks:
        free = [u for u in range(2, m + 1) if u not in used]
        if not 0 <= r < len(free):
            raise InvalidChoice(f"rank {r} out of range for {len(free)} free urns")
        a = free[r]
        used.add(a)
        used.add(cyclic_successor(a, used, m))
        out.append(a)
    return tuple(out)


def ranks_from_choices(choices: Sequence[int], m: int) -> tuple[int, ...]:
    check_pair_bound(len(choices), m)
    used = {1}
    out = []
    for a in choices:
        free = [u for u in range(2, m + 1) if u not in used]
        if a not in free:
            raise InvalidChoice(f"urn {a} is not free")
        out.append(free.index(a))
        used.add(a)
        used.add(cyclic_successor(a, used, m))
    return tuple(out)


def enumerate_assignments(
    p: SignedPartition, m: int
) -> Iterator[tuple[tuple[int, ...], UrnAssignment]]:
    """All (choices, f) reachable from ``p``, in lexicographic rank order."""
    check_odd(m)
    check_pair_bound(p.k, m)
    for ranks in itertools.product(*(range(c) for c in choice_counts(p.k, m))):
        choices = choices_from_ranks(ranks, m)
        yield choices, encode(p, choices, m)


# ---------------------------------------------------------------------------
# exhaustive check


@dataclass
class BijectionReport:
    n: int
    m: int
    functions: int
    generated: int = 0
    distinct: int = 0
    decode_failures: int = 0
    encode_failures: int = 0
    per_k: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.generated == self.functions
            and self.distinct == self.functions
            and self.decode_failures == 0
            and self.encode_failures == 0
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "passed": self.passed,
            "functions": self.functions,
            "generated": self.generated,
            "distinct": self.distinct,
            "per_k": list(self.per_k),
            "decode_failures": self.decode_failures,
            "encode_failures": self.encode_failures,
        }


def verify_bijection(n: int, m: int, max_functions: Optional[int] = DEFAULT_MAX_FUNCTIONS) -> BijectionReport:
    """Check the bijection exhaustively on [n] -> [m].

    (i) the encode images of all (partition, choices) are m**n distinct
    functions, (ii) decode inverts encode on each of them, (iii) encode
    inverts decode on every function.
    """
    check_odd(m)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    total = m**n
    if max_functions is not None and total > max_functions:
        raise GuardExceeded(f"m^n = {total} exceeds the limit of {max_functions} functions")

    report = BijectionReport(n=n, m=m, functions=total, per_k=[0] * (n + 1))
    seen: set[tuple[int, ...]] = set()
    for p in enumerate_partitions(n):
        if 2 * p.k > m - 1:
            continue
        for choices, f in enumerate_assignments(p, m):
            report.generated += 1
            report.per_k[p.k] += 1
            seen.add(f.values)
            if decode(f) != (p, choices):
                report.decode_failures += 1
    report.distinct = len(seen)

    for values in itertools.product(range(1, m + 1), repeat=n):
        f = UrnAssignment(m, values)
        p, choices = decode(f)
        if encode(p, choices, m) != f:
            report.encode_failures += 1
    return report
