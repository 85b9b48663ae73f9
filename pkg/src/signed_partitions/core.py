"""Signed partitions of [+-n] = {+-1, ..., +-n}.

A signed partition is a set partition of [+-n] that is closed under
negating blocks and has at most one block C with -C == C (the
zero-block, necessarily {+-i : i in S}).  The remaining blocks come in
mirrored pairs {B, -B}.

Canonical form
--------------
Only one block per pair is stored: the *representative*, which is the
block containing the minimal positive element of B u -B (equivalently,
its element of least absolute value, taken with positive sign).  Pairs
are sorted by that minimal element, and elements inside a block are
sorted by absolute value.  The zero-block is stored as its positive
support S, with S = () meaning "no zero-block".

Growth strings
--------------
``SignedRGS`` is the sequential encoding used for enumeration.  Ball i
gets code

* ``0``        -- i is in the zero-block,
* ``+t``       -- i is in the representative of pair t,
* ``-t``       -- i is in the mirror of pair t (so -i is in the
  representative),

where pairs are numbered 1, 2, ... in order of opening.  A pair is
opened by its minimal positive element, so the opening code is always
``+(j+1)`` with j the number of pairs opened so far.

Text formats
------------
Compact::

    z:[1];p:[[2,-3,5],[4,-6]]

Expanded (every block, mirrors included)::

    {{1,-1},{2,-3,5},{-2,3,-5},{4,-6},{-4,6}}

JSON::

    {"n":6,"zero":[1],"pairs":[[2,-3,5],[4,-6]]}

``parse`` accepts all three; whitespace is ignored.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    IllegalZeroBlock,
    InvalidElement,
    MalformedRGS,
    MissingElements,
    MultipleSelfMirrored,
    OverlappingBlocks,
    PartitionSyntaxError,
    UnpairedBlock,
)

Block = tuple[int, ...]


def _sorted_block(elements: Iterable[int]) -> Block:
    # a nonzero block never holds both i and -i, so abs() is a total order
    return tuple(sorted(elements, key=lambda e: (abs(e), e < 0)))


def _negate(block: Iterable[int]) -> Block:
    return _sorted_block(-e for e in block)


@dataclass(frozen=True)
class SignedPartition:
    """A canonical signed partition.

    Build instances with :func:`validate`, :func:`from_rgs` or
    :func:`parse`; the constructor trusts its arguments.
    """

    n: int
    zero: tuple[int, ...] = ()
    pairs: tuple[Block, ...] = ()

    @property
    def k(self) -> int:
        """Number of pairs of nonzero blocks."""
        return len(self.pairs)

    def zero_block(self) -> Block:
        return _sorted_block(e for i in self.zero for e in (i, -i))

    def blocks(self) -> list[Block]:
        """All blocks in canonical order: zero-block, then B1, -B1, B2, -B2, ..."""
        out = [self.zero_block()] if self.zero else []
        for rep in self.pairs:
            out.append(rep)
            out.append(_negate(rep))
        return out

    def block_family(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(b) for b in self.blocks())

    def __str__(self) -> str:
        return format(self)


@dataclass(frozen=True)
class SignedRGS:
    codes: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.codes)

    @property
    def k(self) -> int:
        return max((abs(c) for c in self.codes), default=0)


# ---------------------------------------------------------------------------
# validation


def validate(
    n: int,
    zero_support: Iterable[int] = (),
    pair_blocks: Iterable[Iterable[int]] = (),
) -> SignedPartition:
    """Check raw blocks and return the canonical :class:`SignedPartition`.

    ``pair_blocks`` lists one block per pair, either side of the mirror.
    A self-mirrored block given there is accepted as the zero-block when
    ``zero_support`` is empty.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidElement(f"n must be a natural number, got {n!r}")

    zero_list = list(zero_support)
    for i in zero_list:
        if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= n:
            raise InvalidElement(f"zero-block support entry {i!r} not in [1, {n}]")
    zero = set(zero_list)
    if len(zero) != len(zero_list):
        raise OverlappingBlocks("zero-block support lists an element twice")

    self_mirrored = 1 if zero else 0
    reps: list[Block] = []
    for raw in pair_blocks:
        block = list(raw)
        if not block:
            raise InvalidElement("empty block")
        for e in block:
            if isinstance(e, bool) or not isinstance(e, int) or e == 0 or abs(e) > n:
                raise InvalidElement(f"element {e!r} not in [+-{n}]")
        as_set = set(block)
        if len(as_set) != len(block):
            raise OverlappingBlocks(f"block {block} lists an element twice")
        mirror = {-e for e in as_set}
        if as_set == mirror:
            self_mirrored += 1
            if self_mirrored > 1:
                raise MultipleSelfMirrored("at most one block may satisfy -C == C")
            zero = {abs(e) for e in as_set}
            continue
        if as_set & mirror:
            raise IllegalZeroBlock(
                f"block {_sorted_block(as_set)} meets its mirror but is not of the form +-S"
            )
        lead = min(as_set, key=abs)
        reps.append(_sorted_block(as_set) if lead > 0 else _negate(as_set))

    # a representative covering e also covers -e through its mirror,
    # so coverage can be tallied on absolute values
    cover = Counter(zero)
    for rep in reps:
        cover.update(abs(e) for e in rep)
    twice = sorted(i for i, c in cover.items() if c > 1)
    if twice:
        raise OverlappingBlocks(f"elements covered twice: +-{twice}")
    missing = [i for i in range(1, n + 1) if cover[i] == 0]
    if missing:
        raise MissingElements(f"elements not covered: +-{missing}")

    reps.sort(key=lambda b: b[0])
    return SignedPartition(n, tuple(sorted(zero)), tuple(reps))


# ---------------------------------------------------------------------------
# growth strings


def to_rgs(p: SignedPartition) -> SignedRGS:
    codes = [0] * p.n
    for t, rep in enumerate(p.pairs, start=1):
        for e in rep:
            codes[abs(e) - 1] = t if e > 0 else -t
    return SignedRGS(tuple(codes))


def check_rgs(codes: Sequence[int]) -> int:
    """Raise :class:`MalformedRGS` unless ``codes`` is a valid growth string.

    Returns the number of pairs opened.
    """
    opened = 0
    for pos, c in enumerate(codes):
        if c == opened + 1:
            opened += 1
        elif abs(c) > opened:
            if c == -(opened + 1):
                raise MalformedRGS(f"code {c} at ball {pos + 1} opens a pair negatively")
            raise MalformedRGS(
                f"code {c} at ball {pos + 1} out of range (only {opened} pairs open)"
            )
    return opened


def from_rgs(r: SignedRGS | Sequence[int]) -> SignedPartition:
    codes = tuple(r.codes if isinstance(r, SignedRGS) else r)
    k = check_rgs(codes)
    zero = []
    reps: list[list[int]] = [[] for _ in range(k)]
    for i, c in enumerate(codes, start=1):
        if c == 0:
            zero.append(i)
        elif c > 0:
            reps[c - 1].append(i)
        else:
            reps[-c - 1].append(-i)
    return SignedPartition(len(codes), tuple(zero), tuple(tuple(b) for b in reps))


# ---------------------------------------------------------------------------
# serialization


def _join(block: Iterable[int]) -> str:
    return ",".join(str(e) for e in block)


def format(p: SignedPartition, expanded: bool = False) -> str:  # noqa: A001
    if expanded:
        return "{" + ",".join("{" + _join(b) + "}" for b in p.blocks()) + "}"
    pairs = ",".join("[" + _join(b) + "]" for b in p.pairs)
    return f"z:[{_join(p.zero)}];p:[{pairs}]"


def to_json(p: SignedPartition) -> dict:
    return {"n": p.n, "zero": list(p.zero), "pairs": [list(b) for b in p.pairs]}


def from_json(data: dict | str) -> SignedPartition:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or set(data) - {"n", "zero", "pairs"}:
        raise InvalidElement('expected an object with keys "n", "zero", "pairs"')
    pairs = data.get("pairs", [])
    zero = data.get("zero", [])
    if "n" in data:
        n = data["n"]
    else:
        n = max([abs(e) for b in pairs for e in b] + list(zero), default=0)
    return validate(n, zero, pairs)


class _Tokens:
    """Whitespace-skipping cursor over the compact and expanded grammars."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise PartitionSyntaxError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self._skip()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-−":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise PartitionSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos].replace("−", "-"))

    def int_list(self, open_: str, close: str) -> list[int]:
        self.expect(open_)
        items: list[int] = []
        if self.peek() == close:
            self.pos += 1
            return items
        while True:
            items.append(self.integer())
            if self.peek() == ",":
                self.pos += 1
                continue
            self.expect(close)
            return items

    def end(self) -> None:
        if self.peek():
            raise PartitionSyntaxError("trailing characters", self.pos)


def _parse_compact(tok: _Tokens) -> tuple[list[int], list[list[int]]]:
    tok.expect("z")
    tok.expect(":")
    zero = tok.int_list("[", "]")
    tok.expect(";")
    tok.expect("p")
    tok.expect(":")
    tok.expect("[")
    pairs: list[list[int]] = []
    if tok.peek() == "]":
        tok.pos += 1
    else:
        while True:
            pairs.append(tok.int_list("[", "]"))
            if tok.peek() == ",":
                tok.pos += 1
                continue
            tok.expect("]")
            break
    tok.end()
    return zero, pairs


def _parse_expanded(tok: _Tokens) -> tuple[list[int], list[list[int]]]:
    tok.expect("{")
    blocks: list[list[int]] = []
    if tok.peek() == "}":
        tok.pos += 1
    else:
        while True:
            blocks.append(tok.int_list("{", "}"))
            if tok.peek() == ",":
                tok.pos += 1
                continue
            tok.expect("}")
            break
    tok.end()

    zero: list[int] = []
    others: list[frozenset[int]] = []
    for b in blocks:
        s = frozenset(b)
        if s == frozenset(-e for e in s):
            if zero:
                raise MultipleSelfMirrored("at most one block may satisfy -C == C")
            zero = sorted(abs(e) for e in s if e > 0)
            if not zero:
                raise InvalidElement("empty block")
        else:
            others.append(s)
    pending = Counter(others)
    reps: list[list[int]] = []
    for s in others:
        if pending[s] == 0:
            continue
        mirror = frozenset(-e for e in s)
        if pending[mirror] == 0:
            raise UnpairedBlock(f"block {_sorted_block(s)} listed without its mirror")
        pending[s] -= 1
        pending[mirror] -= 1
        reps.append(list(s))
    return zero, reps


def parse(text: str, n: Optional[int] = None) -> SignedPartition:
    """Parse any of the three text forms into a canonical partition.

    When ``n`` is omitted it is taken from the largest absolute value
    present (JSON input carries its own ``n``).
    """
    stripped = text.strip()
    if stripped.startswith("{") and stripped[1:].lstrip().startswith('"'):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PartitionSyntaxError(exc.msg, text.index(stripped) + exc.pos) from exc
        if n is not None and isinstance(data, dict):
            data.setdefault("n", n)
        return from_json(data)

    tok = _Tokens(text)
    if tok.peek() == "{":
        zero, pairs = _parse_expanded(tok)
    else:
        zero, pairs = _parse_compact(tok)
    if n is None:
        n = max([abs(e) for b in pairs for e in b] + zero, default=0)
    return validate(n, zero, pairs)

