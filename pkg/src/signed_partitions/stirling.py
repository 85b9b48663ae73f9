"""Stirling numbers of the second kind (types A and B), falling
factorials, and exact verification of the two expansions

    x^n = sum_k S(n,k)   [x]_k        [x]_k   = x(x-1)...(x-k+1)
    x^n = sum_k S_B(n,k) [x]^B_k      [x]^B_k = (x-1)(x-3)...(x-2k+1)

as polynomial identities.

Neither triangle is defined here by counting.  Both come from
recurrences that the tests pin to independent enumeration:

    S(n,k)   = S(n-1,k-1)   + k        S(n-1,k)
    S_B(n,k) = S_B(n-1,k-1) + (2k+1)   S_B(n-1,k)

The type-B factor counts where ball n can go given k open pairs: the
zero-block, either side of one of the k pairs, or a fresh pair.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Literal

from .errors import InternalInconsistency, OutOfRange
from .poly import ExactPolynomial

Kind = Literal["A", "B"]


def _kind(kind: str) -> Kind:
    k = kind.upper()
    if k not in ("A", "B"):
        raise ValueError(f"kind must be 'A' or 'B', got {kind!r}")
    return k  # type: ignore[return-value]


class StirlingTriangle:
    """Row-memoized triangle ``rows[n][k]``, 0 <= k <= n.

    Rows are only ever appended, under a lock, and each row is an
    immutable tuple, so concurrent readers see a consistent prefix.
    """

    def __init__(self, kind: str):
        self.kind = _kind(kind)
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _weight(self, k: int) -> int:
        return k if self.kind == "A" else 2 * k + 1

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise OutOfRange(f"n must be >= 0, got {n}")
        if n < len(self._rows):
            return self._rows[n]
        with self._lock:
            while len(self._rows) <= n:
                prev = self._rows[-1]
                m = len(prev)  # new row index
                new = [0] * (m + 1)
                for k in range(m + 1):
                    up = prev[k] if k < m else 0
                    diag = prev[k - 1] if k >= 1 else 0
                    new[k] = diag + self._weight(k) * up
                self._rows.append(tuple(new))
        return self._rows[n]

    def rows(self, max_n: int) -> list[tuple[int, ...]]:
        self.row(max_n)
        return self._rows[: max_n + 1]

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if n < 0 or not 0 <= k <= n:
            raise OutOfRange(f"need 0 <= k <= n, got n={n}, k={k}")
        return self.row(n)[k]


TRIANGLE_A = StirlingTriangle("A")
TRIANGLE_B = StirlingTriangle("B")


def triangle(kind: str) -> StirlingTriangle:
    return TRIANGLE_A if _kind(kind) == "A" else TRIANGLE_B


def stirling2(n: int, k: int) -> int:
    """Number of partitions of [n] into k nonempty blocks."""
    return TRIANGLE_A[n, k]


def stirling2_B(n: int, k: int) -> int:
    """Number of signed partitions of [+-n] with k pairs of nonzero blocks."""
    return TRIANGLE_B[n, k]


# ---------------------------------------------------------------------------
# falling factorials


def falling_factorial_A(k: int) -> ExactPolynomial:
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    return ExactPolynomial.from_roots(range(k))


def falling_factorial_B(k: int) -> ExactPolynomial:
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    return ExactPolynomial.from_roots(range(1, 2 * k, 2))


def falling_factorial_A_at(k: int, x: int) -> int:
    out = 1
    for j in range(k):
        out *= x - j
    return out


def falling_factorial_B_at(k: int, x: int) -> int:
    out = 1
    for j in range(1, k + 1):
        out *= x - (2 * j - 1)
    return out


_BASIS: dict[str, Callable[[int], ExactPolynomial]] = {
    "A": falling_factorial_A,
    "B": falling_factorial_B,
}
_BASIS_AT: dict[str, Callable[[int, int], int]] = {
    "A": falling_factorial_A_at,
    "B": falling_factorial_B_at,
}


# ---------------------------------------------------------------------------
# identity verification


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of comparing x**n with its falling-factorial expansion.

    ``lhs`` holds the coefficients of x**n, ``rhs`` those of the
    expanded sum; both are listed up to degree n.
    """

    n: int
    type: Kind
    equal: bool
    lhs: list[int] = field(default_factory=list)
    rhs: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "type": self.type,
            "equal": self.equal,
            "lhs": list(self.lhs),
            "rhs": list(self.rhs),
        }


def expansion(kind: str, n: int) -> ExactPolynomial:
    """sum_k S(n,k) * basis_k as an exact polynomial."""
    kind = _kind(kind)
    row = triangle(kind).row(n)
    basis = _BASIS[kind]
    total = ExactPolynomial()
    for k, s in enumerate(row):
        if s:
            total = total + s * basis(k)
    return total


def verify_identity(kind: str, n: int) -> IdentityReport:
    kind = _kind(kind)
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")
    lhs = ExactPolynomial.monomial(n)
    rhs = expansion(kind, n)
    return IdentityReport(
        n=n,
        type=kind,
        equal=lhs == rhs,
        lhs=[lhs.coefficient(d) for d in range(n + 1)],
        rhs=[rhs.coefficient(d) for d in range(max(n, rhs.degree) + 1)],
    )


def verify_identity_A(n: int) -> IdentityReport:
    return verify_identity("A", n)


def verify_identity_B(n: int) -> IdentityReport:
    return verify_identity("B", n)


def pointwise_mismatches(kind: str, n: int, xs: Iterable[int]) -> list[int]:
    """Integers x at which x**n differs from the expansion, summed directly
    from products (no polynomial arithmetic involved)."""
    kind = _kind(kind)
    row = triangle(kind).row(n)
    at = _BASIS_AT[kind]
    return [x for x in xs if x**n != sum(s * at(k, x) for k, s in enumerate(row))]


def basis_coefficients(kind: str, n: int) -> list[int]:
    """Coordinates of x**n in the falling-factorial basis of ``kind``.

    Peels off the leading term against the monic basis polynomial of the
    same degree until nothing is left, then checks the result against the
    recurrence triangle.
    """
    kind = _kind(kind)
    if n < 0:
        raise OutOfRange(f"n must be >= 0, got {n}")
    basis = _BASIS[kind]
    rest = ExactPolynomial.monomial(n)
    coeffs = [0] * (n + 1)
    for d in range(n, -1, -1):
        c = rest.coefficient(d)
        b = basis(d)
        q, r = divmod(c, b.leading())
        if r:
            raise InternalInconsistency(f"leading coefficient {c} not divisible at degree {d}")
        coeffs[d] = q
        if q:
            rest = rest - q * b
    if rest != ExactPolynomial():
        raise InternalInconsistency(f"nonzero remainder {rest} after basis change")
    expected = list(triangle(kind).row(n))
    if coeffs != expected:
        raise InternalInconsistency(
            f"basis change gives {coeffs}, triangle row {n} is {expected}"
        )
    return coeffs


def basis_coefficients_B(n: int) -> list[int]:
    return basis_coefficients("B", n)


def basis_coefficients_A(n: int) -> list[int]:
    return basis_coefficients("A", n)


# ---------------------------------------------------------------------------
# type-A counting oracle


def set_partition_counts(n: int) -> list[int]:
    """Partitions of [n] tallied by block count, by walking restricted
    growth strings a_1 = 0, a_i <= 1 + max(a_1..a_{i-1})."""
    counts = [0] * (n + 1)
    if n == 0:
        counts[0] = 1
        return counts

    def walk(i: int, blocks: int) -> None:
        if i == n:
            counts[blocks] += 1
            return
        for b in range(blocks + 1):
            walk(i + 1, max(blocks, b + 1))

    walk(0, 0)
    return counts
