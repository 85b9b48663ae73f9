"""Dense polynomials with exact integer coefficients."""

from __future__ import annotations

from typing import Iterable, Union

Scalar = int


class ExactPolynomial:
    """Immutable polynomial; ``coeffs[d]`` is the coefficient of x**d.

    Trailing zeros are stripped on construction, so the zero polynomial
    has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "ExactPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "ExactPolynomial":
        """The monic polynomial prod (x - r)."""
        cs = [1]
        for r in roots:
            # multiply by (x - r)
            cs = [0] + cs
            for d in range(len(cs) - 1):
                cs[d] -= r * cs[d + 1]
        return cls(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other: Union["ExactPolynomial", int]) -> "ExactPolynomial":
        if isinstance(other, ExactPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExactPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return ExactPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    __radd__ = __add__

    def __neg__(self):
        return ExactPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: str(mag), 1: "x"}.get(d, f"x^{d}")
            if d and mag != 1:
                body = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out
