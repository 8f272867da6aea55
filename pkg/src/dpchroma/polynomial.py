"""Dense univariate polynomials over arbitrary-precision integers.

Coefficient lists are indexed by degree (constant term first) and kept free
of trailing zeros, so the leading coefficient is nonzero unless the
polynomial is zero.  All arithmetic is exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

IntoPoly = Union["Polynomial", int]


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def x() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "Polynomial":
        return Polynomial((0,) * degree + (coeff,))

    @staticmethod
    def falling_factorial(k: int) -> "Polynomial":
        """x (x-1) ... (x-k+1); the number of injections [k] -> [x]."""
        if k < 0:
            raise ValueError("negative falling factorial")
        p = Polynomial.one()
        for i in range(k):
            p = p * Polynomial((-i, 1))
        return p

    # -- basic queries -----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: IntoPoly) -> "Polynomial":
        o = _coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Polynomial(
            (self.coefficient(i) + o.coefficient(i)) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntoPoly) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: IntoPoly) -> "Polynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other: IntoPoly) -> "Polynomial":
        o = _coerce(other)
        if self.is_zero or o.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.one()
        for _ in range(k):
            out = out * self
        return out

    def shifted(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def divide_by_x_power(self, k: int) -> "Polynomial":
        """Exact division by x**k; the k low coefficients must vanish."""
        if k == 0:
            return self
        if any(self.coefficient(i) != 0 for i in range(k)):
            raise ValueError(f"polynomial not divisible by x^{k}")
        return Polynomial(self.coeffs[k:])

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- equality / display -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == Polynomial((other,)).coeffs
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            if d == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}x" + (f"^{d}" if d > 1 else "")
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    # -- serialization -------------------------------------------------

    def to_coeff_strings(self) -> list[str]:
        """Decimal coefficient strings, constant term first."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_coeff_strings(strings: Sequence[str]) -> "Polynomial":
        return Polynomial(int(s) for s in strings)


def _coerce(value: IntoPoly) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial((value,))
    raise TypeError(f"cannot treat {value!r} as a polynomial")
