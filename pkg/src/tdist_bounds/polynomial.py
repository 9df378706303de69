"""Bivariate polynomials in (a, x) with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Mapping

__all__ = ["BivariatePolynomial"]


def _as_fraction(c) -> Fraction:
    if isinstance(c, float):
        raise TypeError("coefficients must be exact (int or Fraction), not float")
    return Fraction(c)


@dataclass(frozen=True)
class BivariatePolynomial:
    """sum c[i, j] a^i x^j, coefficients stored as ``Fraction``.

    Zero coefficients are dropped on construction, so equality is structural.
    """

    coeffs: Mapping[tuple[int, int], Fraction]
    _float_rows: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            c = _as_fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))
        object.__setattr__(self, "_float_rows", self._rows(float))

    @classmethod
    def constant(cls, c) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def in_x(cls, coeffs) -> "BivariatePolynomial":
        """Univariate polynomial in x from ascending coefficients."""
        return cls({(0, j): c for j, c in enumerate(coeffs)})

    @classmethod
    def in_a(cls, coeffs) -> "BivariatePolynomial":
        return cls({(i, 0): c for i, c in enumerate(coeffs)})

    @property
    def degrees(self) -> tuple[int, int]:
        if not self.coeffs:
            return (0, 0)
        return (max(i for i, _ in self.coeffs), max(j for _, j in self.coeffs))

    def rows(self) -> list[list[Fraction]]:
        """Exact coefficient table: ``rows()[j][i]`` multiplies a^i x^j."""
        return self._rows(Fraction)

    def _rows(self, conv) -> tuple:
        deg_a, deg_x = self.degrees
        table = [[conv(0)] * (deg_a + 1) for _ in range(deg_x + 1)]
        for (i, j), c in self.coeffs.items():
            table[j][i] = conv(c)
        return tuple(tuple(r) for r in table)

    def __call__(self, a, x):
        """Horner evaluation: in a for each power of x, then in x.

        Exact when ``a`` and ``x`` are ints or Fractions.
        """
        exact = isinstance(a, Rational) and isinstance(x, Rational)
        rows = self.rows() if exact else self._float_rows
        acc = 0
        for row in reversed(rows):
            c = 0
            for coef in reversed(row):
                c = c * a + coef
            acc = acc * x + c
        return acc

    def exact(self, a, x) -> Fraction:
        return self(Fraction(a), Fraction(x))

    def _coerce(self, other) -> "BivariatePolynomial":
        if isinstance(other, BivariatePolynomial):
            return other
        return BivariatePolynomial.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (i, j), c in self.coeffs.items():
            mono = "*".join(
                s for s in (f"a^{i}" if i > 1 else "a" if i else "", f"x^{j}" if j > 1 else "x" if j else "") if s
            )
            terms.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(terms)
