"""Exact bivariate integer polynomials sized by rank and nullity."""

from __future__ import annotations

import operator
from collections.abc import Mapping
from dataclasses import dataclass

from mpm_tutte.errors import DimensionError, DomainError
from mpm_tutte.models import PolyStep


@dataclass(frozen=True, slots=True, eq=False)
class BivariatePolynomial:
    """Σ c[i][j] x^i y^j stored as a dense (r + 1) x (m + 1) coefficient matrix.

    Python ints throughout, so coefficients never overflow. Equality ignores the
    matrix shape and compares nonzero terms only.
    """

    coefficients: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.coefficients or not self.coefficients[0]:
            raise DomainError("A coefficient matrix needs at least one row and one column.")
        width = len(self.coefficients[0])
        if any(len(row) != width for row in self.coefficients):
            raise DomainError("Coefficient matrix rows must have equal length.")

    # ─── Constructors ─────────────────────────────────────────

    @classmethod
    def zero(cls, r: int = 0, m: int = 0) -> BivariatePolynomial:
        return cls(((0,) * (m + 1),) * (r + 1))

    @classmethod
    def one(cls) -> BivariatePolynomial:
        return cls(((1,),))

    @classmethod
    def monomial(cls, i: int, j: int, coefficient: int = 1) -> BivariatePolynomial:
        return cls.from_terms({(i, j): coefficient})

    @classmethod
    def from_terms(
        cls, terms: Mapping[tuple[int, int], int], r: int | None = None, m: int | None = None
    ) -> BivariatePolynomial:
        rows = max([i for i, _ in terms] + [0]) if r is None else r
        cols = max([j for _, j in terms] + [0]) if m is None else m
        matrix = [[0] * (cols + 1) for _ in range(rows + 1)]
        for (i, j), value in terms.items():
            if value == 0:
                continue
            if i < 0 or j < 0 or i > rows or j > cols:
                raise DimensionError(f"Term x^{i} y^{j} does not fit shape ({rows}, {cols}).")
            matrix[i][j] += value
        return cls(tuple(tuple(row) for row in matrix))

    # ─── Shape ────────────────────────────────────────────────

    @property
    def rank_bound(self) -> int:
        return len(self.coefficients) - 1

    @property
    def nullity_bound(self) -> int:
        return len(self.coefficients[0]) - 1

    def resized(self, r: int, m: int) -> BivariatePolynomial:
        """Same polynomial in an (r + 1) x (m + 1) matrix.

        Raises:
            DimensionError: If a nonzero coefficient would be cut off.
        """
        for i, row in enumerate(self.coefficients):
            for j, value in enumerate(row):
                if value and (i > r or j > m):
                    raise DimensionError(f"Coefficient of x^{i} y^{j} exceeds bounds ({r}, {m}).")
        width = m + 1
        rows = [
            (row[:width] + (0,) * (width - len(row))) for row in self.coefficients[: r + 1]
        ]
        rows.extend((0,) * width for _ in range(r + 1 - len(rows)))
        return BivariatePolynomial(tuple(rows))

    # ─── Arithmetic ───────────────────────────────────────────

    def times_x(self) -> BivariatePolynomial:
        width = len(self.coefficients[0])
        return BivariatePolynomial(((0,) * width, *self.coefficients))

    def times_y(self) -> BivariatePolynomial:
        return BivariatePolynomial(tuple((0, *row) for row in self.coefficients))

    def shifted(self, di: int, dj: int) -> BivariatePolynomial:
        """Multiply by x^di y^dj."""
        width = len(self.coefficients[0]) + dj
        pad = (0,) * dj
        return BivariatePolynomial(
            ((0,) * width,) * di + tuple(pad + row for row in self.coefficients)
        )

    def swapped(self) -> BivariatePolynomial:
        """Exchange the roles of x and y."""
        return BivariatePolynomial(tuple(zip(*self.coefficients, strict=True)))

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        rows = max(len(self.coefficients), len(other.coefficients))
        width = max(len(self.coefficients[0]), len(other.coefficients[0]))
        a = _padded(self.coefficients, rows, width)
        b = _padded(other.coefficients, rows, width)
        return BivariatePolynomial(
            tuple(tuple(map(operator.add, ra, rb)) for ra, rb in zip(a, b, strict=True))
        )

    # ─── Inspection ───────────────────────────────────────────

    def coefficient(self, i: int, j: int) -> int:
        if 0 <= i < len(self.coefficients) and 0 <= j < len(self.coefficients[0]):
            return self.coefficients[i][j]
        return 0

    def terms(self) -> dict[tuple[int, int], int]:
        """Nonzero coefficients keyed by (i, j), in (i, j) order."""
        return {
            (i, j): value
            for i, row in enumerate(self.coefficients)
            for j, value in enumerate(row)
            if value
        }

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.coefficients)

    def evaluate(self, x: int, y: int) -> int:
        total = 0
        for row in reversed(self.coefficients):
            inner = 0
            for value in reversed(row):
                inner = inner * y + value
            total = total * x + inner
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash(frozenset(self.terms().items()))

    def __str__(self) -> str:
        parts = []
        for (i, j), value in sorted(self.terms().items(), reverse=True):
            monomial = "*".join(
                power for power in (_power("x", i), _power("y", j)) if power
            )
            if not monomial:
                parts.append(str(value))
            elif value == 1:
                parts.append(monomial)
            else:
                parts.append(f"{value}*{monomial}")
        return " + ".join(parts) if parts else "0"


def poly_step(
    p: BivariatePolynomial,
    step: PolyStep,
    *,
    shape: tuple[int, int],
    other: BivariatePolynomial | None = None,
) -> BivariatePolynomial:
    """One recurrence step (times x, times y, or add) landing in an (r, m) shape.

    Raises:
        DimensionError: If the result has a term beyond ``shape``.
        DomainError: If ``add`` is requested without ``other``.
    """
    r, m = shape
    if step is PolyStep.TIMES_X:
        result = p.times_x()
    elif step is PolyStep.TIMES_Y:
        result = p.times_y()
    else:
        if other is None:
            raise DomainError("poly_step add needs a second polynomial.")
        result = p + other
    return result.resized(r, m)


def _padded(
    rows: tuple[tuple[int, ...], ...], height: int, width: int
) -> tuple[tuple[int, ...], ...]:
    if len(rows) == height and len(rows[0]) == width:
        return rows
    grown = tuple(row + (0,) * (width - len(row)) for row in rows)
    return grown + ((0,) * width,) * (height - len(rows))


def _power(name: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    return name if exponent == 1 else f"{name}^{exponent}"
