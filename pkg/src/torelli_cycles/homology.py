"""First homology of a closed genus-g surface with its intersection form.

Coordinates are taken in the ordered symplectic basis
``(a1, b1, a2, b2, ..., ag, bg)`` with ``<a_i, b_i> = +1``.  A Dehn twist
along a curve of class ``c`` acts on homology by the transvection

    v  |->  v + <c, v> c

so that the twist along ``a1`` sends ``b1`` to ``b1 + a1``.  Twist words are
composed with the leftmost letter acting first (see :mod:`.twists`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

from .errors import GenusMismatchError


def _normalize(value) -> Rational:
    if isinstance(value, bool):
        raise TypeError("homology coordinates must be numbers")
    if isinstance(value, int):
        return value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


@dataclass(frozen=True)
class HomologyClass:
    """A vector in H1(S; Q) for the closed surface of the given genus.

    Integral vectors are classes in H1(S; Z); rational coordinates appear
    only as homology classes of rationally weighted multicurves.
    """

    genus: int
    coords: tuple

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError(f"genus must be positive, got {self.genus}")
        coords = tuple(_normalize(c) for c in self.coords)
        if len(coords) != 2 * self.genus:
            raise ValueError(
                f"label length must be 2g = {2 * self.genus}, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, genus: int) -> HomologyClass:
        return cls(genus, (0,) * (2 * genus))

    @classmethod
    def from_coords(cls, coords: Sequence) -> HomologyClass:
        """Infer the genus from the vector length, which must be even."""
        if len(coords) % 2 or not coords:
            raise ValueError(f"label length must be 2g, got {len(coords)} coordinates")
        return cls(len(coords) // 2, tuple(coords))

    @classmethod
    def a(cls, genus: int, i: int) -> HomologyClass:
        """The basis class a_i (1-based)."""
        return cls._basis(genus, 2 * (i - 1))

    @classmethod
    def b(cls, genus: int, i: int) -> HomologyClass:
        """The basis class b_i (1-based)."""
        return cls._basis(genus, 2 * (i - 1) + 1)

    @classmethod
    def _basis(cls, genus: int, index: int) -> HomologyClass:
        if not 0 <= index < 2 * genus:
            raise IndexError(f"no basis vector {index} in genus {genus}")
        coords = [0] * (2 * genus)
        coords[index] = 1
        return cls(genus, tuple(coords))

    def _check(self, other: HomologyClass) -> None:
        if not isinstance(other, HomologyClass):
            raise TypeError(f"expected HomologyClass, got {type(other).__name__}")
        if other.genus != self.genus:
            raise GenusMismatchError(f"genus {self.genus} vs genus {other.genus}")

    def __add__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(self.genus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> HomologyClass:
        return HomologyClass(self.genus, tuple(-x for x in self.coords))

    def __mul__(self, k) -> HomologyClass:
        return HomologyClass(self.genus, tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coords)

    def is_primitive(self) -> bool:
        """Integral with coordinate gcd equal to 1."""
        if not self.is_integral():
            return False
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g == 1

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def intersection_form(u: HomologyClass, v: HomologyClass):
    """Algebraic intersection number ``<u, v>``; ``<a_i, b_i> = 1``."""
    u._check(v)
    total = 0
    for i in range(0, len(u.coords), 2):
        total += u.coords[i] * v.coords[i + 1] - u.coords[i + 1] * v.coords[i]
    return total


@dataclass(frozen=True)
class SymplecticMatrix:
    """An integer matrix acting on column coordinate vectors."""

    genus: int
    entries: tuple

    def __post_init__(self):
        n = 2 * self.genus
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"expected a {n}x{n} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, genus: int) -> SymplecticMatrix:
        n = 2 * genus
        return cls(genus, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: SymplecticMatrix) -> SymplecticMatrix:
        if other.genus != self.genus:
            raise GenusMismatchError(f"genus {self.genus} vs genus {other.genus}")
        cols = list(zip(*other.entries))
        return SymplecticMatrix(
            self.genus,
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                  for row in self.entries))

    def apply(self, v: HomologyClass) -> HomologyClass:
        if v.genus != self.genus:
            raise GenusMismatchError(f"genus {self.genus} vs genus {v.genus}")
        return HomologyClass(
            self.genus, tuple(sum(a * x for a, x in zip(row, v.coords)) for row in self.entries))

    def transpose(self) -> SymplecticMatrix:
        return SymplecticMatrix(self.genus, tuple(zip(*self.entries)))

    def is_identity(self) -> bool:
        return self == SymplecticMatrix.identity(self.genus)

    def is_symplectic(self) -> bool:
        """Check ``M^T J M == J`` by direct multiplication."""
        j = standard_form(self.genus)
        return self.transpose() @ j @ self == j

    def inverse(self) -> SymplecticMatrix:
        """``M^-1 = -J M^T J`` for symplectic M."""
        if not self.is_symplectic():
            raise ValueError("matrix is not symplectic")
        j = standard_form(self.genus)
        m = j @ self.transpose() @ j
        return SymplecticMatrix(self.genus, tuple(tuple(-x for x in row) for row in m.entries))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:3d}" for x in row) for row in self.entries)


def standard_form(genus: int) -> SymplecticMatrix:
    """The Gram matrix J of the intersection form, block diagonal in (a_i, b_i)."""
    n = 2 * genus
    rows = [[0] * n for _ in range(n)]
    for i in range(0, n, 2):
        rows[i][i + 1] = 1
        rows[i + 1][i] = -1
    return SymplecticMatrix(genus, tuple(map(tuple, rows)))


def transvection(c: HomologyClass, power: int = 1) -> SymplecticMatrix:
    """Matrix of ``v -> v + power * <c, v> c``, the action of ``T_c^power``.

    The nilpotent part squares to zero because ``<c, c> = 0``, so powers
    of the transvection are obtained by scaling it.
    """
    if not c.is_integral():
        raise ValueError("twist curves carry integral classes")
    n = 2 * c.genus
    # column j is the image of the j-th basis vector e_j
    pairing = [intersection_form(c, HomologyClass._basis(c.genus, j)) for j in range(n)]
    rows = tuple(
        tuple(int(i == j) + power * pairing[j] * c.coords[i] for j in range(n))
        for i in range(n))
    return SymplecticMatrix(c.genus, rows)


def span_matrix(classes: Iterable[HomologyClass]) -> list[list]:
    """Coordinates of the given classes as the columns of a matrix."""
    classes = list(classes)
    return [list(col) for col in zip(*(c.coords for c in classes))]
