"""Formal Dehn-twist words and their action on homology.

Only homology data is carried: a letter knows the class of its curve and
whether the curve separates.  A word acts by the product of transvections,
leftmost letter first, so ``word_action(T_x T_y)`` is the matrix
``M_y @ M_x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import DomainError, GenusMismatchError, PreconditionError
from .homology import HomologyClass, SymplecticMatrix, transvection


class Tag(str, Enum):
    SEPARATING = "separating"
    NONSEPARATING = "nonseparating"


@dataclass(frozen=True)
class Letter:
    curve: HomologyClass
    exponent: int
    tag: Optional[Tag] = None

    def __post_init__(self):
        if self.exponent == 0 or not isinstance(self.exponent, int):
            raise ValueError("twist exponents are nonzero integers")
        if not self.curve.is_integral():
            raise ValueError("twist curves carry integral classes")
        tag = Tag.SEPARATING if self.curve.is_zero() else Tag.NONSEPARATING
        if self.tag is not None and Tag(self.tag) != tag:
            raise ValueError(
                f"{self.tag} twist cannot carry class {self.curve}: "
                "separating curves are exactly the null-homologous ones")
        object.__setattr__(self, "tag", tag)

    def inverse(self) -> Letter:
        return Letter(self.curve, -self.exponent, self.tag)

    def __str__(self) -> str:
        return f"T{self.curve}^{self.exponent}"


@dataclass(frozen=True)
class TwistWord:
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        genera = {letter.curve.genus for letter in letters}
        if len(genera) > 1:
            raise GenusMismatchError(f"letters of several genera {sorted(genera)}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *pairs) -> TwistWord:
        """``TwistWord.of((c, 1), (d, -1))`` is the bounding pair word T_c T_d^-1."""
        return cls(tuple(Letter(c, e) for c, e in pairs))

    @property
    def genus(self) -> Optional[int]:
        return self.letters[0].curve.genus if self.letters else None

    def __mul__(self, other: TwistWord) -> TwistWord:
        return TwistWord(self.letters + other.letters)

    def inverse(self) -> TwistWord:
        return TwistWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def word_action(w: TwistWord, genus: Optional[int] = None) -> SymplecticMatrix:
    """Symplectic matrix of ``w``; the leftmost letter acts first.

    ``genus`` is only needed for the empty word.
    """
    g = w.genus if w.letters else genus
    if g is None:
        raise ValueError("the genus of an empty word must be given")
    if genus is not None and genus != g:
        raise GenusMismatchError(f"word of genus {g}, requested genus {genus}")
    m = SymplecticMatrix.identity(g)
    for letter in w.letters:
        m = transvection(letter.curve, letter.exponent) @ m
    return m


def is_torelli(w: TwistWord, genus: Optional[int] = None) -> bool:
    """Whether ``w`` acts trivially on H1, i.e. lies in the Torelli group."""
    return word_action(w, genus).is_identity()


def bounding_pair_word(c: HomologyClass, d: HomologyClass) -> TwistWord:
    """The word T_c T_d^-1, checked to be a bounding pair at homology level."""
    if c != d:
        raise PreconditionError(f"not a bounding pair at homology level: {c} != {d}")
    if c.is_zero():
        raise PreconditionError("separating classes, not a bounding pair")
    return TwistWord.of((c, 1), (d, -1))


def bounding_pair_action(c: HomologyClass, d: HomologyClass) -> SymplecticMatrix:
    return word_action(bounding_pair_word(c, d))


class LanternError(DomainError):
    pass


def lantern_words(a, b, c, d, x, y, z) -> tuple[TwistWord, TwistWord]:
    """Both sides ``T_x T_y T_z`` and ``T_a T_b T_c T_d`` of the lantern relation.

    The classes must satisfy ``a+b+c+d = 0, x = a+b, y = b+c, z = a+c``.
    """
    classes = (a, b, c, d, x, y, z)
    genera = {k.genus for k in classes}
    if len(genera) != 1:
        raise GenusMismatchError(f"lantern classes of several genera {sorted(genera)}")
    if genera.pop() < 3:
        raise PreconditionError("the lantern configuration needs genus at least 3")
    broken = []
    if not (a + b + c + d).is_zero():
        broken.append("a+b+c+d = 0")
    if x != a + b:
        broken.append("x = a+b")
    if y != b + c:
        broken.append("y = b+c")
    if z != a + c:
        broken.append("z = a+c")
    if broken:
        raise LanternError("not a lantern configuration: violates " + ", ".join(broken))
    return (TwistWord.of((x, 1), (y, 1), (z, 1)),
            TwistWord.of((a, 1), (b, 1), (c, 1), (d, 1)))


def lantern_matrix_check(a, b, c, d, x, y, z) -> bool:
    """Whether the two sides of the lantern relation agree on homology."""
    lhs, rhs = lantern_words(a, b, c, d, x, y, z)
    return word_action(lhs) == word_action(rhs)


def standard_lantern(genus: int = 3) -> dict:
    """Class assignment with the separating boundary curve ``c`` null-homologous."""
    a1, a2 = HomologyClass.a(genus, 1), HomologyClass.a(genus, 2)
    zero = HomologyClass.zero(genus)
    return dict(a=a1, b=a2, c=zero, d=-(a1 + a2), x=a1 + a2, y=a2, z=a1)


def word_reduce(w: TwistWord) -> TwistWord:
    """Free reduction: merge adjacent letters on equal classes, drop zero exponents.

    No commutation is attempted, so letters separated by another curve's
    twist are left alone.
    """
    stack: list[Letter] = []
    for letter in w.letters:
        if stack and stack[-1].curve == letter.curve:
            e = stack.pop().exponent + letter.exponent
            if e:
                stack.append(Letter(letter.curve, e))
        else:
            stack.append(letter)
    return TwistWord(tuple(stack))


_LETTER = re.compile(r"T\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\^([+-]?\d+)$")


def parse_word(text: str) -> TwistWord:
    """Parse whitespace-separated letters like ``T[1,0,0,0]^-2``."""
    letters = []
    for token in text.split():
        m = _LETTER.match(token)
        if not m:
            raise ValueError(f"malformed twist letter {token!r}")
        coords = [int(v) for v in m.group(1).split(",")]
        if len(coords) % 2:
            raise ValueError(f"label length must be 2g, got {len(coords)} in {token!r}")
        letters.append(Letter(HomologyClass.from_coords(coords), int(m.group(2))))
    return TwistWord(tuple(letters))


def format_word(w: TwistWord) -> str:
    return str(w)


@dataclass(frozen=True)
class RelativeClass:
    """An element of H1(S', P) for the capped surface S' and marked pair P.

    ``absolute`` is the image of H1(S'), ``arc_coefficient`` the multiple of
    the arc class joining the two marked points.
    """

    absolute: HomologyClass
    arc_coefficient: int = 0

    @property
    def genus(self) -> int:
        return self.absolute.genus

    def generates_reduced_h0(self) -> bool:
        return abs(self.arc_coefficient) == 1


def point_push(gamma: HomologyClass, w: RelativeClass) -> RelativeClass:
    """Action of dragging one marked point around a loop of class ``gamma``."""
    if gamma.genus != w.genus:
        raise GenusMismatchError(f"loop of genus {gamma.genus}, class of genus {w.genus}")
    m = w.arc_coefficient
    return RelativeClass(w.absolute + m * gamma, m)


def point_push_matrix(gamma: HomologyClass) -> tuple:
    """Matrix of ``point_push(gamma, .)`` on coordinates (absolute..., arc)."""
    n = 2 * gamma.genus
    rows = []
    for i in range(n + 1):
        row = [int(i == j) for j in range(n + 1)]
        if i < n:
            row[n] = gamma.coords[i]
        rows.append(tuple(row))
    return tuple(rows)

