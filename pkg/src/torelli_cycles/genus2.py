"""The explicit genus-2 model.

Curves on the 4-punctured sphere complementary to ``a`` and ``b`` are
classified by slopes ``p/q``.  The level-2 congruence group acts on slopes
with three orbits, read off from ``(p, q) mod 2``; slopes in the class of
``1/0`` are the separating curves.  Weighted vertices ``pa + qb`` of the
tree of reduced multicurves are modelled by unordered coprime pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Optional

from .errors import DomainError, PreconditionError
from .homology import HomologyClass
from .twists import TwistWord, word_action
from . import linalg


@dataclass(frozen=True, order=True)
class Slope:
    """A reduced fraction ``p/q`` with ``q > 0``, or ``1/0`` for infinity."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        g = gcd(p, q)
        if g == 0:
            raise ValueError("0/0 is not a slope")
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def parse(cls, text: str) -> Slope:
        num, _, den = text.strip().partition("/")
        return cls(int(num), int(den) if den else 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


class Orbit(str, Enum):
    O01 = "O01"
    O10 = "O10"
    O11 = "O11"


def slope_orbit(s: Slope) -> Orbit:
    """Level-2 orbit of a slope; ``O10`` holds the separating curves."""
    return {(0, 1): Orbit.O01, (1, 0): Orbit.O10, (1, 1): Orbit.O11}[(s.p % 2, s.q % 2)]


@dataclass(frozen=True)
class Mat2:
    """A determinant-one integer matrix ``((a, b), (c, d))`` up to global sign."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("determinant must be 1")
        first = next(x for x in (self.a, self.b, self.c, self.d) if x)
        if first < 0:
            for name in "abcd":
                object.__setattr__(self, name, -getattr(self, name))

    @classmethod
    def identity(cls) -> Mat2:
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def inverse(self) -> Mat2:
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> Mat2:
        base = self if k >= 0 else self.inverse()
        out = Mat2.identity()
        for _ in range(abs(k)):
            out = out @ base
        return out

    def rows(self) -> tuple:
        return ((self.a, self.b), (self.c, self.d))


def mat2_apply(m: Mat2, s: Slope) -> Slope:
    return Slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q)


def level2_member(m: Mat2) -> bool:
    return (m.a % 2, m.b % 2, m.c % 2, m.d % 2) == (1, 0, 0, 1)


def twist_on_slopes(s: Slope, power: int = 1) -> Mat2:
    """Action of the twist along the curve of slope ``s``.

    This is the doubled parabolic ``v -> v + 2 det(s|v) s``, fixing ``s``
    and sending ``0/1`` to ``2/1`` when ``s = 1/0``.
    """
    p, q = s.p, s.q
    k = 2 * power
    # det(s|v) = p*v2 - q*v1
    return Mat2(1 - k * p * q, k * p * p, -k * q * q, 1 + k * p * q)


@dataclass(frozen=True)
class WeightPair:
    """Unordered coprime pair ``{p, q}``, stored larger entry first."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 0 or q < 0:
            raise ValueError("weights are nonnegative")
        if gcd(p, q) != 1:
            raise PreconditionError(f"{{{p},{q}}} is not coprime: the class is not primitive")
        if p < q:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def W(self) -> int:
        return self.p + self.q

    def is_root(self) -> bool:
        return self.q == 0

    def parent(self) -> Optional[WeightPair]:
        """One Euclidean subtraction step, or None at the root."""
        if self.is_root():
            return None
        return WeightPair(self.p - self.q, self.q)

    def children(self) -> list[WeightPair]:
        if self.is_root():
            return [WeightPair(1, 1)]
        found = []
        for c in (WeightPair(self.p + self.q, self.q), WeightPair(self.p + self.q, self.p)):
            if c not in found:
                found.append(c)
        return found

    def __str__(self) -> str:
        return f"{{{self.p},{self.q}}}"


def euclidean_descent(w: WeightPair) -> list[WeightPair]:
    """Path from ``w`` down to the root ``{1, 0}``, excluding ``w`` itself."""
    path = []
    while not w.is_root():
        w = w.parent()
        path.append(w)
    return path


@dataclass
class QuotientTree:
    """Coprime pairs with ``W <= max_w``, each linked to its Euclidean parent."""

    max_w: int
    nodes: list
    parent: dict
    children: dict

    @property
    def root(self) -> WeightPair:
        return WeightPair(1, 0)


def quotient_tree(max_w: int) -> QuotientTree:
    if max_w < 1:
        raise ValueError("max_w must be at least 1")
    root = WeightPair(1, 0)
    nodes, parent, children = [root], {root: None}, {}
    frontier = [root]
    while frontier:
        nxt = []
        for node in frontier:
            kids = [c for c in node.children() if c.W <= max_w]
            children[node] = kids
            for c in kids:
                if c in parent:
                    raise AssertionError(f"{c} reached twice")
                parent[c] = node
                nodes.append(c)
                nxt.append(c)
        frontier = nxt
    return QuotientTree(max_w, nodes, parent, children)


class OrbitError(DomainError):
    pass


_A = Mat2(1, 2, 0, 1)   # twist along 1/0
_B = Mat2(1, 0, 2, 1)   # twist along 0/1


def _standard_word(s: Slope) -> list:
    """Separating twists, leftmost acting first, carrying 0/1 to ``s``.

    Run an even Euclidean algorithm bringing ``s`` to ``0/1`` with powers
    of the twists along ``1/0`` and ``0/1``; invert it, drop the trailing
    ``0/1`` twists (they fix ``0/1``) and conjugate the remaining ``1/0``
    twists past the ``0/1`` twists to their left, which turns each into a
    twist along the separating slope ``1/(2M)``.
    """
    p, q = s.p, s.q
    steps = []  # reduction matrices in order of application
    while p != 0:
        if abs(p) > abs(q):
            k = -round(Fraction(p, 2 * q))
            steps.append(("A", k))
            p += 2 * k * q
        else:
            k = -round(Fraction(q, 2 * p))
            steps.append(("B", k))
            q += 2 * k * p
    # s = g_1^-1 g_2^-1 ... g_n^-1 (0/1) as a matrix product, rightmost acting first
    factors = [(name, -k) for name, k in steps]
    letters = []
    shift = 0
    for name, k in factors:
        if name == "B":
            shift += k
        elif k:
            letters.append((Slope(1, 2 * shift), k))
    # matrix product L_1 L_2 ... L_r acts rightmost first
    return list(reversed(letters))


def _reduce_slope_word(word: list) -> list:
    out = []
    for s, k in word:
        if out and out[-1][0] == s:
            k += out.pop()[1]
        if k:
            out.append((s, k))
    return out


def word_matrix(word: list) -> Mat2:
    """Composite of a slope-twist word, leftmost letter acting first."""
    m = Mat2.identity()
    for s, k in word:
        m = twist_on_slopes(s, k) @ m
    return m


def farey_tree_path(s1: Slope, s2: Slope) -> list:
    """Separating twists ``[(slope, exponent), ...]`` carrying ``s1`` to ``s2``."""
    for s in (s1, s2):
        if slope_orbit(s) != Orbit.O01:
            raise OrbitError(f"slope {s} is in orbit {slope_orbit(s).value}, not O01")
    w1 = _standard_word(s1)
    w2 = _standard_word(s2)
    back = [(s, -k) for s, k in reversed(w1)]
    return _reduce_slope_word(back + w2)


STABILIZER_CLASSES = (
    HomologyClass.a(2, 1), HomologyClass.a(2, 2), HomologyClass.a(2, 1) + HomologyClass.a(2, 2))


def stabilizer_matrix(i: int, j: int, k: int):
    a, b, c = STABILIZER_CLASSES
    pairs = [(cls, e) for cls, e in ((a, i), (b, j), (c, k)) if e]
    return word_action(TwistWord.of(*pairs), genus=2)


def stabilizer_homology_check(i: int, j: int, k: int) -> bool:
    """Whether ``T_a^i T_b^j T_c^k`` acts trivially on genus-2 homology."""
    return stabilizer_matrix(i, j, k).is_identity()


def stabilizer_rank_certificate() -> int:
    """Rank of the twist logarithms ``M(1,0,0) - I``, ``M(0,1,0) - I``, ``M(0,0,1) - I``.

    The three curves are pairwise disjoint, so the product of powers is
    ``I + i N_a + j N_b + k N_c``.  Rank 3 means it is the identity only
    for ``i = j = k = 0``.
    """
    ident = stabilizer_matrix(0, 0, 0).entries
    columns = []
    for exps in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        m = stabilizer_matrix(*exps).entries
        columns.append([m[r][c] - ident[r][c] for r in range(4) for c in range(4)])
    return linalg.rank([list(row) for row in zip(*columns)])


def continued_fraction(p: int, q: int) -> list[int]:
    quotients = []
    while q:
        quotients.append(p // q)
        p, q = q, p % q
    return quotients


def random_level2_word(rng, max_length: int = 10) -> Mat2:
    """A random product of the level-2 generators and their inverses."""
    m = Mat2.identity()
    for _ in range(rng.randint(0, max_length)):
        m = m @ rng.choice((_A, _B, _A.inverse(), _B.inverse()))
    return m


def slopes_up_to(bound: int):
    for p, q in itertools.product(range(-bound, bound + 1), range(0, bound + 1)):
        if gcd(p, q) == 1:
            yield Slope(p, q)
