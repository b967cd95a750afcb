"""Permutations of {1, ..., n} as immutable image tuples.

Composition is left to right: (p * q) sends i to q(p(i)), matching the
right-action convention i^p used everywhere in this package.  Internally a
permutation stores 0-based images; points are 1-based at every public
boundary.
"""

from __future__ import annotations

from math import lcm

from .errors import DegreeMismatch, MalformedPermutation

Tup = tuple[int, ...]


def _mul(p: Tup, q: Tup) -> Tup:
    """Compose raw image tuples left to right."""
    return tuple(map(q.__getitem__, p))


def _inv(p: Tup) -> Tup:
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[j] = i
    return tuple(r)


def _conj(p: Tup, g: Tup) -> Tup:
    """Conjugate p^g = g^-1 p g without forming intermediate products."""
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[g[i]] = g[j]
    return tuple(r)


def _comm(a: Tup, b: Tup) -> Tup:
    """Commutator [a, b] = a^-1 b^-1 a b."""
    return _mul(_inv(_mul(b, a)), _mul(a, b))


def _identity(n: int) -> Tup:
    return tuple(range(n))


def _order(p: Tup) -> int:
    """Order of a raw tuple, the lcm of its cycle lengths."""
    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length > 1:
            out = lcm(out, length)
    return out


class Permutation:
    """An element of Sym(1..degree), stored as a tuple of images."""

    __slots__ = ("degree", "_img")

    def __init__(self, images):
        """Build from a 1-based image sequence; entry i is the image of point i+1."""
        img = tuple(int(v) - 1 for v in images)
        n = len(img)
        if n == 0:
            raise MalformedPermutation("empty image sequence")
        if sorted(img) != list(range(n)):
            raise MalformedPermutation(
                f"images {list(images)!r} are not a bijection on 1..{n}"
            )
        self.degree = n
        self._img = img

    @classmethod
    def _from_tuple(cls, img: Tup) -> "Permutation":
        p = object.__new__(cls)
        p.degree = len(img)
        p._img = img
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise MalformedPermutation("degree must be at least 1")
        return cls._from_tuple(_identity(degree))

    @property
    def images(self) -> tuple[int, ...]:
        """The 1-based image sequence."""
        return tuple(v + 1 for v in self._img)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        if not 1 <= point <= self.degree:
            raise DegreeMismatch(f"point {point} outside 1..{self.degree}")
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise DegreeMismatch(
                f"degrees differ: {self.degree} vs {other.degree}"
            )
        return Permutation._from_tuple(_mul(self._img, other._img))

    def inverse(self) -> "Permutation":
        return Permutation._from_tuple(_inv(self._img))

    def __pow__(self, k: int) -> "Permutation":
        n = self.degree
        if k == 0:
            return Permutation.identity(n)
        base = self._img if k > 0 else _inv(self._img)
        k = abs(k)
        out = _identity(n)
        while k:
            if k & 1:
                out = _mul(out, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._from_tuple(out)

    def order(self) -> int:
        return _order(self._img)

    def is_identity(self) -> bool:
        return self._img == _identity(self.degree)

    def conjugate_by(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g."""
        if self.degree != g.degree:
            raise DegreeMismatch("conjugation across different degrees")
        return Permutation._from_tuple(_conj(self._img, g._img))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Permutation)
            and self.degree == other.degree
            and self._img == other._img
        )

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        """Canonical order: compare image sequences lexicographically."""
        if self.degree != other.degree:
            return self.degree < other.degree
        return self._img < other._img

    def __repr__(self) -> str:
        from .cycles import format_cycles

        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: compose(p, q) maps i to q(p(i))."""
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def power(p: Permutation, k: int) -> Permutation:
    """p^k for any integer k, negative meaning powers of the inverse."""
    return p**k


def element_order(p: Permutation) -> int:
    """Multiplicative order, computed as the lcm of cycle lengths."""
    return p.order()
