"""Exact arithmetic on permutations of {1..n}.

Everything here is 1-based: a permutation of degree n maps {1, ..., n} onto
itself and is stored as the image tuple (sigma(1), ..., sigma(n)).  All values
are immutable and all operations are pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "compose",
    "identity",
    "enumerate_permutations",
    "derangement_count",
    "MAX_ENUMERATION_DEGREE",
    "MAX_COUNT_DEGREE",
]

# Guards that keep every result exact in 64-bit integers and every
# enumeration affordable.
MAX_ENUMERATION_DEGREE = 10
MAX_COUNT_DEGREE = 20


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, held as the image tuple (sigma(1), ..., sigma(n))."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(v) for v in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(
                f"images {images} are not a rearrangement of 1..{len(images)}"
            )

    @classmethod
    def from_images(cls, images: Iterable[int]) -> Permutation:
        """Build a permutation from its image sequence; rejects non-bijections."""
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Product of pairwise disjoint cycles on {1..n}; unlisted points stay fixed.

        Raises ValueError if a cycle entry lies outside 1..n or appears twice,
        within one cycle or across cycles.
        """
        if n < 0:
            raise ValueError("degree must be non-negative")
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cycle in cycles:
            entries = [int(v) for v in cycle]
            for v in entries:
                if not 1 <= v <= n:
                    raise ValueError(f"cycle entry {v} is out of range 1..{n}")
                if v in seen:
                    raise ValueError(f"cycle entry {v} appears more than once")
                seen.add(v)
            for a, b in zip(entries, entries[1:] + entries[:1]):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def from_string(cls, text: str) -> Permutation:
        """Parse the comma-separated image form, e.g. ``"2,3,1"`` (spaces tolerated)."""
        parts = [p.strip() for p in text.split(",")]
        try:
            images = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
        return cls(images)

    def to_string(self) -> str:
        """Comma-separated image form, the inverse of :meth:`from_string`."""
        return ",".join(str(v) for v in self.images)

    @property
    def n(self) -> int:
        """Degree of the permutation."""
        return len(self.images)

    def __call__(self, i: int) -> int:
        """Image sigma(i) of a 1-based point."""
        if not 1 <= i <= self.n:
            raise ValueError(f"point {i} is out of range 1..{self.n}")
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        """The permutation with inverse composed either way giving the identity."""
        inv = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    @property
    def is_derangement(self) -> bool:
        """True iff sigma(i) != i for every point i."""
        return all(image != i for i, image in enumerate(self.images, start=1))


def compose(tau: Permutation, sigma: Permutation) -> Permutation:
    """Composition tau∘sigma mapping i to tau(sigma(i)); sigma is applied first."""
    if tau.n != sigma.n:
        raise ValueError(f"degree mismatch: {tau.n} != {sigma.n}")
    return Permutation(tuple(tau.images[s - 1] for s in sigma.images))


def identity(n: int) -> Permutation:
    """The identity permutation of degree n."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    return Permutation(tuple(range(1, n + 1)))


def enumerate_permutations(n: int) -> list[Permutation]:
    """All n! permutations of degree n, in lexicographic order of their images.

    Guarded at n <= 10 to keep the factorial enumeration affordable.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > MAX_ENUMERATION_DEGREE:
        raise ValueError(
            f"degree {n} too large to enumerate (limit {MAX_ENUMERATION_DEGREE})"
        )
    return [Permutation(images) for images in itertools.permutations(range(1, n + 1))]


def derangement_count(n: int) -> int:
    """Number of fixed-point-free permutations of degree n, exactly.

    Evaluated with the integer recurrence a(n) = n*a(n-1) + (-1)^n starting
    from a(0) = 1, so no floating-point division is involved.  Guarded at
    n <= 20, where the count still fits a 64-bit signed integer.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n > MAX_COUNT_DEGREE:
        raise ValueError(f"degree {n} too large to count (limit {MAX_COUNT_DEGREE})")
    count = 1
    for k in range(1, n + 1):
        count = k * count + (-1 if k % 2 else 1)
    return count
