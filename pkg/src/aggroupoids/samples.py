"""Small named fixtures used across tests, demos and documentation."""

from __future__ import annotations

from .magma import Groupoid
from .structure import StrongSemilattice

__all__ = [
    "inverse_monoid4",
    "subtraction_mod",
    "cyclic_group",
    "chain_semilattice",
    "vee_semilattice",
    "collapsing_strong_semilattice",
]


def inverse_monoid4() -> Groupoid:
    """Four elements, two idempotents, every element self-inverse.

    A commutative inverse monoid (f is the identity) that is not an
    AG-group; its congruence lattice has five members and exercises
    every operator in the library.
    """
    return Groupoid(
        ("a", "b", "e", "f"),
        ((2, 2, 0, 0), (2, 3, 0, 1), (0, 0, 2, 2), (0, 1, 2, 3)),
    )


def subtraction_mod(n: int) -> Groupoid:
    """Subtraction a*b = b - a mod n: an AG-group, nonassociative for n > 2."""
    return Groupoid.from_function(
        tuple(str(i) for i in range(n)), lambda a, b: (b - a) % n
    )


def cyclic_group(n: int) -> Groupoid:
    return Groupoid.from_function(
        tuple(f"g{i}" for i in range(n)), lambda a, b: (a + b) % n
    )


def chain_semilattice(k: int) -> Groupoid:
    """The chain 0 < 1 < ... < k-1 under minimum."""
    return Groupoid.from_function(tuple(str(i) for i in range(k)), min)


def vee_semilattice() -> Groupoid:
    """Three elements: a bottom below two incomparable tops."""
    return Groupoid(("0", "1", "2"), ((0, 0, 0), (0, 1, 0), (0, 0, 2)))


def collapsing_strong_semilattice() -> StrongSemilattice:
    """Two copies of the two-element group over a chain of two indices,
    glued by the constant-identity map. The composed groupoid is the
    stock non-E-unitary example: the map is not injective."""
    two = Groupoid(("T", "B"), ((0, 1), (1, 1)))
    top = Groupoid(("t0", "t1"), ((0, 1), (1, 0)))
    bottom = Groupoid(("b0", "b1"), ((0, 1), (1, 0)))
    maps = (
        (0, 0, (0, 1)),
        (0, 1, (0, 0)),  # collapse both top elements onto the identity
        (1, 1, (0, 1)),
    )
    return StrongSemilattice(two, (top, bottom), maps)
