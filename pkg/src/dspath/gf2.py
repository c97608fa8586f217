"""Arithmetic in GF(2^64).

Field elements are polynomials over GF(2) modulo the irreducible pentanomial
x^64 + x^4 + x^3 + x + 1, stored as 64-bit integers.  Addition is XOR, so
a + a = 0 for every element; the algorithms in this package lean on that
characteristic-2 cancellation and never need division.

Internally most code works on raw ints for speed (see ``add_raw``/``mul_raw``).
:class:`FieldElement` is a thin immutable wrapper for the public surface.
A random evaluation of a nonzero degree-d polynomial is nonzero with
probability at least 1 - d/2^64 (Schwartz-Zippel), which at the graph sizes
this tool accepts makes one-sided error negligible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from . import _gfkernels

MASK64 = (1 << 64) - 1

#: Low coefficients of the reducing polynomial: x^64 = x^4 + x^3 + x + 1.
REDUCTION_LOW = 0x1B


def add_raw(a: int, b: int) -> int:
    """Field addition (= subtraction): bitwise XOR."""
    return a ^ b


def _mul_portable(a: int, b: int) -> int:
    """Portable shift-XOR carry-less multiply with 4-bit windowing."""
    t2 = a << 1
    t4 = t2 << 1
    t8 = t4 << 1
    t3 = t2 ^ a
    t5 = t4 ^ a
    t6 = t4 ^ t2
    t7 = t6 ^ a
    tab = (0, a, t2, t3, t4, t5, t6, t7,
           t8, t8 ^ a, t8 ^ t2, t8 ^ t3, t8 ^ t4, t8 ^ t5, t8 ^ t6, t8 ^ t7)
    acc = 0
    for k in range(0, 64, 4):
        acc ^= tab[(b >> k) & 15] << k
    # Fold bits 64.. back down; twice, since the first fold can itself
    # overflow by up to 4 bits.
    for _ in range(2):
        hi = acc >> 64
        if not hi:
            break
        acc = (acc & MASK64) ^ hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4)
    return acc


if _gfkernels.HAVE_NUMBA:

    def mul_raw(a: int, b: int) -> int:
        """Field multiplication on raw 64-bit ints (compiled kernel)."""
        return int(_gfkernels.gf_mul_u64(a, b))

else:  # pragma: no cover - exercised only without numba
    mul_raw = _mul_portable


def square_raw(a: int) -> int:
    return mul_raw(a, a)


def sample_raw(rng: random.Random) -> int:
    """Uniform field element from a seeded random stream."""
    return rng.getrandbits(64)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of GF(2^64); ``bits`` is the coefficient vector."""

    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits <= MASK64:
            raise ValueError("field element out of 64-bit range")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.bits ^ other.bits)

    __sub__ = __add__  # characteristic two

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(mul_raw(self.bits, other.bits))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __repr__(self) -> str:
        return f"FieldElement(0x{self.bits:x})"


ZERO = FieldElement(0)
ONE = FieldElement(1)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def sample(rng: random.Random) -> FieldElement:
    return FieldElement(sample_raw(rng))


class Assignment:
    """One field value per edge index of a graph.

    Undirected symmetry (the same value for both orientations of an edge)
    holds by construction: values are keyed by edge index, and an orientation
    is not part of the key.
    """

    __slots__ = ("values",)

    def __init__(self, values: Sequence[int]):
        self.values = list(values)

    @classmethod
    def sample(cls, num_edges: int, rng: random.Random) -> "Assignment":
        return cls([rng.getrandbits(64) for _ in range(num_edges)])

    def __getitem__(self, edge_id: int) -> int:
        return self.values[edge_id]

    def __len__(self) -> int:
        return len(self.values)
