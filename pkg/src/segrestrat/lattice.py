"""Character and cocharacter lattices of a diagonal torus.

Both lattices are written in the coordinate basis of the diagonal torus of the
ambient matrix group: a character ``t -> prod t_i**l_i`` is the exponent vector
``(l_1, ..., l_k)`` and a cocharacter ``t -> diag(t**d_1, ..., t**d_k)`` is the
degree vector ``(d_1, ..., d_k)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from segrestrat.errors import DimensionError


def _int_tuple(values: Iterable[int], what: str) -> tuple[int, ...]:
    out = tuple(values)
    if not out:
        raise DimensionError(f"{what} must have length >= 1")
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{what} entries must be integers, got {v!r}")
    return out


@dataclass(frozen=True)
class Character:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", _int_tuple(self.exponents, "character"))

    @classmethod
    def zero(cls, rank: int) -> Character:
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, i: int, coeff: int = 1) -> Character:
        """``coeff * eps_i`` (0-based ``i``)."""
        v = [0] * rank
        v[i] = coeff
        return cls(tuple(v))

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def _check(self, other: Character) -> None:
        if self.rank != other.rank:
            raise DimensionError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: Character) -> Character:
        if not isinstance(other, Character):
            return NotImplemented
        self._check(other)
        return Character(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __neg__(self) -> Character:
        return Character(tuple(-a for a in self.exponents))

    def __sub__(self, other: Character) -> Character:
        if not isinstance(other, Character):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> Character:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return Character(tuple(k * a for a in self.exponents))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.exponents)

    def as_cocharacter(self) -> Cocharacter:
        return Cocharacter(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.exponents) + ")"


@dataclass(frozen=True)
class Cocharacter:
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", _int_tuple(self.degrees, "cocharacter"))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def as_character(self) -> Character:
        return Character(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.degrees) + ")"


def pairing(chi: Character, lam: Cocharacter) -> int:
    """Degree of ``t -> chi(lam(t))``, i.e. ``sum_i l_i * d_i``."""
    if chi.rank != lam.rank:
        raise DimensionError(
            f"cannot pair character of rank {chi.rank} with cocharacter of rank {lam.rank}"
        )
    return sum(a * b for a, b in zip(chi.exponents, lam.degrees))


def sum_characters(chars: Iterable[Character], rank: int) -> Character:
    total = Character.zero(rank)
    for c in chars:
        total = total + c
    return total
