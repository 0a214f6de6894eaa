"""Standard parabolic subgroups, their Levi blocks, and numerical types.

A parabolic is recorded by the set of simple roots it omits (1-based indices):
it is generated by the upper-triangular Borel and the negative root groups of
the simple roots that are *not* omitted.  The Borel omits every simple root,
a maximal parabolic omits exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from segrestrat.errors import DegenerateParabolicError, DimensionError, DomainError
from segrestrat.lattice import Character, sum_characters
from segrestrat.rootdata import GroupDescriptor


@dataclass(frozen=True)
class LeviBlock:
    """One factor of the Levi subgroup.

    ``kind`` is ``GL`` for a graded piece of the flag, or ``Sp``/``SO`` for the
    residual classical factor.  ``det`` is the block's determinant character,
    None when the block is semisimple and so has no characters.  An ``SO(2)``
    residual block is a torus and carries the character ``eps_n``.
    """

    kind: str
    size: int
    coords: tuple[int, ...]
    det: Character | None

    @property
    def name(self) -> str:
        return f"{self.kind}({self.size})"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "coords": [c + 1 for c in self.coords],
            "det": None if self.det is None else list(self.det.exponents),
        }


@dataclass(frozen=True)
class ParabolicType:
    group: GroupDescriptor
    omitted: frozenset[int]

    def __post_init__(self) -> None:
        omitted = frozenset(self.omitted)
        rank = self.group.root_system.rank
        bad = sorted(k for k in omitted if not 1 <= k <= rank)
        if bad:
            raise DomainError(f"simple root indices {bad} outside 1..{rank} for {self.group.name}")
        object.__setattr__(self, "omitted", omitted)

    # constructors

    @classmethod
    def borel(cls, group: GroupDescriptor) -> ParabolicType:
        return cls(group, frozenset(range(1, group.root_system.rank + 1)))

    @classmethod
    def from_block_sizes(cls, group: GroupDescriptor, sizes: Sequence[int]) -> ParabolicType:
        """Type A flag parabolic with Levi ``GL(r_1) x ... x GL(r_t)``."""
        if group.root_type != "A":
            raise DomainError(f"block-size flags apply to type A groups, not {group.name}")
        if not sizes or any(s <= 0 for s in sizes) or sum(sizes) != group.r:
            raise DomainError(f"block sizes {tuple(sizes)} must be positive and sum to {group.r}")
        cuts, acc = [], 0
        for s in sizes[:-1]:
            acc += s
            cuts.append(acc)
        return cls(group, frozenset(cuts))

    @classmethod
    def from_isotropic_flag(
        cls, group: GroupDescriptor, dims: Sequence[int], lagrangian: int = 1
    ) -> ParabolicType:
        """Stabiliser of an isotropic flag with the given subspace dimensions.

        For SO(2n) a flag reaching dimension ``n`` needs ``lagrangian`` in {1, 2}
        to pick one of the two non-conjugate families of Lagrangian subspaces.
        """
        t = group.root_type
        if t == "A":
            raise DomainError(f"isotropic flags apply to types B/C/D, not {group.name}")
        n = group.root_system.rank
        dims = list(dims)
        if not dims or dims != sorted(set(dims)) or dims[0] < 1 or dims[-1] > n:
            raise DomainError(f"isotropic dimensions {tuple(dims)} must increase within 1..{n}")
        if lagrangian not in (1, 2):
            raise DomainError("lagrangian tag must be 1 or 2")
        omitted: set[int] = set()
        for k in dims:
            if t != "D" or k <= n - 2:
                omitted.add(k)
            elif k == n - 1:
                omitted.update((n - 1, n))
            elif lagrangian == 1:
                omitted.add(n)
            else:
                omitted.add(n - 1)
        return cls(group, frozenset(omitted))

    # derived data

    @property
    def is_proper(self) -> bool:
        return bool(self.omitted)

    @property
    def is_borel(self) -> bool:
        return len(self.omitted) == self.group.root_system.rank

    @property
    def lagrangian_tag(self) -> str | None:
        if self.group.root_type != "D":
            return None
        n = self.group.root_system.rank
        if n in self.omitted and n - 1 not in self.omitted:
            return "lagrangian-1"
        if n - 1 in self.omitted and n not in self.omitted:
            return "lagrangian-2"
        return None

    @property
    def flag_signature(self) -> tuple[int, ...]:
        """Type A: block sizes.  Types B/C/D: dimensions of the isotropic flag."""
        if self.group.root_type == "A":
            return tuple(b.size for b in levi_blocks(self))
        ends, acc = [], 0
        for b in levi_blocks(self):
            if b.kind != "GL":
                break
            acc += b.size
            ends.append(acc)
        return tuple(ends)

    @property
    def label(self) -> str:
        if not self.is_proper:
            return "G"
        sig = ",".join(str(k) for k in self.flag_signature)
        if self.group.root_type == "A":
            return sig
        tag = self.lagrangian_tag
        return f"isotropic:{sig}" + (f";{tag}" if tag else "")

    def contains_root(self, root: Character) -> bool:
        """Whether the root space of ``root`` lies in the Lie algebra of P."""
        return _grading(self, root) >= 0

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "omitted_simple_roots": sorted(self.omitted),
            "flag": self.label,
            "flag_signature": list(self.flag_signature),
            "lagrangian_tag": self.lagrangian_tag,
            "levi_blocks": [b.to_json() for b in levi_blocks(self)],
        }


def _grading(p: ParabolicType, root: Character) -> int:
    # sum over omitted k of twice the coefficient on simple root k
    rs = p.group.root_system
    total = 0
    for k in p.omitted:
        w = rs.doubled_coweight(k)
        total += sum(a * b for a, b in zip(root.exponents, w))
    return total


def _require_proper(p: ParabolicType) -> None:
    if not p.is_proper:
        raise DegenerateParabolicError(
            f"parabolic of {p.group.name} omits no simple root, so P = G and G/P is a point"
        )


def _gl_block(m: int, start: int, stop: int, flip_last: bool = False) -> LeviBlock:
    det = [0] * m
    for i in range(start, stop):
        det[i] = 1
    if flip_last:
        det[stop - 1] = -1
    return LeviBlock("GL", stop - start, tuple(range(start, stop)), Character(tuple(det)))


def levi_blocks(p: ParabolicType) -> list[LeviBlock]:
    return list(_levi_blocks(p))


@lru_cache(maxsize=4096)
def _levi_blocks(p: ParabolicType) -> tuple[LeviBlock, ...]:
    g = p.group
    m = g.ambient_rank
    n = g.root_system.rank
    t = g.root_type
    if t == "A":
        cuts = sorted(p.omitted) + [m]
        blocks, start = [], 0
        for c in cuts:
            blocks.append(_gl_block(m, start, c))
            start = c
        return tuple(blocks)

    flip_last = False
    residual: LeviBlock | None = None
    if t == "D":
        S = set(p.omitted)
        has_a, has_b = (n - 1) in S, n in S
        if has_a and has_b:
            cuts = sorted(S - {n})
            residual = LeviBlock("SO", 2, (n - 1,), Character.basis(m, n - 1))
        elif has_a or has_b:
            cuts = sorted((S - {n - 1, n}) | {n})
            flip_last = has_a
        else:
            cuts = sorted(S)
    else:
        cuts = sorted(p.omitted)

    blocks, start = [], 0
    for c in cuts:
        blocks.append(_gl_block(m, start, c, flip_last and c == n))
        start = c
    if residual is not None:
        blocks.append(residual)
    elif start < n:
        rest = tuple(range(start, n))
        k = n - start
        if t == "C":
            blocks.append(LeviBlock("Sp", 2 * k, rest, None))
        elif t == "B":
            blocks.append(LeviBlock("SO", 2 * k + 1, rest, None))
        else:
            blocks.append(LeviBlock("SO", 2 * k, rest, None))
    return tuple(blocks)


def character_blocks(p: ParabolicType) -> list[LeviBlock]:
    """Levi blocks that carry a determinant character, in flag order."""
    return [b for b in levi_blocks(p) if b.det is not None]


def quotient_roots(p: ParabolicType) -> list[Character]:
    """Roots of g whose root spaces span g/p (negatives of the unipotent radical's roots)."""
    _require_proper(p)
    return list(_quotient_roots(p))


@lru_cache(maxsize=4096)
def _quotient_roots(p: ParabolicType) -> tuple[Character, ...]:
    return tuple(a for a in p.group.root_system.roots if not p.contains_root(a))


@lru_cache(maxsize=4096)
def isotropy_det_char(p: ParabolicType) -> Character:
    """Determinant of the isotropy representation of P on g/p, as a torus character."""
    return sum_characters(quotient_roots(p), p.group.ambient_rank)


@dataclass(frozen=True)
class NumericalType:
    """Degree of a P-bundle: one integer per character-carrying Levi block."""

    parabolic: ParabolicType
    block_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        degs = tuple(self.block_degrees)
        expected = len(character_blocks(self.parabolic))
        if len(degs) != expected:
            raise DimensionError(
                f"{self.parabolic.group.name} flag {self.parabolic.label} has {expected} "
                f"graded pieces, got {len(degs)} block degrees"
            )
        object.__setattr__(self, "block_degrees", degs)


def degree_pushforward(d: NumericalType) -> dict[str, int]:
    """Image of the numerical type in Hom(X*(G), Z).

    Only GL(r) has a nontrivial character lattice among the supported groups;
    it is generated by ``det`` and the image evaluates to the total degree.
    Every other family returns the empty map.
    """
    if d.parabolic.group.family != "GL":
        return {}
    return {"det": sum(d.block_degrees)}


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"expected a comma-separated list of integers, got {text!r}") from exc


def parse_parabolic(
    group: GroupDescriptor,
    flag: str | None = None,
    isotropic_flag: str | None = None,
    omit: str | None = None,
    lagrangian: int = 1,
) -> ParabolicType:
    given = [x is not None for x in (flag, isotropic_flag, omit)]
    if sum(given) != 1:
        raise DomainError("give exactly one of --flag, --isotropic-flag, --omit")
    if flag is not None:
        return ParabolicType.from_block_sizes(group, parse_int_list(flag))
    if isotropic_flag is not None:
        return ParabolicType.from_isotropic_flag(group, parse_int_list(isotropic_flag), lagrangian)
    return ParabolicType(group, frozenset(parse_int_list(omit or "")))


def dim_flag_variety(p: ParabolicType) -> int:
    return len(quotient_roots(p))


def roots_of(chars: Iterable[Character]) -> list[list[int]]:
    return [list(c.exponents) for c in chars]
